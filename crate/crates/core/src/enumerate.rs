//! Exhaustive enumeration of small graphs up to isomorphism, used by the
//! verification suites. Canonical form is the minimum edge code over all
//! vertex permutations; fine through n = 7.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Edge code: bit `i*(i-1)/2 + j` (j < i) set when `i ~ j`.
fn edge_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 1..n {
        for j in 0..i {
            if g.has_edge(perm[i], perm[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Minimum edge code over all vertex relabelings.
pub fn canonical_code(g: &Graph) -> u64 {
    permutations(g.n())
        .iter()
        .map(|perm| edge_code(g, perm))
        .min()
        .unwrap_or(0)
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 1..n {
        for j in 0..i {
            if code >> bit & 1 == 1 {
                edges.push((j, i));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("n >= 1")
}

/// All graphs on exactly `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=7).contains(&n),
        "exhaustive enumeration supported up to n = 7"
    );
    let pairs = n * (n - 1) / 2;
    let perms = permutations(n);
    let mut seen = vec![false; 1usize << pairs];
    let mut out = Vec::new();
    for code in 0..(1u64 << pairs) {
        if seen[code as usize] {
            continue;
        }
        let g = graph_from_code(n, code);
        // Mark the whole isomorphism class as visited.
        for perm in &perms {
            seen[edge_code(&g, perm) as usize] = true;
        }
        out.push(g);
    }
    out
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    #[test]
    fn graph_counts_match_the_literature() {
        assert_eq!(all_graphs(1).len(), 1);
        assert_eq!(all_graphs(2).len(), 2);
        assert_eq!(all_graphs(3).len(), 4);
        assert_eq!(all_graphs(4).len(), 11);
        assert_eq!(all_graphs(5).len(), 34);
    }

    #[test]
    fn connected_counts_match_the_literature() {
        assert_eq!(connected_graphs(3).len(), 2);
        assert_eq!(connected_graphs(4).len(), 6);
        assert_eq!(connected_graphs(5).len(), 21);
    }

    #[test]
    fn canonical_code_is_permutation_invariant() {
        let g = family::path(5);
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_ne!(canonical_code(&g), canonical_code(&family::star(4)));
    }
}
