//! The subset-union host graph: vertices are the subsets of `[n]` of size
//! at most `k`, and `S ~ T` when `|S ∪ T| <= k`.
//!
//! Subsets larger than `k` are omitted: any such subset would be isolated
//! (`|S ∪ T| >= |S| > k`), and the host is only ever probed with quotients
//! of connected graphs on two or more classes, all of whose vertices need a
//! neighbor. Dropping them shrinks the host from `2^n` vertices to
//! `sum_{j<=k} C(n,j)` without changing any embedding answer.

use alloc::vec::Vec;

use crate::graph::Graph;

pub const PSI_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsiError {
    NOutOfRange { n: usize },
    KOutOfRange { k: usize, n: usize },
}

impl core::fmt::Display for PsiError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PsiError::NOutOfRange { n } => {
                write!(f, "subset universe size {n} outside 1..={PSI_MAX_N}")
            }
            PsiError::KOutOfRange { k, n } => write!(f, "union bound {k} exceeds {n}"),
        }
    }
}

impl core::error::Error for PsiError {}

/// Number of vertices `psi_graph(n, k)` would have.
pub fn psi_host_order(n: usize, k: usize) -> usize {
    let mut total = 1usize; // C(n, 0)
    let mut binom = 1usize;
    for j in 1..=k.min(n) {
        binom = binom * (n - j + 1) / j;
        total += binom;
    }
    total
}

/// Builds the host graph together with the subset label of each vertex.
pub fn psi_graph_labeled(n: usize, k: usize) -> Result<(Graph, Vec<u16>), PsiError> {
    if n == 0 || n > PSI_MAX_N {
        return Err(PsiError::NOutOfRange { n });
    }
    if k > n {
        return Err(PsiError::KOutOfRange { k, n });
    }
    // Vertices ordered by subset size, then by numeric value of the mask.
    let mut labels: Vec<u16> = (0u16..(1u16 << n))
        .filter(|s| (s.count_ones() as usize) <= k)
        .collect();
    labels.sort_by_key(|s| (s.count_ones(), *s));
    let order = labels.len();
    let mut g = Graph::empty(order).expect("order >= 1");
    let mut edges = Vec::new();
    for i in 0..order {
        for j in i + 1..order {
            if ((labels[i] | labels[j]).count_ones() as usize) <= k {
                edges.push((i, j));
            }
        }
    }
    g = Graph::from_edges(g.n(), edges).expect("in range");
    Ok((g, labels))
}

pub fn psi_graph(n: usize, k: usize) -> Result<Graph, PsiError> {
    psi_graph_labeled(n, k).map(|(g, _)| g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::iso::are_isomorphic;
    use alloc::vec;

    #[test]
    fn psi_2_1_is_a_two_leaf_star() {
        // Oracle: enumerate the subsets by hand. Vertices {}, {1}, {2};
        // the empty set pairs with each singleton, singletons do not pair.
        let (g, labels) = psi_graph_labeled(2, 1).unwrap();
        assert_eq!(labels, vec![0b00, 0b01, 0b10]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        assert!(are_isomorphic(&g, &family::star(2)).is_some());
    }

    #[test]
    fn psi_with_zero_bound_is_a_point() {
        let g = psi_graph(5, 0).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn psi_3_3_is_complete_on_all_subsets() {
        let g = psi_graph(3, 3).unwrap();
        assert_eq!(g.n(), 8);
        assert!(g.is_complete());
    }

    #[test]
    fn host_order_matches_materialization() {
        for n in 1..=6 {
            for k in 0..=n {
                let g = psi_graph(n, k).unwrap();
                assert_eq!(g.n(), psi_host_order(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(psi_graph(13, 2).is_err());
        assert!(psi_graph(0, 0).is_err());
        assert!(psi_graph(4, 5).is_err());
    }

    #[test]
    fn path_embeds_into_small_host_but_triangle_does_not() {
        let host = psi_graph(2, 1).unwrap();
        let map = crate::iso::embeds_as_induced_subgraph(&family::path(3), &host);
        // The path's middle vertex lands on the empty set (vertex 0).
        assert_eq!(map.as_deref().map(|m| m[1]), Some(0));
        assert!(crate::iso::embeds_as_induced_subgraph(&family::complete(3), &host).is_none());
    }
}
