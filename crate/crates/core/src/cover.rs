//! Clique families: verification of threshold edge clique covers, the
//! bridge to 0/1 matrices, and exact edge clique cover minimization for
//! small graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::graph::Graph;
use crate::matrix::{BinaryMatrix, MatrixError};

/// Largest order accepted by the exact cover search.
pub const THETA_E_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    TooLarge { n: usize },
    FamilyTooWide { members: usize, columns: usize },
    MemberOutOfRange { member: usize, vertex: usize },
    Matrix(MatrixError),
}

impl core::fmt::Display for CoverError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoverError::TooLarge { n } => {
                write!(
                    f,
                    "exact cover search limited to {THETA_E_MAX_N} vertices, got {n}"
                )
            }
            CoverError::FamilyTooWide { members, columns } => {
                write!(f, "family has {members} members but only {columns} columns")
            }
            CoverError::MemberOutOfRange { member, vertex } => {
                write!(f, "member {member} contains out-of-range vertex {vertex}")
            }
            CoverError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CoverError {}

impl From<MatrixError> for CoverError {
    fn from(e: MatrixError) -> Self {
        CoverError::Matrix(e)
    }
}

/// Ordered multifamily of vertex subsets over a ground graph. Members may
/// repeat and the empty set counts as a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamily {
    pub ground: Graph,
    pub members: Vec<Bits>,
}

impl CliqueFamily {
    pub fn new(
        ground: Graph,
        member_lists: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, CoverError> {
        let n = ground.n();
        let mut members = Vec::new();
        for (i, list) in member_lists.into_iter().enumerate() {
            for &v in &list {
                if v >= n {
                    return Err(CoverError::MemberOutOfRange {
                        member: i + 1,
                        vertex: v,
                    });
                }
            }
            members.push(Bits::from_indices(n, list));
        }
        Ok(CliqueFamily { ground, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Why a family fails to be a valid cover at threshold `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeccViolation {
    /// The intersection over these (0-indexed) member indices contains a
    /// nonadjacent pair.
    NonCliqueIntersection {
        indices: Vec<usize>,
        pair: (usize, usize),
    },
    UncoveredEdge {
        edge: (usize, usize),
    },
}

/// Checks the two cover conditions: every p-wise intersection is a clique,
/// and the p-wise intersections cover every edge.
pub fn check_pecc(family: &CliqueFamily, p: usize) -> Result<(), PeccViolation> {
    assert!(p >= 1);
    let g = &family.ground;
    let n = g.n();
    let r = family.members.len();
    let mut covered: Vec<Bits> = vec![Bits::new(n); n];
    let mut indices = Vec::with_capacity(p);
    let mut violation = None;
    visit_subsets(r, p, &mut indices, &mut |subset| {
        let mut inter = family.members[subset[0]].clone();
        for &j in &subset[1..] {
            inter.intersect_with(&family.members[j]);
        }
        let verts = inter.to_vec();
        for (a, &u) in verts.iter().enumerate() {
            for &v in &verts[a + 1..] {
                if !g.has_edge(u, v) {
                    violation = Some(PeccViolation::NonCliqueIntersection {
                        indices: subset.to_vec(),
                        pair: (u, v),
                    });
                    return false;
                }
                covered[u].set(v);
                covered[v].set(u);
            }
        }
        true
    });
    if let Some(v) = violation {
        return Err(v);
    }
    for (u, v) in g.edges() {
        if !covered[u].get(v) {
            return Err(PeccViolation::UncoveredEdge { edge: (u, v) });
        }
    }
    Ok(())
}

pub fn is_pecc(family: &CliqueFamily, p: usize) -> bool {
    check_pecc(family, p).is_ok()
}

fn visit_subsets(
    r: usize,
    p: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if current.len() == p {
        return f(current);
    }
    let start = current.last().map_or(0, |&x| x + 1);
    for next in start..r {
        current.push(next);
        if !visit_subsets(r, p, current, f) {
            current.pop();
            return false;
        }
        current.pop();
    }
    true
}

/// Incidence matrix of the family: entry `(i, j)` is 1 when vertex `i`
/// belongs to member `j`. Missing members pad out as zero columns.
pub fn family_to_matrix(
    family: &CliqueFamily,
    n_columns: usize,
) -> Result<BinaryMatrix, CoverError> {
    let r = family.members.len();
    if r > n_columns {
        return Err(CoverError::FamilyTooWide {
            members: r,
            columns: n_columns,
        });
    }
    let n = family.ground.n();
    let mut rows = vec![0u128; n];
    for (j, member) in family.members.iter().enumerate() {
        for v in member.iter() {
            rows[v] |= 1 << j;
        }
    }
    Ok(BinaryMatrix::from_rows(n_columns, rows)?)
}

/// Reads a family back out of an incidence matrix over ground graph `g`:
/// member `j` collects the vertices whose row has a 1 in column `j`.
pub fn matrix_to_family(m: &BinaryMatrix, g: &Graph) -> CliqueFamily {
    debug_assert_eq!(m.rows(), g.n());
    let members = (0..m.cols())
        .map(|j| Bits::from_indices(g.n(), (0..m.rows()).filter(|&i| m.get(i, j))))
        .collect();
    CliqueFamily {
        ground: g.clone(),
        members,
    }
}

/// All maximal cliques (Bron-Kerbosch with pivoting).
pub fn maximal_cliques(g: &Graph) -> Vec<Bits> {
    let n = g.n();
    let mut out = Vec::new();
    let mut r = Bits::new(n);
    let p = Bits::from_indices(n, 0..n);
    let x = Bits::new(n);
    bron_kerbosch(g, &mut r, p, x, &mut out);
    out
}

fn bron_kerbosch(g: &Graph, r: &mut Bits, p: Bits, x: Bits, out: &mut Vec<Bits>) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // Pivot on the vertex dominating the most of p.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(g.neighbors(u)))
        .unwrap();
    let candidates: Vec<usize> = p.iter().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let mut p_next = p.clone();
        p_next.intersect_with(g.neighbors(v));
        let mut x_next = x.clone();
        x_next.intersect_with(g.neighbors(v));
        r.set(v);
        bron_kerbosch(g, r, p_next, x_next, out);
        r.unset(v);
        p.unset(v);
        x.set(v);
    }
}

/// Minimum number of cliques covering all edges, by branch and bound over
/// maximal cliques (any cover member can be grown to a maximal clique).
pub fn theta_e(g: &Graph) -> Result<usize, CoverError> {
    theta_e_with_cover(g).map(|(k, _)| k)
}

/// Exact minimum cover; also returns one optimal cover as vertex sets.
pub fn theta_e_with_cover(g: &Graph) -> Result<(usize, Vec<Bits>), CoverError> {
    if g.n() > THETA_E_MAX_N {
        return Err(CoverError::TooLarge { n: g.n() });
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Ok((0, Vec::new()));
    }
    if !g.has_triangle() {
        // Every clique spans at most one edge, so the edges themselves form
        // the unique-size minimum cover.
        let cover = edges
            .iter()
            .map(|&(u, v)| Bits::from_indices(g.n(), [u, v]))
            .collect();
        return Ok((edges.len(), cover));
    }
    let cliques = maximal_cliques(g);
    let edge_index = |u: usize, v: usize| -> usize {
        edges
            .iter()
            .position(|&e| e == (u.min(v), u.max(v)))
            .unwrap()
    };
    // clique_edges[c] = bit set of edge indices covered by clique c
    let clique_edges: Vec<Bits> = cliques
        .iter()
        .map(|c| {
            let verts = c.to_vec();
            let mut b = Bits::new(edges.len());
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    b.set(edge_index(u, v));
                }
            }
            b
        })
        .collect();
    // Greedy upper bound.
    let mut best_cover = greedy_cover(edges.len(), &clique_edges);
    let mut best = best_cover.len();
    let mut chosen = Vec::new();
    let covered = Bits::new(edges.len());
    branch_cover(
        edges.len(),
        &clique_edges,
        covered,
        &mut chosen,
        &mut best,
        &mut best_cover,
    );
    let cover = best_cover.iter().map(|&c| cliques[c].clone()).collect();
    Ok((best, cover))
}

fn greedy_cover(edge_count: usize, clique_edges: &[Bits]) -> Vec<usize> {
    let mut covered = Bits::new(edge_count);
    let mut picked = Vec::new();
    while covered.count() < edge_count {
        let (best_c, _) = clique_edges
            .iter()
            .enumerate()
            .map(|(c, ce)| {
                let mut fresh = ce.clone();
                fresh.difference_with(&covered);
                (c, fresh.count())
            })
            .max_by_key(|&(c, fresh)| (fresh, core::cmp::Reverse(c)))
            .unwrap();
        covered.union_with(&clique_edges[best_c]);
        picked.push(best_c);
    }
    picked
}

fn branch_cover(
    edge_count: usize,
    clique_edges: &[Bits],
    covered: Bits,
    chosen: &mut Vec<usize>,
    best: &mut usize,
    best_cover: &mut Vec<usize>,
) {
    if covered.count() == edge_count {
        if chosen.len() < *best {
            *best = chosen.len();
            *best_cover = chosen.clone();
        }
        return;
    }
    if chosen.len() + 1 >= *best {
        return;
    }
    // Branch on the uncovered edge with the fewest covering cliques.
    let target = (0..edge_count)
        .filter(|&e| !covered.get(e))
        .min_by_key(|&e| clique_edges.iter().filter(|ce| ce.get(e)).count())
        .unwrap();
    for (c, ce) in clique_edges.iter().enumerate() {
        if !ce.get(target) {
            continue;
        }
        let mut next = covered.clone();
        next.union_with(ce);
        chosen.push(c);
        branch_cover(edge_count, clique_edges, next, chosen, best, best_cover);
        chosen.pop();
    }
}

/// Edge clique cover of a chordal graph with at most `n - #components`
/// members: for each vertex in a perfect elimination ordering, the clique
/// of it and its later neighbors (skipping vertices with none).
pub fn chordal_ecc(g: &Graph) -> Option<Vec<Bits>> {
    let order = g.peo()?;
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut cover = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > i).collect();
        if later.is_empty() {
            continue;
        }
        let mut clique = Bits::from_indices(n, later);
        clique.set(v);
        cover.push(clique);
    }
    Some(cover)
}

/// Exact cover value when feasible at this order: triangle-free graphs are
/// immediate, everything else goes through the bounded exact search.
pub fn theta_e_if_feasible(g: &Graph) -> Option<usize> {
    if !g.has_triangle() {
        return Some(g.edge_count());
    }
    theta_e(g).ok()
}

/// Some edge clique cover usable for certificate construction, preferring
/// the exact minimum when the order permits.
pub fn usable_ecc(g: &Graph) -> Option<Vec<Bits>> {
    if g.is_edgeless() {
        return Some(Vec::new());
    }
    if !g.has_triangle() {
        return Some(
            g.edges()
                .iter()
                .map(|&(u, v)| Bits::from_indices(g.n(), [u, v]))
                .collect(),
        );
    }
    if let Ok((_, cover)) = theta_e_with_cover(g) {
        return Some(cover);
    }
    chordal_ecc(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn cyclic_family(n: usize, p: usize) -> CliqueFamily {
        // S_i = {v_i, ..., v_{i+p}} mod n.
        let ground = family::cycle(n);
        let members = (0..n).map(|i| (0..=p).map(|t| (i + t) % n).collect::<Vec<_>>());
        CliqueFamily::new(ground, members).unwrap()
    }

    #[test]
    fn cycle_window_family_is_a_cover() {
        assert!(is_pecc(&cyclic_family(6, 2), 2));
    }

    #[test]
    fn single_clique_covers_triangle() {
        let f = CliqueFamily::new(family::complete(3), [vec![0, 1, 2]]).unwrap();
        assert!(is_pecc(&f, 1));
    }

    #[test]
    fn non_clique_intersection_is_caught() {
        let f = CliqueFamily::new(family::path(3), [vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        match check_pecc(&f, 2) {
            Err(PeccViolation::NonCliqueIntersection { indices, pair }) => {
                assert_eq!(indices, vec![0, 1]);
                assert_eq!(pair, (0, 2));
            }
            other => panic!("expected non-clique witness, got {other:?}"),
        }
    }

    #[test]
    fn uncovered_edge_is_caught() {
        let f = CliqueFamily::new(family::path(3), [vec![0, 1]]).unwrap();
        assert_eq!(
            check_pecc(&f, 1),
            Err(PeccViolation::UncoveredEdge { edge: (1, 2) })
        );
    }

    #[test]
    fn family_matrix_round_trip() {
        let g = family::path(4);
        let f = CliqueFamily::new(g.clone(), [vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let m = family_to_matrix(&f, 4).unwrap();
        assert_eq!(m.row_string(0), "1000");
        assert_eq!(m.row_string(1), "1100");
        let back = matrix_to_family(&m, &g);
        // Round-trip recovers the family up to the trailing padded member.
        assert_eq!(back.members[..3], f.members[..]);
        assert!(back.members[3].is_empty());
    }

    #[test]
    fn singleton_member_incidence() {
        let g = family::complete(2);
        let f = CliqueFamily::new(g, [vec![0, 1]]).unwrap();
        let m = family_to_matrix(&f, 2).unwrap();
        assert_eq!(m.row_string(0), "10");
        assert_eq!(m.row_string(1), "10");
    }

    #[test]
    fn family_wider_than_columns_is_rejected() {
        let g = family::complete(2);
        let f = CliqueFamily::new(g, [vec![0], vec![1], vec![0, 1]]).unwrap();
        assert!(matches!(
            family_to_matrix(&f, 2),
            Err(CoverError::FamilyTooWide {
                members: 3,
                columns: 2
            })
        ));
    }

    #[test]
    fn theta_e_values() {
        assert_eq!(theta_e(&family::complete_bipartite(3, 3)).unwrap(), 9);
        assert_eq!(theta_e(&family::cycle(4)).unwrap(), 4);
        assert_eq!(theta_e(&family::complete(4)).unwrap(), 1);
        assert_eq!(theta_e(&family::empty(3)).unwrap(), 0);
        let g1 =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4)]).unwrap();
        assert_eq!(theta_e(&g1).unwrap(), 7);
    }

    #[test]
    fn theta_e_cover_is_valid() {
        for g in [
            family::complete(5),
            family::cycle(5),
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap(),
        ] {
            let (k, cover) = theta_e_with_cover(&g).unwrap();
            assert_eq!(cover.len(), k);
            let f = CliqueFamily {
                ground: g.clone(),
                members: cover,
            };
            assert!(is_pecc(&f, 1));
        }
    }

    #[test]
    fn theta_e_guard() {
        assert!(matches!(
            theta_e(&family::complete(11)),
            Err(CoverError::TooLarge { n: 11 })
        ));
    }

    #[test]
    fn chordal_cover_size_bound() {
        // Cover size is at most n minus the number of components.
        for g in [
            family::path(7),
            family::complete(5),
            Graph::disjoint_union(&[family::path(3), family::complete(3)]).unwrap(),
        ] {
            let cover = chordal_ecc(&g).unwrap();
            let f = CliqueFamily {
                ground: g.clone(),
                members: cover.clone(),
            };
            assert!(is_pecc(&f, 1));
            assert!(cover.len() + g.components().len() <= g.n());
        }
        assert!(chordal_ecc(&family::cycle(5)).is_none());
    }

    #[test]
    fn maximal_cliques_of_k33_are_edges() {
        let cliques = maximal_cliques(&family::complete_bipartite(3, 3));
        assert_eq!(cliques.len(), 9);
        assert!(cliques.iter().all(|c| c.count() == 2));
    }
}
