//! Simple undirected graphs on vertices `0..n`, with the structural
//! predicates and the closed-neighborhood quotient used by the solver.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A vertex index is outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Self-loops are not representable.
    SelfLoop { vertex: usize },
    /// `n == 0` is not a legal graph.
    Empty,
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::Empty => write!(f, "graph must have at least one vertex"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected simple graph. Adjacency is irreflexive and symmetric;
/// values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

/// Diameter of a graph; disconnected graphs get the infinite marker.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            Diameter::Finite(d) => *d >= k,
            Diameter::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(*d),
            Diameter::Infinite => None,
        }
    }
}

impl core::fmt::Display for Diameter {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph {
            n,
            adj: vec![Bits::new(n); n],
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.adj[u].set(v);
            g.adj[v].set(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].get(v)
    }

    pub fn neighbors(&self, u: usize) -> &Bits {
        &self.adj[u]
    }

    pub fn closed_neighborhood(&self, u: usize) -> Bits {
        let mut b = self.adj[u].clone();
        b.set(u);
        b
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn is_isolated(&self, u: usize) -> bool {
        self.adj[u].is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|row| row.count() == self.n - 1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(Bits::is_empty)
    }

    /// Vertex whose neighborhood induces a clique.
    pub fn is_simplicial(&self, u: usize) -> bool {
        let nb = self.adj[u].to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).unwrap();
        for (u, v) in self.edges() {
            g.adj[perm[u]].set(perm[v]);
            g.adj[perm[v]].set(perm[u]);
        }
        g
    }

    /// Subgraph induced by `keep` (in increasing vertex order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len().max(1)).unwrap();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].set(j);
                    g.adj[j].set(i);
                }
            }
        }
        g
    }

    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
        let n: usize = parts.iter().map(Graph::n).sum();
        let mut g = Graph::empty(n)?;
        let mut base = 0;
        for part in parts {
            for (u, v) in part.edges() {
                g.adj[base + u].set(base + v);
                g.adj[base + v].set(base + u);
            }
            base += part.n();
        }
        Ok(g)
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = alloc::collections::VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].iter() {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for u in 0..self.n {
            let dist = self.bfs_distances(u);
            for &d in &dist {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = Bits::new(self.n);
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen.get(s) {
                continue;
            }
            let dist = self.bfs_distances(s);
            let comp: Vec<usize> = (0..self.n).filter(|&v| dist[v] != usize::MAX).collect();
            for &v in &comp {
                seen.set(v);
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_forest(&self) -> bool {
        let comps = self.components();
        self.edge_count() + comps.len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn has_triangle(&self) -> bool {
        for (u, v) in self.edges() {
            if self.adj[u].intersection_count(&self.adj[v]) > 0 {
                return true;
            }
        }
        false
    }

    /// Maximum-cardinality-search order plus the chordality verdict.
    ///
    /// Returns `(order, parent_cliques_ok)` where `order` is a candidate
    /// perfect elimination ordering (reversed MCS order) and the flag says
    /// whether it really is one, i.e. whether the graph is chordal.
    fn mcs_peo(&self) -> (Vec<usize>, bool) {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut picked = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let u = (0..n)
                .filter(|&v| !picked[v])
                .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
                .unwrap();
            picked[u] = true;
            order.push(u);
            for v in self.adj[u].iter() {
                if !picked[v] {
                    weight[v] += 1;
                }
            }
        }
        order.reverse();
        // order is a PEO iff for each vertex, its later neighbors form a clique;
        // it suffices to check the earliest later neighbor against the rest.
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<usize> = self.adj[v].iter().filter(|&w| pos[w] > i).collect();
            if let Some(&first) = later.iter().min_by_key(|&&w| pos[w]) {
                for &w in &later {
                    if w != first && !self.has_edge(first, w) {
                        return (order, false);
                    }
                }
            }
        }
        (order, true)
    }

    pub fn is_chordal(&self) -> bool {
        self.mcs_peo().1
    }

    /// A perfect elimination ordering, when the graph is chordal.
    pub fn peo(&self) -> Option<Vec<usize>> {
        let (order, ok) = self.mcs_peo();
        ok.then_some(order)
    }

    /// Searches for an induced path on `k` vertices.
    pub fn has_induced_path(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        let mut path = Vec::with_capacity(k);
        for s in 0..self.n {
            path.push(s);
            if self.extend_induced_path(&mut path, k) {
                return true;
            }
            path.pop();
        }
        false
    }

    fn extend_induced_path(&self, path: &mut Vec<usize>, k: usize) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().unwrap();
        for v in self.adj[last].iter() {
            // v must be new and nonadjacent to every earlier path vertex.
            if path.contains(&v) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&u| self.has_edge(u, v)) {
                continue;
            }
            path.push(v);
            if self.extend_induced_path(path, k) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Two induced paths u-v-w and x-y-z on six distinct vertices with
    /// nonadjacent middles (the middles are therefore non-simplicial).
    pub fn has_two_disjoint_induced_p3s(&self) -> bool {
        let n = self.n;
        if n < 6 {
            return false;
        }
        for v in 0..n {
            for y in 0..n {
                if v == y || self.has_edge(v, y) {
                    continue;
                }
                let nv = self.adj[v].to_vec();
                for (i, &u) in nv.iter().enumerate() {
                    for &w in &nv[i + 1..] {
                        if self.has_edge(u, w) || u == y || w == y {
                            continue;
                        }
                        let ny: Vec<usize> = self.adj[y]
                            .iter()
                            .filter(|&t| t != u && t != w && t != v)
                            .collect();
                        for (j, &x) in ny.iter().enumerate() {
                            for &z in &ny[j + 1..] {
                                if !self.has_edge(x, z) {
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
        false
    }

    /// One-call bundle of the structural facts the filters consume.
    pub fn structural_predicates(&self) -> StructuralPredicates {
        let comps = self.components();
        StructuralPredicates {
            is_chordal: self.is_chordal(),
            has_induced_p5: self.has_induced_path(5),
            has_two_disjoint_induced_p3s: self.has_two_disjoint_induced_p3s(),
            simplicial: (0..self.n).map(|u| self.is_simplicial(u)).collect(),
            is_forest: self.is_forest(),
            component_count: comps.len(),
            components_nontrivial: comps.iter().filter(|c| c.len() >= 2).count(),
        }
    }

    /// Quotient by the same-closed-neighborhood relation.
    pub fn condensation(&self) -> (Graph, VertexPartition) {
        let neighborhoods: Vec<Bits> = (0..self.n).map(|u| self.closed_neighborhood(u)).collect();
        let mut class_of = vec![usize::MAX; self.n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for u in 0..self.n {
            if class_of[u] != usize::MAX {
                continue;
            }
            let c = blocks.len();
            class_of[u] = c;
            let mut block = vec![u];
            for v in u + 1..self.n {
                if class_of[v] == usize::MAX && neighborhoods[v] == neighborhoods[u] {
                    class_of[v] = c;
                    block.push(v);
                }
            }
            blocks.push(block);
        }
        let q = blocks.len();
        let mut quotient = Graph::empty(q).unwrap();
        for (c, block) in blocks.iter().enumerate() {
            let rep = block[0];
            for (d, other) in blocks.iter().enumerate().skip(c + 1) {
                if self.has_edge(rep, other[0]) {
                    quotient.adj[c].set(d);
                    quotient.adj[d].set(c);
                }
            }
        }
        let representatives = blocks.iter().map(|b| b[0]).collect();
        (
            quotient,
            VertexPartition {
                blocks,
                representatives,
                class_of,
            },
        )
    }

    /// Deterministic text form for diagnostics: `n=..;edges=u-v,...` (1-indexed).
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        format!("n={};edges={}", self.n, parts.join(","))
    }
}

/// Partition of `0..n` into the homogeneity classes, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub class_of: Vec<usize>,
}

impl VertexPartition {
    pub fn class_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// Record of exact structural flags; subsearches are exponential but the
/// intended scale is small (n <= 16).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub is_chordal: bool,
    pub has_induced_p5: bool,
    pub has_two_disjoint_induced_p3s: bool,
    pub simplicial: Vec<bool>,
    pub is_forest: bool,
    pub component_count: usize,
    pub components_nontrivial: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    #[test]
    fn diameter_examples() {
        assert_eq!(family::path(5).diameter(), Diameter::Finite(4));
        assert_eq!(family::complete(4).diameter(), Diameter::Finite(1));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), Diameter::Infinite);
    }

    #[test]
    fn condensation_of_complete_is_single_vertex() {
        let (q, part) = family::complete(5).condensation();
        assert_eq!(q.n(), 1);
        assert_eq!(part.blocks, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn condensation_of_p4_is_identity() {
        let p4 = family::path(4);
        let (q, part) = p4.condensation();
        assert_eq!(q.n(), 4);
        assert_eq!(part.class_sizes(), vec![1, 1, 1, 1]);
        assert_eq!(q, p4);
    }

    #[test]
    fn condensation_merges_hexagon_twin() {
        // Hexagon 1-2-3-6-5-4-1 with chord 2-5, plus a seventh vertex tied
        // to 2, 3, 6: the quotient collapses {3, 7} and nothing else.
        let g2 = hexagon_chord_twin();
        let (q, part) = g2.condensation();
        assert_eq!(q.n(), 6);
        assert_eq!(part.blocks[2], vec![2, 6]);
        let g1 = hexagon_chord();
        assert!(crate::iso::are_isomorphic(&q, &g1).is_some());
    }

    pub(crate) fn hexagon_chord() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4)]).unwrap()
    }

    pub(crate) fn hexagon_chord_twin() -> Graph {
        Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 5),
                (4, 5),
                (3, 4),
                (0, 3),
                (1, 4),
                (1, 6),
                (2, 6),
                (5, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn isolated_classes_stay_isolated() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let (q, part) = g.condensation();
        // K_3 collapses to one class; the two isolated vertices stay singletons.
        assert_eq!(q.n(), 3);
        assert_eq!(part.class_sizes(), vec![3, 1, 1]);
        assert!(q.is_isolated(1));
        assert!(q.is_isolated(2));
    }

    #[test]
    fn structural_predicates_on_c6() {
        let c6 = family::cycle(6);
        let p = c6.structural_predicates();
        assert!(!p.is_chordal);
        assert!(p.has_two_disjoint_induced_p3s);
        // Five consecutive cycle vertices induce a path.
        assert!(p.has_induced_p5);
        assert!(!family::complete_bipartite(3, 3).has_induced_path(5));
    }

    #[test]
    fn structural_predicates_on_claw() {
        let claw = family::star(3);
        let p = claw.structural_predicates();
        assert!(!p.simplicial[0]);
        assert!(p.simplicial[1] && p.simplicial[2] && p.simplicial[3]);
        assert!(p.is_forest);
    }

    #[test]
    fn structural_predicates_on_p5() {
        let p5 = family::path(5);
        let p = p5.structural_predicates();
        assert!(p.has_induced_p5);
        // Only five vertices, so no pair of vertex-disjoint induced P3s.
        assert!(!p.has_two_disjoint_induced_p3s);
        assert!(p.is_chordal);
    }

    #[test]
    fn p6_has_two_disjoint_induced_p3s() {
        assert!(family::path(6).has_two_disjoint_induced_p3s());
        assert!(!family::complete_bipartite(3, 3).has_two_disjoint_induced_p3s());
    }

    #[test]
    fn chordality() {
        assert!(family::complete(5).is_chordal());
        assert!(family::path(7).is_chordal());
        assert!(!family::cycle(4).is_chordal());
        assert!(!family::cycle(6).is_chordal());
        // Cycle plus a chord making it chordal.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(g.is_chordal());
    }
}
