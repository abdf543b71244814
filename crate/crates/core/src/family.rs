//! Graph family generators and the family recognizer that drives the
//! closed-form realizer shortcuts.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

pub fn empty(n: usize) -> Graph {
    Graph::empty(n).expect("n >= 1")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("n >= 1")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).expect("n >= 1")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

/// Star with `leaves` leaves; vertex 0 is the center.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("n >= 1")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, edges).expect("nonempty")
}

/// Disjoint union of complete graphs with the given orders.
pub fn complete_union(sizes: &[usize]) -> Graph {
    let parts: Vec<Graph> = sizes.iter().map(|&s| complete(s)).collect();
    Graph::disjoint_union(&parts).expect("nonempty")
}

/// `(K_center ∨ (K_parts[0] ∪ ... ∪ K_parts[k-1])) ∪ I_isolated`.
///
/// Vertices: center block first, then each part, then the isolated tail.
pub fn join_form(center: usize, parts: &[usize], isolated: usize) -> Graph {
    let n = center + parts.iter().sum::<usize>() + isolated;
    let mut edges = Vec::new();
    for u in 0..center {
        for v in u + 1..center {
            edges.push((u, v));
        }
    }
    let mut base = center;
    let joined_end = n - isolated;
    for &size in parts {
        for u in base..base + size {
            for v in u + 1..base + size {
                edges.push((u, v));
            }
        }
        base += size;
    }
    for u in 0..center {
        for v in center..joined_end {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("nonempty")
}

/// Caterpillar from a spine of `spine_n` vertices plus pendants.
/// `attach[i]` is the 1-indexed spine position of pendant `i`; positions
/// must be interior (2..=spine_n-1). Spine vertices come first.
pub fn caterpillar(spine_n: usize, attach: &[usize]) -> Result<Graph, CaterpillarParamError> {
    if spine_n < 2 {
        return Err(CaterpillarParamError::SpineTooShort { spine_n });
    }
    let mut edges: Vec<(usize, usize)> = (0..spine_n - 1).map(|i| (i, i + 1)).collect();
    for (i, &pos) in attach.iter().enumerate() {
        if pos < 2 || pos > spine_n - 1 {
            return Err(CaterpillarParamError::AttachmentNotInterior { position: pos });
        }
        edges.push((pos - 1, spine_n + i));
    }
    Ok(Graph::from_edges(spine_n + attach.len(), edges).expect("nonempty"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaterpillarParamError {
    SpineTooShort { spine_n: usize },
    AttachmentNotInterior { position: usize },
}

impl core::fmt::Display for CaterpillarParamError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CaterpillarParamError::SpineTooShort { spine_n } => {
                write!(f, "spine needs at least 2 vertices, got {spine_n}")
            }
            CaterpillarParamError::AttachmentNotInterior { position } => {
                write!(
                    f,
                    "pendants must attach to interior spine vertices, got position {position}"
                )
            }
        }
    }
}

impl core::error::Error for CaterpillarParamError {}

/// Perfect k-ary tree of the given height, BFS-numbered from the root.
pub fn kary_tree(k: usize, height: usize) -> Graph {
    assert!(k >= 1);
    let mut n = 1usize;
    let mut level = 1usize;
    for _ in 0..height {
        level *= k;
        n += level;
    }
    let mut edges = Vec::new();
    // Children of vertex v are k*v+1 ..= k*v+k while in range.
    for v in 0..n {
        for c in 1..=k {
            let child = k * v + c;
            if child < n {
                edges.push((v, child));
            }
        }
    }
    Graph::from_edges(n, edges).expect("nonempty")
}

/// Spine (a longest path) and pendant attachments of a caterpillar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarShape {
    /// Vertices of a longest path, in path order.
    pub spine: Vec<usize>,
    /// `(pendant vertex, index into spine)` for every non-spine vertex.
    pub pendants: Vec<(usize, usize)>,
}

impl CaterpillarShape {
    /// Spine length in edges; equals the tree diameter.
    pub fn spine_len(&self) -> usize {
        self.spine.len() - 1
    }

    /// Pendant counts per 1-indexed spine position.
    pub fn attachment_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &(_, idx) in &self.pendants {
            *counts.entry(idx + 1).or_insert(0) += 1;
        }
        counts
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `K_clique ∪ I_isolated`; covers complete, edgeless, and K_1.
    CompletePlusIsolated {
        clique: usize,
        isolated: usize,
    },
    Path,
    Cycle,
    Star {
        leaves: usize,
    },
    Caterpillar(CaterpillarShape),
    /// `(K_center ∨ (K_parts ∪ ...)) ∪ I_isolated` with at least two parts
    /// or a nonempty center; parts are sorted descending.
    JoinForm {
        center: usize,
        parts: Vec<usize>,
        isolated: usize,
    },
    Forest,
    Chordal,
    Other,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::CompletePlusIsolated { .. } => "complete-plus-isolated",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star { .. } => "star",
            FamilyKind::Caterpillar(_) => "caterpillar",
            FamilyKind::JoinForm { .. } => "join-form",
            FamilyKind::Forest => "forest",
            FamilyKind::Chordal => "chordal",
            FamilyKind::Other => "other",
        }
    }
}

/// Most specific family of `g`; total and deterministic.
pub fn recognize(g: &Graph) -> FamilyKind {
    let n = g.n();
    let isolated: Vec<usize> = (0..n).filter(|&u| g.is_isolated(u)).collect();
    let core: Vec<usize> = (0..n).filter(|&u| !g.is_isolated(u)).collect();

    // K_m plus isolated vertices (m = 0 or 1 when the graph is edgeless).
    let core_complete = core
        .iter()
        .all(|&u| core.iter().all(|&v| u == v || g.has_edge(u, v)));
    if core_complete {
        return FamilyKind::CompletePlusIsolated {
            clique: core.len(),
            isolated: isolated.len(),
        };
    }

    if g.is_connected() {
        let degrees: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
        let max_deg = degrees.iter().copied().max().unwrap_or(0);
        let ones = degrees.iter().filter(|&&d| d == 1).count();
        if max_deg <= 2 && ones == 2 && g.edge_count() == n - 1 {
            return FamilyKind::Path;
        }
        if max_deg == 2 && ones == 0 && g.edge_count() == n {
            return FamilyKind::Cycle;
        }
        if ones == n - 1 && max_deg == n - 1 && n >= 3 {
            return FamilyKind::Star { leaves: n - 1 };
        }
        if g.is_tree() && n >= 3 {
            if let Some(shape) = caterpillar_shape(g) {
                return FamilyKind::Caterpillar(shape);
            }
        }
    }

    if let Some((center, parts)) = join_form_core(g, &core) {
        return FamilyKind::JoinForm {
            center,
            parts,
            isolated: isolated.len(),
        };
    }

    if g.is_forest() {
        return FamilyKind::Forest;
    }
    if g.is_chordal() {
        return FamilyKind::Chordal;
    }
    FamilyKind::Other
}

/// The spine of `g` when `g` is a caterpillar (a tree whose non-spine
/// vertices are all pendants on interior spine vertices).
pub fn caterpillar_shape(g: &Graph) -> Option<CaterpillarShape> {
    if !g.is_tree() || g.n() < 3 {
        return None;
    }
    // Double BFS picks a diametral path deterministically.
    let far = |src: usize| -> usize {
        let dist = g.bfs_distances(src);
        (0..g.n())
            .max_by_key(|&v| (dist[v], core::cmp::Reverse(v)))
            .unwrap()
    };
    let a = far(0);
    let b = far(a);
    let dist = g.bfs_distances(a);
    let mut spine = vec![b];
    let mut cur = b;
    while cur != a {
        let prev = g
            .neighbors(cur)
            .iter()
            .find(|&w| dist[w] + 1 == dist[cur])
            .unwrap();
        spine.push(prev);
        cur = prev;
    }
    spine.reverse();
    let mut on_spine = vec![false; g.n()];
    let mut spine_index = vec![0usize; g.n()];
    for (i, &v) in spine.iter().enumerate() {
        on_spine[v] = true;
        spine_index[v] = i;
    }
    let mut pendants = Vec::new();
    for v in 0..g.n() {
        if on_spine[v] {
            continue;
        }
        if g.degree(v) != 1 {
            return None;
        }
        let anchor = g.neighbors(v).iter().next().unwrap();
        if !on_spine[anchor] {
            return None;
        }
        let idx = spine_index[anchor];
        if idx == 0 || idx == spine.len() - 1 {
            return None;
        }
        pendants.push((v, idx));
    }
    // Canonical orientation: the per-position pendant counts read off the
    // spine must compare lexicographically largest.
    let len = spine.len();
    let mut forward = vec![0usize; len];
    for &(_, idx) in &pendants {
        forward[idx] += 1;
    }
    let mut backward = forward.clone();
    backward.reverse();
    if backward > forward {
        spine.reverse();
        for pendant in pendants.iter_mut() {
            pendant.1 = len - 1 - pendant.1;
        }
    }
    Some(CaterpillarShape { spine, pendants })
}

/// Detects `K_center ∨ (union of cliques)` on the non-isolated vertices.
fn join_form_core(g: &Graph, core: &[usize]) -> Option<(usize, Vec<usize>)> {
    if core.is_empty() {
        return None;
    }
    let universal: Vec<usize> = core
        .iter()
        .copied()
        .filter(|&u| core.iter().all(|&v| v == u || g.has_edge(u, v)))
        .collect();
    let rest: Vec<usize> = core
        .iter()
        .copied()
        .filter(|u| !universal.contains(u))
        .collect();
    let sub = g.induced(&rest);
    let comps = sub.components();
    for comp in &comps {
        for (i, &u) in comp.iter().enumerate() {
            for &v in &comp[i + 1..] {
                if !sub.has_edge(u, v) {
                    return None;
                }
            }
        }
    }
    let mut parts: Vec<usize> = comps.iter().map(Vec::len).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some((universal.len(), parts))
}

/// All caterpillars on `n` vertices, one per isomorphism class.
///
/// A caterpillar is keyed by its inner path (the tree minus its leaves)
/// and the pendant counts along it, up to reversal.
pub fn enumerate_caterpillars(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for inner in 1..=n {
        let pendant_total = n - inner;
        let mut counts = vec![0usize; inner];
        distribute(&mut counts, 0, pendant_total, inner, &mut out);
    }
    out
}

fn distribute(
    counts: &mut Vec<usize>,
    idx: usize,
    left: usize,
    inner: usize,
    out: &mut Vec<Graph>,
) {
    if idx == inner {
        if left != 0 {
            return;
        }
        // Inner endpoints must carry a pendant, otherwise they would have
        // been leaves of the tree and not inner vertices.
        if inner >= 2 && (counts[0] == 0 || counts[inner - 1] == 0) {
            return;
        }
        if inner == 1 && counts[0] < 2 {
            return;
        }
        let mut reversed = counts.clone();
        reversed.reverse();
        if *counts > reversed {
            return; // keep one representative per reversal orbit
        }
        out.push(build_from_inner(counts));
        return;
    }
    for c in 0..=left {
        counts[idx] = c;
        distribute(counts, idx + 1, left - c, inner, out);
    }
    counts[idx] = 0;
}

fn build_from_inner(counts: &[usize]) -> Graph {
    let inner = counts.len();
    let n = inner + counts.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (0..inner - 1).map(|i| (i, i + 1)).collect();
    let mut next = inner;
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(n, edges).expect("nonempty")
}

/// Diameter of a tree, for dispatching the caterpillar closed forms.
pub fn tree_diameter(g: &Graph) -> Option<usize> {
    if !g.is_tree() {
        return None;
    }
    g.diameter().finite()
}
