//! Exact isomorphism and induced-subgraph embedding for small graphs.
//!
//! Both searches are deterministic: vertices are ordered by refinement
//! color, then degree, then lowest index, so the same inputs always yield
//! the same mapping.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Stable vertex colors from iterated neighborhood refinement. Color ids
/// are ranks in sorted signature order, so isomorphic graphs always get
/// identical color multisets and matching ids.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = {
        let mut degrees: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
        let mut distinct = degrees.clone();
        distinct.sort_unstable();
        distinct.dedup();
        degrees
            .iter_mut()
            .for_each(|d| *d = distinct.binary_search(d).unwrap());
        degrees
    };
    let mut color_count = colors.iter().max().map_or(1, |&m| m + 1);
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for u in 0..n {
            let mut sig: Vec<usize> = g.neighbors(u).iter().map(|v| colors[v]).collect();
            sig.sort_unstable();
            signatures.push((colors[u], sig));
        }
        let mut palette: BTreeMap<&(usize, Vec<usize>), usize> =
            signatures.iter().map(|s| (s, 0)).collect();
        for (rank, slot) in palette.values_mut().enumerate() {
            *slot = rank;
        }
        let new_count = palette.len();
        let new_colors: Vec<usize> = signatures.iter().map(|s| palette[s]).collect();
        if new_count == color_count {
            return new_colors;
        }
        colors = new_colors;
        color_count = new_count;
    }
}

/// Adjacency-preserving bijection from `g` to `h`, if one exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.n();
    let gc = refine_colors(g);
    let hc = refine_colors(h);
    let mut g_hist: Vec<usize> = gc.clone();
    let mut h_hist: Vec<usize> = hc.clone();
    g_hist.sort_unstable();
    h_hist.sort_unstable();
    if g_hist != h_hist {
        return None;
    }

    // Most-constrained first: small color class, then high degree.
    let mut class_size = vec![0usize; n];
    for &c in &gc {
        class_size[c] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (class_size[gc[u]], core::cmp::Reverse(g.degree(u)), u));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let ctx = MapContext {
        g,
        h,
        gc: &gc,
        hc: &hc,
        order: &order,
    };
    if map_next(&ctx, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

struct MapContext<'a> {
    g: &'a Graph,
    h: &'a Graph,
    gc: &'a [usize],
    hc: &'a [usize],
    order: &'a [usize],
}

fn map_next(
    ctx: &MapContext<'_>,
    idx: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if idx == ctx.order.len() {
        return true;
    }
    let u = ctx.order[idx];
    for t in 0..ctx.h.n() {
        if used[t] || ctx.hc[t] != ctx.gc[u] {
            continue;
        }
        let consistent = ctx.order[..idx]
            .iter()
            .all(|&w| ctx.g.has_edge(u, w) == ctx.h.has_edge(t, mapping[w]));
        if !consistent {
            continue;
        }
        mapping[u] = t;
        used[t] = true;
        if map_next(ctx, idx + 1, mapping, used) {
            return true;
        }
        used[t] = false;
        mapping[u] = usize::MAX;
    }
    false
}

/// Checks that `mapping` preserves adjacency and non-adjacency both ways.
pub fn verify_isomorphism(g: &Graph, h: &Graph, mapping: &[usize]) -> bool {
    if g.n() != h.n() || mapping.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &t in mapping {
        if t >= g.n() || seen[t] {
            return false;
        }
        seen[t] = true;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v]) {
                return false;
            }
        }
    }
    true
}

/// Injective map embedding `pattern` into `host` as an induced subgraph:
/// adjacency and non-adjacency are both preserved.
pub fn embeds_as_induced_subgraph(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    let pn = pattern.n();
    // Connectivity-first ordering: prefer vertices with many ordered
    // neighbors, then high degree, then lowest index.
    let mut order: Vec<usize> = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    for _ in 0..pn {
        let u = (0..pn)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                let anchored = pattern.neighbors(u).iter().filter(|&v| placed[v]).count();
                (anchored, pattern.degree(u), core::cmp::Reverse(u))
            })
            .unwrap();
        placed[u] = true;
        order.push(u);
    }
    let mut mapping = vec![usize::MAX; pn];
    let mut used = vec![false; host.n()];
    if embed_next(pattern, host, &order, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

fn embed_next(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    idx: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let u = order[idx];
    let du = pattern.degree(u);
    'candidates: for t in 0..host.n() {
        if used[t] || host.degree(t) < du {
            continue;
        }
        for &w in &order[..idx] {
            if pattern.has_edge(u, w) != host.has_edge(t, mapping[w]) {
                continue 'candidates;
            }
        }
        mapping[u] = t;
        used[t] = true;
        if embed_next(pattern, host, order, idx + 1, mapping, used) {
            return true;
        }
        used[t] = false;
        mapping[u] = usize::MAX;
    }
    false
}
