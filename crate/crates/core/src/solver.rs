//! The decision procedure: necessary-condition and closed-form filters
//! first, then an exhaustive, symmetry-reduced search over candidate
//! square matrices for anything the filters leave open.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::cert::{self, Certificate};
use crate::cover;
use crate::family::{self, FamilyKind};
use crate::graph::{Diameter, Graph};
use crate::iso;
use crate::matrix::BinaryMatrix;
use crate::psi;

/// Default node allowance; desk-scale instances exhaust well below it.
pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

/// Hosts larger than this are not materialized by the embedding filter.
/// Kept deliberately small so that mid-size instances are settled by the
/// matrix search rather than by embedding.
pub const PSI_FILTER_HOST_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    /// Advisory wall-clock limit in milliseconds; enforced by drivers able
    /// to measure time, via [`AbortCheck`].
    pub time_limit_ms: Option<u64>,
    /// Parallelism degree for drivers that split realizer work per
    /// threshold; the search itself is sequential and deterministic.
    pub jobs: usize,
    pub deterministic: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_MAX_NODES,
            time_limit_ms: Some(60_000),
            jobs: 1,
            deterministic: true,
        }
    }
}

/// Externally supplied interrupt, polled periodically during search.
pub trait AbortCheck {
    fn should_abort(&self) -> bool;
}

/// Never aborts; node budget still applies.
pub struct NoAbort;

impl AbortCheck for NoAbort {
    fn should_abort(&self) -> bool {
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    pub use_filters: bool,
    pub psi_host_limit: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            use_filters: true,
            psi_host_limit: PSI_FILTER_HOST_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl core::fmt::Display for Status {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Status::Yes => write!(f, "YES"),
            Status::No => write!(f, "NO"),
            Status::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

/// Which rule settled a threshold without search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterRule {
    CompletePlusIsolated,
    NotCompletePlusIsolatedAtN,
    JoinFormAtNMinus1,
    NotJoinFormAtNMinus1,
    TwoDisjointInducedP3s,
    DiameterAtLeastFour,
    InducedP5,
    ThetaECover { theta: usize },
    ThetaEExceedsOrder { theta: usize },
    ChordalComponents { omega: usize },
    FamilyCycle,
    FamilyPath,
    FamilyStar,
    FamilyCaterpillar { diameter: usize },
    FamilyJoinForm,
    TreeDiameter { diameter: usize },
    CondensationLift,
    PsiEmbedding { k: usize },
    PsiNoEmbedding { k: usize },
}

impl core::fmt::Display for FilterRule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FilterRule::CompletePlusIsolated => write!(f, "complete-plus-isolated"),
            FilterRule::NotCompletePlusIsolatedAtN => write!(f, "not-complete-plus-isolated-at-n"),
            FilterRule::JoinFormAtNMinus1 => write!(f, "join-form-at-n-1"),
            FilterRule::NotJoinFormAtNMinus1 => write!(f, "not-join-form-at-n-1"),
            FilterRule::TwoDisjointInducedP3s => write!(f, "two-disjoint-induced-p3s"),
            FilterRule::DiameterAtLeastFour => write!(f, "diameter-at-least-4"),
            FilterRule::InducedP5 => write!(f, "induced-p5"),
            FilterRule::ThetaECover { theta } => write!(f, "theta-e-cover(theta={theta})"),
            FilterRule::ThetaEExceedsOrder { theta } => {
                write!(f, "theta-e-exceeds-order(theta={theta})")
            }
            FilterRule::ChordalComponents { omega } => {
                write!(f, "chordal-components(omega={omega})")
            }
            FilterRule::FamilyCycle => write!(f, "family-cycle"),
            FilterRule::FamilyPath => write!(f, "family-path"),
            FilterRule::FamilyStar => write!(f, "family-star"),
            FilterRule::FamilyCaterpillar { diameter } => {
                write!(f, "family-caterpillar(diameter={diameter})")
            }
            FilterRule::FamilyJoinForm => write!(f, "family-join-form"),
            FilterRule::TreeDiameter { diameter } => write!(f, "tree-diameter(d={diameter})"),
            FilterRule::CondensationLift => write!(f, "condensation-lift"),
            FilterRule::PsiEmbedding { k } => write!(f, "psi-embedding(k={k})"),
            FilterRule::PsiNoEmbedding { k } => write!(f, "psi-no-embedding(k={k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    Filter(FilterRule),
    /// YES: the search produced the certificate.
    SearchWitness,
    /// NO: the symmetry-reduced search ran to completion.
    ExhaustedSearch,
    Budget,
}

impl core::fmt::Display for Reason {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Reason::Filter(rule) => write!(f, "filter:{rule}"),
            Reason::SearchWitness => write!(f, "search"),
            Reason::ExhaustedSearch => write!(f, "exhausted-search"),
            Reason::Budget => write!(f, "budget"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub p: usize,
    pub status: Status,
    pub certificate: Option<Certificate>,
    pub reason: Reason,
    pub nodes: u64,
}

impl Verdict {
    fn yes(p: usize, certificate: Certificate, reason: Reason) -> Self {
        debug_assert!(certificate.is_verified());
        Verdict {
            p,
            status: Status::Yes,
            certificate: Some(certificate),
            reason,
            nodes: 0,
        }
    }

    fn no(p: usize, reason: Reason) -> Self {
        Verdict {
            p,
            status: Status::No,
            certificate: None,
            reason,
            nodes: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RealizerReport {
    pub graph: Graph,
    pub verdicts: Vec<Verdict>,
}

impl RealizerReport {
    pub fn yes_set(&self) -> Vec<usize> {
        self.verdicts
            .iter()
            .filter(|v| v.status == Status::Yes)
            .map(|v| v.p)
            .collect()
    }

    pub fn has_unknown(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == Status::Unknown)
    }

    pub fn verdict(&self, p: usize) -> &Verdict {
        &self.verdicts[p - 1]
    }

    /// Whether the YES set is `{1..k}` for some `k`, or empty. Reports
    /// flag departures prominently; none has ever been observed here.
    pub fn yes_set_is_initial_interval(&self) -> bool {
        let yes = self.yes_set();
        yes.iter().enumerate().all(|(i, &p)| p == i + 1)
    }
}

// ---------------------------------------------------------------------------
// Filters
// ---------------------------------------------------------------------------

/// Per-threshold partial verdicts from every applicable filter; `None`
/// entries are open and fall through to the search.
pub fn apply_filters(g: &Graph) -> Vec<Option<Verdict>> {
    apply_filters_with(g, &SolverOptions::default())
}

pub fn apply_filters_with(g: &Graph, opts: &SolverOptions) -> Vec<Option<Verdict>> {
    let n = g.n();
    let mut slots: Vec<Option<Verdict>> = vec![None; n];

    let put = |slots: &mut Vec<Option<Verdict>>, v: Verdict| {
        let idx = v.p - 1;
        if slots[idx].is_none() {
            slots[idx] = Some(v);
        }
    };

    // Constructive YES verdicts: closed-form families, cover-based ranges,
    // tree diameter, and the quotient lift.
    for v in constructive_yes(g) {
        put(&mut slots, v);
    }
    for v in condensation_lift(g) {
        put(&mut slots, v);
    }

    let kind = family::recognize(g);

    // Threshold n: exactly the complete-plus-isolated graphs.
    if !matches!(kind, FamilyKind::CompletePlusIsolated { .. }) {
        put(
            &mut slots,
            Verdict::no(n, Reason::Filter(FilterRule::NotCompletePlusIsolatedAtN)),
        );
    }

    // Threshold n-1: exactly the join forms (complete-plus-isolated included).
    if n >= 2
        && !matches!(
            kind,
            FamilyKind::CompletePlusIsolated { .. } | FamilyKind::JoinForm { .. }
        )
        && !is_join_form_shape(g)
    {
        put(
            &mut slots,
            Verdict::no(n - 1, Reason::Filter(FilterRule::NotJoinFormAtNMinus1)),
        );
    }

    // Upper-range exclusions pushing the realizer into [n-3].
    let mut cap_rule: Option<FilterRule> = None;
    if g.has_two_disjoint_induced_p3s() {
        cap_rule = Some(FilterRule::TwoDisjointInducedP3s);
    } else if g.is_connected() && g.diameter().at_least(4) {
        cap_rule = Some(FilterRule::DiameterAtLeastFour);
    } else if g.has_induced_path(5) {
        cap_rule = Some(FilterRule::InducedP5);
    }
    if let Some(rule) = cap_rule {
        for p in n.saturating_sub(2).max(1)..=n {
            put(&mut slots, Verdict::no(p, Reason::Filter(rule.clone())));
        }
    }

    // Threshold 1 is settled both ways by the exact cover number.
    if let Some(theta) = cover::theta_e_if_feasible(g) {
        if theta > n {
            put(
                &mut slots,
                Verdict::no(1, Reason::Filter(FilterRule::ThetaEExceedsOrder { theta })),
            );
        }
    }

    // Exact embedding characterization on the quotient, for hosts small
    // enough to materialize.
    if g.is_connected() && (2..=psi::PSI_MAX_N).contains(&n) {
        let (quotient, partition) = g.condensation();
        for p in 1..=n {
            if slots[p - 1].is_some() {
                continue;
            }
            let k = n - p;
            if psi::psi_host_order(n, k) > opts.psi_host_limit {
                continue;
            }
            let Ok((host, labels)) = psi::psi_graph_labeled(n, k) else {
                continue;
            };
            match iso::embeds_as_induced_subgraph(&quotient, &host) {
                Some(map) => {
                    if let Some(cert) = psi_certificate(g, &partition, &map, &labels, p) {
                        put(
                            &mut slots,
                            Verdict::yes(p, cert, Reason::Filter(FilterRule::PsiEmbedding { k })),
                        );
                    }
                }
                None => {
                    put(
                        &mut slots,
                        Verdict::no(p, Reason::Filter(FilterRule::PsiNoEmbedding { k })),
                    );
                }
            }
        }
    }

    slots
}

/// Join-form shape test independent of the family recognizer's kind
/// priority (paths and stars are join forms too).
fn is_join_form_shape(g: &Graph) -> bool {
    let core: Vec<usize> = (0..g.n()).filter(|&u| !g.is_isolated(u)).collect();
    if core.is_empty() {
        return true;
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
    if rest.is_empty() {
        return true;
    }
    let sub = g.induced(&rest);
    sub.components().iter().all(|comp| {
        comp.iter()
            .enumerate()
            .all(|(i, &u)| comp[i + 1..].iter().all(|&v| sub.has_edge(u, v)))
    })
}

/// All YES verdicts with constructive certificates that the filters can
/// produce for `g` directly (no quotient lifting).
fn constructive_yes(g: &Graph) -> Vec<Verdict> {
    let n = g.n();
    let mut out = Vec::new();
    let kind = family::recognize(g);

    match &kind {
        FamilyKind::CompletePlusIsolated { clique, .. } => {
            let mapping = complete_plus_isolated_mapping(g);
            for p in 1..=n {
                if let Ok(cert) =
                    cert::upsilon_full_certificate(*clique, n, p).and_then(|c| c.relabel(&mapping))
                {
                    out.push(Verdict::yes(
                        p,
                        cert,
                        Reason::Filter(FilterRule::CompletePlusIsolated),
                    ));
                }
            }
            return out;
        }
        FamilyKind::Cycle => {
            let order = cycle_order(g);
            for p in 1..=n.saturating_sub(3) {
                if let Ok(cert) = cert::cyclic_certificate(p, n).and_then(|c| c.relabel(&order)) {
                    out.push(Verdict::yes(
                        p,
                        cert,
                        Reason::Filter(FilterRule::FamilyCycle),
                    ));
                }
            }
        }
        FamilyKind::Path => {
            let order = path_order(g);
            let top = if n == 4 { 2 } else { n.saturating_sub(3) };
            for p in 1..=top {
                if let Ok(cert) = cert::path_certificate(p, n).and_then(|c| c.relabel(&order)) {
                    out.push(Verdict::yes(
                        p,
                        cert,
                        Reason::Filter(FilterRule::FamilyPath),
                    ));
                }
            }
        }
        FamilyKind::Star { leaves } => {
            let mapping = star_mapping(g);
            for p in 1..=*leaves {
                if let Ok(cert) =
                    cert::star_certificate(p, *leaves).and_then(|c| c.relabel(&mapping))
                {
                    out.push(Verdict::yes(
                        p,
                        cert,
                        Reason::Filter(FilterRule::FamilyStar),
                    ));
                }
            }
        }
        FamilyKind::Caterpillar(shape) => {
            let d = shape.spine_len();
            let top = if d == 3 { n - 2 } else { n - 3 };
            for p in 1..=top {
                if let Some(cert) = caterpillar_yes(g, shape, p) {
                    out.push(Verdict::yes(
                        p,
                        cert,
                        Reason::Filter(FilterRule::FamilyCaterpillar { diameter: d }),
                    ));
                }
            }
        }
        FamilyKind::JoinForm {
            center,
            parts,
            isolated,
        } => {
            for p in 1..=n - 1 {
                if let Some(cert) = join_form_yes(g, *center, parts, *isolated, p) {
                    out.push(Verdict::yes(
                        p,
                        cert,
                        Reason::Filter(FilterRule::FamilyJoinForm),
                    ));
                }
            }
        }
        _ => {}
    }

    // Cover-based range: an edge clique cover of size r yields every
    // threshold up to n - r + 1 by column padding.
    if let Some(theta) = cover::theta_e_if_feasible(g) {
        if theta <= n {
            if let Some(ecc) = cover::usable_ecc(g) {
                if ecc.len() == theta {
                    for p in 1..=n - theta + 1 {
                        if let Ok(cert) = cert::ecc_certificate(g, &ecc, p) {
                            out.push(Verdict::yes(
                                p,
                                cert,
                                Reason::Filter(FilterRule::ThetaECover { theta }),
                            ));
                        }
                    }
                }
            }
        }
    }

    // Chordal graphs with no trivial component: elimination-order cover of
    // size at most n - omega gives thresholds up to omega + 1 and beyond.
    let comps = g.components();
    let omega = comps.len();
    if g.is_chordal() && comps.iter().all(|c| c.len() >= 2) {
        if let Some(ecc) = cover::chordal_ecc(g) {
            let r = ecc.len();
            if r <= n {
                for p in 1..=n - r + 1 {
                    if let Ok(cert) = cert::ecc_certificate(g, &ecc, p) {
                        out.push(Verdict::yes(
                            p,
                            cert,
                            Reason::Filter(FilterRule::ChordalComponents { omega }),
                        ));
                    }
                }
            }
        }
    }

    // Trees of diameter d realize every threshold up to d - 2 by growing
    // pendants out of a diametral path.
    if g.is_tree() {
        if let Diameter::Finite(d) = g.diameter() {
            if d >= 3 {
                for p in 1..=d - 2 {
                    if let Some(cert) = tree_path_yes(g, p) {
                        out.push(Verdict::yes(
                            p,
                            cert,
                            Reason::Filter(FilterRule::TreeDiameter { diameter: d }),
                        ));
                    }
                }
            }
        }
    }

    out
}

/// Lifts YES verdicts from the quotient to the graph. Sound only when the
/// quotient has no isolated vertices: then every row of a quotient
/// certificate weighs at least p and class rows may be duplicated.
fn condensation_lift(g: &Graph) -> Vec<Verdict> {
    let n = g.n();
    let isolated: Vec<usize> = (0..n).filter(|&u| g.is_isolated(u)).collect();
    let core_verts: Vec<usize> = (0..n).filter(|&u| !g.is_isolated(u)).collect();
    if core_verts.is_empty() {
        return Vec::new();
    }
    let core = g.induced(&core_verts);
    let (quotient, partition) = core.condensation();
    let qn = quotient.n();
    if qn == core.n() && isolated.is_empty() {
        return Vec::new(); // nothing is gained
    }
    if (0..qn).any(|c| quotient.is_isolated(c)) {
        return Vec::new(); // complete components block row duplication
    }
    let class_sizes = partition.class_sizes();
    let spare_core = core.n() - qn;
    let spare_iso = isolated.len();

    // Map: blown-up vertex order (class blocks, then isolated tail) -> g.
    let mut relabel = Vec::with_capacity(n);
    for block in &partition.blocks {
        for &v in block {
            relabel.push(core_verts[v]);
        }
    }
    relabel.extend(isolated.iter().copied());

    let mut out = Vec::new();
    for v in constructive_yes(&quotient) {
        let Some(cert) = v.certificate else { continue };
        // Certificates whose labels differ from the quotient's are aligned
        // first so class sizes line up.
        let aligned = if cert.graph() == &quotient {
            cert
        } else {
            match iso::are_isomorphic(cert.graph(), &quotient).and_then(|m| cert.relabel(&m).ok()) {
                Some(c) => c,
                None => continue,
            }
        };
        if (0..qn).any(|r| aligned.matrix().row_weight(r) < aligned.p()) {
            continue;
        }
        for shift1 in 0..=spare_core {
            let Ok(expanded) = cert::condensation_expand(&aligned, &class_sizes, shift1) else {
                continue;
            };
            for shift2 in 0..=spare_iso {
                let p = aligned.p() + shift1 + shift2;
                if p > n {
                    continue;
                }
                let Ok(with_iso) = cert::isolated_augment(&expanded, spare_iso, shift2) else {
                    continue;
                };
                let Ok(final_cert) = with_iso.relabel(&relabel) else {
                    continue;
                };
                out.push(Verdict::yes(
                    p,
                    final_cert,
                    Reason::Filter(FilterRule::CondensationLift),
                ));
            }
        }
    }
    out
}

fn complete_plus_isolated_mapping(g: &Graph) -> Vec<usize> {
    let clique: Vec<usize> = (0..g.n()).filter(|&u| !g.is_isolated(u)).collect();
    let isolated: Vec<usize> = (0..g.n()).filter(|&u| g.is_isolated(u)).collect();
    let mut mapping = vec![0usize; g.n()];
    for (i, &v) in clique.iter().chain(isolated.iter()).enumerate() {
        mapping[i] = v;
    }
    mapping
}

/// Vertices of a cycle in ring order, starting deterministically.
fn cycle_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let start = 0;
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .filter(|&v| v != prev)
            .min()
            .unwrap();
        prev = cur;
        cur = next;
        if cur == start {
            break;
        }
    }
    let mut mapping = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        mapping[i] = v;
    }
    mapping
}

fn path_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let start = (0..n).find(|&u| g.degree(u) == 1).unwrap();
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        order.push(cur);
        let next = g.neighbors(cur).iter().find(|&v| v != prev);
        match next {
            Some(v) => {
                prev = cur;
                cur = v;
            }
            None => break,
        }
    }
    let mut mapping = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        mapping[i] = v;
    }
    mapping
}

fn star_mapping(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let center = (0..n).max_by_key(|&u| g.degree(u)).unwrap();
    let mut mapping = vec![0usize; n];
    mapping[0] = center;
    let mut slot = 1;
    for v in 0..n {
        if v != center {
            mapping[slot] = v;
            slot += 1;
        }
    }
    mapping
}

/// Certificate for a tree at thresholds up to diameter - 2: start from a
/// certificate of a diametral path and re-grow the tree pendant by pendant.
fn tree_path_yes(g: &Graph, p: usize) -> Option<Certificate> {
    let far = |src: usize| -> usize {
        let dist = g.bfs_distances(src);
        (0..g.n())
            .max_by_key(|&v| (dist[v], core::cmp::Reverse(v)))
            .unwrap()
    };
    let a = far(0);
    let b = far(a);
    let dist = g.bfs_distances(a);
    let mut path_verts = vec![b];
    let mut cur = b;
    while cur != a {
        let prev = g
            .neighbors(cur)
            .iter()
            .find(|&w| dist[w] + 1 == dist[cur])?;
        path_verts.push(prev);
        cur = prev;
    }
    path_verts.reverse();
    let d = path_verts.len() - 1;
    if !(p <= d.saturating_sub(2) || (d == 3 && p == 2)) {
        return None;
    }
    let base = cert::path_certificate(p, d + 1).ok()?;
    grow_pendants(g, base, path_verts)
}

/// Extends `cert` (whose vertices map onto `known` in order) by the rest
/// of the tree `g`, one pendant at a time, then relabels onto `g`.
fn grow_pendants(g: &Graph, base: Certificate, known: Vec<usize>) -> Option<Certificate> {
    let n = g.n();
    let mut cert = base;
    let mut cert_index = vec![usize::MAX; n];
    let mut mapping = Vec::with_capacity(n);
    for (i, &v) in known.iter().enumerate() {
        cert_index[v] = i;
        mapping.push(v);
    }
    let mut frontier: Vec<usize> = known;
    while mapping.len() < n {
        let mut next_frontier = Vec::new();
        for &u in &frontier {
            for v in g.neighbors(u).iter() {
                if cert_index[v] != usize::MAX {
                    continue;
                }
                cert = cert::pendant_extension(&cert, cert_index[u]).ok()?;
                cert_index[v] = mapping.len();
                mapping.push(v);
                next_frontier.push(v);
            }
        }
        if next_frontier.is_empty() {
            return None; // disconnected; not a tree
        }
        frontier = next_frontier;
    }
    cert.relabel(&mapping).ok()
}

/// Closed-form YES for caterpillars: low thresholds grow out of the spine,
/// high thresholds start from the block construction on a sub-caterpillar
/// keeping `alpha` pendants, then regrow the remainder.
fn caterpillar_yes(g: &Graph, shape: &family::CaterpillarShape, p: usize) -> Option<Certificate> {
    let d = shape.spine_len();
    if p <= d.saturating_sub(2) || (d == 3 && p == 2) {
        return tree_path_yes(g, p);
    }
    let (t, alpha) = if d == 3 {
        (2, p.checked_sub(2)?)
    } else {
        (d - 2, p.checked_sub(d - 2)?)
    };
    let k_total = shape.pendants.len();
    if alpha == 0 || alpha > k_total {
        return None;
    }
    let chosen = &shape.pendants[..alpha];
    let attach_positions: Vec<usize> = chosen.iter().map(|&(_, idx)| idx + 1).collect();
    let base = cert::caterpillar_certificate(d + 1, t, &attach_positions).ok()?;
    debug_assert_eq!(base.p(), p);
    let mut known: Vec<usize> = shape.spine.clone();
    known.extend(chosen.iter().map(|&(v, _)| v));
    grow_pendants(g, base, known)
}

/// Join-form YES side: the explicit three-row-type matrix at n-1, the
/// star-quotient blow-up below that.
fn join_form_yes(
    g: &Graph,
    center: usize,
    parts: &[usize],
    isolated: usize,
    p: usize,
) -> Option<Certificate> {
    let n = g.n();
    let mapping = join_form_mapping(g, center, parts)?;
    if p == n - 1 {
        let cert = cert::join_form_certificate(center, parts, isolated).ok()?;
        return cert.relabel(&mapping).ok();
    }
    let t = usize::from(center > 0) + parts.len();
    let joined: usize = center + parts.iter().sum::<usize>();
    let p_quotient = p.min(t - 1);
    let rem = p - p_quotient;
    let shift1 = rem.min(joined - t);
    let shift2 = rem - shift1;
    if shift2 > isolated {
        return None;
    }
    let core_cert = cert::star_condensation_certificate(center, parts, p_quotient, shift1).ok()?;
    let full = cert::isolated_augment(&core_cert, isolated, shift2).ok()?;
    full.relabel(&mapping).ok()
}

/// Vertex layout for the join-form constructions: center block, then the
/// part blocks in descending-size order, then the isolated tail.
fn join_form_mapping(g: &Graph, center: usize, parts: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let isolated: Vec<usize> = (0..n).filter(|&u| g.is_isolated(u)).collect();
    let core: Vec<usize> = (0..n).filter(|&u| !g.is_isolated(u)).collect();
    let universal: Vec<usize> = core
        .iter()
        .copied()
        .filter(|&u| core.iter().all(|&v| v == u || g.has_edge(u, v)))
        .collect();
    if universal.len() != center {
        return None;
    }
    let rest: Vec<usize> = core
        .iter()
        .copied()
        .filter(|u| !universal.contains(u))
        .collect();
    let sub = g.induced(&rest);
    let mut comps: Vec<Vec<usize>> = sub
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| rest[i]).collect())
        .collect();
    comps.sort_by_key(|c| (core::cmp::Reverse(c.len()), c[0]));
    let comp_sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    if comp_sizes != parts {
        return None;
    }
    let mut order = universal;
    for comp in comps {
        order.extend(comp);
    }
    order.extend(isolated);
    let mut mapping = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        mapping[i] = v;
    }
    Some(mapping)
}

/// Builds the square certificate out of a quotient embedding into the
/// subset-union host: each class row is the complement of its assigned
/// subset, duplicated across the class.
fn psi_certificate(
    g: &Graph,
    partition: &crate::graph::VertexPartition,
    map: &[usize],
    labels: &[u16],
    p: usize,
) -> Option<Certificate> {
    let n = g.n();
    let full: u128 = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut rows = vec![0u128; n];
    for (class, block) in partition.blocks.iter().enumerate() {
        let subset = labels[map[class]] as u128;
        let row = full & !subset;
        for &v in block {
            rows[v] = row;
        }
    }
    let matrix = BinaryMatrix::from_rows(n, rows).ok()?;
    cert::verify(Certificate::unverified(
        matrix,
        p,
        g.clone(),
        format!("psi-embedding(k={})", n - p),
    ))
    .ok()
}

// ---------------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------------

struct SearchSpace {
    n: usize,
    qn: usize,
    p: usize,
    /// Classes in assignment order; isolated-vertex classes are pinned to
    /// all-zero rows and excluded.
    order: Vec<usize>,
    class_adj: Vec<Bits>,
    wmin: Vec<usize>,
    class_of: Vec<usize>,
}

enum SearchStop {
    Budget,
    Aborted,
}

struct SearchState<'a> {
    space: &'a SearchSpace,
    rows: Vec<u64>,
    assigned: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    abort: &'a dyn AbortCheck,
}

impl SearchState<'_> {
    fn bump(&mut self) -> Result<(), SearchStop> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(SearchStop::Budget);
        }
        if self.nodes % 1024 == 1 && self.abort.should_abort() {
            return Err(SearchStop::Aborted);
        }
        Ok(())
    }

    fn assign(&mut self, idx: usize, blocks: &[(usize, usize)]) -> Result<bool, SearchStop> {
        let space = self.space;
        if idx == space.order.len() {
            return Ok(true);
        }
        let class = space.order[idx];
        let p = space.p;
        let n = space.n;
        for w in space.wmin[class]..=n {
            let mut candidates: Vec<u64> = Vec::new();
            compositions(blocks, w, 0, 0, &mut candidates);
            'cand: for row in candidates {
                self.bump()?;
                // Pairwise feasibility against the assigned prefix.
                for &d in &self.assigned {
                    let shared = (row & self.rows[d]).count_ones() as usize;
                    let adjacent = space.class_adj[class].get(d);
                    if adjacent != (shared >= p) {
                        continue 'cand;
                    }
                }
                // Lookahead: a nonadjacent unassigned class must still be
                // able to avoid this row.
                for &e in &space.order[idx + 1..] {
                    if !space.class_adj[class].get(e) && space.wmin[e] + w > n + p - 1 {
                        continue 'cand;
                    }
                }
                self.rows[class] = row;
                self.assigned.push(class);
                let refined = refine_blocks(blocks, row);
                if self.assign(idx + 1, &refined)? {
                    return Ok(true);
                }
                self.assigned.pop();
                self.rows[class] = 0;
            }
        }
        Ok(false)
    }
}

/// All rows with `w` ones respecting the column blocks: within each block
/// (a run of columns indistinguishable so far) ones are left-aligned, so
/// exactly one representative per column symmetry class is generated.
fn compositions(blocks: &[(usize, usize)], w: usize, idx: usize, acc: u64, out: &mut Vec<u64>) {
    if idx == blocks.len() {
        if w == 0 {
            out.push(acc);
        }
        return;
    }
    let (start, len) = blocks[idx];
    let remaining: usize = blocks[idx + 1..].iter().map(|&(_, l)| l).sum();
    let lo = w.saturating_sub(remaining);
    let hi = len.min(w);
    // Fuller blocks first: candidates pack ones toward earlier columns.
    for k in (lo..=hi).rev() {
        let mask = if k == 0 {
            0
        } else {
            ((1u64 << k) - 1) << start
        };
        compositions(blocks, w - k, idx + 1, acc | mask, out);
    }
}

fn refine_blocks(blocks: &[(usize, usize)], row: u64) -> Vec<(usize, usize)> {
    let mut refined = Vec::with_capacity(blocks.len() + 4);
    for &(start, len) in blocks {
        let ones = ((row >> start) & mask_of(len)).count_ones() as usize;
        if ones > 0 {
            refined.push((start, ones));
        }
        if ones < len {
            refined.push((start + ones, len - ones));
        }
    }
    refined
}

fn mask_of(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

fn build_search_space(g: &Graph, p: usize) -> SearchSpace {
    let n = g.n();
    let (quotient, partition) = g.condensation();
    let qn = quotient.n();
    let mut wmin = vec![0usize; qn];
    let mut pinned = vec![false; qn];
    for c in 0..qn {
        let rep = partition.representatives[c];
        if g.is_isolated(rep) {
            pinned[c] = true;
            continue;
        }
        wmin[c] = if g.is_simplicial(rep) { p } else { p + 1 };
    }
    let mut order: Vec<usize> = (0..qn).filter(|&c| !pinned[c]).collect();
    order.sort_by_key(|&c| (core::cmp::Reverse(quotient.degree(c)), c));
    let class_adj = (0..qn).map(|c| quotient.neighbors(c).clone()).collect();
    SearchSpace {
        n,
        qn,
        p,
        order,
        class_adj,
        wmin,
        class_of: partition.class_of,
    }
}

/// Exhaustive decision by backtracking over one row per homogeneity
/// class, with isolated rows pinned to zero, weight lower bounds, and
/// column-symmetry breaking. `Ok(Some(..))` is a certificate, `Ok(None)`
/// a completed refutation.
fn search(
    g: &Graph,
    p: usize,
    budget: &SearchBudget,
    abort: &dyn AbortCheck,
) -> (Result<Option<Certificate>, SearchStop>, u64) {
    let n = g.n();
    let space = build_search_space(g, p);
    let mut state = SearchState {
        space: &space,
        rows: vec![0u64; space.qn],
        assigned: Vec::new(),
        nodes: 0,
        max_nodes: budget.max_nodes,
        abort,
    };
    let blocks = vec![(0usize, n)];
    let found = state.assign(0, &blocks);
    let nodes = state.nodes;
    match found {
        Ok(true) => {
            let rows: Vec<u128> = (0..n)
                .map(|v| state.rows[space.class_of[v]] as u128)
                .collect();
            let matrix = BinaryMatrix::from_rows(n, rows).expect("valid");
            let cert = cert::verify(Certificate::unverified(
                matrix,
                p,
                g.clone(),
                format!("search(p={p})"),
            ))
            .expect("search result must verify");
            (Ok(Some(cert)), nodes)
        }
        Ok(false) => (Ok(None), nodes),
        Err(stop) => (Err(stop), nodes),
    }
}

// ---------------------------------------------------------------------------
// Public decision surface
// ---------------------------------------------------------------------------

pub fn decide(g: &Graph, p: usize, budget: &SearchBudget) -> Verdict {
    decide_with(g, p, budget, &SolverOptions::default(), &NoAbort)
}

pub fn decide_with(
    g: &Graph,
    p: usize,
    budget: &SearchBudget,
    opts: &SolverOptions,
    abort: &dyn AbortCheck,
) -> Verdict {
    assert!(p >= 1 && p <= g.n(), "threshold must lie in 1..=n");
    if opts.use_filters {
        let mut slots = apply_filters_with(g, opts);
        if let Some(v) = slots.swap_remove(p - 1) {
            return v;
        }
    }
    search_verdict(g, p, budget, abort)
}

fn search_verdict(g: &Graph, p: usize, budget: &SearchBudget, abort: &dyn AbortCheck) -> Verdict {
    if g.n() > 64 {
        // Matrix rows are 64-bit masks; larger orders are out of search
        // range and can only be settled by filters.
        return Verdict {
            p,
            status: Status::Unknown,
            certificate: None,
            reason: Reason::Budget,
            nodes: 0,
        };
    }
    let (outcome, nodes) = search(g, p, budget, abort);
    match outcome {
        Ok(Some(cert)) => Verdict {
            p,
            status: Status::Yes,
            certificate: Some(cert),
            reason: Reason::SearchWitness,
            nodes,
        },
        Ok(None) => Verdict {
            p,
            status: Status::No,
            certificate: None,
            reason: Reason::ExhaustedSearch,
            nodes,
        },
        Err(_) => Verdict {
            p,
            status: Status::Unknown,
            certificate: None,
            reason: Reason::Budget,
            nodes,
        },
    }
}

pub fn realizer(g: &Graph, budget: &SearchBudget) -> RealizerReport {
    realizer_with(g, budget, &SolverOptions::default(), &NoAbort)
}

/// Verdict for every threshold in `[n]`; filter work is shared across
/// thresholds, searches run only where the filters stay silent.
pub fn realizer_with(
    g: &Graph,
    budget: &SearchBudget,
    opts: &SolverOptions,
    abort: &dyn AbortCheck,
) -> RealizerReport {
    let n = g.n();
    let slots = if opts.use_filters {
        apply_filters_with(g, opts)
    } else {
        vec![None; n]
    };
    let verdicts = slots
        .into_iter()
        .enumerate()
        .map(|(idx, slot)| slot.unwrap_or_else(|| search_verdict(g, idx + 1, budget, abort)))
        .collect();
    RealizerReport {
        graph: g.clone(),
        verdicts,
    }
}

// ---------------------------------------------------------------------------
// Instance checks on witness matrices
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    FanPrecondition {
        detail: String,
    },
    /// The guaranteed light pair was not found; this would falsify the
    /// underlying counting bound.
    FanWitnessMissing,
    KaryGapInfeasible {
        r: usize,
    },
}

impl core::fmt::Display for SolverError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SolverError::FanPrecondition { detail } => write!(f, "{detail}"),
            SolverError::FanWitnessMissing => {
                write!(f, "no nonadjacent fan pair with lighter rows exists")
            }
            SolverError::KaryGapInfeasible { r } => write!(
                f,
                "gap check at r={r} needs a perfect {}-ary tree of height {}; only r=1 is desk-scale",
                (1usize << r) + 1,
                r + 1
            ),
        }
    }
}

impl core::error::Error for SolverError {}

/// For a vertex `v` with an independent fan of `2^r + 1` neighbors and
/// `p >= n - r`: finds two nonadjacent fan members whose rows are lighter
/// than `v`'s. Their existence is guaranteed; failing to find one would
/// contradict the underlying counting argument.
pub fn lighter_fan_pair(
    m: &BinaryMatrix,
    p: usize,
    v: usize,
    fan: &[usize],
) -> Result<(usize, usize), SolverError> {
    if !m.is_square() {
        return Err(SolverError::FanPrecondition {
            detail: format!("matrix must be square, got {}x{}", m.rows(), m.cols()),
        });
    }
    let n = m.rows();
    if v >= n || fan.iter().any(|&x| x >= n) {
        return Err(SolverError::FanPrecondition {
            detail: String::from("row indices out of range"),
        });
    }
    let fan_size = fan.len();
    let r = match fan_size.checked_sub(1) {
        Some(sz) if sz >= 2 && sz.is_power_of_two() => sz.trailing_zeros() as usize,
        _ => {
            return Err(SolverError::FanPrecondition {
                detail: format!("fan size {fan_size} is not 2^r + 1 for some r >= 1"),
            })
        }
    };
    if p + r < n {
        return Err(SolverError::FanPrecondition {
            detail: format!("need p >= n - r, got p={p}, n={n}, r={r}"),
        });
    }
    let graph = m.p_row_graph(p);
    for &x in fan {
        if !graph.has_edge(v, x) {
            return Err(SolverError::FanPrecondition {
                detail: format!("fan row {x} is not adjacent to {v}"),
            });
        }
    }
    for (i, &x) in fan.iter().enumerate() {
        for &y in &fan[i + 1..] {
            if graph.has_edge(x, y) {
                return Err(SolverError::FanPrecondition {
                    detail: format!("fan rows {x} and {y} are adjacent"),
                });
            }
        }
    }
    let wv = m.row_weight(v);
    for (i, &x) in fan.iter().enumerate() {
        for &y in &fan[i + 1..] {
            if m.row_weight(x) < wv && m.row_weight(y) < wv {
                return Ok((x, y));
            }
        }
    }
    Err(SolverError::FanWitnessMissing)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KaryGapReport {
    pub r: usize,
    pub tree_order: usize,
    pub tree_diameter: usize,
    /// Largest threshold not excluded by the filters.
    pub filter_upper_bound: usize,
    /// `tree_order - filter_upper_bound`, a lower bound on the gap.
    pub gap_lower_bound: usize,
}

impl KaryGapReport {
    pub fn exceeds_r(&self) -> bool {
        self.gap_lower_bound > self.r
    }
}

/// Gap check on the perfect (2^r + 1)-ary tree of height r + 1. Only
/// r = 1 (13 vertices) is desk-scale; larger r is rejected outright.
pub fn kary_gap_check(r: usize) -> Result<KaryGapReport, SolverError> {
    if r != 1 {
        return Err(SolverError::KaryGapInfeasible { r });
    }
    let tree = family::kary_tree((1 << r) + 1, r + 1);
    let n = tree.n();
    let slots = apply_filters(&tree);
    let upper = (1..=n)
        .filter(|&p| {
            !matches!(
                slots[p - 1],
                Some(Verdict {
                    status: Status::No,
                    ..
                })
            )
        })
        .max()
        .unwrap_or(0);
    let diameter = tree.diameter().finite().unwrap_or(0);
    Ok(KaryGapReport {
        r,
        tree_order: n,
        tree_diameter: diameter,
        filter_upper_bound: upper,
        gap_lower_bound: n - upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn quick_budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn k33_realizer_is_empty() {
        let g = family::complete_bipartite(3, 3);
        let report = realizer(&g, &quick_budget());
        assert!(report.yes_set().is_empty());
        assert_eq!(
            report.verdict(1).reason,
            Reason::Filter(FilterRule::ThetaEExceedsOrder { theta: 9 })
        );
        assert_eq!(
            report.verdict(5).reason,
            Reason::Filter(FilterRule::NotJoinFormAtNMinus1)
        );
        assert_eq!(
            report.verdict(6).reason,
            Reason::Filter(FilterRule::NotCompletePlusIsolatedAtN)
        );
        for p in 2..=4 {
            assert_eq!(report.verdict(p).status, Status::No, "p={p}");
            assert_eq!(report.verdict(p).reason, Reason::ExhaustedSearch, "p={p}");
        }
    }

    #[test]
    fn k33_filters_leave_middle_open() {
        let g = family::complete_bipartite(3, 3);
        let slots = apply_filters(&g);
        for p in 2..=4 {
            assert!(slots[p - 1].is_none(), "p={p} should be open");
        }
    }

    #[test]
    fn cycle_realizers() {
        for n in 4..=7 {
            let report = realizer(&family::cycle(n), &quick_budget());
            let expect: Vec<usize> = (1..=n - 3).collect();
            assert_eq!(report.yes_set(), expect, "C_{n}");
            for v in &report.verdicts {
                if v.status == Status::Yes {
                    assert!(v.certificate.as_ref().unwrap().is_verified());
                }
            }
        }
    }

    #[test]
    fn path_realizers() {
        assert_eq!(
            realizer(&family::path(3), &quick_budget()).yes_set(),
            vec![1, 2]
        );
        assert_eq!(
            realizer(&family::path(4), &quick_budget()).yes_set(),
            vec![1, 2]
        );
        assert_eq!(
            realizer(&family::path(5), &quick_budget()).yes_set(),
            vec![1, 2]
        );
        assert_eq!(
            realizer(&family::path(7), &quick_budget()).yes_set(),
            vec![1, 2, 3, 4]
        );
    }

    #[test]
    fn star_realizer_is_full_range() {
        let report = realizer(&family::star(4), &quick_budget());
        assert_eq!(report.yes_set(), vec![1, 2, 3, 4]);
        assert_eq!(report.verdict(5).status, Status::No);
    }

    #[test]
    fn complete_plus_isolated_full_upsilon() {
        let g = Graph::disjoint_union(&[family::complete(3), family::empty(2)]).unwrap();
        let report = realizer(&g, &quick_budget());
        assert_eq!(report.yes_set(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn p7_filter_attribution() {
        let slots = apply_filters(&family::path(7));
        for p in 1..=4 {
            assert!(matches!(
                slots[p - 1],
                Some(Verdict {
                    status: Status::Yes,
                    ..
                })
            ));
        }
        assert_eq!(
            slots[4].as_ref().unwrap().reason,
            Reason::Filter(FilterRule::TwoDisjointInducedP3s)
        );
        assert_eq!(
            slots[5].as_ref().unwrap().reason,
            Reason::Filter(FilterRule::NotJoinFormAtNMinus1)
        );
        assert_eq!(
            slots[6].as_ref().unwrap().reason,
            Reason::Filter(FilterRule::NotCompletePlusIsolatedAtN)
        );
    }

    #[test]
    fn eleven_vertex_caterpillar_closed_form() {
        let g = family::caterpillar(5, &[2, 2, 3, 3, 3, 4]).unwrap();
        let report = realizer(&g, &quick_budget());
        let expect: Vec<usize> = (1..=8).collect();
        assert_eq!(report.yes_set(), expect);
        for p in 1..=8 {
            assert!(
                matches!(report.verdict(p).reason, Reason::Filter(_)),
                "p={p}"
            );
        }
        for p in 9..=11 {
            assert!(
                matches!(report.verdict(p).reason, Reason::Filter(_)),
                "p={p}"
            );
        }
    }

    #[test]
    fn search_agrees_with_family_filter_on_c4() {
        let g = family::cycle(4);
        let no_filters = SolverOptions {
            use_filters: false,
            ..Default::default()
        };
        for p in 1..=4 {
            let searched = decide_with(&g, p, &quick_budget(), &no_filters, &NoAbort);
            let filtered = decide(&g, p, &quick_budget());
            assert_eq!(searched.status, filtered.status, "p={p}");
        }
    }

    #[test]
    fn condensation_lift_on_cycle_blowup() {
        // A 5-cycle with one vertex twinned: the quotient's top threshold
        // lifts by the one spare row.
        let g = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (1, 5),
                (4, 5),
            ],
        )
        .unwrap();
        let report = realizer(&g, &quick_budget());
        assert_eq!(report.yes_set(), vec![1, 2, 3]);
        assert_eq!(
            report.verdict(3).reason,
            Reason::Filter(FilterRule::CondensationLift)
        );
        assert!(report
            .verdict(3)
            .certificate
            .as_ref()
            .unwrap()
            .is_verified());
        assert_eq!(
            report.verdict(4).reason,
            Reason::Filter(FilterRule::TwoDisjointInducedP3s)
        );
    }

    #[test]
    fn hexagon_with_chord_refused_at_one() {
        // Seven edges need seven cover cliques, one more than the order.
        let g1 =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4)]).unwrap();
        let v = decide(&g1, 1, &quick_budget());
        assert_eq!(v.status, Status::No);
        assert_eq!(
            v.reason,
            Reason::Filter(FilterRule::ThetaEExceedsOrder { theta: 7 })
        );
        // The same graph is a 2-competition graph.
        assert_eq!(decide(&g1, 2, &quick_budget()).status, Status::Yes);
    }

    #[test]
    fn twin_graph_is_two_competition() {
        // The seven-vertex graph whose quotient collapses one twin pair.
        let g2 = Graph::from_edges(
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
        .unwrap();
        let v = decide(&g2, 2, &quick_budget());
        assert_eq!(v.status, Status::Yes);
        let cert = v.certificate.unwrap();
        assert!(cert.is_verified());
    }

    #[test]
    fn lighter_fan_pair_on_full_star() {
        let m = cert::star_matrix_full(5).unwrap();
        let (x, y) = lighter_fan_pair(&m, 5, 0, &[1, 2, 3, 4, 5]).unwrap();
        assert!(m.row_weight(x) < m.row_weight(0));
        assert!(m.row_weight(y) < m.row_weight(0));
    }

    #[test]
    fn lighter_fan_pair_on_bordered_star() {
        let m = cert::star_matrix(4, 5).unwrap();
        // Center is the bottom row; leaves are rows 0..5, all weight 4 < 6.
        let (x, y) = lighter_fan_pair(&m, 4, 5, &[0, 1, 2, 3, 4]).unwrap();
        assert!(m.row_weight(x) < m.row_weight(5));
        assert!(m.row_weight(y) < m.row_weight(5));
    }

    #[test]
    fn lighter_fan_pair_rejects_adjacent_fan() {
        let m = BinaryMatrix::ones(4, 4).unwrap();
        assert!(matches!(
            lighter_fan_pair(&m, 3, 0, &[1, 2, 3]),
            Err(SolverError::FanPrecondition { .. })
        ));
    }

    #[test]
    fn kary_gap_at_r1() {
        let report = kary_gap_check(1).unwrap();
        assert_eq!(report.tree_order, 13);
        assert_eq!(report.tree_diameter, 4);
        assert_eq!(report.filter_upper_bound, 10);
        assert_eq!(report.gap_lower_bound, 3);
        assert!(report.exceeds_r());
        assert!(matches!(
            kary_gap_check(2),
            Err(SolverError::KaryGapInfeasible { r: 2 })
        ));
    }

    #[test]
    fn unknown_on_tiny_budget() {
        let g = family::complete_bipartite(3, 3);
        let tiny = SearchBudget {
            max_nodes: 1,
            ..Default::default()
        };
        let no_filters = SolverOptions {
            use_filters: false,
            ..Default::default()
        };
        let v = decide_with(&g, 3, &tiny, &no_filters, &NoAbort);
        assert_eq!(v.status, Status::Unknown);
        assert_eq!(v.reason, Reason::Budget);
    }
}
