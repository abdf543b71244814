//! Constructive certificate matrices: square 0/1 matrices whose p-row
//! graph realizes a target graph, one builder per closed-form family,
//! plus the extension operators (pendants, isolated vertices, quotient
//! blow-up) that compose them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::family;
use crate::graph::Graph;
use crate::iso;
use crate::matrix::{BinaryMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertError {
    ParamRange {
        op: &'static str,
        detail: String,
    },
    UnverifiedInput {
        op: &'static str,
    },
    RowWeightTooSmall {
        row: usize,
        weight: usize,
        needed: usize,
    },
    AttachmentNotInterior {
        position: usize,
    },
    Matrix(MatrixError),
    /// A constructor produced a matrix that failed re-verification. This
    /// indicates a bug, never a legitimate outcome.
    VerificationFailed {
        provenance: String,
    },
}

impl core::fmt::Display for CertError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CertError::ParamRange { op, detail } => write!(f, "{op}: {detail}"),
            CertError::UnverifiedInput { op } => write!(f, "{op}: input certificate not verified"),
            CertError::RowWeightTooSmall {
                row,
                weight,
                needed,
            } => {
                write!(f, "row {row} has weight {weight}, needs at least {needed}")
            }
            CertError::AttachmentNotInterior { position } => {
                write!(
                    f,
                    "pendants must attach to interior spine positions, got {position}"
                )
            }
            CertError::Matrix(e) => write!(f, "{e}"),
            CertError::VerificationFailed { provenance } => {
                write!(f, "constructed matrix failed verification: {provenance}")
            }
        }
    }
}

impl core::error::Error for CertError {}

impl From<MatrixError> for CertError {
    fn from(e: MatrixError) -> Self {
        CertError::Matrix(e)
    }
}

/// A square matrix of the graph's order together with the threshold it
/// realizes the graph at. `verified` is only ever set by [`verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    matrix: BinaryMatrix,
    p: usize,
    graph: Graph,
    provenance: String,
    verified: bool,
}

impl Certificate {
    /// Packages the pieces without trusting them; callers go through
    /// [`verify`] (every constructor here does).
    pub fn unverified(matrix: BinaryMatrix, p: usize, graph: Graph, provenance: String) -> Self {
        Certificate {
            matrix,
            p,
            graph,
            provenance,
            verified: false,
        }
    }

    pub fn matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Moves the certificate onto a relabeled copy of its graph: vertex `v`
    /// becomes `mapping[v]`, and rows move with their vertices.
    pub fn relabel(&self, mapping: &[usize]) -> Result<Certificate, CertError> {
        let n = self.graph.n();
        if mapping.len() != n {
            return Err(CertError::ParamRange {
                op: "relabel",
                detail: format!("mapping length {} != order {n}", mapping.len()),
            });
        }
        let mut inverse = vec![usize::MAX; n];
        for (v, &t) in mapping.iter().enumerate() {
            inverse[t] = v;
        }
        let matrix = self.matrix.select_rows(&inverse)?;
        let graph = self.graph.relabel(mapping);
        verify(Certificate::unverified(
            matrix,
            self.p,
            graph,
            self.provenance.clone(),
        ))
    }
}

/// Recomputes the row graph and checks it against the claimed graph
/// (exact labels first, then isomorphism). Never trusts provenance.
pub fn check(cert: &Certificate) -> bool {
    let n = cert.graph.n();
    if !cert.matrix.is_square() || cert.matrix.rows() != n {
        return false;
    }
    if cert.p < 1 || cert.p > n {
        return false;
    }
    let row_graph = cert.matrix.p_row_graph(cert.p);
    row_graph == cert.graph || iso::are_isomorphic(&row_graph, &cert.graph).is_some()
}

/// Returns the certificate with its `verified` flag set from scratch.
pub fn verify(cert: Certificate) -> Result<Certificate, CertError> {
    if check(&cert) {
        Ok(Certificate {
            verified: true,
            ..cert
        })
    } else {
        Err(CertError::VerificationFailed {
            provenance: cert.provenance,
        })
    }
}

fn param_err(op: &'static str, detail: String) -> CertError {
    CertError::ParamRange { op, detail }
}

/// Band matrix whose rows are cyclic windows: entry `(r, c)` is 1 exactly
/// when `(r - c) mod n <= p`. Row weights are `p + 1`, cyclically
/// consecutive rows share `p` ones, and all other pairs share fewer.
pub fn cyclic_matrix(p: usize, n: usize) -> Result<BinaryMatrix, CertError> {
    if n < 4 || p < 1 || p > n - 3 {
        return Err(param_err(
            "cyclic_matrix",
            format!("need n >= 4 and 1 <= p <= n-3, got p={p} n={n}"),
        ));
    }
    let rows = (0..n)
        .map(|r| {
            let mut mask = 0u128;
            for c in 0..n {
                if (r + n - c) % n <= p {
                    mask |= 1 << c;
                }
            }
            mask
        })
        .collect();
    Ok(BinaryMatrix::from_rows(n, rows)?)
}

pub fn cyclic_certificate(p: usize, n: usize) -> Result<Certificate, CertError> {
    let matrix = cyclic_matrix(p, n)?;
    verify(Certificate::unverified(
        matrix,
        p,
        family::cycle(n),
        format!("cyclic(p={p},n={n})"),
    ))
}

/// The cyclic band matrix with the wrap-around entry `(1, n-p+1)` cleared,
/// which opens the cycle into a path. `(p, n) = (2, 4)` is the one shape
/// outside the band range and is given explicitly.
pub fn path_matrix(p: usize, n: usize) -> Result<BinaryMatrix, CertError> {
    if (p, n) == (2, 4) {
        return Ok(BinaryMatrix::from_bit_strings(&[
            "1100", "1110", "0111", "0011",
        ])?);
    }
    let base = cyclic_matrix(p, n).map_err(|_| {
        param_err(
            "path_matrix",
            format!("need (p,n)=(2,4) or n >= 4 and 1 <= p <= n-3, got p={p} n={n}"),
        )
    })?;
    Ok(base.replace_entry(0, n - p, false)?)
}

pub fn path_certificate(p: usize, n: usize) -> Result<Certificate, CertError> {
    let matrix = path_matrix(p, n)?;
    verify(Certificate::unverified(
        matrix,
        p,
        family::path(n),
        format!("path(p={p},n={n})"),
    ))
}

/// Order n+1 matrix for the star at threshold n: row 0 is all ones (the
/// center); row i+1 is all ones except a 0 in column i.
pub fn star_matrix_full(n: usize) -> Result<BinaryMatrix, CertError> {
    if n < 1 {
        return Err(param_err(
            "star_matrix_full",
            format!("need n >= 1, got {n}"),
        ));
    }
    let full = (1u128 << (n + 1)) - 1;
    let mut rows = vec![full];
    for i in 0..n {
        rows.push(full & !(1 << i));
    }
    Ok(BinaryMatrix::from_rows(n + 1, rows)?)
}

pub fn star_full_certificate(n: usize) -> Result<Certificate, CertError> {
    let matrix = star_matrix_full(n)?;
    verify(Certificate::unverified(
        matrix,
        n,
        family::star(n),
        format!("star-full(n={n})"),
    ))
}

/// Order n+1 matrix for the star at threshold p, 3 <= p <= n-1: the leaf
/// rows carry a cyclic band at level p-2 bordered by an all-one last
/// column, and the center is an all-one bottom row.
pub fn star_matrix(p: usize, n: usize) -> Result<BinaryMatrix, CertError> {
    if n < 4 || p < 3 || p > n - 1 {
        return Err(param_err(
            "star_matrix",
            format!("need n >= 4 and 3 <= p <= n-1, got p={p} n={n}"),
        ));
    }
    let band = cyclic_matrix(p - 2, n)?;
    let mut rows: Vec<u128> = (0..n).map(|r| band.row_mask(r) | 1 << n).collect();
    rows.push((1u128 << (n + 1)) - 1);
    Ok(BinaryMatrix::from_rows(n + 1, rows)?)
}

/// Star certificate for any threshold in `[n]`, labeled with the center
/// at vertex 0. Thresholds 1 and 2 go through an edge-cover matrix,
/// `3..=n-1` through the bordered band, and `n` through the full matrix.
pub fn star_certificate(p: usize, n: usize) -> Result<Certificate, CertError> {
    if n < 1 || p < 1 || p > n {
        return Err(param_err(
            "star_certificate",
            format!("need 1 <= p <= n, got p={p} n={n}"),
        ));
    }
    if p == n {
        return star_full_certificate(n);
    }
    if p <= 2 {
        let g = family::star(n);
        let cover: Vec<Bits> = g
            .edges()
            .iter()
            .map(|&(u, v)| Bits::from_indices(g.n(), [u, v]))
            .collect();
        return ecc_certificate(&g, &cover, p);
    }
    let matrix = star_matrix(p, n)?;
    let cert = verify(Certificate::unverified(
        matrix,
        p,
        // Center is the last row in the block layout.
        Graph::from_edges(n + 1, (0..n).map(|i| (i, n))).expect("valid"),
        format!("star(p={p},n={n})"),
    ))?;
    // Rotate labels so the center is vertex 0, matching the star builder.
    let mut mapping = vec![0usize; n + 1];
    for (leaf, slot) in mapping.iter_mut().enumerate().take(n) {
        *slot = leaf + 1;
    }
    mapping[n] = 0;
    cert.relabel(&mapping)
}

/// Square certificate from an edge clique cover: the vertex/member
/// incidence matrix padded with `p - 1` all-one columns and all-zero
/// columns up to the order. Valid for `1 <= p <= n - |cover| + 1`.
pub fn ecc_certificate(g: &Graph, cover: &[Bits], p: usize) -> Result<Certificate, CertError> {
    let n = g.n();
    let r = cover.len();
    if r > n {
        return Err(param_err(
            "ecc_certificate",
            format!("cover of size {r} exceeds order {n}"),
        ));
    }
    if p < 1 || p > n - r + 1 {
        return Err(param_err(
            "ecc_certificate",
            format!("need 1 <= p <= n-r+1 = {}, got {p}", n - r + 1),
        ));
    }
    let mut rows = vec![0u128; n];
    for (j, member) in cover.iter().enumerate() {
        for v in member.iter() {
            rows[v] |= 1 << j;
        }
    }
    let incidence = BinaryMatrix::from_rows(r, rows)?;
    let matrix = incidence.append_columns(p - 1, n - r - (p - 1))?;
    verify(Certificate::unverified(
        matrix,
        p,
        g.clone(),
        format!("ecc(r={r},p={p})"),
    ))
}

/// Adds a pendant vertex to a certified graph at the same threshold.
///
/// Rows of weight below `p - 1` belong to isolated vertices and are first
/// rewritten to a canonical weight-(p-1) row; columns are then stably
/// permuted so the attachment row's ones form an initial segment, and the
/// new vertex row is `p - 1` leading ones plus a shared final column.
pub fn pendant_extension(cert: &Certificate, attach: usize) -> Result<Certificate, CertError> {
    if !cert.verified {
        return Err(CertError::UnverifiedInput {
            op: "pendant_extension",
        });
    }
    let p = cert.p;
    let n = cert.graph.n();
    if attach >= n {
        return Err(param_err(
            "pendant_extension",
            format!("attach vertex {attach} out of range for order {n}"),
        ));
    }
    let prefix = (1u128 << (p - 1)) - 1;
    let mut base: Vec<u128> = (0..n).map(|r| cert.matrix.row_mask(r)).collect();
    for row in base.iter_mut() {
        if (row.count_ones() as usize) < p - 1 {
            *row = prefix;
        }
    }
    let normalized = BinaryMatrix::from_rows(n, base)?;
    // Stable column sort: the attachment row's ones first.
    let lambda = normalized.lambda(attach);
    let mut perm: Vec<usize> = lambda.clone();
    perm.extend((0..n).filter(|c| !lambda.contains(c)));
    let m = normalized.permute_columns(&perm)?;

    let mut rows: Vec<u128> = (0..n).map(|r| m.row_mask(r)).collect();
    rows[attach] |= 1 << n;
    rows.push(prefix | 1 << n);
    let matrix = BinaryMatrix::from_rows(n + 1, rows)?;

    let mut edges = cert.graph.edges();
    edges.push((attach, n));
    let graph = Graph::from_edges(n + 1, edges).expect("valid");
    verify(Certificate::unverified(
        matrix,
        p,
        graph,
        format!("pendant(attach={attach})<-{}", cert.provenance),
    ))
}

/// Caterpillar certificate at threshold t+k: a path band over the spine,
/// all-ones coupling blocks, pendant rows copying their anchor's band row,
/// and an off-diagonal block tying the pendants together.
///
/// `attach[i]` is the 1-indexed spine position of pendant `i`; interior
/// positions only.
pub fn caterpillar_certificate(
    n: usize,
    t: usize,
    attach: &[usize],
) -> Result<Certificate, CertError> {
    let special = (n, t) == (4, 2);
    if !special && (n < 4 || t < 1 || t > n - 3) {
        return Err(param_err(
            "caterpillar_certificate",
            format!("need (n,t)=(4,2) or n >= 4 and 1 <= t <= n-3, got n={n} t={t}"),
        ));
    }
    for &pos in attach {
        if pos < 2 || pos > n - 1 {
            return Err(CertError::AttachmentNotInterior { position: pos });
        }
    }
    let k = attach.len();
    let p = t + k;
    let spine = path_matrix(t, n)?;
    let matrix = if k == 0 {
        spine
    } else {
        let mut rows: Vec<u128> = Vec::with_capacity(n + k);
        let ones_right = ((1u128 << k) - 1) << n;
        for r in 0..n {
            rows.push(spine.row_mask(r) | ones_right);
        }
        for (i, &pos) in attach.iter().enumerate() {
            let diag_hole = 1u128 << (n + i);
            rows.push(spine.row_mask(pos - 1) | (ones_right & !diag_hole));
        }
        BinaryMatrix::from_rows(n + k, rows)?
    };
    let graph = family::caterpillar(n, attach).map_err(|e| match e {
        family::CaterpillarParamError::AttachmentNotInterior { position } => {
            CertError::AttachmentNotInterior { position }
        }
        family::CaterpillarParamError::SpineTooShort { spine_n } => param_err(
            "caterpillar_certificate",
            format!("spine too short: {spine_n}"),
        ),
    })?;
    verify(Certificate::unverified(
        matrix,
        p,
        graph,
        format!("caterpillar(n={n},t={t},k={k})"),
    ))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc = 1u128;
    for j in 0..k.min(n - k) {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// Disjoint union of complete graphs at any threshold below the order:
/// with `i = n - p`, component `j` gets rows whose zero set is the `j`-th
/// smallest `i`-subset in colex order.
pub fn complete_union_certificate(sizes: &[usize], p: usize) -> Result<Certificate, CertError> {
    let n: usize = sizes.iter().sum();
    if n == 0 || sizes.contains(&0) {
        return Err(param_err(
            "complete_union_certificate",
            format!("component sizes must be positive, got {sizes:?}"),
        ));
    }
    if p < 1 || p >= n {
        return Err(param_err(
            "complete_union_certificate",
            format!("need 1 <= p <= n-1 = {}, got {p}", n.saturating_sub(1)),
        ));
    }
    let hole = n - p;
    let k = sizes.len();
    if (k as u128) > binomial(n, hole) {
        return Err(param_err(
            "complete_union_certificate",
            format!(
                "{k} components exceed the {} distinct zero-sets available",
                binomial(n, hole)
            ),
        ));
    }
    // Colex order on fixed-size subsets is numeric order on their masks.
    let mut zero_sets = Vec::with_capacity(k);
    let mut mask = 0u128;
    while zero_sets.len() < k {
        if mask.count_ones() as usize == hole {
            zero_sets.push(mask);
        }
        mask += 1;
    }
    let full = (1u128 << n) - 1;
    let mut rows = Vec::with_capacity(n);
    for (j, &size) in sizes.iter().enumerate() {
        for _ in 0..size {
            rows.push(full & !zero_sets[j]);
        }
    }
    let matrix = BinaryMatrix::from_rows(n, rows)?;
    verify(Certificate::unverified(
        matrix,
        p,
        family::complete_union(sizes),
        format!("complete-union(sizes={sizes:?},p={p})"),
    ))
}

/// Extends a certificate by `k` isolated vertices, shifting the threshold
/// by `i`: the old block gains `i` all-one and `k - i` all-zero columns,
/// and the new rows are all zero.
pub fn isolated_augment(cert: &Certificate, k: usize, i: usize) -> Result<Certificate, CertError> {
    if !cert.verified {
        return Err(CertError::UnverifiedInput {
            op: "isolated_augment",
        });
    }
    if i > k {
        return Err(param_err(
            "isolated_augment",
            format!("shift {i} exceeds added vertices {k}"),
        ));
    }
    let n = cert.graph.n();
    let padded = cert.matrix.append_columns(i, k - i)?;
    let mut rows: Vec<u128> = (0..n).map(|r| padded.row_mask(r)).collect();
    rows.extend(core::iter::repeat_n(0u128, k));
    let matrix = BinaryMatrix::from_rows(n + k, rows)?;
    let graph = Graph::from_edges(n + k, cert.graph.edges()).expect("valid");
    verify(Certificate::unverified(
        matrix,
        cert.p + i,
        graph,
        format!("isolated(k={k},i={i})<-{}", cert.provenance),
    ))
}

/// Blows a quotient certificate up to the full graph: row `j` is repeated
/// `class_sizes[j]` times, then `shift` all-one and enough all-zero
/// columns square the matrix; the threshold moves to `p + shift`.
///
/// Every row must weigh at least `p`, otherwise duplicated classes would
/// not come out internally adjacent.
pub fn condensation_expand(
    cert: &Certificate,
    class_sizes: &[usize],
    shift: usize,
) -> Result<Certificate, CertError> {
    if !cert.verified {
        return Err(CertError::UnverifiedInput {
            op: "condensation_expand",
        });
    }
    let q = cert.graph.n();
    if class_sizes.len() != q {
        return Err(param_err(
            "condensation_expand",
            format!("{} class sizes for quotient order {q}", class_sizes.len()),
        ));
    }
    if class_sizes.contains(&0) {
        return Err(param_err(
            "condensation_expand",
            String::from("class sizes must be positive"),
        ));
    }
    let p = cert.p;
    for row in 0..q {
        let w = cert.matrix.row_weight(row);
        if w < p {
            return Err(CertError::RowWeightTooSmall {
                row,
                weight: w,
                needed: p,
            });
        }
    }
    let n: usize = class_sizes.iter().sum();
    let m = cert.matrix.cols();
    if m > n {
        return Err(param_err(
            "condensation_expand",
            format!("quotient matrix has {m} columns, target order is only {n}"),
        ));
    }
    if shift > n - m {
        return Err(param_err(
            "condensation_expand",
            format!("shift {shift} exceeds n-m = {}", n - m),
        ));
    }
    let mut row_of_class = Vec::with_capacity(n);
    for (j, &size) in class_sizes.iter().enumerate() {
        for _ in 0..size {
            row_of_class.push(j);
        }
    }
    let stacked = cert.matrix.select_rows(&row_of_class)?;
    let matrix = stacked.append_columns(shift, n - m - shift)?;
    // Blow-up graph: classes become cliques, cross edges follow the quotient.
    let mut first = vec![0usize; q];
    let mut acc = 0;
    for (j, &size) in class_sizes.iter().enumerate() {
        first[j] = acc;
        acc += size;
    }
    let mut edges = Vec::new();
    for j in 0..q {
        for a in 0..class_sizes[j] {
            for b in a + 1..class_sizes[j] {
                edges.push((first[j] + a, first[j] + b));
            }
        }
        for l in j + 1..q {
            if cert.graph.has_edge(j, l) {
                for a in 0..class_sizes[j] {
                    for b in 0..class_sizes[l] {
                        edges.push((first[j] + a, first[l] + b));
                    }
                }
            }
        }
    }
    let graph = Graph::from_edges(n, edges).expect("valid");
    verify(Certificate::unverified(
        matrix,
        p + shift,
        graph,
        format!(
            "expand(sizes={class_sizes:?},shift={shift})<-{}",
            cert.provenance
        ),
    ))
}

/// Certificate at threshold n-1 for `(K_center ∨ (K_parts ∪ ...)) ∪ I_m`:
/// all-one rows for the center, per-part rows with one zero in a column
/// owned by the part, and all-zero rows for the isolated tail.
pub fn join_form_certificate(
    center: usize,
    parts: &[usize],
    isolated: usize,
) -> Result<Certificate, CertError> {
    let n = center + parts.iter().sum::<usize>() + isolated;
    if n < 2 {
        return Err(param_err(
            "join_form_certificate",
            format!("order {n} too small for threshold n-1"),
        ));
    }
    if parts.contains(&0) {
        return Err(param_err(
            "join_form_certificate",
            String::from("part sizes must be positive"),
        ));
    }
    if parts.len() > n {
        return Err(param_err(
            "join_form_certificate",
            format!(
                "{} parts exceed the {n} distinct zero-columns available",
                parts.len()
            ),
        ));
    }
    let full = (1u128 << n) - 1;
    let mut rows = Vec::with_capacity(n);
    rows.extend(core::iter::repeat_n(full, center));
    for (j, &size) in parts.iter().enumerate() {
        let row = full & !(1 << j);
        rows.extend(core::iter::repeat_n(row, size));
    }
    rows.extend(core::iter::repeat_n(0u128, isolated));
    let matrix = BinaryMatrix::from_rows(n, rows)?;
    verify(Certificate::unverified(
        matrix,
        n - 1,
        family::join_form(center, parts, isolated),
        format!("join-form(center={center},parts={parts:?},isolated={isolated})"),
    ))
}

/// Certificate for `K_m ∪ I_{n-m}` valid at every threshold: the first
/// `m` rows are all ones, the rest all zeros.
pub fn upsilon_full_certificate(m: usize, n: usize, p: usize) -> Result<Certificate, CertError> {
    if m > n || n == 0 {
        return Err(param_err(
            "upsilon_full_certificate",
            format!("need 0 <= m <= n with n >= 1, got m={m} n={n}"),
        ));
    }
    if p < 1 || p > n {
        return Err(param_err(
            "upsilon_full_certificate",
            format!("need 1 <= p <= {n}, got {p}"),
        ));
    }
    let full = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut rows = vec![full; m];
    rows.extend(core::iter::repeat_n(0u128, n - m));
    let matrix = BinaryMatrix::from_rows(n, rows)?;
    let mut clique_edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            clique_edges.push((u, v));
        }
    }
    let graph = Graph::from_edges(n, clique_edges).expect("valid");
    verify(Certificate::unverified(
        matrix,
        p,
        graph,
        format!("complete-plus-isolated(m={m},n={n},p={p})"),
    ))
}

/// Quotient-of-a-star certificate: the center class (size may be zero for
/// a union of cliques) gets an all-one row; the leaf classes get mutually
/// distinct weight-p rows in colex order; the whole thing is then blown
/// up by the class sizes and shifted to `p + shift`.
pub fn star_condensation_certificate(
    center_size: usize,
    leaf_sizes: &[usize],
    p: usize,
    shift: usize,
) -> Result<Certificate, CertError> {
    let t = usize::from(center_size > 0) + leaf_sizes.len();
    if t < 2 {
        return Err(param_err(
            "star_condensation_certificate",
            format!("need at least 2 classes, got {t}"),
        ));
    }
    if leaf_sizes.contains(&0) {
        return Err(param_err(
            "star_condensation_certificate",
            String::from("leaf class sizes must be positive"),
        ));
    }
    if p < 1 || p >= t {
        return Err(param_err(
            "star_condensation_certificate",
            format!("need 1 <= p <= t-1 = {}, got {p}", t - 1),
        ));
    }
    let full = (1u128 << t) - 1;
    let mut rows = Vec::with_capacity(t);
    let mut quotient_edges = Vec::new();
    if center_size > 0 {
        rows.push(full);
        for leaf in 1..t {
            quotient_edges.push((0, leaf));
        }
    }
    // Distinct weight-p rows, numerically smallest first (colex order).
    let mut mask = 0u128;
    while rows.len() < t {
        if mask.count_ones() as usize == p {
            rows.push(mask);
        }
        mask += 1;
    }
    let quotient_matrix = BinaryMatrix::from_rows(t, rows)?;
    let quotient_graph = Graph::from_edges(t, quotient_edges).expect("valid");
    let quotient = verify(Certificate::unverified(
        quotient_matrix,
        p,
        quotient_graph,
        format!("star-quotient(t={t},p={p})"),
    ))?;
    let mut class_sizes = Vec::with_capacity(t);
    if center_size > 0 {
        class_sizes.push(center_size);
    }
    class_sizes.extend_from_slice(leaf_sizes);
    condensation_expand(&quotient, &class_sizes, shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn cyclic_1_4_matches_hand_expansion() {
        // Oracle: windows S_i = {v_i, v_{i+1}} mod 4; entry (r, c) says
        // whether v_r lies in S_c.
        let m = cyclic_matrix(1, 4).unwrap();
        let expect = ["1001", "1100", "0110", "0011"];
        for (r, row) in expect.iter().enumerate() {
            assert_eq!(m.row_string(r), *row);
        }
        assert!(are_isomorphic(&m.p_row_graph(1), &family::cycle(4)).is_some());
    }

    #[test]
    fn cyclic_2_5_first_row() {
        let m = cyclic_matrix(2, 5).unwrap();
        assert_eq!(m.row_string(0), "10011");
    }

    #[test]
    fn cyclic_rejects_out_of_range() {
        assert!(cyclic_matrix(2, 4).is_err());
        assert!(cyclic_matrix(0, 6).is_err());
        assert!(cyclic_matrix(4, 6).is_err());
    }

    #[test]
    fn cyclic_certificates_in_range() {
        for n in 4..=9 {
            for p in 1..=n - 3 {
                let cert = cyclic_certificate(p, n).unwrap();
                assert!(cert.is_verified(), "cycle p={p} n={n}");
            }
        }
    }

    #[test]
    fn path_2_4_display() {
        let m = path_matrix(2, 4).unwrap();
        let expect = ["1100", "1110", "0111", "0011"];
        for (r, row) in expect.iter().enumerate() {
            assert_eq!(m.row_string(r), *row);
        }
    }

    #[test]
    fn path_2_5_matches_spine_block() {
        let m = path_matrix(2, 5).unwrap();
        let expect = ["10001", "11001", "11100", "01110", "00111"];
        for (r, row) in expect.iter().enumerate() {
            assert_eq!(m.row_string(r), *row);
        }
    }

    #[test]
    fn path_certificates_in_range() {
        assert!(path_certificate(2, 4).unwrap().is_verified());
        for n in 4..=9 {
            for p in 1..=n - 3 {
                assert!(
                    path_certificate(p, n).unwrap().is_verified(),
                    "path p={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn star_full_small() {
        let m = star_matrix_full(2).unwrap();
        assert_eq!(m.row_string(0), "111");
        assert_eq!(m.row_string(1), "011");
        assert_eq!(m.row_string(2), "101");
        assert!(star_full_certificate(1).unwrap().is_verified());
        assert!(star_full_certificate(5).unwrap().is_verified());
    }

    #[test]
    fn star_dispatch_covers_every_threshold() {
        for n in 2..=6 {
            for p in 1..=n {
                let cert = star_certificate(p, n).unwrap();
                assert!(cert.is_verified(), "star p={p} n={n}");
                assert_eq!(cert.graph(), &family::star(n));
                assert_eq!(cert.p(), p);
            }
        }
    }

    #[test]
    fn star_matrix_weights() {
        let m = star_matrix(3, 4).unwrap();
        for leaf in 0..4 {
            assert_eq!(m.row_weight(leaf), 3);
        }
        assert_eq!(m.row_weight(4), 5);
    }

    #[test]
    fn pendant_on_interior_path_vertex() {
        let base = path_certificate(2, 4).unwrap();
        let cert = pendant_extension(&base, 1).unwrap();
        assert!(cert.is_verified());
        assert_eq!(cert.graph().n(), 5);
        assert!(cert.graph().has_edge(1, 4));
    }

    #[test]
    fn pendant_chain_rebuilds_tree() {
        // Grow a 3-star out of one end of a path.
        let mut cert = path_certificate(1, 4).unwrap();
        for _ in 0..3 {
            cert = pendant_extension(&cert, 3).unwrap();
        }
        assert!(cert.is_verified());
        assert_eq!(cert.graph().degree(3), 4);
    }

    #[test]
    fn pendant_attach_to_weightless_isolated_row() {
        // An isolated vertex's row is rewritten to weight p-1 first.
        let base = upsilon_full_certificate(2, 3, 2).unwrap();
        let cert = pendant_extension(&base, 2).unwrap();
        assert!(cert.is_verified());
        assert!(cert.graph().has_edge(2, 3));
        assert_eq!(cert.graph().degree(2), 1);
    }

    #[test]
    fn pendant_rejects_unverified() {
        let fake = Certificate::unverified(
            BinaryMatrix::identity(3).unwrap(),
            1,
            family::path(3),
            String::from("fake"),
        );
        assert!(matches!(
            pendant_extension(&fake, 0),
            Err(CertError::UnverifiedInput { .. })
        ));
    }

    #[test]
    fn caterpillar_equals_path_when_bare() {
        let cat = caterpillar_certificate(5, 2, &[]).unwrap();
        assert_eq!(cat.matrix(), &path_matrix(2, 5).unwrap());
    }

    #[test]
    fn caterpillar_rejects_endpoint() {
        assert!(matches!(
            caterpillar_certificate(5, 2, &[1]),
            Err(CertError::AttachmentNotInterior { position: 1 })
        ));
        assert!(matches!(
            caterpillar_certificate(5, 2, &[5]),
            Err(CertError::AttachmentNotInterior { position: 5 })
        ));
    }

    #[test]
    fn caterpillar_special_shape() {
        let cert = caterpillar_certificate(4, 2, &[2, 3]).unwrap();
        assert!(cert.is_verified());
        assert_eq!(cert.p(), 4);
    }

    #[test]
    fn complete_union_examples() {
        let cert = complete_union_certificate(&[2, 2], 3).unwrap();
        assert_eq!(cert.matrix().row_string(0), "0111");
        assert_eq!(cert.matrix().row_string(2), "1011");
        let kn = complete_union_certificate(&[5], 3).unwrap();
        assert!(kn.graph().is_complete());
        let empty = complete_union_certificate(&[1, 1, 1], 2).unwrap();
        assert!(empty.graph().is_edgeless());
    }

    #[test]
    fn isolated_augment_shifts() {
        let k2 = upsilon_full_certificate(2, 2, 1).unwrap();
        let cert = isolated_augment(&k2, 2, 1).unwrap();
        assert_eq!(cert.p(), 2);
        assert_eq!(cert.graph().n(), 4);
        assert!(cert.graph().is_isolated(2));
        let same_p = isolated_augment(&k2, 2, 0).unwrap();
        assert_eq!(same_p.p(), 1);
        let full_shift = isolated_augment(&k2, 2, 2).unwrap();
        assert_eq!(full_shift.p(), 3);
    }

    #[test]
    fn expand_identity_when_sizes_are_one() {
        let cert = cyclic_certificate(2, 6).unwrap();
        let expanded = condensation_expand(&cert, &[1; 6], 0).unwrap();
        assert_eq!(expanded.matrix(), cert.matrix());
        assert_eq!(expanded.p(), 2);
    }

    #[test]
    fn expand_single_class_gives_complete() {
        let k1 = upsilon_full_certificate(1, 1, 1).unwrap();
        let expanded = condensation_expand(&k1, &[4], 3).unwrap();
        assert!(expanded.graph().is_complete());
        assert_eq!(expanded.p(), 4);
    }

    #[test]
    fn expand_hexagon_witness_to_its_twin_graph() {
        // Duplicating the third row of the order-6 witness yields a
        // certificate for the 7-vertex graph with one twin pair.
        let m = BinaryMatrix::from_bit_strings(&[
            "110010", "010011", "010101", "101010", "001011", "001101",
        ])
        .unwrap();
        let g1 =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (1, 4)]).unwrap();
        let base = verify(Certificate::unverified(m, 2, g1, String::from("hexagon"))).unwrap();
        let expanded = condensation_expand(&base, &[1, 1, 2, 1, 1, 1], 0).unwrap();
        assert_eq!(expanded.p(), 2);
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
        assert!(are_isomorphic(expanded.graph(), &g2).is_some());
    }

    #[test]
    fn expand_rejects_light_rows() {
        let cert = upsilon_full_certificate(1, 2, 1).unwrap();
        // Second row is all-zero: weight 0 < p = 1.
        assert!(matches!(
            condensation_expand(&cert, &[1, 2], 0),
            Err(CertError::RowWeightTooSmall { row: 1, .. })
        ));
    }

    #[test]
    fn join_form_examples() {
        let star_like = join_form_certificate(1, &[1, 1], 0).unwrap();
        assert_eq!(star_like.matrix(), &star_matrix_full(2).unwrap());
        let two_cliques = join_form_certificate(0, &[2, 2], 0).unwrap();
        assert_eq!(two_cliques.matrix().row_string(0), "0111");
        assert_eq!(two_cliques.matrix().row_string(2), "1011");
        assert_eq!(two_cliques.p(), 3);
        let complete = join_form_certificate(4, &[], 0).unwrap();
        assert!(complete.graph().is_complete());
    }

    #[test]
    fn upsilon_full_examples() {
        let cert = upsilon_full_certificate(3, 5, 4).unwrap();
        assert!(cert.is_verified());
        assert_eq!(cert.graph().degree(0), 2);
        assert!(cert.graph().is_isolated(4));
        assert!(upsilon_full_certificate(0, 4, 2)
            .unwrap()
            .graph()
            .is_edgeless());
        assert!(upsilon_full_certificate(4, 4, 1)
            .unwrap()
            .graph()
            .is_complete());
    }

    #[test]
    fn star_condensation_examples() {
        let cert = star_condensation_certificate(1, &[1, 1], 2, 0).unwrap();
        assert_eq!(cert.matrix().row_string(0), "111");
        assert_eq!(cert.matrix().row_string(1), "110");
        assert_eq!(cert.matrix().row_string(2), "101");
        let empty_quotient = star_condensation_certificate(0, &[1, 1], 1, 0).unwrap();
        assert_eq!(empty_quotient.matrix().row_string(0), "10");
        assert_eq!(empty_quotient.matrix().row_string(1), "01");
        assert!(empty_quotient.graph().is_edgeless());
        let claw = star_condensation_certificate(1, &[1, 1, 1], 3, 0).unwrap();
        assert!(are_isomorphic(claw.graph(), &family::star(3)).is_some());
        assert!(star_condensation_certificate(1, &[1, 1], 3, 0).is_err());
    }

    #[test]
    fn verify_rejects_wrong_claims() {
        let cert = Certificate::unverified(
            BinaryMatrix::ones(3, 3).unwrap(),
            1,
            family::path(3),
            String::from("bogus"),
        );
        assert!(!check(&cert));
        assert!(verify(cert).is_err());
    }

    #[test]
    fn relabel_moves_rows_with_vertices() {
        let cert = path_certificate(1, 4).unwrap();
        let relabeled = cert.relabel(&[3, 2, 1, 0]).unwrap();
        assert!(relabeled.is_verified());
        assert_eq!(relabeled.graph(), &family::path(4));
        assert_eq!(
            relabeled.matrix().row_string(3),
            cert.matrix().row_string(0)
        );
    }
}
