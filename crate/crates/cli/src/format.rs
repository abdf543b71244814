//! Text formats: edge lists, 0/1 matrices, clique families, and
//! certificate files. All vertex and column indices are 1-based on disk
//! and 0-based in memory.

use pcomp_core::cert::{self, Certificate};
use pcomp_core::cover::CliqueFamily;
use pcomp_core::{BinaryMatrix, Graph};

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Lines with content: 1-based line numbers, comments and blanks skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Edge-list format: header `n m`, then `m` lines `u v` with
/// `1 <= u < v <= n`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| err(0, "empty graph file"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| err(header_no, "expected 'n m' header"))?
        .parse()
        .map_err(|_| err(header_no, "vertex count is not a nonnegative integer"))?;
    let m: usize = parts
        .next()
        .ok_or_else(|| err(header_no, "expected 'n m' header"))?
        .parse()
        .map_err(|_| err(header_no, "edge count is not a nonnegative integer"))?;
    if parts.next().is_some() {
        return Err(err(header_no, "trailing tokens after 'n m' header"));
    }
    if n == 0 {
        return Err(err(header_no, "graphs need at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| err(0, format!("expected {m} edge lines, file ended early")))?;
        let mut nums = line.split_whitespace();
        let u: i64 = nums
            .next()
            .ok_or_else(|| err(line_no, "expected 'u v'"))?
            .parse()
            .map_err(|_| err(line_no, "vertex id is not an integer"))?;
        let v: i64 = nums
            .next()
            .ok_or_else(|| err(line_no, "expected 'u v'"))?
            .parse()
            .map_err(|_| err(line_no, "vertex id is not an integer"))?;
        if nums.next().is_some() {
            return Err(err(line_no, "trailing tokens after edge"));
        }
        if u < 1 || v < 1 {
            return Err(err(
                line_no,
                format!("vertex ids must be >= 1, got {u} {v}"),
            ));
        }
        let (u, v) = (u as usize, v as usize);
        if u >= v {
            return Err(err(
                line_no,
                format!("edges must satisfy u < v, got {u} {v}"),
            ));
        }
        if v > n {
            return Err(err(
                line_no,
                format!("vertex {v} exceeds declared count {n}"),
            ));
        }
        if edges.contains(&(u - 1, v - 1)) {
            return Err(err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u - 1, v - 1));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(err(line_no, "unexpected content after the last edge"));
    }
    Graph::from_edges(n, edges).map_err(|e| err(0, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Matrix format: header `r c`, then `r` lines of `c` characters from
/// `{0,1}` with no separators. Round-trips bit-exactly.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| err(0, "empty matrix file"))?;
    let mut parts = header.split_whitespace();
    let r: usize = parts
        .next()
        .ok_or_else(|| err(header_no, "expected 'r c' header"))?
        .parse()
        .map_err(|_| err(header_no, "row count is not a nonnegative integer"))?;
    let c: usize = parts
        .next()
        .ok_or_else(|| err(header_no, "expected 'r c' header"))?
        .parse()
        .map_err(|_| err(header_no, "column count is not a nonnegative integer"))?;
    if parts.next().is_some() {
        return Err(err(header_no, "trailing tokens after 'r c' header"));
    }
    let mut rows = Vec::with_capacity(r);
    for _ in 0..r {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| err(0, format!("expected {r} matrix rows, file ended early")))?;
        if line.len() != c {
            return Err(err(
                line_no,
                format!("row has {} characters, expected {c}", line.len()),
            ));
        }
        rows.push((line_no, line));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(err(line_no, "unexpected content after the last row"));
    }
    let strs: Vec<&str> = rows.iter().map(|&(_, l)| l).collect();
    BinaryMatrix::from_bit_strings(&strs)
        .map_err(|e| err(rows.first().map_or(0, |&(l, _)| l), e.to_string()))
}

pub fn write_matrix(m: &BinaryMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    for r in 0..m.rows() {
        let _ = writeln!(out, "{}", m.row_string(r));
    }
    out
}

/// Family format: header `r`, then `r` lines `k v1 ... vk` (1-indexed
/// vertices, `k = 0` allowed).
pub fn parse_family(text: &str, ground: &Graph) -> Result<CliqueFamily, ParseError> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| err(0, "empty family file"))?;
    let r: usize = header
        .trim()
        .parse()
        .map_err(|_| err(header_no, "expected the member count"))?;
    let mut members = Vec::with_capacity(r);
    for _ in 0..r {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| err(0, format!("expected {r} member lines, file ended early")))?;
        let mut nums = line.split_whitespace();
        let k: usize = nums
            .next()
            .ok_or_else(|| err(line_no, "expected 'k v1 ... vk'"))?
            .parse()
            .map_err(|_| err(line_no, "member size is not a nonnegative integer"))?;
        let mut member = Vec::with_capacity(k);
        for _ in 0..k {
            let v: usize = nums
                .next()
                .ok_or_else(|| err(line_no, format!("expected {k} vertices")))?
                .parse()
                .map_err(|_| err(line_no, "vertex id is not an integer"))?;
            if v < 1 || v > ground.n() {
                return Err(err(
                    line_no,
                    format!("vertex {v} out of range 1..={}", ground.n()),
                ));
            }
            member.push(v - 1);
        }
        if nums.next().is_some() {
            return Err(err(line_no, "trailing tokens after member"));
        }
        members.push(member);
    }
    CliqueFamily::new(ground.clone(), members).map_err(|e| err(0, e.to_string()))
}

pub fn write_family(family: &CliqueFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", family.members.len());
    for member in &family.members {
        let verts = member.to_vec();
        let mut line = format!("{}", verts.len());
        for v in verts {
            let _ = write!(line, " {}", v + 1);
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Certificate file: `[graph]`, `[p]`, `[matrix]`, `[provenance]` sections.
/// Parsing re-verifies from scratch; provenance is never trusted.
pub fn parse_certificate(text: &str) -> Result<Certificate, ParseError> {
    let mut sections: Vec<(String, Vec<&str>, usize)> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.starts_with('[') && line.ends_with(']') {
            sections.push((line[1..line.len() - 1].to_string(), Vec::new(), line_no + 1));
        } else if let Some(last) = sections.last_mut() {
            last.1.push(raw);
        } else if !line.trim().is_empty() && !line.trim_start().starts_with('#') {
            return Err(err(line_no + 1, "content before the first section header"));
        }
    }
    let find = |name: &str| -> Result<(String, usize), ParseError> {
        sections
            .iter()
            .find(|(s, _, _)| s == name)
            .map(|(_, lines, at)| (lines.join("\n"), *at))
            .ok_or_else(|| err(0, format!("missing [{name}] section")))
    };
    let (graph_text, _) = find("graph")?;
    let graph = parse_edge_list(&graph_text)?;
    let (p_text, p_at) = find("p")?;
    let p: usize = p_text
        .trim()
        .parse()
        .map_err(|_| err(p_at, "threshold is not a positive integer"))?;
    let (matrix_text, _) = find("matrix")?;
    let matrix = parse_matrix(&matrix_text)?;
    let (provenance, _) = find("provenance")?;
    let unverified = Certificate::unverified(matrix, p, graph, provenance.trim().to_string());
    cert::verify(unverified).map_err(|e| err(0, format!("certificate does not verify: {e}")))
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[graph]");
    let _ = write!(out, "{}", write_edge_list(cert.graph()));
    let _ = writeln!(out, "[p]");
    let _ = writeln!(out, "{}", cert.p());
    let _ = writeln!(out, "[matrix]");
    let _ = write!(out, "{}", write_matrix(cert.matrix()));
    let _ = writeln!(out, "[provenance]");
    let _ = writeln!(out, "{}", cert.provenance());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcomp_core::family;

    #[test]
    fn edge_list_round_trip() {
        let g = family::cycle(5);
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_accepts_comments() {
        let g = parse_edge_list("# a triangle\n3 3\n1 2\n# chord\n1 3\n2 3\n").unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn edge_list_errors_name_lines() {
        let e = parse_edge_list("3 2\n1 2\n2 -1\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_edge_list("3 1\n2 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_edge_list("3 1\n1 5\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn matrix_round_trip_is_bit_exact() {
        let m = BinaryMatrix::from_bit_strings(&["10101", "01010", "11111"]).unwrap();
        let text = write_matrix(&m);
        assert_eq!(text, "3 5\n10101\n01010\n11111\n");
        assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    #[test]
    fn family_round_trip() {
        let g = family::path(4);
        let f = parse_family("3\n2 1 2\n0\n3 2 3 4\n", &g).unwrap();
        assert_eq!(f.members.len(), 3);
        assert!(f.members[1].is_empty());
        let text = write_family(&f);
        assert_eq!(parse_family(&text, &g).unwrap(), f);
    }

    #[test]
    fn certificate_round_trip_and_reverification() {
        let cert = pcomp_core::cert::path_certificate(2, 5).unwrap();
        let text = write_certificate(&cert);
        let back = parse_certificate(&text).unwrap();
        assert!(back.is_verified());
        assert_eq!(back.matrix(), cert.matrix());
        assert_eq!(back.p(), 2);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let cert = pcomp_core::cert::path_certificate(2, 5).unwrap();
        let text = write_certificate(&cert).replace("[p]\n2", "[p]\n3");
        assert!(parse_certificate(&text).is_err());
    }
}
