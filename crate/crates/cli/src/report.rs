//! Human-readable and machine-readable (key=value) reports. Both carry a
//! format-version line; exit-code and key layouts are stable contracts.

use pcomp_core::solver::{Reason, Status, Verdict};
use pcomp_core::RealizerReport;

use std::fmt::Write as _;

pub const TEXT_FORMAT_VERSION: &str = "pcomp-report/1";
pub const KV_FORMAT_VERSION: &str = "pcomp-kv/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Kv,
}

fn reason_token(reason: &Reason) -> String {
    reason.to_string()
}

pub fn decide_text(
    input: &str,
    verdict: &Verdict,
    elapsed_ms: u128,
    certificate_path: Option<&str>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{TEXT_FORMAT_VERSION}");
    let _ = writeln!(out, "command: decide");
    let _ = writeln!(out, "input: {input}");
    let _ = writeln!(out, "p: {}", verdict.p);
    let _ = writeln!(out, "status: {}", verdict.status);
    let _ = writeln!(out, "reason: {}", reason_token(&verdict.reason));
    let _ = writeln!(out, "nodes: {}", verdict.nodes);
    let _ = writeln!(out, "elapsed-ms: {elapsed_ms}");
    if let Some(path) = certificate_path {
        let _ = writeln!(out, "certificate: {path}");
    }
    out
}

pub fn decide_kv(
    input: &str,
    verdict: &Verdict,
    elapsed_ms: u128,
    certificate_path: Option<&str>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "format={KV_FORMAT_VERSION}");
    let _ = writeln!(out, "command=decide");
    let _ = writeln!(out, "input={input}");
    let _ = writeln!(out, "p={}", verdict.p);
    let _ = writeln!(out, "status={}", verdict.status);
    let _ = writeln!(out, "reason={}", reason_token(&verdict.reason));
    let _ = writeln!(out, "nodes={}", verdict.nodes);
    let _ = writeln!(out, "elapsed_ms={elapsed_ms}");
    if let Some(path) = certificate_path {
        let _ = writeln!(out, "certificate={path}");
    }
    out
}

fn upsilon_set(report: &RealizerReport) -> String {
    let yes = report.yes_set();
    let inner: Vec<String> = yes.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn realizer_text(input: &str, report: &RealizerReport, elapsed_ms: u128) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{TEXT_FORMAT_VERSION}");
    let _ = writeln!(out, "command: realizer");
    let _ = writeln!(out, "input: {input}");
    let _ = writeln!(out, "n: {}", report.graph.n());
    for v in &report.verdicts {
        let cert_ref = v
            .certificate
            .as_ref()
            .map(|c| format!(" cert={}", c.provenance()))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "p={:<2} {:<8} reason={} nodes={}{}",
            v.p,
            v.status.to_string(),
            reason_token(&v.reason),
            v.nodes,
            cert_ref
        );
    }
    let _ = writeln!(out, "elapsed-ms: {elapsed_ms}");
    if !report.yes_set_is_initial_interval() {
        let _ = writeln!(
            out,
            "note: YES set is not an initial interval -- unexpected; please report"
        );
    }
    let _ = writeln!(out, "Upsilon = {}", upsilon_set(report));
    out
}

pub fn realizer_kv(input: &str, report: &RealizerReport, elapsed_ms: u128) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "format={KV_FORMAT_VERSION}");
    let _ = writeln!(out, "command=realizer");
    let _ = writeln!(out, "input={input}");
    let _ = writeln!(out, "n={}", report.graph.n());
    for v in &report.verdicts {
        let _ = writeln!(out, "p.{}.status={}", v.p, v.status);
        let _ = writeln!(out, "p.{}.reason={}", v.p, reason_token(&v.reason));
        let _ = writeln!(out, "p.{}.nodes={}", v.p, v.nodes);
        if let Some(cert) = &v.certificate {
            let _ = writeln!(out, "p.{}.certificate={}", v.p, cert.provenance());
        }
    }
    let _ = writeln!(out, "elapsed_ms={elapsed_ms}");
    let _ = writeln!(out, "interval={}", report.yes_set_is_initial_interval());
    let _ = writeln!(out, "upsilon={}", upsilon_set(report));
    out
}

pub fn exit_code_for(status: Status) -> i32 {
    match status {
        Status::Yes => 0,
        Status::No => 1,
        Status::Unknown => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcomp_core::family;
    use pcomp_core::solver::{realizer, SearchBudget};

    #[test]
    fn realizer_text_has_version_and_upsilon() {
        let report = realizer(&family::star(4), &SearchBudget::default());
        let text = realizer_text("star4.g", &report, 0);
        assert!(text.starts_with(TEXT_FORMAT_VERSION));
        assert!(text.contains("Upsilon = {1,2,3,4}"));
    }

    #[test]
    fn realizer_kv_statuses() {
        let report = realizer(&family::path(4), &SearchBudget::default());
        let kv = realizer_kv("p4.g", &report, 0);
        assert!(kv.contains("p.1.status=YES"));
        assert!(kv.contains("p.4.status=NO"));
        assert!(kv.contains("upsilon={1,2}"));
    }
}
