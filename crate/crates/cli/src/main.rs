//! `pcomp`: decide p-competition membership, compute realizers, generate
//! family graphs with certificates, condense graphs, and re-run the
//! verification suites.
//!
//! Exit codes: 0 = YES/success, 1 = NO/failure, 2 = UNKNOWN (budget),
//! 3 = usage, parse, or IO error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use pcomp_cli::{driver, format, report, suites};
use pcomp_core::cert::{self, Certificate};
use pcomp_core::family;
use pcomp_core::solver::{SearchBudget, SolverOptions};
use pcomp_core::Graph;

#[derive(Parser)]
#[command(
    name = "pcomp",
    about = "p-competition graph decisions, realizers, and certificates",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Search node budget per graph/threshold pair.
    #[arg(long, default_value_t = pcomp_core::solver::DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Wall-clock limit in seconds per graph/threshold pair (0 = none).
    #[arg(long, default_value_t = 60)]
    timeout: u64,
    /// Worker threads for realizer searches.
    #[arg(long, env = "PCOMP_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Reproducible exploration order. Per-threshold searches are always
    /// sequential internally, so output does not depend on --jobs.
    #[arg(long, action = clap::ArgAction::Set, default_value_t = true)]
    deterministic: bool,
}

impl BudgetArgs {
    fn to_budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.max_nodes,
            time_limit_ms: (self.timeout > 0).then_some(self.timeout * 1000),
            jobs: self.jobs,
            deterministic: self.deterministic,
        }
    }
}

#[derive(Args, Clone)]
struct FormatArg {
    /// Report format.
    #[arg(long, value_parser = parse_format, default_value = "text")]
    format: report::OutputFormat,
}

fn parse_format(s: &str) -> Result<report::OutputFormat, String> {
    match s {
        "text" => Ok(report::OutputFormat::Text),
        "kv" => Ok(report::OutputFormat::Kv),
        other => Err(format!("unknown format '{other}', expected text|kv")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph admits the threshold p.
    Decide {
        /// Edge-list file.
        graph: PathBuf,
        #[arg(long)]
        p: usize,
        /// Write the witnessing matrix as a certificate file on YES.
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Per-threshold verdicts for p = 1..n and the realizer set.
    Realizer {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Generate a family graph, optionally with a certificate.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Quotient a graph by the same-closed-neighborhood relation.
    Condense {
        graph: PathBuf,
        /// Write the quotient edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file from scratch.
    VerifyCertificate { certificate: PathBuf },
    /// Run the reproduction suites.
    VerifyPaper {
        /// Suite name (see --suite help or use 'all').
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size cap override for suites that sweep a range.
        #[arg(long)]
        max_n: Option<usize>,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args, Clone)]
struct GenCommon {
    /// Output file for the edge list (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also build a certificate at this threshold.
    #[arg(long)]
    certify: Option<usize>,
    /// Where to write the certificate (requires --certify).
    #[arg(long)]
    emit_certificate: Option<PathBuf>,
}

#[derive(Subcommand, Clone)]
enum GenFamily {
    Path {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    Star {
        #[arg(long)]
        leaves: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    Caterpillar {
        /// Spine vertex count.
        #[arg(long)]
        spine: usize,
        /// Attachments `pos:count,...`, 1-indexed interior positions.
        #[arg(long, default_value = "")]
        attach: String,
        #[command(flatten)]
        common: GenCommon,
    },
    CompleteUnion {
        /// Component orders, comma separated.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[command(flatten)]
        common: GenCommon,
    },
    JoinForm {
        #[arg(long, default_value_t = 0)]
        n0: usize,
        /// Part orders, comma separated.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        isolated: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    KaryTree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        height: usize,
        #[command(flatten)]
        common: GenCommon,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("pcomp: {message}");
            ExitCode::from(3)
        }
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::try_parse().map_err(|e| {
        // clap prints its own rich message; forward it and use exit 3.
        e.print().ok();
        String::from("invalid usage")
    });
    let cli = match cli {
        Ok(c) => c,
        Err(_) => return Ok(ExitCode::from(3)),
    };
    match cli.command {
        Command::Decide {
            graph,
            p,
            emit_certificate,
            budget,
            format,
        } => cmd_decide(
            &graph,
            p,
            emit_certificate.as_deref(),
            &budget,
            format.format,
        ),
        Command::Realizer {
            graph,
            budget,
            format,
        } => cmd_realizer(&graph, &budget, format.format),
        Command::Gen { family } => cmd_gen(family),
        Command::Condense { graph, out } => cmd_condense(&graph, out.as_deref()),
        Command::VerifyCertificate { certificate } => cmd_verify_certificate(&certificate),
        Command::VerifyPaper {
            suite,
            max_n,
            seed,
            budget,
        } => cmd_verify_paper(&suite, max_n, seed, &budget),
    }
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    format::parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(path: Option<&Path>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => {
            std::fs::write(p, content).map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Certificates are re-verified immediately before writing; an unverified
/// certificate is never emitted.
fn emit_certificate(cert: &Certificate, path: &Path) -> Result<(), String> {
    let reverified =
        cert::verify(cert.clone()).map_err(|e| format!("refusing to write certificate: {e}"))?;
    std::fs::write(path, format::write_certificate(&reverified))
        .map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn cmd_decide(
    graph_path: &Path,
    p: usize,
    cert_path: Option<&Path>,
    budget_args: &BudgetArgs,
    format: report::OutputFormat,
) -> Result<ExitCode, String> {
    let g = read_graph(graph_path)?;
    if p < 1 || p > g.n() {
        return Err(format!("p must lie in 1..={}, got {p}", g.n()));
    }
    let budget = budget_args.to_budget();
    let started = Instant::now();
    let verdict = driver::decide(&g, p, &budget, &SolverOptions::default());
    let elapsed = started.elapsed().as_millis();
    let mut cert_ref = None;
    if let Some(path) = cert_path {
        if let Some(cert) = &verdict.certificate {
            emit_certificate(cert, path)?;
            cert_ref = Some(path.display().to_string());
        }
    }
    let input = graph_path.display().to_string();
    let text = match format {
        report::OutputFormat::Text => {
            report::decide_text(&input, &verdict, elapsed, cert_ref.as_deref())
        }
        report::OutputFormat::Kv => {
            report::decide_kv(&input, &verdict, elapsed, cert_ref.as_deref())
        }
    };
    print!("{text}");
    Ok(ExitCode::from(report::exit_code_for(verdict.status) as u8))
}

fn cmd_realizer(
    graph_path: &Path,
    budget_args: &BudgetArgs,
    format: report::OutputFormat,
) -> Result<ExitCode, String> {
    let g = read_graph(graph_path)?;
    let budget = budget_args.to_budget();
    let started = Instant::now();
    let rep = driver::realizer(&g, &budget, &SolverOptions::default());
    let elapsed = started.elapsed().as_millis();
    let input = graph_path.display().to_string();
    let text = match format {
        report::OutputFormat::Text => report::realizer_text(&input, &rep, elapsed),
        report::OutputFormat::Kv => report::realizer_kv(&input, &rep, elapsed),
    };
    print!("{text}");
    Ok(if rep.has_unknown() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn parse_attach(spec: &str) -> Result<Vec<usize>, String> {
    let mut attach = Vec::new();
    for item in spec.split(',').filter(|s| !s.is_empty()) {
        let (pos, count) = item
            .split_once(':')
            .ok_or_else(|| format!("bad attachment '{item}', expected pos:count"))?;
        let pos: usize = pos
            .trim()
            .parse()
            .map_err(|_| format!("bad position in '{item}'"))?;
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| format!("bad count in '{item}'"))?;
        attach.extend(std::iter::repeat_n(pos, count));
    }
    Ok(attach)
}

fn cmd_gen(family_cmd: GenFamily) -> Result<ExitCode, String> {
    let (graph, common, certificate): (Graph, GenCommon, Option<Certificate>) = match family_cmd {
        GenFamily::Path { n, common } => {
            if n < 1 {
                return Err("path needs n >= 1".into());
            }
            let cert = match common.certify {
                Some(p) => Some(cert::path_certificate(p, n).map_err(|e| e.to_string())?),
                None => None,
            };
            (family::path(n), common, cert)
        }
        GenFamily::Cycle { n, common } => {
            if n < 3 {
                return Err("cycle needs n >= 3".into());
            }
            let cert = match common.certify {
                Some(p) => Some(cert::cyclic_certificate(p, n).map_err(|e| e.to_string())?),
                None => None,
            };
            (family::cycle(n), common, cert)
        }
        GenFamily::Star { leaves, common } => {
            if leaves < 1 {
                return Err("star needs at least one leaf".into());
            }
            let cert = match common.certify {
                Some(p) => Some(cert::star_certificate(p, leaves).map_err(|e| e.to_string())?),
                None => None,
            };
            (family::star(leaves), common, cert)
        }
        GenFamily::Caterpillar {
            spine,
            attach,
            common,
        } => {
            let attach = parse_attach(&attach)?;
            let graph = family::caterpillar(spine, &attach).map_err(|e| e.to_string())?;
            let cert = match common.certify {
                Some(p) => {
                    let k = attach.len();
                    let t = p
                        .checked_sub(k)
                        .ok_or_else(|| format!("threshold {p} below pendant count {k}"))?;
                    Some(
                        cert::caterpillar_certificate(spine, t, &attach)
                            .map_err(|e| e.to_string())?,
                    )
                }
                None => None,
            };
            (graph, common, cert)
        }
        GenFamily::CompleteUnion { sizes, common } => {
            if sizes.is_empty() {
                return Err("complete-union needs at least one component".into());
            }
            let cert = match common.certify {
                Some(p) => {
                    Some(cert::complete_union_certificate(&sizes, p).map_err(|e| e.to_string())?)
                }
                None => None,
            };
            (family::complete_union(&sizes), common, cert)
        }
        GenFamily::JoinForm {
            n0,
            parts,
            isolated,
            common,
        } => {
            let n = n0 + parts.iter().sum::<usize>() + isolated;
            if n == 0 {
                return Err("join-form needs at least one vertex".into());
            }
            let cert = match common.certify {
                Some(p) if p == n.saturating_sub(1) => Some(
                    cert::join_form_certificate(n0, &parts, isolated).map_err(|e| e.to_string())?,
                ),
                Some(p) => {
                    return Err(format!(
                        "join-form certifies only p = n-1 = {}, got {p}",
                        n.saturating_sub(1)
                    ))
                }
                None => None,
            };
            (family::join_form(n0, &parts, isolated), common, cert)
        }
        GenFamily::KaryTree { k, height, common } => {
            if k < 1 {
                return Err("k-ary tree needs k >= 1".into());
            }
            if common.certify.is_some() {
                return Err("k-ary trees have no closed-form certificate here; use decide".into());
            }
            (family::kary_tree(k, height), common, None)
        }
    };
    write_out(common.out.as_deref(), &format::write_edge_list(&graph))?;
    if let Some(cert) = certificate {
        let path = common
            .emit_certificate
            .ok_or("certificate requested; add --emit-certificate PATH")?;
        emit_certificate(&cert, &path)?;
    } else if common.emit_certificate.is_some() {
        return Err("--emit-certificate requires --certify".into());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_condense(graph_path: &Path, out: Option<&Path>) -> Result<ExitCode, String> {
    let g = read_graph(graph_path)?;
    let (quotient, partition) = g.condensation();
    write_out(out, &format::write_edge_list(&quotient))?;
    for (i, block) in partition.blocks.iter().enumerate() {
        let members: Vec<String> = block.iter().map(|v| (v + 1).to_string()).collect();
        eprintln!("class {}: {}", i + 1, members.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_certificate(path: &Path) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    match format::parse_certificate(&text) {
        Ok(cert) => {
            println!(
                "valid: order {} threshold {} provenance '{}'",
                cert.graph().n(),
                cert.p(),
                cert.provenance()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify_paper(
    suite: &str,
    max_n: Option<usize>,
    seed: u64,
    budget_args: &BudgetArgs,
) -> Result<ExitCode, String> {
    let opts = suites::SuiteOptions {
        max_n,
        seed,
        budget: budget_args.to_budget(),
    };
    let results = suites::run_suite(suite, &opts).ok_or_else(|| {
        format!(
            "unknown suite '{suite}'; available: {}",
            suites::SUITE_NAMES.join(", ")
        )
    })?;
    let mut all_pass = true;
    for r in &results {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", r.name, r.detail);
        all_pass &= r.pass;
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
