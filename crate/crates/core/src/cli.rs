//! The `hypersupport` command-line tool.
//!
//! Results go to stdout as JSON, diagnostics to stderr. Exit status is 0 when
//! a question was decided, 2 when a budget ran out, and 1 on bad input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::dot::export_dot;
use crate::error::{Error, Result};
use crate::glueing::compute_signature;
use crate::instances;
use crate::io::{
    bipartition_to_json, certificate_to_json, embedding_to_json, graph_to_json, hypergraph_to_json, parse_bipartition,
    parse_graph, parse_hypergraph, read_to_string,
};
use crate::kernel::{psi_log2, rule1_apply, PsiThreshold};
use crate::planegeom::{is_planar, outerplanarity_number, Outerplanarity};
use crate::supports::{is_support, search_support, LayerBound, SearchConfig, SearchOutcome};
use crate::{Budget, Hypergraph, SimpleGraph};

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;

/// Environment variable holding the default search budget.
pub const BUDGET_ENV: &str = "HYPERSUPPORT_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "hypersupport", version, about = "Planar and r-outerplanar supports of hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BudgetArg {
    /// Search-node expansions allowed before answering "unknown".
    #[arg(long, env = BUDGET_ENV, default_value_t = crate::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether a graph is a support of a hypergraph.
    CheckSupport { hypergraph: PathBuf, graph: PathBuf },
    /// Apply the twin-class reduction rule exhaustively.
    Kernelize {
        hypergraph: PathBuf,
        #[arg(long)]
        r: u64,
        /// Use a small explicit class-size threshold (output is not the exact rule).
        #[arg(long, value_name = "N")]
        threshold_override: Option<u64>,
    },
    /// Exhaustively search for a planar or r-outerplanar support.
    FindSupport {
        hypergraph: PathBuf,
        #[arg(long, conflicts_with = "planar_only", required_unless_present = "planar_only")]
        r: Option<usize>,
        #[arg(long)]
        planar_only: bool,
        #[command(flatten)]
        budget: BudgetArg,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Log per-level search counters to stderr as JSON lines.
        #[arg(long)]
        verbose: bool,
    },
    /// Compute the minimum number of layers over all plane embeddings.
    Outerplanarity {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Compute the signature of an edge bipartition of a support.
    Signature { hypergraph: PathBuf, graph: PathBuf, bipartition: PathBuf },
    /// Print a generated instance.
    Gen {
        #[command(subcommand)]
        instance: GenCommand,
    },
    /// Render a graph in Graphviz DOT.
    ExportDot {
        graph: PathBuf,
        /// Colour edges and label vertices by the hyperedges of this hypergraph.
        #[arg(long)]
        hypergraph: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// The twelve-vertex hypergraph with twins t and t'.
    Fig2,
    /// Its drawn support with the transcribed embedding.
    Fig2Support,
    /// Copies of the twelve-vertex hypergraph joined through `vstar`.
    #[command(name = "appendixA")]
    AppendixA {
        #[arg(long)]
        ell: usize,
        /// Print the matching planar support instead.
        #[arg(long)]
        support: bool,
    },
    /// A seeded random connected hypergraph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_edge_size: usize,
    },
}

/// Runs the tool on the process arguments.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the tool on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_DECIDED };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{v}")?;
    Ok(())
}

fn load_hypergraph(path: &PathBuf, err: &mut dyn Write) -> Result<Hypergraph> {
    let (h, report) = parse_hypergraph(&read_to_string(path)?)?;
    if report.dropped() > 0 {
        writeln!(
            err,
            "note: dropped {} hyperedges of size < 2 and {} duplicates",
            report.dropped_small, report.dropped_duplicate
        )?;
    }
    Ok(h)
}

fn load_graph(path: &PathBuf) -> Result<SimpleGraph> {
    Ok(parse_graph(&read_to_string(path)?)?.graph)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::CheckSupport { hypergraph, graph } => {
            let h = load_hypergraph(&hypergraph, err)?;
            let g = load_graph(&graph)?;
            emit(out, &json!({ "is_support": is_support(&g, &h)? }))?;
            Ok(EXIT_DECIDED)
        }
        Command::Kernelize { hypergraph, r, threshold_override } => {
            let h = load_hypergraph(&hypergraph, err)?;
            if r < 1 {
                return Err(Error::Domain("--r must be at least 1".into()));
            }
            let threshold = match threshold_override {
                Some(t) => {
                    writeln!(err, "warning: threshold overridden to {t}; this is not the exact reduction rule")?;
                    PsiThreshold::Override(t)
                }
                None => PsiThreshold::ExactLog2,
            };
            let (reduced, log) = rule1_apply(&h, r, threshold);
            for removal in &log {
                emit(out, &serde_json::to_value(removal)?)?;
            }
            let threshold_json = match threshold {
                PsiThreshold::ExactLog2 if h.m() > 0 => json!({ "log2_psi": psi_log2(h.m() as u64, r)?.to_string() }),
                PsiThreshold::ExactLog2 => json!({ "log2_psi": null }),
                PsiThreshold::Override(t) => json!({ "override": t }),
            };
            emit(
                out,
                &json!({
                    "exact_threshold": threshold_override.is_none(),
                    "threshold": threshold_json,
                    "removed": log.len(),
                    "hypergraph": hypergraph_to_json(&reduced),
                }),
            )?;
            Ok(EXIT_DECIDED)
        }
        Command::FindSupport { hypergraph, r, planar_only, budget, jobs, verbose } => {
            let h = load_hypergraph(&hypergraph, err)?;
            let bound = match (r, planar_only) {
                (_, true) => LayerBound::PlanarOnly,
                (Some(r), false) => LayerBound::Layers(r),
                (None, false) => return Err(Error::Input("one of --r or --planar-only is required".into())),
            };
            let log = |s: &crate::supports::LevelStats| {
                eprintln!("{}", serde_json::to_string(s).expect("serialisable"));
            };
            let config = SearchConfig {
                budget: budget.budget,
                jobs: jobs.max(1),
                on_level: if verbose { Some(&log) } else { None },
                ..SearchConfig::default()
            };
            let report = search_support(&h, bound, &config)?;
            let stats = serde_json::to_value(&report.stats)?;
            let (result, support, code) = match &report.outcome {
                SearchOutcome::Found(c) => ("found", certificate_to_json(c), EXIT_DECIDED),
                SearchOutcome::None => ("none", Value::Null, EXIT_DECIDED),
                SearchOutcome::Unknown => ("unknown", Value::Null, EXIT_UNKNOWN),
            };
            emit(out, &json!({ "result": result, "support": support, "stats": stats }))?;
            Ok(code)
        }
        Command::Outerplanarity { graph, budget } => {
            let g = load_graph(&graph)?;
            if !is_planar(&g) {
                emit(out, &json!({ "result": "nonplanar" }))?;
                return Ok(EXIT_DECIDED);
            }
            let mut b = Budget::new(budget.budget);
            match outerplanarity_number(&g, &mut b)? {
                Outerplanarity::Exact { layers, witness } => {
                    emit(
                        out,
                        &json!({ "result": "exact", "layers": layers, "embedding": embedding_to_json(&witness) }),
                    )?;
                    Ok(EXIT_DECIDED)
                }
                Outerplanarity::Unknown { best_bound, witness } => {
                    emit(
                        out,
                        &json!({ "result": "unknown", "best_bound": best_bound, "embedding": embedding_to_json(&witness) }),
                    )?;
                    Ok(EXIT_UNKNOWN)
                }
            }
        }
        Command::Signature { hypergraph, graph, bipartition } => {
            let h = load_hypergraph(&hypergraph, err)?;
            let g = load_graph(&graph)?;
            let bp = parse_bipartition(&g, &read_to_string(&bipartition)?)?;
            let sig = compute_signature(&h, &g, &bp, &h.twin_partition())?;
            emit(out, &json!({ "bipartition": bipartition_to_json(&bp), "signature": sig.to_json() }))?;
            Ok(EXIT_DECIDED)
        }
        Command::Gen { instance } => {
            let v = match instance {
                GenCommand::Fig2 => hypergraph_to_json(&instances::figure2_hypergraph()),
                GenCommand::Fig2Support => embedding_to_json(&instances::figure2_support().1),
                GenCommand::AppendixA { ell, support: false } => {
                    hypergraph_to_json(&instances::appendix_a_family(ell)?)
                }
                GenCommand::AppendixA { ell, support: true } => graph_to_json(&instances::appendix_a_support(ell)?),
                GenCommand::Random { n, m, seed, max_edge_size } => {
                    hypergraph_to_json(&instances::random_hypergraph(n, m, max_edge_size, seed)?)
                }
            };
            emit(out, &v)?;
            Ok(EXIT_DECIDED)
        }
        Command::ExportDot { graph, hypergraph } => {
            let g = load_graph(&graph)?;
            let h = hypergraph.map(|p| load_hypergraph(&p, err)).transpose()?;
            out.write_all(export_dot(&g, h.as_ref()).as_bytes())?;
            Ok(EXIT_DECIDED)
        }
    }
}
