//! `dcl` — build, audit, export, and independently verify graphs in which
//! no two cycles share a length.
//!
//! Exit codes: 0 success/verified, 1 verification or runtime failure,
//! 2 usage/parameter error.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dcl_core::{
    descriptor_at, enumerate_cycles, has_distinct_cycle_lengths, index_set_summary, kind_counts,
    max_edges_distinct_cycles, read_edge_list, stream_edges, stream_subgraph, validate_params,
    verify, CycleSpectrum, DistinctVerdict, Error, ExtremalResult, Graph, IndexSetInfo, KindCounts,
    Mode, ParamInput, Params, StreamSummary,
};
use serde_json::json;

/// Environment variable naming the default output directory.
const OUT_DIR_ENV: &str = "DCL_OUT_DIR";
const DEFAULT_CYCLE_CAP: usize = 1_000_000;
const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;
const DEFAULT_VERTEX_CAP: usize = dcl_core::DEFAULT_VERTEX_CAP;

#[derive(Parser)]
#[command(
    name = "dcl",
    version,
    about = "distinct-cycle-length graph construction toolkit"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summarize the subgraph catalog for an instance.
    Catalog {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value = "text", value_parser = ["text", "json"])]
        format: String,
    },
    /// Audit an instance: ledger verdict, exact totals, bounds, table fidelity.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value = "text", value_parser = ["text", "json"])]
        format: String,
        /// Also write the full JSON report to a file.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also dump the complete cycle ledger (CSV if the name ends in
        /// .csv, JSON otherwise).
        #[arg(long)]
        ledger: Option<PathBuf>,
    },
    /// Export an edge list (one subgraph, or the full graph streamed).
    Export {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Export the single subgraph with this index.
        #[arg(long, conflicts_with = "full")]
        subgraph: Option<u64>,
        /// Stream the entire instance (the file has ~n lines).
        #[arg(long)]
        full: bool,
        /// Output path (default: derived name under $DCL_OUT_DIR or cwd).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the cycle oracle on a file, a built-in fixture, or the
    /// exhaustive extremal search.
    Oracle {
        /// Edge-list file to analyze.
        #[arg(long, conflicts_with_all = ["fixture", "fn_n"])]
        input: Option<PathBuf>,
        /// Built-in fixture: triangle | k4 | theta.
        #[arg(long, conflicts_with = "fn_n")]
        fixture: Option<String>,
        /// Exhaustive search for the given vertex count (3..=8).
        #[arg(long = "fn")]
        fn_n: Option<u64>,
        /// Stop enumerating after this many cycles.
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap: usize,
        /// Candidate-graph budget for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Refuse to load graphs with more vertices than this.
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
        #[arg(long, default_value = "json", value_parser = ["text", "json"])]
        format: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SizeArg {
    /// Canonical size parameter; t = 1260r + 169.
    #[arg(long)]
    r: Option<u64>,
    /// The edge-gain parameter directly (odd; canonical form unless --relaxed).
    #[arg(long)]
    t: Option<u64>,
}

#[derive(Args)]
struct InstanceArgs {
    #[command(flatten)]
    size: SizeArg,
    /// Vertex budget (default: the minimum n_t).
    #[arg(long)]
    n: Option<u128>,
    /// Accounting mode: strict | simple.
    #[arg(long, default_value = "strict")]
    mode: String,
    /// Accept any odd t >= 801 that passes the range checks.
    #[arg(long)]
    relaxed: bool,
}

impl InstanceArgs {
    fn params(&self) -> Result<Params, Error> {
        let input = match (self.size.r, self.size.t) {
            (Some(r), None) => ParamInput::R(r),
            (None, Some(t)) => ParamInput::T(t),
            _ => unreachable!("clap group enforces exactly one"),
        };
        let mode: Mode = self.mode.parse().map_err(Error::BadEdgeList)?;
        validate_params(input, self.n, mode, self.relaxed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::EvenT(_)
                | Error::TooSmallT { .. }
                | Error::BudgetTooSmall { .. }
                | Error::NotCanonicalForm(_)
                | Error::OutOfRange(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Catalog { instance, format } => {
            let params = instance.params()?;
            cmd_catalog(&params, &format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            instance,
            format,
            output,
            ledger,
        } => {
            let params = instance.params()?;
            cmd_verify(&params, &format, output.as_deref(), ledger.as_deref())
        }
        Cmd::Export {
            instance,
            subgraph,
            full,
            output,
        } => {
            let params = instance.params()?;
            cmd_export(&params, subgraph, full, output)
        }
        Cmd::Oracle {
            input,
            fixture,
            fn_n,
            cap,
            budget,
            vertex_cap,
            format,
        } => cmd_oracle(input, fixture, fn_n, cap, budget, vertex_cap, &format),
    }
}

// ---- catalog ---------------------------------------------------------------

fn cmd_catalog(params: &Params, format: &str) {
    let counts: KindCounts = kind_counts(params.t, params.mode);
    let sets: Vec<IndexSetInfo> = index_set_summary(params.t);
    if format == "json" {
        let report = json!({
            "schemaVersion": dcl_core::verify::REPORT_SCHEMA_VERSION,
            "params": params,
            "counts": counts,
            "indexSets": sets,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
        return;
    }
    let r = params.r.map_or("-".to_string(), |r| r.to_string());
    println!(
        "t = {} (r = {r}), n = {}, n_t = {}, mode = {}",
        params.t, params.n, params.n_t, params.mode
    );
    println!(
        "descriptors: {} total = {} plain + {} three-cycle-odd + {} three-cycle-even + {} three-cycle-shift + {} ten-chord + {} tail",
        counts.total,
        counts.plain_cycle,
        counts.three_cycle_odd,
        counts.three_cycle_even,
        counts.three_cycle_shift,
        counts.ten_chord,
        counts.tail_path,
    );
    println!("index sets:");
    for s in sets {
        println!(
            "  {:<32} first {:>12}  last {:>12}  step {}  len {}",
            s.label, s.first, s.last, s.step, s.len
        );
    }
}

// ---- verify ----------------------------------------------------------------

fn cmd_verify(
    params: &Params,
    format: &str,
    output: Option<&Path>,
    ledger: Option<&Path>,
) -> Result<ExitCode, Error> {
    let report = verify(params)?;
    let json_text = serde_json::to_string_pretty(&report).expect("serializable");
    if let Some(path) = output {
        let path = resolve_output(path);
        write_text(&path, &json_text)?;
        eprintln!("report written to {}", path.display());
    }
    if let Some(path) = ledger {
        let path = resolve_output(path);
        let full = dcl_core::build_ledger(params)?;
        let text = if path.extension().is_some_and(|e| e == "csv") {
            full.to_csv()
        } else {
            serde_json::to_string_pretty(&full).expect("serializable")
        };
        write_text(&path, text.trim_end())?;
        eprintln!("ledger written to {}", path.display());
    }
    if format == "json" {
        println!("{json_text}");
    } else {
        println!(
            "t = {}, n = {}, mode = {}",
            report.params.t, report.params.n, report.params.mode
        );
        println!(
            "vertices = {}  edges = {}  edges - vertices = {} (expected {})  [{}]",
            report.totals.vertices,
            report.totals.edges,
            report.edge_gain,
            report.expected_edge_gain,
            ok(report.edge_gain_ok)
        );
        println!(
            "cycle rank = {} (expected {})  [{}]",
            report.totals.cycle_rank,
            report.expected_cycle_rank,
            ok(report.cycle_rank_ok)
        );
        println!(
            "n_t closed form = {}  by summation = {}  [{}]",
            report.n_t_closed_form,
            report.n_t_summed,
            ok(report.n_t_ok)
        );
        match &report.verdict {
            dcl_core::Verdict::Distinct => {
                println!(
                    "ledger: {} entries, all lengths distinct  [ok]",
                    report.ledger_entries
                )
            }
            dcl_core::Verdict::Collisions { collisions } => {
                println!(
                    "ledger: {} entries, {} collisions  [FAIL]",
                    report.ledger_entries,
                    collisions.len()
                );
                for c in collisions.iter().take(20) {
                    println!("  length {} from subgraphs {:?}", c.length, c.sources);
                }
            }
        }
        println!(
            "table fidelity: {}/66 rows match{}",
            report.table.matches,
            if report.table.is_exact() {
                ""
            } else {
                " (see JSON report for mismatches)"
            },
        );
        println!(
            "bounds: lower = {}  ratio = {:.6}  shi(n) = {}  limit = {:.6}",
            report.bound.lower_bound,
            report.bound.ratio,
            report.bound.shi_bound,
            report.bound.limit_constant
        );
        println!("verdict: {}", if report.passed { "PASS" } else { "FAIL" });
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

// ---- export ----------------------------------------------------------------

fn cmd_export(
    params: &Params,
    subgraph: Option<u64>,
    full: bool,
    output: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let (path, summary): (PathBuf, StreamSummary) = match (subgraph, full) {
        (Some(index), false) => {
            let d = descriptor_at(params, index).ok_or_else(|| {
                Error::BadEdgeList(format!(
                    "index {index} is not in the catalog for t={}",
                    params.t
                ))
            })?;
            let path =
                resolve_output(&output.unwrap_or_else(|| {
                    PathBuf::from(format!("edges-t{}-b{}.txt", params.t, index))
                }));
            let file = File::create(&path).map_err(io_err)?;
            let summary = stream_subgraph(params, &d, BufWriter::new(file))?;
            (path, summary)
        }
        (None, true) => {
            let path = resolve_output(
                &output.unwrap_or_else(|| PathBuf::from(format!("edges-t{}-full.txt", params.t))),
            );
            let file = File::create(&path).map_err(io_err)?;
            let summary = stream_edges(params, BufWriter::new(file))?;
            (path, summary)
        }
        _ => {
            return Err(Error::BadEdgeList(
                "pass exactly one of --subgraph <index> or --full".into(),
            ))
        }
    };
    let report = json!({
        "schemaVersion": dcl_core::verify::REPORT_SCHEMA_VERSION,
        "path": path.display().to_string(),
        "summary": summary,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(ExitCode::SUCCESS)
}

// ---- oracle ----------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn cmd_oracle(
    input: Option<PathBuf>,
    fixture: Option<String>,
    fn_n: Option<u64>,
    cap: usize,
    budget: u64,
    vertex_cap: usize,
    format: &str,
) -> Result<ExitCode, Error> {
    if let Some(n) = fn_n {
        let result: ExtremalResult = max_edges_distinct_cycles(n, budget)?;
        if format == "json" {
            let report = json!({
                "schemaVersion": dcl_core::verify::REPORT_SCHEMA_VERSION,
                "extremal": result,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
        } else {
            println!(
                "f({n}) {} {} ({}; {} graphs examined; witness spectrum {:?})",
                if result.exhaustive { "=" } else { ">=" },
                result.max_edges,
                if result.exhaustive {
                    "exhaustive"
                } else {
                    "budget exhausted"
                },
                result.graphs_examined,
                result.witness_spectrum,
            );
        }
        return Ok(ExitCode::SUCCESS);
    }

    let (graph, source): (Graph, String) = if let Some(path) = input {
        let file = File::open(&path).map_err(io_err)?;
        let (graph, _meta) = read_edge_list(BufReader::new(file), vertex_cap)?;
        (graph, path.display().to_string())
    } else if let Some(name) = fixture {
        (fixture_graph(&name)?, format!("fixture:{name}"))
    } else {
        return Err(Error::BadEdgeList(
            "pass one of --input, --fixture, or --fn".into(),
        ));
    };

    let spectrum: CycleSpectrum = enumerate_cycles(&graph, cap);
    let distinct: DistinctVerdict = has_distinct_cycle_lengths(&graph, cap);
    if format == "json" {
        let report = json!({
            "schemaVersion": dcl_core::verify::REPORT_SCHEMA_VERSION,
            "source": source,
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "spectrum": spectrum,
            "verdict": distinct,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        println!(
            "{source}: {} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        );
        println!(
            "cycles: {}{}",
            spectrum.cycle_count,
            if spectrum.truncated {
                " (truncated at cap)"
            } else {
                ""
            }
        );
        let shown = spectrum.lengths.iter().take(20).collect::<Vec<_>>();
        println!(
            "lengths: {shown:?}{}",
            if spectrum.lengths.len() > 20 {
                " ..."
            } else {
                ""
            }
        );
        match distinct {
            DistinctVerdict::Yes => println!("distinct: yes"),
            DistinctVerdict::Unknown => println!("distinct: unknown (truncated)"),
            DistinctVerdict::No {
                length,
                first,
                second,
            } => {
                println!("distinct: no (two cycles of length {length})");
                println!("  first:  {first:?}");
                println!("  second: {second:?}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn fixture_graph(name: &str) -> Result<Graph, Error> {
    match name {
        "triangle" => Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]),
        "k4" => Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "theta" => Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (1, 4), (3, 4), (0, 3)]),
        other => Err(Error::BadEdgeList(format!(
            "unknown fixture '{other}' (expected triangle|k4|theta)"
        ))),
    }
}

// ---- plumbing ---------------------------------------------------------------

/// Relative paths land in `$DCL_OUT_DIR` when it is set.
fn resolve_output(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(OUT_DIR_ENV) {
            return PathBuf::from(dir).join(path);
        }
    }
    path.to_path_buf()
}

fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    let mut f = File::create(path).map_err(io_err)?;
    f.write_all(text.as_bytes()).map_err(io_err)?;
    f.write_all(b"\n").map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e)
}
