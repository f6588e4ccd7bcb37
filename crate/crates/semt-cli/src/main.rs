//! `semt` — construct, verify, bound, search, and sweep super edge-magic
//! total labelings of unicyclic graphs `G(n;k1,…,kn)`.
//!
//! Results go to stdout as JSON (DOT for `export-dot`); diagnostics go to
//! stderr. Exit codes: 0 success, 1 domain failure (constraint violations,
//! invalid labelings, budget exhaustion), 2 usage errors.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use semt::bounds::{strength_bounds, family_upper_min_rotation, StrengthBounds};
use semt::constructions::FamilyKind;
use semt::document::LabelingDocument;
use semt::dot::export_dot;
use semt::graph::{build_unicyclic, GraphError, UnicyclicFamily};
use semt::labeling::verify_semt;
use semt::search::{
    conjecture_sweep, search_exact_strength, LayerStatus, SearchConfig, SearchStatus,
    DEFAULT_NODE_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "semt",
    version,
    about = "Super edge-magic total labelings of unicyclic graphs"
)]
struct Cli {
    /// Optional key=value config file providing defaults for budget,
    /// workers and format. Flags always win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Produce a closed-form labeling as a JSON document
    Label {
        #[command(subcommand)]
        kind: LabelKind,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a labeling document against the SEMT conditions
    Verify {
        /// Labeling JSON ("-" or absent reads stdin)
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact strength bounds for a family
    Bounds {
        /// Family descriptor "n;k1,k2,...,kn"
        #[arg(long)]
        family: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Determine the exact strength by complete search
    Search {
        #[arg(long)]
        family: String,
        /// Node budget per feasibility probe
        #[arg(long)]
        budget: Option<u64>,
        /// Concurrent probes over candidate minimum sums
        #[arg(long)]
        workers: Option<usize>,
        /// Override the lower end of the probed range
        #[arg(long)]
        s_lo: Option<i64>,
        /// Override the upper end of the probed range
        #[arg(long)]
        s_hi: Option<i64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search every canonical family in range and compare against the
    /// conjectured strength 2q + (n+3)/2
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        pendant_sum_max: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
        /// Path prefix: writes `<prefix>.jsonl` and `<prefix>.csv`
        #[arg(long)]
        output: Option<PathBuf>,
        /// Stream format on stdout when no --output is given
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Render a verified labeling as Graphviz DOT
    ExportDot {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LabelKind {
    /// G(n;k,…,k,k+c): surplus pendants at the last cycle vertex
    GPlus(SurplusArgs),
    /// G(n;k,…,k,k-c): deficit pendants at the last cycle vertex
    GMinus(DeficitArgs),
    /// G(n;k,r): one extra pendant at positions r and n-r (r odd)
    GSym(TwinArgs),
    /// G(n;k,…,k): equal pendant counts
    EqualK(EqualArgs),
    /// Bare odd cycle C_n
    Cycle(CycleArgs),
}

#[derive(Args)]
struct SurplusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    c: usize,
}

#[derive(Args)]
struct DeficitArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    c: usize,
}

#[derive(Args)]
struct TwinArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
}

#[derive(Args)]
struct EqualArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct CycleArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

/// Domain failures exit 1, usage failures exit 2.
enum CliError {
    Domain(anyhow::Error),
    Usage(anyhow::Error),
}

impl CliError {
    fn domain(err: impl Into<anyhow::Error>) -> Self {
        CliError::Domain(err.into())
    }

    fn usage(err: impl Into<anyhow::Error>) -> Self {
        CliError::Usage(err.into())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Defaults loadable from a `key = value` config file.
#[derive(Default)]
struct Defaults {
    budget: Option<u64>,
    workers: Option<usize>,
    format: Option<Format>,
}

fn load_defaults(path: Option<&Path>) -> CliResult<Defaults> {
    let mut defaults = Defaults::default();
    let Some(path) = path else {
        return Ok(defaults);
    };
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))
        .map_err(CliError::usage)?;
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::usage(anyhow!("config line {}: expected key=value", line_no + 1))
        })?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "budget" => {
                defaults.budget = Some(value.parse().map_err(|_| {
                    CliError::usage(anyhow!("config line {}: bad budget {value:?}", line_no + 1))
                })?)
            }
            "workers" => {
                defaults.workers = Some(value.parse().map_err(|_| {
                    CliError::usage(anyhow!(
                        "config line {}: bad workers {value:?}",
                        line_no + 1
                    ))
                })?)
            }
            "format" => {
                defaults.format = Some(match value {
                    "json" => Format::Json,
                    "csv" => Format::Csv,
                    "dot" => Format::Dot,
                    other => {
                        return Err(CliError::usage(anyhow!(
                            "config line {}: unknown format {other:?}",
                            line_no + 1
                        )))
                    }
                })
            }
            other => {
                return Err(CliError::usage(anyhow!(
                    "config line {}: unknown key {other:?}",
                    line_no + 1
                )))
            }
        }
    }
    Ok(defaults)
}

fn parse_family(text: &str) -> CliResult<UnicyclicFamily> {
    text.parse::<UnicyclicFamily>().map_err(|err| match err {
        GraphError::BadDescriptor { .. } => CliError::usage(err),
        other => CliError::domain(other),
    })
}

fn read_input(input: Option<&Path>) -> CliResult<String> {
    match input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))
            .map_err(CliError::domain),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("cannot read stdin")
                .map_err(CliError::domain)?;
            Ok(text)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(CliError::domain),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn search_config(
    budget: Option<u64>,
    workers: Option<usize>,
    s_range: Option<(i64, i64)>,
    defaults: &Defaults,
) -> SearchConfig {
    SearchConfig {
        node_budget: Some(budget.or(defaults.budget).unwrap_or(DEFAULT_NODE_BUDGET)),
        s_range_override: s_range,
        parallel_width: workers.or(defaults.workers).unwrap_or(1).max(1),
    }
}

#[derive(Serialize)]
struct BoundsView {
    family: String,
    n: usize,
    p: usize,
    q: usize,
    #[serde(flatten)]
    bounds: StrengthBounds,
    /// Least general-family upper bound over rotations/reflections of the counts
    /// (an extension; the plain bound uses the given order).
    family_upper_min_rotation: i64,
}

#[derive(Serialize)]
struct LayerView {
    s: i64,
    status: LayerStatus,
}

#[derive(Serialize)]
struct SearchView {
    family: String,
    p: usize,
    q: usize,
    status: SearchStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    sm: Option<i64>,
    nodes_explored: u64,
    per_s_feasibility: Vec<LayerView>,
    bounds: StrengthBounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<LabelingDocument>,
}

fn run(cli: Cli) -> CliResult<()> {
    let defaults = load_defaults(cli.config.as_deref())?;
    match cli.command {
        Command::Label { kind, output } => {
            let kind = match kind {
                LabelKind::GPlus(a) => FamilyKind::GPlus {
                    n: a.n,
                    k: a.k,
                    c: a.c,
                },
                LabelKind::GMinus(a) => FamilyKind::GMinus {
                    n: a.n,
                    k: a.k,
                    c: a.c,
                },
                LabelKind::GSym(a) => FamilyKind::GSym {
                    n: a.n,
                    k: a.k,
                    r: a.r,
                },
                LabelKind::EqualK(a) => FamilyKind::EqualK { n: a.n, k: a.k },
                LabelKind::Cycle(a) => FamilyKind::Cycle { n: a.n },
            };
            let total = kind.label().map_err(CliError::domain)?;
            let doc = LabelingDocument::from_total(&total);
            emit(output.as_deref(), &doc.to_json_pretty())
        }
        Command::Verify { input, output } => {
            let text = read_input(input.as_deref())?;
            let doc = LabelingDocument::from_json(&text).map_err(CliError::domain)?;
            let total = doc.to_total().map_err(CliError::domain)?;
            let report = verify_semt(&total);
            let mut rendered = serde_json::to_string_pretty(&report).expect("report serializes");
            rendered.push('\n');
            emit(output.as_deref(), &rendered)?;
            if report.valid {
                Ok(())
            } else {
                for violation in &report.violations {
                    eprintln!("violation: {violation:?}");
                }
                Err(CliError::domain(anyhow!(
                    "labeling invalid: {} violation(s)",
                    report.violations.len()
                )))
            }
        }
        Command::Bounds { family, output } => {
            let family = parse_family(&family)?;
            let graph = build_unicyclic(&family);
            let view = BoundsView {
                family: family.to_string(),
                n: family.n(),
                p: graph.p(),
                q: graph.q(),
                bounds: strength_bounds(&graph),
                family_upper_min_rotation: family_upper_min_rotation(&family),
            };
            let mut rendered = serde_json::to_string_pretty(&view).expect("bounds serialize");
            rendered.push('\n');
            emit(output.as_deref(), &rendered)
        }
        Command::Search {
            family,
            budget,
            workers,
            s_lo,
            s_hi,
            output,
        } => {
            let family = parse_family(&family)?;
            let graph = build_unicyclic(&family);
            let s_range = match (s_lo, s_hi) {
                (Some(lo), Some(hi)) => Some((lo, hi)),
                (None, None) => None,
                _ => {
                    return Err(CliError::usage(anyhow!(
                        "--s-lo and --s-hi must be given together"
                    )))
                }
            };
            let config = search_config(budget, workers, s_range, &defaults);
            let result = search_exact_strength(&graph, &config).map_err(CliError::domain)?;
            let view = SearchView {
                family: family.to_string(),
                p: graph.p(),
                q: graph.q(),
                status: result.status,
                sm: result.sm,
                nodes_explored: result.nodes_explored,
                per_s_feasibility: result
                    .per_s_feasibility
                    .iter()
                    .map(|&(s, status)| LayerView { s, status })
                    .collect(),
                bounds: strength_bounds(&graph),
                witness: result.witness.as_ref().map(LabelingDocument::from_total),
            };
            let mut rendered = serde_json::to_string_pretty(&view).expect("search serializes");
            rendered.push('\n');
            emit(output.as_deref(), &rendered)?;
            match result.status {
                SearchStatus::Exact => Ok(()),
                SearchStatus::BudgetExhausted => Err(CliError::domain(anyhow!(
                    "search exhausted its node budget before settling sm"
                ))),
                SearchStatus::Infeasible => Err(CliError::domain(anyhow!(
                    "no labeling exists in the probed range"
                ))),
            }
        }
        Command::Sweep {
            n_max,
            pendant_sum_max,
            budget,
            workers,
            output,
            format,
        } => {
            if n_max % 2 == 0 {
                return Err(CliError::usage(anyhow!("--n-max must be odd")));
            }
            let config = search_config(budget, workers, None, &defaults);
            let report =
                conjecture_sweep(n_max, pendant_sum_max, &config).map_err(CliError::domain)?;
            eprintln!(
                "sweep: {} instances, {} matching, {} counterexample(s), {} indeterminate",
                report.instances.len(),
                report
                    .instances
                    .iter()
                    .filter(|i| matches!(i.outcome, semt::search::SweepOutcome::MatchesConjecture))
                    .count(),
                report.counterexamples().count(),
                report.indeterminate_count(),
            );
            match output {
                Some(prefix) => {
                    let jsonl_path = prefix.with_extension("jsonl");
                    let csv_path = prefix.with_extension("csv");
                    fs::write(&jsonl_path, report.to_jsonl())
                        .with_context(|| format!("cannot write {}", jsonl_path.display()))
                        .map_err(CliError::domain)?;
                    fs::write(&csv_path, report.to_csv())
                        .with_context(|| format!("cannot write {}", csv_path.display()))
                        .map_err(CliError::domain)?;
                    eprintln!("wrote {} and {}", jsonl_path.display(), csv_path.display());
                    Ok(())
                }
                None => match format.or(defaults.format).unwrap_or(Format::Json) {
                    Format::Json => emit(None, &report.to_jsonl()),
                    Format::Csv => emit(None, &report.to_csv()),
                    Format::Dot => Err(CliError::usage(anyhow!(
                        "sweep emits jsonl or csv, not dot"
                    ))),
                },
            }
        }
        Command::ExportDot { input, output } => {
            let text = read_input(input.as_deref())?;
            let doc = LabelingDocument::from_json(&text).map_err(CliError::domain)?;
            let total = doc.to_total().map_err(CliError::domain)?;
            let dot = export_dot(&total).map_err(|err| {
                let semt::dot::DotError::NotValid(violations) = &err;
                for violation in violations {
                    eprintln!("violation: {violation:?}");
                }
                CliError::domain(err)
            })?;
            emit(output.as_deref(), &dot)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(err)) => {
            eprintln!("usage error: {err:#}");
            ExitCode::from(2)
        }
    }
}
