mod cache;
mod report;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cache::Cache;
use curvecount::graph::{catalog, catalog_names, Catalog, ENUMERATION_GUARD};
use curvecount::verify::{self, SuiteOptions};
use curvecount::Multigraph;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: curvecount::Error },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] curvecount::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "curvecount", version, about = "Exact invariants of nodal curves from their dual graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical invariants, classes and series of one graph.
    Invariants {
        /// Graph JSON file or catalog name.
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Recompute even if a cached report exists, and do not store it.
        #[arg(long)]
        no_cache: bool,
    },
    /// Run identity checks; exits 1 if any check fails.
    Verify {
        /// Graph JSON files or catalog names; the whole catalog if omitted.
        graphs: Vec<String>,
        /// Check names, comma separated or repeated, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        check: Vec<String>,
        /// Number of seeded random connected multigraphs to add.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge bound for random graphs.
        #[arg(long, default_value_t = 10)]
        max_edges: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Record per-check wall time in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Print a graph as canonical JSON.
    Export {
        graph: String,
    },
    /// List the built-in graphs, plus any graph files given.
    Catalog {
        files: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn read_graph_file(path: &Path) -> Result<Multigraph, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    Multigraph::from_json(&text).map_err(|source| CliError::Parse { path: shown, source })
}

/// A file path if one exists, else a catalog name.
fn load_graph(arg: &str) -> Result<(String, Multigraph), CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok((arg.to_string(), read_graph_file(path)?));
    }
    match catalog(arg) {
        Ok(g) => Ok((arg.to_string(), g)),
        Err(_) if arg.ends_with(".json") || arg.contains(std::path::MAIN_SEPARATOR) => Err(CliError::Io {
            path: arg.to_string(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
        }),
        Err(e) => Err(e.into()),
    }
}

fn cmd_invariants(graph: &str, format: Format, no_cache: bool) -> Result<String, CliError> {
    let (label, g) = load_graph(graph)?;
    let kind = match format {
        Format::Text => "invariants-text",
        Format::Json => "invariants-json",
    };
    let cache = if no_cache { None } else { Cache::from_env() };
    let key = Cache::key(&format!("{label}\n{}", g.to_json()), kind);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(hit);
    }
    let r = report::build(&label, &g);
    let out = match format {
        Format::Text => report::render_text(&r),
        Format::Json => report::render_json(&r),
    };
    if let Some(cache) = &cache {
        // A cache that cannot be written only costs recomputation.
        let _ = cache.put(&key, &out);
    }
    Ok(out)
}

struct VerifyArgs {
    graphs: Vec<String>,
    check: Vec<String>,
    random: usize,
    seed: u64,
    max_edges: usize,
    format: Format,
    timings: bool,
}

fn cmd_verify(a: VerifyArgs) -> Result<(String, bool), CliError> {
    if a.max_edges > ENUMERATION_GUARD {
        return Err(CliError::Usage(format!(
            "--max-edges {} exceeds the enumeration guard of {ENUMERATION_GUARD}",
            a.max_edges
        )));
    }
    let names: Vec<String> = a.check.iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    verify::resolve_checks(&names)?;
    let graphs = if a.graphs.is_empty() {
        catalog_names().iter().map(|&n| load_graph(n)).collect::<Result<Vec<_>, _>>()?
    } else {
        a.graphs.iter().map(|s| load_graph(s)).collect::<Result<Vec<_>, _>>()?
    };
    let options = SuiteOptions {
        seed: a.seed,
        random: a.random,
        max_edges: a.max_edges,
        timings: a.timings,
        ..SuiteOptions::default()
    };
    let results = verify::run_suite(&graphs, &names, &options)?;
    let ok = verify::tally(&results).fail == 0;
    let out = match a.format {
        Format::Text => verify::render_text(&results),
        Format::Json => format!("{}\n", verify::render_json(&results)),
    };
    Ok((out, ok))
}

fn cmd_catalog(files: &[String], format: Format) -> Result<String, CliError> {
    let mut cat = Catalog::builtin();
    for file in files {
        let path = Path::new(file);
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| file.clone());
        cat.insert(name, read_graph_file(path)?)?;
    }
    let rows: Vec<(&str, &Multigraph)> = cat.iter().collect();
    Ok(match format {
        Format::Text => {
            let width = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            rows.iter()
                .map(|(n, g)| format!("{n:<width$}  {} vertices, {} edges, genus {}\n", g.vertex_count(), g.edge_count(), g.arithmetic_genus()))
                .collect()
        }
        Format::Json => {
            let entries: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, g)| {
                    serde_json::json!({
                        "name": n,
                        "graph": serde_json::from_str::<serde_json::Value>(&g.to_json()).expect("canonical JSON parses"),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&entries).expect("catalog serializes"))
        }
    })
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Invariants { graph, format, no_cache } => Ok((cmd_invariants(&graph, format, no_cache)?, true)),
        Command::Verify {
            graphs,
            check,
            random,
            seed,
            max_edges,
            format,
            timings,
        } => cmd_verify(VerifyArgs {
            graphs,
            check,
            random,
            seed,
            max_edges,
            format,
            timings,
        }),
        Command::Export { graph } => {
            let (_, g) = load_graph(&graph)?;
            Ok((format!("{}\n", g.to_json()), true))
        }
        Command::Catalog { files, format } => Ok((cmd_catalog(&files, format)?, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
