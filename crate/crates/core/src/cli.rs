//! The `mcgraph` command line.
//!
//! Results go to stdout as one line of JSON (indented with `--pretty`).
//! Exit codes: 0 success, 1 invalid certificate or failed verification,
//! 2 usage or input error, 3 search budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::product_graph_bounds;
use crate::certificate::theorem1_certificate;
use crate::coloring::{check_mc_coloring, EdgeColoring, McCheck};
use crate::error::Error;
use crate::graph::Graph;
use crate::mc::{mc_bounds_basic, mc_exact_with, ExactConfig, McMethod};
use crate::netfam::{generate, generate_product, Family, NetworkSpec};
use crate::product::{make_product, ProductGraph, ProductKind};
use crate::report::{proposition_report, ReportOptions};
use crate::verify::{run_suite, Suite, VerifyOptions};

/// Environment variable overriding the exact search's node limit.
pub const BUDGET_VAR: &str = "MCGRAPH_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "mcgraph", version, about = "Graph products and monochromatic connection numbers")]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a named graph or network family instance.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build the product of two graph files.
    Product {
        kind: String,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exact mc, bounds, or the Theorem 1 certificate of a graph file.
    Mc {
        mode: McMode,
        file: PathBuf,
        /// Write the witness coloring here (exact mode).
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Check that a coloring file is an MC-coloring of a graph file.
    Check { graph: PathBuf, coloring: PathBuf },
    /// Run a verification suite.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reproduce the network-family propositions.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Run the exact solver on instances up to this many vertices.
        #[arg(long, default_value_t = 12)]
        max_exact: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum McMode {
    Exact,
    Bounds,
    Certify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Core,
    Products,
    Bounds,
    Propositions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(2, e.to_string())
    }
}

type Out = std::result::Result<u8, Fail>;

fn read(path: &Path) -> std::result::Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Fail> {
    Graph::parse(&read(path)?).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

struct Printer {
    pretty: bool,
}

impl Printer {
    fn json(&self, line: &str) {
        if self.pretty {
            let v: serde_json::Value = serde_json::from_str(line).expect("output is valid JSON");
            println!("{}", serde_json::to_string_pretty(&v).expect("value serializes"));
        } else {
            println!("{line}");
        }
    }

    /// Writes `text` to `out`, or prints it when no path is given.
    fn emit(&self, text: &str, out: Option<&Path>, n: usize, m: usize) -> std::result::Result<(), Fail> {
        match out {
            Some(path) => {
                write(path, text)?;
                self.json(&serde_json::json!({"path": path, "n": n, "m": m}).to_string());
            }
            None => self.json(text),
        }
        Ok(())
    }
}

fn exact_config() -> std::result::Result<ExactConfig, Fail> {
    let mut config = ExactConfig::default();
    if let Ok(v) = std::env::var(BUDGET_VAR) {
        config.node_limit = v.trim().parse().map_err(|_| Fail(2, format!("{BUDGET_VAR} must be an integer, got {v:?}")))?;
    }
    Ok(config)
}

fn run(cli: Cli) -> Out {
    let p = Printer { pretty: cli.pretty };
    match cli.command {
        Command::Gen { family, params, out } => {
            let spec = NetworkSpec::new(family.parse::<Family>()?, params);
            let g = generate(&spec)?;
            let text = match generate_product(&spec)? {
                Some(pg) => pg.to_json(),
                None => g.to_json(),
            };
            p.emit(&text, out.as_deref(), g.vertex_count(), g.edge_count())?;
            Ok(0)
        }
        Command::Product { kind, a, b, out } => {
            let kind: ProductKind = kind.parse()?;
            let (g, h) = (read_graph(&a)?, read_graph(&b)?);
            let pg = make_product(kind, &g, &h)?;
            p.emit(&pg.to_json(), out.as_deref(), pg.graph.vertex_count(), pg.graph.edge_count())?;
            Ok(0)
        }
        Command::Mc { mode, file, witness_out } => {
            let text = read(&file)?;
            let g = Graph::parse(&text).map_err(|e| Fail(2, format!("{}: {e}", file.display())))?;
            match mode {
                McMode::Exact => {
                    let r = mc_exact_with(&g, exact_config()?)?;
                    if let (Some(path), Some(w)) = (witness_out, &r.witness) {
                        write(&path, &w.to_json(&g))?;
                    }
                    p.json(&r.to_json());
                    Ok(if r.method == McMethod::BoundsOnly { 3 } else { 0 })
                }
                McMode::Bounds => {
                    let b = match ProductGraph::from_json(&text) {
                        Ok(pg) => product_graph_bounds(&pg),
                        Err(_) => mc_bounds_basic(&g),
                    };
                    p.json(&b.to_json());
                    Ok(0)
                }
                McMode::Certify => {
                    p.json(&theorem1_certificate(&g)?.to_json());
                    Ok(0)
                }
            }
        }
        Command::Check { graph, coloring } => {
            let g = read_graph(&graph)?;
            let c = EdgeColoring::from_json(&g, &read(&coloring)?)?;
            match check_mc_coloring(&g, &c)? {
                McCheck::Valid { colors } => {
                    println!("VALID {colors} colors");
                    Ok(0)
                }
                McCheck::Invalid { pair: (u, v) } => {
                    println!("INVALID pair ({u},{v})");
                    Ok(1)
                }
            }
        }
        Command::Verify { suite, max_n, seed } => {
            let suite = match suite {
                SuiteArg::Core => Suite::Core,
                SuiteArg::Products => Suite::Products,
                SuiteArg::Bounds => Suite::Bounds,
                SuiteArg::Propositions => Suite::Propositions,
            };
            let mut opts = VerifyOptions { seed, ..VerifyOptions::for_suite(suite) };
            if let Some(n) = max_n {
                if suite == Suite::Core && n > crate::enumerate::MAX_ENUM_VERTICES {
                    return Err(Fail(2, format!("--max-n is limited to {}", crate::enumerate::MAX_ENUM_VERTICES)));
                }
                opts.max_n = n;
            }
            let report = run_suite(suite, opts)?;
            if p.pretty {
                println!("{report}");
            } else {
                println!("{}", report.to_json());
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Report { format, out, max_exact } => {
            let opts = ReportOptions { max_exact_vertices: max_exact, node_limit: exact_config()?.node_limit };
            let report = proposition_report(opts)?;
            let text = match format {
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json(),
            };
            match out {
                Some(path) => write(&path, &text)?,
                None if format == Format::Json => p.json(&text),
                None => print!("{text}"),
            }
            Ok(if report.all_agree() { 0 } else { 1 })
        }
    }
}

/// Parses `std::env::args` and runs the command.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            let _ = writeln!(std::io::stderr(), "mcgraph: {msg}");
            ExitCode::from(code)
        }
    }
}
