use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphent::graph::{parse_connected_graph, GraphFormat, DEFAULT_ORBIT_CAP};
use graphent::lattices::LatticeKind;
use graphent::Graph;

mod commands;

/// Exit codes.
const EXIT_INPUT: u8 = 1;
pub(crate) const EXIT_BOUNDS_DIFFER: u8 = 2;
pub(crate) const EXIT_METHODS_DISAGREE: u8 = 3;
pub(crate) const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "graphent",
    version,
    about = "Entanglement of pure graph states from their graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bounds, measures, decomposition and certificates as JSON.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Add dense cross-checks of the certificates (N <= 10).
        #[arg(long)]
        oracle: bool,
    },
    /// Closest separable state by one or all constructions.
    Css {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Method::Stabilizer)]
        method: Method,
    },
    /// Local-complementation orbit summary.
    Orbit {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Gap table for a lattice family, as CSV.
    Lattice {
        /// triangular, kagome, hexa-triangular or hexagonal.
        kind: LatticeKind,
        /// A size, an inclusive range `a..b`, or a list `a,b,c`.
        sizes: String,
        /// Also compute the exact gap.
        #[arg(long)]
        exact: bool,
        /// Node budget for the exact independent set search.
        #[arg(long, default_value_t = 1 << 32)]
        node_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dense cross-checks on one graph (N <= 10).
    Verify {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Method {
    Stabilizer,
    Peps,
    Noise,
    All,
}

#[derive(Args, Debug)]
pub(crate) struct GraphInput {
    /// Graph file, or `-` for stdin.
    #[arg(conflicts_with = "graph", required_unless_present = "graph")]
    path: Option<PathBuf>,
    /// Inline graph; in edge-list form `;` separates lines.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long, default_value = "edgelist", value_parser = parse_format)]
    format: GraphFormat,
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
    pub orbit_cap: usize,
    /// Seed for randomised checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse()
}

impl GraphInput {
    pub(crate) fn load(&self) -> Result<Graph, String> {
        let text = match (&self.graph, &self.path) {
            (Some(g), _) => g.clone(),
            (None, Some(p)) if p.as_os_str() == "-" => {
                let mut s = String::new();
                io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| format!("stdin: {e}"))?;
                s
            }
            (None, Some(p)) => {
                fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?
            }
            (None, None) => return Err("no graph given".into()),
        };
        parse_connected_graph(&text, self.format).map_err(|e| e.to_string())
    }
}

/// What a command produced: the text to emit and the exit code.
pub(crate) struct Outcome {
    pub text: String,
    pub code: u8,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn configure_threads() -> Result<(), String> {
    if let Ok(v) = std::env::var("GRAPHENT_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| format!("GRAPHENT_THREADS must be a positive integer, got {v:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(Outcome, Option<PathBuf>), String> {
    configure_threads()?;
    match cli.command {
        Command::Analyze { input, oracle } => Ok((
            commands::analyze(&input.load()?, &input, oracle)?,
            input.out,
        )),
        Command::Css { input, method } => Ok((commands::css(&input.load()?, method)?, input.out)),
        Command::Orbit { input } => Ok((commands::orbit(&input.load()?, &input)?, input.out)),
        Command::Verify { input } => Ok((commands::verify(&input.load()?, &input)?, input.out)),
        Command::Lattice {
            kind,
            sizes,
            exact,
            node_budget,
            out,
        } => Ok((commands::lattice(kind, &sizes, exact, node_budget)?, out)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match run(cli) {
        Ok((outcome, out)) => match emit(&outcome.text, out.as_ref()) {
            Ok(()) => ExitCode::from(outcome.code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_INPUT)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
