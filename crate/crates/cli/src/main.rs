mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pauvc::Model;

/// Exact solvers and instance tools for pre-assignments that make a minimum
/// vertex cover unique. Vertex ids in JSON are 0-based; DIMACS files are 1-based.
#[derive(Debug, Parser)]
#[command(name = "pauvc", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Vertex cap for the exponential solvers (overrides PAUVC_VERTEX_LIMIT).
    #[arg(long, global = true)]
    pub vertex_limit: Option<usize>,
    /// Wall-clock cap in seconds.
    #[arg(long, global = true)]
    pub time_limit: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Include,
    Exclude,
    Mixed,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Include => Model::Include,
            ModelArg::Exclude => Model::Exclude,
            ModelArg::Mixed => Model::Mixed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Auto,
    Enum,
    Fpt,
    Tree,
}

impl From<AlgoArg> for pauvc::Algo {
    fn from(a: AlgoArg) -> pauvc::Algo {
        match a {
            AlgoArg::Auto => pauvc::Algo::Auto,
            AlgoArg::Enum => pauvc::Algo::Enum,
            AlgoArg::Fpt => pauvc::Algo::Fpt,
            AlgoArg::Tree => pauvc::Algo::Tree,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Er,
    Tree,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a minimum feasible pre-assignment.
    Solve {
        /// DIMACS graph file.
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "exclude")]
        model: ModelArg,
        #[arg(long, value_enum, default_value = "auto")]
        algo: AlgoArg,
        /// Decision variant: exit 0 iff the optimum is at most K.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check a pre-assignment given as `{"model":..,"include":[..],"exclude":[..]}`.
    Check {
        graph: PathBuf,
        pre: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a graph with a unique minimum vertex cover and its metadata.
    Generate {
        #[arg(long, value_enum, default_value = "er")]
        family: Family,
        /// Use this DIMACS graph instead of a random one.
        #[arg(long, conflicts_with = "family")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 16)]
        n: usize,
        /// Edge probability for the Erdős–Rényi family.
        #[arg(long, default_value_t = 0.2)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "exclude")]
        model: ModelArg,
        /// Writes `<out>.col` and `<out>.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Translate instances through the hardness gadgets.
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
    },
    /// Solve every instance in a directory and print a CSV table.
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "exclude")]
        model: ModelArg,
        #[arg(long, value_enum, default_value = "auto")]
        algo: AlgoArg,
        /// Also run subset enumeration and report agreement.
        #[arg(long)]
        compare: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceKind {
    /// DIMACS CNF (3 literals per clause) to the 1-in-3 gadget graph.
    Fcp {
        cnf: PathBuf,
        /// Writes `<out>.col` and `<out>.json`; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graph to its pendant gadget.
    Ids {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
