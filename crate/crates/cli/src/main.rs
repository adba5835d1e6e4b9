//! `gsearch`: run, validate and compare graph search orderings from the shell.
//!
//! Exit codes: 0 success, 1 invalid ordering / inequivalent / inconsistent,
//! 2 parse or usage error, 3 disconnected graph, 4 enumeration cap reached.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gsearch_core::{Relation, SearchKind, DEFAULT_ENUMERATION_CAP};

use input::FormatArg;

#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Disconnected,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Disconnected => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Negative,
    Truncated,
}

impl Outcome {
    fn code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Negative => 1,
            Outcome::Truncated => 4,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "gsearch",
    version,
    about = "Graph search orderings: run, validate, classify, compare"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (graph6 or edge list); `-` or absent reads standard input
    input: Option<PathBuf>,
    /// Graph given inline instead of a file
    #[arg(short, long, conflicts_with = "input")]
    graph: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Print a JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Limits {
    /// Stop enumerating after this many orderings
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Refuse graphs with more vertices than this (0 disables the guard)
    #[arg(long, default_value_t = gsearch_core::equivalence::DEFAULT_SIZE_GUARD)]
    max_vertices: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Structural class flags, with the forbidden pattern behind each failed class
    Classify {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Check whether an ordering belongs to a search paradigm
    Validate {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        kind: SearchKind,
        /// Vertices in visiting order, e.g. `2,0,3,1`
        #[arg(long, allow_hyphen_values = true)]
        ordering: String,
        /// File mapping vertex names to indices (`label index` per line)
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Run one search
    Run {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        kind: SearchKind,
        /// Break ties uniformly at random with this seed
        #[arg(long, conflicts_with = "tiebreak")]
        seed: Option<u64>,
        /// Deterministic tie-break when no seed is given
        #[arg(long, value_enum, default_value = "min")]
        tiebreak: commands::TieBreakArg,
        #[arg(long)]
        start: Option<usize>,
    },
    /// List every ordering a search can produce
    Enumerate {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        kind: SearchKind,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Compare the ordering sets of two searches on one graph
    Equiv {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        kind_x: SearchKind,
        #[arg(long)]
        kind_y: SearchKind,
        #[arg(long, default_value = "subset")]
        relation: Relation,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check every item of a theorem on one graph
    Theorem {
        #[command(flatten)]
        graph: GraphInput,
        /// A, B, C, corollary or all
        #[arg(long, default_value = "all")]
        theorem: String,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check theorems on a stream of graph6 lines from standard input
    Scan {
        /// A, B, C, corollary or all
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Worker threads (0 uses all cores)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: Limits,
    },
}

fn dispatch(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Classify { graph } => commands::classify(&graph.load()?, graph.json),
        Command::Validate {
            graph,
            kind,
            ordering,
            labels,
        } => commands::validate(
            &graph.load()?,
            kind,
            &ordering,
            labels.as_deref(),
            graph.json,
        ),
        Command::Run {
            graph,
            kind,
            seed,
            tiebreak,
            start,
        } => commands::run(
            &graph.load()?,
            kind,
            tiebreak.with_seed(seed),
            start,
            graph.json,
        ),
        Command::Enumerate { graph, kind, cap } => {
            commands::enumerate(&graph.load()?, kind, cap, graph.json)
        }
        Command::Equiv {
            graph,
            kind_x,
            kind_y,
            relation,
            limits,
        } => commands::equiv(
            &graph.load()?,
            kind_x,
            kind_y,
            relation,
            &limits.options(),
            graph.json,
        ),
        Command::Theorem {
            graph,
            theorem,
            limits,
        } => commands::theorem(
            &graph.load()?,
            &commands::parse_theorems(&theorem)?,
            &limits.options(),
            graph.json,
        ),
        Command::Scan {
            theorem,
            jobs,
            json,
            limits,
        } => commands::scan(
            commands::parse_theorems(&theorem)?,
            jobs,
            &limits.options(),
            json,
        ),
    }
}

impl GraphInput {
    fn load(&self) -> Result<gsearch_core::Graph, Failure> {
        input::load_graph(self.graph.as_deref(), self.input.as_deref(), self.format)
    }
}

impl Limits {
    fn options(&self) -> gsearch_core::CheckOptions {
        gsearch_core::CheckOptions {
            max_vertices: (self.max_vertices > 0).then_some(self.max_vertices),
            cap: self.cap,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(failure) => {
            match &failure {
                Failure::Parse(msg) => eprintln!("error: {msg}"),
                Failure::Disconnected => eprintln!("error: the graph is not connected"),
            }
            ExitCode::from(failure.code())
        }
    }
}
