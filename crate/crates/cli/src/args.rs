use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use legendre_cordial::products::Operation;
use legendre_cordial::search::DEFAULT_NODE_BUDGET;
use legendre_cordial::Theorem;

/// Legendre cordial labelings of graphs modulo an odd prime.
#[derive(Debug, Parser)]
#[command(name = "lcord", version, about)]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a family spec (path:5, cycle:7, complete:4,
    /// star:6, edges:4:0-1,1-2,2-3).
    Gen { family: String },

    /// Apply a graph operation to two graphs.
    Op {
        /// join, corona, lex, cart, tensor or strong.
        op: Operation,
        /// First factor: family spec or graph JSON file.
        g1: String,
        /// Second factor: family spec or graph JSON file.
        g2: String,
    },

    /// Build a Legendre cordial labeling by an explicit construction.
    ///
    /// Missing base labelings are found by exhaustive search.
    Construct(ConstructArgs),

    /// Tally the induced edge labels of a labeling.
    Verify {
        /// Family spec or graph JSON file.
        graph: String,
        /// Labels in vertex order: "2,1,3", a JSON array file or a labeling file.
        labeling: String,
        /// Prime modulus; defaults to the one recorded in a labeling file.
        #[arg(long)]
        p: Option<u64>,
    },

    /// Exhaustive search for a labeling meeting an objective.
    Search(SearchArgs),

    /// Legendre symbol (a/p).
    Legendre {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        /// Prime modulus (or pass --p).
        #[arg(required_unless_present = "p_flag")]
        p: Option<u64>,
        #[arg(long = "p", id = "p_flag", conflicts_with = "p")]
        p_flag: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// corona-path, kp-tensor, join, corona, lex, cart, tensor or strong.
    #[arg(required_unless_present = "recipe")]
    pub theorem: Option<Theorem>,

    /// Recipe JSON file with theorem, p, graphs and optional base labelings.
    #[arg(long, conflicts_with_all = ["theorem", "g1", "g2", "lab_g1", "lab_g2", "p"])]
    pub recipe: Option<PathBuf>,

    /// Prime modulus.
    #[arg(long, required_unless_present = "recipe")]
    pub p: Option<u64>,

    /// First (or only) graph: family spec or graph JSON file.
    #[arg(long, visible_alias = "g", required_unless_present = "recipe")]
    pub g1: Option<String>,

    /// Second graph: family spec or graph JSON file.
    #[arg(long)]
    pub g2: Option<String>,

    /// Base labeling of g1.
    #[arg(long)]
    pub lab_g1: Option<String>,

    /// Base labeling of g2.
    #[arg(long)]
    pub lab_g2: Option<String>,

    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Family spec or graph JSON file.
    pub graph: String,

    #[arg(long)]
    pub p: u64,

    /// cordial, diff:D (exactly D), near:D (D-1..=D+1) or range:LO:HI,
    /// all on e1 - e0.
    #[arg(long, default_value = "cordial", allow_hyphen_values = true)]
    pub objective: String,

    #[arg(long, value_enum, default_value_t = SearchMode::First)]
    pub mode: SearchMode,

    /// Worker threads splitting the top-level branches.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,

    /// Largest order the search accepts.
    #[arg(long)]
    pub ceiling: Option<usize>,

    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    /// Stop at the first labeling.
    First,
    /// Count every labeling.
    Count,
    /// Establish that no labeling exists; a found labeling is the counterexample.
    None,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Node (assignment) budget.
    #[arg(long, env = "LCORD_BUDGET_NODES", default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget_nodes: u64,

    /// Wall-clock budget in seconds.
    #[arg(long, env = "LCORD_BUDGET_SECONDS")]
    pub budget_seconds: Option<f64>,
}
