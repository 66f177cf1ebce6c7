mod batch;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Kernels, absorbing and dominating sets, and independent sets on interval
/// digraphs and their relatives. Reports are JSON on standard output; exit
/// code 0 means solved, 2 means the requested set provably does not exist,
/// 1 means an error.
#[derive(Debug, Parser)]
#[command(name = "dgk", version)]
pub struct Cli {
    /// Wrap file outputs (gen, build-rep, subdivide) in a JSON object.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Some kernel of a reflexive interval digraph, in linear time.
    Kernel { rep: PathBuf },
    /// Minimum kernel from a digraph plus DUF-ordering, or from a representation.
    MinKernel(KernelArgs),
    /// Maximum kernel from a digraph plus DUF-ordering, or from a representation.
    MaxKernel(KernelArgs),
    /// Minimum absorbing set of a reflexive interval digraph.
    Absorbing { rep: PathBuf },
    /// Minimum dominating set of a reflexive interval digraph.
    Dominating { rep: PathBuf },
    /// Maximum (weight) independent set from a digraph plus DUF-ordering.
    Mis {
        input: PathBuf,
        ordering: Option<PathBuf>,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Minimum subset of B dominating A in an interval bigraph.
    RedBlue { bigraph: PathBuf },
    /// Point-point recognition: point labels, or an anti-directed walk.
    RecognizePp { digraph: PathBuf },
    /// Checks an ordering, reporting a forbidden structure on failure.
    CheckOrdering {
        digraph: PathBuf,
        ordering: PathBuf,
        #[arg(long)]
        kind: OrderingKind,
    },
    /// Interval representation built from a reflexive-interval ordering.
    BuildRep { digraph: PathBuf, ordering: PathBuf },
    /// Subdivision map file of a loopless digraph.
    Subdivide {
        digraph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Also write the subdivided digraph here.
        #[arg(long)]
        host: Option<PathBuf>,
    },
    /// Carries a set of the origin digraph to its subdivision.
    Lift(MapArgs),
    /// Carries a set of the subdivision back to the origin digraph.
    Project(MapArgs),
    /// Budgeted brute force.
    Oracle {
        problem: OracleProblem,
        input: PathBuf,
        /// Vertex limit for every oracle family, capped at 64.
        #[arg(long)]
        budget_n: Option<usize>,
        /// For `kernel`: optimize instead of deciding existence.
        #[arg(long)]
        objective: Option<ObjectiveArg>,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Checks a set against a definition, or runs random algorithm-vs-oracle trials.
    Verify(VerifyArgs),
    /// Seeded random instance file.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    /// Digraph file (with an ordering file), or an interval representation.
    pub input: PathBuf,
    pub ordering: Option<PathBuf>,
    /// Use the faster algorithm for adjusted representations.
    #[arg(long)]
    pub adjusted: bool,
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    pub map: PathBuf,
    pub set: PathBuf,
    #[arg(long, value_enum)]
    pub mode: MapMode,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(required_unless_present = "batch")]
    pub digraph: Option<PathBuf>,
    #[arg(required_unless_present = "batch")]
    pub set: Option<PathBuf>,
    #[arg(long, value_enum, required_unless_present = "batch")]
    pub mode: Option<ModeArg>,
    /// Number of random instances to check concurrently.
    #[arg(long, conflicts_with_all = ["digraph", "set", "mode"])]
    pub batch: Option<usize>,
    /// Largest instance size in batch mode.
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Arc probability for random and subdivided digraphs.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    /// Loop probability for random digraphs.
    #[arg(long, default_value_t = 0.0)]
    pub loop_p: f64,
    /// Size of part A of an interval bigraph (defaults to n).
    #[arg(long)]
    pub a: Option<usize>,
    /// Size of part B of an interval bigraph (defaults to n).
    #[arg(long)]
    pub b: Option<usize>,
    /// Coordinate grid of an interval bigraph.
    #[arg(long, default_value_t = 100)]
    pub grid: u64,
    /// Subdivision length.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Longest interval of a reflexive representation; unbounded if absent.
    #[arg(long)]
    pub max_len: Option<u64>,
    /// Generate an adjusted representation.
    #[arg(long)]
    pub adjusted: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderingKind {
    Duf,
    Reflexive,
    Cocomp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MapMode {
    Kernel,
    Absorbing,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Independent,
    Absorbing,
    Dominating,
    Kernel,
    Solution,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ObjectiveArg {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OracleProblem {
    Kernel,
    Absorbing,
    Dominating,
    Mis,
    RedBlue,
    K33,
    DufOrdering,
    ReflexiveOrdering,
    AntiWalk,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenKind {
    ReflexiveInterval,
    IntervalBigraph,
    RandomDigraph,
    Subdivided,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match commands::run(&cli.command) {
        Ok(outcome) => outcome.emit(cli.json),
        Err(e) => report::error(&e.to_string()),
    }
}
