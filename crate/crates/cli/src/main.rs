//! `unavoid`: JSON front end for the unavoid library.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "unavoid",
    version,
    about = "Unavoidable patterns in colourings and tournaments"
)]
struct Cli {
    /// Worker threads (default: all available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Look for an unavoidable colouring or a cyclic blow-up.
    Detect(DetectArgs),
    /// Distance from monochromatic or from transitive.
    Farness(FarnessArgs),
    /// Build and verify a pattern-free construction.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Run the ordering lemmas and dependent random choice.
    #[command(subcommand)]
    Lemma(LemmaCommand),
    /// Small Ramsey-type tables.
    #[command(subcommand)]
    Ramsey(RamseyCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum InstanceKind {
    Colouring,
    Tournament,
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: InstanceKind,
    #[arg(long)]
    t: usize,
    /// Node budget; running out exits with code 3.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct FarnessArgs {
    #[arg(long)]
    input: PathBuf,
    /// Exact subset DP (tournaments; the default up to the cap).
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Insertion local search with restarts.
    #[arg(long)]
    heuristic: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 16)]
    restarts: usize,
    /// Largest n accepted by the exact DP.
    #[arg(long, default_value_t = unavoid::farness::EXACT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Red bipartite half of an extremal K_{t,t}-free graph.
    Coltight {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        /// Also write the instance to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tournament whose backward edges form a K_{r,t}-free bipartite graph.
    Tourtight {
        /// Bipartite file; if absent a greedy graph is built on --a x --b.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 7)]
        a: usize,
        #[arg(long, default_value_t = 7)]
        b: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        /// Also write the instance to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Red star at vertex 0.
    Star {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Also write the instance to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recursive apex tournament free of U_2.
    D2rec {
        #[arg(long)]
        depth: u32,
        /// Also write the instance to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Polarity graph of PG(2, q).
    Polarity {
        #[arg(long)]
        q: u64,
        /// Also write the instance to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extremal K_{a,b}-free graph.
    Zarankiewicz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Also write the instance to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingSource {
    /// Exact DP when n is within the cap, otherwise the heuristic.
    Auto,
    Exact,
    Heuristic,
    Identity,
}

#[derive(Args)]
struct OrderingArgs {
    #[arg(long, value_enum, default_value_t = OrderingSource::Auto)]
    order: OrderingSource,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 16)]
    restarts: usize,
}

#[derive(Subcommand)]
enum LemmaCommand {
    /// One long-edge / denser-interval step.
    LongStep {
        #[arg(long)]
        input: PathBuf,
        /// Positive rational, e.g. 1/100.
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        ordering: OrderingArgs,
    },
    /// Iterated steps with alpha growing sixfold.
    LongIter {
        #[arg(long)]
        input: PathBuf,
        /// Positive rational constant C.
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
    },
    /// Split or shrink the backward edges between two intervals.
    DensityInc {
        #[arg(long)]
        input: PathBuf,
        /// Interval I as start..end positions (half-open).
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
        #[arg(long, default_value = "1/100")]
        epsilon: String,
        #[command(flatten)]
        ordering: OrderingArgs,
    },
    /// Dependent random choice in a graph or one colour class.
    Drc {
        #[arg(long)]
        input: PathBuf,
        /// Colour class to use when the input is a colouring.
        #[arg(long, default_value = "red")]
        colour: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        tries: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Colourings.
    #[value(name = "C", alias = "c")]
    C,
    /// Tournaments.
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Subcommand)]
enum RamseyCommand {
    /// Exhaustive rows over isomorphism classes.
    Exact {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        t: usize,
        /// One or more orders, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Directory receiving one witness file per row.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Simulated-annealing lower bounds.
    Mine {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of annealing iterations.
        #[arg(long, default_value_t = 5000)]
        budget: u64,
        /// Pattern-free starting instance.
        #[arg(long)]
        initial: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(commands::EXIT_INPUT);
        }
    }
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
