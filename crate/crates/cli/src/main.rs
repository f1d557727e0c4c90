//! `pgstar`: analyze graphs, check family classifications, build
//! suspensions and run verification sweeps.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pgstar_core::verify::Theorem;

#[derive(Parser, Debug)]
#[command(
    name = "pgstar",
    version,
    about = "Independence polynomials, h-polynomials and the pseudo-Gorenstein* property"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    output: OutputMode,

    /// Worker threads for sweeps (defaults to one per core).
    #[arg(long, env = "PGSTAR_THREADS", global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    threads: Option<u64>,

    /// Largest graph order for maximal-independent-set enumeration.
    #[arg(long, global = true, default_value_t = pgstar_core::graph::DEFAULT_MIS_LIMIT as u64,
          value_parser = clap::value_parser!(u64).range(1..=63))]
    mis_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Input format.
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,

    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_vertices: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze a graph read from a file (`-` for standard input).
    Compute {
        input: PathBuf,
        #[command(flatten)]
        input_args: InputArgs,
    },
    /// Build a member of a graph family and compare with its closed form.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u64).range(1..))]
        max_vertices: u64,
    },
    /// Adjoin a vertex adjacent to a given set and analyze the result.
    Suspend(SuspendArgs),
    /// Run a named verification sweep (or `all`).
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// The cycle C_n.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// The path P_n.
    Path {
        #[arg(long)]
        n: usize,
    },
    /// A complete multipartite graph.
    Multipartite {
        /// Part sizes, e.g. `2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// A Cameron-Walker graph.
    CameronWalker(CameronWalkerArgs),
}

#[derive(Args, Debug)]
pub struct CameronWalkerArgs {
    /// Size of the core part X.
    #[arg(long)]
    pub x: usize,
    /// Size of the core part Y.
    #[arg(long)]
    pub y: usize,
    /// Core edges `i:j` joining x_i and y_j, e.g. `1:1,2:1`.
    #[arg(long, value_delimiter = ',', value_parser = parse_pair, required = true)]
    pub core_edges: Vec<(usize, usize)>,
    /// Leaves on each x_i (default one each).
    #[arg(long, value_delimiter = ',')]
    pub leaves: Vec<usize>,
    /// Pendant triangles on each y_j (default none).
    #[arg(long, value_delimiter = ',')]
    pub triangles: Vec<usize>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("base").args(["input", "cycle", "path"]).required(true))]
#[command(group = clap::ArgGroup::new("attach").args(["set", "full"]).required(true))]
pub struct SuspendArgs {
    /// Base graph file (`-` for standard input).
    pub input: Option<PathBuf>,
    /// Use the cycle C_N as the base graph.
    #[arg(long, value_name = "N")]
    pub cycle: Option<usize>,
    /// Use the path P_N as the base graph.
    #[arg(long, value_name = "N")]
    pub path: Option<usize>,
    /// Attachment set, e.g. `1,3,5`.
    #[arg(long, value_delimiter = ',')]
    pub set: Option<Vec<usize>>,
    /// Attach to every vertex (the cone).
    #[arg(long)]
    pub full: bool,
    #[command(flatten)]
    pub input_args: InputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of cycles, paths, sequences, multipartite, cameron-walker,
    /// vc-suspension, full-suspension, cycle-mis-suspension,
    /// path-mis-suspension, deg-via-ord, oracle, or `all`.
    #[arg(value_parser = parse_theorem)]
    pub theorem: TheoremArg,
    /// Upper end of the swept size.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Number of random instances.
    #[arg(long)]
    pub random: Option<usize>,
    /// Seed for random corpora.
    #[arg(long, default_value_t = pgstar_core::SweepConfig::default().seed)]
    pub seed: u64,
    /// Also sweep every labeled graph up to this order.
    #[arg(long)]
    pub exhaustive_n: Option<usize>,
    /// Most parts for multipartite sweeps.
    #[arg(long, default_value_t = 4)]
    pub max_parts: usize,
    /// Largest part for multipartite sweeps.
    #[arg(long, default_value_t = 5)]
    pub max_part_size: usize,
}

#[derive(Clone, Copy, Debug)]
pub enum TheoremArg {
    One(Theorem),
    All,
}

fn parse_theorem(s: &str) -> Result<TheoremArg, String> {
    if s == "all" {
        return Ok(TheoremArg::All);
    }
    Theorem::from_id(s).map(TheoremArg::One).ok_or_else(|| {
        let ids: Vec<_> = Theorem::ALL.iter().map(|t| t.id()).collect();
        format!(
            "unknown theorem `{s}`; expected one of: {}, all",
            ids.join(", ")
        )
    })
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected `i:j`, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads as usize)
            .build_global()
        {
            eprintln!("pgstar: cannot start thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let mis_cap = cli.mis_cap as usize;
    let result = match cli.command {
        Command::Compute { input, input_args } => {
            commands::compute(&input, &input_args, cli.output)
        }
        Command::Family {
            family,
            max_vertices,
        } => commands::family(&family, max_vertices as usize, cli.output),
        Command::Suspend(args) => commands::suspend(&args, cli.output),
        Command::Verify(args) => commands::verify(&args, mis_cap, cli.output),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("pgstar: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
