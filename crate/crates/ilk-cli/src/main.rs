//! `ilk`: intrinsic-linkedness toolkit. Every subcommand prints exactly
//! one self-contained JSON report line on standard output; diagnostics
//! go to standard error. Exit codes: 0 = completed with a verdict,
//! 2 = usage or input error, 3 = a search budget was exhausted before a
//! verdict was reached.

mod batch;
mod cache;
mod commands;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "ilk",
    version,
    about = "Decide intrinsic linkedness of finite graphs, with machine-checkable certificates"
)]
struct Cli {
    /// Cache directory for expensive verdicts (default: $ILK_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Also print a one-line human summary to standard error.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Cmd,
}

/// Graph input, exactly one source.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Graph in graph6 format.
    #[arg(long, value_name = "TEXT")]
    pub graph6: Option<String>,
    /// File holding an edge list: an "n <vertices>" header, then one
    /// "u v" pair per line.
    #[arg(long, value_name = "FILE")]
    pub edge_list: Option<PathBuf>,
    /// Named catalog graph (see `ilk catalog`).
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,
}

/// Graph input for commands that can also get the graph another way.
#[derive(Args, Debug)]
#[group(multiple = false)]
pub struct OptionalInputArgs {
    /// Graph in graph6 format.
    #[arg(long, value_name = "TEXT")]
    pub graph6: Option<String>,
    /// File holding an edge list.
    #[arg(long, value_name = "FILE")]
    pub edge_list: Option<PathBuf>,
    /// Named catalog graph.
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,
}

/// Choice of embedding: an explicit twist vector, a seeded random one,
/// or (neither flag) the flat base diagram.
#[derive(Args, Debug)]
pub struct EmbedArgs {
    /// Twist vector as a JSON array, one integer per disjoint edge pair.
    #[arg(long, value_name = "JSON", conflicts_with = "seed")]
    pub twists: Option<String>,
    /// Seed for a random twist vector.
    #[arg(long, value_name = "N")]
    pub seed: Option<u64>,
    /// Bound on random twist magnitudes (used with --seed).
    #[arg(long, value_name = "N", default_value_t = 1)]
    pub twist_bound: i64,
}

/// Exactly one local move.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct MoveArgs {
    /// Replace the triangle A,B,C with a new degree-3 vertex.
    #[arg(long, value_name = "A,B,C")]
    pub delta_y: Option<String>,
    /// Replace the degree-3 vertex V with a triangle on its neighbors.
    #[arg(long, value_name = "V")]
    pub y_delta: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MovesChoice {
    /// Triangle-to-star only.
    DeltaY,
    /// Both directions.
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BatchCmd {
    Il,
    Z2il,
    Planar,
    Info,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural summary: counts, degree sequence, and (given an
    /// embedding) the nontrivially linked cycle pairs.
    Info {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        embed: EmbedArgs,
        /// Report only links with |linking number| >= this.
        #[arg(long, value_name = "N", default_value_t = 1)]
        min_abs: u64,
    },
    /// Decide intrinsic linkedness via the GF(2) linking system; emits a
    /// linkless witness or an obstruction.
    Z2il {
        #[command(flatten)]
        input: InputArgs,
        /// Abort if the graph has more disjoint cycle pairs than this.
        #[arg(long, value_name = "N", default_value_t = ilk::z2::DEFAULT_PAIR_CAP)]
        cap: usize,
    },
    /// Decide intrinsic linkedness via obstruction-family minor search;
    /// emits a minor witness when linked.
    Il {
        #[command(flatten)]
        input: InputArgs,
        /// Node budget for the minor search.
        #[arg(long, value_name = "N", default_value_t = ilk::minors::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Planarity by excluded minors.
    Planar {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "N", default_value_t = ilk::minors::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Search for N vertices whose deletion leaves a planar graph.
    Apex {
        #[command(flatten)]
        input: InputArgs,
        /// Size of the deletion set.
        #[arg(long, value_name = "N", default_value_t = 1)]
        n: usize,
        #[arg(long, value_name = "N", default_value_t = ilk::minors::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Join the graph with another (default K1: add one dominating
    /// vertex).
    Cone {
        #[command(flatten)]
        input: InputArgs,
        /// Catalog name or graph6 text of the other side.
        #[arg(long, value_name = "NAME_OR_GRAPH6", default_value = "K1")]
        with: String,
    },
    /// Complement of a simple graph.
    Complement {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Apply one triangle-star exchange move.
    Moves {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        args: MoveArgs,
    },
    /// Closure of the graph under triangle-star exchange moves.
    Closure {
        #[command(flatten)]
        input: InputArgs,
        /// Which moves to apply.
        #[arg(long, value_enum, default_value_t = MovesChoice::Both)]
        moves: MovesChoice,
        /// Stop (exit 3) if the closure grows past this many members.
        #[arg(long, value_name = "N", default_value_t = ilk::families::DEFAULT_MEMBER_BUDGET)]
        max_members: usize,
        /// Also write the members to FILE, one graph6 line each.
        #[arg(long, value_name = "FILE")]
        emit_graph6: Option<PathBuf>,
    },
    /// Search one embedding for a doubled-square minor whose opposite
    /// cycles link oddly twice over.
    D4 {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        embed: EmbedArgs,
        /// Node budget for the structure search.
        #[arg(long, value_name = "N", default_value_t = ilk::d4::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Edge-count threshold that forces a K(N+2) minor (N in 1..=5),
    /// with a verified witness when it fires.
    Mader {
        #[command(flatten)]
        input: InputArgs,
        /// Clique parameter: the bound guarantees a K(N+2) minor.
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "N", default_value_t = ilk::minors::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Sample random graphs and report which of G and its complement are
    /// intrinsically linked.
    #[command(name = "complement-il")]
    ComplementIl {
        /// Number of vertices per sample.
        #[arg(long, value_name = "N")]
        vertices: usize,
        #[arg(long, value_name = "N", default_value_t = 20)]
        samples: usize,
        #[arg(long, value_name = "N", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "N", default_value_t = ilk::minors::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List catalog name forms, or emit one named graph.
    Catalog {
        #[arg(value_name = "NAME")]
        name: Option<String>,
    },
    /// Replay a certificate (bare, or inside a saved run report) against
    /// its graph.
    Verify {
        /// JSON file: a run report or a bare certificate object.
        #[arg(long, value_name = "FILE")]
        certificate: PathBuf,
        #[command(flatten)]
        input: OptionalInputArgs,
        /// Twist vector for embedding-dependent certificates, when the
        /// file does not carry one.
        #[arg(long, value_name = "JSON")]
        twists: Option<String>,
    },
    /// Run one subcommand over every graph6 line of a file; output order
    /// matches input order at any parallelism.
    Batch {
        /// File of graph6 lines (blank lines skipped).
        #[arg(long, value_name = "FILE")]
        file: PathBuf,
        #[arg(long, value_enum)]
        command: BatchCmd,
        /// Worker threads.
        #[arg(long, value_name = "N", default_value_t = 1)]
        jobs: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let ctx = commands::Ctx {
        cache_dir: cli.cache.or_else(|| std::env::var_os("ILK_CACHE").map(PathBuf::from)),
        human: cli.human,
    };
    let code = match dispatch(cli.command, &ctx) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

fn dispatch(cmd: Cmd, ctx: &commands::Ctx) -> anyhow::Result<i32> {
    match cmd {
        Cmd::Info { input, embed, min_abs } => commands::info(ctx, &input, &embed, min_abs),
        Cmd::Z2il { input, cap } => commands::z2il(ctx, &input, cap),
        Cmd::Il { input, budget } => commands::il(ctx, &input, budget),
        Cmd::Planar { input, budget } => commands::planar(ctx, &input, budget),
        Cmd::Apex { input, n, budget } => commands::apex(ctx, &input, n, budget),
        Cmd::Cone { input, with } => commands::cone(ctx, &input, &with),
        Cmd::Complement { input } => commands::complement(ctx, &input),
        Cmd::Moves { input, args } => commands::moves(ctx, &input, &args),
        Cmd::Closure { input, moves, max_members, emit_graph6 } => {
            commands::closure(ctx, &input, moves, max_members, emit_graph6.as_deref())
        }
        Cmd::D4 { input, embed, budget } => commands::d4(ctx, &input, &embed, budget),
        Cmd::Mader { input, n, budget } => commands::mader(ctx, &input, n, budget),
        Cmd::ComplementIl { vertices, samples, seed, budget } => {
            commands::complement_il(ctx, vertices, samples, seed, budget)
        }
        Cmd::Catalog { name } => commands::catalog_cmd(ctx, name.as_deref()),
        Cmd::Verify { certificate, input, twists } => {
            commands::verify(ctx, &certificate, &input, twists.as_deref())
        }
        Cmd::Batch { file, command, jobs } => batch::batch(&file, command, jobs),
    }
}
