use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "graphspark",
    version,
    about = "Forts, spark and exact matrix checks for small graphs"
)]
pub struct Cli {
    /// Emit JSON (one object per record).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV with a header row.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Worker threads (overrides GRAPHSPARK_THREADS and the config file).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// TOML config file.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum fort and spark of a graph.
    Spark(SparkArgs),
    /// Fort counts by size.
    Forts(FortsArgs),
    /// Zero forcing closure of an initial set.
    Zf(ZfArgs),
    /// Vertex connectivity and a minimum vertex cut.
    Connectivity(GraphArg),
    /// Exact computations on a matrix file.
    #[command(subcommand)]
    Mat(MatCommand),
    /// Build matrices from forts, borders and rank bumps.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Run a verification suite over a graph corpus.
    Verify(VerifyArgs),
    /// Run a graph command over every line of a graph6 file.
    Batch(BatchArgs),
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// graph6 string, family spec such as `path:5`, or a file of graph6 lines.
    pub graph: String,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Method {
    BranchAndBound,
    BruteForce,
}

#[derive(Args, Debug)]
pub struct SparkArgs {
    #[arg(long, value_enum, default_value = "branch-and-bound")]
    pub method: Method,
    pub graph: String,
}

#[derive(Args, Debug)]
pub struct FortsArgs {
    /// Print the fort sequence (the default and only mode).
    #[arg(long)]
    pub sequence: bool,
    /// Also list every fort (graphs with at most 10 vertices).
    #[arg(long)]
    pub list: bool,
    pub graph: String,
}

#[derive(Args, Debug)]
pub struct ZfArgs {
    /// Comma-separated initial blue vertices.
    #[arg(long, value_name = "SET", default_value = "")]
    pub initial: String,
    pub graph: String,
}

#[derive(Subcommand, Debug)]
pub enum MatCommand {
    /// Rank and nullity.
    Rank(MatrixArg),
    /// Spark with a minimum-support null vector.
    Spark(MatrixArg),
    /// Null space basis and support.
    Null(MatrixArg),
    /// Parter/Fiedler class of one vertex, or of every vertex.
    Classify {
        #[arg(short = 'v', long)]
        vertex: Option<usize>,
        file: String,
    },
    /// Genericity of the null basis and a generic nullity lower bound.
    Generic {
        #[arg(long)]
        seed: Option<u64>,
        file: String,
    },
    /// The three full-spark conditions.
    FullSpark(MatrixArg),
    /// Positive semidefiniteness.
    Psd(MatrixArg),
}

#[derive(Args, Debug)]
pub struct MatrixArg {
    /// Matrix file: one row per line, entries as integers or p/q; or a JSON
    /// array of rows.
    pub file: String,
}

#[derive(Subcommand, Debug)]
pub enum ConstructCommand {
    /// Matrix with the graph's pattern and a null vector supported on a fort.
    FromFort {
        #[arg(long, value_name = "SET")]
        fort: String,
        /// Nonzero values on the fort, in increasing vertex order (default all ones).
        #[arg(long, allow_hyphen_values = true)]
        values: Option<String>,
        graph: String,
    },
    /// Raise one diagonal entry so the rank goes up by one.
    Bump(MatrixArg),
    /// Border a matrix by `A x` and `x^T A x`.
    Border {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        file: String,
    },
    /// Laplacian of a graph.
    Laplacian(GraphArg),
    /// Adjacency matrix of a graph.
    Adjacency(GraphArg),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite id, or `all`.
    pub suite: String,
    /// `exhaustive:N`, `file:PATH` or `random:SEED:COUNT[:MAXN]`.
    #[arg(long, default_value = "random:0:200")]
    pub corpus: String,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Replay a single case by index.
    #[arg(long)]
    pub case: Option<usize>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum BatchCommand {
    Spark,
    Forts,
    Connectivity,
    Zfn,
}

#[derive(Args, Debug)]
pub struct BatchArgs {
    pub command: BatchCommand,
    /// File of graph6 lines or family specs.
    pub file: PathBuf,
}
