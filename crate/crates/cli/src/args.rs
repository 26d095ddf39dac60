use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "flagtri", version, about = "Flag triangulations of surfaces and 3-manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the invariants of a facet file and check that it is a flag closed manifold
    Verify(VerifyArgs),
    /// Build a complex and write it as a facet file
    Construct(ConstructArgs),
    /// Minimize by random edge subdivisions followed by admissible contractions
    Search(SearchArgs),
    /// Summarize the entries of an archive directory
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Facet file, plain or JSON
    pub path: PathBuf,
    /// Also fail unless the complex has no admissible edge
    #[arg(long)]
    pub require_minimum: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Plain,
    Json,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: Kind,
    /// Output file; the facets go to standard output when omitted
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "plain", global = true)]
    pub format: FormatArg,
    /// Also store the result as an archive entry in this directory
    #[arg(long, global = true)]
    pub archive_dir: Option<PathBuf>,
    /// Manifold label recorded in the file and archive metadata
    #[arg(long, global = true)]
    pub label: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Kind {
    /// Boundary of the d-dimensional cross-polytope
    Octahedral {
        #[arg(long)]
        d: usize,
    },
    /// Cycle on n ≥ 4 vertices
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// One of the bundled fixture complexes
    Fixture { name: String },
    /// Connected sum of k tori (with --orientable) or of k projective planes
    Surface {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        orientable: bool,
    },
    /// Chain of four octahedral 3-spheres
    Delta4,
    /// Chain of four copies of delta4
    Delta16,
    /// Flag 3-manifold with β₁ = b and γ₂ = 16b
    GammaTight {
        #[arg(long)]
        b: usize,
    },
    /// Staircase product of two factors: edge, cycleN, octN, a fixture name or a facet file
    Staircase {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Barycentric subdivision of a facet file
    Barycentric { input: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    /// Number of vertices
    Vertices,
    /// γ₂ of a 3-manifold
    Gamma2,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Seed complex, plain or JSON facet file
    pub path: PathBuf,
    #[arg(long, value_enum, default_value = "vertices")]
    pub objective: ObjectiveArg,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub rounds: u64,
    /// Vertex count reached by the subdivisions of each round [default: f₀ of the seed + 4]
    #[arg(long)]
    pub blowup: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write each archived minimum here as <digest>.txt with a <digest>.json sidecar
    #[arg(long)]
    pub archive_dir: Option<PathBuf>,
    /// Manifold label for the archive metadata [default: the seed's name]
    #[arg(long)]
    pub label: Option<String>,
    /// Worker threads, 0 for one per core
    #[arg(long, env = "FLAGTRI_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Moves allowed per round before it is abandoned
    #[arg(long, default_value_t = 10_000)]
    pub max_moves: usize,
    /// Suppress per-round progress lines
    #[arg(long, short)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Archive directory written by `search` or `construct --archive-dir`
    pub dir: PathBuf,
    /// Emit CSV instead of an aligned table
    #[arg(long)]
    pub csv: bool,
}
