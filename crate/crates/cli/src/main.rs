//! `nbt-workbench`: command-line front end for the nbt-core library.
//!
//! Every command prints a result envelope
//! `{"status","command","version","payload","diagnostics"}`. Exit status is
//! 0 on success, 1 on a domain or input error and 2 on a usage error.

mod commands;
mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{CommandResult, Format};

#[derive(Parser, Debug)]
#[command(
    name = "nbt-workbench",
    version,
    about = "Finite combinatorics of n-types, colorings, random graphs and planar set algebra"
)]
pub struct Cli {
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Primary input for the command (file path or inline JSON).
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<String>,
    /// Write the command's artifact (or its payload) as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub group: Group,
}

#[derive(Subcommand, Debug)]
pub enum Group {
    /// n-types: enumeration, counting, extensions.
    #[command(subcommand)]
    Types(TypesCmd),
    /// Finite conditions: validity, realizers, classification, growth.
    #[command(subcommand)]
    Cond(CondCmd),
    /// Homogeneity of colorings and stabilization.
    #[command(subcommand)]
    Homog(HomogCmd),
    /// Random-graph construction, extension and richness checks, demos.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Symbolic planar sets and filter sums.
    #[command(subcommand)]
    Sets(SetsCmd),
    /// Omega-type prefixes and the chain machinery.
    #[command(subcommand)]
    Omega(OmegaCmd),
}

#[derive(Subcommand, Debug)]
pub enum TypesCmd {
    /// List every n-type in canonical order.
    Enum {
        #[arg(long)]
        n: usize,
    },
    /// T(n), checked against the closed formula.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Append x_{n+1} < y_{n+1} after everything.
    Extend {
        /// List form (e.g. `x1<y1`) or type JSON.
        #[arg(long = "type")]
        ty: Option<String>,
    },
    /// The 2-type recipe: rename 2 to 3, insert x2 = x1 and y2 after y1.
    Insert {
        #[arg(long = "type")]
        ty: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CondCmd {
    /// Report which condition clauses a point set violates.
    Check {
        #[arg(long)]
        cond: Option<String>,
    },
    /// Lexicographically least subset realizing a type.
    Realize {
        #[arg(long)]
        cond: Option<String>,
        #[arg(long = "type")]
        ty: String,
    },
    /// Group the n-subsets by realized type.
    Classify {
        #[arg(long)]
        cond: Option<String>,
        #[arg(long)]
        n: usize,
    },
    /// Add realizers for every n-type the condition lacks.
    Grow {
        /// Starting condition; empty when omitted.
        #[arg(long)]
        cond: Option<String>,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct ColoringOpts {
    /// Coloring table: JSON `{"n","entries":[{"subset","color"}]}` or a `.csv` file.
    #[arg(long)]
    pub coloring: Option<String>,
    /// Rule coloring: realized-type, constant, edge-relation, palette-edges.
    #[arg(long)]
    pub rule: Option<String>,
    /// Arity of rule colorings.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Color for the constant rule.
    #[arg(long)]
    pub color: Option<String>,
    /// Graph for the edge-relation rule.
    #[arg(long)]
    pub graph: Option<String>,
    /// Edge coloring for the palette-edges rule.
    #[arg(long)]
    pub edge_coloring: Option<String>,
    /// Restrict a table's domain to one type (list form).
    #[arg(long)]
    pub domain: Option<String>,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum ModeArg {
    Exact,
    Greedy,
    Auto,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum DirectionArg {
    Increasing,
    Decreasing,
}

#[derive(Subcommand, Debug)]
pub enum HomogCmd {
    /// Is [H]_τ monochromatic?
    Check {
        /// Ground condition of the coloring.
        #[arg(long)]
        cond: Option<String>,
        /// Subset H of the ground; the whole ground when omitted.
        #[arg(long)]
        set: Option<String>,
        #[arg(long = "type")]
        ty: String,
        #[command(flatten)]
        coloring: ColoringOpts,
    },
    /// Largest H with [H]_τ monochromatic.
    Search {
        #[arg(long)]
        cond: Option<String>,
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 0)]
        min_size: usize,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        #[command(flatten)]
        coloring: ColoringOpts,
    },
    /// Classes met by the realized-type coloring versus T(n).
    Floor {
        #[arg(long)]
        cond: Option<String>,
        #[arg(long)]
        n: usize,
    },
    /// Componentwise stabilization of a lexicographically monotone sequence.
    Stabilize {
        /// `{"rows":["010",...]}` as a file or inline.
        #[arg(long)]
        seq: Option<String>,
        /// Comma-separated rows, e.g. `000,001,011`.
        #[arg(long, conflicts_with = "seq")]
        rows: Option<String>,
        #[arg(long, value_enum, default_value = "increasing")]
        direction: DirectionArg,
    },
    /// Read S(x,z) off R(x,y,z) along the columns of H.
    ExtractS {
        /// `{"bounds":[X,Y,Z],"members":[[x,y,z],...]}`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        cond: String,
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// Run the configuration schedule.
    Build {
        /// Number of schedule steps.
        #[arg(long, conflicts_with = "through")]
        steps: Option<usize>,
        /// Run every step whose parameters lie in 0..=M.
        #[arg(long, value_name = "M")]
        through: Option<u32>,
        /// Build a t-color edge coloring instead of a graph.
        #[arg(long, value_name = "T")]
        palette: Option<usize>,
    },
    /// Configurations with at most k parameters among the first m vertices lacking a witness.
    Check {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Does some subset have the internal k-extension property?
    Rich {
        #[arg(long)]
        graph: Option<String>,
        /// Vertex list, e.g. `1,2,5`.
        #[arg(long)]
        vertices: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Rich columns are never homogeneous for the vertical type.
    DemoNoreverse {
        #[arg(long, default_value_t = 50)]
        conditions: usize,
    },
    /// A column over a t-color random coloring meets all t classes.
    DemoColoring {
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum SetsCmd {
    /// The vertical section at x.
    Column {
        #[arg(long)]
        expr: Option<String>,
        #[arg(long)]
        x: u64,
    },
    /// Horizon and tail coefficients.
    Tail {
        #[arg(long)]
        expr: Option<String>,
    },
    /// Membership in the Fréchet square.
    Fr2 {
        #[arg(long)]
        expr: Option<String>,
    },
    /// Meets every member of the Fréchet square.
    Meets {
        #[arg(long)]
        expr: Option<String>,
    },
    /// Membership in the U-indexed sum of the V_n.
    Sum {
        #[arg(long)]
        expr: Option<String>,
        /// `frechet`, `principal:k` or stand-in JSON.
        #[arg(long)]
        u: String,
        /// A stand-in used everywhere, or `{"default":..,"exceptions":{..}}`.
        #[arg(long)]
        v: String,
    },
    /// Membership of B in the first-projection image of the sum.
    Image {
        /// `{"finite":[..]}` or `{"cofinite":[..]}`.
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum OmegaCmd {
    /// Check the finitely checkable clauses of a prefix.
    Validate {
        /// Prefix JSON or `grid:N` (grid walk cut after N steps).
        #[arg(long)]
        prefix: Option<String>,
    },
    /// The condition obtained by valuing class i by z_i.
    Phi {
        #[arg(long)]
        prefix: Option<String>,
        #[arg(long)]
        z: String,
    },
    /// The label D(s) of the next class.
    Assignd {
        #[arg(long)]
        prefix: Option<String>,
        /// Increasing values, possibly empty.
        #[arg(long, default_value = "")]
        s: String,
    },
    /// Check z_n ∈ Z(D(z_0..z_{n-1})) along z.
    Zchain {
        #[arg(long)]
        prefix: Option<String>,
        #[arg(long)]
        z: String,
        /// `{"U":{...},"V_0":{...},...}`.
        #[arg(long)]
        zs: String,
    },
    /// Is <x,y> in the set H built from Z?
    Hmember {
        /// `x,y` or `[x,y]`.
        #[arg(long)]
        point: String,
        #[arg(long)]
        zs: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = commands::run(&cli);
    let failed = result.payload.is_err();
    // A closed pipe downstream is not an error of ours.
    let _ = writeln!(
        std::io::stdout().lock(),
        "{}",
        result.render(cli.format).trim_end()
    );
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

impl CommandResult {
    fn failed(command: String, err: anyhow::Error) -> Self {
        CommandResult {
            command,
            payload: Err(format!("{err:#}")),
            diagnostics: Vec::new(),
        }
    }
}
