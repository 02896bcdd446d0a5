use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nspairs_cli::commands::{self, Construction, GermSource, HigherMatrix, Output};
use nspairs_cli::CliResult;

#[derive(Parser)]
#[command(name = "nspairs", version, about = "Linking matrices, gradient degrees and Milnor fiber invariants")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    /// Suppress normal output; only the exit status and errors remain.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a linking matrix comes from an NS-pair.
    Classify {
        /// `.lkm` matrix file.
        file: PathBuf,
        /// Dimension n (fiber S^n_(k+1)); defaults to 3 for skew and 4 for symmetric matrices.
        #[arg(long)]
        dimension: Option<u32>,
        /// Write the NS-pair record (`.nsr`) here; fails unless det A = ±1.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Local degree of the gradient of a germ at the origin.
    Degree {
        /// Germ expression, e.g. "x^3 - 3*x*y^2".
        germ: Option<String>,
        /// Comma-separated variable names.
        #[arg(long, value_delimiter = ',', default_value = "x,y")]
        vars: Vec<String>,
        /// Read the germ from a `.germ` file instead.
        #[arg(long, conflicts_with = "germ")]
        file: Option<PathBuf>,
        /// Component of the `.germ` file (default: the first).
        #[arg(long, requires = "file")]
        component: Option<String>,
        /// Cross-check with an independent method.
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
        /// Circle radius for the winding oracle.
        #[arg(long, default_value = "1/10")]
        radius: String,
    },
    /// Derive a new invariant record.
    Construct {
        #[command(subcommand)]
        op: ConstructOp,
        /// Write the resulting record (`.nsr`) here.
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
    /// Print a unimodular linking matrix made of 2x2 blocks.
    Generate {
        /// Number of blocks.
        #[arg(long)]
        blocks: usize,
        /// Use the symmetric block [[0, 1], [1, 0]] instead of the skew one.
        #[arg(long)]
        symmetric: bool,
        /// Also write the `.lkm` file here.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Winding,
}

#[derive(Subcommand)]
enum ConstructOp {
    /// Looijenga connected sum of an NS-pair (`.nsr` or `.lkm`) with its mirror.
    Sum { input: PathBuf },
    /// Artin spinning.
    Spin { input: PathBuf },
    /// Compose a germ record with a linear projection.
    Project { input: PathBuf },
    /// Germ (R^2n, 0) → (R^n, 0) from an even unimodular linking matrix.
    Higher {
        #[arg(long)]
        n: u32,
        /// Use a direct sum of this many unimodular 2x2 blocks.
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        blocks: Option<usize>,
        /// Read the matrix from an `.lkm` file.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Classify { file, dimension, output } => commands::classify(file, *dimension, output.as_deref()),
        Command::Degree { germ, vars, file, component, oracle, radius } => {
            let radius = match oracle {
                Some(Oracle::Winding) => Some(commands::parse_radius(radius)?),
                None => None,
            };
            let source = match (germ, file) {
                (Some(expression), None) => GermSource::Text { expression, variables: vars },
                (None, Some(path)) => GermSource::File { path, component: component.as_deref() },
                _ => {
                    return Err(nspairs_cli::CliError::Input("give a germ expression or --file".into()))
                }
            };
            commands::degree(source, radius.as_ref())
        }
        Command::Construct { op, output } => {
            let c = match op {
                ConstructOp::Sum { input } => Construction::Sum(input),
                ConstructOp::Spin { input } => Construction::Spin(input),
                ConstructOp::Project { input } => Construction::Project(input),
                ConstructOp::Higher { n, blocks, matrix } => Construction::Higher {
                    n: *n,
                    matrix: match (blocks, matrix) {
                        (_, Some(p)) => HigherMatrix::File(p),
                        (Some(b), None) => HigherMatrix::Blocks(*b),
                        (None, None) => unreachable!("clap requires one of them"),
                    },
                },
            };
            commands::construct(c, output.as_deref())
        }
        Command::Generate { blocks, symmetric, output } => {
            commands::generate(*blocks, *symmetric, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !cli.quiet {
                match cli.emit {
                    Emit::Text => println!("{}", out.text),
                    Emit::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("valid JSON")),
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
