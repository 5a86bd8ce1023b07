use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sgt_core::format::{parse, Format, Parsed};

mod commands;

#[derive(Debug, Parser)]
#[command(
    name = "sgt",
    version,
    about = "Right congruences and structure of finite semigroups"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Input format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,

    /// Input file, or `-` for stdin.
    #[arg(short = 'i', long = "input", global = true)]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Cayley,
    Transformation,
    Rees,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Auto => Format::Auto,
            FormatArg::Cayley => Format::Cayley,
            FormatArg::Transformation => Format::Transformation,
            FormatArg::Rees => Format::Rees,
        }
    }
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Generating pairs: "a b", several separated by `,` or `;`; repeatable.
    #[arg(long = "pairs", value_name = "PAIRS")]
    pairs: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Size, identity, zero, idempotents and structural properties.
    Info,
    /// Green's relations, egg-box diagrams and maximal subgroups.
    Green,
    /// Enumerate all right congruences.
    Congruences {
        /// Fail if there are more than this many.
        #[arg(long)]
        max: Option<usize>,
    },
    /// The right congruence generated by a pair set.
    Close {
        #[command(flatten)]
        pairs: PairArgs,
        /// Generate a two-sided congruence instead.
        #[arg(long)]
        two_sided: bool,
    },
    /// A shortest X-sequence between two elements.
    Witness {
        #[command(flatten)]
        pairs: PairArgs,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// A small generating pair set for the congruence generated by the pairs.
    Minimize {
        #[command(flatten)]
        pairs: PairArgs,
        /// Candidate count up to which the search is exhaustive.
        #[arg(long, default_value_t = sgt_core::DEFAULT_EXACT_LIMIT)]
        exact_limit: usize,
    },
    /// Longest shortest X-sequence between related elements.
    Diameter {
        #[command(flatten)]
        pairs: PairArgs,
    },
    /// The Schützenberger group of an element's H-class.
    Schutz {
        #[arg(long)]
        element: usize,
    },
    /// Semilattice decompositions.
    Decompose {
        #[arg(long, value_enum)]
        mode: DecomposeMode,
    },
    /// Build a Rees matrix semigroup, or find Rees coordinates of one.
    Rees {
        /// Print the Cayley table of a Rees-format input.
        #[arg(
            long,
            conflicts_with = "to_coordinates",
            required_unless_present = "to_coordinates"
        )]
        construct: bool,
        /// Print a Rees structure isomorphic to the input.
        #[arg(long)]
        to_coordinates: bool,
    },
    /// The θ right congruence of a Rees-format input with zero.
    Theta,
    /// Replay a generating-set construction on the input.
    Verify(commands::VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DecomposeMode {
    /// Completely regular: semilattice of completely simple components.
    Cr,
    /// Commutative: semilattice of archimedean components.
    Arch,
}

/// A failure mapped to an exit code with a one-line diagnostic.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Library(sgt_core::Error),
    Io(String),
}

impl From<sgt_core::Error> for Failure {
    fn from(e: sgt_core::Error) -> Self {
        Failure::Library(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Io(m) => f.write_str(m),
            Failure::Library(e) => write!(f, "{e}"),
        }
    }
}

/// Result of a verb: its stdout text and whether it reports success.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

pub fn read_input(cli: &Cli) -> Result<Parsed, Failure> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Failure::Usage("no input given; use -i PATH or -i -".into()))?;
    read_file(path, cli.format.into())
}

pub fn read_file(path: &PathBuf, format: Format) -> Result<Parsed, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    Ok(parse(&text, format)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            eprintln!("{first}");
            return ExitCode::from(1);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if !out.text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
