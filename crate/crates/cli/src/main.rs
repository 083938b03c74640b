use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cli::commands::{self, Bounds, Outcome};
use cli::{serialize, CliError};
use harness::Exec;

/// Exit codes: 0 when every check passes, 1 when a check fails, 2 for
/// usage, input and parse errors.
#[derive(Parser)]
#[command(name = "cli", version, about = "Finite groupoids, double groupoids and linear canonical relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input document
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output path; standard output when absent
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the validator of a document and report every check
    Validate {
        #[command(flatten)]
        io: Common,
        /// Expected document kind
        #[arg(long)]
        op: Option<String>,
        /// Checks to report, by name prefix
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
    },
    /// Build a structure: core, hopfoid, induced, inertia, nerve, example, example-inertia, double
    Construct {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        op: String,
        /// Nerve depth
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Linear operations: compose, reduce, factor, lift, two-term
    Linear {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        op: String,
    },
    /// Check every small groupoid, or every small double with --max-squares
    Enumerate {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        max_arrows: Option<usize>,
        #[arg(long)]
        max_squares: Option<usize>,
        /// Simplicial depth
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
    },
}

fn read(path: &Option<PathBuf>) -> Result<String, CliError> {
    let p = path.as_ref().ok_or_else(|| CliError::Usage("--input is required".into()))?;
    std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
}

/// Writes the whole document at once: through a renamed temporary file
/// next to the target, or in one write to standard output.
fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), CliError> {
    match output {
        Some(p) => {
            let dir = p.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (outcome, output): (Outcome, _) = match cli.command {
        Command::Validate { io, op, check } => (commands::run_validate(&read(&io.input)?, op.as_deref(), &check)?, io.output),
        Command::Construct { io, op, depth } => (commands::run_construct(&read(&io.input)?, &op, depth)?, io.output),
        Command::Linear { io, op } => (commands::run_linear(&read(&io.input)?, &op)?, io.output),
        Command::Enumerate { io, max_arrows, max_squares, depth, check } => {
            let extra = io.input.as_ref().map(|_| read(&io.input)).transpose()?;
            let bounds = Bounds { max_arrows, max_squares, depth };
            (commands::run_enumerate(bounds, &check, extra.as_deref(), Exec::default())?, io.output)
        }
    };
    emit(&serialize(&outcome.doc), &output)?;
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
