mod commands;
mod util;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use util::{CliResult, OutputFormat};

/// Braid-group Bell bases and their correlation structure.
#[derive(Parser)]
#[command(name = "braidbell", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the braid-group and Yang-Baxter relations for B_n
    Verify {
        /// Number of qubits (2..=6)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print one Bell state
    Bell {
        /// Number of qubits
        #[arg(long)]
        n: usize,
        /// 1-based state index (1..=2^n)
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Hilbert-Schmidt coefficient report of a state, optionally traced
    Hs {
        /// State spec: "bell", "ghz", or "file:PATH"
        state: String,
        /// Number of qubits (bell spec only)
        #[arg(long)]
        n: Option<usize>,
        /// 1-based state index (bell spec only)
        #[arg(long)]
        index: Option<usize>,
        /// Qubits to trace out first, e.g. "D" or "C,D"
        #[arg(long)]
        trace: Option<String>,
        /// Reporting threshold for nonzero coefficients
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Concurrence and PPT analysis of a two-qubit reduction
    Analyze {
        /// State spec: "bell", "ghz", or "file:PATH"
        state: String,
        /// Number of qubits (bell spec only)
        #[arg(long)]
        n: Option<usize>,
        /// 1-based state index (bell spec only)
        #[arg(long)]
        index: Option<usize>,
        /// Qubits to trace out so that exactly two remain
        #[arg(long)]
        trace: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Apply a braid word to a computational basis state
    Braid {
        /// Word over the generators, e.g. "s1 s2" or "s2^-1 s1"
        word: String,
        /// Number of qubits
        #[arg(long)]
        n: usize,
        /// 1-based computational input index
        #[arg(long)]
        input: usize,
        /// Also survey all two-qubit reductions of the result
        #[arg(long)]
        survey: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Verify { n, format } => commands::verify(n, format),
        Command::Bell { n, index, format } => commands::bell(n, index, format),
        Command::Hs { state, n, index, trace, tol, format } => {
            commands::hs(&state, n, index, trace.as_deref(), tol, format)
        }
        Command::Analyze { state, n, index, trace, format } => {
            commands::analyze(&state, n, index, trace.as_deref(), format)
        }
        Command::Braid { word, n, input, survey, format } => {
            commands::braid(&word, n, input, survey, format)
        }
    }
}

fn main() -> ExitCode {
    // die quietly on closed pipes (e.g. `braidbell ... | head`) instead
    // of panicking in println
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
