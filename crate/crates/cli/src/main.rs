mod cert;
mod commands;
mod defs;
mod eval;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Exact checks and faithful-representation builders for finite conformal
/// algebras.
#[derive(Parser, Debug)]
#[command(name = "confalg", version)]
pub struct Cli {
    /// Definition file (JSON). Builtin names resolve without one.
    #[arg(short, long, global = true)]
    pub file: Option<PathBuf>,
    /// Print the certificate as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// D-degree bound for searches (unit search).
    #[arg(long, global = true)]
    pub degree_bound: Option<u32>,
    /// Cap on worker threads.
    #[arg(long, env = "CONFALG_THREADS", global = true, hide_env_values = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run checks on an algebra, representation or pairing.
    Check(CheckArgs),
    /// Build a representation of an algebra.
    BuildRep(BuildArgs),
    /// Evaluate an expression such as `lprod(x, x)`.
    Eval { object: String, expression: String },
    /// Ranks of the spans of monomials of length at most n.
    Growth {
        object: String,
        /// Generators, one per flag.
        #[arg(short, long = "generator", required = true)]
        generators: Vec<String>,
        #[arg(short, long, default_value_t = 6)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").args(["axioms", "units", "solvable", "central_pbw"])))]
pub struct CheckArgs {
    pub object: String,
    /// Associativity / Jacobi identity / module law / pairing conditions.
    #[arg(long)]
    pub axioms: bool,
    /// Search for left and right units.
    #[arg(long)]
    pub units: bool,
    /// Derived series and solvable locality bounds.
    #[arg(long)]
    pub solvable: bool,
    /// Central PBW property for the bound, either `k` or `x=2,y=1`.
    #[arg(long, value_name = "N")]
    pub central_pbw: Option<String>,
    /// Slack for the solvable bounds.
    #[arg(long = "K", default_value_t = 1)]
    pub k: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    AdjoinUnit,
    Double,
    CentralPbw,
    Solvable,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    pub object: String,
    #[arg(long, value_enum)]
    pub method: Method,
    /// Slack for the solvable bounds.
    #[arg(long = "K", default_value_t = 1)]
    pub k: u32,
    /// Locality bound for the central PBW module: `k` or `x=2,y=1`.
    #[arg(long = "N")]
    pub n: Option<String>,
    /// Truncation for the adjoined unit; defaults to M + 1.
    #[arg(long = "Mprime")]
    pub m_prime: Option<u32>,
    /// Pairing from the definition file (double method); defaults to the
    /// canonical pairing of the trivial rank-one module with the adjoint one.
    #[arg(long)]
    pub pairing: Option<String>,
    /// Write the representation to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Precondition(String),
}

impl CliError {
    pub fn from_core(e: confalg::Error) -> Self {
        match e {
            confalg::Error::Precondition(_) | confalg::Error::WellDefinedness { .. } => {
                CliError::Precondition(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }

    pub fn context(self, path: &str) -> Self {
        match self {
            CliError::Input(s) => CliError::Input(format!("{path}: {s}")),
            CliError::Precondition(s) => CliError::Precondition(format!("{path}: {s}")),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<confalg::Error> for CliError {
    fn from(e: confalg::Error) -> Self {
        CliError::from_core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "input error: {s}"),
            CliError::Precondition(s) => write!(f, "{s}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        confalg::par::set_thread_cap(n);
    }
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("confalg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
