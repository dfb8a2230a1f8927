//! Command-line front end. Exit codes: 0 ok, 1 a check failed, 2 bad
//! usage or input, 3 a resource limit was hit.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::SurfaceArgs;
use framed_core::Error;

#[derive(Parser, Debug)]
#[command(name = "framed", version, about = "Curve graphs of framed surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph snapshot and write JSON, DOT and a distance CSV.
    Graph {
        /// cadm, genus_sep, model_K, model_Kbar or E_graph
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        bound: u32,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Build the pair of disjoint witnesses and write its certificate.
    Flat {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// requested Arf invariant for spin signatures
        #[arg(long)]
        arf: Option<u8>,
        #[arg(long, default_value = "flat.json")]
        out: PathBuf,
    },
    /// Re-run the checks of a certificate or graph snapshot.
    Verify { path: PathBuf },
    /// Print the invariants of a framing.
    Invariants {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Sample Θ(μ) into an admissible curve graph snapshot.
    Theta {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        mu: String,
        /// bound for P(μ)
        #[arg(long, default_value_t = 8)]
        bound: u32,
        /// bound of the cadm snapshot the image lands in
        #[arg(long, default_value_t = 12)]
        target_bound: u32,
        #[arg(long, default_value_t = 4)]
        sample: usize,
    },
    /// Print the level splittings of a multicurve and its candidate checks.
    Levels {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        mu: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Check(String),
    Usage(String),
    Resource(String),
}

impl CliError {
    pub fn usage(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

/// Library errors from an otherwise valid request.
impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExhausted { .. } => CliError::Resource(e.to_string()),
            Error::Construction(_) => CliError::Check(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Graph { kind, surface, bound, out } => commands::graph(&kind, &surface, bound, &out),
        Command::Flat { surface, arf, out } => commands::flat(&surface, arf, &out),
        Command::Verify { path } => commands::verify(&path),
        Command::Invariants { surface } => commands::invariants(&surface),
        Command::Theta { surface, mu, bound, target_bound, sample } => commands::theta(&surface, &mu, bound, target_bound, sample),
        Command::Levels { surface, mu } => commands::levels(&surface, &mu),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Check(m) | CliError::Usage(m) | CliError::Resource(m)) = &e;
            eprintln!("error: {m}");
            ExitCode::from(e.code())
        }
    }
}
