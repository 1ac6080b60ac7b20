//! `combhopf` command-line front end.

mod commands;
mod formats;
mod resolve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::TypedValueParser;
use clap::{Parser, Subcommand};
use combhopf::scalar::{set_conductor_bound, DEFAULT_CONDUCTOR_BOUND};
use combhopf::tensor::DEFAULT_ELEMENT_BUDGET;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

#[derive(Parser, Debug)]
#[command(name = "combhopf", version, about = "Hopf-triplet verification and combed trisection invariants")]
pub struct Cli {
    /// Largest cyclotomic conductor allowed in arithmetic.
    #[arg(long, global = true, env = "HOPFCOMB_CONDUCTOR", default_value_t = DEFAULT_CONDUCTOR_BOUND,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub conductor: u32,
    /// Maximum number of scalars in any intermediate tensor.
    #[arg(long, global = true, env = "HOPFCOMB_BUDGET", default_value_t = DEFAULT_ELEMENT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub budget: usize,
    /// Worker threads for batch commands (default: available cores).
    #[arg(long, global = true, env = "HOPFCOMB_WORKERS", value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub workers: Option<usize>,
    /// Seed for every randomized suite.
    #[arg(long, global = true, env = "HOPFCOMB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, env = "HOPFCOMB_OUT")]
    pub out: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long, global = true, env = "HOPFCOMB_JSON")]
    pub json: bool,
    /// Include wall-clock timings (reports are then not reproducible).
    #[arg(long, global = true, env = "HOPFCOMB_TIMINGS")]
    pub timings: bool,
    /// More detail in summaries; repeat for more.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Verify the Hopf axioms of an algebra file or builtin algebra.
    CheckHopf { algebra: String },
    /// Run conditions (a), (b), (c) on a triplet file or builtin triplet.
    CheckTriplet { triplet: String },
    /// Integrals, phase data and the identities relating them.
    Integrals { algebra: String },
    /// The bracket of a diagram.
    Bracket {
        triplet: String,
        diagram: String,
        /// Also evaluate the second crossing wiring and compare.
        #[arg(long)]
        check_wiring: bool,
    },
    /// The normalized invariant of a diagram.
    Tau { triplet: String, diagram: String },
    /// The three stabilization brackets, computed twice.
    StabBrackets { triplet: String },
    /// Homology of the four-manifold of a diagram.
    Homology { diagram: String },
    /// Move operations.
    Moves {
        #[command(subcommand)]
        cmd: MovesCmd,
    },
    /// Scan a builder family over a parameter grid.
    Scan {
        /// One of a8, bicharacter, group-qt, sweedler-qt.
        family: String,
        /// Parameter grid: one entry per parameter separated by ';', each a
        /// comma list of rationals or an integer range a..b.
        #[arg(long)]
        grid: String,
    },
    /// Show or emit a builtin diagram, triplet or algebra.
    Builtin {
        name: String,
        /// Print the object in its file format.
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum MovesCmd {
    /// Apply random moves and check bracket invariance after each.
    Fuzz {
        triplet: String,
        diagram: String,
        #[arg(long, default_value_t = 100)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_conductor_bound(cli.conductor);
    if let Some(w) = cli.workers {
        // the global pool can only be configured once; later attempts are no-ops
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match commands::run(&cli) {
        Ok(report) => {
            if let Some(path) = &cli.out {
                let text = serde_json::to_string_pretty(&report.json).expect("report serializes") + "\n";
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: io: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("report serializes"));
            } else {
                print!("{}", report.summary);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
