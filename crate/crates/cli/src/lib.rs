//! The `leash` command line: compute, verify, export terrains and benchmark.

pub mod commands;
mod error;
pub mod io;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use commands::run;
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "leash", version, about = "Fréchet distance between polygonal curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the Fréchet distance between two curve files.
    Compute {
        #[command(flatten)]
        pair: CurvePair,
        /// Approximate the Euclidean distance to within a factor 1 + EPSILON.
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Compare the sweep against the bisection oracle.
    Verify {
        #[command(flatten)]
        pair: CurvePair,
        /// Largest accepted relative gap.
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
    },
    /// Print the distance terrain on a regular grid as CSV.
    Terrain {
        #[command(flatten)]
        pair: CurvePair,
        /// Grid points per axis.
        #[arg(long, default_value_t = 64)]
        resolution: usize,
    },
    /// Time the sweep on seeded random curves of growing size.
    Bench {
        /// Metrics to time; repeat the flag for several.
        #[arg(long = "metric", default_values_t = ["linf".to_string(), "l1".to_string(), "euclidean".to_string()])]
        metrics: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Segment counts, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [64usize, 128, 256, 512])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Debug, Args)]
pub struct CurvePair {
    /// First curve (CSV or JSON).
    pub curve_a: PathBuf,
    /// Second curve (CSV or JSON).
    pub curve_b: PathBuf,
    /// euclidean, l1, linf, polygon:<sides> or polytope:<facet-file>.
    #[arg(long, default_value = "euclidean")]
    pub metric: String,
}
