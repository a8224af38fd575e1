//! Run-wide settings shared by every subcommand.

use anyhow::{bail, Result};

/// Serialization format for emitted matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Canonical format; carries exact entries and all metadata.
    Json,
    /// Lossy export: floating entries only, no params or exact records.
    Csv,
}

/// Settings every command reads: comparison tolerance, output format,
/// exact-mode flag and the seed for randomized sweeps.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub tolerance: f64,
    pub format: Format,
    pub exact: bool,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(tolerance: f64, format: Format, exact: bool, seed: u64) -> Result<Self> {
        if !(tolerance > 0.0) {
            bail!("tolerance must be positive, got {tolerance}");
        }
        Ok(Self {
            tolerance,
            format,
            exact,
            seed,
        })
    }
}
