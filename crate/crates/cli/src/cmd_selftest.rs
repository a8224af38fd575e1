//! `selftest`: run the named invariant suites and report each check.

use anyhow::{bail, Result};
use clap::Args;

use mubkit_cli::config::RunConfig;
use mubkit_core::selftest::{self, Suite};

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// quon | su2 | mub | gauss | wigner | all
    #[arg(long, default_value = "all")]
    pub suite: String,
}

pub fn run(cfg: &RunConfig, args: &SelftestArgs) -> Result<bool> {
    let Some(&(_, suite)) = Suite::NAMES
        .iter()
        .find(|(name, _)| *name == args.suite.to_lowercase())
    else {
        let names: Vec<&str> = Suite::NAMES.iter().map(|&(n, _)| n).collect();
        bail!("unknown suite '{}'; choose one of {}", args.suite, names.join(", "));
    };

    let checks = selftest::run(suite, cfg.seed);
    let mut failed = 0usize;
    for check in &checks {
        if check.passed() {
            println!(
                "ok   {:32} residual {:.3e} (tol {:.0e})",
                check.name, check.residual, check.tol
            );
        } else {
            failed += 1;
            println!(
                "FAIL {:32} residual {:.3e} > tol {:.0e}; violated identity: {}",
                check.name, check.residual, check.tol, check.detail
            );
        }
    }
    println!(
        "suite '{}' (seed {}): {}/{} checks passed",
        suite.name(),
        cfg.seed,
        checks.len() - failed,
        checks.len()
    );
    Ok(failed == 0)
}
