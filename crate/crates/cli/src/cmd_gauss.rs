//! `gauss`: evaluate one generalized quadratic sum, check its identities,
//! or sweep the prime-dimension column magnitude law.

use anyhow::{bail, Result};
use clap::Args;

use mubkit_cli::config::RunConfig;
use mubkit_core::gauss;

use crate::util;

#[derive(Args, Debug)]
pub struct GaussArgs {
    /// u, v, w of S(u,v,w) = sum over k < |w| of e^(i*pi*(u*k^2 + v*k)/w)
    #[arg(value_names = ["U", "V", "W"], num_args = 0..=3, allow_negative_numbers = true)]
    pub uvw: Vec<i64>,
    /// Also check the translation and negation identities and the sign rule
    #[arg(long)]
    pub identity: bool,
    /// Sweep |column sum| = sqrt(d) over the stated lambda, mu ranges
    #[arg(long = "column-sum")]
    pub column_sum: bool,
    /// Dimension for --column-sum
    #[arg(short = 'd', long = "dimension")]
    pub dimension: Option<u32>,
    /// With --column-sum: all lambda = +-1..+-(d-1) and mu = 0..d-1
    #[arg(long)]
    pub all: bool,
    /// Single lambda for --column-sum
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<i64>,
    /// Single mu for --column-sum
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<i64>,
    /// Evaluate despite a parity violation (identities not guaranteed)
    #[arg(long)]
    pub force: bool,
}

pub fn run(cfg: &RunConfig, args: &GaussArgs) -> Result<bool> {
    if args.column_sum {
        return column_sum(cfg, args);
    }
    if args.uvw.len() != 3 {
        bail!("give u v w (three integers), or use --column-sum");
    }
    let (u, v, w) = (args.uvw[0], args.uvw[1], args.uvw[2]);

    let spec = match gauss::GaussSumSpec::new(u, v, w) {
        Ok(spec) => spec,
        Err(e) if args.force => {
            eprintln!("warning: {e}; continuing under --force, identities are not guaranteed");
            let spec = gauss::GaussSumSpec::exploratory(u, v, w)?;
            let s = gauss::gauss_sum(&spec);
            println!("S({u}, {v}, {w}) = {}", util::complex_str(s, cfg.tolerance));
            println!("|S| = {:.12e}", s.norm());
            return Ok(true);
        }
        Err(e) => return Err(e.into()),
    };

    let s = gauss::gauss_sum(&spec);
    println!("S({u}, {v}, {w}) = {}", util::complex_str(s, cfg.tolerance));
    println!("|S| = {:.12e}", s.norm());

    if !args.identity {
        return Ok(true);
    }

    let mut ok = true;
    let mut shift = 0.0f64;
    for t in -2 * w.abs()..=2 * w.abs() {
        shift = shift.max(gauss::translation_identity(&spec, t));
    }
    let negate = gauss::negation_identity(&spec);
    report_residual(&mut ok, "translation identity", shift, cfg.tolerance);
    report_residual(&mut ok, "negation identity", negate, cfg.tolerance);

    match gauss::sign_case(&spec) {
        Ok(case) => {
            println!(
                "sign rule: predicted sign {} ({:?})",
                if case.predicted_sign() >= 0 { "+1" } else { "-1" },
                case.reason()
            );
            if case.predicted_sign() == -1 && s.norm() > cfg.tolerance {
                println!(
                    "VIOLATED sign rule: a predicted minus sign forces S = 0, but |S| = {}",
                    s.norm()
                );
                ok = false;
            }
        }
        Err(e) => println!("sign rule: not applicable ({e})"),
    }
    Ok(ok)
}

fn report_residual(ok: &mut bool, name: &str, residual: f64, tol: f64) {
    if residual <= tol {
        println!("ok {name}: residual {residual:.3e}");
    } else {
        println!("VIOLATED {name}: residual {residual:.3e} > {tol:.0e}");
        *ok = false;
    }
}

fn column_sum(cfg: &RunConfig, args: &GaussArgs) -> Result<bool> {
    let Some(d) = args.dimension else {
        bail!("--column-sum needs -d");
    };
    if d < 2 {
        bail!("--column-sum needs d >= 2");
    }
    let pairs: Vec<(i64, i64)> = if args.all {
        let mut pairs = Vec::new();
        for lam in 1..d as i64 {
            for lam in [lam, -lam] {
                for mu in 0..d as i64 {
                    pairs.push((lam, mu));
                }
            }
        }
        pairs
    } else {
        match (args.lambda, args.mu) {
            (Some(lam), Some(mu)) => vec![(lam, mu)],
            _ => bail!("--column-sum needs --all or both --lambda and --mu"),
        }
    };

    let target = (d as f64).sqrt();
    let mut worst = 0.0f64;
    let mut failed = 0usize;
    for &(lam, mu) in &pairs {
        let value = gauss::hadamard_column_sum(d, lam, mu);
        let dev = (value.norm() - target).abs();
        worst = worst.max(dev);
        if dev > cfg.tolerance {
            failed += 1;
            println!(
                "VIOLATED column magnitude at lambda = {lam}, mu = {mu}: |sum| = {} (want sqrt({d}) = {target})",
                value.norm()
            );
        }
    }
    println!(
        "{} checks of |column sum| = sqrt({d}): max deviation {worst:.3e} (tol {:.0e})",
        pairs.len(),
        cfg.tolerance
    );
    Ok(failed == 0)
}
