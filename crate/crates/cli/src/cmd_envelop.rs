//! `envelop`: expand v_ra over Racah unit tensors and report the
//! coefficients and reconstruction residual.

use anyhow::{bail, Result};
use clap::Args;

use mubkit_cli::config::RunConfig;
use mubkit_core::space::{AngularSpace, VraParams};
use mubkit_core::{matrix, su2ops, wigner};

use crate::util;

/// Factorial growth in the tensor recursion makes larger spins slow and
/// numerically pointless.
const MAX_TWO_J: u32 = 12;

#[derive(Args, Debug)]
pub struct EnvelopArgs {
    /// Doubled spin 2j (d = 2j + 1); at most 12
    #[arg(short = 'j', long = "two-j")]
    pub two_j: Option<u32>,
    /// Boundary parameter r (float, integer, or p/q)
    #[arg(short = 'r', default_value = "0", allow_negative_numbers = true)]
    pub r: String,
    /// Basis label a
    #[arg(short = 'a', default_value_t = 0)]
    pub a: u32,
    /// Re-derive the closed-form expansions for 2j = 1, 2, 3
    #[arg(long = "check-cases")]
    pub check_cases: bool,
}

pub fn run(cfg: &RunConfig, args: &EnvelopArgs) -> Result<bool> {
    let mut ok = true;
    let mut did_anything = false;

    if let Some(two_j) = args.two_j {
        did_anything = true;
        if two_j == 0 || two_j > MAX_TWO_J {
            bail!("2j = {two_j} outside valid range 1..={MAX_TWO_J}");
        }
        let r = util::parse_r(&args.r)?;
        let s = AngularSpace::new(two_j);
        let b = wigner::b_coefficients(&s, r.value, args.a)?;
        println!(
            "expansion of v_ra over unit tensors at 2j = {two_j}, r = {}, a = {}:",
            r.value, args.a
        );
        let mut nonzero = 0usize;
        for ((k, p), value) in b.entries() {
            if value.norm() <= cfg.tolerance {
                continue;
            }
            nonzero += 1;
            println!("  b[k={k},p={p}] = {}", util::complex_str(*value, 1e-14));
        }
        println!("  {nonzero} nonzero coefficients");

        let params = VraParams::new(&s, r.value, args.a)?;
        let residual = matrix::residual(
            &b.reconstruct()?,
            &su2ops::v_ra_matrix(&s, &params),
        );
        let routes = b.route_disagreement;
        if residual <= cfg.tolerance && routes <= cfg.tolerance {
            println!("ok reconstruction: residual {residual:.3e}, trace-vs-formula disagreement {routes:.3e}");
        } else {
            println!(
                "VIOLATED reconstruction: residual {residual:.3e}, route disagreement {routes:.3e} (tol {:.0e})",
                cfg.tolerance
            );
            ok = false;
        }
    }

    if args.check_cases {
        did_anything = true;
        for two_j in 1..=3u32 {
            let s = AngularSpace::new(two_j);
            let params = VraParams::new(&s, 0.0, 0)?;
            let dev = matrix::residual(
                &wigner::v00_closed_forms(&s)?,
                &su2ops::v_ra_matrix(&s, &params),
            );
            if dev <= cfg.tolerance {
                println!("ok closed form at 2j = {two_j}: residual {dev:.3e}");
            } else {
                println!(
                    "VIOLATED closed form at 2j = {two_j}: residual {dev:.3e} > {:.0e}",
                    cfg.tolerance
                );
                ok = false;
            }
        }
    }

    if !did_anything {
        bail!("give -j/--two-j, --check-cases, or both");
    }
    Ok(ok)
}
