//! Small helpers shared by the subcommands.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use num_complex::Complex64;

use mubkit_cli::config::{Format, RunConfig};
use mubkit_cli::doc::{DocumentKind, ExactEntry, MatrixDocument, Metadata};
use mubkit_core::space::AngularSpace;
use mubkit_core::{mub, Phase};

/// The boundary parameter r, as parsed from the command line. Exact
/// generation needs the rational form, which survives for integer and
/// `p/q` inputs.
#[derive(Debug, Clone, Copy)]
pub struct RParam {
    pub value: f64,
    pub exact: Option<(i64, i64)>,
}

pub fn parse_r(text: &str) -> Result<RParam> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().context("parsing r numerator")?;
        let den: i64 = den.trim().parse().context("parsing r denominator")?;
        if den == 0 {
            bail!("r denominator must be nonzero");
        }
        return Ok(RParam {
            value: num as f64 / den as f64,
            exact: Some((num, den)),
        });
    }
    if let Ok(int) = text.parse::<i64>() {
        return Ok(RParam {
            value: int as f64,
            exact: Some((int, 1)),
        });
    }
    let value: f64 = text.parse().context("parsing r (use a float or p/q)")?;
    Ok(RParam { value, exact: None })
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

pub fn complex_str(z: Complex64, tol: f64) -> String {
    if z.norm() < tol {
        return "0".into();
    }
    if z.im.abs() < tol {
        return format!("{}", z.re);
    }
    if z.re.abs() < tol {
        return format!("{}i", z.im);
    }
    format!("{} {} {}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
}

/// Column convention note recorded in every basis document.
pub const BASIS_ORDER: &str =
    "rows by decreasing m (i = j - m, i = 0..d-1); columns by increasing alpha";

/// Column convention note recorded in every Hadamard document.
pub const HADAMARD_ORDER: &str = "rows by ascending computational label k = 0..d-1 \
     (reverse of the decreasing-m operator convention); columns by increasing alpha; \
     scale times the reversed columns gives the basis vectors";

/// Build the document for one eigenbasis of {j^2, v_ra}; with `exact`,
/// also record the phase exponents (needs rational r).
pub fn basis_document(s: &AngularSpace, r: RParam, a: u32, exact: bool) -> Result<MatrixDocument> {
    let d = s.dim();
    let basis = match (exact, r.exact) {
        (true, Some((rn, rd))) => mub::eigenbasis_exact(s, rn, rd, a)?,
        (true, None) => bail!("exact mode needs rational r (an integer or p/q)"),
        (false, _) => mub::eigenbasis(s, r.value, a)?,
    };
    let mut params = BTreeMap::new();
    params.insert("d".into(), serde_json::json!(d));
    params.insert("two_j".into(), serde_json::json!(s.two_j()));
    params.insert("r".into(), serde_json::json!(r.value));
    if let Some((rn, rd)) = r.exact {
        params.insert("r_exact".into(), serde_json::json!(format!("{rn}/{rd}")));
    }
    params.insert("a".into(), serde_json::json!(a));
    let entries = (0..d)
        .map(|row| {
            (0..d)
                .map(|alpha| {
                    let z = basis.vector(alpha)[row];
                    [z.re, z.im]
                })
                .collect()
        })
        .collect();
    let mut doc = MatrixDocument {
        schema: mubkit_cli::doc::SCHEMA_VERSION,
        kind: DocumentKind::Basis,
        dimension: d,
        params,
        metadata: Metadata::new(
            "eigenbasis of the cyclic operator v_ra; columns are the basis vectors",
            BASIS_ORDER,
        ),
        entries: Some(entries),
        scale: None,
        exact_entries: None,
    };
    if exact {
        let phases = basis
            .exact_coefficients()
            .expect("exact construction keeps phases");
        let denom_pi = phases
            .iter()
            .flatten()
            .fold(d as i64, |acc, p: &Phase| lcm(acc, p.den()));
        let exact_entries = (0..d)
            .map(|row| {
                (0..d)
                    .map(|alpha| ExactEntry {
                        exp: phases[alpha][row]
                            .with_denominator(denom_pi)
                            .expect("lcm covers every denominator"),
                        denom: 2 * denom_pi,
                    })
                    .collect()
            })
            .collect();
        doc = doc.with_exact(1.0 / (d as f64).sqrt(), exact_entries);
    }
    Ok(doc)
}

/// Build the document for the generalized Hadamard matrix H_a (the r = 0
/// construction); entries are unit-modulus, scale stays 1, and the scale
/// that would turn columns into basis vectors is recorded in params.
pub fn hadamard_document(d: usize, a: u32, exact: bool) -> Result<MatrixDocument> {
    let pm = mub::hadamard_matrix(d, a)?;
    let m = pm.matrix();
    let mut params = BTreeMap::new();
    params.insert("d".into(), serde_json::json!(d));
    params.insert("a".into(), serde_json::json!(a));
    params.insert("r".into(), serde_json::json!(0.0));
    params.insert("column_to_basis_scale".into(), serde_json::json!(pm.scale()));
    let mut doc = MatrixDocument::from_matrix(
        DocumentKind::Hadamard,
        &m,
        params,
        Metadata::new(
            "generalized Hadamard matrix; scaled columns form the eigenbasis of v_0a",
            HADAMARD_ORDER,
        ),
    );
    if exact {
        let exact_entries = (0..d)
            .map(|row| {
                (0..d)
                    .map(|col| ExactEntry {
                        exp: pm.exponent(row, col) as i64,
                        denom: 2 * d as i64,
                    })
                    .collect()
            })
            .collect();
        doc = doc.with_exact(1.0, exact_entries);
    }
    Ok(doc)
}

/// Document for the computational basis (the identity matrix over the
/// decreasing-m labels). It has no phase form, so it stays floating-only.
pub fn computational_document(d: usize) -> MatrixDocument {
    let mut params = BTreeMap::new();
    params.insert("d".into(), serde_json::json!(d));
    let m = mubkit_core::matrix::identity(d);
    MatrixDocument::from_matrix(
        DocumentKind::Basis,
        &m,
        params,
        Metadata::new("computational basis", BASIS_ORDER),
    )
}

/// Write one document under `dir`, honoring the configured format.
/// Returns the path written. CSV loses params and exact records; the
/// caller is expected to have warned once per run.
pub fn write_document(
    cfg: &RunConfig,
    doc: &MatrixDocument,
    dir: &Path,
    stem: &str,
) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    match cfg.format {
        Format::Json => {
            let path = dir.join(format!("{stem}.json"));
            doc.write(&path)?;
            Ok(path)
        }
        Format::Csv => {
            let path = dir.join(format!("{stem}.csv"));
            std::fs::write(&path, doc.to_csv()?)
                .with_context(|| format!("writing {}", path.display()))?;
            Ok(path)
        }
    }
}

/// Print a document to stdout in the configured format.
pub fn print_document(cfg: &RunConfig, doc: &MatrixDocument) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match cfg.format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(doc)?;
            text.push('\n');
            stdout.write_all(text.as_bytes())?;
        }
        Format::Csv => {
            stdout.write_all(doc.to_csv()?.as_bytes())?;
        }
    }
    Ok(())
}

/// One-time notice that CSV drops exact records and metadata.
pub fn csv_lossy_notice(cfg: &RunConfig) {
    if cfg.format == Format::Csv {
        eprintln!("note: CSV export is lossy (floating entries only; params, metadata and exact records are dropped)");
    }
}
