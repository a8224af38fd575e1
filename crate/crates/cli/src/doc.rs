//! Machine-readable matrix documents.
//!
//! JSON is the canonical rendering: it carries floating entries, optional
//! exact phase records, parameters and metadata, and round-trips
//! bit-exactly. CSV export is lossy (floating entries only) and callers
//! must flag it as such.
//!
//! Exact records encode unit-modulus values: entry = scale ·
//! e^{2πi·exp/denom}. Floating and exact renderings of the same document
//! agree to better than 1e−12; [`MatrixDocument::consistency`] measures
//! the worst disagreement.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use mubkit_core::OperatorMatrix;

pub const SCHEMA_VERSION: u32 = 1;

/// What the matrix in a document represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DocumentKind {
    Operator,
    Basis,
    Hadamard,
    OverlapReport,
    CensusReport,
}

impl std::fmt::Display for DocumentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            DocumentKind::Operator => "operator",
            DocumentKind::Basis => "basis",
            DocumentKind::Hadamard => "hadamard",
            DocumentKind::OverlapReport => "overlap-report",
            DocumentKind::CensusReport => "census-report",
        };
        f.write_str(name)
    }
}

/// Tool provenance plus the conventions a reader needs to interpret the
/// entries without guessing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Metadata {
    /// Emitting tool and version.
    pub tool: String,
    /// Descriptive name of the construction or identity behind the matrix.
    pub identity: String,
    /// Row/column ordering convention of the entries.
    pub column_order: String,
}

impl Metadata {
    pub fn new(identity: impl Into<String>, column_order: impl Into<String>) -> Self {
        Self {
            tool: format!("mubkit {}", env!("CARGO_PKG_VERSION")),
            identity: identity.into(),
            column_order: column_order.into(),
        }
    }
}

/// One exact entry: the unit-modulus value e^{2πi·exp/denom}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactEntry {
    pub exp: i64,
    pub denom: i64,
}

impl ExactEntry {
    pub fn value(&self) -> Complex64 {
        Complex64::cis(std::f64::consts::TAU * self.exp as f64 / self.denom as f64)
    }
}

/// A matrix with enough context to be re-read and re-verified.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub schema: u32,
    pub kind: DocumentKind,
    pub dimension: usize,
    /// Generation parameters (d or 2j, r, a, ...), plus report fields for
    /// the report kinds.
    pub params: BTreeMap<String, serde_json::Value>,
    pub metadata: Metadata,
    /// Floating entries, row-major, each as [re, im]. Always equal to
    /// scale times the exact entry when both renderings are present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<[f64; 2]>>>,
    /// Common scale multiplying every exact entry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_entries: Option<Vec<Vec<ExactEntry>>>,
}

impl MatrixDocument {
    /// Floating-only document for an arbitrary complex matrix.
    pub fn from_matrix(
        kind: DocumentKind,
        m: &OperatorMatrix,
        params: BTreeMap<String, serde_json::Value>,
        metadata: Metadata,
    ) -> Self {
        let entries = (0..m.nrows())
            .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
            .collect();
        Self {
            schema: SCHEMA_VERSION,
            kind,
            dimension: m.nrows(),
            params,
            metadata,
            entries: Some(entries),
            scale: None,
            exact_entries: None,
        }
    }

    /// Attach exact records; the floating entries must satisfy
    /// entry = scale · e^{2πi·exp/denom}.
    pub fn with_exact(mut self, scale: f64, exact: Vec<Vec<ExactEntry>>) -> Self {
        self.scale = Some(scale);
        self.exact_entries = Some(exact);
        self
    }

    /// Rebuild the matrix, preferring floating entries.
    pub fn to_matrix(&self) -> Result<OperatorMatrix> {
        if let Some(entries) = &self.entries {
            let rows = entries.len();
            if rows != self.dimension {
                bail!(
                    "document says dimension {}, found {} rows",
                    self.dimension,
                    rows
                );
            }
            let cols = entries.first().map_or(0, |r| r.len());
            if entries.iter().any(|r| r.len() != cols) {
                bail!("ragged entry rows");
            }
            let m = OperatorMatrix::from_fn(rows, cols, |r, c| {
                Complex64::new(entries[r][c][0], entries[r][c][1])
            });
            return Ok(m);
        }
        self.exact_matrix()
            .context("document has neither floating nor exact entries")
    }

    /// Rebuild the matrix from the exact records alone.
    pub fn exact_matrix(&self) -> Result<OperatorMatrix> {
        let exact = self
            .exact_entries
            .as_ref()
            .context("document has no exact entries")?;
        let scale = self.scale.unwrap_or(1.0);
        let rows = exact.len();
        let cols = exact.first().map_or(0, |r| r.len());
        if exact.iter().any(|r| r.len() != cols) {
            bail!("ragged exact rows");
        }
        Ok(OperatorMatrix::from_fn(rows, cols, |r, c| {
            exact[r][c].value() * scale
        }))
    }

    /// Worst disagreement between the floating and exact renderings;
    /// `None` when only one rendering is present.
    pub fn consistency(&self) -> Option<f64> {
        let (entries, exact) = match (&self.entries, &self.exact_entries) {
            (Some(e), Some(x)) => (e, x),
            _ => return None,
        };
        let scale = self.scale.unwrap_or(1.0);
        let mut worst = 0.0f64;
        for (row_f, row_x) in entries.iter().zip(exact) {
            for (f, x) in row_f.iter().zip(row_x) {
                let float = Complex64::new(f[0], f[1]);
                worst = worst.max((float - x.value() * scale).norm());
            }
        }
        Some(worst)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc: Self = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))?;
        if doc.schema != SCHEMA_VERSION {
            bail!(
                "unsupported schema {} in {} (supported: {SCHEMA_VERSION})",
                doc.schema,
                path.display()
            );
        }
        Ok(doc)
    }

    /// Lossy CSV rendering: one line per row, cells alternating re, im.
    pub fn to_csv(&self) -> Result<String> {
        let entries = self
            .entries
            .as_ref()
            .context("CSV export needs floating entries")?;
        let mut out = String::new();
        for row in entries {
            let cells: Vec<String> = row
                .iter()
                .flat_map(|[re, im]| [format!("{re}"), format!("{im}")])
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_and_floating_renderings_agree() {
        let d = 4usize;
        let scale = 0.5;
        let exact: Vec<Vec<ExactEntry>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| ExactEntry {
                        exp: (r * c) as i64,
                        denom: 2 * d as i64,
                    })
                    .collect()
            })
            .collect();
        let m = OperatorMatrix::from_fn(d, d, |r, c| {
            Complex64::cis(std::f64::consts::TAU * (r * c) as f64 / (2 * d) as f64) * scale
        });
        let doc = MatrixDocument::from_matrix(
            DocumentKind::Basis,
            &m,
            BTreeMap::new(),
            Metadata::new("test", "none"),
        )
        .with_exact(scale, exact);
        assert!(doc.consistency().unwrap() < 1e-15);
        let back = doc.exact_matrix().unwrap();
        let direct = doc.to_matrix().unwrap();
        assert!((back - direct).iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let m = OperatorMatrix::from_fn(2, 2, |r, c| {
            Complex64::new(0.1 + r as f64, -(c as f64) / 3.0)
        });
        let mut params = BTreeMap::new();
        params.insert("d".into(), serde_json::json!(2));
        let doc = MatrixDocument::from_matrix(
            DocumentKind::Operator,
            &m,
            params,
            Metadata::new("test", "none"),
        );
        let text = serde_json::to_string(&doc).unwrap();
        let doc2: MatrixDocument = serde_json::from_str(&text).unwrap();
        let (a, b) = (doc.entries.unwrap(), doc2.entries.unwrap());
        for (ra, rb) in a.iter().zip(&b) {
            for (ea, eb) in ra.iter().zip(rb) {
                assert_eq!(ea[0].to_bits(), eb[0].to_bits());
                assert_eq!(ea[1].to_bits(), eb[1].to_bits());
            }
        }
    }

    #[test]
    fn csv_is_flagged_lossy_by_construction() {
        let m = OperatorMatrix::from_fn(2, 2, |r, c| Complex64::new(r as f64, c as f64));
        let doc = MatrixDocument::from_matrix(
            DocumentKind::Operator,
            &m,
            BTreeMap::new(),
            Metadata::new("test", "none"),
        );
        let csv = doc.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.starts_with("0,0,0,1"));
    }
}
