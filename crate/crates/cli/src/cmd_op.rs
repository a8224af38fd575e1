//! `op`: dump any operator matrix as a document.

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::Result;
use clap::Args;

use mubkit_cli::config::RunConfig;
use mubkit_cli::doc::{DocumentKind, MatrixDocument, Metadata};
use mubkit_core::space::{AngularSpace, VraParams, WIndex};
use mubkit_core::{su2ops, wigner};

use crate::util;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OpName {
    /// Sign-free ladder factor h with h^2 the diagonal of j+ j-
    H,
    /// Cyclic shift-and-phase operator v_ra
    V,
    /// Diagonal phase operator z = q^(jz + j)
    Z,
    /// Raising operator j+
    Jplus,
    /// Lowering operator j-
    Jminus,
    /// Diagonal operator jz
    Jz,
    /// Sine-algebra generator t indexed by (m1, m2)
    T,
    /// Racah unit tensor u^(k)_p
    Unit,
}

#[derive(Args, Debug)]
pub struct OpArgs {
    /// Which operator to print
    #[arg(value_enum)]
    pub name: OpName,
    /// Dimension d = 2j + 1
    #[arg(short = 'd', long = "dimension")]
    pub dimension: usize,
    /// Boundary parameter r (float, integer, or p/q)
    #[arg(short = 'r', default_value = "0", allow_negative_numbers = true)]
    pub r: String,
    /// Basis label a
    #[arg(short = 'a', default_value_t = 0)]
    pub a: u32,
    /// First sine-algebra index component (t only)
    #[arg(long, default_value_t = 1)]
    pub m1: u32,
    /// Second sine-algebra index component (t only)
    #[arg(long, default_value_t = 1)]
    pub m2: u32,
    /// Tensor rank (unit only)
    #[arg(short = 'k', default_value_t = 1)]
    pub k: u32,
    /// Tensor component (unit only)
    #[arg(short = 'p', default_value_t = 0, allow_negative_numbers = true)]
    pub p: i32,
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cfg: &RunConfig, args: &OpArgs) -> Result<bool> {
    if cfg.exact {
        eprintln!("note: operator matrices carry magnitudes, not pure phases; --exact is ignored");
    }
    util::csv_lossy_notice(cfg);
    let s = AngularSpace::from_dim(args.dimension)?;
    let r = util::parse_r(&args.r)?;
    let params = VraParams::new(&s, r.value, args.a)?;

    let mut doc_params = BTreeMap::new();
    doc_params.insert("d".into(), serde_json::json!(args.dimension));
    doc_params.insert("r".into(), serde_json::json!(r.value));
    doc_params.insert("a".into(), serde_json::json!(args.a));

    let (matrix, identity) = match args.name {
        OpName::H => (su2ops::h_matrix(&s), "ladder magnitude h".to_string()),
        OpName::V => (
            su2ops::v_ra_matrix(&s, &params),
            "cyclic shift-and-phase operator v_ra".to_string(),
        ),
        OpName::Z => (su2ops::z_matrix(&s), "diagonal phase operator z".to_string()),
        OpName::Jplus | OpName::Jminus | OpName::Jz => {
            let (jp, jm, jz) = su2ops::ladder_operators(&s, &params);
            match args.name {
                OpName::Jplus => (jp, "raising operator j+".to_string()),
                OpName::Jminus => (jm, "lowering operator j-".to_string()),
                _ => (jz, "diagonal operator jz".to_string()),
            }
        }
        OpName::T => {
            let idx = WIndex::new(args.m1, args.m2)?;
            doc_params.insert("m1".into(), serde_json::json!(args.m1));
            doc_params.insert("m2".into(), serde_json::json!(args.m2));
            (
                su2ops::t_operator(&s, &params, &idx),
                format!("sine-algebra generator t_({},{})", args.m1, args.m2),
            )
        }
        OpName::Unit => {
            let u = wigner::unit_tensor(&s, args.k, args.p)?;
            doc_params.insert("k".into(), serde_json::json!(args.k));
            doc_params.insert("p".into(), serde_json::json!(args.p));
            (
                u.matrix,
                format!("Racah unit tensor u^({})_({})", args.k, args.p),
            )
        }
    };

    let doc = MatrixDocument::from_matrix(
        DocumentKind::Operator,
        &matrix,
        doc_params,
        Metadata::new(identity, util::BASIS_ORDER),
    );
    match &args.out {
        Some(path) => {
            let dir = path.parent().unwrap_or_else(|| std::path::Path::new("."));
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "operator".into());
            let written = util::write_document(cfg, &doc, dir, &stem)?;
            println!("wrote {}", written.display());
        }
        None => util::print_document(cfg, &doc)?,
    }
    Ok(true)
}
