//! Truncated deformed oscillator pair and the spin subspace embedded in it.
//!
//! Two k-dimensional truncated oscillator algebras act on a tensor-product
//! Fock space of dimension k². The pair state |n₁,n₂) with n₁ + n₂ = k − 1
//! spans a spin subspace ε(j) of dimension d = k = 2j + 1 on which the
//! operators h and v_{ra} of [`crate::su2ops`] arise as restrictions. This
//! module builds that origin independently, from ladder operators alone, so
//! the two constructions can be cross-checked entry by entry.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{self, OperatorMatrix};
use crate::space::AngularSpace;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Parameters of the truncated oscillator representation.
///
/// The raising coefficient of algebra 1 is ([n+1]_q)^{a_exp} and the
/// lowering coefficient ([n]_q)^{c_exp} with c_exp = 1 − a_exp; algebra 2
/// uses b_exp and d_exp = 1 − b_exp the same way. The representation label
/// s is fixed to 1/2 and other values are rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuonParams {
    k: u32,
    a_exp: f64,
    b_exp: f64,
    s: f64,
}

impl QuonParams {
    pub fn new(k: u32, a_exp: f64, b_exp: f64) -> Result<Self> {
        Self::with_s(k, a_exp, b_exp, 0.5)
    }

    /// Like [`QuonParams::new`] but with the representation label spelled
    /// out; any value other than 1/2 is rejected.
    pub fn with_s(k: u32, a_exp: f64, b_exp: f64, s: f64) -> Result<Self> {
        if k < 2 {
            return Err(Error::TruncationTooSmall(k as usize));
        }
        if s != 0.5 {
            return Err(Error::UnsupportedS(s));
        }
        Ok(Self { k, a_exp, b_exp, s })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a_exp(&self) -> f64 {
        self.a_exp
    }

    pub fn b_exp(&self) -> f64 {
        self.b_exp
    }

    pub fn c_exp(&self) -> f64 {
        1.0 - self.a_exp
    }

    pub fn d_exp(&self) -> f64 {
        1.0 - self.b_exp
    }

    pub fn s(&self) -> f64 {
        self.s
    }
}

/// Which Fock space a matrix acts on: a single k-dimensional factor or the
/// k²-dimensional tensor product of the two factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FockBasis {
    Single { k: u32 },
    Pair { k: u32 },
}

impl FockBasis {
    pub fn dim(&self) -> usize {
        match *self {
            FockBasis::Single { k } => k as usize,
            FockBasis::Pair { k } => (k as usize) * (k as usize),
        }
    }
}

/// A matrix tagged with the Fock space it acts on.
#[derive(Debug, Clone)]
pub struct FockOperator {
    basis: FockBasis,
    matrix: OperatorMatrix,
}

impl FockOperator {
    pub fn new(basis: FockBasis, matrix: OperatorMatrix) -> Result<Self> {
        let d = basis.dim();
        if matrix.nrows() != d || matrix.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: matrix.nrows().max(matrix.ncols()),
            });
        }
        Ok(Self { basis, matrix })
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn matrix(&self) -> &OperatorMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> OperatorMatrix {
        self.matrix
    }
}

/// Index of the pair state |n₁,n₂) in the flattened k²-dimensional basis.
pub fn pair_index(k: u32, n1: u32, n2: u32) -> usize {
    (n1 * k + n2) as usize
}

/// The spin subspace ε(j) of the pair space, j = (k − 1)/2.
///
/// The map lists the pair indices of |j,m⟩ = |j+m, j−m) for m = j down to
/// −j, so entry i corresponds to n₁ = k − 1 − i, n₂ = i.
#[derive(Debug, Clone)]
pub struct EpsilonEmbedding {
    k: u32,
    index_map: Vec<usize>,
}

impl EpsilonEmbedding {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::TruncationTooSmall(k as usize));
        }
        let index_map = (0..k).map(|i| pair_index(k, k - 1 - i, i)).collect();
        Ok(Self { k, index_map })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The angular momentum space the embedded block acts on (2j = k − 1).
    pub fn space(&self) -> AngularSpace {
        AngularSpace::new(self.k - 1)
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }
}

/// The deformed number (1 − q^x)/(1 − q) with q = exp(2πi/k).
///
/// For integer x this is the root-of-unity sum 1 + q + … + q^{x−1}; real x
/// is admitted through the principal branch of q^x.
pub fn q_number(x: f64, k: u32) -> Complex64 {
    let q = Complex64::cis(TAU / k as f64);
    let qx = Complex64::cis(TAU * x / k as f64);
    (ONE - qx) / (ONE - q)
}

/// The deformed factorial [n]_q! = [1]_q [2]_q … [n]_q, with [0]_q! = 1.
pub fn q_factorial(n: u32, k: u32) -> Complex64 {
    (1..=n).fold(ONE, |acc, m| acc * q_number(m as f64, k))
}

/// Principal-branch power that keeps the exponents 0 and 1 exact.
fn branch_power(base: Complex64, e: f64) -> Complex64 {
    if e == 0.0 {
        ONE
    } else if e == 1.0 {
        base
    } else {
        base.powf(e)
    }
}

/// The six generators of the two truncated oscillator algebras, each on its
/// own k-dimensional factor.
#[derive(Debug, Clone)]
pub struct QuonOperators {
    pub a1_plus: FockOperator,
    pub a1_minus: FockOperator,
    pub a2_plus: FockOperator,
    pub a2_minus: FockOperator,
    pub n1: FockOperator,
    pub n2: FockOperator,
}

/// Builds the ladder and number operators of both algebras.
///
/// The raising operators annihilate the top state |k−1) and the lowering
/// operators annihilate |0), so all four are nilpotent of order k exactly.
pub fn build_quon_operators(p: &QuonParams) -> QuonOperators {
    let k = p.k;
    let d = k as usize;
    let basis = FockBasis::Single { k };

    let ladder = |raising: bool, e: f64| {
        let mut m = matrix::zeros(d);
        for n in 1..d {
            let coeff = branch_power(q_number(n as f64, k), e);
            if raising {
                m[(n, n - 1)] = coeff;
            } else {
                m[(n - 1, n)] = coeff;
            }
        }
        FockOperator {
            basis,
            matrix: m,
        }
    };

    let number = {
        let mut m = matrix::zeros(d);
        for n in 0..d {
            m[(n, n)] = Complex64::new(n as f64, 0.0);
        }
        FockOperator {
            basis,
            matrix: m,
        }
    };

    QuonOperators {
        a1_plus: ladder(true, p.a_exp()),
        a1_minus: ladder(false, p.c_exp()),
        a2_plus: ladder(true, p.b_exp()),
        a2_minus: ladder(false, p.d_exp()),
        n1: number.clone(),
        n2: number,
    }
}

/// Promotes a single-factor operator to the pair space as op ⊗ 1.
pub fn promote_first(op: &FockOperator) -> Result<FockOperator> {
    let k = single_k(op)?;
    let id = matrix::identity(k as usize);
    FockOperator::new(FockBasis::Pair { k }, op.matrix.kronecker(&id))
}

/// Promotes a single-factor operator to the pair space as 1 ⊗ op.
pub fn promote_second(op: &FockOperator) -> Result<FockOperator> {
    let k = single_k(op)?;
    let id = matrix::identity(k as usize);
    FockOperator::new(FockBasis::Pair { k }, id.kronecker(&op.matrix))
}

fn single_k(op: &FockOperator) -> Result<u32> {
    match op.basis {
        FockBasis::Single { k } => Ok(k),
        FockBasis::Pair { k } => Err(Error::DimensionMismatch {
            expected: k as usize,
            got: op.dim(),
        }),
    }
}

/// Residuals of the defining relations, one named entry per identity.
#[derive(Debug, Clone)]
pub struct QuonRelationReport {
    checks: Vec<(String, f64)>,
}

impl QuonRelationReport {
    pub fn checks(&self) -> &[(String, f64)] {
        &self.checks
    }

    pub fn residual(&self, name: &str) -> Option<f64> {
        self.checks
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, r)| r)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().fold(0.0, |acc, &(_, r)| acc.max(r))
    }
}

/// Evaluates every defining relation of the two algebras as a matrix
/// identity and reports the largest entry of each residual.
///
/// The relations hold exactly on every basis vector because
/// [n+1]_q − q[n]_q = 1 for interior n and the boundary n = k − 1 closes
/// through q^k = 1, so all residuals must vanish to working precision.
pub fn verify_quon_relations(p: &QuonParams) -> QuonRelationReport {
    let k = p.k;
    let d = k as usize;
    let q = Complex64::cis(TAU / k as f64);
    let id = matrix::identity(d);
    let ops = build_quon_operators(p);

    let mut checks = Vec::new();
    let mut push = |name: &str, residual: f64| checks.push((name.to_string(), residual));

    let defining = |plus: &FockOperator, minus: &FockOperator| {
        matrix::max_abs(&(&minus.matrix * &plus.matrix - (&plus.matrix * &minus.matrix) * q - &id))
    };
    push("a1- a1+ - q a1+ a1- = 1", defining(&ops.a1_plus, &ops.a1_minus));
    push("a2- a2+ - q a2+ a2- = 1", defining(&ops.a2_plus, &ops.a2_minus));

    let graded = |number: &FockOperator, ladder: &FockOperator, sign: f64| {
        let comm = matrix::commutator(&number.matrix, &ladder.matrix);
        matrix::max_abs(&(comm - &ladder.matrix * Complex64::new(sign, 0.0)))
    };
    push("[N1, a1+] = +a1+", graded(&ops.n1, &ops.a1_plus, 1.0));
    push("[N1, a1-] = -a1-", graded(&ops.n1, &ops.a1_minus, -1.0));
    push("[N2, a2+] = +a2+", graded(&ops.n2, &ops.a2_plus, 1.0));
    push("[N2, a2-] = -a2-", graded(&ops.n2, &ops.a2_minus, -1.0));

    push("N1 Hermitian", matrix::hermiticity_residual(&ops.n1.matrix));
    push("N2 Hermitian", matrix::hermiticity_residual(&ops.n2.matrix));

    let nilpotent =
        |op: &FockOperator| matrix::max_abs(&matrix::matrix_pow(&op.matrix, k as usize));
    push("(a1+)^k = 0", nilpotent(&ops.a1_plus));
    push("(a1-)^k = 0", nilpotent(&ops.a1_minus));
    push("(a2+)^k = 0", nilpotent(&ops.a2_plus));
    push("(a2-)^k = 0", nilpotent(&ops.a2_minus));

    let firsts = [&ops.a1_plus, &ops.a1_minus, &ops.n1];
    let seconds = [&ops.a2_plus, &ops.a2_minus, &ops.n2];
    let mut cross = 0.0f64;
    for x1 in firsts {
        for x2 in seconds {
            let lifted1 = promote_first(x1).expect("single-factor operator");
            let lifted2 = promote_second(x2).expect("single-factor operator");
            let comm = matrix::commutator(&lifted1.matrix, &lifted2.matrix);
            cross = cross.max(matrix::max_abs(&comm));
        }
    }
    push("cross commutators vanish on the pair space", cross);

    QuonRelationReport { checks }
}

/// Builds h = √(N₁(N₂+1)) and the unitary v_{ra} on the k²-dimensional
/// pair space, with φ_r = π(k−1)r.
///
/// v is assembled as the product s₁s₂ of two one-factor operators, each a
/// ladder term dressed with a diagonal q power plus a boundary term
/// e^{iφ_r/2}(a∓)^{k−1}/[k−1]_q!, using the representation with exponents
/// a_exp = 0, b_exp = 1. The resulting action sends |n₁,n₂) to
/// q^{an₂}|n₁+1,n₂−1) in the interior and wraps both factors around with
/// the boundary phases.
pub fn build_h_v_pair_space(k: u32, r: f64, a: u32) -> Result<(FockOperator, FockOperator)> {
    if k < 2 {
        return Err(Error::TruncationTooSmall(k as usize));
    }
    if a >= k {
        return Err(Error::RangeError {
            what: "a",
            got: a as i64,
            range: format!("0..={}", k - 1),
        });
    }

    let params = QuonParams::new(k, 0.0, 1.0)?;
    let ops = build_quon_operators(&params);
    let a1p = promote_first(&ops.a1_plus)?.matrix;
    let a1m = promote_first(&ops.a1_minus)?.matrix;
    let a2p = promote_second(&ops.a2_plus)?.matrix;
    let a2m = promote_second(&ops.a2_minus)?.matrix;

    let dim = (k as usize) * (k as usize);
    let phi_r = PI * (k as f64 - 1.0) * r;
    let boundary = Complex64::cis(phi_r / 2.0) / q_factorial(k - 1, k);

    // Diagonal q powers; the half power of q is e^{iπ/k}.
    let diag = |f: &dyn Fn(u32, u32) -> f64| {
        let mut m = matrix::zeros(dim);
        for n1 in 0..k {
            for n2 in 0..k {
                let i = pair_index(k, n1, n2);
                m[(i, i)] = Complex64::cis(PI * f(n1, n2) / k as f64);
            }
        }
        m
    };
    let q_sum = diag(&|n1, n2| a as f64 * (n1 + n2) as f64);
    let q_diff = diag(&|n1, n2| -(a as f64) * (n1 as f64 - n2 as f64));

    let s1 = q_sum * a1p + matrix::matrix_pow(&a1m, k as usize - 1) * boundary;
    let s2 = a2m * q_diff + matrix::matrix_pow(&a2p, k as usize - 1) * boundary;
    let v = FockOperator::new(FockBasis::Pair { k }, s1 * s2)?;

    let mut h = matrix::zeros(dim);
    for n1 in 0..k {
        for n2 in 0..k {
            let i = pair_index(k, n1, n2);
            h[(i, i)] = Complex64::new((n1 as f64 * (n2 as f64 + 1.0)).sqrt(), 0.0);
        }
    }
    let h = FockOperator::new(FockBasis::Pair { k }, h)?;

    Ok((h, v))
}

/// The total spin operator j² = ¼(N₁+N₂)(N₁+N₂+2) on the pair space.
///
/// Restricted to ε(j) it equals j(j+1)·1 exactly, so it commutes there with
/// every operator; on the full pair space the boundary moves of v change
/// n₁ + n₂ by ±k and the two do not commute.
pub fn pair_casimir(k: u32) -> Result<FockOperator> {
    if k < 2 {
        return Err(Error::TruncationTooSmall(k as usize));
    }
    let dim = (k as usize) * (k as usize);
    let mut m = matrix::zeros(dim);
    for n1 in 0..k {
        for n2 in 0..k {
            let i = pair_index(k, n1, n2);
            let s = (n1 + n2) as f64;
            m[(i, i)] = Complex64::new(0.25 * s * (s + 2.0), 0.0);
        }
    }
    FockOperator::new(FockBasis::Pair { k }, m)
}

/// Restricts a pair-space operator to the spin subspace ε(j).
///
/// Returns the d×d block in descending-m order together with the leakage,
/// the largest matrix entry mapping ε(j) outside itself. Operators that are
/// supposed to leave ε(j) invariant must come back with zero leakage.
pub fn restrict_to_epsilon(
    op: &FockOperator,
    emb: &EpsilonEmbedding,
    tol: f64,
) -> Result<(OperatorMatrix, f64)> {
    let expected = (emb.k as usize) * (emb.k as usize);
    match op.basis {
        FockBasis::Pair { k } if k == emb.k => {}
        _ => {
            return Err(Error::DimensionMismatch {
                expected,
                got: op.dim(),
            })
        }
    }

    let d = emb.k as usize;
    let inside: Vec<bool> = {
        let mut flags = vec![false; expected];
        for &i in &emb.index_map {
            flags[i] = true;
        }
        flags
    };

    let mut leakage = 0.0f64;
    for &col in &emb.index_map {
        for row in 0..expected {
            if !inside[row] {
                leakage = leakage.max(op.matrix[(row, col)].norm());
            }
        }
    }
    if leakage > tol {
        return Err(Error::NonInvariantSubspace { leakage, tol });
    }

    let block = OperatorMatrix::from_fn(d, d, |i, j| {
        op.matrix[(emb.index_map[i], emb.index_map[j])]
    });
    Ok((block, leakage))
}
