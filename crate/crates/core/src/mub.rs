//! Eigenbases of the commuting pair {j², v_ra}, overlaps and trace
//! relations between bases with different parameters, generalized Hadamard
//! matrices, complete sets of mutually unbiased bases in prime dimension,
//! tensor-product bases in prime-power dimension, and the census of
//! unbiased partners in arbitrary dimension.
//!
//! The basis B_ra = {|jα;ra⟩ : α = 0..d−1} has coefficients
//! ⟨j,m|jα;ra⟩ = q^{ρ(j,m,a,r,α)}/√d with
//! ρ(J,M,x,y,z) = ½(J+M)(J−M+1)x − JMy + (J+M)z, and the overlap between
//! two such bases is the closed form (1/d)Σ_m q^{ρ(j,m,b−a,s−r,β−α)}.

use crate::arith::{is_prime, prime_power, totient};
use crate::error::{Error, Result};
use crate::matrix::{self, OperatorMatrix, StateVector};
use crate::phase::Phase;
use crate::space::{AngularSpace, VraParams};
use crate::su2ops;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// ρ(J,M,x,y,z) = ½(J+M)(J−M+1)x − JMy + (J+M)z.
pub fn rho(j: f64, m: f64, x: f64, y: f64, z: f64) -> f64 {
    0.5 * (j + m) * (j - m + 1.0) * x - j * m * y + (j + m) * z
}

/// Exact phase q^{ρ(j,m,x,y,z)} for integer x, z and rational y = yn/yd.
/// Since 4ρ·yd is an integer, the phase is an exact root of unity:
/// e^{iπ·(4ρ·yd)/(2d·yd)}.
pub fn rho_phase(s: &AngularSpace, two_m: i32, x: i64, y_num: i64, y_den: i64, z: i64) -> Phase {
    assert!(y_den != 0, "rational denominator must be nonzero");
    let tj = s.two_j() as i64;
    let tm = two_m as i64;
    let j_plus_m = (tj + tm) / 2;
    let j_minus_m_plus_1 = (tj - tm) / 2 + 1;
    // 4ρ = 2(J+M)(J−M+1)x − (2J)(2M)y + 4(J+M)z
    let four_rho_yd = 2 * j_plus_m * j_minus_m_plus_1 * x * y_den - tj * tm * y_num
        + 4 * j_plus_m * z * y_den;
    Phase::new(four_rho_yd, 2 * s.dim() as i64 * y_den.abs())
}

/// Eigenbasis B_ra of {j², v_ra}; vector α satisfies
/// v_ra|jα;ra⟩ = q^{j(a+r)−α}|jα;ra⟩.
#[derive(Debug, Clone)]
pub struct EigenBasis {
    space: AngularSpace,
    r: f64,
    r_exact: Option<(i64, i64)>,
    a: u32,
    vectors: Vec<StateVector>,
    exact: Option<Vec<Vec<Phase>>>,
}

impl EigenBasis {
    pub fn space(&self) -> &AngularSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Exact rational value of r as (numerator, denominator), when the
    /// basis was built from one.
    pub fn r_exact(&self) -> Option<(i64, i64)> {
        self.r_exact
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn vector(&self, alpha: usize) -> &StateVector {
        &self.vectors[alpha]
    }

    pub fn vectors(&self) -> &[StateVector] {
        &self.vectors
    }

    /// Exact coefficients (including the 1/√d scale symbolically: the
    /// stored phase is the unscaled root of unity), present when r is
    /// rational.
    pub fn exact_coefficients(&self) -> Option<&Vec<Vec<Phase>>> {
        self.exact.as_ref()
    }

    /// Eigenvalue q^{j(a+r)−α} of v_ra on vector α.
    pub fn eigenvalue(&self, alpha: usize) -> Complex64 {
        self.space
            .q_pow(self.space.j() * (self.a as f64 + self.r) - alpha as f64)
    }

    pub fn label(&self) -> String {
        format!("B(r={},a={})", self.r, self.a)
    }

    pub fn to_generic(&self) -> GenericBasis {
        GenericBasis {
            d: self.dim(),
            label: self.label(),
            vectors: self.vectors.clone(),
        }
    }
}

/// Any orthonormal basis given by explicit column vectors.
#[derive(Debug, Clone)]
pub struct GenericBasis {
    d: usize,
    label: String,
    vectors: Vec<StateVector>,
}

impl GenericBasis {
    pub fn new(label: impl Into<String>, vectors: Vec<StateVector>) -> Result<Self> {
        let d = vectors.len();
        for v in &vectors {
            if v.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: v.len(),
                });
            }
        }
        Ok(Self {
            d,
            label: label.into(),
            vectors,
        })
    }

    /// The computational (spherical) basis S: identity columns.
    pub fn computational(d: usize) -> Self {
        let vectors = (0..d)
            .map(|i| {
                let mut v = StateVector::zeros(d);
                v[i] = Complex64::new(1.0, 0.0);
                v
            })
            .collect();
        Self {
            d,
            label: "S".into(),
            vectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn vector(&self, i: usize) -> &StateVector {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[StateVector] {
        &self.vectors
    }
}

/// Build the eigenbasis of {j², v_ra}. When r is an integer (to 1e−12),
/// exact phase coefficients are kept alongside the floating vectors.
pub fn eigenbasis(s: &AngularSpace, r: f64, a: u32) -> Result<EigenBasis> {
    let rounded = r.round();
    if (r - rounded).abs() < 1e-12 && rounded.abs() < 1e15 {
        eigenbasis_exact(s, rounded as i64, 1, a)
    } else {
        build_basis(s, r, None, a)
    }
}

/// Build the eigenbasis for exactly rational r = r_num/r_den; all
/// coefficients are exact roots of unity e^{iπ·e/(2d·r_den)}.
pub fn eigenbasis_exact(s: &AngularSpace, r_num: i64, r_den: i64, a: u32) -> Result<EigenBasis> {
    if r_den == 0 {
        return Err(Error::RangeError {
            what: "r denominator",
            got: 0,
            range: "nonzero".into(),
        });
    }
    let (rn, rd) = if r_den < 0 { (-r_num, -r_den) } else { (r_num, r_den) };
    build_basis(s, rn as f64 / rd as f64, Some((rn, rd)), a)
}

fn build_basis(
    s: &AngularSpace,
    r: f64,
    r_exact: Option<(i64, i64)>,
    a: u32,
) -> Result<EigenBasis> {
    // range check on a
    VraParams::new(s, r, a)?;
    let d = s.dim();
    let scale = 1.0 / (d as f64).sqrt();
    let mut vectors = Vec::with_capacity(d);
    let mut exact: Option<Vec<Vec<Phase>>> = r_exact.map(|_| Vec::with_capacity(d));
    for alpha in 0..d {
        let mut v = StateVector::zeros(d);
        let mut row_phases = Vec::with_capacity(d);
        for i in 0..d {
            let tm = s.two_m_at(i);
            let m = tm as f64 / 2.0;
            match r_exact {
                Some((rn, rd)) => {
                    let ph = rho_phase(s, tm, a as i64, rn, rd, alpha as i64);
                    v[i] = ph.value() * scale;
                    row_phases.push(ph);
                }
                None => {
                    v[i] = s.q_pow(rho(s.j(), m, a as f64, r, alpha as f64)) * scale;
                }
            }
        }
        vectors.push(v);
        if let Some(e) = exact.as_mut() {
            e.push(row_phases);
        }
    }
    Ok(EigenBasis {
        space: *s,
        r,
        r_exact,
        a,
        vectors,
        exact,
    })
}

/// Overlap data for an ordered pair of bases; entry (α,β) of the matrix is
/// ⟨left_α|right_β⟩.
#[derive(Debug, Clone)]
pub struct OverlapReport {
    pub left: String,
    pub right: String,
    pub matrix: DMatrix<Complex64>,
    pub max_modulus: f64,
    pub min_modulus: f64,
    pub unbiased: bool,
    pub tolerance: f64,
    /// Largest deviation between direct inner products and the closed-form
    /// ρ-sum; only present for eigenbasis pairs.
    pub closed_form_residual: Option<f64>,
    /// Largest spread along cyclic diagonals (the overlap depends only on
    /// α−β); only present for eigenbasis pairs.
    pub cyclic_diagonal_deviation: Option<f64>,
}

/// Default tolerance for the unbiasedness criterion on moduli.
pub const UNBIASED_TOL: f64 = 1e-10;

fn overlap_entries(b1: &[StateVector], b2: &[StateVector]) -> DMatrix<Complex64> {
    let d = b1.len();
    DMatrix::from_fn(d, d, |alpha, beta| b1[alpha].dotc(&b2[beta]))
}

fn modulus_range(m: &DMatrix<Complex64>) -> (f64, f64) {
    let mut max = f64::MIN;
    let mut min = f64::MAX;
    for e in m.iter() {
        max = max.max(e.norm());
        min = min.min(e.norm());
    }
    (max, min)
}

/// Overlap matrix between two eigenbases over the same space, computed both
/// by direct inner products and by the closed-form ρ-sum; the report keeps
/// the residual between the two routes and the cyclic-diagonal spread.
pub fn overlap_matrix(b1: &EigenBasis, b2: &EigenBasis) -> Result<OverlapReport> {
    if b1.space.two_j() != b2.space.two_j() {
        return Err(Error::SpaceMismatch {
            left: b1.dim(),
            right: b2.dim(),
        });
    }
    let s = &b1.space;
    let d = s.dim();
    let direct = overlap_entries(&b1.vectors, &b2.vectors);

    // closed form: ⟨jα;ra|jβ;sb⟩ = (1/d) Σ_m q^{ρ(j,m,b−a,s−r,β−α)}
    let x = b2.a as f64 - b1.a as f64;
    let y = b2.r - b1.r;
    let mut closed = DMatrix::zeros(d, d);
    for alpha in 0..d {
        for beta in 0..d {
            let z = beta as f64 - alpha as f64;
            let mut sum = Complex64::new(0.0, 0.0);
            for i in 0..d {
                let m = s.two_m_at(i) as f64 / 2.0;
                sum += s.q_pow(rho(s.j(), m, x, y, z));
            }
            closed[(alpha, beta)] = sum / d as f64;
        }
    }
    let closed_form_residual = matrix::residual(&direct, &closed);

    // the overlap depends only on α−β: measure spread along cyclic diagonals
    let mut cyc = 0.0f64;
    for alpha in 0..d {
        for beta in 0..d {
            let rep = direct[(0, (beta + d - alpha) % d)];
            cyc = cyc.max((direct[(alpha, beta)] - rep).norm());
        }
    }

    let (max_modulus, min_modulus) = modulus_range(&direct);
    let target = 1.0 / (d as f64).sqrt();
    let unbiased =
        (max_modulus - target).abs() < UNBIASED_TOL && (min_modulus - target).abs() < UNBIASED_TOL;
    Ok(OverlapReport {
        left: b1.label(),
        right: b2.label(),
        matrix: direct,
        max_modulus,
        min_modulus,
        unbiased,
        tolerance: UNBIASED_TOL,
        closed_form_residual: Some(closed_form_residual),
        cyclic_diagonal_deviation: Some(cyc),
    })
}

/// Unbiasedness test for two arbitrary bases of the same dimension:
/// true iff every overlap modulus lies within tol of 1/√d.
pub fn unbiasedness_check(b1: &GenericBasis, b2: &GenericBasis, tol: f64) -> Result<OverlapReport> {
    if b1.d != b2.d {
        return Err(Error::SpaceMismatch {
            left: b1.d,
            right: b2.d,
        });
    }
    let m = overlap_entries(&b1.vectors, &b2.vectors);
    let (max_modulus, min_modulus) = modulus_range(&m);
    let target = 1.0 / (b1.d as f64).sqrt();
    let unbiased = (max_modulus - target).abs() <= tol && (min_modulus - target).abs() <= tol;
    Ok(OverlapReport {
        left: b1.label.clone(),
        right: b2.label.clone(),
        matrix: m,
        max_modulus,
        min_modulus,
        unbiased,
        tolerance: tol,
        closed_form_residual: None,
        cyclic_diagonal_deviation: None,
    })
}

/// Residuals of the trace relation Tr(v_ra† v_sb) = δ_ab·d + e^{i(φ_s−φ_r)} − 1
/// and of the derived sum rule
/// Σ_{αβ} q^{α−β}|⟨jα;ra|jβ;sb⟩|² = δ_ab q^{j(r−s)} d + q^{j(a+r−b−s)}(e^{i(φ_s−φ_r)} − 1).
#[derive(Debug, Clone, Copy)]
pub struct TraceCheck {
    pub trace_residual: f64,
    pub sum_rule_residual: f64,
}

impl TraceCheck {
    pub fn max_residual(&self) -> f64 {
        self.trace_residual.max(self.sum_rule_residual)
    }
}

pub fn trace_relation_check(s: &AngularSpace, r: f64, a: u32, s2: f64, b: u32) -> Result<TraceCheck> {
    let d = s.dim();
    let pa = VraParams::new(s, r, a)?;
    let pb = VraParams::new(s, s2, b)?;
    let va = su2ops::v_ra_matrix(s, &pa);
    let vb = su2ops::v_ra_matrix(s, &pb);
    let lhs = (va.adjoint() * &vb).trace();
    let delta = if a == b { 1.0 } else { 0.0 };
    let phase_diff = Complex64::cis(pb.phi_r(s) - pa.phi_r(s));
    let rhs = Complex64::new(delta * d as f64, 0.0) + phase_diff - Complex64::new(1.0, 0.0);
    let trace_residual = (lhs - rhs).norm();

    let ba = eigenbasis(s, r, a)?;
    let bb = eigenbasis(s, s2, b)?;
    let overlaps = overlap_entries(&ba.vectors, &bb.vectors);
    let mut lhs_sum = Complex64::new(0.0, 0.0);
    for alpha in 0..d {
        for beta in 0..d {
            lhs_sum +=
                s.q_pow(alpha as f64 - beta as f64) * overlaps[(alpha, beta)].norm_sqr();
        }
    }
    let j = s.j();
    let rhs_sum = s.q_pow(j * (r - s2)) * (delta * d as f64)
        + s.q_pow(j * (a as f64 + r - b as f64 - s2)) * (phase_diff - 1.0);
    let sum_rule_residual = (lhs_sum - rhs_sum).norm();

    Ok(TraceCheck {
        trace_residual,
        sum_rule_residual,
    })
}

/// Complete set of d+1 pairwise mutually unbiased bases for prime d:
/// the computational basis S followed by B_00 … B_{0,d−1}. Every pair is
/// verified unbiased at tolerance 1e−10 before returning.
pub fn complete_mub_set(d: u64) -> Result<Vec<GenericBasis>> {
    if !is_prime(d) {
        return Err(Error::NotPrime(d));
    }
    let s = AngularSpace::from_dim(d as usize)?;
    let mut bases = vec![GenericBasis::computational(d as usize)];
    for a in 0..d as u32 {
        let mut b = eigenbasis(&s, 0.0, a)?.to_generic();
        b.label = format!("B(r=0,a={a})");
        bases.push(b);
    }
    for i in 0..bases.len() {
        for k in (i + 1)..bases.len() {
            let rep = unbiasedness_check(&bases[i], &bases[k], 1e-10)?;
            if !rep.unbiased {
                return Err(Error::CriterionMismatch(format!(
                    "bases {} and {} of the prime-dimension set are not unbiased (moduli {:.3e}..{:.3e})",
                    bases[i].label, bases[k].label, rep.min_modulus, rep.max_modulus
                )));
            }
        }
    }
    Ok(bases)
}

/// Generalized Hadamard matrix H_a held in exact form: entry (row k,
/// column α), both ascending, equals e^{iπ·exp/d} with
/// exp = k(d−k)a + 2kα reduced mod 2d. Columns scaled by 1/√d are the
/// eigenbasis B_0a written over the computational labels k = 0..d−1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseMatrix {
    d: usize,
    exponents: Vec<Vec<u32>>, // [row k][col α]
}

impl PhaseMatrix {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Exponent of e^{iπ/d} at (row, col), already reduced mod 2d.
    pub fn exponent(&self, row: usize, col: usize) -> u32 {
        self.exponents[row][col]
    }

    /// The scale that turns columns into unit vectors.
    pub fn scale(&self) -> f64 {
        1.0 / (self.d as f64).sqrt()
    }

    /// Unit-modulus entries, no scale.
    pub fn matrix(&self) -> OperatorMatrix {
        let d = self.d;
        DMatrix::from_fn(d, d, |i, j| {
            Complex64::cis(std::f64::consts::PI * self.exponents[i][j] as f64 / d as f64)
        })
    }

    /// Columns scaled by 1/√d, packaged as a basis. Rows are flipped to
    /// the spherical (descending-m, i.e. descending-k) convention used by
    /// the operator matrices, so the vectors compare directly against
    /// eigenbasis output.
    pub fn column_basis(&self, label: impl Into<String>) -> GenericBasis {
        let m = self.matrix() * Complex64::new(self.scale(), 0.0);
        let d = self.d;
        let vectors = (0..d)
            .map(|c| StateVector::from_fn(d, |i, _| m[(d - 1 - i, c)]))
            .collect();
        GenericBasis {
            d,
            label: label.into(),
            vectors,
        }
    }
}

/// Build H_a with integer exponent entries; requires 0 ≤ a ≤ d−1.
pub fn hadamard_matrix(d: usize, a: u32) -> Result<PhaseMatrix> {
    if d == 0 {
        return Err(Error::RangeError {
            what: "dimension",
            got: 0,
            range: "d >= 1".into(),
        });
    }
    if a as usize >= d {
        return Err(Error::RangeError {
            what: "a",
            got: a as i64,
            range: format!("0..={}", d - 1),
        });
    }
    let two_d = 2 * d as u64;
    let mut exponents = vec![vec![0u32; d]; d];
    for (row, row_exps) in exponents.iter_mut().enumerate() {
        let k = row as u64;
        for (col, e) in row_exps.iter_mut().enumerate() {
            let alpha = col as u64;
            *e = ((k * (d as u64 - k) * a as u64 + 2 * k * alpha) % two_d) as u32;
        }
    }
    Ok(PhaseMatrix { d, exponents })
}

/// Row/column labels of the computational-basis matrix convention:
/// the decreasing order d−1, d−2, …, 0 (row i holds label k = d−1−i).
pub fn computational_basis_column_convention(d: usize) -> Vec<usize> {
    (0..d).rev().collect()
}

/// V_a rebuilt from its expansion over the unitary-group generators,
/// V_a = E_{0,d−1} + Σ_{k=1}^{d−1} q^{(d−k)a} E_{k,k−1}, with lines and
/// columns labeled in decreasing order. Equals v_ra at r = 0.
pub fn v_a_generator_form(d: usize, a: u32) -> Result<OperatorMatrix> {
    if a as usize >= d.max(1) {
        return Err(Error::RangeError {
            what: "a",
            got: a as i64,
            range: format!("0..={}", d.max(1) - 1),
        });
    }
    let s = AngularSpace::from_dim(d)?;
    let mut m = matrix::zeros(d);
    // (E_{x,y})_{ij} = δ_{ix}δ_{jy} with labels i,j running d−1,…,0:
    // label x sits at row index d−1−x
    let idx = |x: usize| d - 1 - x;
    m[(idx(0), idx(d - 1))] = Complex64::new(1.0, 0.0);
    for k in 1..d {
        m[(idx(k), idx(k - 1))] = s.q_pow(((d - k) as u64 * a as u64) as f64);
    }
    Ok(m)
}

/// Parameters of a tensor-product basis in dimension p^e.
#[derive(Debug, Clone)]
pub struct CompositeBasisSpec {
    p: u64,
    e: u32,
    digits: Vec<u32>,
}

impl CompositeBasisSpec {
    pub fn new(p: u64, e: u32, digits: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 {
            return Err(Error::RangeError {
                what: "e",
                got: e as i64,
                range: "e >= 1".into(),
            });
        }
        if digits.len() != e as usize {
            return Err(Error::DimensionMismatch {
                expected: e as usize,
                got: digits.len(),
            });
        }
        for &a in &digits {
            if a as u64 >= p {
                return Err(Error::RangeError {
                    what: "digit",
                    got: a as i64,
                    range: format!("0..={}", p - 1),
                });
            }
        }
        Ok(Self { p, e, digits })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn dim(&self) -> usize {
        (self.p as usize).pow(self.e)
    }
}

fn kron_vec(a: &StateVector, b: &StateVector) -> StateVector {
    let mut out = StateVector::zeros(a.len() * b.len());
    for i in 0..a.len() {
        for k in 0..b.len() {
            out[i * b.len() + k] = a[i] * b[k];
        }
    }
    out
}

/// Tensor-product basis B_{a₁…a_e} = B_{0a₁} ⊗ … ⊗ B_{0a_e} in dimension
/// p^e. No reorganization into a complete unbiased set is attempted; the
/// product bases in general fail pairwise unbiasedness and are only
/// reported on.
pub fn tensor_bases(spec: &CompositeBasisSpec) -> Result<GenericBasis> {
    if spec.e < 2 {
        return Err(Error::RangeError {
            what: "e",
            got: spec.e as i64,
            range: "e >= 2".into(),
        });
    }
    let s = AngularSpace::from_dim(spec.p as usize)?;
    let factors: Vec<EigenBasis> = spec
        .digits
        .iter()
        .map(|&a| eigenbasis(&s, 0.0, a))
        .collect::<Result<_>>()?;
    let dim = spec.dim();
    let mut vectors = Vec::with_capacity(dim);
    for flat in 0..dim {
        // big-endian multi-index: leftmost digit varies slowest,
        // matching the Kronecker-product row ordering
        let mut rem = flat;
        let mut alphas = vec![0usize; spec.e as usize];
        for i in (0..spec.e as usize).rev() {
            alphas[i] = rem % spec.p as usize;
            rem /= spec.p as usize;
        }
        let mut v = factors[0].vector(alphas[0]).clone();
        for i in 1..spec.e as usize {
            v = kron_vec(&v, factors[i].vector(alphas[i]));
        }
        vectors.push(v);
    }
    let label = format!(
        "B({})",
        spec.digits
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join("")
    );
    Ok(GenericBasis {
        d: dim,
        label,
        vectors,
    })
}

/// Census of unbiased partners among {B_ra : a = 0..d−1} at fixed r.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub d: usize,
    pub r: f64,
    /// counts[a] = number of b ≠ a with B_ra, B_rb unbiased.
    pub counts: Vec<usize>,
    /// Euler totient φ(d), the guaranteed lower bound.
    pub phi: usize,
    pub meets_totient_bound: bool,
    /// For d = p^e with p an odd prime: whether unbiasedness coincided
    /// with the affine digit criterion a₀ − b₀ ≠ 0 (mod p) on every pair.
    pub digit_criterion_holds: Option<bool>,
}

/// Exhaustive pairwise unbiasedness census. Asserts the totient lower
/// bound count ≥ φ(d) for every a, and for odd-prime-power d verifies the
/// affine criterion: B_ra and B_rb unbiased iff a ≢ b (mod p).
pub fn unbiased_census(d: usize, r: f64) -> Result<CensusReport> {
    if d < 2 {
        return Err(Error::RangeError {
            what: "dimension",
            got: d as i64,
            range: "d >= 2".into(),
        });
    }
    let s = AngularSpace::from_dim(d)?;
    let bases: Vec<EigenBasis> = (0..d as u32)
        .map(|a| eigenbasis(&s, r, a))
        .collect::<Result<_>>()?;
    let target = 1.0 / (d as f64).sqrt();
    let mut unbiased_pair = vec![vec![false; d]; d];
    for a in 0..d {
        for b in (a + 1)..d {
            let m = overlap_entries(&bases[a].vectors, &bases[b].vectors);
            let (max_m, min_m) = modulus_range(&m);
            let ok = (max_m - target).abs() < UNBIASED_TOL && (min_m - target).abs() < UNBIASED_TOL;
            unbiased_pair[a][b] = ok;
            unbiased_pair[b][a] = ok;
        }
    }
    let counts: Vec<usize> = (0..d)
        .map(|a| (0..d).filter(|&b| unbiased_pair[a][b]).count())
        .collect();
    let phi = totient(d as u64) as usize;
    let meets_totient_bound = counts.iter().all(|&c| c >= phi);
    if !meets_totient_bound {
        return Err(Error::CriterionMismatch(format!(
            "census at d={d}, r={r}: some count {counts:?} fell below the totient bound {phi}"
        )));
    }
    let digit_criterion_holds = match prime_power(d as u64) {
        Some((p, _)) if p != 2 => {
            let mut holds = true;
            for a in 0..d {
                for b in 0..d {
                    if a != b {
                        let predicted = (a % p as usize) != (b % p as usize);
                        if unbiased_pair[a][b] != predicted {
                            holds = false;
                        }
                    }
                }
            }
            if !holds {
                return Err(Error::CriterionMismatch(format!(
                    "census at d={d}, r={r}: affine digit criterion failed"
                )));
            }
            Some(holds)
        }
        _ => None,
    };
    Ok(CensusReport {
        d,
        r,
        counts,
        phi,
        meets_totient_bound,
        digit_criterion_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::residual;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rho_values() {
        // boundary M = −J collapses to J²y
        assert_abs_diff_eq!(rho(1.5, -1.5, 0.7, 2.0, 0.3), 1.5 * 1.5 * 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rho(0.5, 0.5, 1.0, 0.0, 0.0), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(rho(1.0, 0.0, 0.0, 0.0, 1.0), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn rho_phase_matches_float() {
        for two_j in 1..8u32 {
            let s = AngularSpace::new(two_j);
            for i in 0..s.dim() {
                let tm = s.two_m_at(i);
                let m = tm as f64 / 2.0;
                for (x, yn, yd, z) in [(1i64, 0i64, 1i64, 0i64), (2, 1, 1, 3), (0, 3, 2, 1)] {
                    let exact = rho_phase(&s, tm, x, yn, yd, z).value();
                    let float = s.q_pow(rho(s.j(), m, x as f64, yn as f64 / yd as f64, z as f64));
                    assert!((exact - float).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn spin_half_basis_vectors() {
        // j=1/2, r=0, a=0: α=0 gives (|−1/2⟩+|+1/2⟩)/√2 (row order m=+1/2 first),
        // α=1 gives (|−1/2⟩−|+1/2⟩)/√2; eigenvalues +1 and −1
        let s = AngularSpace::new(1);
        let b = eigenbasis(&s, 0.0, 0).unwrap();
        let isq = 1.0 / 2f64.sqrt();
        let v0 = b.vector(0);
        assert!((v0[0].re - isq).abs() < 1e-12 && (v0[1].re - isq).abs() < 1e-12);
        let v1 = b.vector(1);
        assert!((v1[0].re + isq).abs() < 1e-12 && (v1[1].re - isq).abs() < 1e-12);
        assert!((b.eigenvalue(0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((b.eigenvalue(1) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn eigen_relation_and_moduli() {
        for d in 1..=12usize {
            let s = AngularSpace::from_dim(d).unwrap();
            for a in [0u32, (d as u32 - 1) / 2, d as u32 - 1] {
                for r in [0.0, 1.0, 0.37] {
                    let b = eigenbasis(&s, r, a).unwrap();
                    let v = su2ops::v_ra_matrix(&s, &VraParams::new(&s, r, a).unwrap());
                    for alpha in 0..d {
                        let vec = b.vector(alpha);
                        assert_abs_diff_eq!(vec.norm(), 1.0, epsilon = 1e-12);
                        let resid = (&v * vec - vec * b.eigenvalue(alpha)).norm();
                        assert!(resid < 1e-12, "eigen residual d={d} a={a} r={r}");
                        // every coefficient has modulus 1/√d: unbiased with S
                        for i in 0..d {
                            assert_abs_diff_eq!(
                                vec[i].norm(),
                                1.0 / (d as f64).sqrt(),
                                epsilon = 1e-12
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exact_coefficients_match_floating() {
        let s = AngularSpace::new(4);
        let b = eigenbasis_exact(&s, 3, 2, 2).unwrap(); // r = 3/2
        let exact = b.exact_coefficients().unwrap();
        let scale = 1.0 / (b.dim() as f64).sqrt();
        for alpha in 0..b.dim() {
            for i in 0..b.dim() {
                assert!((exact[alpha][i].value() * scale - b.vector(alpha)[i]).norm() < 1e-12);
            }
        }
        // integer r detection produces exact phases too
        assert!(eigenbasis(&s, 2.0, 1).unwrap().exact_coefficients().is_some());
        assert!(eigenbasis(&s, 0.37, 1).unwrap().exact_coefficients().is_none());
    }

    #[test]
    fn basis_is_orthonormal() {
        let s = AngularSpace::new(5);
        let b = eigenbasis(&s, 0.37, 3).unwrap();
        let rep = overlap_matrix(&b, &b).unwrap();
        assert!(residual(&rep.matrix, &matrix::identity(6)) < 1e-12);
    }

    #[test]
    fn overlap_routes_agree_and_shift_structure() {
        let s = AngularSpace::new(4); // d = 5
        let b1 = eigenbasis(&s, 0.3, 1).unwrap();
        let b2 = eigenbasis(&s, 0.9, 3).unwrap();
        let rep = overlap_matrix(&b1, &b2).unwrap();
        assert!(rep.closed_form_residual.unwrap() < 1e-12);
        assert!(rep.cyclic_diagonal_deviation.unwrap() < 1e-12);
    }

    #[test]
    fn overlap_prime_dimension_moduli() {
        let s = AngularSpace::new(1);
        let b1 = eigenbasis(&s, 0.0, 0).unwrap();
        let b2 = eigenbasis(&s, 0.0, 1).unwrap();
        let rep = overlap_matrix(&b1, &b2).unwrap();
        assert!(rep.unbiased);
        assert_abs_diff_eq!(rep.max_modulus, 1.0 / 2f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn overlap_space_mismatch() {
        let b1 = eigenbasis(&AngularSpace::new(1), 0.0, 0).unwrap();
        let b2 = eigenbasis(&AngularSpace::new(2), 0.0, 0).unwrap();
        assert!(matches!(
            overlap_matrix(&b1, &b2),
            Err(Error::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn overlap_sine_ratio_special_case() {
        // same a, r ≠ s: modulus given by a ratio of sines when
        // jr − α − js + β is not a multiple of d, else ±q-phase
        let s = AngularSpace::new(2); // j = 1
        let (r, s2) = (0.0, 0.4);
        let b1 = eigenbasis(&s, r, 2).unwrap();
        let b2 = eigenbasis(&s, s2, 2).unwrap();
        let rep = overlap_matrix(&b1, &b2).unwrap();
        let d = 3.0;
        let j = 1.0;
        for alpha in 0..3 {
            for beta in 0..3 {
                let arg = j * r - alpha as f64 - j * s2 + beta as f64;
                let expect = (std::f64::consts::PI * arg).sin()
                    / (std::f64::consts::PI * arg / d).sin()
                    / d;
                assert!(
                    (rep.matrix[(alpha, beta)].norm() - expect.abs()).abs() < 1e-12,
                    "sine ratio at α={alpha} β={beta}"
                );
            }
        }
        // k̃ = 0 case of the closed form: r = s gives |⟨jα|jα⟩| = 1
        let rep_same = overlap_matrix(&b1, &b1).unwrap();
        assert_abs_diff_eq!(rep_same.matrix[(1, 1)].re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn trace_relation_small_cases() {
        let s = AngularSpace::new(2); // j = 1, d = 3
        // a=b, r=s: trace = d
        let t = trace_relation_check(&s, 0.37, 1, 0.37, 1).unwrap();
        assert!(t.max_residual() < 1e-12);
        // a=0, b=1, r=s=0: δ=0 and φ equal → trace = 0
        let va = su2ops::v_ra_matrix(&s, &VraParams::new(&s, 0.0, 0).unwrap());
        let vb = su2ops::v_ra_matrix(&s, &VraParams::new(&s, 0.0, 1).unwrap());
        assert!((va.adjoint() * vb).trace().norm() < 1e-12);
        assert!(trace_relation_check(&s, 0.0, 0, 0.0, 1).unwrap().max_residual() < 1e-12);
        // r=0, s=1, a=b=0
        assert!(trace_relation_check(&s, 0.0, 0, 1.0, 0).unwrap().max_residual() < 1e-12);
    }

    #[test]
    fn trace_relation_random_params() {
        for (two_j, r, a, s2, b) in [
            (3u32, 0.2, 1u32, 0.9, 3u32),
            (4, 0.0, 2, 0.37, 2),
            (5, 1.0, 0, 0.5, 5),
            (2, 0.8, 1, 0.8, 1),
        ] {
            let s = AngularSpace::new(two_j);
            let t = trace_relation_check(&s, r, a, s2, b).unwrap();
            assert!(t.max_residual() < 1e-10, "2j={two_j} r={r} a={a} s={s2} b={b}");
        }
    }

    #[test]
    fn overlap_closed_form_random_sweep() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6f766c70);
        for _ in 0..200 {
            let d = rng.gen_range(2..=9usize);
            let s = AngularSpace::from_dim(d).unwrap();
            let a = rng.gen_range(0..d as u32);
            let b = rng.gen_range(0..d as u32);
            let r = rng.gen_range(-2.0..2.0);
            let s2 = rng.gen_range(-2.0..2.0);
            let left = eigenbasis(&s, r, a).unwrap();
            let right = eigenbasis(&s, s2, b).unwrap();
            let rep = overlap_matrix(&left, &right).unwrap();
            let residual = rep.closed_form_residual.unwrap();
            assert!(
                residual < 1e-12,
                "closed form vs direct: d={d} a={a} b={b} r={r} s={s2} residual={residual:e}"
            );
            let diag = rep.cyclic_diagonal_deviation.unwrap();
            assert!(
                diag < 1e-12,
                "cyclic diagonal structure: d={d} a={a} b={b} r={r} s={s2} deviation={diag:e}"
            );
        }
    }

    #[test]
    fn trace_and_sum_rules_random_sweep() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x74726163);
        for _ in 0..50 {
            let d = rng.gen_range(2..=9usize);
            let s = AngularSpace::from_dim(d).unwrap();
            let a = rng.gen_range(0..d as u32);
            let b = rng.gen_range(0..d as u32);
            let r = rng.gen_range(-2.0..2.0);
            let s2 = rng.gen_range(-2.0..2.0);
            let t = trace_relation_check(&s, r, a, s2, b).unwrap();
            assert!(
                t.max_residual() < 1e-10,
                "d={d} a={a} b={b} r={r} s={s2} residual={:e}",
                t.max_residual()
            );
        }
    }

    #[test]
    fn unbiased_with_computational() {
        for d in 2..=7usize {
            let s = AngularSpace::from_dim(d).unwrap();
            let b = eigenbasis(&s, 0.0, 0).unwrap().to_generic();
            let comp = GenericBasis::computational(d);
            assert!(unbiasedness_check(&b, &comp, 1e-10).unwrap().unbiased);
        }
    }

    #[test]
    fn unbiased_examples_d5_and_d4() {
        let s5 = AngularSpace::from_dim(5).unwrap();
        let b00 = eigenbasis(&s5, 0.0, 0).unwrap().to_generic();
        let b03 = eigenbasis(&s5, 0.0, 3).unwrap().to_generic();
        assert!(unbiasedness_check(&b00, &b03, 1e-10).unwrap().unbiased);

        let s4 = AngularSpace::from_dim(4).unwrap();
        let c00 = eigenbasis(&s4, 0.0, 0).unwrap().to_generic();
        let c02 = eigenbasis(&s4, 0.0, 2).unwrap().to_generic();
        let rep = unbiasedness_check(&c00, &c02, 1e-10).unwrap();
        assert!(!rep.unbiased);
    }

    #[test]
    fn complete_sets_for_primes() {
        for d in [2u64, 3, 7] {
            let set = complete_mub_set(d).unwrap();
            assert_eq!(set.len(), d as usize + 1);
        }
        assert!(matches!(complete_mub_set(6), Err(Error::NotPrime(6))));
        assert!(matches!(complete_mub_set(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn hadamard_small_cases() {
        // d=2, a=0 → [[1,1],[1,−1]]
        let h = hadamard_matrix(2, 0).unwrap();
        let m = h.matrix();
        let expect = OperatorMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1., 0.),
                Complex64::new(1., 0.),
                Complex64::new(1., 0.),
                Complex64::new(-1., 0.),
            ],
        );
        assert!(residual(&m, &expect) < 1e-12);

        // d=3, a=1: column α reads (1, q^{1+α}, q^{1+2α}) down rows
        // k = 0,1,2, i.e. exponents 0, 2(1+α), 2(1+2α) of e^{iπ/3}
        let h = hadamard_matrix(3, 1).unwrap();
        for alpha in 0..3u32 {
            assert_eq!(h.exponent(0, alpha as usize), 0);
            assert_eq!(h.exponent(1, alpha as usize), (2 * (1 + alpha)) % 6);
            assert_eq!(h.exponent(2, alpha as usize), (2 * (1 + 2 * alpha)) % 6);
        }
    }

    #[test]
    fn hadamard_identities() {
        for d in 2..=9usize {
            for a in 0..d as u32 {
                let h = hadamard_matrix(d, a).unwrap();
                let m = h.matrix();
                // H†H = dI
                let prod = m.adjoint() * &m;
                let expect = matrix::identity(d) * Complex64::new(d as f64, 0.0);
                assert!(residual(&prod, &expect) < 1e-10, "H†H at d={d} a={a}");
                // H†V_aH = q^{(d−1)a/2}·d·diag(q^{−α}); V_a rewritten over
                // ascending labels is the row+column flip of the spherical
                // matrix
                let s = AngularSpace::from_dim(d).unwrap();
                let v = su2ops::v_ra_matrix(&s, &VraParams::new(&s, 0.0, a).unwrap());
                let v_asc = OperatorMatrix::from_fn(d, d, |i, j| v[(d - 1 - i, d - 1 - j)]);
                let lhs = m.adjoint() * v_asc * &m;
                let mut rhs = matrix::zeros(d);
                for alpha in 0..d {
                    rhs[(alpha, alpha)] = s.q_pow((d as f64 - 1.0) * a as f64 / 2.0)
                        * s.q_pow(-(alpha as f64))
                        * d as f64;
                }
                assert!(residual(&lhs, &rhs) < 1e-10, "eigen equation d={d} a={a}");
            }
        }
    }

    #[test]
    fn hadamard_columns_are_eigenbasis() {
        for d in 2..=8usize {
            let s = AngularSpace::from_dim(d).unwrap();
            for a in 0..d as u32 {
                let h = hadamard_matrix(d, a).unwrap().column_basis("H");
                let b = eigenbasis(&s, 0.0, a).unwrap();
                for alpha in 0..d {
                    let diff = (h.vector(alpha) - b.vector(alpha)).norm();
                    assert!(diff < 1e-12, "column {alpha} at d={d} a={a}");
                }
            }
        }
    }

    #[test]
    fn hadamard_range_error() {
        assert!(matches!(
            hadamard_matrix(4, 4),
            Err(Error::RangeError { .. })
        ));
    }

    #[test]
    fn generator_form_matches_v() {
        assert_eq!(computational_basis_column_convention(3), vec![2, 1, 0]);
        for d in 2..=7usize {
            let s = AngularSpace::from_dim(d).unwrap();
            for a in 0..d as u32 {
                let va = v_a_generator_form(d, a).unwrap();
                let v = su2ops::v_ra_matrix(&s, &VraParams::new(&s, 0.0, a).unwrap());
                assert!(residual(&va, &v) < 1e-12, "d={d} a={a}");
            }
        }
    }

    #[test]
    fn tensor_bases_report_only() {
        // p=3, e=2: digits (0,0) vs (1,1); report computed, no truth asserted
        let s1 = CompositeBasisSpec::new(3, 2, vec![0, 0]).unwrap();
        let s2 = CompositeBasisSpec::new(3, 2, vec![1, 1]).unwrap();
        let b1 = tensor_bases(&s1).unwrap();
        let b2 = tensor_bases(&s2).unwrap();
        assert_eq!(b1.dim(), 9);
        let rep = unbiasedness_check(&b1, &b2, 1e-10).unwrap();
        assert!(rep.max_modulus <= 1.0 + 1e-12);

        // p=2, e=2: digits (0,0) vs (1,0)
        let t1 = tensor_bases(&CompositeBasisSpec::new(2, 2, vec![0, 0]).unwrap()).unwrap();
        let t2 = tensor_bases(&CompositeBasisSpec::new(2, 2, vec![1, 0]).unwrap()).unwrap();
        let rep2 = unbiasedness_check(&t1, &t2, 1e-10).unwrap();
        assert!(rep2.min_modulus >= 0.0);

        // tensor bases are unbiased with the composite computational basis
        let comp = GenericBasis::computational(9);
        assert!(unbiasedness_check(&b1, &comp, 1e-10).unwrap().unbiased);
        assert!(unbiasedness_check(&b2, &comp, 1e-10).unwrap().unbiased);
    }

    #[test]
    fn tensor_bases_validation() {
        assert!(matches!(
            CompositeBasisSpec::new(4, 2, vec![0, 0]),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            CompositeBasisSpec::new(3, 2, vec![0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            CompositeBasisSpec::new(3, 2, vec![0, 3]),
            Err(Error::RangeError { .. })
        ));
        let e1 = CompositeBasisSpec::new(3, 1, vec![1]).unwrap();
        assert!(matches!(tensor_bases(&e1), Err(Error::RangeError { .. })));
    }

    #[test]
    fn census_prime_and_prime_power() {
        // d=5 prime: every pair unbiased, count 4 = φ(5)
        let rep5 = unbiased_census(5, 0.0).unwrap();
        assert_eq!(rep5.counts, vec![4; 5]);
        assert_eq!(rep5.phi, 4);
        assert_eq!(rep5.digit_criterion_holds, Some(true));

        // d=9: unbiased iff a ≢ b (mod 3), each count exactly 6 = φ(9)
        let rep9 = unbiased_census(9, 0.0).unwrap();
        assert_eq!(rep9.counts, vec![6; 9]);
        assert_eq!(rep9.phi, 6);
        assert_eq!(rep9.digit_criterion_holds, Some(true));
    }

    #[test]
    fn census_composite_d15() {
        let rep = unbiased_census(15, 0.0).unwrap();
        assert_eq!(rep.phi, 8);
        assert!(rep.meets_totient_bound);
        assert!(rep.counts.iter().all(|&c| c >= 8));
        assert_eq!(rep.digit_criterion_holds, None);
    }
}
