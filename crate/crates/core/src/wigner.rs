//! Angular-momentum coupling machinery: 3-jm symbols and Clebsch-Gordan
//! coefficients by the exact Racah summation, Racah unit tensors u^(k)_p,
//! the expansion coefficients b_kp of the cyclic unitary v_ra over unit
//! tensors, polynomial realizations of u^(k)_p in the ladder operators,
//! rotation matrices in the standard spherical basis and in the
//! nonstandard (α-labeled) basis, and coupling coefficients in the
//! nonstandard scheme.
//!
//! All angular momenta cross the API as doubled integers (two_j = 2j), so
//! half-integer spins stay exact.

use crate::error::{Error, Result};
use crate::matrix::{self, OperatorMatrix};
use crate::mub::{self, EigenBasis};
use crate::space::{AngularSpace, VraParams};
use crate::su2ops;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative argument");
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

fn big_ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Arguments of a 3-jm symbol, all in doubled-integer form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeJmArgs {
    pub two_j1: i32,
    pub two_j2: i32,
    pub two_j3: i32,
    pub two_m1: i32,
    pub two_m2: i32,
    pub two_m3: i32,
}

impl ThreeJmArgs {
    pub fn new(
        two_j1: i32,
        two_j2: i32,
        two_j3: i32,
        two_m1: i32,
        two_m2: i32,
        two_m3: i32,
    ) -> Result<Self> {
        for (tj, tm) in [(two_j1, two_m1), (two_j2, two_m2), (two_j3, two_m3)] {
            if tj < 0 || (tj + tm) % 2 != 0 {
                return Err(Error::InvalidHalfInteger {
                    two_j: tj,
                    two_m: tm,
                });
            }
        }
        Ok(Self {
            two_j1,
            two_j2,
            two_j3,
            two_m1,
            two_m2,
            two_m3,
        })
    }
}

fn triangle_ok(two_j1: i32, two_j2: i32, two_j3: i32) -> bool {
    two_j3 <= two_j1 + two_j2
        && two_j3 >= (two_j1 - two_j2).abs()
        && (two_j1 + two_j2 + two_j3) % 2 == 0
}

/// 3-jm Wigner symbol by the Racah single-sum closed form, evaluated in
/// exact big-rational arithmetic with one square root taken at the end.
/// Returns 0 outside the triangle or selection rules.
pub fn three_jm(args: &ThreeJmArgs) -> Result<f64> {
    // re-validate so hand-built structs get the same guarantees
    let args = ThreeJmArgs::new(
        args.two_j1,
        args.two_j2,
        args.two_j3,
        args.two_m1,
        args.two_m2,
        args.two_m3,
    )?;
    let (tj1, tj2, tj3) = (args.two_j1 as i64, args.two_j2 as i64, args.two_j3 as i64);
    let (tm1, tm2, tm3) = (args.two_m1 as i64, args.two_m2 as i64, args.two_m3 as i64);
    if tm1 + tm2 + tm3 != 0
        || !triangle_ok(args.two_j1, args.two_j2, args.two_j3)
        || tm1.abs() > tj1
        || tm2.abs() > tj2
        || tm3.abs() > tj3
    {
        return Ok(0.0);
    }

    // all of these are integers once the selection rules hold
    let j1pj2mj3 = (tj1 + tj2 - tj3) / 2;
    let j1mj2pj3 = (tj1 - tj2 + tj3) / 2;
    let mj1pj2pj3 = (-tj1 + tj2 + tj3) / 2;
    let j1pj2pj3p1 = (tj1 + tj2 + tj3) / 2 + 1;
    let j1pm1 = (tj1 + tm1) / 2;
    let j1mm1 = (tj1 - tm1) / 2;
    let j2pm2 = (tj2 + tm2) / 2;
    let j2mm2 = (tj2 - tm2) / 2;
    let j3pm3 = (tj3 + tm3) / 2;
    let j3mm3 = (tj3 - tm3) / 2;

    // square of the prefactor, kept exact
    let pref_num = factorial(j1pj2mj3)
        * factorial(j1mj2pj3)
        * factorial(mj1pj2pj3)
        * factorial(j1pm1)
        * factorial(j1mm1)
        * factorial(j2pm2)
        * factorial(j2mm2)
        * factorial(j3pm3)
        * factorial(j3mm3);
    let pref = big_ratio(pref_num, factorial(j1pj2pj3p1));

    let t_min = 0.max((tj2 - tj3 - tm1) / 2).max((tj1 - tj3 + tm2) / 2);
    let t_max = j1pj2mj3.min(j1mm1).min(j2pm2);
    let mut sum = BigRational::zero();
    for t in t_min..=t_max {
        let den = factorial(t)
            * factorial(j1pj2mj3 - t)
            * factorial(j1mm1 - t)
            * factorial(j2pm2 - t)
            * factorial((tj3 - tj2 + tm1) / 2 + t)
            * factorial((tj3 - tj1 - tm2) / 2 + t);
        let term = big_ratio(BigInt::one(), den);
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return Ok(0.0);
    }
    let sign_exp = (tj1 - tj2 - tm3) / 2;
    let sign = if sign_exp.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    // value = sign · sum · √pref; take the square root on the reduced
    // rational so precision loss stays at one floating operation
    let sum_f = sum.to_f64().expect("rational fits in f64");
    let pref_f = pref.to_f64().expect("rational fits in f64");
    Ok(sign * sum_f * pref_f.sqrt())
}

/// Clebsch-Gordan coefficient (j1 j2 m1 m2 | j3 m3) =
/// (−1)^{j1−j2+m3} √(2j3+1) · 3jm(j1,j2,j3; m1,m2,−m3).
pub fn clebsch_gordan(
    two_j1: i32,
    two_j2: i32,
    two_m1: i32,
    two_m2: i32,
    two_j3: i32,
    two_m3: i32,
) -> Result<f64> {
    let args = ThreeJmArgs::new(two_j1, two_j2, two_j3, two_m1, two_m2, -two_m3)?;
    let sym = three_jm(&args)?;
    if sym == 0.0 {
        return Ok(0.0);
    }
    // nonzero symbol implies j1 − j2 + m3 is an integer
    let sign_exp = ((two_j1 - two_j2 + two_m3) / 2).rem_euclid(2);
    let sign = if sign_exp == 0 { 1.0 } else { -1.0 };
    Ok(sign * ((two_j3 as f64) + 1.0).sqrt() * sym)
}

/// Racah unit tensor u^(k)_p on ε(j):
/// ⟨j,m|u^(k)_p|j,m′⟩ = (−1)^{j−m} · 3jm(j,k,j; −m,p,m′).
#[derive(Debug, Clone)]
pub struct UnitTensor {
    pub space: AngularSpace,
    pub k: u32,
    pub p: i32,
    pub matrix: OperatorMatrix,
}

/// Build u^(k)_p from 3-jm symbols; requires 0 ≤ k ≤ 2j and |p| ≤ k.
pub fn unit_tensor(s: &AngularSpace, k: u32, p: i32) -> Result<UnitTensor> {
    if k as i32 > s.two_j() {
        return Err(Error::RangeError {
            what: "k",
            got: k as i64,
            range: format!("0..={}", s.two_j()),
        });
    }
    if p.abs() > k as i32 {
        return Err(Error::RangeError {
            what: "p",
            got: p as i64,
            range: format!("-{k}..={k}"),
        });
    }
    let d = s.dim();
    let mut m = matrix::zeros(d);
    for row in 0..d {
        let tm = s.two_m_at(row);
        for col in 0..d {
            let tmp = s.two_m_at(col);
            let args = ThreeJmArgs::new(s.two_j(), 2 * k as i32, s.two_j(), -tm, 2 * p, tmp)?;
            let sym = three_jm(&args)?;
            if sym != 0.0 {
                let sign = if (((s.two_j() - tm) / 2) % 2 + 2) % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                m[(row, col)] = Complex64::new(sign * sym, 0.0);
            }
        }
    }
    Ok(UnitTensor {
        space: *s,
        k,
        p,
        matrix: m,
    })
}

/// Expansion coefficients b_kp of v_ra over the unit tensors,
/// v_ra = Σ_{k,p} b_kp u^(k)_p, computed both from the trace formula
/// b_kp = (2k+1)·Tr((u^(k)_p)† v_ra) and from the closed form (a sum of
/// 3-jm symbols carrying the phase q^{(j−m)a}, plus the boundary term
/// δ_{k,2j} δ_{p,−2j} √(4j+1) e^{i2πjr}).
#[derive(Debug, Clone)]
pub struct BCoefficients {
    space: AngularSpace,
    r: f64,
    a: u32,
    /// (k, p) → coefficient, dense over 0 ≤ k ≤ 2j, −k ≤ p ≤ k.
    table: Vec<((u32, i32), Complex64)>,
    /// Largest disagreement between the trace route and the closed form.
    pub route_disagreement: f64,
}

impl BCoefficients {
    pub fn get(&self, k: u32, p: i32) -> Complex64 {
        self.table
            .iter()
            .find(|((tk, tp), _)| *tk == k && *tp == p)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn entries(&self) -> &[((u32, i32), Complex64)] {
        &self.table
    }

    /// Rebuild Σ b_kp u^(k)_p; equals v_ra up to floating error.
    pub fn reconstruct(&self) -> Result<OperatorMatrix> {
        let mut m = matrix::zeros(self.space.dim());
        for &((k, p), c) in &self.table {
            if c.norm() > 0.0 {
                m += unit_tensor(&self.space, k, p)?.matrix * c;
            }
        }
        Ok(m)
    }
}

pub fn b_coefficients(s: &AngularSpace, r: f64, a: u32) -> Result<BCoefficients> {
    let params = VraParams::new(s, r, a)?;
    let v = su2ops::v_ra_matrix(s, &params);
    let tj = s.two_j();
    let mut table = Vec::new();
    let mut route_disagreement = 0.0f64;
    for k in 0..=tj as u32 {
        for p in -(k as i32)..=k as i32 {
            let u = unit_tensor(s, k, p)?;
            let by_trace = (u.matrix.adjoint() * &v).trace() * (2.0 * k as f64 + 1.0);

            // closed form: only p = 1 and the (2j, −2j) slot survive
            let mut by_formula = Complex64::new(0.0, 0.0);
            if p == 1 {
                let mut sum = Complex64::new(0.0, 0.0);
                for tm in (-tj..=tj - 2).step_by(2) {
                    let j_minus_m = (tj - tm) / 2;
                    let sign = if (j_minus_m - 1).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                    let args =
                        ThreeJmArgs::new(tj, 2 * k as i32, tj, -tm - 2, 2, tm)?;
                    sum += s.q_pow((j_minus_m * a as i32) as f64)
                        * (sign * three_jm(&args)?);
                }
                by_formula += sum * (2.0 * k as f64 + 1.0);
            }
            if k as i32 == tj && p == -tj {
                by_formula += Complex64::cis(params.phi_r(s))
                    * ((2.0 * tj as f64) + 1.0).sqrt();
            }
            route_disagreement = route_disagreement.max((by_trace - by_formula).norm());
            table.push(((k, p), by_trace));
        }
    }
    Ok(BCoefficients {
        space: *s,
        r,
        a,
        table,
        route_disagreement,
    })
}

impl BCoefficients {
    pub fn space(&self) -> &AngularSpace {
        &self.space
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn a(&self) -> u32 {
        self.a
    }
}

/// Evaluate u^(k)_p as the polynomial in j₊ (or j₋ for p < 0) and j_z,
/// with Condon-Shortley ladder matrices (a = 0). Must reproduce the
/// 3-jm-built matrix.
pub fn unit_tensor_enveloping(s: &AngularSpace, k: u32, p: i32) -> Result<OperatorMatrix> {
    if k as i32 > s.two_j() {
        return Err(Error::RangeError {
            what: "k",
            got: k as i64,
            range: format!("0..={}", s.two_j()),
        });
    }
    if p.abs() > k as i32 {
        return Err(Error::RangeError {
            what: "p",
            got: p as i64,
            range: format!("-{k}..={k}"),
        });
    }
    let d = s.dim();
    let tj = s.two_j() as i64;
    let params = VraParams::new(s, 0.0, 0)?;
    let (jp, jm, _) = su2ops::ladder_operators(s, &params);
    let (k, p) = (k as i64, p as i64);

    // j + j_z and j − j_z are diagonal with integer entries j ± m
    let diag_entry = |row: usize, sign_plus: bool| -> i64 {
        let tm = s.two_m_at(row) as i64;
        if sign_plus {
            (tj + tm) / 2
        } else {
            (tj - tm) / 2
        }
    };

    // bracket evaluated exactly per diagonal entry
    let mut bracket = vec![BigRational::zero(); d];
    if p >= 0 {
        let first = big_ratio(
            factorial(tj - p) * factorial(k + p),
            factorial(p) * factorial(k - p),
        ) * BigRational::from_integer(BigInt::from(if p % 2 == 0 { 1 } else { -1 }));
        for b in bracket.iter_mut() {
            *b = first.clone();
        }
        for z in (p + 1)..=k {
            let coeff = big_ratio(
                factorial(tj - z) * factorial(k + z),
                factorial(z) * factorial(k - z) * factorial(z - p),
            ) * BigRational::from_integer(BigInt::from(if z % 2 == 0 { 1 } else { -1 }));
            for (row, b) in bracket.iter_mut().enumerate() {
                let jpm = diag_entry(row, true); // j + m
                let mut prod = BigInt::one();
                for t in 1..=(z - p) {
                    prod *= BigInt::from(jpm + p - z + t);
                }
                *b += coeff.clone() * BigRational::from_integer(prod);
            }
        }
        let pref = big_ratio(
            factorial(k - p),
            factorial(k + p) * factorial(tj - k) * factorial(tj + k + 1),
        );
        let pref_f = pref.to_f64().expect("prefactor fits in f64").sqrt();
        let outer_sign = if (k + p) % 2 == 0 { 1.0 } else { -1.0 };
        // u = pref^{1/2} (−1)^{k+p} j₊^p · diag(bracket)
        let mut diag = matrix::zeros(d);
        for (row, b) in bracket.iter().enumerate() {
            diag[(row, row)] =
                Complex64::new(b.to_f64().expect("bracket fits in f64"), 0.0);
        }
        let shift = matrix::matrix_pow(&jp, p as usize);
        Ok(shift * diag * Complex64::new(outer_sign * pref_f, 0.0))
    } else {
        // p ≤ 0 variant, from the substitution p → −p, j₊ → −j₋,
        // j_z → −j_z and an overall (−1)^{k+p); the product upper limit is
        // z+p (the substituted copy of z−p'), not the misprinted z−p
        let first = big_ratio(
            factorial(tj + p) * factorial(k - p),
            factorial(-p) * factorial(k + p),
        ) * BigRational::from_integer(BigInt::from(if p.rem_euclid(2) == 0 { 1 } else { -1 }));
        for b in bracket.iter_mut() {
            *b = first.clone();
        }
        for z in (-p + 1)..=k {
            let coeff = big_ratio(
                factorial(tj - z) * factorial(k + z),
                factorial(z) * factorial(k - z) * factorial(z + p),
            ) * BigRational::from_integer(BigInt::from(if z % 2 == 0 { 1 } else { -1 }));
            for (row, b) in bracket.iter_mut().enumerate() {
                let jmm = diag_entry(row, false); // j − m
                let mut prod = BigInt::one();
                for t in 1..=(z + p) {
                    prod *= BigInt::from(jmm - p - z + t);
                }
                *b += coeff.clone() * BigRational::from_integer(prod);
            }
        }
        let pref = big_ratio(
            factorial(k + p),
            factorial(k - p) * factorial(tj - k) * factorial(tj + k + 1),
        );
        let pref_f = pref.to_f64().expect("prefactor fits in f64").sqrt();
        let outer_sign = if p.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let mut diag = matrix::zeros(d);
        for (row, b) in bracket.iter().enumerate() {
            diag[(row, row)] =
                Complex64::new(b.to_f64().expect("bracket fits in f64"), 0.0);
        }
        let shift = matrix::matrix_pow(&jm, (-p) as usize);
        Ok(shift * diag * Complex64::new(outer_sign * pref_f, 0.0))
    }
}

/// Worked closed forms of v_00 as low-order polynomials in the ladder
/// operators, available for j ∈ {1/2, 1, 3/2}.
pub fn v00_closed_forms(s: &AngularSpace) -> Result<OperatorMatrix> {
    let params = VraParams::new(s, 0.0, 0)?;
    let (jp, jm, jz) = su2ops::ladder_operators(s, &params);
    let d = s.dim();
    let id = matrix::identity(d);
    match s.two_j() {
        1 => Ok(&jp + &jm),
        2 => Ok(&jp * Complex64::new(1.0 / 2f64.sqrt(), 0.0)
            + (&jm * &jm) * Complex64::new(0.5, 0.0)),
        3 => {
            let c13 = 1.0 / 3f64.sqrt();
            let term1 = &jp * Complex64::new(c13, 0.0);
            let f1 = &jz + &id * Complex64::new(1.5, 0.0);
            let f2 = &jz - &id * Complex64::new(0.5, 0.0);
            let term2 = (&jp * (f1 * f2)) * Complex64::new(c13 - 0.5, 0.0);
            let term3 = (&jm * &jm * &jm) * Complex64::new(1.0 / 6.0, 0.0);
            Ok(term1 + term2 + term3)
        }
        other => Err(Error::UnsupportedJ(other)),
    }
}

/// Active z-y-z Euler angles.
#[derive(Debug, Clone, Copy)]
pub struct EulerAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl EulerAngles {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self { alpha, beta, gamma }
    }

    /// Pure z-rotation by φ.
    pub fn z_rotation(phi: f64) -> Self {
        Self {
            alpha: phi,
            beta: 0.0,
            gamma: 0.0,
        }
    }
}

/// Wigner small-d matrix element d^j_{m′m}(β) by the real summation
/// formula; doubled arguments.
fn small_d(two_j: i32, two_mp: i32, two_m: i32, beta: f64) -> f64 {
    let (tj, tmp, tm) = (two_j as i64, two_mp as i64, two_m as i64);
    let jpm = (tj + tm) / 2;
    let jmm = (tj - tm) / 2;
    let jpmp = (tj + tmp) / 2;
    let jmmp = (tj - tmp) / 2;
    let pref = (factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm))
        .to_f64()
        .expect("factorial product fits in f64")
        .sqrt();
    let mp_minus_m = (tmp - tm) / 2;
    let s_min = 0.max(-mp_minus_m);
    let s_max = jpm.min(jmmp);
    let (c, s_half) = ((beta / 2.0).cos(), (beta / 2.0).sin());
    let mut sum = 0.0;
    for s in s_min..=s_max {
        let den = (factorial(jpm - s)
            * factorial(s)
            * factorial(mp_minus_m + s)
            * factorial(jmmp - s))
        .to_f64()
        .expect("factorial product fits in f64");
        let sign = if (mp_minus_m + s).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let cpow = jpm + jmmp - 2 * s; // (j+m) + (j−m′) − 2s
        let spow = mp_minus_m + 2 * s;
        sum += sign * c.powi(cpow as i32) * s_half.powi(spow as i32) / den;
    }
    pref * sum
}

/// Standard rotation matrix 𝒟^(j)(α,β,γ)_{m m′} = e^{−imα} d^j_{mm′}(β)
/// e^{−im′γ}, rows and columns in descending m.
pub fn wigner_rotation_standard(s: &AngularSpace, angles: &EulerAngles) -> OperatorMatrix {
    let d = s.dim();
    DMatrix::from_fn(d, d, |row, col| {
        let tm = s.two_m_at(row);
        let tmp = s.two_m_at(col);
        let phase = Complex64::cis(
            -(tm as f64 / 2.0) * angles.alpha - (tmp as f64 / 2.0) * angles.gamma,
        );
        phase * small_d(s.two_j(), tm, tmp, angles.beta)
    })
}

/// Rotation matrix in the nonstandard basis:
/// D^(j)(R)_{αα′} = (1/d) Σ_{mm′} q^{−ρ(j,m,a,r,α)+ρ(j,m′,a,r,α′)} 𝒟_{mm′},
/// equivalently T† 𝒟 T with T the eigenbasis column matrix.
pub fn rotation_new_scheme(
    s: &AngularSpace,
    r: f64,
    a: u32,
    angles: &EulerAngles,
) -> Result<OperatorMatrix> {
    let basis = mub::eigenbasis(s, r, a)?;
    let std = wigner_rotation_standard(s, angles);
    Ok(conjugate_by_basis(&basis, &std))
}

/// T† M T where T's columns are the basis vectors.
pub fn conjugate_by_basis(basis: &EigenBasis, m: &OperatorMatrix) -> OperatorMatrix {
    let d = basis.dim();
    let t = DMatrix::from_fn(d, d, |row, col| basis.vector(col)[row]);
    t.adjoint() * m * t
}

/// Coupling coefficient in the nonstandard scheme:
/// [(2j1+1)(2j2+1)(2j3+1)]^{−1/2} Σ_{m1m2m3} (CG) ·
/// q1^{−ρ(j1,m1,a,r,α1)} q2^{−ρ(j2,m2,a,r,α2)} q3^{+ρ(j3,m3,a,r,α3)}.
#[allow(clippy::too_many_arguments)]
pub fn coupling_new_scheme(
    two_j1: i32,
    two_j2: i32,
    two_j3: i32,
    alpha1: u32,
    alpha2: u32,
    alpha3: u32,
    r: f64,
    a: u32,
) -> Result<Complex64> {
    if two_j1 < 0 || two_j2 < 0 || two_j3 < 0 {
        return Err(Error::InvalidHalfInteger {
            two_j: two_j1.min(two_j2).min(two_j3),
            two_m: 0,
        });
    }
    if !triangle_ok(two_j1, two_j2, two_j3) {
        return Err(Error::TriangleViolation {
            two_j1,
            two_j2,
            two_j3,
        });
    }
    let spaces = [
        AngularSpace::new(two_j1 as u32),
        AngularSpace::new(two_j2 as u32),
        AngularSpace::new(two_j3 as u32),
    ];
    for sp in &spaces {
        if a as i32 > sp.two_j() {
            return Err(Error::RangeError {
                what: "a",
                got: a as i64,
                range: format!("0..={}", sp.two_j()),
            });
        }
    }
    let alphas = [alpha1 as f64, alpha2 as f64, alpha3 as f64];
    for (sp, &al) in spaces.iter().zip([alpha1, alpha2, alpha3].iter()) {
        if al as usize >= sp.dim() {
            return Err(Error::RangeError {
                what: "alpha",
                got: al as i64,
                range: format!("0..={}", sp.dim() - 1),
            });
        }
    }
    let norm = ((two_j1 + 1) as f64 * (two_j2 + 1) as f64 * (two_j3 + 1) as f64).sqrt();
    let mut sum = Complex64::new(0.0, 0.0);
    for tm1 in (-two_j1..=two_j1).step_by(2) {
        for tm2 in (-two_j2..=two_j2).step_by(2) {
            let tm3 = tm1 + tm2;
            if tm3.abs() > two_j3 {
                continue;
            }
            let cg = clebsch_gordan(two_j1, two_j2, tm1, tm2, two_j3, tm3)?;
            if cg == 0.0 {
                continue;
            }
            let phase = |sp: &AngularSpace, tm: i32, alpha: f64, sign: f64| {
                sp.q_pow(sign * mub::rho(sp.j(), tm as f64 / 2.0, a as f64, r, alpha))
            };
            let ph = phase(&spaces[0], tm1, alphas[0], -1.0)
                * phase(&spaces[1], tm2, alphas[1], -1.0)
                * phase(&spaces[2], tm3, alphas[2], 1.0);
            sum += ph * cg;
        }
    }
    Ok(sum / norm)
}
