//! Generalized quadratic Gauss sums S(u,v,w) and their identities.
//!
//! S(u,v,w) = Σ_{k=0}^{|w|−1} e^{iπ(uk²+vk)/w} for integers with w ≠ 0 and
//! uw + v even. Every term is a 2|w|-th root of unity, so exponents are
//! reduced modulo 2|w| in integer arithmetic before any floating-point
//! evaluation. The module carries the translation relation, the negation
//! and sign rules with their 2-valuation analysis, vanishing families, the
//! √w magnitude law for odd prime w, and the Gauss-sum form of the overlap
//! between two eigenbases of [`crate::mub`], used as a cross-module oracle.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::arith::{gcd, is_prime, two_valuation};
use crate::error::{Error, Result};

/// The integer argument triple of S(u,v,w).
///
/// [`GaussSumSpec::new`] enforces w ≠ 0, u ≠ 0 and uw + v even; for
/// |w| = 1 the sum has the single term 1 and the parity condition is
/// vacuous, so any v is accepted there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussSumSpec {
    u: i64,
    v: i64,
    w: i64,
}

impl GaussSumSpec {
    pub fn new(u: i64, v: i64, w: i64) -> Result<Self> {
        if w == 0 || u == 0 || (w.abs() != 1 && (u.wrapping_mul(w) + v) % 2 != 0) {
            return Err(Error::ParityViolation { u, v, w });
        }
        Ok(Self { u, v, w })
    }

    /// Escape hatch for exploratory evaluation: only w ≠ 0 is required, so
    /// the identities of this module are not guaranteed to hold. Intended
    /// for interactive sweeps; library code should use [`GaussSumSpec::new`].
    pub fn exploratory(u: i64, v: i64, w: i64) -> Result<Self> {
        if w == 0 {
            return Err(Error::ParityViolation { u, v, w });
        }
        Ok(Self { u, v, w })
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn w(&self) -> i64 {
        self.w
    }
}

/// e^{iπ·num/w} with the exponent reduced modulo 2|w| exactly first.
fn half_unit(num: i128, w: i64) -> Complex64 {
    let period = 2 * (w.abs() as i128);
    let reduced = num.rem_euclid(period) as f64;
    Complex64::cis(PI * reduced / w as f64)
}

/// Direct evaluation of S(u,v,w) = Σ_{k=0}^{|w|−1} e^{iπ(uk²+vk)/w}.
pub fn gauss_sum(spec: &GaussSumSpec) -> Complex64 {
    let (u, v, w) = (spec.u as i128, spec.v as i128, spec.w);
    (0..w.abs() as i128)
        .map(|k| half_unit(u * k * k + v * k, w))
        .sum()
}

/// Residual of the translation relation
/// S(u,v,w) = q^{(ut²+vt)/2} S(u, v+2ut, w), q = e^{2πi/w}.
///
/// The relation holds for every integer t because a shift of the summation
/// index by w leaves the sum unchanged: uw² + vw = (uw+v)w ≡ 0 (mod 2w).
pub fn translation_identity(spec: &GaussSumSpec, t: i64) -> f64 {
    let (u, v, w) = (spec.u, spec.v, spec.w);
    let shifted = GaussSumSpec {
        u,
        v: v + 2 * u * t,
        w,
    };
    let phase = half_unit(u as i128 * t as i128 * t as i128 + v as i128 * t as i128, w);
    (gauss_sum(spec) - phase * gauss_sum(&shifted)).norm()
}

/// Residual of the odd-w consequence of the translation relation,
/// S(u, 2n−uw, w) = q^{−(w−1)(w+1)u/8 + (w−1)n/2} S(u, 2n−u, w).
///
/// Both phase exponents are integers when w is odd (w² ≡ 1 mod 8); even w
/// is rejected.
pub fn derived_relation_check(u: i64, n: i64, w: i64) -> Result<f64> {
    if w % 2 == 0 {
        return Err(Error::Inapplicable(format!(
            "the derived translation relation needs odd w, got w = {w}"
        )));
    }
    let lhs = GaussSumSpec::new(u, 2 * n - u * w, w)?;
    let rhs = GaussSumSpec::new(u, 2 * n - u, w)?;
    // q^e with q = e^{2πi/w} is e^{iπ·2e/w}.
    let e = -(w as i128 - 1) * (w as i128 + 1) * u as i128 / 8 + (w as i128 - 1) * n as i128 / 2;
    let phase = half_unit(2 * e, w);
    Ok((gauss_sum(&lhs) - phase * gauss_sum(&rhs)).norm())
}

/// Residual of the unconditional negation identity S(u,v,w) = S(u,−v,w),
/// obtained by reflecting the summation index through −|w|+1..0.
pub fn negation_identity(spec: &GaussSumSpec) -> f64 {
    let negated = GaussSumSpec {
        u: spec.u,
        v: -spec.v,
        w: spec.w,
    };
    (gauss_sum(spec) - gauss_sum(&negated)).norm()
}

/// Why a sign prediction came out the way it did.
///
/// The minus sign requires a solution of ut + v ≡ w (mod 2w): an odd one
/// when v₂(u) ≤ v₂(w), any one when v₂(u) ≥ v₂(w) + 1, where v₂ is the
/// 2-valuation. Otherwise the sign is plus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignReason {
    OddSolutionLowValuation,
    SolutionHighValuation,
    NoSolution,
}

/// Predicted sign in S(u,v,w) = ±S(u,−v,w).
///
/// Because the negation identity holds unconditionally, a predicted minus
/// sign forces S(u,v,w) = 0; the sign analysis is therefore a vanishing
/// criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignCase {
    spec: GaussSumSpec,
    predicted_sign: i32,
    reason: SignReason,
}

impl SignCase {
    pub fn spec(&self) -> &GaussSumSpec {
        &self.spec
    }

    pub fn predicted_sign(&self) -> i32 {
        self.predicted_sign
    }

    pub fn reason(&self) -> SignReason {
        self.reason
    }
}

/// Solutions of x·t ≡ c (mod m) for m > 0, as (smallest nonnegative
/// solution, period); None when gcd(x, m) does not divide c.
fn solve_linear_congruence(x: i64, c: i64, m: i64) -> Option<(i64, i64)> {
    let g = gcd(x.rem_euclid(m), m);
    let g = if g == 0 { m } else { g };
    if c.rem_euclid(g) != 0 {
        return None;
    }
    let step = m / g;
    // Brute scan is fine at the moduli this module sees (|m| ≤ a few
    // hundred); the first solution lies below step.
    (0..step).find(|&t| (x * t - c).rem_euclid(m) == 0).map(|t| (t, step))
}

/// Applies the 2-valuation sign rule to S(u,v,w) = ±S(u,−v,w).
///
/// The rule applies only when some t solves ut + v ≡ 0 (mod w); otherwise
/// the relation itself is not available and the call fails.
pub fn sign_case(spec: &GaussSumSpec) -> Result<SignCase> {
    let (u, v, w) = (spec.u, spec.v, spec.w);
    let wa = w.abs();
    if solve_linear_congruence(u, -v, wa).is_none() {
        return Err(Error::Inapplicable(format!(
            "no integer t solves {u}t + {v} ≡ 0 (mod {w}); the sign relation does not apply"
        )));
    }

    let solution = solve_linear_congruence(u, w - v, 2 * wa);
    let has_odd_solution = matches!(solution, Some((t0, step)) if t0 % 2 != 0 || step % 2 != 0);
    let minus = if two_valuation(u) <= two_valuation(w) {
        has_odd_solution
    } else {
        solution.is_some()
    };

    let reason = if !minus {
        SignReason::NoSolution
    } else if two_valuation(u) <= two_valuation(w) {
        SignReason::OddSolutionLowValuation
    } else {
        SignReason::SolutionHighValuation
    };
    Ok(SignCase {
        spec: *spec,
        predicted_sign: if minus { -1 } else { 1 },
        reason,
    })
}

/// Size of the orbit of v under v ↦ v + 2ut modulo 2|w|, namely
/// |w|/gcd(u,w); the Gauss sums across one orbit agree up to a phase.
pub fn orbit_size(u: i64, w: i64) -> u64 {
    (w.abs() / gcd(u.abs(), w.abs()).max(1)) as u64
}

/// Number of v in one period (v runs modulo 2|w| with uw + v even) for
/// which the sign rule predicts a minus, i.e. for which S(u,v,w) vanishes.
pub fn count_minus_signs(u: i64, w: i64) -> Result<usize> {
    let start = (u.wrapping_mul(w)).rem_euclid(2);
    let mut count = 0;
    for v in (start..start + 2 * w.abs()).step_by(2) {
        let spec = GaussSumSpec::new(u, v, w)?;
        if let Ok(case) = sign_case(&spec) {
            if case.predicted_sign() == -1 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// |S(u,v,w)| for odd prime w and u not divisible by w: always √w.
///
/// The even-u case reduces by index translation to the classical sum
/// Σ q^{ξk²} with ξ = u/2; the odd-u case doubles the summation range with
/// the canonical additive character of Z/2wZ. The computed magnitude is
/// checked against √w before being returned.
pub fn prime_magnitude(u: i64, v: i64, w: i64) -> Result<f64> {
    if w < 3 || w % 2 == 0 || !is_prime(w as u64) {
        return Err(Error::Inapplicable(format!(
            "the magnitude law needs an odd prime w, got w = {w}"
        )));
    }
    if u.rem_euclid(w) == 0 {
        return Err(Error::Inapplicable(format!(
            "the magnitude law needs u ≢ 0 (mod w), got u = {u}, w = {w}"
        )));
    }
    let spec = GaussSumSpec::new(u, v, w)?;
    let magnitude = gauss_sum(&spec).norm();
    let expected = (w as f64).sqrt();
    if (magnitude - expected).abs() > 1e-10 {
        return Err(Error::CriterionMismatch(format!(
            "|S({u},{v},{w})| = {magnitude} but √w = {expected}"
        )));
    }
    Ok(magnitude)
}

/// The column sum Σ_{k=0}^{d−1} e^{iπ[k(d−k)λ + 2kμ]/d} of the generalized
/// Hadamard matrix with parameter λ and column μ.
///
/// For d prime, 1 ≤ |λ| ≤ d−1 and |μ| ≤ d−1 the magnitude is √d; for
/// composite d no magnitude statement is made and the raw value is
/// returned.
pub fn hadamard_column_sum(d: u32, lam: i64, mu: i64) -> Complex64 {
    let di = d as i128;
    (0..di)
        .map(|k| half_unit(k * (di - k) * lam as i128 + 2 * k * mu as i128, d as i64))
        .sum()
}

/// Overlap ⟨jα;ra|jβ;rb⟩ between two eigenbases sharing r, as the Gauss
/// sum S(u,v,w)/w with u = a−b, v = 2(β−α) + (2j+1)(b−a), w = 2j+1.
///
/// The overlap does not depend on r, which therefore does not appear; the
/// value must match the direct inner product computed by
/// [`crate::mub::overlap_matrix`]. For w prime the modulus is 1/√w.
pub fn overlap_via_gauss(two_j: u32, a: u32, b: u32, alpha: u32, beta: u32) -> Result<Complex64> {
    for (what, got) in [("a", a), ("b", b), ("alpha", alpha), ("beta", beta)] {
        if got > two_j {
            return Err(Error::RangeError {
                what,
                got: got as i64,
                range: format!("0..={two_j}"),
            });
        }
    }
    if a == b {
        return Err(Error::Inapplicable(
            "the Gauss-sum overlap form needs a ≠ b; for a = b the bases coincide".into(),
        ));
    }
    let w = two_j as i64 + 1;
    let u = a as i64 - b as i64;
    let v = 2 * (beta as i64 - alpha as i64) + w * (b as i64 - a as i64);
    let spec = GaussSumSpec::new(u, v, w)?;
    Ok(gauss_sum(&spec) / Complex64::new(w as f64, 0.0))
}
