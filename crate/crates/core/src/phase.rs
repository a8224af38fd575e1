//! Exact phase arithmetic with rational exponents of e^{iπ}.
//!
//! Every phase appearing in the closed-form bases and Hadamard matrices is
//! a half-integer power of q = exp(2πi/d), i.e. an integer power of
//! e^{iπ/d} (or of e^{iπ/(2d·den)} once a rational boundary parameter r
//! enters). [`Phase`] keeps such a value as a reduced fraction num/den with
//! value e^{iπ·num/den}, so products and powers stay exact and the floating
//! evaluation happens once, at the end.

use num_complex::Complex64;
use num_integer::gcd;

/// A unit-modulus complex number e^{iπ·num/den}, kept in canonical form:
/// den ≥ 1, gcd(num, den) = 1 (or num = 0, den = 1), 0 ≤ num < 2·den.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase {
    num: i64,
    den: i64,
}

impl Phase {
    /// e^{iπ·num/den}. `den` must be nonzero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase denominator must be nonzero");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        if g > 1 {
            num /= g;
            den /= g;
        }
        num = num.rem_euclid(2 * den);
        // reduction mod 2·den can reintroduce a common factor, e.g. 3/2 from 7/2 mod 4
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        debug_assert!(g == 1 || num == 0);
        Self { num, den }
    }

    pub fn one() -> Self {
        Self { num: 0, den: 1 }
    }

    /// q^(x_num/x_den) with q = exp(2πi/d), i.e. e^{iπ·2·x_num/(d·x_den)}.
    pub fn q_pow(d: i64, x_num: i64, x_den: i64) -> Self {
        Self::new(2 * x_num, d * x_den)
    }

    /// Numerator of the exponent (of e^{iπ/den}).
    pub fn num(&self) -> i64 {
        self.num
    }

    /// Denominator: the phase is a 2·den-th root of unity.
    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn value(&self) -> Complex64 {
        Complex64::cis(std::f64::consts::PI * self.num as f64 / self.den as f64)
    }

    pub fn conj(&self) -> Self {
        Self::new(-self.num, self.den)
    }

    pub fn pow(&self, e: i64) -> Self {
        // reduce the multiplied exponent against 2·den before it can overflow
        let num = (self.num.rem_euclid(2 * self.den)).checked_mul(e.rem_euclid(2 * self.den));
        match num {
            Some(n) => Self::new(n, self.den),
            None => Self::new(
                ((self.num as i128 * e as i128).rem_euclid(2 * self.den as i128)) as i64,
                self.den,
            ),
        }
    }

    /// Rewrite with an explicit denominator D (a multiple of `den`),
    /// returning the exponent of e^{iπ/D}. Used by exact serialization.
    pub fn with_denominator(&self, d: i64) -> Option<i64> {
        if d <= 0 || d % self.den != 0 {
            return None;
        }
        Some((self.num * (d / self.den)).rem_euclid(2 * d))
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        let g = gcd(self.den.unsigned_abs(), rhs.den.unsigned_abs()) as i64;
        let den = self.den / g * rhs.den;
        let num = (self.num as i128) * (rhs.den / g) as i128
            + (rhs.num as i128) * (self.den / g) as i128;
        Phase::new(num.rem_euclid(2 * den as i128) as i64, den)
    }
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.num == 0 {
            write!(f, "1")
        } else {
            write!(f, "e^(iπ·{}/{})", self.num, self.den)
        }
    }
}
