//! The spin-j space ε(j) and the parameter bundles shared by the operator
//! builders.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// A half-integer j carried as 2j, with d = 2j+1, q = exp(2πi/d), and the
/// spherical basis ordered by descending m = j, j−1, …, −j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AngularSpace {
    two_j: u32,
}

impl AngularSpace {
    pub fn new(two_j: u32) -> Self {
        Self { two_j }
    }

    /// Space of dimension d = 2j+1. Requires d ≥ 1.
    pub fn from_dim(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::RangeError {
                what: "dimension",
                got: 0,
                range: "d >= 1".into(),
            });
        }
        Ok(Self {
            two_j: (d - 1) as u32,
        })
    }

    pub fn two_j(&self) -> i32 {
        self.two_j as i32
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// q = exp(2πi/d).
    pub fn q(&self) -> Complex64 {
        Complex64::cis(2.0 * std::f64::consts::PI / self.dim() as f64)
    }

    /// q raised to a real power x: exp(2πi·x/d).
    pub fn q_pow(&self, x: f64) -> Complex64 {
        Complex64::cis(2.0 * std::f64::consts::PI * x / self.dim() as f64)
    }

    /// Doubled m labels in the row order of every matrix: 2j, 2j−2, …, −2j.
    pub fn two_m_labels(&self) -> Vec<i32> {
        (0..self.dim())
            .map(|i| self.two_j() - 2 * i as i32)
            .collect()
    }

    /// Row index of a given 2m.
    pub fn index_of_two_m(&self, two_m: i32) -> Result<usize> {
        let diff = self.two_j() - two_m;
        if two_m.abs() > self.two_j() || diff % 2 != 0 {
            return Err(Error::InvalidHalfInteger {
                two_j: self.two_j(),
                two_m,
            });
        }
        Ok((diff / 2) as usize)
    }

    /// 2m at a row index.
    pub fn two_m_at(&self, i: usize) -> i32 {
        self.two_j() - 2 * i as i32
    }

    /// k = j + m at a row index: the computational label, decreasing from
    /// d−1 at row 0 down to 0.
    pub fn k_at(&self, i: usize) -> usize {
        self.dim() - 1 - i
    }
}

/// Parameters (r, a) of the cyclic unitary v_ra, with φ_r = π(2j)r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VraParams {
    pub r: f64,
    pub a: u32,
}

impl VraParams {
    /// a is restricted to 0..2j (inclusive).
    pub fn new(space: &AngularSpace, r: f64, a: u32) -> Result<Self> {
        if a > space.two_j() as u32 {
            return Err(Error::RangeError {
                what: "a",
                got: a as i64,
                range: format!("0..={}", space.two_j()),
            });
        }
        Ok(Self { r, a })
    }

    /// φ_r = π(2j)r; e^{i·2πjr} is the boundary phase of v_ra.
    pub fn phi_r(&self, space: &AngularSpace) -> f64 {
        std::f64::consts::PI * space.two_j() as f64 * self.r
    }
}

/// Index m = (m1, m2) of a sine-algebra generator t_m; both components
/// positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WIndex {
    pub m1: u32,
    pub m2: u32,
}

impl WIndex {
    pub fn new(m1: u32, m2: u32) -> Result<Self> {
        if m1 < 1 || m2 < 1 {
            return Err(Error::RangeError {
                what: "t-operator index component",
                got: m1.min(m2) as i64,
                range: ">= 1".into(),
            });
        }
        Ok(Self { m1, m2 })
    }

    /// Wedge product m∧n = m1·n2 − m2·n1.
    pub fn wedge(&self, other: &WIndex) -> i64 {
        self.m1 as i64 * other.m2 as i64 - self.m2 as i64 * other.m1 as i64
    }
}
