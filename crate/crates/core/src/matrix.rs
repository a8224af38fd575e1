//! Dense complex matrices over the spherical basis, plus the small set of
//! norms and products the verification suites lean on.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// d×d complex matrix over the spherical basis (rows/columns ordered by
/// descending m, i.e. decreasing k = j+m).
pub type OperatorMatrix = DMatrix<Complex64>;

/// d-dimensional complex state vector over the spherical basis.
pub type StateVector = DVector<Complex64>;

pub fn identity(d: usize) -> OperatorMatrix {
    DMatrix::identity(d, d)
}

pub fn zeros(d: usize) -> OperatorMatrix {
    DMatrix::zeros(d, d)
}

/// Largest entry modulus; the entrywise norm used by all tolerance checks.
pub fn max_abs(m: &OperatorMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Entrywise distance max |a_ij − b_ij|. Panics on shape mismatch.
pub fn residual(a: &OperatorMatrix, b: &OperatorMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "residual of unequal shapes");
    max_abs(&(a - b))
}

/// [a, b] = ab − ba.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> OperatorMatrix {
    a * b - b * a
}

/// Non-negative integer matrix power by repeated multiplication.
pub fn matrix_pow(m: &OperatorMatrix, e: usize) -> OperatorMatrix {
    let mut acc = identity(m.nrows());
    for _ in 0..e {
        acc = &acc * m;
    }
    acc
}

/// max |(m†m − I)_ij|; zero for unitary m.
pub fn unitarity_residual(m: &OperatorMatrix) -> f64 {
    residual(&(m.adjoint() * m), &identity(m.ncols()))
}

/// max |(m − m†)_ij|; zero for Hermitian m.
pub fn hermiticity_residual(m: &OperatorMatrix) -> f64 {
    residual(m, &m.adjoint())
}
