//! Nonstandard SU(2) bases, mutually unbiased bases (MUBs), generalized
//! Hadamard matrices and generalized quadratic Gauss sums.
//!
//! The library builds, on the spin-j space ε(j) of dimension d = 2j+1, the
//! commuting pair {j², v_ra} where v_ra is a unitary cyclic operator
//! parametrized by a real r and an integer a ∈ {0, …, 2j}. Its eigenbases
//! B_ra are unbiased with the spherical basis, and for d prime the family
//! {S, B_00, …, B_0,d−1} is a complete set of d+1 mutually unbiased bases.
//! Every construction is backed by at least two independent computational
//! routes (closed form vs. matrix arithmetic, oscillator realization vs.
//! direct action, Gauss sum vs. inner product) so that the test suite can
//! cross-validate them at tight tolerances.
//!
//! Module map:
//!
//! * [`quon`] — two q-deformed truncated oscillator algebras, their pair
//!   Fock space, and the Schwinger-style embedding of ε(j); the independent
//!   constructive origin of h and v_ra.
//! * [`su2ops`] — closed-form matrices on ε(j): h, v_ra, z, ladder
//!   operators, the sine-algebra generators t_m and the finite Pauli group.
//! * [`mub`] — eigenbases B_ra, overlap/trace relations, generalized
//!   Hadamard matrices, complete MUB sets, composite-dimension census.
//! * [`gauss`] — generalized quadratic Gauss sums S(u,v,w) and their
//!   translation/negation/sign identities, plus the Gauss-sum form of the
//!   basis overlaps.
//! * [`wigner`] — 3-jm symbols and Clebsch–Gordan coefficients in exact
//!   big-integer arithmetic, Racah unit tensors, the b_kp expansion of
//!   v_ra, enveloping-algebra polynomial realizations, and rotation
//!   matrices in both the standard and the {j², v_ra} schemes.
//! * [`selftest`] — named invariant suites over all modules, used by the
//!   CLI and the acceptance tests.
//!
//! Conventions (used consistently everywhere):
//!
//! * Half-integers are passed as doubled integers (`two_j`, `two_m`), so
//!   j = 3/2 is `two_j = 3`.
//! * Matrices over the spherical basis are indexed by descending m: row 0
//!   is m = j, row d−1 is m = −j. Equivalently, with k = j+m, rows follow
//!   the decreasing order k = d−1, …, 0.
//! * q = exp(2πi/d). Half-integer powers of q are 2d-th roots of unity and
//!   are tracked as integer exponents of e^{iπ/d} whenever the parameters
//!   are rational (see [`phase`]).

pub mod arith;
pub mod error;
pub mod gauss;
pub mod matrix;
pub mod mub;
pub mod phase;
pub mod quon;
pub mod selftest;
pub mod space;
pub mod su2ops;
pub mod wigner;

pub use error::{Error, Result};
pub use gauss::GaussSumSpec;
pub use matrix::OperatorMatrix;
pub use mub::{EigenBasis, GenericBasis, OverlapReport, PhaseMatrix};
pub use phase::Phase;
pub use space::{AngularSpace, VraParams, WIndex};
