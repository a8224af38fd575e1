//! Closed-form operators on ε(j): the Hermitian h, the cyclic unitary
//! v_ra, the clock operator z, the su(2) ladder triple obtained from the
//! polar pair (h, v_ra), the sine-algebra generators t_m, and the finite
//! Pauli group they generate.
//!
//! Actions over the spherical basis (descending m):
//!
//! * h|j,m⟩ = √((j+m)(j−m+1)) |j,m⟩
//! * v_ra|j,m⟩ = q^{(j−m)a}|j,m+1⟩ for m < j, and v_ra|j,j⟩ = e^{i2πjr}|j,−j⟩
//! * z|j,m⟩ = q^{j−m}|j,m⟩
//!
//! v_ra is unitary with (v_ra)^d = e^{i2πj(a+r)} I, and together with z it
//! satisfies the q-commutation v_ra z = q z v_ra.

use crate::error::{Error, Result};
use crate::matrix::{self, OperatorMatrix};
use crate::space::{AngularSpace, VraParams, WIndex};
use num_complex::Complex64;
use std::collections::HashMap;

/// Diagonal matrix of h; real, nonnegative, Hermitian.
pub fn h_matrix(s: &AngularSpace) -> OperatorMatrix {
    let d = s.dim();
    let mut m = matrix::zeros(d);
    for i in 0..d {
        let tm = s.two_m_at(i);
        let j_plus_m = ((s.two_j() + tm) / 2) as f64;
        let j_minus_m_plus_1 = ((s.two_j() - tm) / 2 + 1) as f64;
        m[(i, i)] = Complex64::new((j_plus_m * j_minus_m_plus_1).sqrt(), 0.0);
    }
    m
}

/// The cyclic unitary v_ra: a weighted cyclic shift m ↦ m+1 whose single
/// wrap-around entry carries the boundary phase e^{i2πjr}.
pub fn v_ra_matrix(s: &AngularSpace, p: &VraParams) -> OperatorMatrix {
    let d = s.dim();
    let mut m = matrix::zeros(d);
    for col in 0..d {
        if col == 0 {
            // m = j wraps to m = −j with phase e^{i2πjr} = e^{iφ_r}
            m[(d - 1, 0)] = Complex64::cis(p.phi_r(s));
        } else {
            // row col−1 is m+1 for the m at column col
            let j_minus_m = col as i64; // j − m equals the row index
            m[(col - 1, col)] = s.q_pow((j_minus_m * p.a as i64) as f64);
        }
    }
    m
}

/// The clock operator z = diag(q^{j−m}) = diag(q^i) in row order.
pub fn z_matrix(s: &AngularSpace) -> OperatorMatrix {
    let d = s.dim();
    let mut m = matrix::zeros(d);
    for i in 0..d {
        m[(i, i)] = s.q_pow(i as f64);
    }
    m
}

/// The su(2) triple from the polar pair: j₊ = h·v_ra, j₋ = v_ra†·h,
/// j_z = ½(h² − v_ra† h² v_ra). Returned as (j₊, j₋, j_z).
pub fn ladder_operators(
    s: &AngularSpace,
    p: &VraParams,
) -> (OperatorMatrix, OperatorMatrix, OperatorMatrix) {
    let h = h_matrix(s);
    let v = v_ra_matrix(s, p);
    let h2 = &h * &h;
    let jp = &h * &v;
    let jm = v.adjoint() * &h;
    let jz = (&h2 - v.adjoint() * &h2 * &v).scale(0.5);
    (jp, jm, jz)
}

/// Sine-algebra generator t_m = q^{−m1·m2/2} (v_ra)^{m1} z^{m2}; the
/// half-integer exponent is taken as e^{−iπ·m1·m2/d}.
pub fn t_operator(s: &AngularSpace, p: &VraParams, idx: &WIndex) -> OperatorMatrix {
    let d = s.dim() as f64;
    let phase = Complex64::cis(-std::f64::consts::PI * (idx.m1 as f64) * (idx.m2 as f64) / d);
    let v = v_ra_matrix(s, p);
    let z = z_matrix(s);
    matrix::matrix_pow(&v, idx.m1 as usize) * matrix::matrix_pow(&z, idx.m2 as usize) * phase
}

/// One element of the finite Pauli group: a generalized permutation matrix
/// whose column c has its single nonzero entry e^{iπ·exp[c]/d} in row
/// row[c]. Kept in exact integer form so closure enumeration can hash.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliElement {
    d: usize,
    row: Vec<u32>,
    exp: Vec<u32>, // exponents of e^{iπ/d}, reduced mod 2d
}

impl PauliElement {
    fn identity(d: usize) -> Self {
        Self {
            d,
            row: (0..d as u32).collect(),
            exp: vec![0; d],
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let d = self.d;
        let mut row = vec![0u32; d];
        let mut exp = vec![0u32; d];
        for c in 0..d {
            let mid = rhs.row[c] as usize;
            row[c] = self.row[mid];
            exp[c] = (self.exp[mid] + rhs.exp[c]) % (2 * d as u32);
        }
        Self { d, row, exp }
    }

    pub fn matrix(&self) -> OperatorMatrix {
        let mut m = matrix::zeros(self.d);
        for c in 0..self.d {
            m[(self.row[c] as usize, c)] =
                Complex64::cis(std::f64::consts::PI * self.exp[c] as f64 / self.d as f64);
        }
        m
    }
}

/// The Pauli group on ε(j), enumerated by closure from its two standard
/// generators; the order must come out as d³.
#[derive(Debug, Clone)]
pub struct PauliGroup {
    d: usize,
    elements: Vec<PauliElement>,
    index: HashMap<PauliElement, usize>,
}

impl PauliGroup {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &PauliElement {
        &self.elements[i]
    }

    pub fn matrices(&self) -> Vec<OperatorMatrix> {
        self.elements.iter().map(PauliElement::matrix).collect()
    }

    /// Index of the product of elements i·j.
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].mul(&self.elements[j])]
    }

    /// Full multiplication table, table[i][j] = index of element i·j.
    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|i| (0..self.order()).map(|j| self.product(i, j)).collect())
            .collect()
    }
}

/// Enumerate the Pauli group generated by v_00 and z for d odd, or by
/// v_10 and e^{iπ/d}·z for d even. Fails with ClosureOverflow if more than
/// 2d³ distinct elements appear, which would signal a phase-convention bug.
pub fn pauli_group(s: &AngularSpace) -> Result<PauliGroup> {
    let d = s.dim();
    if d < 2 {
        return Err(Error::RangeError {
            what: "dimension",
            got: d as i64,
            range: "d >= 2".into(),
        });
    }
    let two_d = 2 * d as u32;

    // shift generator: column 0 wraps to row d−1, column c>0 maps to row c−1
    let mut shift_row: Vec<u32> = Vec::with_capacity(d);
    shift_row.push(d as u32 - 1);
    shift_row.extend(1..d as u32);
    for (c, r) in shift_row.iter_mut().enumerate().skip(1) {
        *r = c as u32 - 1;
    }
    let mut shift_exp = vec![0u32; d];
    if d % 2 == 0 {
        // v_10: boundary phase e^{i2πjr}|r=1 = e^{iπ(d−1)} = −1 for d even
        shift_exp[0] = d as u32;
    }
    let shift = PauliElement {
        d,
        row: shift_row,
        exp: shift_exp,
    };

    // clock generator: z = diag(q^c) for d odd, e^{iπ/d}·z for d even
    let clock = PauliElement {
        d,
        row: (0..d as u32).collect(),
        exp: (0..d as u32)
            .map(|c| (2 * c + if d % 2 == 0 { 1 } else { 0 }) % two_d)
            .collect(),
    };

    let limit = 2 * d * d * d;
    let mut index = HashMap::new();
    let mut elements = vec![PauliElement::identity(d)];
    index.insert(elements[0].clone(), 0);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in [&shift, &clock] {
            let prod = elements[i].mul(g);
            if !index.contains_key(&prod) {
                if elements.len() >= limit {
                    return Err(Error::ClosureOverflow { limit });
                }
                index.insert(prod.clone(), elements.len());
                frontier.push(elements.len());
                elements.push(prod);
            }
        }
    }
    Ok(PauliGroup { d, elements, index })
}

/// Do v_r0 and v_s0 commute? True iff js − jr is an integer; the analytic
/// criterion is checked against the explicit matrix commutator and a
/// disagreement is an error.
pub fn vr0_vs0_commute(s: &AngularSpace, r: f64, t: f64) -> Result<bool> {
    let x = s.j() * (t - r);
    let analytic = (x - x.round()).abs() < 1e-9;

    let p_r = VraParams::new(s, r, 0)?;
    let p_t = VraParams::new(s, t, 0)?;
    let vr = v_ra_matrix(s, &p_r);
    let vt = v_ra_matrix(s, &p_t);
    let comm_norm = matrix::max_abs(&matrix::commutator(&vr, &vt));
    let by_matrix = comm_norm < 1e-10;

    if analytic != by_matrix {
        return Err(Error::CriterionMismatch(format!(
            "j(s-r) = {x} integer-test says {analytic}, commutator norm {comm_norm:.3e} says {by_matrix}"
        )));
    }
    Ok(analytic)
}
