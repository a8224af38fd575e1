//! Named invariant suites over every module.
//!
//! Each suite re-evaluates the load-bearing identities of one module at
//! desk scale and returns one [`Check`] per identity: a stable name, a
//! human-readable description of the swept grid, the worst residual found,
//! and the tolerance it must stay under. The CLI exposes the suites through
//! its `selftest` subcommand; randomized sweeps draw from a seeded
//! generator so runs are reproducible.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix;
use crate::space::{AngularSpace, VraParams};
use crate::{gauss, mub, quon, su2ops, wigner};

/// Which module's invariants to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quon,
    Su2,
    Mub,
    Gauss,
    Wigner,
    All,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 6] = [
        ("quon", Suite::Quon),
        ("su2", Suite::Su2),
        ("mub", Suite::Mub),
        ("gauss", Suite::Gauss),
        ("wigner", Suite::Wigner),
        ("all", Suite::All),
    ];

    pub fn name(&self) -> &'static str {
        Self::NAMES
            .iter()
            .find(|(_, s)| s == self)
            .map(|&(n, _)| n)
            .expect("every suite is named")
    }
}

/// One verified identity: worst residual over the swept grid vs tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub detail: String,
    pub residual: f64,
    pub tol: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual <= self.tol
    }
}

fn check(name: &str, detail: &str, tol: f64, outcome: Result<f64>) -> Check {
    match outcome {
        Ok(residual) => Check {
            name: name.into(),
            detail: detail.into(),
            residual,
            tol,
        },
        Err(e) => Check {
            name: name.into(),
            detail: format!("{detail}; failed early: {e}"),
            residual: f64::INFINITY,
            tol,
        },
    }
}

/// Runs the requested suite; deterministic for a fixed seed.
pub fn run(suite: Suite, seed: u64) -> Vec<Check> {
    match suite {
        Suite::Quon => quon_suite(),
        Suite::Su2 => su2_suite(),
        Suite::Mub => mub_suite(seed),
        Suite::Gauss => gauss_suite(seed),
        Suite::Wigner => wigner_suite(seed),
        Suite::All => {
            let mut all = quon_suite();
            all.extend(su2_suite());
            all.extend(mub_suite(seed));
            all.extend(gauss_suite(seed));
            all.extend(wigner_suite(seed));
            all
        }
    }
}

fn quon_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check(
        "quon.defining-relations",
        "oscillator algebra relations as matrix identities, k = 2..6, exponents {0, 1}",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for k in 2..=6 {
                for &(a_exp, b_exp) in &[(0.0, 1.0), (1.0, 0.0), (0.0, 0.0), (1.0, 1.0)] {
                    let p = quon::QuonParams::new(k, a_exp, b_exp)?;
                    worst = worst.max(quon::verify_quon_relations(&p).max_residual());
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "quon.nilpotency",
        "(a±)^k vanishes exactly, k = 2..6",
        0.0,
        (|| {
            let mut worst = 0.0f64;
            for k in 2..=6 {
                let p = quon::QuonParams::new(k, 0.0, 1.0)?;
                let ops = quon::build_quon_operators(&p);
                for op in [&ops.a1_plus, &ops.a1_minus, &ops.a2_plus, &ops.a2_minus] {
                    worst = worst.max(matrix::max_abs(&matrix::matrix_pow(
                        op.matrix(),
                        k as usize,
                    )));
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "quon.restriction-agrees",
        "pair-space h, v restricted to the spin subspace vs direct matrices, k = 2..6",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for k in 2..=6u32 {
                let emb = quon::EpsilonEmbedding::new(k)?;
                let space = emb.space();
                for a in 0..k {
                    for &r in &[0.0, 0.37] {
                        let (h, v) = quon::build_h_v_pair_space(k, r, a)?;
                        let (hb, _) = quon::restrict_to_epsilon(&h, &emb, 1e-10)?;
                        let (vb, _) = quon::restrict_to_epsilon(&v, &emb, 1e-10)?;
                        let params = VraParams::new(&space, r, a)?;
                        worst = worst.max(matrix::residual(&hb, &su2ops::h_matrix(&space)));
                        worst =
                            worst.max(matrix::residual(&vb, &su2ops::v_ra_matrix(&space, &params)));
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "quon.casimir-restriction",
        "pair-space total spin restricts to j(j+1)·1 exactly, k = 2..8",
        0.0,
        (|| {
            let mut worst = 0.0f64;
            for k in 2..=8u32 {
                let emb = quon::EpsilonEmbedding::new(k)?;
                let (block, _) = quon::restrict_to_epsilon(&quon::pair_casimir(k)?, &emb, 0.0)?;
                let j = (k as f64 - 1.0) / 2.0;
                let expect = matrix::identity(k as usize) * Complex64::new(j * (j + 1.0), 0.0);
                worst = worst.max(matrix::residual(&block, &expect));
            }
            Ok(worst)
        })(),
    ));

    checks
}

fn su2_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check(
        "su2.ladder-algebra",
        "[jz,j±] = ±j±, [j+,j-] = 2jz and the Casimir identity, d = 2..8",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=8usize {
                let s = AngularSpace::from_dim(d)?;
                for a in [0, d as u32 - 1] {
                    for &r in &[0.0, 0.37] {
                        let p = VraParams::new(&s, r, a)?;
                        let (jp, jm, jz) = su2ops::ladder_operators(&s, &p);
                        let comm_raise = matrix::commutator(&jz, &jp) - &jp;
                        let comm_lower = matrix::commutator(&jz, &jm) + &jm;
                        let comm_pm = matrix::commutator(&jp, &jm) - &jz * Complex64::new(2.0, 0.0);
                        let h = su2ops::h_matrix(&s);
                        let casimir = &h * &h + &jz * &jz - &jz;
                        let j = s.j();
                        let expect = matrix::identity(d) * Complex64::new(j * (j + 1.0), 0.0);
                        for m in [&comm_raise, &comm_lower, &comm_pm] {
                            worst = worst.max(matrix::max_abs(m));
                        }
                        worst = worst.max(matrix::residual(&casimir, &expect));
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "su2.v-cyclicity",
        "v^d = e^{i2πj(a+r)}·1, d = 2..10, a = 0..d−1, r in {0, 1, 0.37}",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=10usize {
                let s = AngularSpace::from_dim(d)?;
                for a in 0..d as u32 {
                    for &r in &[0.0, 1.0, 0.37] {
                        let p = VraParams::new(&s, r, a)?;
                        let v = su2ops::v_ra_matrix(&s, &p);
                        let powered = matrix::matrix_pow(&v, d);
                        let phase = Complex64::cis(TAU * s.j() * (a as f64 + r));
                        worst = worst.max(matrix::residual(&powered, &(matrix::identity(d) * phase)));
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "su2.sine-algebra",
        "[t_m, t_n] = 2i sin(π m∧n/d) t_{m+n}, d = 2..5, components ≤ 3",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=5usize {
                let s = AngularSpace::from_dim(d)?;
                let p = VraParams::new(&s, 0.0, 0)?;
                for m1 in 1..=3u32 {
                    for m2 in 1..=3u32 {
                        for n1 in 1..=3u32 {
                            for n2 in 1..=3u32 {
                                let m = crate::space::WIndex::new(m1, m2)?;
                                let n = crate::space::WIndex::new(n1, n2)?;
                                let sum = crate::space::WIndex::new(m1 + n1, m2 + n2)?;
                                let tm = su2ops::t_operator(&s, &p, &m);
                                let tn = su2ops::t_operator(&s, &p, &n);
                                let tsum = su2ops::t_operator(&s, &p, &sum);
                                let lhs = matrix::commutator(&tm, &tn);
                                let coeff = Complex64::new(0.0, 2.0)
                                    * (std::f64::consts::PI * m.wedge(&n) as f64 / d as f64).sin();
                                worst = worst.max(matrix::residual(&lhs, &(tsum * coeff)));
                            }
                        }
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "su2.pauli-group-order",
        "closure enumeration reaches exactly d³ elements, d = 2..5",
        0.0,
        (|| {
            let mut mismatches = 0.0;
            for d in 2..=5usize {
                let s = AngularSpace::from_dim(d)?;
                let g = su2ops::pauli_group(&s)?;
                if g.order() != d * d * d {
                    mismatches += 1.0;
                }
            }
            Ok(mismatches)
        })(),
    ));

    checks.push(check(
        "su2.commutation-criterion",
        "analytic commutation criterion for v_r0, v_s0 agrees with matrices, d = 2..6",
        0.0,
        (|| {
            let mut mismatches = 0.0;
            for d in 2..=6usize {
                let s = AngularSpace::from_dim(d)?;
                for r in [0.0, 0.5, 1.0, 2.0 / (d as f64 - 1.0).max(1.0)] {
                    for t in [0.0, 0.5, 1.0, 2.0] {
                        // The call itself cross-checks and errors on any
                        // disagreement between criterion and matrices.
                        if su2ops::vr0_vs0_commute(&s, r, t).is_err() {
                            mismatches += 1.0;
                        }
                    }
                }
            }
            Ok(mismatches)
        })(),
    ));

    checks
}

fn mub_suite(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    checks.push(check(
        "mub.complete-sets",
        "d+1 pairwise unbiased bases at d in {2,3,5,7}: overlap moduli vs 1/√d",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for d in [2u64, 3, 5, 7] {
                let set = mub::complete_mub_set(d)?;
                let target = 1.0 / (d as f64).sqrt();
                for i in 0..set.len() {
                    for l in i + 1..set.len() {
                        let report = mub::unbiasedness_check(&set[i], &set[l], 1e-10)?;
                        worst = worst
                            .max((report.max_modulus - target).abs())
                            .max((report.min_modulus - target).abs());
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "mub.eigen-relation",
        "v_ra b_α = q^{j(a+r)−α} b_α for d ≤ 9, a = 0..d−1, r in {0, 1, 0.37}",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=9usize {
                let s = AngularSpace::from_dim(d)?;
                for a in 0..d as u32 {
                    for &r in &[0.0, 1.0, 0.37] {
                        let basis = mub::eigenbasis(&s, r, a)?;
                        let p = VraParams::new(&s, r, a)?;
                        let v = su2ops::v_ra_matrix(&s, &p);
                        for alpha in 0..d {
                            let b = basis.vector(alpha);
                            let dev = (&v * b - b * basis.eigenvalue(alpha)).norm();
                            worst = worst.max(dev);
                        }
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "mub.spectrum-nondegenerate",
        "eigenvalue phases of v_ra pairwise separated by > 1e−8, d ≤ 9",
        0.0,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=9usize {
                let s = AngularSpace::from_dim(d)?;
                for a in 0..d as u32 {
                    for &r in &[0.0, 1.0, 0.37] {
                        let basis = mub::eigenbasis(&s, r, a)?;
                        for i in 0..d {
                            for l in i + 1..d {
                                let gap = (basis.eigenvalue(i) - basis.eigenvalue(l)).norm();
                                worst = worst.max((1e-8 - gap).max(0.0));
                            }
                        }
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "mub.trace-relation",
        "trace and α,β-sum rules for 30 seeded (d, r, a, s, b) tuples",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for _ in 0..30 {
                let d = rng.gen_range(2..=9usize);
                let s = AngularSpace::from_dim(d)?;
                let a = rng.gen_range(0..d as u32);
                let b = rng.gen_range(0..d as u32);
                let r = rng.gen_range(-2.0..2.0);
                let s2 = rng.gen_range(-2.0..2.0);
                worst = worst.max(mub::trace_relation_check(&s, r, a, s2, b)?.max_residual());
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "mub.hadamard-unitarity",
        "H†H = d·1 for d = 2..9, every a",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=9usize {
                for a in 0..d as u32 {
                    let h = mub::hadamard_matrix(d, a)?.matrix();
                    let expect = matrix::identity(d) * Complex64::new(d as f64, 0.0);
                    worst = worst.max(matrix::residual(&(h.adjoint() * &h), &expect));
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "mub.hadamard-columns",
        "scaled Hadamard columns reproduce the eigenbasis of v_0a, d = 2..9",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=9usize {
                let s = AngularSpace::from_dim(d)?;
                for a in 0..d as u32 {
                    let columns = mub::hadamard_matrix(d, a)?.column_basis("H");
                    let basis = mub::eigenbasis(&s, 0.0, a)?;
                    for alpha in 0..d {
                        let dev = (columns.vector(alpha) - basis.vector(alpha)).norm();
                        worst = worst.max(dev);
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "mub.census",
        "prime-power census: d=9 digit criterion and φ bound; d=15 bound; d=4 counterexample",
        0.0,
        (|| {
            let mut violations = 0.0;
            let nine = mub::unbiased_census(9, 0.0)?;
            if nine.digit_criterion_holds != Some(true) || !nine.meets_totient_bound {
                violations += 1.0;
            }
            let fifteen = mub::unbiased_census(15, 0.0)?;
            if !fifteen.meets_totient_bound {
                violations += 1.0;
            }
            // d = 4: the pair a=0, b=2 must not be unbiased.
            let s = AngularSpace::from_dim(4)?;
            let b0 = mub::eigenbasis(&s, 0.0, 0)?.to_generic();
            let b2 = mub::eigenbasis(&s, 0.0, 2)?.to_generic();
            if mub::unbiasedness_check(&b0, &b2, 1e-10)?.unbiased {
                violations += 1.0;
            }
            Ok(violations)
        })(),
    ));

    checks
}

fn gauss_suite(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    checks.push(check(
        "gauss.vanishing-families",
        "|S| = 0 on the families (u=2; v=2,6,10,14; w=8) and (u=4; v=2,6,10; w=6)",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for v in [2i64, 6, 10, 14] {
                worst = worst.max(gauss::gauss_sum(&gauss::GaussSumSpec::new(2, v, 8)?).norm());
            }
            for v in [2i64, 6, 10] {
                worst = worst.max(gauss::gauss_sum(&gauss::GaussSumSpec::new(4, v, 6)?).norm());
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "gauss.translation-negation",
        "translation and negation identities over 200 seeded specs",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for _ in 0..200 {
                let u = loop {
                    let u = rng.gen_range(-10i64..=10);
                    if u != 0 {
                        break u;
                    }
                };
                let w = loop {
                    let w = rng.gen_range(-12i64..=12);
                    if w != 0 {
                        break w;
                    }
                };
                let v = 2 * rng.gen_range(-15i64..=15) + (u * w).rem_euclid(2);
                let t = rng.gen_range(-20i64..=20);
                let spec = gauss::GaussSumSpec::new(u, v, w)?;
                worst = worst.max(gauss::translation_identity(&spec, t));
                worst = worst.max(gauss::negation_identity(&spec));
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "gauss.derived-relation",
        "odd-w consequence of the translation relation over 50 seeded triples",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for _ in 0..50 {
                let u = loop {
                    let u = rng.gen_range(-8i64..=8);
                    if u != 0 {
                        break u;
                    }
                };
                let n = rng.gen_range(-10i64..=10);
                let w = 2 * rng.gen_range(0i64..=5) + 1;
                worst = worst.max(gauss::derived_relation_check(u, n, w)?);
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "gauss.prime-magnitude",
        "|S(u,v,w)| = √w for w in {3,5,7}, all u ≢ 0 and one period of v",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for w in [3i64, 5, 7] {
                for u in 1..w {
                    let start = (u * w).rem_euclid(2);
                    for v in (start..start + 2 * w).step_by(2) {
                        let magnitude = gauss::prime_magnitude(u, v, w)?;
                        worst = worst.max((magnitude - (w as f64).sqrt()).abs());
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "gauss.hadamard-column-law",
        "|Σ_k e^{iπ[k(d−k)λ+2kμ]/d}| = √d for prime d in {3,5,7}, all λ, μ",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for d in [3u32, 5, 7] {
                for lam in 1..d as i64 {
                    for lam in [lam, -lam] {
                        for mu in 0..d as i64 {
                            let val = gauss::hadamard_column_sum(d, lam, mu).norm();
                            worst = worst.max((val - (d as f64).sqrt()).abs());
                        }
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "gauss.overlap-oracle",
        "S(u,v,w)/w equals direct eigenbasis inner products, d ≤ 6",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for two_j in 1..=5u32 {
                let s = AngularSpace::new(two_j);
                for a in 0..=two_j {
                    for b in 0..=two_j {
                        if a == b {
                            continue;
                        }
                        let left = mub::eigenbasis(&s, 0.0, a)?;
                        let right = mub::eigenbasis(&s, 0.0, b)?;
                        let report = mub::overlap_matrix(&left, &right)?;
                        for alpha in 0..=two_j {
                            for beta in 0..=two_j {
                                let direct = report.matrix[(alpha as usize, beta as usize)];
                                let via = gauss::overlap_via_gauss(two_j, a, b, alpha, beta)?;
                                worst = worst.max((direct - via).norm());
                            }
                        }
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "gauss.sign-rule",
        "a predicted minus sign forces a vanishing sum, u ≤ 4, w ≤ 8",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for u in 1i64..=4 {
                for w in 2i64..=8 {
                    let start = (u * w).rem_euclid(2);
                    for v in (start..start + 2 * w).step_by(2) {
                        let spec = gauss::GaussSumSpec::new(u, v, w)?;
                        if let Ok(case) = gauss::sign_case(&spec) {
                            if case.predicted_sign() == -1 {
                                worst = worst.max(gauss::gauss_sum(&spec).norm());
                            }
                        }
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks
}

fn wigner_suite(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    checks.push(check(
        "wigner.unit-tensor-orthogonality",
        "(2k+1) tr((u^k_p)† u^l_q) = δ_kl δ_pq, 2j ≤ 4",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for two_j in 1..=4 {
                let s = AngularSpace::new(two_j);
                for k1 in 0..=two_j {
                    for p1 in -(k1 as i32)..=k1 as i32 {
                        let u1 = wigner::unit_tensor(&s, k1, p1)?;
                        for k2 in 0..=two_j {
                            for p2 in -(k2 as i32)..=k2 as i32 {
                                let u2 = wigner::unit_tensor(&s, k2, p2)?;
                                let tr = (u1.matrix.adjoint() * &u2.matrix).trace();
                                let expect = if k1 == k2 && p1 == p2 {
                                    1.0 / (2.0 * k1 as f64 + 1.0)
                                } else {
                                    0.0
                                };
                                worst = worst.max((tr - Complex64::new(expect, 0.0)).norm());
                            }
                        }
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "wigner.b-reconstruction",
        "Σ b_kp u^(k)_p rebuilds v_ra, 2j ≤ 5, all a, r in {0, 1}",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for two_j in 1..=5 {
                let s = AngularSpace::new(two_j);
                for a in 0..=two_j {
                    for &r in &[0.0, 1.0] {
                        let b = wigner::b_coefficients(&s, r, a)?;
                        let rebuilt = b.reconstruct()?;
                        let p = VraParams::new(&s, r, a)?;
                        let direct = su2ops::v_ra_matrix(&s, &p);
                        worst = worst.max(matrix::residual(&rebuilt, &direct));
                        worst = worst.max(b.route_disagreement);
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "wigner.enveloping-equivalence",
        "polynomial ladder realization of u^(k)_p equals the 3-jm route, 2j ≤ 3",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for two_j in 1..=3 {
                let s = AngularSpace::new(two_j);
                for k in 0..=two_j {
                    for p in -(k as i32)..=k as i32 {
                        let poly = wigner::unit_tensor_enveloping(&s, k, p)?;
                        let direct = wigner::unit_tensor(&s, k, p)?;
                        worst = worst.max(matrix::residual(&poly, &direct.matrix));
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "wigner.closed-forms",
        "printed expansions of v_00 for 2j in {1, 2, 3}",
        1e-12,
        (|| {
            let mut worst = 0.0f64;
            for two_j in 1..=3 {
                let s = AngularSpace::new(two_j);
                let closed = wigner::v00_closed_forms(&s)?;
                let p = VraParams::new(&s, 0.0, 0)?;
                let direct = su2ops::v_ra_matrix(&s, &p);
                worst = worst.max(matrix::residual(&closed, &direct));
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "wigner.rotation-permutation",
        "new-scheme z-rotation by p·2π/d is q^{jp} times a cyclic shift, d ≤ 7",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for d in 2..=7usize {
                let s = AngularSpace::from_dim(d)?;
                for a in 0..d as u32 {
                    for p in 0..d {
                        let angles =
                            wigner::EulerAngles::z_rotation(p as f64 * TAU / d as f64);
                        let rotated = wigner::rotation_new_scheme(&s, 0.0, a, &angles)?;
                        let phase = s.q_pow(s.j() * p as f64);
                        let mut expect = matrix::zeros(d);
                        for alpha in 0..d {
                            let target = (alpha + d - p % d) % d;
                            expect[(target, alpha)] = phase;
                        }
                        worst = worst.max(matrix::residual(&rotated, &expect));
                    }
                }
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "wigner.rotation-conjugation",
        "new-scheme rotation equals basis conjugation of the standard one; 10 seeded rotations",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for _ in 0..10 {
                let d = rng.gen_range(2..=5usize);
                let s = AngularSpace::from_dim(d)?;
                let a = rng.gen_range(0..d as u32);
                let angles = wigner::EulerAngles::new(
                    rng.gen_range(0.0..TAU),
                    rng.gen_range(0.0..std::f64::consts::PI),
                    rng.gen_range(0.0..TAU),
                );
                let rotated = wigner::rotation_new_scheme(&s, 0.0, a, &angles)?;
                worst = worst.max(matrix::unitarity_residual(&rotated));
                let basis = mub::eigenbasis(&s, 0.0, a)?;
                let standard = wigner::wigner_rotation_standard(&s, &angles);
                let conjugated = wigner::conjugate_by_basis(&basis, &standard);
                worst = worst.max(matrix::residual(&rotated, &conjugated));
            }
            Ok(worst)
        })(),
    ));

    checks.push(check(
        "wigner.coupling-unitarity",
        "Σ_{α1,α2} |coupling|² = 1 for sample triples",
        1e-10,
        (|| {
            let mut worst = 0.0f64;
            for &(tj1, tj2, tj3) in &[(1, 1, 2), (1, 1, 0), (2, 2, 2), (2, 1, 3)] {
                let d1 = tj1 as usize + 1;
                let d2 = tj2 as usize + 1;
                let d3 = tj3 as usize + 1;
                for alpha3 in 0..d3 as u32 {
                    let mut sum = 0.0;
                    for alpha1 in 0..d1 as u32 {
                        for alpha2 in 0..d2 as u32 {
                            let c = wigner::coupling_new_scheme(
                                tj1, tj2, tj3, alpha1, alpha2, alpha3, 0.0, 0,
                            )?;
                            sum += c.norm_sqr();
                        }
                    }
                    worst = worst.max((sum - 1.0).abs());
                }
            }
            Ok(worst)
        })(),
    ));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        let checks = run(Suite::All, 7);
        assert!(checks.len() >= 20);
        for c in &checks {
            assert!(
                c.passed(),
                "{} failed: residual {} > tol {} ({})",
                c.name,
                c.residual,
                c.tol,
                c.detail
            );
        }
    }

    #[test]
    fn runs_are_deterministic_per_seed() {
        let a = run(Suite::Gauss, 42);
        let b = run(Suite::Gauss, 42);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.residual.to_bits(), y.residual.to_bits());
        }
    }

    #[test]
    fn suite_names_are_stable_and_unique() {
        for (name, suite) in Suite::NAMES {
            assert_eq!(suite.name(), name);
        }
        let checks = run(Suite::All, 1);
        let mut names: Vec<&str> = checks.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
    }
}
