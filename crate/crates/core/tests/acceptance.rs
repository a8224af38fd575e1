//! Acceptance gate: one test per shipped guarantee, each ending with a
//! single `[PASS]` line. Tolerances are pinned here and are not meant to
//! be loosened; a red test means the library broke a promised identity.

use std::f64::consts::TAU;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mubkit_core::space::{AngularSpace, VraParams, WIndex};
use mubkit_core::{gauss, matrix, mub, quon, su2ops, wigner, Error};

#[test]
fn criterion_01_complete_mub_sets_for_prime_dimensions() {
    let start = Instant::now();
    for d in [2u64, 3, 5, 7, 11, 13] {
        let set = mub::complete_mub_set(d).expect("prime dimension");
        assert_eq!(set.len(), d as usize + 1, "d+1 bases at d={d}");
        let target = 1.0 / (d as f64).sqrt();
        let mut pairs = 0;
        for i in 0..set.len() {
            for l in i + 1..set.len() {
                let report = mub::unbiasedness_check(&set[i], &set[l], 1e-10).unwrap();
                assert!(
                    (report.max_modulus - target).abs() < 1e-10
                        && (report.min_modulus - target).abs() < 1e-10,
                    "pair ({i},{l}) at d={d}: moduli in [{}, {}], want {target}",
                    report.min_modulus,
                    report.max_modulus
                );
                pairs += 1;
            }
        }
        assert_eq!(pairs, ((d + 1) * d / 2) as usize);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget 5 s");
    println!(
        "[PASS] criterion 1: complete MUB sets at d in {{2,3,5,7,11,13}}, all pair overlaps within 1e-10 of 1/sqrt(d), in {elapsed:?}"
    );
}

#[test]
fn criterion_02_eigenbasis_spectra() {
    let mut worst = 0.0f64;
    let mut min_gap = f64::INFINITY;
    for d in 2..=12usize {
        let s = AngularSpace::from_dim(d).unwrap();
        for a in 0..d as u32 {
            for &r in &[0.0, 1.0, 0.37] {
                let p = VraParams::new(&s, r, a).unwrap();
                let v = su2ops::v_ra_matrix(&s, &p);
                let basis = mub::eigenbasis(&s, r, a).unwrap();
                for alpha in 0..d {
                    let b = basis.vector(alpha);
                    worst = worst.max((&v * b - b * basis.eigenvalue(alpha)).norm());
                    for beta in alpha + 1..d {
                        min_gap =
                            min_gap.min((basis.eigenvalue(alpha) - basis.eigenvalue(beta)).norm());
                    }
                }
            }
        }
    }
    assert!(worst < 1e-12, "eigen-relation residual {worst}");
    assert!(min_gap > 1e-8, "spectrum near-degenerate: gap {min_gap}");
    println!(
        "[PASS] criterion 2: eigen-relation residual {worst:.2e} < 1e-12 and eigenvalue gap {min_gap:.3} > 1e-8 for d <= 12, all a, r in {{0, 1, 0.37}}"
    );
}

#[test]
fn criterion_03_cyclicity() {
    let mut worst = 0.0f64;
    for d in 2..=12usize {
        let s = AngularSpace::from_dim(d).unwrap();
        for a in 0..d as u32 {
            for &r in &[0.0, 1.0, 0.37] {
                let p = VraParams::new(&s, r, a).unwrap();
                let v = su2ops::v_ra_matrix(&s, &p);
                let phase = Complex64::cis(TAU * s.j() * (a as f64 + r));
                let dev = matrix::residual(
                    &matrix::matrix_pow(&v, d),
                    &(matrix::identity(d) * phase),
                );
                worst = worst.max(dev);
            }
        }
    }
    assert!(worst < 1e-12, "cyclicity residual {worst}");
    println!(
        "[PASS] criterion 3: v^d = e^(i*2*pi*j*(a+r))*1 within {worst:.2e} < 1e-12 for d <= 12, all a, r in {{0, 1, 0.37}}"
    );
}

#[test]
fn criterion_04_su2_realization() {
    let mut worst = 0.0f64;
    let mut cross = 0.0f64;
    for d in 2..=12usize {
        let s = AngularSpace::from_dim(d).unwrap();
        let j = s.j();
        let expect_casimir = matrix::identity(d) * Complex64::new(j * (j + 1.0), 0.0);
        let mut reference: Option<mubkit_core::OperatorMatrix> = None;
        for a in 0..d as u32 {
            for &r in &[0.0, 1.0, 0.37] {
                let p = VraParams::new(&s, r, a).unwrap();
                let (jp, jm, jz) = su2ops::ladder_operators(&s, &p);
                worst = worst.max(matrix::max_abs(&(matrix::commutator(&jz, &jp) - &jp)));
                worst = worst.max(matrix::max_abs(&(matrix::commutator(&jz, &jm) + &jm)));
                let pm = matrix::commutator(&jp, &jm);
                worst = worst.max(matrix::residual(&pm, &(&jz * Complex64::new(2.0, 0.0))));
                let h = su2ops::h_matrix(&s);
                let casimir = &h * &h + &jz * &jz - &jz;
                worst = worst.max(matrix::residual(&casimir, &expect_casimir));
                match &reference {
                    None => reference = Some(pm),
                    Some(m0) => cross = cross.max(matrix::residual(&pm, m0)),
                }
            }
        }
    }
    assert!(worst < 1e-12, "su2 relation residual {worst}");
    assert!(cross < 1e-12, "commutators differ across (a,r): {cross}");
    println!(
        "[PASS] criterion 4: su2 commutators and Casimir within {worst:.2e} < 1e-12; commutator matrices agree across (a,r) within {cross:.2e}"
    );
}

#[test]
fn criterion_05_oscillator_cross_validation() {
    let mut relations = 0.0f64;
    let mut agreement = 0.0f64;
    for k in 2..=8u32 {
        for &(a_exp, b_exp) in &[(0.0, 1.0), (1.0, 0.0)] {
            let p = quon::QuonParams::new(k, a_exp, b_exp).unwrap();
            relations = relations.max(quon::verify_quon_relations(&p).max_residual());
        }
        let emb = quon::EpsilonEmbedding::new(k).unwrap();
        let space = emb.space();
        for a in 0..k {
            for &r in &[0.0, 1.0, 0.37] {
                let (h, v) = quon::build_h_v_pair_space(k, r, a).unwrap();
                let (hb, _) = quon::restrict_to_epsilon(&h, &emb, 1e-10).unwrap();
                let (vb, _) = quon::restrict_to_epsilon(&v, &emb, 1e-10).unwrap();
                let p = VraParams::new(&space, r, a).unwrap();
                agreement = agreement.max(matrix::residual(&hb, &su2ops::h_matrix(&space)));
                agreement =
                    agreement.max(matrix::residual(&vb, &su2ops::v_ra_matrix(&space, &p)));
            }
        }
    }
    assert!(relations < 1e-12, "oscillator relation residual {relations}");
    assert!(agreement < 1e-12, "restriction disagrees: {agreement}");
    println!(
        "[PASS] criterion 5: oscillator relations within {relations:.2e} and pair-space restriction equals direct matrices within {agreement:.2e} for k = 2..8"
    );
}

#[test]
fn criterion_06_sine_algebra() {
    let mut worst = 0.0f64;
    for d in 2..=5usize {
        let s = AngularSpace::from_dim(d).unwrap();
        for a in 0..d as u32 {
            let p = VraParams::new(&s, 0.0, a).unwrap();
            for m1 in 1..=3u32 {
                for m2 in 1..=3u32 {
                    for n1 in 1..=3u32 {
                        for n2 in 1..=3u32 {
                            let m = WIndex::new(m1, m2).unwrap();
                            let n = WIndex::new(n1, n2).unwrap();
                            let sum = WIndex::new(m1 + n1, m2 + n2).unwrap();
                            let lhs = matrix::commutator(
                                &su2ops::t_operator(&s, &p, &m),
                                &su2ops::t_operator(&s, &p, &n),
                            );
                            let coeff = Complex64::new(0.0, 2.0)
                                * (std::f64::consts::PI * m.wedge(&n) as f64 / d as f64).sin();
                            let rhs = su2ops::t_operator(&s, &p, &sum) * coeff;
                            worst = worst.max(matrix::residual(&lhs, &rhs));
                        }
                    }
                }
            }
        }
    }
    assert!(worst < 1e-10, "sine-algebra residual {worst}");
    println!(
        "[PASS] criterion 6: [t_m, t_n] = 2i sin(pi m^n/d) t_(m+n) within {worst:.2e} < 1e-10 for d = 2..5, components <= 3"
    );
}

#[test]
fn criterion_07_pauli_group_order() {
    for d in 2..=5usize {
        let s = AngularSpace::from_dim(d).unwrap();
        let g = su2ops::pauli_group(&s).unwrap();
        assert_eq!(g.order(), d * d * d, "closure order at d={d}");
    }
    println!("[PASS] criterion 7: generalized Pauli group closes with exactly d^3 elements for d = 2..5");
}

#[test]
fn criterion_08_gauss_sum_identities() {
    let start = Instant::now();

    let mut vanish = 0.0f64;
    for v in [2i64, 6, 10, 14] {
        vanish = vanish.max(gauss::gauss_sum(&gauss::GaussSumSpec::new(2, v, 8).unwrap()).norm());
    }
    for v in [2i64, 6, 10] {
        vanish = vanish.max(gauss::gauss_sum(&gauss::GaussSumSpec::new(4, v, 6).unwrap()).norm());
    }
    assert!(vanish < 1e-12, "vanishing families: |S| up to {vanish}");

    let mut rng = ChaCha8Rng::seed_from_u64(20260815);
    let mut shift = 0.0f64;
    let mut negate = 0.0f64;
    for _ in 0..500 {
        let u = loop {
            let u = rng.gen_range(-12i64..=12);
            if u != 0 {
                break u;
            }
        };
        let w = loop {
            let w = rng.gen_range(-15i64..=15);
            if w != 0 {
                break w;
            }
        };
        let v = 2 * rng.gen_range(-20i64..=20) + (u * w).rem_euclid(2);
        let t = rng.gen_range(-25i64..=25);
        let spec = gauss::GaussSumSpec::new(u, v, w).unwrap();
        shift = shift.max(gauss::translation_identity(&spec, t));
        negate = negate.max(gauss::negation_identity(&spec));
    }
    assert!(shift < 1e-12, "translation residual {shift}");
    assert!(negate < 1e-12, "negation residual {negate}");

    let mut prime = 0.0f64;
    for w in [3i64, 5, 7, 11, 13] {
        for u in 1..w {
            let parity = (u * w).rem_euclid(2);
            for v in (parity..parity + 2 * w).step_by(2) {
                let magnitude = gauss::prime_magnitude(u, v, w).unwrap();
                prime = prime.max((magnitude - (w as f64).sqrt()).abs());
            }
        }
    }
    assert!(prime < 1e-10, "prime-magnitude deviation {prime}");

    let mut columns = 0.0f64;
    for d in [3u32, 5, 7, 11] {
        for lam in 1..d as i64 {
            for lam in [lam, -lam] {
                for mu in 0..d as i64 {
                    let value = gauss::hadamard_column_sum(d, lam, mu).norm();
                    columns = columns.max((value - (d as f64).sqrt()).abs());
                }
            }
        }
    }
    assert!(columns < 1e-10, "column-sum deviation {columns}");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, budget 10 s");
    println!(
        "[PASS] criterion 8: vanishing families {vanish:.2e}, translation {shift:.2e} and negation {negate:.2e} over 500 seeded specs, prime magnitude {prime:.2e}, column sums {columns:.2e}, in {elapsed:?}"
    );
}

#[test]
fn criterion_09_overlaps_in_closed_form() {
    let mut worst = 0.0f64;
    for two_j in 1..=6u32 {
        let s = AngularSpace::new(two_j);
        for a in 0..=two_j {
            for b in 0..=two_j {
                if a == b {
                    continue;
                }
                for &r in &[0.0, 1.0] {
                    let left = mub::eigenbasis(&s, r, a).unwrap();
                    let right = mub::eigenbasis(&s, r, b).unwrap();
                    let report = mub::overlap_matrix(&left, &right).unwrap();
                    for alpha in 0..=two_j as usize {
                        for beta in 0..=two_j as usize {
                            let via = gauss::overlap_via_gauss(
                                two_j,
                                a,
                                b,
                                alpha as u32,
                                beta as u32,
                            )
                            .unwrap();
                            worst = worst.max((report.matrix[(alpha, beta)] - via).norm());
                        }
                    }
                }
            }
        }
    }
    assert!(worst < 1e-12, "closed-form overlap residual {worst}");
    println!(
        "[PASS] criterion 9: quadratic-sum closed form reproduces every cross-basis inner product within {worst:.2e} < 1e-12 for d <= 7"
    );
}

#[test]
fn criterion_10_enveloping_algebra_realization() {
    let mut rebuild = 0.0f64;
    for two_j in 1..=6u32 {
        let s = AngularSpace::new(two_j);
        for a in 0..=two_j {
            for &r in &[0.0, 1.0] {
                let b = wigner::b_coefficients(&s, r, a).unwrap();
                let p = VraParams::new(&s, r, a).unwrap();
                let direct = su2ops::v_ra_matrix(&s, &p);
                rebuild = rebuild.max(matrix::residual(&b.reconstruct().unwrap(), &direct));
            }
        }
    }
    assert!(rebuild < 1e-12, "reconstruction residual {rebuild}");

    let mut closed = 0.0f64;
    for two_j in 1..=3u32 {
        let s = AngularSpace::new(two_j);
        let p = VraParams::new(&s, 0.0, 0).unwrap();
        closed = closed.max(matrix::residual(
            &wigner::v00_closed_forms(&s).unwrap(),
            &su2ops::v_ra_matrix(&s, &p),
        ));
    }
    assert!(closed < 1e-12, "closed-form residual {closed}");

    let mut poly = 0.0f64;
    for two_j in 1..=4u32 {
        let s = AngularSpace::new(two_j);
        for k in 0..=two_j {
            for p in -(k as i32)..=k as i32 {
                poly = poly.max(matrix::residual(
                    &wigner::unit_tensor_enveloping(&s, k, p).unwrap(),
                    &wigner::unit_tensor(&s, k, p).unwrap().matrix,
                ));
            }
        }
    }
    assert!(poly < 1e-10, "ladder-polynomial residual {poly}");
    println!(
        "[PASS] criterion 10: unit-tensor expansion rebuilds v within {rebuild:.2e} < 1e-12 (2j <= 6); closed forms within {closed:.2e}; ladder polynomials within {poly:.2e} < 1e-10 (2j <= 4)"
    );
}

#[test]
fn criterion_11_rotation_permutation_law() {
    let mut worst = 0.0f64;
    for d in 2..=9usize {
        let s = AngularSpace::from_dim(d).unwrap();
        for a in 0..d as u32 {
            for p in 0..d {
                let angles = wigner::EulerAngles::z_rotation(p as f64 * TAU / d as f64);
                let rotated = wigner::rotation_new_scheme(&s, 0.0, a, &angles).unwrap();
                let phase = s.q_pow(s.j() * p as f64);
                let mut expect = matrix::zeros(d);
                for alpha in 0..d {
                    expect[((alpha + d - p) % d, alpha)] = phase;
                }
                worst = worst.max(matrix::residual(&rotated, &expect));
            }
        }
    }
    assert!(worst < 1e-10, "rotation-law residual {worst}");
    println!(
        "[PASS] criterion 11: z-rotation by p*2pi/d acts as q^(jp) times a cyclic shift within {worst:.2e} < 1e-10 for d <= 9, all a, p"
    );
}

#[test]
fn criterion_12_prime_power_census() {
    let nine = mub::unbiased_census(9, 0.0).unwrap();
    assert!(nine.meets_totient_bound, "d=9 totient bound");
    assert_eq!(nine.digit_criterion_holds, Some(true), "d=9 digit rule");
    for (a, &count) in nine.counts.iter().enumerate() {
        assert!(count >= 6, "basis a={a} has {count} partners, want >= 6");
    }
    // Independent replay of the iff rule: a pair is unbiased exactly when
    // the labels differ in their final base-3 digit.
    let s = AngularSpace::from_dim(9).unwrap();
    for a in 0..9u32 {
        for b in a + 1..9 {
            let left = mub::eigenbasis(&s, 0.0, a).unwrap().to_generic();
            let right = mub::eigenbasis(&s, 0.0, b).unwrap().to_generic();
            let unbiased = mub::unbiasedness_check(&left, &right, 1e-10).unwrap().unbiased;
            assert_eq!(
                unbiased,
                (a as i64 - b as i64).rem_euclid(3) != 0,
                "digit criterion at (a,b)=({a},{b})"
            );
        }
    }

    let fifteen = mub::unbiased_census(15, 0.0).unwrap();
    assert!(fifteen.meets_totient_bound, "d=15 totient bound");
    for (a, &count) in fifteen.counts.iter().enumerate() {
        assert!(count >= 8, "basis a={a} has {count} partners, want >= 8");
    }
    println!(
        "[PASS] criterion 12: d=9 census matches the base-3 digit rule with >= 6 partners each; d=15 counts {:?} all >= 8",
        fifteen.counts
    );
}

#[test]
fn criterion_13_composite_dimension_negative_control() {
    assert!(matches!(mub::complete_mub_set(4), Err(Error::NotPrime(4))));
    assert!(matches!(mub::complete_mub_set(6), Err(Error::NotPrime(6))));

    let s = AngularSpace::from_dim(4).unwrap();
    let b0 = mub::eigenbasis(&s, 0.0, 0).unwrap().to_generic();
    let b2 = mub::eigenbasis(&s, 0.0, 2).unwrap().to_generic();
    let report = mub::unbiasedness_check(&b0, &b2, 1e-10).unwrap();
    assert!(!report.unbiased, "d=4 pair (0,2) must fail unbiasedness");

    let s6 = AngularSpace::from_dim(6).unwrap();
    let c0 = mub::eigenbasis(&s6, 0.0, 0).unwrap().to_generic();
    let c3 = mub::eigenbasis(&s6, 0.0, 3).unwrap().to_generic();
    let report6 = mub::unbiasedness_check(&c0, &c3, 1e-10).unwrap();
    assert!(!report6.unbiased, "d=6 pair (0,3) must fail unbiasedness");

    println!(
        "[PASS] criterion 13: composite d refuse complete-set generation (NotPrime) and exhibit biased eigenbasis pairs (d=4 pair (0,2), d=6 pair (0,3))"
    );
}
