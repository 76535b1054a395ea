//! The acceptance suite: one check per shipped guarantee, runnable through
//! `coxnl selftest` and mirrored by the `acceptance` integration test.
//!
//! Every check works on the bundled fixture files (compiled in, so the
//! binary is self-contained) and returns a [`CheckResult`] with a one-line
//! verdict. Checks are exact; the time budgets are part of the contract
//! and generous against measured runtimes.

use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha12Rng;

use crate::chow::{intersection_number, verify_degree_bound};
use crate::cox::{is_effective, monomial_basis, poly_from_str_format, GradedPolynomial, Monomial};
use crate::fan::{DivisorClass, Fan, Variety};
use crate::gen::{dense_polynomial, dense_sequence, nonzero_coeff, rng_from_seed};
use crate::gorenstein::{
    apolar_piece, euler_coefficients, pairing_matrix, socle_functional, verify_cox_gorenstein,
};
use crate::ideal::{jacobian_ideal, nondegenerate_check, partials_ideal, GradedIdeal};
use crate::linalg::{smith_normal_form, QMat, SparseCols, ZMat};
use crate::nl::{
    hodge_class_candidates, nl_tangent_codim, t0_kernel_with, t0_transporter_with,
    tangent_space_from_class, FlagDatum,
};
use crate::{rat, Int, Rat};

pub const FAN_P3: &str = include_str!("../../../fixtures/p3.fan");
pub const FAN_P2: &str = include_str!("../../../fixtures/p2.fan");
pub const FAN_P1XP2: &str = include_str!("../../../fixtures/p1xp2.fan");
pub const FAN_P1XP1: &str = include_str!("../../../fixtures/p1xp1.fan");
pub const FAN_P112: &str = include_str!("../../../fixtures/p112.fan");
pub const POLY_FERMAT_QUARTIC: &str = include_str!("../../../fixtures/fermat_quartic.poly");
pub const POLY_FERMAT_QUINTIC: &str = include_str!("../../../fixtures/fermat_quintic.poly");
pub const POLY_X0: &str = include_str!("../../../fixtures/x0.poly");
pub const POLY_X1: &str = include_str!("../../../fixtures/x1.poly");
pub const POLY_DEGENERATE_QUARTIC: &str =
    include_str!("../../../fixtures/degenerate_quartic.poly");
pub const POLY_LINE_A1: &str = include_str!("../../../fixtures/line_a1.poly");
pub const POLY_LINE_A2: &str = include_str!("../../../fixtures/line_a2.poly");
pub const POLY_LINE_K1_D4: &str = include_str!("../../../fixtures/line_k1_d4.poly");
pub const POLY_LINE_K2_D4: &str = include_str!("../../../fixtures/line_k2_d4.poly");
pub const POLY_LINE_K1_D5: &str = include_str!("../../../fixtures/line_k1_d5.poly");
pub const POLY_LINE_K2_D5: &str = include_str!("../../../fixtures/line_k2_d5.poly");

pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "{}: {} ({:.1}s) {}",
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

fn finish(name: &'static str, start: Instant, budget: f64, verdict: Result<String, String>) -> CheckResult {
    let seconds = start.elapsed().as_secs_f64();
    match verdict {
        Ok(detail) if seconds <= budget => CheckResult { name, pass: true, detail, seconds },
        Ok(detail) => CheckResult {
            name,
            pass: false,
            detail: format!("{detail}; exceeded {budget:.0}s budget"),
            seconds,
        },
        Err(detail) => CheckResult { name, pass: false, detail, seconds },
    }
}

fn variety(fan_text: &str) -> Variety {
    let fan = Fan::from_str_format(fan_text).expect("bundled fan parses");
    Variety::new(fan).expect("bundled fan is simplicial and complete")
}

fn poly(v: &Variety, text: &str) -> GradedPolynomial {
    poly_from_str_format(v, text).expect("bundled polynomial parses")
}

fn h(v: &Variety, a: i64) -> DivisorClass {
    v.class_from_coords(&[Int::from(a)], &[]).expect("rank-one class")
}

fn class2(v: &Variety, a: i64, b: i64) -> DivisorClass {
    v.class_from_coords(&[Int::from(a), Int::from(b)], &[])
        .expect("rank-two class")
}

/// Coefficients of ((1 - t^d) / (1 - t))^n, the Hilbert series of an
/// Artinian complete intersection of n forms of degree d in n variables.
fn ci_hilbert(d: usize, n: usize) -> Vec<usize> {
    let block = vec![1usize; d];
    let mut acc = vec![1usize];
    for _ in 0..n {
        let mut next = vec![0usize; acc.len() + block.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in block.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

/// Fermat duality on the quartic: socle in degree 12, Hilbert oracle at
/// every degree, and a nondegenerate pairing for every splitting.
pub fn check_gorenstein_duality() -> CheckResult {
    let start = Instant::now();
    let v = variety(FAN_P3);
    let f = poly(&v, POLY_FERMAT_QUARTIC);
    let j0 = jacobian_ideal(&f, &v);
    let socle = h(&v, 12);

    let verdict = (|| {
        let oracle = ci_hilbert(4, 4);
        for a in 0..=14i64 {
            let expected = oracle.get(a as usize).copied().unwrap_or(0);
            let got = j0.quotient_dim(&v, &h(&v, a));
            if got != expected {
                return Err(format!("quotient dim {got} at degree {a}, oracle {expected}"));
            }
        }
        let lambda = socle_functional(&v, &j0, &socle)
            .map_err(|e| format!("socle functional: {e}"))?;
        for a in 0..=12i64 {
            let rep = pairing_matrix(&v, &j0, &lambda, &h(&v, a));
            if !rep.nondegenerate {
                return Err(format!("pairing degenerate at degree {a}"));
            }
        }
        Ok("socle=12 dims=oracle pairings 0..=12 nondegenerate".to_string())
    })();
    finish("gorenstein duality on the Fermat quartic", start, 30.0, verdict)
}

/// Twenty seeded regular sequences on P^2 must verify as Cox-Gorenstein:
/// degrees (2,2,2) with socle 3 and (1,2,2) with socle 2.
pub fn check_macaulay_sequences() -> CheckResult {
    let start = Instant::now();
    let v = variety(FAN_P2);
    let verdict = (|| {
        for seed in 0..20u64 {
            let degrees = if seed < 10 {
                [h(&v, 2), h(&v, 2), h(&v, 2)]
            } else {
                [h(&v, 1), h(&v, 2), h(&v, 2)]
            };
            let n_degree = if seed < 10 { h(&v, 3) } else { h(&v, 2) };
            let mut rng = rng_from_seed(seed);
            let ideal = GradedIdeal::new(dense_sequence(&v, &degrees, &mut rng));
            let rep = verify_cox_gorenstein(&v, &ideal, &n_degree, None);
            if !rep.pass {
                return Err(format!(
                    "seed {seed}: verdict FAIL (socle_dim={}, first failure {:?})",
                    rep.socle_dim, rep.first_failure
                ));
            }
        }
        Ok("20 seeded sequences PASS, socle degrees 3 and 2".to_string())
    })();
    finish("toric Macaulay on random regular sequences", start, 120.0, verdict)
}

/// Surfaces of degree 4, 5, 6 through the coordinate line x0 = x1 = 0 with
/// seeded generic cofactors: tangent codimension d - 3.
pub fn check_tangent_codimension() -> CheckResult {
    let start = Instant::now();
    let v = variety(FAN_P3);
    let x0 = poly(&v, POLY_X0);
    let x1 = poly(&v, POLY_X1);
    let verdict = (|| {
        for (d, seed) in [(4i64, 101u64), (5, 102), (6, 103)] {
            let mut rng = rng_from_seed(seed);
            let deg = h(&v, d - 1);
            let k1 = dense_polynomial(&v, &deg, &mut rng);
            let k2 = dense_polynomial(&v, &deg, &mut rng);
            let datum = FlagDatum::new(&v, vec![x0.clone(), x1.clone()], vec![k1, k2])
                .map_err(|e| format!("d={d}: {e}"))?;
            let rep = nl_tangent_codim(&v, &datum, None, None).map_err(|e| format!("d={d}: {e}"))?;
            if rep.codim != (d - 3) as usize {
                return Err(format!("d={d}: codim {} instead of {}", rep.codim, d - 3));
            }
            if !rep.j0_inside_flag || !rep.f_matches_flag {
                return Err(format!(
                    "d={d}: j0_inside_flag={} f_matches_flag={}",
                    rep.j0_inside_flag, rep.f_matches_flag
                ));
            }
        }
        Ok("codim = 1, 2, 3 for d = 4, 5, 6".to_string())
    })();
    finish("tangent codimension of the line locus", start, 120.0, verdict)
}

fn line_datum(v: &Variety, k1_text: &str, k2_text: &str) -> FlagDatum {
    let a1 = poly(v, POLY_LINE_A1);
    let a2 = poly(v, POLY_LINE_A2);
    let k1 = poly(v, k1_text);
    let k2 = poly(v, k2_text);
    FlagDatum::new(v, vec![a1, a2], vec![k1, k2]).expect("bundled line datum is consistent")
}

/// Seeded class representative from the candidate space, kept away from the
/// partial-derivative ideal.
fn draw_class(
    v: &Variety,
    basis: &[Monomial],
    space: &crate::ideal::SubspaceOfDegree,
    n_class: &DivisorClass,
    seed: u64,
) -> (GradedPolynomial, Vec<Rat>) {
    let mut rng = rng_from_seed(seed);
    let mut coeffs = vec![Rat::zero(); basis.len()];
    for row in &space.basis {
        let c = rat(nonzero_coeff(&mut rng), 1);
        for (i, x) in row.iter().enumerate() {
            if !x.is_zero() {
                coeffs[i] += &c * x;
            }
        }
    }
    let terms: Vec<_> = basis
        .iter()
        .cloned()
        .zip(coeffs.iter().cloned())
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let p = GradedPolynomial::from_terms(v, n_class.clone(), terms).expect("homogeneous draw");
    (p, coeffs)
}

/// The two line data (quartic and quintic): the candidate space exceeds the
/// Jacobian piece by exactly the class of the line, and for five seeded
/// representatives the tangent space from the class, the flag ideal piece,
/// and both socle-functional routes give the same canonical subspace.
pub fn check_tangent_identification() -> CheckResult {
    let start = Instant::now();
    let v = variety(FAN_P3);
    let verdict = (|| {
        for (label, k1_text, k2_text) in [
            ("d=4", POLY_LINE_K1_D4, POLY_LINE_K2_D4),
            ("d=5", POLY_LINE_K1_D5, POLY_LINE_K2_D5),
        ] {
            let datum = line_datum(&v, k1_text, k2_text);
            let (n_class, socle_class) = datum.socle_data(&v).map_err(|e| format!("{label}: {e}"))?;
            let cands = hodge_class_candidates(&v, &datum).map_err(|e| format!("{label}: {e}"))?;
            if !cands.strict {
                return Err(format!("{label}: no candidate class outside the Jacobian piece"));
            }
            let jac_n = partials_ideal(&datum.f, &v).graded_piece(&v, &n_class);
            let j0_n = jacobian_ideal(&datum.f, &v).graded_piece(&v, &n_class);
            if cands.space.dim() != jac_n.dim() + 1 {
                return Err(format!(
                    "{label}: candidate dim {} against Jacobian piece {}",
                    cands.space.dim(),
                    jac_n.dim()
                ));
            }
            if j0_n.dim() > jac_n.dim() {
                return Err(format!("{label}: toric Jacobian piece exceeds the plain one"));
            }

            let ideal = datum.flag_ideal();
            let i_beta = ideal.graded_piece(&v, &datum.beta);
            let i_n = ideal.graded_piece(&v, &n_class);
            let j0 = jacobian_ideal(&datum.f, &v);
            let lambda = socle_functional(&v, &j0, &socle_class)
                .map_err(|e| format!("{label}: socle functional: {e}"))?;
            let basis_n = monomial_basis(&v, &n_class);

            for seed in 201..=205u64 {
                let (p, coeffs) = draw_class(&v, &basis_n, &cands.space, &n_class, seed);
                if jac_n.contains_vector(&coeffs) || j0_n.contains_vector(&coeffs) {
                    return Err(format!("{label} seed {seed}: draw landed inside the Jacobian"));
                }
                let tan = tangent_space_from_class(&v, &datum.f, &p, &datum.beta)
                    .map_err(|e| format!("{label} seed {seed}: {e}"))?;
                if tan.p_in_jacobian {
                    return Err(format!("{label} seed {seed}: representative flagged as Jacobian"));
                }
                if tan.space != i_beta {
                    return Err(format!("{label} seed {seed}: tangent space differs from flag piece"));
                }
                let transporter = t0_transporter_with(&v, &lambda, &p, &datum.beta)
                    .map_err(|e| format!("{label} seed {seed}: {e}"))?;
                if transporter != i_beta {
                    return Err(format!("{label} seed {seed}: transporter differs from flag piece"));
                }
                let kernel = t0_kernel_with(&v, &lambda, &p)
                    .map_err(|e| format!("{label} seed {seed}: {e}"))?;
                if kernel.degenerate || kernel.space != i_n {
                    return Err(format!(
                        "{label} seed {seed}: socle kernel differs from flag piece in degree N"
                    ));
                }
            }
        }
        Ok("both data strict; 5 seeded classes agree across all routes".to_string())
    })();
    finish("tangent space identification from a class", start, 300.0, verdict)
}

/// Intersection numbers on P^1 x P^2 by multilinearity: one factor of the
/// first kind and two of the second.
fn p1xp2_oracle(a: &DivisorClass, b: &DivisorClass, c: &DivisorClass) -> Rat {
    let f = |x: &DivisorClass, i: usize| Rat::from(x.free[i].clone());
    f(a, 0) * f(b, 1) * f(c, 1) + f(b, 0) * f(a, 1) * f(c, 1) + f(c, 0) * f(a, 1) * f(b, 1)
}

/// The degree bound sweep on P^1 x P^2 with eta = (1,1), beta = (2,3):
/// q = 2, beta' = (0,1), and the exact decomposition
/// deg = q * deg_eta(W) + <eta beta' W> for every nonzero nef w <= (5,5),
/// cross-checked against the closed-form product oracle.
pub fn check_degree_bound() -> CheckResult {
    let start = Instant::now();
    let v = variety(FAN_P1XP2);
    let eta = class2(&v, 1, 1);
    let beta = class2(&v, 2, 3);
    let beta_prime = class2(&v, 0, 1);
    let verdict = (|| {
        let mut sweeps = 0usize;
        for w1 in 0..=5i64 {
            for w2 in 0..=5i64 {
                if w1 == 0 && w2 == 0 {
                    continue;
                }
                let w = class2(&v, w1, w2);
                if !v.is_nef(&w) {
                    return Err(format!("({w1},{w2}) should be nef on a product"));
                }
                let rep = verify_degree_bound(&v, &beta, &eta, std::slice::from_ref(&w))
                    .map_err(|e| format!("w=({w1},{w2}): {e}"))?;
                if rep.q != rat(2, 1) {
                    return Err(format!("w=({w1},{w2}): q = {}", rep.q));
                }
                if rep.decomposition.beta_prime_class.as_ref() != Some(&beta_prime) {
                    return Err(format!("w=({w1},{w2}): beta' is not (0,1)"));
                }
                if !rep.bound_ok || rep.remainder.is_negative() || rep.deg_eta_w < rat(1, 1) {
                    return Err(format!(
                        "w=({w1},{w2}): deg={} deg_eta_w={} remainder={}",
                        rep.deg, rep.deg_eta_w, rep.remainder
                    ));
                }
                if rep.deg < rep.q {
                    return Err(format!("w=({w1},{w2}): deg {} below q {}", rep.deg, rep.q));
                }
                let deg_oracle = p1xp2_oracle(&eta, &beta, &w);
                let eta_oracle = p1xp2_oracle(&eta, &eta, &w);
                let rem_oracle = p1xp2_oracle(&eta, &beta_prime, &w);
                let rem = intersection_number(&v, &[eta.clone(), beta_prime.clone(), w.clone()])
                    .map_err(|e| format!("w=({w1},{w2}): {e}"))?;
                if rep.deg != deg_oracle || rep.deg_eta_w != eta_oracle || rem != rem_oracle {
                    return Err(format!("w=({w1},{w2}): oracle mismatch"));
                }
                if rep.remainder != rem {
                    return Err(format!(
                        "w=({w1},{w2}): remainder {} against direct {}",
                        rep.remainder, rem
                    ));
                }
                sweeps += 1;
            }
        }
        Ok(format!("{sweeps} nef classes: bound and decomposition exact"))
    })();
    finish("degree bound sweep on P1 x P2", start, 30.0, verdict)
}

/// Emptiness certificates: the Fermat quartic certifies with power 4 on
/// every cone, a seeded (2,2) on P1 x P1 certifies, and x0^2 x1^2 stays
/// inconclusive at m_max = 20.
pub fn check_emptiness_certificates() -> CheckResult {
    let start = Instant::now();
    let verdict = (|| {
        let p3 = variety(FAN_P3);
        let fermat = poly(&p3, POLY_FERMAT_QUARTIC);
        let rep = jacobian_ideal(&fermat, &p3).emptiness_certificate(&p3, 8);
        if !rep.certified {
            return Err("Fermat Jacobian did not certify".to_string());
        }
        for c in &rep.cones {
            if c.power != Some(4) {
                return Err(format!("cone {}: power {:?} instead of 4", c.cone, c.power));
            }
        }

        let p1xp1 = variety(FAN_P1XP1);
        let beta = class2(&p1xp1, 2, 2);
        let mut rng = rng_from_seed(31);
        let f = dense_polynomial(&p1xp1, &beta, &mut rng);
        let rep = nondegenerate_check(&p1xp1, &f, Some(12));
        if !rep.certified {
            return Err("seeded (2,2) on P1 x P1 did not certify".to_string());
        }

        let degenerate = poly(&p3, POLY_DEGENERATE_QUARTIC);
        let rep = nondegenerate_check(&p3, &degenerate, Some(20));
        if rep.certified {
            return Err("x0^2 x1^2 produced a false certificate".to_string());
        }
        Ok("Fermat power 4 per cone; (2,2) certified; x0^2 x1^2 inconclusive".to_string())
    })();
    finish("emptiness certificates", start, 60.0, verdict)
}

pub struct PropertyOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub failure: Option<String>,
}

fn binom(n: i64, k: i64) -> usize {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as usize
}

fn random_rat_matrix(rng: &mut ChaCha12Rng) -> Vec<Vec<Rat>> {
    let rows = rng.gen_range(1..=7usize);
    let cols = rng.gen_range(1..=7usize);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Rat::zero()
                    } else {
                        rat(rng.gen_range(-9..=9i64), 1)
                    }
                })
                .collect()
        })
        .collect()
}

fn linalg_rank_kernel(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7001);
    for t in 0..trials {
        let rows = random_rat_matrix(&mut rng);
        let m = QMat::from_rows(rows);
        let rank = m.rank();
        let kernel = m.kernel_basis();
        if rank + kernel.len() != m.ncols() {
            return Some(format!(
                "trial {t}: rank {rank} + kernel {} != {} columns",
                kernel.len(),
                m.ncols()
            ));
        }
        for v in &kernel {
            if m.mul_vec(v).iter().any(|x| !x.is_zero()) {
                return Some(format!("trial {t}: kernel vector not annihilated"));
            }
        }
        let sparse = SparseCols::from_rat_cols_of(&m);
        if sparse.analyze().rank != rank {
            return Some(format!("trial {t}: span analysis disagrees on rank"));
        }
    }
    None
}

fn linalg_snf(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7002);
    for t in 0..trials {
        let rows = rng.gen_range(1..=5usize);
        let cols = rng.gen_range(1..=5usize);
        let a = ZMat::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| Int::from(rng.gen_range(-9..=9i64))).collect())
                .collect(),
        );
        let snf = smith_normal_form(&a);
        let uav = snf.u.mul(&a).mul(&snf.v);
        for r in 0..rows {
            for c in 0..cols {
                let expect = snf.d.at(r, c);
                if uav.at(r, c) != expect {
                    return Some(format!("trial {t}: U A V differs from D at ({r},{c})"));
                }
                if r != c && !expect.is_zero() {
                    return Some(format!("trial {t}: off-diagonal entry in D"));
                }
            }
        }
        let n = rows.min(cols);
        for i in 0..n.saturating_sub(1) {
            let (d0, d1) = (snf.d.at(i, i), snf.d.at(i + 1, i + 1));
            if !d0.is_zero() && !(d1 % d0).is_zero() {
                return Some(format!("trial {t}: diagonal not a divisibility chain"));
            }
            if d0.is_zero() && !d1.is_zero() {
                return Some(format!("trial {t}: zero before nonzero on the diagonal"));
            }
        }
        if snf.u.det().abs() != Int::from(1) || snf.v.det().abs() != Int::from(1) {
            return Some(format!("trial {t}: transform not unimodular"));
        }
    }
    None
}

fn linalg_deterministic(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7003);
    for t in 0..trials {
        let rows = random_rat_matrix(&mut rng);
        let m1 = QMat::from_rows(rows.clone());
        let m2 = QMat::from_rows(rows);
        if m1.kernel_basis() != m2.kernel_basis() {
            return Some(format!("trial {t}: kernel basis not reproducible"));
        }
        let a1 = SparseCols::from_rat_cols_of(&m1).analyze();
        let a2 = SparseCols::from_rat_cols_of(&m2).analyze();
        if a1.rank != a2.rank || a1.ann != a2.ann || a1.pivot_cols != a2.pivot_cols {
            return Some(format!("trial {t}: span analysis not reproducible"));
        }
    }
    None
}

fn fan_class_group(_trials: usize) -> Option<String> {
    for (name, text) in [
        ("p3", FAN_P3),
        ("p2", FAN_P2),
        ("p1xp2", FAN_P1XP2),
        ("p1xp1", FAN_P1XP1),
        ("p112", FAN_P112),
    ] {
        let v = variety(text);
        let expected = v.n_rays() - v.dim();
        if v.class_group().free_rank != expected {
            return Some(format!("{name}: free rank is not r - d"));
        }
        let mut acc = v.zero_class();
        for rho in 0..v.n_rays() {
            acc = v.add_classes(&acc, &v.ray_class(rho));
        }
        if acc != v.anticanonical() {
            return Some(format!("{name}: ray classes do not sum to the anticanonical"));
        }
    }
    None
}

fn fan_nef_cone(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7004);
    let varieties = [variety(FAN_P1XP2), variety(FAN_P1XP1), variety(FAN_P112), variety(FAN_P3)];
    for t in 0..trials {
        let v = &varieties[t % varieties.len()];
        let r = v.class_group().free_rank;
        let draw = |rng: &mut ChaCha12Rng, lo: i64| {
            let coords: Vec<Int> = (0..r).map(|_| Int::from(rng.gen_range(lo..=6i64))).collect();
            v.class_from_coords(&coords, &[]).expect("free coordinates")
        };
        let a = draw(&mut rng, -2);
        if v.is_ample(&a) && !v.is_nef(&a) {
            return Some(format!("trial {t}: ample class not nef"));
        }
        let n1 = draw(&mut rng, 0);
        let n2 = draw(&mut rng, 0);
        if v.is_nef(&n1) && v.is_nef(&n2) && !v.is_nef(&v.add_classes(&n1, &n2)) {
            return Some(format!("trial {t}: nef cone not closed under addition"));
        }
        let strictly = draw(&mut rng, 1);
        if v.class_group().torsion.is_empty() && !v.is_ample(&strictly) {
            return Some(format!("trial {t}: strictly positive class not ample"));
        }
    }
    None
}

fn fan_decompose_beta(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7005);
    let v = variety(FAN_P1XP2);
    let eta = class2(&v, 1, 1);
    for t in 0..trials {
        let beta = class2(&v, rng.gen_range(0..=6i64), rng.gen_range(0..=6i64));
        let dec = match v.decompose_beta(&beta, &eta) {
            Ok(d) => d,
            Err(e) => return Some(format!("trial {t}: {e}")),
        };
        let q = dec.q.clone();
        if !q.is_integer() {
            // On this lattice the slacks are integral, so q must be too.
            return Some(format!("trial {t}: non-integral q = {q}"));
        }
        let bp = dec.beta_prime_class.clone().expect("integral q gives an integral class");
        if !v.is_nef(&bp) {
            return Some(format!("trial {t}: beta - q eta not nef"));
        }
        let qi: i64 = q.to_integer().try_into().expect("small fixture q");
        let over = v.sub_classes(&beta, &v.scale_class(&eta, qi + 1));
        if v.is_nef(&over) {
            return Some(format!("trial {t}: q not maximal"));
        }
        if !dec.beta_nef {
            return Some(format!("trial {t}: nonnegative product class reported non-nef"));
        }
    }
    None
}

fn cox_monomial_count(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7006);
    let p3 = variety(FAN_P3);
    let p2 = variety(FAN_P2);
    let p1xp1 = variety(FAN_P1XP1);
    let p1xp2 = variety(FAN_P1XP2);
    for t in 0..trials {
        let a = rng.gen_range(-2..=8i64);
        let b = rng.gen_range(-2..=8i64);
        let checks = [
            (monomial_basis(&p3, &h(&p3, a)).len(), binom(a + 3, 3)),
            (monomial_basis(&p2, &h(&p2, a)).len(), binom(a + 2, 2)),
            (
                monomial_basis(&p1xp1, &class2(&p1xp1, a, b)).len(),
                binom(a + 1, 1) * binom(b + 1, 1),
            ),
            (
                monomial_basis(&p1xp2, &class2(&p1xp2, a, b)).len(),
                binom(a + 1, 1) * binom(b + 2, 2),
            ),
        ];
        for (i, (got, expected)) in checks.iter().enumerate() {
            if got != expected {
                return Some(format!(
                    "trial {t} check {i} (a={a}, b={b}): {got} monomials, oracle {expected}"
                ));
            }
        }
        if is_effective(&p3, &h(&p3, a)) != (a >= 0) {
            return Some(format!("trial {t}: effectivity of degree {a} misreported"));
        }
    }
    None
}

fn cox_representative_independence(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7007);
    let varieties = [variety(FAN_P3), variety(FAN_P1XP2), variety(FAN_P112)];
    for t in 0..trials {
        let v = &varieties[t % varieties.len()];
        let divisor: Vec<Int> = (0..v.n_rays()).map(|_| Int::from(rng.gen_range(0..=4i64))).collect();
        let character: Vec<i64> = (0..v.dim()).map(|_| rng.gen_range(-2..=2i64)).collect();
        let shifted: Vec<Int> = (0..v.n_rays())
            .map(|rho| {
                let pairing: i64 = v
                    .fan()
                    .ray(rho)
                    .iter()
                    .zip(&character)
                    .map(|(c, m)| {
                        let c: i64 = c.try_into().expect("small fixture ray");
                        c * m
                    })
                    .sum();
                &divisor[rho] + Int::from(pairing)
            })
            .collect();
        let c1 = v.class_of_divisor(&divisor);
        let c2 = v.class_of_divisor(&shifted);
        if c1 != c2 {
            return Some(format!("trial {t}: principal shift changed the class"));
        }
        if monomial_basis(v, &c1).len() != monomial_basis(v, &c2).len() {
            return Some(format!("trial {t}: basis length depends on the representative"));
        }
    }
    None
}

fn cox_multiplication(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7008);
    let v = variety(FAN_P1XP1);
    for t in 0..trials {
        let deg = |rng: &mut ChaCha12Rng| {
            class2(&v, rng.gen_range(0..=2i64), rng.gen_range(0..=2i64))
        };
        let f = dense_polynomial(&v, &deg(&mut rng), &mut rng);
        let g = dense_polynomial(&v, &deg(&mut rng), &mut rng);
        let k = dense_polynomial(&v, &deg(&mut rng), &mut rng);
        if f.mul(&g, &v) != g.mul(&f, &v) {
            return Some(format!("trial {t}: multiplication not commutative"));
        }
        if f.mul(&g, &v).mul(&k, &v) != f.mul(&g.mul(&k, &v), &v) {
            return Some(format!("trial {t}: multiplication not associative"));
        }
        let g2 = dense_polynomial(&v, g.degree(), &mut rng);
        let sum = g.add(&g2).expect("same degree");
        let lhs = f.mul(&sum, &v);
        let rhs = f.mul(&g, &v).add(&f.mul(&g2, &v)).expect("same degree");
        if lhs != rhs {
            return Some(format!("trial {t}: multiplication not distributive"));
        }
    }
    None
}

fn cox_euler_identity(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7009);
    let p2 = variety(FAN_P2);
    let p3 = variety(FAN_P3);
    for t in 0..trials {
        for (v, max_deg) in [(&p2, 4i64), (&p3, 3)] {
            let a = rng.gen_range(1..=max_deg);
            let f = dense_polynomial(v, &h(v, a), &mut rng);
            let mut acc = GradedPolynomial::zero(f.degree().clone());
            for rho in 0..v.n_rays() {
                acc = acc.add(&f.log_derivative(rho)).expect("log derivative keeps the degree");
            }
            if acc != f.scale(&rat(a, 1)) {
                return Some(format!("trial {t}: Euler identity failed in degree {a}"));
            }
        }
    }
    None
}

fn ideal_monotonicity(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7010);
    let v = variety(FAN_P2);
    for t in 0..trials {
        let gens: Vec<_> = (0..2)
            .map(|_| dense_polynomial(&v, &h(&v, rng.gen_range(1..=3i64)), &mut rng))
            .collect();
        let extra = dense_polynomial(&v, &h(&v, rng.gen_range(1..=3i64)), &mut rng);
        let alpha = h(&v, rng.gen_range(1..=5i64));
        let small = GradedIdeal::new(gens.clone());
        let mut bigger = gens;
        bigger.push(extra);
        let big = GradedIdeal::new(bigger);
        if !small
            .graded_piece(&v, &alpha)
            .is_subspace_of(&big.graded_piece(&v, &alpha))
        {
            return Some(format!("trial {t}: piece shrank when a generator was added"));
        }
    }
    None
}

fn ideal_j0_inside_full(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7011);
    let p2 = variety(FAN_P2);
    let p1xp1 = variety(FAN_P1XP1);
    for t in 0..trials {
        // On P^n the Euler identity puts f itself in J0, so the two ideals
        // agree; on a product they may genuinely differ.
        let a = rng.gen_range(2..=4i64);
        let f = dense_polynomial(&p2, &h(&p2, a), &mut rng);
        let j0 = jacobian_ideal(&f, &p2);
        let mut gens = vec![f.clone()];
        gens.extend(j0.generators().to_vec());
        let full = GradedIdeal::new(gens);
        let alpha = h(&p2, rng.gen_range(1..=5i64));
        let piece_j0 = j0.graded_piece(&p2, &alpha);
        let piece_full = full.graded_piece(&p2, &alpha);
        if piece_j0 != piece_full {
            return Some(format!("trial {t}: (f) + J0 differs from J0 on projective space"));
        }

        let beta = class2(&p1xp1, rng.gen_range(1..=3i64), rng.gen_range(1..=3i64));
        let g = dense_polynomial(&p1xp1, &beta, &mut rng);
        let j0 = jacobian_ideal(&g, &p1xp1);
        let mut gens = vec![g.clone()];
        gens.extend(j0.generators().to_vec());
        let full = GradedIdeal::new(gens);
        let alpha = class2(&p1xp1, rng.gen_range(0..=4i64), rng.gen_range(0..=4i64));
        if !j0
            .graded_piece(&p1xp1, &alpha)
            .is_subspace_of(&full.graded_piece(&p1xp1, &alpha))
        {
            return Some(format!("trial {t}: J0 piece escapes (f) + J0"));
        }
    }
    None
}

fn ideal_socle_vanishing(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7012);
    let p2 = variety(FAN_P2);
    let p3 = variety(FAN_P3);
    let fermat = poly(&p3, POLY_FERMAT_QUARTIC);
    let j0 = jacobian_ideal(&fermat, &p3);
    for a in 13..=15i64 {
        if j0.quotient_dim(&p3, &h(&p3, a)) != 0 {
            return Some(format!("Fermat quotient survives past the socle at {a}"));
        }
    }
    for t in 0..trials {
        let ideal = GradedIdeal::new(dense_sequence(
            &p2,
            &[h(&p2, 2), h(&p2, 2), h(&p2, 2)],
            &mut rng,
        ));
        // Socle degree 3 for a (2,2,2) sequence on P^2.
        for a in 4..=5i64 {
            if ideal.quotient_dim(&p2, &h(&p2, a)) != 0 {
                return Some(format!("trial {t}: quotient survives past the socle at {a}"));
            }
        }
    }
    None
}

fn ideal_reordering(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7013);
    let v = variety(FAN_P2);
    for t in 0..trials {
        let mut gens: Vec<_> = (0..3)
            .map(|_| dense_polynomial(&v, &h(&v, rng.gen_range(1..=3i64)), &mut rng))
            .collect();
        let alpha = h(&v, rng.gen_range(1..=5i64));
        let before = GradedIdeal::new(gens.clone()).graded_piece(&v, &alpha);
        // Rotate and swap: a nontrivial permutation for any length-3 list.
        gens.rotate_left(1);
        gens.swap(0, 1);
        let after = GradedIdeal::new(gens).graded_piece(&v, &alpha);
        if before != after {
            return Some(format!("trial {t}: canonical piece depends on generator order"));
        }
    }
    None
}

fn gorenstein_symmetry(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7014);
    let v = variety(FAN_P2);
    let menu: [(i64, i64, i64); 3] = [(1, 1, 2), (1, 2, 2), (2, 2, 2)];
    for t in 0..trials {
        let (d1, d2, d3) = menu[t % menu.len()];
        let n = d1 + d2 + d3 - 3;
        let ideal = GradedIdeal::new(dense_sequence(
            &v,
            &[h(&v, d1), h(&v, d2), h(&v, d3)],
            &mut rng,
        ));
        for a in 0..=n {
            let left = ideal.quotient_dim(&v, &h(&v, a));
            let right = ideal.quotient_dim(&v, &h(&v, n - a));
            if left != right {
                return Some(format!(
                    "trial {t}: quotient dims {left} and {right} at degrees {a} and {}",
                    n - a
                ));
            }
        }
    }
    None
}

fn gorenstein_apolar_contains(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7015);
    let v = variety(FAN_P2);
    for t in 0..trials {
        let ideal = GradedIdeal::new(dense_sequence(
            &v,
            &[h(&v, 1), h(&v, 2), h(&v, 2)],
            &mut rng,
        ));
        let n = h(&v, 2);
        let lambda = match socle_functional(&v, &ideal, &n) {
            Ok(l) => l,
            Err(e) => return Some(format!("trial {t}: socle functional: {e}")),
        };
        for a in 0..=2i64 {
            let alpha = h(&v, a);
            let piece = ideal.graded_piece(&v, &alpha);
            let apolar = apolar_piece(&v, &lambda, &alpha);
            if !piece.is_subspace_of(&apolar.space) {
                return Some(format!("trial {t}: ideal piece escapes the apolar space at {a}"));
            }
        }
    }
    None
}

fn gorenstein_pairing_iff(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7016);
    let v = variety(FAN_P2);
    for t in 0..trials {
        let ideal = GradedIdeal::new(dense_sequence(
            &v,
            &[h(&v, 2), h(&v, 2), h(&v, 2)],
            &mut rng,
        ));
        let n = h(&v, 3);
        let lambda = match socle_functional(&v, &ideal, &n) {
            Ok(l) => l,
            Err(e) => return Some(format!("trial {t}: socle functional: {e}")),
        };
        for a in 0..=3i64 {
            let rep = pairing_matrix(&v, &ideal, &lambda, &h(&v, a));
            let dims_equal =
                ideal.quotient_dim(&v, &h(&v, a)) == ideal.quotient_dim(&v, &h(&v, 3 - a));
            if rep.nondegenerate != dims_equal {
                return Some(format!(
                    "trial {t}: nondegeneracy {} against dim equality {dims_equal} at {a}",
                    rep.nondegenerate
                ));
            }
            if !rep.nondegenerate {
                return Some(format!("trial {t}: degenerate pairing for a regular sequence"));
            }
        }
    }
    None
}

fn naive_det(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Int::zero();
    for (i, row) in rows.iter().enumerate() {
        let minor: Vec<Vec<Int>> = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = &row[0] * naive_det(&minor);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn gorenstein_euler_coefficients(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7017);
    let fans = [
        ("p3", variety(FAN_P3), true),
        ("p1xp2", variety(FAN_P1XP2), true),
        ("p112", variety(FAN_P112), false),
    ];
    for (name, v, smooth) in &fans {
        let form = euler_coefficients(v.fan());
        for (subset, det) in &form.dets {
            let rows: Vec<Vec<Int>> = subset.iter().map(|&i| v.fan().ray(i).to_vec()).collect();
            if *det != naive_det(&rows) {
                return Some(format!("{name}: coefficient differs from the cofactor expansion"));
            }
            if *smooth && !det.is_zero() && det.abs() != Int::from(1) {
                return Some(format!("{name}: non-unimodular coefficient on a smooth fan"));
            }
        }
        // Alternating: a transposition of the rows flips the sign.
        for _ in 0..trials.min(20) {
            let subset: Vec<usize> = {
                use rand::seq::SliceRandom;
                let mut all: Vec<usize> = (0..v.n_rays()).collect();
                all.shuffle(&mut rng);
                all.truncate(v.dim());
                all
            };
            let mut rows: Vec<Vec<Int>> = subset.iter().map(|&i| v.fan().ray(i).to_vec()).collect();
            let d0 = naive_det(&rows);
            rows.swap(0, 1);
            if naive_det(&rows) != -&d0 {
                return Some(format!("{name}: determinant not alternating"));
            }
        }
    }
    None
}

fn chow_symmetry_multilinearity(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7018);
    let v = variety(FAN_P1XP2);
    for t in 0..trials {
        let draw = |rng: &mut ChaCha12Rng| {
            class2(&v, rng.gen_range(0..=4i64), rng.gen_range(0..=4i64))
        };
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let base = match intersection_number(&v, &[a.clone(), b.clone(), c.clone()]) {
            Ok(x) => x,
            Err(e) => return Some(format!("trial {t}: {e}")),
        };
        for perm in [
            [&b, &a, &c],
            [&c, &b, &a],
            [&a, &c, &b],
        ] {
            let x = intersection_number(&v, &[perm[0].clone(), perm[1].clone(), perm[2].clone()])
                .expect("same classes");
            if x != base {
                return Some(format!("trial {t}: intersection number not symmetric"));
            }
        }
        let a2 = draw(&mut rng);
        let lhs = intersection_number(&v, &[v.add_classes(&a, &a2), b.clone(), c.clone()])
            .expect("nef classes");
        let rhs = &base + intersection_number(&v, &[a2, b, c]).expect("nef classes");
        if lhs != rhs {
            return Some(format!("trial {t}: intersection number not additive"));
        }
    }
    None
}

fn chow_p1xp2_oracle(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7019);
    let v = variety(FAN_P1XP2);
    for t in 0..trials {
        let draw = |rng: &mut ChaCha12Rng| {
            class2(&v, rng.gen_range(0..=5i64), rng.gen_range(0..=5i64))
        };
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let got = intersection_number(&v, &[a.clone(), b.clone(), c.clone()]).expect("nef classes");
        if got != p1xp2_oracle(&a, &b, &c) {
            return Some(format!("trial {t}: mixed volume differs from the product oracle"));
        }
    }
    None
}

fn chow_degree_chain(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7020);
    let v = variety(FAN_P1XP2);
    let eta = class2(&v, 1, 1);
    for t in 0..trials {
        let q = rng.gen_range(0..=3i64);
        let bp = if rng.gen_bool(0.5) {
            class2(&v, rng.gen_range(1..=3i64), 0)
        } else {
            class2(&v, 0, rng.gen_range(1..=3i64))
        };
        let beta = v.add_classes(&v.scale_class(&eta, q), &bp);
        let w = loop {
            let w = class2(&v, rng.gen_range(0..=4i64), rng.gen_range(0..=4i64));
            if !w.is_zero() {
                break w;
            }
        };
        let rep = match verify_degree_bound(&v, &beta, &eta, std::slice::from_ref(&w)) {
            Ok(r) => r,
            Err(e) => return Some(format!("trial {t}: {e}")),
        };
        if rep.q != rat(q, 1) {
            return Some(format!("trial {t}: recovered q = {} instead of {q}", rep.q));
        }
        if rep.decomposition.beta_prime_class.as_ref() != Some(&bp) {
            return Some(format!("trial {t}: beta' not recovered"));
        }
        let direct = intersection_number(&v, &[eta.clone(), bp, w]).expect("nef classes");
        if rep.remainder != direct || !rep.bound_ok {
            return Some(format!("trial {t}: degree chain broken"));
        }
    }
    None
}

fn nl_assembly(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7021);
    let v = variety(FAN_P3);
    for t in 0..trials {
        let d = rng.gen_range(3..=5i64);
        let a1 = dense_polynomial(&v, &h(&v, 1), &mut rng);
        let a2 = dense_polynomial(&v, &h(&v, 1), &mut rng);
        let k1 = dense_polynomial(&v, &h(&v, d - 1), &mut rng);
        let k2 = dense_polynomial(&v, &h(&v, d - 1), &mut rng);
        let datum = match FlagDatum::new(&v, vec![a1.clone(), a2.clone()], vec![k1, k2]) {
            Ok(d) => d,
            Err(e) => return Some(format!("trial {t}: {e}")),
        };
        let recovered = match FlagDatum::from_hypersurface(&v, vec![a1, a2], &datum.f) {
            Ok(d) => d,
            Err(e) => return Some(format!("trial {t}: decomposition failed: {e}")),
        };
        let mut acc = GradedPolynomial::zero(datum.beta.clone());
        for (a, k) in recovered.equations.iter().zip(&recovered.cofactors) {
            acc = acc.add(&a.mul(k, &v)).expect("degree beta");
        }
        if acc != datum.f {
            return Some(format!("trial {t}: recovered cofactors do not assemble f"));
        }
    }
    None
}

fn nl_j0_inside_flag(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7022);
    let v = variety(FAN_P3);
    let x0 = poly(&v, POLY_X0);
    let x1 = poly(&v, POLY_X1);
    for t in 0..trials {
        let d = rng.gen_range(4..=5i64);
        let k1 = dense_polynomial(&v, &h(&v, d - 1), &mut rng);
        let k2 = dense_polynomial(&v, &h(&v, d - 1), &mut rng);
        let datum = FlagDatum::new(&v, vec![x0.clone(), x1.clone()], vec![k1, k2])
            .expect("coordinate flag datum");
        let ideal = datum.flag_ideal();
        let j0 = jacobian_ideal(&datum.f, &v);
        for alpha in [datum.beta.clone(), h(&v, d - 1)] {
            if !j0
                .graded_piece(&v, &alpha)
                .is_subspace_of(&ideal.graded_piece(&v, &alpha))
            {
                return Some(format!("trial {t}: toric Jacobian escapes the flag ideal"));
            }
        }
    }
    None
}

/// Tangent routes on the bundled quartic line datum: 100 seeded classes,
/// one candidate computation and one socle functional shared by all.
fn nl_generic_class_routes(trials: usize) -> Option<String> {
    let v = variety(FAN_P3);
    let datum = line_datum(&v, POLY_LINE_K1_D4, POLY_LINE_K2_D4);
    let (n_class, socle_class) = datum.socle_data(&v).expect("bundled datum");
    let cands = match hodge_class_candidates(&v, &datum) {
        Ok(c) => c,
        Err(e) => return Some(format!("candidates: {e}")),
    };
    let jac_n = partials_ideal(&datum.f, &v).graded_piece(&v, &n_class);
    let i_beta = datum.flag_ideal().graded_piece(&v, &datum.beta);
    let lambda = match socle_functional(&v, &jacobian_ideal(&datum.f, &v), &socle_class) {
        Ok(l) => l,
        Err(e) => return Some(format!("socle functional: {e}")),
    };
    let basis_n = monomial_basis(&v, &n_class);
    for t in 0..trials {
        let (p, coeffs) = draw_class(&v, &basis_n, &cands.space, &n_class, 9000 + t as u64);
        if jac_n.contains_vector(&coeffs) {
            return Some(format!("trial {t}: generic draw landed in the Jacobian piece"));
        }
        let tan = match tangent_space_from_class(&v, &datum.f, &p, &datum.beta) {
            Ok(x) => x,
            Err(e) => return Some(format!("trial {t}: {e}")),
        };
        if tan.p_in_jacobian || tan.space != i_beta {
            return Some(format!("trial {t}: tangent space differs from the flag piece"));
        }
        let transporter = match t0_transporter_with(&v, &lambda, &p, &datum.beta) {
            Ok(x) => x,
            Err(e) => return Some(format!("trial {t}: {e}")),
        };
        if transporter != tan.space {
            return Some(format!("trial {t}: transporter route disagrees"));
        }
    }
    None
}

fn nl_substitution_invariance(trials: usize) -> Option<String> {
    let mut rng = rng_from_seed(7023);
    let v = variety(FAN_P3);
    let x0 = poly(&v, POLY_X0);
    let x1 = poly(&v, POLY_X1);
    for t in 0..trials {
        let d = 4i64;
        let k1 = dense_polynomial(&v, &h(&v, d - 1), &mut rng);
        let k2 = dense_polynomial(&v, &h(&v, d - 1), &mut rng);
        let datum = FlagDatum::new(&v, vec![x0.clone(), x1.clone()], vec![k1.clone(), k2.clone()])
            .expect("coordinate flag datum");
        let base_piece = datum.flag_ideal().graded_piece(&v, &datum.beta);
        let base_codim = nl_tangent_codim(&v, &datum, None, None).expect("dimension report").codim;

        // Shear the equations, compensating in the cofactors: same f.
        let c = rat(nonzero_coeff(&mut rng), 1);
        let a1s = x0.add(&x1.scale(&c)).expect("degree one");
        let k2s = k2.sub(&k1.scale(&c)).expect("degree d-1");
        let sheared = FlagDatum::new(&v, vec![a1s, x1.clone()], vec![k1.clone(), k2s])
            .expect("sheared datum");
        if sheared.f != datum.f {
            return Some(format!("trial {t}: shear changed the hypersurface"));
        }
        let sheared_piece = sheared.flag_ideal().graded_piece(&v, &sheared.beta);
        if sheared_piece != base_piece {
            return Some(format!("trial {t}: shear changed the flag ideal piece"));
        }

        // Shift the cofactors by multiples of the equations: same ideal,
        // different hypersurface through the same flag.
        let c1 = dense_polynomial(&v, &h(&v, d - 2), &mut rng);
        let c2 = dense_polynomial(&v, &h(&v, d - 2), &mut rng);
        let k1t = k1.add(&x1.mul(&c1, &v)).expect("degree d-1");
        let k2t = k2.add(&x0.mul(&c2, &v)).expect("degree d-1");
        let shifted = FlagDatum::new(&v, vec![x0.clone(), x1.clone()], vec![k1t, k2t])
            .expect("shifted datum");
        let shifted_piece = shifted.flag_ideal().graded_piece(&v, &shifted.beta);
        if shifted_piece != base_piece {
            return Some(format!("trial {t}: cofactor shift changed the flag ideal piece"));
        }
        let shifted_codim = nl_tangent_codim(&v, &shifted, None, None)
            .expect("dimension report")
            .codim;
        if shifted_codim != base_codim {
            return Some(format!(
                "trial {t}: codimension moved from {base_codim} to {shifted_codim}"
            ));
        }
    }
    None
}

/// The property registry: display name (prefixed by the module under
/// test) and the check itself, returning a failure description or None.
pub fn property_checks() -> Vec<(&'static str, fn(usize) -> Option<String>)> {
    vec![
        ("linalg: rank + kernel = columns", linalg_rank_kernel),
        ("linalg: Smith normal form reconstruction", linalg_snf),
        ("linalg: deterministic reduction", linalg_deterministic),
        ("fan: class group rank and anticanonical", fan_class_group),
        ("fan: nef cone closure and ample classes", fan_nef_cone),
        ("fan: decompose_beta maximality", fan_decompose_beta),
        ("cox: monomial count oracle", cox_monomial_count),
        ("cox: representative independence", cox_representative_independence),
        ("cox: multiplication algebra laws", cox_multiplication),
        ("cox: Euler identity on projective space", cox_euler_identity),
        ("ideal: piece monotonicity", ideal_monotonicity),
        ("ideal: J0 inside (f) + J0, equal on P^n", ideal_j0_inside_full),
        ("ideal: quotient vanishes past the socle", ideal_socle_vanishing),
        ("ideal: generator order irrelevant", ideal_reordering),
        ("gorenstein: quotient dimension symmetry", gorenstein_symmetry),
        ("gorenstein: apolar contains the ideal piece", gorenstein_apolar_contains),
        ("gorenstein: pairing nondegeneracy iff dims", gorenstein_pairing_iff),
        ("gorenstein: Euler form coefficients", gorenstein_euler_coefficients),
        ("chow: symmetric and multilinear", chow_symmetry_multilinearity),
        ("chow: product oracle on P1 x P2", chow_p1xp2_oracle),
        ("chow: degree bound chain", chow_degree_chain),
        ("nl: cofactor assembly is exact", nl_assembly),
        ("nl: toric Jacobian inside the flag ideal", nl_j0_inside_flag),
        ("nl: generic class tangent routes agree", nl_generic_class_routes),
        ("nl: substitution invariance", nl_substitution_invariance),
    ]
}

pub fn property_suite(trials: usize) -> Vec<PropertyOutcome> {
    property_checks()
        .into_iter()
        .map(|(name, f)| PropertyOutcome {
            name,
            trials,
            failure: f(trials),
        })
        .collect()
}

/// Criterion 7: the whole property suite, green under seeded trials.
pub fn check_invariant_suite(trials: usize) -> CheckResult {
    let start = Instant::now();
    let outcomes = property_suite(trials);
    let failures: Vec<String> = outcomes
        .iter()
        .filter_map(|o| o.failure.as_ref().map(|f| format!("{}: {f}", o.name)))
        .collect();
    let verdict = if failures.is_empty() {
        Ok(format!("{} properties x {trials} trials", outcomes.len()))
    } else {
        Err(failures.join("; "))
    };
    finish("structural invariant suite", start, 600.0, verdict)
}

/// Every acceptance criterion in order. `trials` feeds the invariant
/// suite; the contract value is 100.
pub fn run_all(trials: usize) -> Vec<CheckResult> {
    vec![
        check_gorenstein_duality(),
        check_macaulay_sequences(),
        check_tangent_codimension(),
        check_tangent_identification(),
        check_degree_bound(),
        check_emptiness_certificates(),
        check_invariant_suite(trials),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        for text in [FAN_P3, FAN_P2, FAN_P1XP2, FAN_P1XP1, FAN_P112] {
            let v = variety(text);
            assert!(v.fan().validate().is_valid());
        }
        let p3 = variety(FAN_P3);
        for text in [
            POLY_FERMAT_QUARTIC,
            POLY_FERMAT_QUINTIC,
            POLY_X0,
            POLY_X1,
            POLY_DEGENERATE_QUARTIC,
            POLY_LINE_A1,
            POLY_LINE_A2,
            POLY_LINE_K1_D4,
            POLY_LINE_K2_D4,
            POLY_LINE_K1_D5,
            POLY_LINE_K2_D5,
        ] {
            poly(&p3, text);
        }
    }

    #[test]
    fn ci_hilbert_matches_known_series() {
        assert_eq!(ci_hilbert(2, 3), vec![1, 3, 3, 1]);
        assert_eq!(
            ci_hilbert(4, 4),
            vec![1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1]
        );
    }

    #[test]
    fn property_suite_smoke() {
        for outcome in property_suite(2) {
            assert!(
                outcome.failure.is_none(),
                "{}: {}",
                outcome.name,
                outcome.failure.unwrap()
            );
        }
    }
}
