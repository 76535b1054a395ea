//! Toric intersection numbers via mixed volumes of divisor polytopes.
//!
//! For nef classes on a fixed complete fan the divisor polytopes add under
//! Minkowski sum, so the d-fold intersection number is the mixed volume
//! computed by inclusion-exclusion over sums of subsets:
//!   <D_1 ... D_d> = sum_{0 != S} (-1)^(d-|S|) vol(P_{sum of S}).
//! Volumes are exact rationals from a recursive face triangulation of the
//! H-representation. The normalization makes <H^d> = 1 on projective
//! d-space.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{CoxError, Result};
use crate::fan::{rat_divisor, BetaDecomposition, DivisorClass, Variety};
use crate::linalg::QMat;
use crate::{Int, Rat};

/// The divisor polytope P_a = { m : <m, v_rho> + a_rho >= 0 } with its
/// vertices cached.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    pub divisor: Vec<Rat>,
    pub vertices: Vec<Vec<Rat>>,
}

impl LatticePolytope {
    pub fn from_divisor(variety: &Variety, divisor: Vec<Rat>) -> LatticePolytope {
        let vertices = polytope_vertices(variety, &divisor);
        LatticePolytope { divisor, vertices }
    }

    pub fn from_class(variety: &Variety, class: &DivisorClass) -> LatticePolytope {
        LatticePolytope::from_divisor(variety, rat_divisor(&class.representative))
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Exact Euclidean volume with respect to the lattice.
    pub fn volume(&self, variety: &Variety) -> Rat {
        let d = variety.dim();
        if self.vertices.len() <= d {
            return Rat::zero();
        }
        let idx: Vec<usize> = (0..self.vertices.len()).collect();
        if affine_dim(&self.vertices, &idx) < d {
            return Rat::zero();
        }
        let simplices = triangulate(variety, &self.divisor, &self.vertices, idx, d);
        let mut total = Rat::zero();
        let mut dfact = Rat::from(Int::from(1));
        for k in 1..=d {
            dfact *= Rat::from(Int::from(k as i64));
        }
        for s in simplices {
            let base = &self.vertices[s[0]];
            let rows: Vec<Vec<Rat>> = s[1..]
                .iter()
                .map(|&i| {
                    self.vertices[i]
                        .iter()
                        .zip(base)
                        .map(|(x, b)| x - b)
                        .collect()
                })
                .collect();
            total += det_rat(&rows).abs();
        }
        total / dfact
    }
}

/// Vertices as feasible basic solutions of the inequality system, deduped.
fn polytope_vertices(variety: &Variety, a: &[Rat]) -> Vec<Vec<Rat>> {
    let d = variety.dim();
    let r = variety.n_rays();
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for subset in (0..r).combinations(d) {
        let m = QMat::from_rows(
            subset
                .iter()
                .map(|&i| {
                    variety
                        .fan()
                        .ray(i)
                        .iter()
                        .map(|x| Rat::from(x.clone()))
                        .collect()
                })
                .collect(),
        );
        if m.rank() < d {
            continue;
        }
        let rhs: Vec<Rat> = subset.iter().map(|&i| -a[i].clone()).collect();
        let point = m.solve_particular(&rhs).expect("full-rank square system");
        if (0..r).all(|rho| !slack(variety, a, &point, rho).is_negative()) {
            seen.insert(point);
        }
    }
    seen.into_iter().collect()
}

fn slack(variety: &Variety, a: &[Rat], point: &[Rat], rho: usize) -> Rat {
    let mut acc = a[rho].clone();
    for (c, m) in variety.fan().ray(rho).iter().zip(point) {
        acc += Rat::from(c.clone()) * m;
    }
    acc
}

fn affine_dim(points: &[Vec<Rat>], idx: &[usize]) -> usize {
    if idx.len() <= 1 {
        return 0;
    }
    let base = &points[idx[0]];
    let rows: Vec<Vec<Rat>> = idx[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(x, b)| x - b).collect())
        .collect();
    QMat::from_rows(rows).rank()
}

/// Triangulate the face spanned by `face` (vertex indices, affine dim k)
/// into k-simplices: cone from the lex-min vertex over the sub-facets that
/// miss it. Faces are cut out by tightening one more inequality, which is
/// exhaustive for an H-polytope.
fn triangulate(
    variety: &Variety,
    a: &[Rat],
    points: &[Vec<Rat>],
    face: Vec<usize>,
    k: usize,
) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![face[0]]];
    }
    let apex = *face
        .iter()
        .min_by(|&&i, &&j| points[i].cmp(&points[j]))
        .unwrap();
    let mut sub_facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for rho in 0..variety.n_rays() {
        if face
            .iter()
            .all(|&i| slack(variety, a, &points[i], rho).is_zero())
        {
            continue; // tight on the whole face, cuts nothing out
        }
        let tight: Vec<usize> = face
            .iter()
            .copied()
            .filter(|&i| slack(variety, a, &points[i], rho).is_zero())
            .collect();
        if tight.contains(&apex) || tight.is_empty() {
            continue;
        }
        if affine_dim(points, &tight) == k - 1 {
            sub_facets.insert(tight);
        }
    }
    let mut out = Vec::new();
    for facet in sub_facets {
        for mut simplex in triangulate(variety, a, points, facet, k - 1) {
            simplex.insert(0, apex);
            out.push(simplex);
        }
    }
    out
}

fn det_rat(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut m = QMat::from_rows(rows.to_vec());
    let mut det = Rat::from(Int::from(1));
    for c in 0..n {
        let pivot = (c..n).find(|&i| !m.at(i, c).is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != c {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m.at(c, c).clone();
        for i in (c + 1)..n {
            if m.at(i, c).is_zero() {
                continue;
            }
            let f = m.at(i, c).clone() / m.at(c, c).clone();
            for j in c..n {
                let v = m.at(i, j) - &f * m.at(c, j);
                m.set(i, j, v);
            }
        }
    }
    det
}

/// Intersection number of d nef classes: the lattice mixed volume of their
/// polytopes, by inclusion-exclusion over Minkowski sums. Refuses non-nef
/// input, where the polytope identity P_(a+b) = P_a + P_b can fail.
pub fn intersection_number(variety: &Variety, classes: &[DivisorClass]) -> Result<Rat> {
    let d = variety.dim();
    if classes.len() != d {
        return Err(CoxError::Dimension(format!(
            "intersection number needs exactly {d} classes, got {}",
            classes.len()
        )));
    }
    for c in classes {
        if !variety.is_nef(c) {
            return Err(CoxError::NotNef(format!("class {c} is not nef")));
        }
    }
    let mut total = Rat::zero();
    for mask in 1u32..(1 << d) {
        let mut a = vec![Rat::zero(); variety.n_rays()];
        let mut size = 0;
        for (i, c) in classes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                size += 1;
                for (slot, x) in a.iter_mut().zip(&c.representative) {
                    *slot += Rat::from(x.clone());
                }
            }
        }
        let vol = LatticePolytope::from_divisor(variety, a).volume(variety);
        if (d - size) % 2 == 0 {
            total += vol;
        } else {
            total -= vol;
        }
    }
    Ok(total)
}

/// deg_eta(W) for W cut by the given nef classes: intersects dim_Z copies
/// of eta with the classes of W.
pub fn deg_eta(
    variety: &Variety,
    w_classes: &[DivisorClass],
    eta: &DivisorClass,
    dim_z: usize,
) -> Result<Rat> {
    let d = variety.dim();
    if w_classes.len() + dim_z != d {
        return Err(CoxError::Dimension(format!(
            "codim(W) + dim(Z) = {} + {dim_z} must equal {d}",
            w_classes.len()
        )));
    }
    let mut factors: Vec<DivisorClass> = vec![eta.clone(); dim_z];
    factors.extend_from_slice(w_classes);
    intersection_number(variety, &factors)
}

#[derive(Clone, Debug)]
pub struct DegreeBoundReport {
    pub q: Rat,
    /// <eta^k cup beta, [W]> with k = dim W - 1.
    pub deg: Rat,
    /// deg_eta(W) = <eta^dim W, [W]>.
    pub deg_eta_w: Rat,
    /// <eta^k cup beta', [W]> = deg - q * deg_eta_w, by multilinearity.
    pub remainder: Rat,
    pub bound_ok: bool,
    pub decomposition: BetaDecomposition,
}

impl fmt::Display for DegreeBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} deg={} deg_eta_w={} remainder={} bound={}",
            self.q,
            self.deg,
            self.deg_eta_w,
            self.remainder,
            if self.bound_ok { "OK" } else { "FAIL" }
        )
    }
}

/// Split beta = q eta + beta' and check the degree chain
///   <eta^k beta W> = q <eta^(k+1) W> + <eta^k beta' W>  with k = dim W - 1,
/// certifying deg >= q deg_eta(W).
pub fn verify_degree_bound(
    variety: &Variety,
    beta: &DivisorClass,
    eta: &DivisorClass,
    w_classes: &[DivisorClass],
) -> Result<DegreeBoundReport> {
    let d = variety.dim();
    if w_classes.len() >= d {
        return Err(CoxError::Dimension(format!(
            "W is cut by {} classes, leaving no positive dimension in rank {d}",
            w_classes.len()
        )));
    }
    for w in w_classes {
        if w.is_zero() {
            return Err(CoxError::InvalidArgument(
                "w = 0 does not cut a subvariety".into(),
            ));
        }
    }
    let dim_z = d - w_classes.len();
    let decomposition = variety.decompose_beta(beta, eta)?;
    let q = decomposition.q.clone();

    let mut factors: Vec<DivisorClass> = vec![eta.clone(); dim_z - 1];
    factors.push(beta.clone());
    factors.extend_from_slice(w_classes);
    let deg = intersection_number(variety, &factors)?;
    let deg_eta_w = deg_eta(variety, w_classes, eta, dim_z)?;
    let remainder = &deg - &q * &deg_eta_w;
    let bound_ok = deg >= &q * &deg_eta_w && !remainder.is_negative();
    Ok(DegreeBoundReport {
        q,
        deg,
        deg_eta_w,
        remainder,
        bound_ok,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::testfans::*;
    use crate::rat;

    /// Intersection numbers on P^(n1) x P^(n2) by multilinearity: pick n1
    /// factors to contribute their first bidegree, the rest the second.
    fn product_oracle(n1: usize, classes: &[(i64, i64)]) -> i64 {
        let d = classes.len();
        (0..d)
            .combinations(n1)
            .map(|s| {
                classes
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| if s.contains(&i) { a } else { b })
                    .product::<i64>()
            })
            .sum()
    }

    #[test]
    fn hyperplane_powers_normalize_to_one() {
        for n in 1..=3 {
            let v = Variety::new(projective_space(n)).unwrap();
            let h = v.ray_class(0);
            let classes = vec![h; n];
            assert_eq!(intersection_number(&v, &classes).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn multilinearity_on_p3() {
        let v = Variety::new(p3_fan()).unwrap();
        let h = v.ray_class(0);
        let classes = vec![
            v.scale_class(&h, 2),
            v.scale_class(&h, 3),
            v.scale_class(&h, 1),
        ];
        assert_eq!(intersection_number(&v, &classes).unwrap(), rat(6, 1));
    }

    #[test]
    fn p1xp2_against_oracle() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let c = |a: i64, b: i64| {
            v.class_from_coords(&[Int::from(a), Int::from(b)], &[]).unwrap()
        };
        for triple in [
            [(1, 0), (0, 1), (0, 1)],
            [(0, 1), (0, 1), (0, 1)],
            [(1, 0), (1, 0), (0, 1)],
            [(1, 1), (1, 1), (1, 1)],
            [(2, 3), (1, 1), (0, 1)],
            [(2, 1), (1, 2), (3, 1)],
        ] {
            let classes: Vec<DivisorClass> = triple.iter().map(|&(a, b)| c(a, b)).collect();
            let got = intersection_number(&v, &classes).unwrap();
            let want = product_oracle(1, &triple);
            assert_eq!(got, rat(want, 1), "{triple:?}");
        }
    }

    #[test]
    fn p1xp1_against_oracle() {
        let v = Variety::new(p1xp1_fan()).unwrap();
        for (a, b, c_, d) in [(1i64, 0i64, 0i64, 1i64), (1, 1, 1, 1), (2, 3, 4, 5), (0, 2, 3, 0)] {
            let x = v.class_from_coords(&[Int::from(a), Int::from(b)], &[]).unwrap();
            let y = v.class_from_coords(&[Int::from(c_), Int::from(d)], &[]).unwrap();
            let got = intersection_number(&v, &[x, y]).unwrap();
            let want = product_oracle(1, &[(a, b), (c_, d)]);
            assert_eq!(got, rat(want, 1));
        }
    }

    #[test]
    fn weighted_p112_self_intersection_is_a_half() {
        let v = Variety::new(p112_fan()).unwrap();
        let h = v.class_from_coords(&[Int::from(1)], &[]).unwrap();
        assert_eq!(intersection_number(&v, &[h.clone(), h.clone()]).unwrap(), rat(1, 2));
        let two_h = v.scale_class(&h, 2);
        assert_eq!(intersection_number(&v, &[two_h.clone(), two_h]).unwrap(), rat(2, 1));
    }

    #[test]
    fn non_nef_is_refused() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let bad = v
            .class_from_coords(&[Int::from(-1), Int::from(1)], &[])
            .unwrap();
        let h = v.class_from_coords(&[Int::from(1), Int::from(1)], &[]).unwrap();
        let err = intersection_number(&v, &[bad, h.clone(), h]).unwrap_err();
        assert!(matches!(err, CoxError::NotNef(_)));
    }

    #[test]
    fn deg_eta_of_hyperplane_pullback() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let eta = v.class_from_coords(&[Int::from(1), Int::from(1)], &[]).unwrap();
        let w = v.class_from_coords(&[Int::from(0), Int::from(1)], &[]).unwrap();
        assert_eq!(deg_eta(&v, &[w], &eta, 2).unwrap(), rat(2, 1));
    }

    #[test]
    fn degree_bound_chain_on_p1xp2() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let c = |a: i64, b: i64| {
            v.class_from_coords(&[Int::from(a), Int::from(b)], &[]).unwrap()
        };
        let beta = c(2, 3);
        let eta = c(1, 1);
        for wa in 0..=3i64 {
            for wb in 0..=3i64 {
                if wa == 0 && wb == 0 {
                    continue;
                }
                let report = verify_degree_bound(&v, &beta, &eta, &[c(wa, wb)]).unwrap();
                assert_eq!(report.q, rat(2, 1));
                assert!(report.bound_ok, "w=({wa},{wb}): {report}");
                // The remainder must equal <eta beta' w> computed directly.
                let beta_prime = report.decomposition.beta_prime_class.clone().unwrap();
                let direct =
                    intersection_number(&v, &[eta.clone(), beta_prime, c(wa, wb)]).unwrap();
                assert_eq!(report.remainder, direct, "w=({wa},{wb})");
            }
        }
    }

    #[test]
    fn zero_w_class_is_rejected() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let beta = v.anticanonical();
        let eta = v.class_from_coords(&[Int::from(1), Int::from(1)], &[]).unwrap();
        let err = verify_degree_bound(&v, &beta, &eta, &[v.zero_class()]).unwrap_err();
        assert!(matches!(err, CoxError::InvalidArgument(_)));
    }
}
