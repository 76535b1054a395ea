//! Graded ideals of the Cox ring.
//!
//! A graded piece I^alpha is the span of g_i * S^(alpha - deg g_i) inside
//! S^alpha. Pieces are exposed in a canonical reduced-echelon basis, so two
//! subspaces are equal exactly when their basis matrices are equal. The
//! emptiness certificate bounds the toric zero locus: if for every maximal
//! cone sigma some power of the off-cone variable product lies in I, then
//! V(I) misses every torus orbit, i.e. V(I) is empty in P_Sigma.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_traits::Zero;

use crate::cox::{basis_index, monomial_basis, poly_from_str_format, GradedPolynomial, Monomial};
use crate::error::{CoxError, Result};
use crate::fan::{DivisorClass, Variety};
use crate::linalg::{span_canonical_basis, SparseCols, SpanAnalysis};
use crate::Rat;

#[derive(Clone, Debug)]
pub struct GradedIdeal {
    generators: Vec<GradedPolynomial>,
}

impl GradedIdeal {
    /// Generators keep their order; zero generators are retained (their
    /// degree tag still matters for reporting).
    pub fn new(generators: Vec<GradedPolynomial>) -> GradedIdeal {
        GradedIdeal { generators }
    }

    pub fn generators(&self) -> &[GradedPolynomial] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.n_terms() <= 1)
    }

    pub fn graded_piece(&self, variety: &Variety, alpha: &DivisorClass) -> SubspaceOfDegree {
        let data = PieceData::build(variety, &self.generators, alpha);
        let basis = span_canonical_basis(&data.cols, &data.analysis);
        SubspaceOfDegree {
            degree: alpha.clone(),
            ambient_dim: data.basis.len(),
            basis,
        }
    }

    /// dim S^alpha - dim I^alpha, without materializing a basis.
    pub fn quotient_dim(&self, variety: &Variety, alpha: &DivisorClass) -> usize {
        let data = PieceData::build(variety, &self.generators, alpha);
        data.basis.len() - data.analysis.rank
    }

    pub fn contains(&self, variety: &Variety, g: &GradedPolynomial) -> bool {
        if g.is_zero() {
            return true;
        }
        let data = PieceData::build(variety, &self.generators, g.degree());
        let dense = match g.dense_coeffs(&data.index, data.basis.len()) {
            Ok(v) => v,
            Err(_) => return false,
        };
        data.cols.member_with(&data.analysis, &dense)
    }

    /// For each maximal cone, the least power m <= m_max with
    /// (prod_{rho not in sigma} x_rho)^m in the ideal. Success on every
    /// cone certifies that the toric zero locus is empty; any failure is
    /// inconclusive, never a nonemptiness claim.
    pub fn emptiness_certificate(&self, variety: &Variety, m_max: u32) -> EmptinessReport {
        let monomial_exps: Option<Vec<Vec<u32>>> = if self.is_monomial() {
            Some(
                self.generators
                    .iter()
                    .filter(|g| !g.is_zero())
                    .map(|g| g.terms().next().unwrap().0.exponents.clone())
                    .collect(),
            )
        } else {
            None
        };
        let cones = (0..variety.fan().max_cones().len())
            .map(|sigma| {
                let complement = variety.fan().cone_complement(sigma);
                let member = |m: u32| -> bool {
                    let mut exps = vec![0u32; variety.n_rays()];
                    for &rho in &complement {
                        exps[rho] = m;
                    }
                    match &monomial_exps {
                        Some(gens) => gens
                            .iter()
                            .any(|g| g.iter().zip(&exps).all(|(ge, ye)| ge <= ye)),
                        None => {
                            let y = Monomial::new(exps);
                            let alpha = y.degree(variety);
                            let data = PieceData::build(variety, &self.generators, &alpha);
                            let mut dense = vec![Rat::zero(); data.basis.len()];
                            match data.index.get(&y) {
                                Some(&i) => dense[i] = Rat::from(crate::Int::from(1)),
                                None => return false,
                            }
                            data.cols.member_with(&data.analysis, &dense)
                        }
                    }
                };
                // Membership is monotone in m, so gallop then bisect; the
                // cost stays proportional to the answer, not to m_max.
                let power = least_true(member, m_max);
                ConePower {
                    cone: sigma,
                    complement,
                    power,
                }
            })
            .collect::<Vec<_>>();
        let certified = cones.iter().all(|c| c.power.is_some());
        EmptinessReport {
            m_max,
            cones,
            certified,
        }
    }

    /// A generous certificate budget: twice the summed total degree of the
    /// generators, at least 4.
    pub fn default_m_max(&self) -> u32 {
        let total: u64 = self
            .generators
            .iter()
            .flat_map(|g| g.terms().next().map(|(m, _)| m.total_degree()))
            .sum();
        (2 * total).max(4) as u32
    }
}

/// Least m in 1..=m_max with f(m) true, for monotone f.
fn least_true(f: impl Fn(u32) -> bool, m_max: u32) -> Option<u32> {
    let mut hi = 1u32;
    let mut lo = 0u32; // f(lo) known false (or lo = 0)
    loop {
        if hi >= m_max {
            hi = m_max;
            if !f(hi) {
                return None;
            }
            break;
        }
        if f(hi) {
            break;
        }
        lo = hi;
        hi = (hi * 2).min(m_max);
    }
    // f(hi) true, f(lo) false: bisect.
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if f(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// The toric Jacobian ideal: generated by the log derivatives
/// x_rho df/dx_rho, all in the degree of f. Zero generators are kept.
pub fn jacobian_ideal(f: &GradedPolynomial, variety: &Variety) -> GradedIdeal {
    GradedIdeal::new(
        (0..variety.n_rays())
            .map(|rho| f.log_derivative(rho))
            .collect(),
    )
}

/// The ideal of the plain partial derivatives df/dx_rho, identically
/// zero ones dropped. For a nondegenerate hypersurface its quotient at
/// (q+1)*beta - beta_0 computes the primitive Hodge pieces, which the
/// toric Jacobian quotient overcounts.
pub fn partials_ideal(f: &GradedPolynomial, variety: &Variety) -> GradedIdeal {
    GradedIdeal::new(
        (0..variety.n_rays())
            .filter_map(|rho| f.derivative(rho, variety))
            .collect(),
    )
}

/// Quasi-smoothness proxy: emptiness certificate for (f) + J0(f).
pub fn nondegenerate_check(
    variety: &Variety,
    f: &GradedPolynomial,
    m_max: Option<u32>,
) -> EmptinessReport {
    let mut gens = vec![f.clone()];
    gens.extend((0..variety.n_rays()).map(|rho| f.log_derivative(rho)));
    let ideal = GradedIdeal::new(gens);
    let m_max = m_max.unwrap_or_else(|| ideal.default_m_max());
    ideal.emptiness_certificate(variety, m_max)
}

#[derive(Clone, Debug)]
pub struct ConePower {
    pub cone: usize,
    pub complement: Vec<usize>,
    pub power: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct EmptinessReport {
    pub m_max: u32,
    pub cones: Vec<ConePower>,
    pub certified: bool,
}

impl fmt::Display for EmptinessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cones {
            let rays = c
                .complement
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",");
            match c.power {
                Some(m) => writeln!(f, "cone={} complement={rays} power={m}", c.cone)?,
                None => writeln!(f, "cone={} complement={rays} power=none", c.cone)?,
            }
        }
        write!(f, "certified={} m_max={}", self.certified, self.m_max)
    }
}

/// A graded piece presented over the monomial basis of its degree, in
/// reduced column echelon form. Equality of subspaces is equality of these
/// matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceOfDegree {
    pub degree: DivisorClass,
    pub ambient_dim: usize,
    /// Canonical basis vectors, each dense over monomial_basis(degree).
    pub basis: Vec<Vec<Rat>>,
}

impl SubspaceOfDegree {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn full(degree: DivisorClass, n: usize) -> SubspaceOfDegree {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![Rat::zero(); n];
                v[i] = Rat::from(crate::Int::from(1));
                v
            })
            .collect();
        SubspaceOfDegree {
            degree,
            ambient_dim: n,
            basis,
        }
    }

    pub fn zero_space(degree: DivisorClass, n: usize) -> SubspaceOfDegree {
        SubspaceOfDegree {
            degree,
            ambient_dim: n,
            basis: Vec::new(),
        }
    }

    /// Remainder of `v` after reduction against the echelon basis; zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rem = v.to_vec();
        for b in &self.basis {
            let lead = b.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
            if !rem[lead].is_zero() {
                let c = rem[lead].clone() / b[lead].clone();
                for (r, x) in rem.iter_mut().zip(b) {
                    if !x.is_zero() {
                        *r -= &c * x;
                    }
                }
            }
        }
        rem
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &SubspaceOfDegree) -> bool {
        self.basis.iter().all(|v| other.contains_vector(v))
    }
}

/// Shared piece assembly: the multiplication columns of an ideal in one
/// degree, their certified span analysis, and the ambient monomial basis.
pub(crate) struct PieceData {
    pub basis: Vec<Monomial>,
    pub index: BTreeMap<Monomial, usize>,
    pub cols: SparseCols,
    pub analysis: SpanAnalysis,
}

impl PieceData {
    pub fn build(variety: &Variety, gens: &[GradedPolynomial], alpha: &DivisorClass) -> PieceData {
        let basis = monomial_basis(variety, alpha);
        let index = basis_index(&basis);
        let mut cols = SparseCols::new(basis.len());
        for g in gens {
            if g.is_zero() || basis.is_empty() {
                continue;
            }
            let gamma = variety.sub_classes(alpha, g.degree());
            for m in monomial_basis(variety, &gamma) {
                let mut dense = vec![Rat::zero(); basis.len()];
                for (t, c) in g.terms() {
                    let key = t.mul(&m);
                    let i = *index
                        .get(&key)
                        .expect("product monomial lies in the target degree");
                    dense[i] = c.clone();
                }
                cols.push_dense_rat_col(&dense);
            }
        }
        let analysis = cols.analyze();
        PieceData {
            basis,
            index,
            cols,
            analysis,
        }
    }
}

/// Ideal file format: an `ideal n=<count>` header followed by that many
/// polynomial blocks, each introduced by its own `poly class=` header.
pub fn ideal_from_str_format(variety: &Variety, text: &str) -> Result<GradedIdeal> {
    let mut declared: Option<usize> = None;
    let mut blocks: Vec<String> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ideal") {
            let rest = rest.trim();
            let n_text = rest.strip_prefix("n=").ok_or(CoxError::Parse {
                line: lineno + 1,
                msg: "ideal header needs n=<count>".into(),
            })?;
            declared = Some(n_text.parse().map_err(|_| CoxError::Parse {
                line: lineno + 1,
                msg: format!("bad generator count `{n_text}`"),
            })?);
            continue;
        }
        if line.starts_with("poly") {
            blocks.push(String::new());
        }
        match blocks.last_mut() {
            Some(b) => {
                b.push_str(line);
                b.push('\n');
            }
            None => {
                return Err(CoxError::Parse {
                    line: lineno + 1,
                    msg: "term line before any poly header".into(),
                })
            }
        }
    }
    let declared = declared.ok_or(CoxError::Parse {
        line: 0,
        msg: "missing ideal header".into(),
    })?;
    if blocks.len() != declared {
        return Err(CoxError::Parse {
            line: 0,
            msg: format!(
                "ideal header announced {declared} generators, found {}",
                blocks.len()
            ),
        });
    }
    let gens: Result<Vec<GradedPolynomial>> = blocks
        .iter()
        .map(|b| poly_from_str_format(variety, b))
        .collect();
    Ok(GradedIdeal::new(gens?))
}

pub fn ideal_from_path(variety: &Variety, path: &Path) -> Result<GradedIdeal> {
    let text = std::fs::read_to_string(path)?;
    ideal_from_str_format(variety, &text)
}

pub fn ideal_to_file_format(ideal: &GradedIdeal) -> String {
    let mut out = format!("ideal n={}\n", ideal.generators().len());
    for g in ideal.generators() {
        out.push_str(&crate::cox::poly_to_file_format(g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cox::parse_polynomial;
    use crate::fan::testfans::*;
    use crate::Int;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn p3() -> Variety {
        Variety::new(p3_fan()).unwrap()
    }

    fn h_class(v: &Variety, k: i64) -> DivisorClass {
        v.scale_class(&v.ray_class(0), k)
    }

    fn fermat4(v: &Variety) -> GradedPolynomial {
        parse_polynomial(v, "x0^4 + x1^4 + x2^4 + x3^4").unwrap()
    }

    #[test]
    fn fermat_jacobian_piece_dimensions() {
        let v = p3();
        let j = jacobian_ideal(&fermat4(&v), &v);
        assert_eq!(j.generators().len(), 4);
        assert_eq!(j.graded_piece(&v, &h_class(&v, 4)).dim(), 4);
        assert_eq!(j.graded_piece(&v, &h_class(&v, 3)).dim(), 0);
        assert_eq!(j.quotient_dim(&v, &h_class(&v, 12)), 1);
        assert_eq!(j.quotient_dim(&v, &h_class(&v, 13)), 0);
        assert_eq!(j.quotient_dim(&v, &v.zero_class()), 1);
    }

    #[test]
    fn fermat_quotient_matches_hilbert_series() {
        // S/J for a quartic regular sequence in 4 variables has Hilbert
        // series ((1 - t^4)/(1 - t))^4 = (1 + t + t^2 + t^3)^4.
        let mut series = vec![0usize; 17];
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        series[a + b + c + d] += 1;
                    }
                }
            }
        }
        let v = p3();
        let j = jacobian_ideal(&fermat4(&v), &v);
        for k in 0..=14 {
            assert_eq!(
                j.quotient_dim(&v, &h_class(&v, k as i64)),
                series.get(k).copied().unwrap_or(0),
                "degree {k}"
            );
        }
    }

    #[test]
    fn principal_ideal_pieces() {
        let v = p3();
        let i = GradedIdeal::new(vec![parse_polynomial(&v, "x0").unwrap()]);
        assert_eq!(i.graded_piece(&v, &h_class(&v, 1)).dim(), 1);
        // dim (x0)^k = dim S^(k-1) = C(k+2, 3).
        assert_eq!(i.graded_piece(&v, &h_class(&v, 3)).dim(), 10);
        assert!(i.contains(&v, &parse_polynomial(&v, "x0^2 x1 + x0 x2^2").unwrap()));
        assert!(!i.contains(&v, &parse_polynomial(&v, "x1^3").unwrap()));
    }

    #[test]
    fn piece_is_canonical_under_generator_reordering() {
        let v = p3();
        let f = fermat4(&v);
        let gens: Vec<GradedPolynomial> = (0..4).map(|rho| f.log_derivative(rho)).collect();
        let reference = GradedIdeal::new(gens.clone()).graded_piece(&v, &h_class(&v, 6));
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for _ in 0..10 {
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            let piece = GradedIdeal::new(shuffled).graded_piece(&v, &h_class(&v, 6));
            assert_eq!(piece, reference);
        }
    }

    #[test]
    fn zero_generators_are_retained() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^4").unwrap();
        let j = jacobian_ideal(&f, &v);
        assert_eq!(j.generators().len(), 4);
        assert_eq!(j.generators().iter().filter(|g| g.is_zero()).count(), 3);
        assert_eq!(j.graded_piece(&v, &h_class(&v, 4)).dim(), 1);
    }

    #[test]
    fn emptiness_certificate_for_fermat_jacobian() {
        let v = p3();
        let j = jacobian_ideal(&fermat4(&v), &v);
        let report = j.emptiness_certificate(&v, j.default_m_max());
        assert!(report.certified);
        for c in &report.cones {
            assert_eq!(c.power, Some(4));
            assert_eq!(c.complement.len(), 1);
        }
    }

    #[test]
    fn emptiness_fails_for_principal_ideal() {
        let v = p3();
        let i = GradedIdeal::new(vec![parse_polynomial(&v, "x0").unwrap()]);
        let report = i.emptiness_certificate(&v, 8);
        assert!(!report.certified);
        for c in &report.cones {
            // Only the cone whose complement is ray 0 can succeed; the
            // cones containing ray 0 ask for powers of other variables.
            if c.complement == vec![0] {
                assert_eq!(c.power, Some(1));
            } else {
                assert_eq!(c.power, None);
            }
        }
    }

    #[test]
    fn irrelevant_ideal_certifies_at_power_one() {
        let v = p3();
        let gens = (0..4)
            .map(|i| parse_polynomial(&v, &format!("x{i}")).unwrap())
            .collect();
        let report = GradedIdeal::new(gens).emptiness_certificate(&v, 4);
        assert!(report.certified);
        assert!(report.cones.iter().all(|c| c.power == Some(1)));
    }

    #[test]
    fn degenerate_square_is_inconclusive() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^2 x1^2").unwrap();
        let report = nondegenerate_check(&v, &f, Some(20));
        assert!(!report.certified);
    }

    #[test]
    fn nondegenerate_check_certifies_fermat() {
        let v = p3();
        let report = nondegenerate_check(&v, &fermat4(&v), None);
        assert!(report.certified);
    }

    #[test]
    fn smooth_biquadric_on_p1xp1_certifies() {
        let v = Variety::new(p1xp1_fan()).unwrap();
        // A (2,2) curve with no singular points on any torus orbit.
        let f = parse_polynomial(
            &v,
            "x0^2 x2^2 + 2 x1^2 x3^2 + 3 x0^2 x3^2 + 5 x1^2 x2^2 + 7 x0 x1 x2 x3",
        )
        .unwrap();
        let report = nondegenerate_check(&v, &f, None);
        assert!(report.certified, "{report}");
    }

    #[test]
    fn nonmonomial_membership_route() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^2 + x1 x2").unwrap();
        let i = GradedIdeal::new(vec![f.clone()]);
        let g = f.mul(&parse_polynomial(&v, "x3^2 + x0 x1").unwrap(), &v);
        assert!(i.contains(&v, &g));
        assert!(!i.contains(&v, &parse_polynomial(&v, "x0^4").unwrap()));
        assert!(!i.is_monomial());
    }

    #[test]
    fn subspace_membership_and_inclusion() {
        let v = p3();
        let f = fermat4(&v);
        let j = jacobian_ideal(&f, &v);
        let piece = j.graded_piece(&v, &h_class(&v, 8));
        let smaller = GradedIdeal::new(vec![f.log_derivative(0)]).graded_piece(&v, &h_class(&v, 8));
        assert!(smaller.is_subspace_of(&piece));
        assert!(!piece.is_subspace_of(&smaller));
    }

    #[test]
    fn ideal_file_roundtrip() {
        let v = p3();
        let j = jacobian_ideal(&fermat4(&v), &v);
        let text = ideal_to_file_format(&j);
        let back = ideal_from_str_format(&v, &text).unwrap();
        assert_eq!(back.generators().len(), 4);
        for (a, b) in j.generators().iter().zip(back.generators()) {
            assert_eq!(a, b);
        }
        assert!(text.starts_with("ideal n=4\n"));
    }

    #[test]
    fn quotient_dim_uses_int_degree() {
        let v = p3();
        let j = jacobian_ideal(&fermat4(&v), &v);
        let twelve = v.class_from_coords(&[Int::from(12)], &[]).unwrap();
        assert_eq!(j.quotient_dim(&v, &twelve), 1);
    }
}
