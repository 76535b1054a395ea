//! The Cox ring of a simplicial complete toric variety: graded monomial
//! bases and exact polynomial arithmetic.
//!
//! The monomials of degree alpha correspond to lattice points of the
//! polyhedron P_a = { m : <m, v_rho> >= -a_rho } for any representative
//! divisor a of alpha; the exponent of x_rho at a point m is
//! <m, v_rho> + a_rho. On a complete fan P_a is bounded, so the basis is
//! enumerated from the vertices (basic feasible solutions) via a bounding
//! box. Different representatives of the same class give translated
//! polytopes, hence bases of equal size.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{CoxError, Result};
use crate::fan::{parse_class_literal, DivisorClass, Variety};
use crate::linalg::QMat;
use crate::{Int, Rat};

/// Exponent vector of a Cox monomial, indexed by ray.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    pub fn one(n_rays: usize) -> Monomial {
        Monomial {
            exponents: vec![0; n_rays],
        }
    }

    pub fn degree(&self, variety: &Variety) -> DivisorClass {
        let div: Vec<Int> = self.exponents.iter().map(|&e| Int::from(e)).collect();
        variety.class_of_divisor(&div)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of the given degree, in ascending exponent-lex order.
pub fn monomial_basis(variety: &Variety, alpha: &DivisorClass) -> Vec<Monomial> {
    let d = variety.dim();
    let r = variety.n_rays();
    let a = &alpha.representative;

    // Vertices of P_a: feasible basic solutions over d-subsets of rays.
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
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
        let rhs: Vec<Rat> = subset.iter().map(|&i| -Rat::from(a[i].clone())).collect();
        let point = m.solve_particular(&rhs).expect("full-rank square system");
        if (0..r).all(|rho| ray_value(variety, &point, rho) + Rat::from(a[rho].clone()) >= Rat::zero())
        {
            vertices.push(point);
        }
    }
    if vertices.is_empty() {
        return Vec::new();
    }

    let mut lo = vec![Int::zero(); d];
    let mut hi = vec![Int::zero(); d];
    for j in 0..d {
        let (mn, mx) = vertices
            .iter()
            .map(|v| &v[j])
            .minmax()
            .into_option()
            .unwrap();
        lo[j] = mn.ceil().to_integer();
        hi[j] = mx.floor().to_integer();
    }

    let mut out = Vec::new();
    let mut point = vec![Int::zero(); d];
    enumerate_box(variety, a, &lo, &hi, 0, &mut point, &mut out);
    out.sort_by(|a, b| a.exponents.cmp(&b.exponents));
    out
}

fn enumerate_box(
    variety: &Variety,
    a: &[Int],
    lo: &[Int],
    hi: &[Int],
    j: usize,
    point: &mut Vec<Int>,
    out: &mut Vec<Monomial>,
) {
    if j == lo.len() {
        let mut exps = Vec::with_capacity(variety.n_rays());
        for rho in 0..variety.n_rays() {
            let v: Int = variety
                .fan()
                .ray(rho)
                .iter()
                .zip(point.iter())
                .map(|(c, m)| c * m)
                .sum::<Int>()
                + &a[rho];
            if v.is_negative() {
                return;
            }
            exps.push(u32::try_from(&v).expect("exponent fits in u32"));
        }
        out.push(Monomial::new(exps));
        return;
    }
    let mut x = lo[j].clone();
    while x <= hi[j] {
        point[j] = x.clone();
        enumerate_box(variety, a, lo, hi, j + 1, point, out);
        x += 1;
    }
}

fn ray_value(variety: &Variety, point: &[Rat], rho: usize) -> Rat {
    variety
        .fan()
        .ray(rho)
        .iter()
        .zip(point)
        .map(|(c, m)| Rat::from(c.clone()) * m)
        .sum()
}

pub fn is_effective(variety: &Variety, alpha: &DivisorClass) -> bool {
    !monomial_basis(variety, alpha).is_empty()
}

/// Index lookup for a monomial basis, used to build coefficient vectors.
pub fn basis_index(basis: &[Monomial]) -> BTreeMap<Monomial, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}

/// Exact polynomial in the Cox ring, homogeneous for the class-group
/// grading. The zero polynomial keeps its degree tag.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedPolynomial {
    terms: BTreeMap<Monomial, Rat>,
    degree: DivisorClass,
}

impl GradedPolynomial {
    pub fn zero(degree: DivisorClass) -> GradedPolynomial {
        GradedPolynomial {
            terms: BTreeMap::new(),
            degree,
        }
    }

    pub fn from_monomial(variety: &Variety, m: Monomial, coeff: Rat) -> GradedPolynomial {
        let degree = m.degree(variety);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        GradedPolynomial { terms, degree }
    }

    /// Build from (monomial, coefficient) pairs, verifying homogeneity.
    pub fn from_terms(
        variety: &Variety,
        degree: DivisorClass,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> Result<GradedPolynomial> {
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            let found = m.degree(variety);
            if found != degree {
                return Err(CoxError::Inhomogeneous {
                    monomial: m.to_string(),
                    found: found.to_string(),
                    expected: degree.to_string(),
                });
            }
            let slot = map.entry(m).or_insert_with(Rat::zero);
            *slot += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(GradedPolynomial { terms: map, degree })
    }

    pub fn degree(&self) -> &DivisorClass {
        &self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &GradedPolynomial) -> Result<GradedPolynomial> {
        if self.degree != other.degree {
            return Err(CoxError::DegreeMismatch(format!(
                "cannot add degree {} to degree {}",
                other.degree, self.degree
            )));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *slot += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GradedPolynomial {
            terms,
            degree: self.degree.clone(),
        })
    }

    pub fn scale(&self, c: &Rat) -> GradedPolynomial {
        if c.is_zero() {
            return GradedPolynomial::zero(self.degree.clone());
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
            degree: self.degree.clone(),
        }
    }

    pub fn sub(&self, other: &GradedPolynomial) -> Result<GradedPolynomial> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &GradedPolynomial, variety: &Variety) -> GradedPolynomial {
        let degree = variety.add_classes(&self.degree, &other.degree);
        let mut terms: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let slot = terms.entry(m1.mul(m2)).or_insert_with(Rat::zero);
                *slot += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        GradedPolynomial { terms, degree }
    }

    pub fn mul_monomial(&self, m: &Monomial, variety: &Variety) -> GradedPolynomial {
        let degree = variety.add_classes(&self.degree, &m.degree(variety));
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
            degree,
        }
    }

    /// The logarithmic derivative x_rho d/dx_rho: scales each term by its
    /// exponent at rho. Degree is preserved.
    pub fn log_derivative(&self, rho: usize) -> GradedPolynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents[rho];
            if e != 0 {
                terms.insert(m.clone(), c * Rat::from(Int::from(e)));
            }
        }
        GradedPolynomial {
            terms,
            degree: self.degree.clone(),
        }
    }

    /// The plain partial derivative d/dx_rho: the degree drops by the
    /// class of the ray divisor. None when no term involves x_rho, since
    /// the zero polynomial would otherwise carry a possibly non-effective
    /// degree tag.
    pub fn derivative(&self, rho: usize, variety: &Variety) -> Option<GradedPolynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents[rho];
            if e != 0 {
                let mut exps = m.exponents.clone();
                exps[rho] -= 1;
                terms.insert(Monomial::new(exps), c * Rat::from(Int::from(e)));
            }
        }
        if terms.is_empty() {
            return None;
        }
        let degree = variety.sub_classes(&self.degree, &variety.ray_class(rho));
        Some(GradedPolynomial { terms, degree })
    }

    /// Dense coefficient vector over the given basis index. Errors if a
    /// term falls outside the basis (which would mean a degree mismatch).
    pub fn dense_coeffs(&self, index: &BTreeMap<Monomial, usize>, len: usize) -> Result<Vec<Rat>> {
        let mut out = vec![Rat::zero(); len];
        for (m, c) in &self.terms {
            let &i = index.get(m).ok_or_else(|| {
                CoxError::DegreeMismatch(format!("monomial {m} is not in the target basis"))
            })?;
            out[i] = c.clone();
        }
        Ok(out)
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.exponents.iter().all(|&e| e == 0);
            if mag.is_one() && !is_const {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

/// Parse inline polynomial text such as `x0^4 + x1^4 - 3/2 x0 x1 x2^2`.
/// Factors may be separated by whitespace or `*`. The degree is taken from
/// the first term and every other term must match it.
pub fn parse_polynomial(variety: &Variety, text: &str) -> Result<GradedPolynomial> {
    let mut term_texts: Vec<(Rat, String)> = Vec::new();
    let mut current = String::new();
    let mut sign = Rat::one();
    let mut chars = text.chars().peekable();
    let mut any = false;
    while let Some(ch) = chars.next() {
        match ch {
            '+' | '-' => {
                if any {
                    term_texts.push((sign.clone(), std::mem::take(&mut current)));
                }
                sign = if ch == '-' { -Rat::one() } else { Rat::one() };
                any = true;
            }
            _ => {
                current.push(ch);
                if !ch.is_whitespace() {
                    any = true;
                }
            }
        }
    }
    if any {
        term_texts.push((sign, current));
    }
    if term_texts.is_empty() {
        return Err(CoxError::InvalidArgument("empty polynomial text".into()));
    }

    let r = variety.n_rays();
    let mut parsed: Vec<(Monomial, Rat)> = Vec::new();
    for (sign, body) in term_texts {
        let (coeff, monomial) = parse_term(&body, r)?;
        parsed.push((monomial, sign * coeff));
    }
    let degree = parsed[0].0.degree(variety);
    GradedPolynomial::from_terms(variety, degree, parsed)
}

fn parse_term(body: &str, n_rays: usize) -> Result<(Rat, Monomial)> {
    let err = |msg: String| CoxError::InvalidArgument(format!("bad term `{}`: {msg}", body.trim()));
    let mut coeff = Rat::one();
    let mut exponents = vec![0u32; n_rays];
    let mut saw_factor = false;
    for tok in body.split(|c: char| c.is_whitespace() || c == '*') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        if let Some(rest) = tok.strip_prefix('x') {
            let (idx_text, exp_text) = match rest.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (rest, None),
            };
            let idx: usize = idx_text
                .parse()
                .map_err(|_| err(format!("bad variable `{tok}`")))?;
            if idx >= n_rays {
                return Err(err(format!("variable x{idx} out of range (r = {n_rays})")));
            }
            let exp: u32 = match exp_text {
                Some(e) => e.parse().map_err(|_| err(format!("bad exponent in `{tok}`")))?,
                None => 1,
            };
            exponents[idx] += exp;
            saw_factor = true;
        } else {
            let c = parse_rat(tok).ok_or_else(|| err(format!("bad coefficient `{tok}`")))?;
            coeff *= c;
            saw_factor = true;
        }
    }
    if !saw_factor {
        return Err(err("no factors".into()));
    }
    Ok((coeff, Monomial::new(exponents)))
}

pub(crate) fn parse_rat(text: &str) -> Option<Rat> {
    match text.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: Int = text.trim().parse().ok()?;
            Some(Rat::from(n))
        }
    }
}

/// Polynomial file format: a `poly class=<coords>` header, then one term
/// per line as `<num>[/<den>] : e_1 e_2 ... e_r`.
pub fn poly_from_str_format(variety: &Variety, text: &str) -> Result<GradedPolynomial> {
    let mut degree: Option<DivisorClass> = None;
    let mut terms: Vec<(Monomial, Rat)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| CoxError::Parse {
            line: lineno + 1,
            msg,
        };
        if let Some(rest) = line.strip_prefix("poly") {
            let rest = rest.trim();
            let class_text = rest
                .strip_prefix("class=")
                .ok_or_else(|| err("poly header needs class=<coords>".into()))?;
            degree = Some(parse_class_literal(variety, class_text)?);
            continue;
        }
        let (coeff_text, exp_text) = line
            .split_once(':')
            .ok_or_else(|| err("term line needs `<coeff> : <exponents>`".into()))?;
        let coeff =
            parse_rat(coeff_text).ok_or_else(|| err(format!("bad coefficient `{}`", coeff_text.trim())))?;
        let exps: std::result::Result<Vec<u32>, _> =
            exp_text.split_whitespace().map(|t| t.parse::<u32>()).collect();
        let exps = exps.map_err(|_| err("bad exponent".into()))?;
        if exps.len() != variety.n_rays() {
            return Err(err(format!(
                "term has {} exponents, expected {}",
                exps.len(),
                variety.n_rays()
            )));
        }
        terms.push((Monomial::new(exps), coeff));
    }
    let degree = degree.ok_or(CoxError::Parse {
        line: 0,
        msg: "missing poly header".into(),
    })?;
    GradedPolynomial::from_terms(variety, degree, terms)
}

pub fn poly_from_path(variety: &Variety, path: &Path) -> Result<GradedPolynomial> {
    let text = std::fs::read_to_string(path)?;
    poly_from_str_format(variety, &text)
}

pub fn poly_to_file_format(p: &GradedPolynomial) -> String {
    let mut out = format!("poly class={}\n", p.degree());
    for (m, c) in p.terms() {
        let coeff = if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        };
        let exps = m
            .exponents
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("{coeff} : {exps}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::testfans::*;
    use crate::rat;

    fn binom(n: u64, k: u64) -> usize {
        if k > n {
            return 0;
        }
        let mut v = 1u128;
        for i in 0..k {
            v = v * (n - i) as u128 / (i + 1) as u128;
        }
        v as usize
    }

    #[test]
    fn p3_quartic_basis_has_35_monomials() {
        let v = Variety::new(p3_fan()).unwrap();
        let four_h = v.scale_class(&v.ray_class(0), 4);
        let basis = monomial_basis(&v, &four_h);
        assert_eq!(basis.len(), 35);
        assert_eq!(basis.len(), binom(7, 3));
        // All exponent vectors sum to 4, ascending lex.
        for m in &basis {
            assert_eq!(m.total_degree(), 4);
        }
        for w in basis.windows(2) {
            assert!(w[0].exponents < w[1].exponents);
        }
    }

    #[test]
    fn p1xp2_bidegree_basis() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let alpha = v.anticanonical();
        let basis = monomial_basis(&v, &alpha);
        assert_eq!(basis.len(), binom(3, 1) * binom(5, 2));
    }

    #[test]
    fn degree_zero_basis_is_constant() {
        for fan in [p3_fan(), p1xp2_fan(), p112_fan()] {
            let v = Variety::new(fan).unwrap();
            let basis = monomial_basis(&v, &v.zero_class());
            assert_eq!(basis.len(), 1);
            assert!(basis[0].exponents.iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn non_effective_class_has_empty_basis() {
        let v = Variety::new(p3_fan()).unwrap();
        let minus_h = v.sub_classes(&v.zero_class(), &v.ray_class(0));
        assert!(monomial_basis(&v, &minus_h).is_empty());
        assert!(!is_effective(&v, &minus_h));
    }

    #[test]
    fn basis_size_is_representative_independent() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        // Two representatives of the same class.
        let a = v.class_of_divisor(&[2, 0, 3, 0, 0].map(Int::from));
        let b = v.class_of_divisor(&[0, 2, 1, 1, 1].map(Int::from));
        assert_eq!(a, b);
        let ba = monomial_basis(&v, &a);
        let bb = monomial_basis(&v, &b);
        assert_eq!(ba.len(), bb.len());
        assert_eq!(ba, bb, "exponent vectors do not depend on the representative");
    }

    #[test]
    fn weighted_basis_dimensions() {
        // P(1,1,2): dim of degree-k piece = #{(e0,e1,e2) : e0+e1+2e2 = k}.
        let v = Variety::new(p112_fan()).unwrap();
        let h = v.class_from_coords(&[Int::one()], &[]).unwrap();
        for k in 0..8i64 {
            let alpha = v.scale_class(&h, k);
            let expect = (0..=k)
                .filter(|e2| e2 * 2 <= k)
                .map(|e2| (k - 2 * e2 + 1) as usize)
                .sum::<usize>();
            assert_eq!(monomial_basis(&v, &alpha).len(), expect, "degree {k}");
        }
    }

    #[test]
    fn multiply_and_log_derivative() {
        let v = Variety::new(p3_fan()).unwrap();
        let f = parse_polynomial(&v, "x0^3").unwrap();
        let d0 = f.log_derivative(0);
        assert_eq!(d0.coeff(&Monomial::new(vec![3, 0, 0, 0])), rat(3, 1));
        assert!(f.log_derivative(1).is_zero());

        let g = parse_polynomial(&v, "x0 + x1").unwrap();
        let h = g.mul(&g, &v);
        assert_eq!(h.coeff(&Monomial::new(vec![1, 1, 0, 0])), rat(2, 1));
        assert_eq!(h.n_terms(), 3);
        assert_eq!(h.degree(), &v.scale_class(&v.ray_class(0), 2));
    }

    #[test]
    fn multiplication_is_commutative_and_associative() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let f = parse_polynomial(&v, "x0 x2 + 2 x1 x3").unwrap();
        let g = parse_polynomial(&v, "x2 + x3 + x4").unwrap();
        let h = parse_polynomial(&v, "x0 - 1/3 x1").unwrap();
        assert_eq!(f.mul(&g, &v), g.mul(&f, &v));
        assert_eq!(f.mul(&g, &v).mul(&h, &v), f.mul(&g.mul(&h, &v), &v));
    }

    #[test]
    fn euler_identity_on_projective_space() {
        // On P^n the log derivatives sum to (total degree) * f.
        let v = Variety::new(p3_fan()).unwrap();
        let f = parse_polynomial(&v, "x0^4 + 2 x0 x1 x2 x3 - 5/7 x2^2 x3^2").unwrap();
        let mut sum = GradedPolynomial::zero(f.degree().clone());
        for rho in 0..4 {
            sum = sum.add(&f.log_derivative(rho)).unwrap();
        }
        assert_eq!(sum, f.scale(&rat(4, 1)));
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let v = Variety::new(p3_fan()).unwrap();
        let e = parse_polynomial(&v, "x0^2 + x1").unwrap_err();
        match e {
            CoxError::Inhomogeneous { monomial, .. } => assert_eq!(monomial, "x1"),
            other => panic!("expected Inhomogeneous, got {other}"),
        }
    }

    #[test]
    fn poly_file_roundtrip() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let f = parse_polynomial(&v, "x0^2 x2^3 - 7/3 x0 x1 x2 x3 x4 + x1^2 x4^3").unwrap();
        let text = poly_to_file_format(&f);
        let g = poly_from_str_format(&v, &text).unwrap();
        assert_eq!(f, g);
        assert!(text.starts_with("poly class=2,3\n"));
    }

    #[test]
    fn parse_rejects_wrong_class_header() {
        let v = Variety::new(p3_fan()).unwrap();
        let text = "poly class=3\n1 : 4 0 0 0\n";
        assert!(poly_from_str_format(&v, text).is_err());
    }

    #[test]
    fn display_is_parseable() {
        let v = Variety::new(p3_fan()).unwrap();
        let f = parse_polynomial(&v, "x0^4 - x1^4 + 1/2 x2^2 x3^2").unwrap();
        let g = parse_polynomial(&v, &f.to_string()).unwrap();
        assert_eq!(f, g);
    }
}
