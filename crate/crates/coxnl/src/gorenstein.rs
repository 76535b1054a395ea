//! Macaulay-style duality for Cox-Gorenstein ideals.
//!
//! An ideal I with one-dimensional quotient in its socle degree N carries a
//! unique (up to scale) functional L on S^N vanishing on I^N. The ideal is
//! Cox-Gorenstein exactly when every graded piece is cut out by apolarity
//! with respect to L:  I^alpha = { f : L(f g) = 0 for all g in S^(N-alpha) }.
//! The verifier checks the socle dimension, that identity for every degree
//! alpha with both alpha and N - alpha effective, and an emptiness
//! certificate for the toric zero locus.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::cox::{basis_index, monomial_basis, GradedPolynomial, Monomial};
use crate::error::{CoxError, Result};
use crate::fan::{DivisorClass, Fan, Variety};
use crate::ideal::{EmptinessReport, GradedIdeal, PieceData, SubspaceOfDegree};
use crate::linalg::{leading_coords, QMat, ZMat};
use crate::{Int, Rat};

/// Determinants of the ray matrices over ascending d-subsets of rays; the
/// coefficients of the toric Euler form.
#[derive(Clone, Debug)]
pub struct EulerForm {
    pub dets: BTreeMap<Vec<usize>, Int>,
}

pub fn euler_coefficients(fan: &Fan) -> EulerForm {
    use itertools::Itertools;
    let d = fan.dim();
    let mut dets = BTreeMap::new();
    for subset in (0..fan.n_rays()).combinations(d) {
        let m = ZMat::from_rows(subset.iter().map(|&i| fan.ray(i).to_vec()).collect());
        dets.insert(subset, m.det());
    }
    EulerForm { dets }
}

/// The unique normalized functional on S^N vanishing on I^N, when the
/// quotient there is one-dimensional. Coefficients are indexed by
/// monomial_basis(N) and scaled so the first nonzero one equals 1.
#[derive(Clone, Debug)]
pub struct SocleFunctional {
    pub socle_degree: DivisorClass,
    pub basis: Vec<Monomial>,
    pub coefficients: Vec<Rat>,
    index: BTreeMap<Monomial, usize>,
}

impl SocleFunctional {
    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.index
            .get(m)
            .map(|&i| self.coefficients[i].clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Evaluate on a polynomial of the socle degree.
    pub fn apply(&self, f: &GradedPolynomial) -> Result<Rat> {
        if f.degree() != &self.socle_degree {
            return Err(CoxError::DegreeMismatch(format!(
                "functional lives in degree {}, polynomial in {}",
                self.socle_degree,
                f.degree()
            )));
        }
        let mut acc = Rat::zero();
        for (m, c) in f.terms() {
            let i = self.index.get(m).expect("monomial of the socle degree");
            acc += c * &self.coefficients[*i];
        }
        Ok(acc)
    }
}

pub fn socle_functional(
    variety: &Variety,
    ideal: &GradedIdeal,
    n_degree: &DivisorClass,
) -> Result<SocleFunctional> {
    let data = PieceData::build(variety, ideal.generators(), n_degree);
    let corank = data.basis.len() - data.analysis.rank;
    if corank != 1 {
        return Err(CoxError::SocleDimension { actual: corank });
    }
    let lam = &data.analysis.ann[0];
    let lead = lam
        .iter()
        .position(|x| !x.is_zero())
        .expect("annihilator vector is nonzero");
    let scale = Rat::from(lam[lead].clone());
    let coefficients: Vec<Rat> = lam.iter().map(|x| Rat::from(x.clone()) / &scale).collect();
    Ok(SocleFunctional {
        socle_degree: n_degree.clone(),
        index: basis_index(&data.basis),
        basis: data.basis,
        coefficients,
    })
}

/// The apolar subspace { f in S^alpha : L(f g) = 0 for all g }. When
/// N - alpha is not effective there are no conditions and the piece is all
/// of S^alpha; `vacuous` flags that case.
pub struct ApolarPiece {
    pub space: SubspaceOfDegree,
    pub vacuous: bool,
}

pub fn apolar_piece(
    variety: &Variety,
    functional: &SocleFunctional,
    alpha: &DivisorClass,
) -> ApolarPiece {
    let basis_a = monomial_basis(variety, alpha);
    let gamma = variety.sub_classes(&functional.socle_degree, alpha);
    let basis_g = monomial_basis(variety, &gamma);
    if basis_g.is_empty() {
        return ApolarPiece {
            space: SubspaceOfDegree::full(alpha.clone(), basis_a.len()),
            vacuous: true,
        };
    }
    // Condition matrix: rows by g, columns by f, entry L(f g).
    let mut rows = Vec::with_capacity(basis_g.len());
    for g in &basis_g {
        rows.push(
            basis_a
                .iter()
                .map(|f| functional.coefficient(&f.mul(g)))
                .collect::<Vec<Rat>>(),
        );
    }
    let m = QMat::from_rows(rows);
    let basis = m.kernel_basis();
    ApolarPiece {
        space: SubspaceOfDegree {
            degree: alpha.clone(),
            ambient_dim: basis_a.len(),
            basis,
        },
        vacuous: false,
    }
}

/// Monomials spanning S^alpha / I^alpha: the complement of the leading
/// coordinates of the canonical basis of I^alpha.
pub fn quotient_monomials(
    variety: &Variety,
    ideal: &GradedIdeal,
    alpha: &DivisorClass,
) -> Vec<Monomial> {
    let piece = ideal.graded_piece(variety, alpha);
    let basis = monomial_basis(variety, alpha);
    let leading: BTreeSet<usize> = leading_coords(&piece.basis).into_iter().collect();
    basis
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !leading.contains(i))
        .map(|(_, m)| m)
        .collect()
}

/// The multiplication pairing S^alpha/I^alpha x S^(N-alpha)/I^(N-alpha) -> k
/// through L, on the standard-monomial bases of the two quotients.
pub struct PairingReport {
    pub matrix: QMat,
    pub row_monomials: Vec<Monomial>,
    pub col_monomials: Vec<Monomial>,
    pub nondegenerate: bool,
}

pub fn pairing_matrix(
    variety: &Variety,
    ideal: &GradedIdeal,
    functional: &SocleFunctional,
    alpha: &DivisorClass,
) -> PairingReport {
    let gamma = variety.sub_classes(&functional.socle_degree, alpha);
    let rows = quotient_monomials(variety, ideal, alpha);
    let cols = quotient_monomials(variety, ideal, &gamma);
    let matrix = QMat::from_rows(
        rows.iter()
            .map(|a| {
                cols.iter()
                    .map(|b| functional.coefficient(&a.mul(b)))
                    .collect()
            })
            .collect(),
    );
    let rank = if rows.is_empty() || cols.is_empty() {
        0
    } else {
        matrix.rank()
    };
    PairingReport {
        nondegenerate: rank == rows.len() && rank == cols.len(),
        matrix,
        row_monomials: rows,
        col_monomials: cols,
    }
}

#[derive(Clone, Debug)]
pub struct AlphaRow {
    pub alpha: DivisorClass,
    pub ideal_dim: usize,
    pub apolar_dim: usize,
    pub equal: bool,
}

pub struct GorensteinReport {
    pub socle_dim: usize,
    pub socle_ok: bool,
    pub rows: Vec<AlphaRow>,
    pub emptiness: EmptinessReport,
    pub first_failure: Option<DivisorClass>,
    pub pass: bool,
}

impl fmt::Display for GorensteinReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "socle_dim={} ok={}", self.socle_dim, self.socle_ok)?;
        for row in &self.rows {
            writeln!(
                f,
                "alpha={} ideal_dim={} apolar_dim={} equal={}",
                row.alpha, row.ideal_dim, row.apolar_dim, row.equal
            )?;
        }
        writeln!(f, "emptiness_certified={}", self.emptiness.certified)?;
        write!(f, "verdict={}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Every class alpha with alpha and N - alpha both effective: exactly the
/// classes of componentwise sub-vectors of exponents of S^N monomials.
pub fn effective_splittings(variety: &Variety, n_degree: &DivisorClass) -> Vec<DivisorClass> {
    let mut seen: BTreeMap<(Vec<Int>, Vec<Int>), DivisorClass> = BTreeMap::new();
    for m in monomial_basis(variety, n_degree) {
        let exps = m.exponents;
        let mut sub = vec![0u32; exps.len()];
        loop {
            let div: Vec<Int> = sub.iter().map(|&e| Int::from(e)).collect();
            let class = variety.class_of_divisor(&div);
            seen.entry((class.free.clone(), class.torsion.clone()))
                .or_insert(class);
            // Odometer over 0..=exps componentwise.
            let mut k = 0;
            loop {
                if k == sub.len() {
                    break;
                }
                if sub[k] < exps[k] {
                    sub[k] += 1;
                    break;
                }
                sub[k] = 0;
                k += 1;
            }
            if k == sub.len() {
                break;
            }
        }
    }
    seen.into_values().collect()
}

pub fn verify_cox_gorenstein(
    variety: &Variety,
    ideal: &GradedIdeal,
    n_degree: &DivisorClass,
    m_max: Option<u32>,
) -> GorensteinReport {
    let m_max = m_max.unwrap_or_else(|| ideal.default_m_max());
    let emptiness = ideal.emptiness_certificate(variety, m_max);
    let functional = socle_functional(variety, ideal, n_degree);
    let (socle_dim, functional) = match functional {
        Ok(l) => (1, Some(l)),
        Err(CoxError::SocleDimension { actual }) => (actual, None),
        Err(_) => unreachable!("socle_functional only fails on dimension"),
    };
    let socle_ok = socle_dim == 1;
    let mut rows = Vec::new();
    let mut first_failure = None;
    if let Some(l) = &functional {
        for alpha in effective_splittings(variety, n_degree) {
            let ideal_piece = ideal.graded_piece(variety, &alpha);
            let apolar = apolar_piece(variety, l, &alpha);
            let equal = ideal_piece == apolar.space;
            if !equal && first_failure.is_none() {
                first_failure = Some(alpha.clone());
            }
            rows.push(AlphaRow {
                alpha,
                ideal_dim: ideal_piece.dim(),
                apolar_dim: apolar.space.dim(),
                equal,
            });
        }
    }
    let pass = socle_ok && emptiness.certified && rows.iter().all(|r| r.equal);
    GorensteinReport {
        socle_dim,
        socle_ok,
        rows,
        emptiness,
        first_failure,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cox::parse_polynomial;
    use crate::fan::testfans::*;
    use crate::ideal::jacobian_ideal;
    use crate::rat;

    fn p3() -> Variety {
        Variety::new(p3_fan()).unwrap()
    }

    fn p2() -> Variety {
        Variety::new(p2_fan()).unwrap()
    }

    fn h(v: &Variety, k: i64) -> DivisorClass {
        v.scale_class(&v.ray_class(0), k)
    }

    #[test]
    fn euler_coefficients_on_p2() {
        let form = euler_coefficients(&p2_fan());
        assert_eq!(form.dets[&vec![0, 1]], Int::from(1));
        assert_eq!(form.dets[&vec![0, 2]], Int::from(-1));
        assert_eq!(form.dets[&vec![1, 2]], Int::from(1));
    }

    #[test]
    fn euler_coefficients_on_p1xp1() {
        let form = euler_coefficients(&p1xp1_fan());
        // Parallel rays give zero, transverse pairs give +-1.
        assert_eq!(form.dets[&vec![0, 1]], Int::from(0));
        assert_eq!(form.dets[&vec![2, 3]], Int::from(0));
        assert_eq!(form.dets[&vec![0, 2]], Int::from(1));
        assert_eq!(form.dets[&vec![0, 3]], Int::from(-1));
        assert_eq!(form.dets[&vec![1, 2]], Int::from(-1));
        assert_eq!(form.dets[&vec![1, 3]], Int::from(1));
    }

    #[test]
    fn fermat_socle_functional_is_dual_to_central_monomial() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^4 + x1^4 + x2^4 + x3^4").unwrap();
        let j = jacobian_ideal(&f, &v);
        let l = socle_functional(&v, &j, &h(&v, 12)).unwrap();
        let central = Monomial::new(vec![3, 3, 3, 3]);
        assert_eq!(l.coefficient(&central), rat(1, 1));
        let nonzero: Vec<&Monomial> = l
            .basis
            .iter()
            .zip(&l.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| m)
            .collect();
        assert_eq!(nonzero, vec![&central]);
        // Vanishes on the ideal piece.
        let g = f
            .log_derivative(0)
            .mul(&parse_polynomial(&v, "x1^3 x2^3 x3^2").unwrap(), &v);
        assert_eq!(l.apply(&g).unwrap(), rat(0, 1));
    }

    #[test]
    fn socle_dimension_errors_carry_the_actual_dim() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^4 + x1^4 + x2^4 + x3^4").unwrap();
        let j = jacobian_ideal(&f, &v);
        match socle_functional(&v, &j, &h(&v, 13)) {
            Err(CoxError::SocleDimension { actual }) => assert_eq!(actual, 0),
            other => panic!("expected dimension error, got {other:?}"),
        }
        match socle_functional(&v, &j, &h(&v, 11)) {
            Err(CoxError::SocleDimension { actual }) => assert_eq!(actual, 4),
            other => panic!("expected dimension error, got {other:?}"),
        }
    }

    #[test]
    fn apolar_pieces_of_fermat_match_ideal_pieces() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^4 + x1^4 + x2^4 + x3^4").unwrap();
        let j = jacobian_ideal(&f, &v);
        let l = socle_functional(&v, &j, &h(&v, 12)).unwrap();

        let ap4 = apolar_piece(&v, &l, &h(&v, 4));
        assert!(!ap4.vacuous);
        assert_eq!(ap4.space.dim(), 4);
        assert_eq!(ap4.space, j.graded_piece(&v, &h(&v, 4)));

        // alpha = 0: only the zero constant is apolar to a nonzero L.
        let ap0 = apolar_piece(&v, &l, &v.zero_class());
        assert_eq!(ap0.space.dim(), 0);

        // alpha = N: the kernel of L itself.
        let apn = apolar_piece(&v, &l, &h(&v, 12));
        assert_eq!(apn.space.dim(), 454);

        // N - alpha not effective: no conditions.
        let ap13 = apolar_piece(&v, &l, &h(&v, 13));
        assert!(ap13.vacuous);
        assert_eq!(ap13.space.dim(), 560);
    }

    #[test]
    fn effective_splittings_on_p3_are_an_interval() {
        let v = p3();
        let alphas = effective_splittings(&v, &h(&v, 12));
        assert_eq!(alphas.len(), 13);
        for (k, alpha) in alphas.iter().enumerate() {
            assert_eq!(alpha, &h(&v, k as i64));
        }
    }

    #[test]
    fn verify_fermat_quartic_passes() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^4 + x1^4 + x2^4 + x3^4").unwrap();
        let j = jacobian_ideal(&f, &v);
        let report = verify_cox_gorenstein(&v, &j, &h(&v, 12), None);
        assert!(report.pass, "{report}");
        assert_eq!(report.rows.len(), 13);
        let text = report.to_string();
        assert!(text.contains("alpha=6 ideal_dim=40 apolar_dim=40 equal=true"));
        assert!(text.ends_with("verdict=PASS"));
    }

    #[test]
    fn verify_fails_on_wrong_socle_degree() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^4 + x1^4 + x2^4 + x3^4").unwrap();
        let j = jacobian_ideal(&f, &v);
        let report = verify_cox_gorenstein(&v, &j, &h(&v, 11), None);
        assert!(!report.pass);
        assert!(!report.socle_ok);
        assert_eq!(report.socle_dim, 4);
    }

    #[test]
    fn quadric_sequence_on_p2_passes() {
        let v = p2();
        // A regular sequence of three quadrics: N = 6H - 3H = 3H.
        let gens = vec![
            parse_polynomial(&v, "x0^2 + x1 x2").unwrap(),
            parse_polynomial(&v, "x1^2 + 3 x0 x2").unwrap(),
            parse_polynomial(&v, "x2^2 - 2 x0 x1 + x0^2").unwrap(),
        ];
        let ideal = GradedIdeal::new(gens);
        let report = verify_cox_gorenstein(&v, &ideal, &h(&v, 3), None);
        assert!(report.pass, "{report}");
        // Quotient dims 1, 3, 3, 1 across degrees 0..3.
        let dims: Vec<usize> = report
            .rows
            .iter()
            .map(|r| {
                monomial_basis(&v, &r.alpha).len() - r.ideal_dim
            })
            .collect();
        assert_eq!(dims, vec![1, 3, 3, 1]);
    }

    #[test]
    fn mixed_degree_sequence_on_p2_passes() {
        let v = p2();
        // Degrees (1,2,2): N = 5H - 3H = 2H.
        let gens = vec![
            parse_polynomial(&v, "x0 + x1 - x2").unwrap(),
            parse_polynomial(&v, "x1^2 + x0 x2").unwrap(),
            parse_polynomial(&v, "x2^2 + x0 x1 + 2 x1^2").unwrap(),
        ];
        let ideal = GradedIdeal::new(gens);
        let report = verify_cox_gorenstein(&v, &ideal, &h(&v, 2), None);
        assert!(report.pass, "{report}");
    }

    #[test]
    fn pairing_matrices_for_fermat() {
        let v = p3();
        let f = parse_polynomial(&v, "x0^4 + x1^4 + x2^4 + x3^4").unwrap();
        let j = jacobian_ideal(&f, &v);
        let l = socle_functional(&v, &j, &h(&v, 12)).unwrap();

        let p0 = pairing_matrix(&v, &j, &l, &v.zero_class());
        assert_eq!(p0.matrix.nrows(), 1);
        assert_eq!(p0.matrix.ncols(), 1);
        assert_eq!(*p0.matrix.at(0, 0), rat(1, 1));
        assert!(p0.nondegenerate);

        let p6 = pairing_matrix(&v, &j, &l, &h(&v, 6));
        assert_eq!(p6.matrix.nrows(), 44);
        assert!(p6.nondegenerate);
    }
}
