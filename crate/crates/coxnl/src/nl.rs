//! Tangent computations for Noether-Lefschetz-type loci: hypersurfaces of
//! degree beta on a (2k+1)-dimensional variety that are required to contain
//! a fixed complete-intersection flag of codimension k+1.
//!
//! A flag datum packages the k+1 ample equations a_i cutting the flag, the
//! cofactors k_i, and the hypersurface f = sum a_i k_i they assemble. Two
//! ideals of f drive the computations and must not be confused: the ideal
//! of the plain partial derivatives presents the middle cohomology (its
//! quotient in degree N = (k+1) beta - beta0 is where class representatives
//! live), while the toric Jacobian ideal of the log derivatives is
//! Cox-Gorenstein of socle degree 2N + beta0 and supplies the duality. All
//! tangent spaces come out as canonical subspaces of one graded piece of
//! the Cox ring, so different routes to the same space can be compared by
//! literal equality.

use std::fmt;

use num_traits::Zero;

use crate::cox::{basis_index, monomial_basis, GradedPolynomial, Monomial};
use crate::error::CoxError;
use crate::fan::{DivisorClass, Variety};
use crate::gorenstein::{socle_functional, SocleFunctional};
use crate::ideal::{
    jacobian_ideal, nondegenerate_check, partials_ideal, GradedIdeal, PieceData, SubspaceOfDegree,
};
use crate::linalg::{int_mod, mulmod, ModRowReducer, QMat, PRIMES};
use crate::{Rat, Result};

/// Degree bookkeeping for a flag of codimension k+1 inside a hypersurface
/// of degree beta: returns (N, 2N + beta0) with N = (k+1) beta - beta0.
/// N is the degree carrying the middle-cohomology classes and 2N + beta0
/// is the socle degree of the toric Jacobian ring.
pub fn socle_degree_n(
    variety: &Variety,
    beta: &DivisorClass,
    k: usize,
) -> Result<(DivisorClass, DivisorClass)> {
    if k == 0 {
        return Err(CoxError::InvalidArgument(
            "the flag codimension k + 1 must be at least 2".into(),
        ));
    }
    let d = variety.dim();
    if d != 2 * k + 1 {
        return Err(CoxError::Dimension(format!(
            "variety dimension {d} does not equal 2k + 1 = {} for k = {k}",
            2 * k + 1
        )));
    }
    let beta0 = variety.anticanonical();
    let n = variety.sub_classes(&variety.scale_class(beta, (k + 1) as i64), &beta0);
    let socle = variety.add_classes(&variety.scale_class(&n, 2), &beta0);
    Ok((n, socle))
}

/// Write f as sum a_i k_i with k_i homogeneous of degree deg f - deg a_i.
/// The cofactors are pinned down deterministically: row reduction with
/// free coordinates set to zero, columns ordered by equation index and
/// then by monomial. Fails when f does not lie in the ideal of the a_i,
/// which is exactly when the flag is not contained in the hypersurface.
pub fn decompose_on_ci(
    variety: &Variety,
    f: &GradedPolynomial,
    equations: &[GradedPolynomial],
) -> Result<Vec<GradedPolynomial>> {
    if equations.is_empty() {
        return Err(CoxError::InvalidArgument(
            "need at least one equation to decompose against".into(),
        ));
    }
    let beta = f.degree().clone();
    let target = monomial_basis(variety, &beta);
    let index = basis_index(&target);
    let rhs = f.dense_coeffs(&index, target.len())?;

    let cof_degrees: Vec<DivisorClass> = equations
        .iter()
        .map(|a| variety.sub_classes(&beta, a.degree()))
        .collect();
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    let mut tags: Vec<(usize, Monomial)> = Vec::new();
    for (i, a) in equations.iter().enumerate() {
        if a.is_zero() {
            return Err(CoxError::InvalidArgument(format!(
                "equation {i} is the zero polynomial"
            )));
        }
        for m in monomial_basis(variety, &cof_degrees[i]) {
            let prod = a.mul_monomial(&m, variety);
            cols.push(prod.dense_coeffs(&index, target.len())?);
            tags.push((i, m));
        }
    }

    let sol = QMat::from_cols(cols, target.len())
        .solve_particular(&rhs)
        .ok_or_else(|| {
            CoxError::NotInIdeal(
                "f is not in the ideal of the flag equations: the flag is not contained in the hypersurface"
                    .into(),
            )
        })?;

    let mut terms: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); equations.len()];
    for ((i, m), c) in tags.into_iter().zip(sol) {
        if !c.is_zero() {
            terms[i].push((m, c));
        }
    }
    terms
        .into_iter()
        .zip(cof_degrees)
        .map(|(t, deg)| GradedPolynomial::from_terms(variety, deg, t))
        .collect()
}

/// A complete-intersection flag inside a hypersurface: k+1 equations of
/// ample degrees on a (2k+1)-dimensional variety, matching cofactors, and
/// the hypersurface polynomial f = sum equations[i] * cofactors[i].
#[derive(Clone, Debug)]
pub struct FlagDatum {
    pub k: usize,
    pub beta: DivisorClass,
    pub equations: Vec<GradedPolynomial>,
    pub cofactors: Vec<GradedPolynomial>,
    pub f: GradedPolynomial,
}

impl FlagDatum {
    pub fn new(
        variety: &Variety,
        equations: Vec<GradedPolynomial>,
        cofactors: Vec<GradedPolynomial>,
    ) -> Result<FlagDatum> {
        if equations.len() < 2 {
            return Err(CoxError::InvalidArgument(
                "a flag datum needs at least two equations (k >= 1)".into(),
            ));
        }
        let k = equations.len() - 1;
        if variety.dim() != 2 * k + 1 {
            return Err(CoxError::Dimension(format!(
                "{} equations need a variety of dimension {}, got {}",
                k + 1,
                2 * k + 1,
                variety.dim()
            )));
        }
        if cofactors.len() != equations.len() {
            return Err(CoxError::InvalidArgument(format!(
                "{} equations but {} cofactors",
                equations.len(),
                cofactors.len()
            )));
        }
        for (i, a) in equations.iter().enumerate() {
            if a.is_zero() {
                return Err(CoxError::InvalidArgument(format!(
                    "equation {i} is the zero polynomial"
                )));
            }
            if !variety.is_ample(a.degree()) {
                return Err(CoxError::NotAmple(format!(
                    "degree {} of equation {i} is not ample",
                    a.degree()
                )));
            }
        }
        let beta = variety.add_classes(equations[0].degree(), cofactors[0].degree());
        let mut f = GradedPolynomial::zero(beta.clone());
        for (a, c) in equations.iter().zip(&cofactors) {
            let prod = a.mul(c, variety);
            if prod.degree() != &beta {
                return Err(CoxError::DegreeMismatch(format!(
                    "product degree {} disagrees with beta = {}",
                    prod.degree(),
                    beta
                )));
            }
            f = f.add(&prod)?;
        }
        if f.is_zero() {
            return Err(CoxError::InvalidArgument(
                "the assembled hypersurface polynomial is zero".into(),
            ));
        }
        Ok(FlagDatum {
            k,
            beta,
            equations,
            cofactors,
            f,
        })
    }

    /// Build the datum from a hypersurface already containing the flag,
    /// using the canonical cofactor decomposition.
    pub fn from_hypersurface(
        variety: &Variety,
        equations: Vec<GradedPolynomial>,
        f: &GradedPolynomial,
    ) -> Result<FlagDatum> {
        let cofactors = decompose_on_ci(variety, f, &equations)?;
        let datum = FlagDatum::new(variety, equations, cofactors)?;
        debug_assert_eq!(&datum.f, f);
        Ok(datum)
    }

    /// The flag ideal (a_0, ..., a_k, k_0, ..., k_k), generators in that
    /// fixed order. Its degree beta piece is the first-order tangent space
    /// to hypersurfaces containing a deformation of the flag.
    pub fn flag_ideal(&self) -> GradedIdeal {
        let gens = self
            .equations
            .iter()
            .chain(&self.cofactors)
            .cloned()
            .collect();
        GradedIdeal::new(gens)
    }

    pub fn socle_data(&self, variety: &Variety) -> Result<(DivisorClass, DivisorClass)> {
        socle_degree_n(variety, &self.beta, self.k)
    }
}

/// Tangent space attached to a middle-cohomology class representative P:
/// the H of degree beta with P H inside the partial-derivative ideal in
/// degree N + beta, i.e. with P H = 0 in the cohomology quotient. When P
/// itself lies in that ideal it represents the zero class, the conditions
/// are vacuous and the space is all of S^beta; `p_in_jacobian` flags that.
#[derive(Clone, Debug)]
pub struct TangentFromClass {
    pub space: SubspaceOfDegree,
    pub p_in_jacobian: bool,
}

pub fn tangent_space_from_class(
    variety: &Variety,
    f: &GradedPolynomial,
    p: &GradedPolynomial,
    beta: &DivisorClass,
) -> Result<TangentFromClass> {
    if p.is_zero() {
        return Err(CoxError::InvalidArgument(
            "the class representative P must be nonzero".into(),
        ));
    }
    let jac = partials_ideal(f, variety);
    let p_in_jacobian = jac.contains(variety, p);

    let target = variety.add_classes(p.degree(), beta);
    let piece = PieceData::build(variety, jac.generators(), &target);
    let basis_beta = monomial_basis(variety, beta);
    let width = basis_beta.len();

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for e in &piece.analysis.ann {
        let mut row = vec![Rat::zero(); width];
        for (h, m) in basis_beta.iter().enumerate() {
            let mut acc = Rat::zero();
            for (mono, c) in p.terms() {
                let i = *piece
                    .index
                    .get(&mono.mul(m))
                    .expect("product monomial lies in the target degree");
                if !e[i].is_zero() {
                    acc += c * Rat::from(e[i].clone());
                }
            }
            row[h] = acc;
        }
        rows.push(row);
    }
    let space = kernel_space(rows, beta.clone(), width);
    Ok(TangentFromClass {
        space,
        p_in_jacobian,
    })
}

/// Kernel of multiplication by (product of all variables) * P, from degree
/// N to the socle degree 2N + beta0 of the toric Jacobian ring of f. The
/// target is one-dimensional, so the kernel is a hyperplane cut by one
/// exact functional, or everything when that functional vanishes
/// identically.
#[derive(Clone, Debug)]
pub struct T0Kernel {
    pub space: SubspaceOfDegree,
    /// Value of the defining functional on each monomial of degree N.
    pub conditions: Vec<Rat>,
    /// True when the functional vanishes identically, e.g. for P in the
    /// Jacobian ideal; the kernel is then all of S^N.
    pub degenerate: bool,
}

pub fn t0_kernel(variety: &Variety, f: &GradedPolynomial, p: &GradedPolynomial) -> Result<T0Kernel> {
    let n = p.degree().clone();
    let socle_class = variety.add_classes(&variety.scale_class(&n, 2), &variety.anticanonical());
    let j0 = jacobian_ideal(f, variety);
    let lambda = socle_functional(variety, &j0, &socle_class)?;
    t0_kernel_with(variety, &lambda, p)
}

/// Same as [`t0_kernel`] with a precomputed socle functional of the toric
/// Jacobian ideal at 2 deg(P) + beta_0, so many P against one f pay for
/// the corank-one solve once.
pub fn t0_kernel_with(
    variety: &Variety,
    lambda: &SocleFunctional,
    p: &GradedPolynomial,
) -> Result<T0Kernel> {
    if p.is_zero() {
        return Err(CoxError::InvalidArgument(
            "the class representative P must be nonzero".into(),
        ));
    }
    let n = p.degree().clone();
    let xhat = Monomial::new(vec![1; variety.n_rays()]);
    let shifted = p.mul_monomial(&xhat, variety);
    let basis_n = monomial_basis(variety, &n);
    let conditions: Vec<Rat> = basis_n
        .iter()
        .map(|m| {
            let mut acc = Rat::zero();
            for (mono, c) in shifted.terms() {
                let v = lambda.coefficient(&mono.mul(m));
                if !v.is_zero() {
                    acc += c * v;
                }
            }
            acc
        })
        .collect();
    let (space, degenerate) = hyperplane_space(n, &conditions);
    Ok(T0Kernel {
        space,
        conditions,
        degenerate,
    })
}

/// The H of degree beta with H * S^{N - beta} inside the t0 kernel of P.
/// For a nondegenerate f this transporter agrees with
/// `tangent_space_from_class`: one route goes through the socle functional
/// of the toric Jacobian ring, the other through membership in the
/// partial-derivative ideal, and the two share no linear algebra, so
/// computing both is a genuine consistency check.
pub fn t0_transporter(
    variety: &Variety,
    f: &GradedPolynomial,
    p: &GradedPolynomial,
    beta: &DivisorClass,
) -> Result<SubspaceOfDegree> {
    let n = p.degree().clone();
    let socle_class = variety.add_classes(&variety.scale_class(&n, 2), &variety.anticanonical());
    let j0 = jacobian_ideal(f, variety);
    let lambda = socle_functional(variety, &j0, &socle_class)?;
    t0_transporter_with(variety, &lambda, p, beta)
}

/// Same as [`t0_transporter`] with a precomputed socle functional, see
/// [`t0_kernel_with`].
pub fn t0_transporter_with(
    variety: &Variety,
    lambda: &SocleFunctional,
    p: &GradedPolynomial,
    beta: &DivisorClass,
) -> Result<SubspaceOfDegree> {
    if p.is_zero() {
        return Err(CoxError::InvalidArgument(
            "the class representative P must be nonzero".into(),
        ));
    }
    let n = p.degree().clone();
    let xhat = Monomial::new(vec![1; variety.n_rays()]);
    let shifted = p.mul_monomial(&xhat, variety);
    let basis_beta = monomial_basis(variety, beta);
    let width = basis_beta.len();
    let diff = variety.sub_classes(&n, beta);
    let rows: Vec<Vec<Rat>> = monomial_basis(variety, &diff)
        .iter()
        .map(|m| {
            basis_beta
                .iter()
                .map(|mh| {
                    let key = m.mul(mh);
                    let mut acc = Rat::zero();
                    for (mono, c) in shifted.terms() {
                        let v = lambda.coefficient(&mono.mul(&key));
                        if !v.is_zero() {
                            acc += c * v;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Ok(kernel_space(rows, beta.clone(), width))
}

fn kernel_space(rows: Vec<Vec<Rat>>, degree: DivisorClass, width: usize) -> SubspaceOfDegree {
    if rows.is_empty() {
        return SubspaceOfDegree::full(degree, width);
    }
    let basis = QMat::from_rows(rows).kernel_basis();
    SubspaceOfDegree {
        degree,
        ambient_dim: width,
        basis,
    }
}

/// Canonical basis of the hyperplane nu-perp, or the full space when nu
/// vanishes. The complement coordinate is the last one where nu is
/// nonzero, which reproduces the reduced-echelon convention used
/// everywhere else.
fn hyperplane_space(degree: DivisorClass, nu: &[Rat]) -> (SubspaceOfDegree, bool) {
    let width = nu.len();
    let Some(q) = nu.iter().rposition(|x| !x.is_zero()) else {
        return (SubspaceOfDegree::full(degree, width), true);
    };
    let mut basis = Vec::with_capacity(width - 1);
    for i in 0..width {
        if i == q {
            continue;
        }
        let mut v = vec![Rat::zero(); width];
        v[i] = Rat::from(crate::Int::from(1));
        if !nu[i].is_zero() {
            v[q] = -&nu[i] / &nu[q];
        }
        basis.push(v);
    }
    (
        SubspaceOfDegree {
            degree,
            ambient_dim: width,
            basis,
        },
        false,
    )
}

/// Classes P of degree N whose multiplication maps the flag ideal's degree
/// beta piece into the partial-derivative ideal: the candidates for
/// algebraic classes supported on the flag. Always contains the degree N
/// piece of the partial-derivative ideal itself (those P represent zero);
/// `strict` records whether anything beyond it was found, which is what a
/// nonzero class supported on the flag requires.
///
/// The result is certified: a modular sweep picks out independent
/// conditions, the kernel of those conditions is computed exactly, and
/// every kernel vector is then either reduced into the Jacobian piece or
/// checked against all conditions over the rationals.
#[derive(Clone, Debug)]
pub struct HodgeCandidates {
    pub space: SubspaceOfDegree,
    /// Dimension of the partial-derivative ideal's piece in degree N.
    pub jacobian_dim: usize,
    pub strict: bool,
}

pub fn hodge_class_candidates(variety: &Variety, datum: &FlagDatum) -> Result<HodgeCandidates> {
    let (n, _) = socle_degree_n(variety, &datum.beta, datum.k)?;
    let jac = partials_ideal(&datum.f, variety);
    let target = variety.add_classes(&n, &datum.beta);
    let jpiece = PieceData::build(variety, jac.generators(), &target);
    let ipiece = datum.flag_ideal().graded_piece(variety, &datum.beta);
    let jac_at_n = jac.graded_piece(variety, &n);

    let basis_n = monomial_basis(variety, &n);
    let basis_beta = monomial_basis(variety, &datum.beta);
    let width = basis_n.len();
    let ann = &jpiece.analysis.ann;
    if width == 0 || ann.is_empty() || ipiece.dim() == 0 {
        let space = SubspaceOfDegree::full(n, width);
        return Ok(HodgeCandidates {
            strict: space.dim() > jac_at_n.dim(),
            jacobian_dim: jac_at_n.dim(),
            space,
        });
    }

    // prod_idx[j][p]: position of basis_beta[j] * basis_n[p] in the
    // monomial basis of degree N + beta.
    let prod_idx: Vec<Vec<usize>> = basis_beta
        .iter()
        .map(|mj| {
            basis_n
                .iter()
                .map(|mp| {
                    *jpiece
                        .index
                        .get(&mj.mul(mp))
                        .expect("product monomial lies in the target degree")
                })
                .collect()
        })
        .collect();

    let exact_row = |s: usize, t: usize| -> Vec<Rat> {
        let e = &ann[s];
        let ct = &ipiece.basis[t];
        (0..width)
            .map(|pc| {
                let mut acc = Rat::zero();
                for (j, cj) in ct.iter().enumerate() {
                    if !cj.is_zero() {
                        let a = &e[prod_idx[j][pc]];
                        if !a.is_zero() {
                            acc += cj * Rat::from(a.clone());
                        }
                    }
                }
                acc
            })
            .collect()
    };

    // Exact check of one vector against every condition pair (s, t).
    let satisfies_all = |v: &[Rat]| -> bool {
        for ct in &ipiece.basis {
            let mut w = vec![Rat::zero(); jpiece.basis.len()];
            for (j, cj) in ct.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (pc, vp) in v.iter().enumerate() {
                    if !vp.is_zero() {
                        w[prod_idx[j][pc]] += cj * vp;
                    }
                }
            }
            for e in ann.iter() {
                let mut acc = Rat::zero();
                for (wi, ei) in w.iter().zip(e) {
                    if !wi.is_zero() && !ei.is_zero() {
                        acc += wi * Rat::from(ei.clone());
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    };

    let finish = |basis: Vec<Vec<Rat>>| -> HodgeCandidates {
        let space = SubspaceOfDegree {
            degree: n.clone(),
            ambient_dim: width,
            basis,
        };
        HodgeCandidates {
            strict: space.dim() > jac_at_n.dim(),
            jacobian_dim: jac_at_n.dim(),
            space,
        }
    };

    'primes: for &p in PRIMES.iter() {
        let ann_mod: Vec<Vec<u64>> = ann
            .iter()
            .map(|e| e.iter().map(|x| int_mod(x, p)).collect())
            .collect();
        let mut ct_mod: Vec<Vec<u64>> = Vec::with_capacity(ipiece.basis.len());
        for ct in &ipiece.basis {
            let mut row = Vec::with_capacity(ct.len());
            for x in ct {
                let den = int_mod(x.denom(), p);
                if den == 0 {
                    continue 'primes;
                }
                row.push(mulmod(
                    int_mod(x.numer(), p),
                    crate::linalg::invmod(den, p),
                    p,
                ));
            }
            ct_mod.push(row);
        }

        // Modular sweep over all condition rows; only the pivots survive.
        let mut reducer = ModRowReducer::new(width, p);
        let mut pivot_pairs: Vec<(usize, usize)> = Vec::new();
        'sweep: for s in 0..ann_mod.len() {
            for t in 0..ct_mod.len() {
                let mut row = vec![0u64; width];
                for (j, &cj) in ct_mod[t].iter().enumerate() {
                    if cj == 0 {
                        continue;
                    }
                    let pi = &prod_idx[j];
                    for (pc, slot) in row.iter_mut().enumerate() {
                        let a = ann_mod[s][pi[pc]];
                        if a != 0 {
                            *slot = (*slot + mulmod(cj, a, p)) % p;
                        }
                    }
                }
                if reducer.insert(row, 0) {
                    pivot_pairs.push((s, t));
                    if reducer.rank() == width {
                        break 'sweep;
                    }
                }
            }
        }

        let kernel = if pivot_pairs.is_empty() {
            SubspaceOfDegree::full(n.clone(), width).basis
        } else {
            let rows: Vec<Vec<Rat>> = pivot_pairs.iter().map(|&(s, t)| exact_row(s, t)).collect();
            QMat::from_rows(rows).kernel_basis()
        };

        // Certification. Vectors inside the Jacobian piece satisfy the
        // conditions for ideal-theoretic reasons; anything beyond is
        // checked exactly. A failure means the prime dropped rank, so try
        // the next one.
        for v in &kernel {
            let rem = jac_at_n.reduce(v);
            if rem.iter().all(|x| x.is_zero()) {
                continue;
            }
            if !satisfies_all(&rem) {
                continue 'primes;
            }
        }
        return Ok(finish(kernel));
    }

    // Every prime failed: assemble all conditions exactly. Unconditional,
    // and in practice unreachable.
    let mut rows = Vec::new();
    for s in 0..ann.len() {
        for t in 0..ipiece.basis.len() {
            rows.push(exact_row(s, t));
        }
    }
    Ok(finish(QMat::from_rows(rows).kernel_basis()))
}

#[derive(Clone, Debug)]
pub struct TangentReport {
    pub n_class: DivisorClass,
    pub socle_class: DivisorClass,
    pub dim_s_beta: usize,
    pub dim_j0_beta: usize,
    pub dim_i_beta: usize,
    /// Codimension of the flag ideal's piece in S^beta: the expected
    /// codimension of the locus of hypersurfaces containing such a flag.
    pub codim: usize,
    /// Whether N - beta is effective; outside that range the tangent
    /// identification with the flag piece carries no content, but the
    /// dimensions are still reported.
    pub in_prop_range: bool,
    /// Some cofactor is proportional to its own equation, so the flag is
    /// not reduced-generic; reported, not fatal.
    pub degenerate_pair: bool,
    pub j0_inside_flag: bool,
    pub f_matches_flag: bool,
    /// Tangent-space data for a supplied class representative P, absent
    /// when none was given.
    pub dim_t_beta: Option<usize>,
    pub i_inside_t: Option<bool>,
    pub t_equals_i: Option<bool>,
    pub p_class_nonzero: Option<bool>,
    /// None when the check was skipped, otherwise whether the emptiness
    /// certificate for the toric Jacobian ideal of f succeeded.
    /// Inconclusive is reported, never escalated to a failure.
    pub quasi_smooth: Option<bool>,
}

impl fmt::Display for TangentReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "N={} socle={}", self.n_class, self.socle_class)?;
        writeln!(
            out,
            "dim_s_beta={} dim_j0_beta={} dim_i_beta={} codim={}",
            self.dim_s_beta, self.dim_j0_beta, self.dim_i_beta, self.codim
        )?;
        writeln!(
            out,
            "in_prop_range={} degenerate_pair={}",
            self.in_prop_range, self.degenerate_pair
        )?;
        match self.dim_t_beta {
            Some(dim) => writeln!(
                out,
                "dim_t_beta={} i_inside_t={} t_equals_i={} p_class_nonzero={}",
                dim,
                self.i_inside_t.unwrap_or(false),
                self.t_equals_i.unwrap_or(false),
                self.p_class_nonzero.unwrap_or(false)
            )?,
            None => writeln!(out, "tangent_from_p=skipped")?,
        }
        let qs = match self.quasi_smooth {
            None => "skipped",
            Some(true) => "certified",
            Some(false) => "inconclusive",
        };
        write!(
            out,
            "j0_inside_flag={} f_matches_flag={} quasi_smooth={}",
            self.j0_inside_flag, self.f_matches_flag, qs
        )
    }
}

/// True when b is a scalar multiple of a (same degree, proportional
/// coefficients, both nonzero).
fn proportional(a: &GradedPolynomial, b: &GradedPolynomial) -> bool {
    if a.degree() != b.degree() || a.is_zero() || b.is_zero() {
        return false;
    }
    let (m0, c0) = a.terms().next().expect("nonzero polynomial has a term");
    let ratio = b.coeff(m0) / c0;
    if ratio.is_zero() {
        return false;
    }
    a.scale(&ratio) == *b
}

/// The tangent bookkeeping for a flag datum: dimensions of the degree
/// beta pieces, the codimension cut out by the flag ideal, and the
/// structural consistency checks (the toric Jacobian piece sits inside the
/// flag piece, and f really is sum a_i k_i). Pass a class representative P
/// to also record its tangent space against the flag piece, and
/// `smooth_m_max` to run the emptiness certificate on the toric Jacobian
/// ideal of f.
pub fn nl_tangent_codim(
    variety: &Variety,
    datum: &FlagDatum,
    p: Option<&GradedPolynomial>,
    smooth_m_max: Option<u32>,
) -> Result<TangentReport> {
    let (n, socle_class) = socle_degree_n(variety, &datum.beta, datum.k)?;
    let flag = datum.flag_ideal();
    let j0 = jacobian_ideal(&datum.f, variety);
    let i_beta = flag.graded_piece(variety, &datum.beta);
    let j0_beta = j0.graded_piece(variety, &datum.beta);

    let mut f_check = GradedPolynomial::zero(datum.beta.clone());
    for (a, c) in datum.equations.iter().zip(&datum.cofactors) {
        f_check = f_check.add(&a.mul(c, variety))?;
    }

    let in_prop_range = {
        let diff = variety.sub_classes(&n, &datum.beta);
        !monomial_basis(variety, &diff).is_empty()
    };
    let degenerate_pair = datum
        .equations
        .iter()
        .zip(&datum.cofactors)
        .any(|(a, k)| proportional(a, k));

    let tangent = match p {
        Some(p) => Some(tangent_space_from_class(variety, &datum.f, p, &datum.beta)?),
        None => None,
    };
    let (dim_t_beta, i_inside_t, t_equals_i, p_class_nonzero) = match &tangent {
        Some(t) => (
            Some(t.space.dim()),
            Some(i_beta.is_subspace_of(&t.space)),
            Some(t.space == i_beta),
            Some(!t.p_in_jacobian),
        ),
        None => (None, None, None, None),
    };

    let quasi_smooth =
        smooth_m_max.map(|mm| nondegenerate_check(variety, &datum.f, Some(mm)).certified);

    Ok(TangentReport {
        n_class: n,
        socle_class,
        dim_s_beta: i_beta.ambient_dim,
        dim_j0_beta: j0_beta.dim(),
        dim_i_beta: i_beta.dim(),
        codim: i_beta.ambient_dim - i_beta.dim(),
        in_prop_range,
        degenerate_pair,
        j0_inside_flag: j0_beta.is_subspace_of(&i_beta),
        f_matches_flag: f_check == datum.f,
        dim_t_beta,
        i_inside_t,
        t_equals_i,
        p_class_nonzero,
        quasi_smooth,
    })
}

/// Parameter-count estimate for the dimension of the family of
/// hypersurfaces containing a complete-intersection flag with equation
/// degrees delta. Gross count: choices of equations and cofactors.
/// Overlap: reparametrizations a_i -> a_i + c a_j and cofactor shifts
/// k_i -> k_i + g a_j, counted by the effective difference degrees. This
/// is bookkeeping, not a certified dimension; the exact object to compare
/// against is the flag ideal's graded piece.
#[derive(Clone, Debug)]
pub struct FamilyDiagnostic {
    pub gross: usize,
    pub overlap: usize,
    pub dim_s_beta: usize,
    pub estimate: i64,
    /// Some delta_i equals beta, so that cofactor is a constant and the
    /// flag degenerates; reported, not fatal.
    pub constant_cofactor: bool,
}

impl fmt::Display for FamilyDiagnostic {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "gross={} overlap={} dim_s_beta={} constant_cofactor={} estimate={} (ESTIMATE)",
            self.gross, self.overlap, self.dim_s_beta, self.constant_cofactor, self.estimate
        )
    }
}

pub fn hilbert_family_diagnostic(
    variety: &Variety,
    delta: &[DivisorClass],
    beta: &DivisorClass,
) -> Result<FamilyDiagnostic> {
    if delta.is_empty() {
        return Err(CoxError::InvalidArgument(
            "need at least one equation degree".into(),
        ));
    }
    let zero = variety.scale_class(beta, 0);
    let mut gross = 0usize;
    let mut constant_cofactor = false;
    for d in delta {
        let cof = variety.sub_classes(beta, d);
        if cof == zero {
            constant_cofactor = true;
        }
        let cof_dim = monomial_basis(variety, &cof).len();
        if cof_dim == 0 {
            return Err(CoxError::NotEffective(format!(
                "beta - delta = {cof} carries no monomials"
            )));
        }
        gross += monomial_basis(variety, d).len() + cof_dim;
    }
    let mut overlap = 0usize;
    for di in delta {
        for dj in delta {
            let diff = variety.sub_classes(di, dj);
            overlap += monomial_basis(variety, &diff).len();
        }
    }
    for (i, di) in delta.iter().enumerate() {
        for dj in &delta[i + 1..] {
            let rem = variety.sub_classes(&variety.sub_classes(beta, di), dj);
            overlap += monomial_basis(variety, &rem).len();
        }
    }
    Ok(FamilyDiagnostic {
        gross,
        overlap,
        dim_s_beta: monomial_basis(variety, beta).len(),
        estimate: gross as i64 - overlap as i64,
        constant_cofactor,
    })
}
