//! Simplicial complete fans and their divisor class groups.
//!
//! A fan is given by primitive integer rays and d-element maximal cones.
//! Completeness is certified combinatorially: every facet of a maximal cone
//! must be shared by exactly two cones whose off-facet rays lie strictly on
//! opposite sides of the facet hyperplane. For a genuine fan (cones meeting
//! face to face) this is equivalent to the support being all of R^d: if the
//! support had a boundary, the boundary would contain a relatively open
//! piece of some facet, and that facet would see cones on both sides.
//!
//! Class group coordinates are fixed once per fan from the Smith normal form
//! of the ray matrix, with each free coordinate functional normalized so
//! that the first ray divisor with nonzero value gets a positive one.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{CoxError, Result};
use crate::linalg::{primitive_int_vector, smith_normal_form, QMat, ZMat};
use crate::{Int, Rat};

#[derive(Clone, Debug)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<Int>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Structural construction: index ranges and cone sizes are enforced
    /// here, geometry (primitivity, independence, completeness) by
    /// [`Fan::validate`].
    pub fn new(dim: usize, rays: Vec<Vec<Int>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        if dim == 0 {
            return Err(CoxError::InvalidFan("lattice rank must be positive".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(CoxError::InvalidFan(format!(
                    "ray {i} has {} coordinates, expected {dim}",
                    ray.len()
                )));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (ci, cone) in max_cones.into_iter().enumerate() {
            let mut cone = cone;
            cone.sort_unstable();
            if cone.len() != dim {
                return Err(CoxError::InvalidFan(format!(
                    "cone {ci} has {} rays, expected {dim} (simplicial maximal cones only)",
                    cone.len()
                )));
            }
            if cone.windows(2).any(|w| w[0] == w[1]) {
                return Err(CoxError::InvalidFan(format!("cone {ci} repeats a ray")));
            }
            if let Some(&bad) = cone.iter().find(|&&i| i >= rays.len()) {
                return Err(CoxError::InvalidFan(format!(
                    "cone {ci} references ray {bad}, but only {} rays exist",
                    rays.len()
                )));
            }
            cones.push(cone);
        }
        if cones.is_empty() {
            return Err(CoxError::InvalidFan("fan has no maximal cones".into()));
        }
        Ok(Fan {
            dim,
            rays,
            max_cones: cones,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn ray(&self, rho: usize) -> &[Int] {
        &self.rays[rho]
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Ray indices not in the given maximal cone, ascending.
    pub fn cone_complement(&self, sigma: usize) -> Vec<usize> {
        let cone = &self.max_cones[sigma];
        (0..self.n_rays()).filter(|i| !cone.contains(i)).collect()
    }

    pub fn validate(&self) -> FanReport {
        let mut report = FanReport {
            primitive_rays: true,
            distinct_rays: true,
            simplicial: true,
            complete: true,
            violations: Vec::new(),
        };
        for (i, ray) in self.rays.iter().enumerate() {
            let mut g = Int::zero();
            for x in ray {
                g = g.gcd(x);
            }
            if !g.is_one() {
                report.primitive_rays = false;
                report
                    .violations
                    .push(format!("ray {i} is not primitive (content {g})"));
            }
        }
        for i in 0..self.rays.len() {
            for j in (i + 1)..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    report.distinct_rays = false;
                    report.violations.push(format!("rays {i} and {j} coincide"));
                }
            }
        }
        for (ci, cone) in self.max_cones.iter().enumerate() {
            if self.cone_matrix(cone).rank() != self.dim {
                report.simplicial = false;
                report
                    .violations
                    .push(format!("cone {ci} has linearly dependent rays"));
            }
        }
        if !report.simplicial {
            // The facet certificate needs independent cones.
            report.complete = false;
            return report;
        }

        let mut seen = HashMap::new();
        for (ci, cone) in self.max_cones.iter().enumerate() {
            if let Some(&cj) = seen.get(cone) {
                report.complete = false;
                report
                    .violations
                    .push(format!("cones {cj} and {ci} are identical"));
            }
            seen.insert(cone.clone(), ci);
        }

        // facet (as sorted ray set) -> list of (cone, off-facet ray)
        let mut facets: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
        for (ci, cone) in self.max_cones.iter().enumerate() {
            for &skip in cone {
                let facet: Vec<usize> = cone.iter().copied().filter(|&i| i != skip).collect();
                facets.entry(facet).or_default().push((ci, skip));
            }
        }
        let mut facet_list: Vec<_> = facets.into_iter().collect();
        facet_list.sort();
        for (facet, owners) in facet_list {
            if owners.len() != 2 {
                report.complete = false;
                report.violations.push(format!(
                    "facet {facet:?} lies in {} maximal cones, expected 2",
                    owners.len()
                ));
                continue;
            }
            let normal = self.facet_normal(&facet);
            let s0 = self.dot_ray(&normal, owners[0].1);
            let s1 = self.dot_ray(&normal, owners[1].1);
            if (s0.is_positive() && s1.is_positive())
                || (s0.is_negative() && s1.is_negative())
                || s0.is_zero()
                || s1.is_zero()
            {
                report.complete = false;
                report.violations.push(format!(
                    "cones {} and {} do not lie on opposite sides of facet {facet:?}",
                    owners[0].0, owners[1].0
                ));
            }
        }
        report
    }

    fn cone_matrix(&self, cone: &[usize]) -> QMat {
        QMat::from_rows(
            cone.iter()
                .map(|&i| self.rays[i].iter().map(|x| Rat::from(x.clone())).collect())
                .collect(),
        )
    }

    /// Primitive normal vector of the hyperplane spanned by the facet rays.
    fn facet_normal(&self, facet: &[usize]) -> Vec<Int> {
        if facet.is_empty() {
            // d = 1: the hyperplane is the origin.
            return vec![Int::one()];
        }
        let m = self.cone_matrix(facet);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1, "facet rays must span a hyperplane");
        primitive_int_vector(&kernel[0])
    }

    fn dot_ray(&self, v: &[Int], rho: usize) -> Int {
        v.iter().zip(&self.rays[rho]).map(|(a, b)| a * b).sum()
    }

    pub fn from_path(path: &Path) -> Result<Fan> {
        let text = std::fs::read_to_string(path)?;
        Fan::from_str_format(&text)
    }

    /// Line-oriented fan format: `fan d=<int> r=<int>`, then one `ray`
    /// line per ray, then `cone` lines. Blank lines and `#` comments are
    /// skipped.
    pub fn from_str_format(text: &str) -> Result<Fan> {
        let mut dim = None;
        let mut n_rays = 0usize;
        let mut rays: Vec<Vec<Int>> = Vec::new();
        let mut cones: Vec<Vec<usize>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let head = parts.next().unwrap();
            let err = |msg: String| CoxError::Parse {
                line: lineno + 1,
                msg,
            };
            match head {
                "fan" => {
                    for kv in parts {
                        let (k, v) = kv
                            .split_once('=')
                            .ok_or_else(|| err(format!("expected key=value, got `{kv}`")))?;
                        let n: usize = v
                            .parse()
                            .map_err(|_| err(format!("bad integer `{v}` for {k}")))?;
                        match k {
                            "d" => dim = Some(n),
                            "r" => n_rays = n,
                            _ => return Err(err(format!("unknown fan attribute `{k}`"))),
                        }
                    }
                    if dim.is_none() {
                        return Err(err("fan header missing d=<rank>".into()));
                    }
                }
                "ray" => {
                    let d = dim.ok_or_else(|| err("ray before fan header".into()))?;
                    let idx: usize = parts
                        .next()
                        .ok_or_else(|| err("ray needs an index".into()))?
                        .parse()
                        .map_err(|_| err("bad ray index".into()))?;
                    if idx != rays.len() {
                        return Err(err(format!(
                            "ray index {idx} out of order, expected {}",
                            rays.len()
                        )));
                    }
                    let coords: std::result::Result<Vec<Int>, _> =
                        parts.map(|t| t.parse::<Int>()).collect();
                    let coords = coords.map_err(|_| err("bad ray coordinate".into()))?;
                    if coords.len() != d {
                        return Err(err(format!(
                            "ray has {} coordinates, expected {d}",
                            coords.len()
                        )));
                    }
                    rays.push(coords);
                }
                "cone" => {
                    if dim.is_none() {
                        return Err(err("cone before fan header".into()));
                    }
                    let idxs: std::result::Result<Vec<usize>, _> =
                        parts.map(|t| t.parse::<usize>()).collect();
                    cones.push(idxs.map_err(|_| err("bad cone ray index".into()))?);
                }
                _ => return Err(err(format!("unknown directive `{head}`"))),
            }
        }
        let dim = dim.ok_or(CoxError::Parse {
            line: 0,
            msg: "missing fan header".into(),
        })?;
        if n_rays != 0 && n_rays != rays.len() {
            return Err(CoxError::Parse {
                line: 0,
                msg: format!("header announced r={n_rays} rays, found {}", rays.len()),
            });
        }
        Fan::new(dim, rays, cones)
    }
}

#[derive(Clone, Debug)]
pub struct FanReport {
    pub primitive_rays: bool,
    pub distinct_rays: bool,
    pub simplicial: bool,
    pub complete: bool,
    pub violations: Vec<String>,
}

impl FanReport {
    pub fn is_valid(&self) -> bool {
        self.primitive_rays && self.distinct_rays && self.simplicial && self.complete
    }
}

/// Divisor class: class coordinates plus one representative divisor.
/// Equality and hashing use only the class coordinates; the representative
/// picks the polytope and monomial bases, which is documented everywhere
/// bases (rather than dimensions) matter.
#[derive(Clone, Debug)]
pub struct DivisorClass {
    pub free: Vec<Int>,
    pub torsion: Vec<Int>,
    pub representative: Vec<Int>,
}

impl PartialEq for DivisorClass {
    fn eq(&self, other: &Self) -> bool {
        self.free == other.free && self.torsion == other.torsion
    }
}

impl Eq for DivisorClass {}

impl std::hash::Hash for DivisorClass {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.free.hash(state);
        self.torsion.hash(state);
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Int]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.free.is_empty() && self.torsion.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", join(&self.free))?;
        if !self.torsion.is_empty() {
            if !self.free.is_empty() {
                write!(f, ";")?;
            }
            write!(f, "{}", join(&self.torsion))?;
        }
        Ok(())
    }
}

impl DivisorClass {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|x| x.is_zero()) && self.torsion.iter().all(|x| x.is_zero())
    }
}

/// Cl(P_Sigma) = Z^r / im(M -> Z^r), presented by the Smith normal form of
/// the ray matrix.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    pub free_rank: usize,
    /// Invariant factors > 1.
    pub torsion: Vec<Int>,
    free_rows: ZMat,
    torsion_rows: ZMat,
    /// Row indices (into the normalized transform) carrying the torsion
    /// diagonal entries, then implicitly the free rows follow the diagonal.
    u_inv: ZMat,
    torsion_row_idx: Vec<usize>,
    rank_b: usize,
    r: usize,
}

impl ClassGroup {
    fn from_fan(fan: &Fan) -> Result<ClassGroup> {
        let r = fan.n_rays();
        let d = fan.dim();
        let b = ZMat::from_rows(fan.rays().to_vec());
        let snf = smith_normal_form(&b);
        let mut u = snf.u;
        let rank_b = (0..d.min(r))
            .take_while(|&i| !snf.d.at(i, i).is_zero())
            .count();
        if rank_b != d {
            return Err(CoxError::InvalidFan(
                "rays do not span the lattice; the fan cannot be complete".into(),
            ));
        }
        // Free coordinate functionals: rows d..r of u. Normalize each so the
        // first ray divisor with a nonzero coordinate gets a positive one
        // (rows beyond the diagonal of D are zero rows there, so negation
        // preserves u * b * v = D).
        for i in d..r {
            let lead = (0..r).find(|&j| !u.at(i, j).is_zero());
            if let Some(j) = lead {
                if u.at(i, j).is_negative() {
                    u.negate_row(i);
                }
            }
        }
        let u_inv = u.inverse_unimodular();
        let mut torsion = Vec::new();
        let mut torsion_row_idx = Vec::new();
        for i in 0..d {
            if !snf.d.at(i, i).is_one() {
                torsion.push(snf.d.at(i, i).clone());
                torsion_row_idx.push(i);
            }
        }
        let free_rows = ZMat::from_rows((d..r).map(|i| u.row(i).to_vec()).collect());
        let torsion_rows = ZMat::from_rows(
            torsion_row_idx
                .iter()
                .map(|&i| u.row(i).to_vec())
                .collect(),
        );
        Ok(ClassGroup {
            free_rank: r - d,
            torsion,
            free_rows,
            torsion_rows,
            u_inv,
            torsion_row_idx,
            rank_b: d,
            r,
        })
    }

    pub fn class_of(&self, divisor: &[Int]) -> DivisorClass {
        assert_eq!(divisor.len(), self.r, "divisor length != number of rays");
        let free = if self.free_rank == 0 {
            Vec::new()
        } else {
            self.free_rows.mul_vec(divisor)
        };
        let torsion = if self.torsion.is_empty() {
            Vec::new()
        } else {
            self.torsion_rows
                .mul_vec(divisor)
                .into_iter()
                .zip(&self.torsion)
                .map(|(x, m)| x.mod_floor(m))
                .collect()
        };
        DivisorClass {
            free,
            torsion,
            representative: divisor.to_vec(),
        }
    }

    /// A representative divisor with the given class coordinates.
    pub fn section(&self, free: &[Int], torsion: &[Int]) -> Result<Vec<Int>> {
        if free.len() != self.free_rank || torsion.len() != self.torsion.len() {
            return Err(CoxError::InvalidArgument(format!(
                "class coordinates need {} free and {} torsion entries",
                self.free_rank,
                self.torsion.len()
            )));
        }
        let mut y = vec![Int::zero(); self.r];
        for (k, &row) in self.torsion_row_idx.iter().enumerate() {
            y[row] = torsion[k].mod_floor(&self.torsion[k]);
        }
        for (k, v) in free.iter().enumerate() {
            y[self.rank_b + k] = v.clone();
        }
        Ok(self.u_inv.mul_vec(&y))
    }
}

/// A validated simplicial complete toric variety: fan plus class group.
#[derive(Clone, Debug)]
pub struct Variety {
    fan: Fan,
    cls: ClassGroup,
}

impl Variety {
    pub fn new(fan: Fan) -> Result<Variety> {
        let report = fan.validate();
        if !report.is_valid() {
            return Err(CoxError::NotCompleteSimplicial(
                report.violations.join("; "),
            ));
        }
        let cls = ClassGroup::from_fan(&fan)?;
        Ok(Variety { fan, cls })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn class_group(&self) -> &ClassGroup {
        &self.cls
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    pub fn n_rays(&self) -> usize {
        self.fan.n_rays()
    }

    pub fn class_of_divisor(&self, divisor: &[Int]) -> DivisorClass {
        self.cls.class_of(divisor)
    }

    pub fn class_from_coords(&self, free: &[Int], torsion: &[Int]) -> Result<DivisorClass> {
        let rep = self.cls.section(free, torsion)?;
        Ok(self.cls.class_of(&rep))
    }

    /// Class of the ray divisor D_rho; its coordinates give the grading of
    /// the Cox variable x_rho.
    pub fn ray_class(&self, rho: usize) -> DivisorClass {
        let mut a = vec![Int::zero(); self.n_rays()];
        a[rho] = Int::one();
        self.cls.class_of(&a)
    }

    /// The anticanonical class: sum of all ray divisors.
    pub fn anticanonical(&self) -> DivisorClass {
        self.cls.class_of(&vec![Int::one(); self.n_rays()])
    }

    pub fn zero_class(&self) -> DivisorClass {
        self.cls.class_of(&vec![Int::zero(); self.n_rays()])
    }

    pub fn add_classes(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        let rep: Vec<Int> = a
            .representative
            .iter()
            .zip(&b.representative)
            .map(|(x, y)| x + y)
            .collect();
        self.cls.class_of(&rep)
    }

    pub fn sub_classes(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        let rep: Vec<Int> = a
            .representative
            .iter()
            .zip(&b.representative)
            .map(|(x, y)| x - y)
            .collect();
        self.cls.class_of(&rep)
    }

    pub fn scale_class(&self, a: &DivisorClass, k: i64) -> DivisorClass {
        let rep: Vec<Int> = a.representative.iter().map(|x| x * Int::from(k)).collect();
        self.cls.class_of(&rep)
    }

    /// Per-cone support function data m_sigma with <m_sigma, v_rho> = -a_rho
    /// for every ray of the cone. Always solvable on a simplicial fan.
    pub fn cartier_data(&self, divisor: &[Rat]) -> Vec<Vec<Rat>> {
        let d = self.dim();
        self.fan
            .max_cones()
            .iter()
            .map(|cone| {
                let m = self.fan.cone_matrix(cone);
                let rhs: Vec<Rat> = cone.iter().map(|&i| -divisor[i].clone()).collect();
                m.solve_particular(&rhs)
                    .expect("simplicial cone matrix is invertible")
                    .into_iter()
                    .take(d)
                    .collect()
            })
            .collect()
    }

    pub fn is_cartier(&self, class: &DivisorClass) -> bool {
        let div = rat_divisor(&class.representative);
        self.cartier_data(&div)
            .iter()
            .all(|m| m.iter().all(|x| x.is_integer()))
    }

    /// Support-function slack <m_sigma, v_rho> + a_rho for every maximal
    /// cone and every ray outside it.
    fn slacks(&self, divisor: &[Rat]) -> Vec<(usize, usize, Rat)> {
        let data = self.cartier_data(divisor);
        let mut out = Vec::new();
        for (si, m) in data.iter().enumerate() {
            for rho in self.fan.cone_complement(si) {
                let mut v = divisor[rho].clone();
                for (mc, rc) in m.iter().zip(self.fan.ray(rho)) {
                    v += mc * Rat::from(rc.clone());
                }
                out.push((si, rho, v));
            }
        }
        out
    }

    pub fn is_nef(&self, class: &DivisorClass) -> bool {
        self.is_nef_divisor(&rat_divisor(&class.representative))
    }

    pub fn is_ample(&self, class: &DivisorClass) -> bool {
        self.is_ample_divisor(&rat_divisor(&class.representative))
    }

    pub(crate) fn is_nef_divisor(&self, divisor: &[Rat]) -> bool {
        self.slacks(divisor).iter().all(|(_, _, s)| !s.is_negative())
    }

    pub(crate) fn is_ample_divisor(&self, divisor: &[Rat]) -> bool {
        self.slacks(divisor).iter().all(|(_, _, s)| s.is_positive())
    }

    /// Split beta = q eta + beta' with q maximal such that beta' stays nef.
    /// beta' may be a rational divisor class; integrality and Cartier flags
    /// are reported.
    pub fn decompose_beta(&self, beta: &DivisorClass, eta: &DivisorClass) -> Result<BetaDecomposition> {
        if !self.is_ample(eta) {
            return Err(CoxError::NotAmple(format!("eta = {eta} is not ample")));
        }
        let beta_div = rat_divisor(&beta.representative);
        let eta_div = rat_divisor(&eta.representative);
        let beta_slacks = self.slacks(&beta_div);
        let eta_slacks = self.slacks(&eta_div);
        let mut q: Option<Rat> = None;
        for ((_, _, sb), (_, _, se)) in beta_slacks.iter().zip(&eta_slacks) {
            assert!(se.is_positive(), "ample slack must be strictly positive");
            let t = sb / se;
            if q.as_ref().map_or(true, |cur| t < *cur) {
                q = Some(t);
            }
        }
        let q = q.expect("complete fan has at least one slack constraint");
        let beta_prime: Vec<Rat> = beta_div
            .iter()
            .zip(&eta_div)
            .map(|(b, e)| b - &q * e)
            .collect();
        let integral = beta_prime.iter().all(|x| x.is_integer());
        let cartier = integral
            && self
                .cartier_data(&beta_prime)
                .iter()
                .all(|m| m.iter().all(|x| x.is_integer()));
        let beta_prime_class = if integral {
            let rep: Vec<Int> = beta_prime.iter().map(|x| x.numer().clone()).collect();
            Some(self.cls.class_of(&rep))
        } else {
            None
        };
        Ok(BetaDecomposition {
            q,
            beta_prime,
            beta_prime_class,
            integral,
            cartier,
            beta_nef: self.is_nef(beta),
        })
    }
}

#[derive(Clone, Debug)]
pub struct BetaDecomposition {
    pub q: Rat,
    /// Rational representative divisor of beta - q eta.
    pub beta_prime: Vec<Rat>,
    /// Present when beta' is an integral divisor class.
    pub beta_prime_class: Option<DivisorClass>,
    pub integral: bool,
    pub cartier: bool,
    /// Whether the input beta itself was nef (reported, not fatal).
    pub beta_nef: bool,
}

pub(crate) fn rat_divisor(a: &[Int]) -> Vec<Rat> {
    a.iter().map(|x| Rat::from(x.clone())).collect()
}

/// Parse class coordinates in the CLI literal form `c1,...,ck[;t1,...,tm]`.
pub fn parse_class_literal(variety: &Variety, text: &str) -> Result<DivisorClass> {
    let (free_part, torsion_part) = match text.split_once(';') {
        Some((f, t)) => (f, Some(t)),
        None => (text, None),
    };
    let parse_list = |s: &str| -> Result<Vec<Int>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|t| {
                t.trim().parse::<Int>().map_err(|_| {
                    CoxError::InvalidArgument(format!("bad class coordinate `{t}`"))
                })
            })
            .collect()
    };
    let free = parse_list(free_part)?;
    let torsion = match torsion_part {
        Some(t) => parse_list(t)?,
        None => vec![Int::zero(); variety.class_group().torsion.len()],
    };
    variety.class_from_coords(&free, &torsion)
}

/// Parse a divisor literal `a_1,...,a_r`.
pub fn parse_divisor_literal(variety: &Variety, text: &str) -> Result<DivisorClass> {
    let coeffs: Result<Vec<Int>> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| CoxError::InvalidArgument(format!("bad divisor coefficient `{t}`")))
        })
        .collect();
    let coeffs = coeffs?;
    if coeffs.len() != variety.n_rays() {
        return Err(CoxError::InvalidArgument(format!(
            "divisor needs {} coefficients, got {}",
            variety.n_rays(),
            coeffs.len()
        )));
    }
    Ok(variety.class_of_divisor(&coeffs))
}

/// Fans used across the crate's unit tests.
#[cfg(test)]
pub(crate) mod testfans {
    use super::*;

    fn zvec(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    pub(crate) fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<Int>> = (0..n)
            .map(|i| (0..n).map(|j| Int::from((i == j) as i64)).collect())
            .collect();
        rays.push(vec![Int::from(-1); n]);
        let cones = (0..=n)
            .map(|skip| (0..=n).filter(|&i| i != skip).collect())
            .collect();
        Fan::new(n, rays, cones).unwrap()
    }

    pub(crate) fn p2_fan() -> Fan {
        projective_space(2)
    }

    pub(crate) fn p3_fan() -> Fan {
        projective_space(3)
    }

    /// Rays 0,1: the P^1 factor; rays 2,3,4: the P^2 factor.
    pub(crate) fn p1xp2_fan() -> Fan {
        Fan::new(
            3,
            vec![
                zvec(&[1, 0, 0]),
                zvec(&[-1, 0, 0]),
                zvec(&[0, 1, 0]),
                zvec(&[0, 0, 1]),
                zvec(&[0, -1, -1]),
            ],
            vec![
                vec![0, 2, 3],
                vec![0, 2, 4],
                vec![0, 3, 4],
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 4],
            ],
        )
        .unwrap()
    }

    pub(crate) fn p1xp1_fan() -> Fan {
        Fan::new(
            2,
            vec![zvec(&[1, 0]), zvec(&[-1, 0]), zvec(&[0, 1]), zvec(&[0, -1])],
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
        )
        .unwrap()
    }

    /// P(1,1,2), rays ordered so the variable grading reads (1, 1, 2).
    pub(crate) fn p112_fan() -> Fan {
        Fan::new(
            2,
            vec![zvec(&[-1, -2]), zvec(&[1, 0]), zvec(&[0, 1])],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testfans::*;
    use super::*;

    #[test]
    fn p3_is_valid() {
        let report = p3_fan().validate();
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn incomplete_fan_detected() {
        // P^1 x P^1 with one maximal cone removed.
        let fan = Fan::new(
            2,
            vec![
                vec![Int::from(1), Int::from(0)],
                vec![Int::from(0), Int::from(1)],
                vec![Int::from(-1), Int::from(0)],
                vec![Int::from(0), Int::from(-1)],
            ],
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
        )
        .unwrap();
        let report = fan.validate();
        assert!(report.simplicial);
        assert!(!report.complete);
    }

    #[test]
    fn weighted_p112_valid_and_graded() {
        let fan = p112_fan();
        assert!(fan.validate().is_valid());
        let v = Variety::new(fan).unwrap();
        assert_eq!(v.class_group().free_rank, 1);
        assert!(v.class_group().torsion.is_empty());
        let degs: Vec<Int> = (0..3)
            .map(|i| v.ray_class(i).free[0].clone())
            .collect();
        assert_eq!(degs, vec![Int::from(1), Int::from(1), Int::from(2)]);
        assert_eq!(v.anticanonical().free, vec![Int::from(4)]);

        // Same ray set in a rotated order: weights permute along with it.
        let rotated = Fan::new(
            2,
            vec![
                vec![Int::from(1), Int::from(0)],
                vec![Int::from(0), Int::from(1)],
                vec![Int::from(-1), Int::from(-2)],
            ],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert!(rotated.validate().is_valid());
        let v = Variety::new(rotated).unwrap();
        let mut degs: Vec<Int> = (0..3)
            .map(|i| v.ray_class(i).free[0].clone())
            .collect();
        assert_eq!(degs, vec![Int::from(1), Int::from(2), Int::from(1)]);
        degs.sort();
        assert_eq!(degs, vec![Int::from(1), Int::from(1), Int::from(2)]);
    }

    #[test]
    fn non_primitive_ray_detected() {
        let fan = Fan::new(
            1,
            vec![vec![Int::from(2)], vec![Int::from(-1)]],
            vec![vec![0], vec![1]],
        )
        .unwrap();
        let report = fan.validate();
        assert!(!report.primitive_rays);
    }

    #[test]
    fn p3_class_group() {
        let v = Variety::new(p3_fan()).unwrap();
        assert_eq!(v.class_group().free_rank, 1);
        assert!(v.class_group().torsion.is_empty());
        for rho in 0..4 {
            assert_eq!(v.ray_class(rho).free, vec![Int::from(1)]);
        }
        assert_eq!(v.anticanonical().free, vec![Int::from(4)]);
    }

    #[test]
    fn lattice_map_dies_in_class_group() {
        // Divisors of characters map to zero: row j of the transposed ray
        // matrix is div(chi^{u_j}).
        for fan in [p3_fan(), p1xp2_fan()] {
            let v = Variety::new(fan).unwrap();
            for j in 0..v.dim() {
                let div: Vec<Int> = (0..v.n_rays())
                    .map(|rho| v.fan().ray(rho)[j].clone())
                    .collect();
                assert!(v.class_of_divisor(&div).is_zero());
            }
        }
    }

    #[test]
    fn torsion_class_group() {
        // P^2 with the lattice coarsened by index 3: Cl = Z + Z/3.
        let fan = Fan::new(
            2,
            vec![
                vec![Int::from(2), Int::from(-1)],
                vec![Int::from(-1), Int::from(2)],
                vec![Int::from(-1), Int::from(-1)],
            ],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert!(fan.validate().is_valid());
        let v = Variety::new(fan).unwrap();
        assert_eq!(v.class_group().free_rank, 1);
        assert_eq!(v.class_group().torsion, vec![Int::from(3)]);
    }

    #[test]
    fn section_roundtrip() {
        for fan in [p3_fan(), p1xp2_fan(), p112_fan()] {
            let v = Variety::new(fan).unwrap();
            let anti = v.anticanonical();
            let back = v
                .class_from_coords(&anti.free, &anti.torsion)
                .unwrap();
            assert_eq!(back, anti);
        }
    }

    #[test]
    fn hyperplane_on_p3_is_ample() {
        let v = Variety::new(p3_fan()).unwrap();
        let h = v.ray_class(0);
        assert!(v.is_ample(&h));
        assert!(v.is_nef(&h));
        assert!(v.is_cartier(&h));
        assert!(v.is_nef(&v.zero_class()));
        assert!(!v.is_ample(&v.zero_class()));
        let minus_h = v.sub_classes(&v.zero_class(), &h);
        assert!(!v.is_nef(&minus_h));
    }

    #[test]
    fn p1xp2_nef_cone() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let c = |a: i64, b: i64| {
            v.class_from_coords(&[Int::from(a), Int::from(b)], &[]).unwrap()
        };
        assert!(v.is_nef(&c(1, 0)) && !v.is_ample(&c(1, 0)));
        assert!(v.is_nef(&c(0, 1)) && !v.is_ample(&c(0, 1)));
        assert!(v.is_ample(&c(1, 1)));
        assert!(!v.is_nef(&c(-1, 1)));
        assert_eq!(v.anticanonical(), c(2, 3));
    }

    #[test]
    fn decompose_beta_on_p3() {
        let v = Variety::new(p3_fan()).unwrap();
        let h = v.ray_class(0);
        let beta = v.scale_class(&h, 4);
        let dec = v.decompose_beta(&beta, &h).unwrap();
        assert_eq!(dec.q, Rat::from(Int::from(4)));
        assert!(dec.integral && dec.cartier && dec.beta_nef);
        assert!(dec.beta_prime_class.unwrap().is_zero());
    }

    #[test]
    fn decompose_beta_on_p1xp2() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let c = |a: i64, b: i64| {
            v.class_from_coords(&[Int::from(a), Int::from(b)], &[]).unwrap()
        };
        let dec = v.decompose_beta(&c(2, 3), &c(1, 1)).unwrap();
        assert_eq!(dec.q, Rat::from(Int::from(2)));
        assert_eq!(dec.beta_prime_class.as_ref().unwrap(), &c(0, 1));
        assert!(v.is_nef(dec.beta_prime_class.as_ref().unwrap()));

        let dec = v.decompose_beta(&c(3, 3), &c(1, 1)).unwrap();
        assert_eq!(dec.q, Rat::from(Int::from(3)));
        assert!(dec.beta_prime_class.unwrap().is_zero());
    }

    #[test]
    fn class_literal_roundtrip() {
        let v = Variety::new(p1xp2_fan()).unwrap();
        let c = parse_class_literal(&v, "2,3").unwrap();
        assert_eq!(c, v.anticanonical());
        assert_eq!(c.to_string(), "2,3");
    }

    #[test]
    fn fan_file_roundtrip() {
        let text = "\
# projective 3-space
fan d=3 r=4
ray 0 1 0 0
ray 1 0 1 0
ray 2 0 0 1
ray 3 -1 -1 -1
cone 0 1 2
cone 0 1 3
cone 0 2 3
cone 1 2 3
";
        let fan = Fan::from_str_format(text).unwrap();
        assert!(fan.validate().is_valid());
        assert_eq!(fan.n_rays(), 4);
        assert_eq!(fan.max_cones().len(), 4);
    }
}
