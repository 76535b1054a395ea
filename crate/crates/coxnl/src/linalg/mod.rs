//! Exact linear algebra: rational elimination, integer Smith normal form,
//! and a certified modular fast path for large kernels.
//!
//! Every public result is exact and canonical. Subspaces are always reported
//! in reduced column echelon form (each basis vector's first nonzero entry
//! is 1 and sits in a row where every other basis vector vanishes), so two
//! computations of the same subspace produce identical bytes no matter which
//! internal route they took.

mod modular;
mod rref;
mod snf;

pub use snf::{smith_normal_form, SnfResult};

pub(crate) use modular::{int_mod, invmod, mulmod, primitive_int_vector, ModRowReducer, PRIMES};

use num_traits::{One, Zero};

use crate::{Int, Rat};

/// Dense matrix over the rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMat {
            nrows,
            ncols,
            data: vec![Rat::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        QMat { nrows, ncols, data }
    }

    pub fn from_cols(cols: Vec<Vec<Rat>>, nrows: usize) -> Self {
        let ncols = cols.len();
        let mut m = QMat::zeros(nrows, ncols);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.nrows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.row(r).iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                let v = self.at(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = QMat::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        let v = out.at(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (x, y) in self.row(i).iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                acc
            })
            .collect()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.ncols {
            self.data.swap(a * self.ncols + c, b * self.ncols + c);
        }
    }

    pub(crate) fn scale_row_from(&mut self, r: usize, f: &Rat, from: usize) {
        for c in from..self.ncols {
            if !self.at(r, c).is_zero() {
                let v = self.at(r, c) * f;
                self.set(r, c, v);
            }
        }
    }

    /// row i -= f * row r, touching only columns >= from.
    pub(crate) fn row_sub_mul_from(&mut self, i: usize, r: usize, f: &Rat, from: usize) {
        for c in from..self.ncols {
            if !self.at(r, c).is_zero() {
                let v = self.at(i, c) - f * self.at(r, c);
                self.set(i, c, v);
            }
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref::rref_in_place(&mut m);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.nrows * self.ncols <= RATIONAL_LIMIT {
            let mut m = self.clone();
            rref::rref_in_place(&mut m).len()
        } else {
            SparseCols::from_rat_cols_of(self).analyze().rank
        }
    }

    /// Canonical basis of the right kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        if self.nrows * self.ncols <= RATIONAL_LIMIT || self.nrows.min(self.ncols) <= 8 {
            let mut m = self.clone();
            let pivots = rref::rref_in_place(&mut m);
            let raw = rref::kernel_from_rref(&m, &pivots);
            canonical_subspace(raw, self.ncols)
        } else {
            // The left kernel of the transpose, with rows of this matrix
            // entering as integer columns, is the right kernel.
            let sc = SparseCols::from_rat_rows_of(self);
            let analysis = sc.analyze();
            let raw = analysis
                .ann
                .iter()
                .map(|v| v.iter().map(|x| Rat::from(x.clone())).collect())
                .collect();
            canonical_subspace(raw, self.ncols)
        }
    }

    /// One solution of `self * x = rhs` with every free variable set to
    /// zero, or None if the system is inconsistent. Deterministic: the
    /// pivot set of the reduced echelon form does not depend on pivot
    /// choices.
    pub fn solve_particular(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.nrows);
        let mut aug = QMat::zeros(self.nrows, self.ncols + 1);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                if !self.at(r, c).is_zero() {
                    aug.set(r, c, self.at(r, c).clone());
                }
            }
            if !rhs[r].is_zero() {
                aug.set(r, self.ncols, rhs[r].clone());
            }
        }
        let pivots = rref::rref_in_place(&mut aug);
        if pivots.contains(&self.ncols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.ncols];
        for (k, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(k, self.ncols).clone();
        }
        Some(x)
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Int>,
}

impl ZMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        ZMat {
            nrows,
            ncols,
            data: vec![Int::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ZMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        ZMat { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn mul(&self, rhs: &ZMat) -> ZMat {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = ZMat::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        let v = self.at(i, k) * b + out.at(i, j);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                let mut acc = Int::zero();
                for (x, y) in self.row(i).iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> ZMat {
        let mut t = ZMat::zeros(self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                if !self.at(r, c).is_zero() {
                    t.set(c, r, self.at(r, c).clone());
                }
            }
        }
        t
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.ncols {
            self.data.swap(a * self.ncols + c, b * self.ncols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.nrows {
            self.data.swap(r * self.ncols + a, r * self.ncols + b);
        }
    }

    /// row i -= q * row t
    pub(crate) fn row_sub_mul(&mut self, i: usize, t: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.ncols {
            if !self.at(t, c).is_zero() {
                let v = self.at(i, c) - q * self.at(t, c);
                self.set(i, c, v);
            }
        }
    }

    /// col j -= q * col t
    pub(crate) fn col_sub_mul(&mut self, j: usize, t: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.nrows {
            if !self.at(r, t).is_zero() {
                let v = self.at(r, j) - q * self.at(r, t);
                self.set(r, j, v);
            }
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.ncols {
            let v = -self.at(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// Fraction-free determinant (Bareiss). Square matrices only.
    pub fn det(&self) -> Int {
        assert_eq!(self.nrows, self.ncols, "det of non-square matrix");
        let n = self.nrows;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Int::zero();
                };
                a.swap(k, s);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// Inverse of a matrix with determinant +-1. Panics if the matrix is
    /// not unimodular.
    pub fn inverse_unimodular(&self) -> ZMat {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut aug = QMat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                if !self.at(r, c).is_zero() {
                    aug.set(r, c, Rat::from(self.at(r, c).clone()));
                }
            }
            aug.set(r, n + r, Rat::one());
        }
        let pivots = rref::rref_in_place(&mut aug);
        assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "matrix not invertible");
        let mut out = ZMat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let v = aug.at(r, n + c);
                assert!(v.is_integer(), "matrix not unimodular");
                out.set(r, c, v.numer().clone());
            }
        }
        out
    }
}

/// Sparse integer matrix stored by columns; the workhorse format for graded
/// pieces of ideals, where columns are generator-times-monomial products.
#[derive(Clone, Debug)]
pub struct SparseCols {
    pub n_rows: usize,
    pub cols: Vec<Vec<(u32, Int)>>,
}

impl SparseCols {
    pub fn new(n_rows: usize) -> Self {
        SparseCols {
            n_rows,
            cols: Vec::new(),
        }
    }

    /// Entries must be sorted by row and nonzero.
    pub fn push_col(&mut self, col: Vec<(u32, Int)>) {
        debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(col.iter().all(|(i, v)| (*i as usize) < self.n_rows && !v.is_zero()));
        self.cols.push(col);
    }

    /// Columns of a rational matrix, each scaled to primitive integer form.
    /// Column scaling preserves the span, so rank and annihilator are
    /// unchanged.
    pub fn from_rat_cols_of(m: &QMat) -> Self {
        let mut sc = SparseCols::new(m.nrows());
        for j in 0..m.ncols() {
            sc.push_col(scaled_col(&m.col(j)));
        }
        sc
    }

    /// Push a dense rational column, scaled to primitive integer form.
    /// Zero columns are dropped; they never change the span.
    pub fn push_dense_rat_col(&mut self, v: &[Rat]) {
        assert_eq!(v.len(), self.n_rows);
        let col = scaled_col(v);
        if !col.is_empty() {
            self.push_col(col);
        }
    }

    /// Rows of a rational matrix as integer columns: the annihilator of this
    /// span is the right kernel of `m`.
    pub fn from_rat_rows_of(m: &QMat) -> Self {
        let mut sc = SparseCols::new(m.ncols());
        for i in 0..m.nrows() {
            sc.push_col(scaled_col(m.row(i)));
        }
        sc
    }

    pub fn transpose(&self) -> SparseCols {
        let mut rows: Vec<Vec<(u32, Int)>> = vec![Vec::new(); self.n_rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, ref v) in col {
                rows[i as usize].push((j as u32, v.clone()));
            }
        }
        SparseCols {
            n_rows: self.cols.len(),
            cols: rows,
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn max_entry_bits(&self) -> u64 {
        self.cols
            .iter()
            .flat_map(|c| c.iter().map(|(_, v)| v.bits()))
            .max()
            .unwrap_or(0)
    }

    /// Certified analysis of the column span: exact rank and an exact,
    /// verified basis of the left kernel.
    pub fn analyze(&self) -> SpanAnalysis {
        let dense_cost = self.n_rows * self.cols.len();
        if dense_cost <= RATIONAL_LIMIT || self.n_rows.min(self.cols.len()) <= 8 {
            return self.analyze_rational();
        }
        match modular::analyze_modular(self) {
            Some(a) => a,
            // Every prime failed; astronomically unlikely, but elimination
            // over the rationals is always available as the slow exact path.
            None => self.analyze_rational(),
        }
    }

    fn analyze_rational(&self) -> SpanAnalysis {
        let n = self.n_rows;
        // Transposed dense copy: each column becomes a row.
        let mut d = QMat::zeros(self.cols.len(), n);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, ref v) in col {
                d.set(j, i as usize, Rat::from(v.clone()));
            }
        }
        let mut perm: Vec<usize> = (0..self.cols.len()).collect();
        let pivot_rows = rref::rref_with_perm(&mut d, &mut perm);
        let r = pivot_rows.len();
        let pivot_cols: Vec<usize> = perm[..r].to_vec();
        let raw = rref::kernel_from_rref(&d, &pivot_rows);
        let ann = raw.iter().map(|v| primitive_int_vector(v)).collect();
        SpanAnalysis {
            rank: r,
            pivot_rows,
            pivot_cols,
            ann,
        }
    }

    /// True if `dense` is annihilated by every vector in `ann`, i.e. lies in
    /// the column span.
    pub fn member_with(&self, analysis: &SpanAnalysis, dense: &[Rat]) -> bool {
        assert_eq!(dense.len(), self.n_rows);
        analysis.ann.iter().all(|lam| {
            let mut acc = Rat::zero();
            for (l, v) in lam.iter().zip(dense) {
                if !l.is_zero() && !v.is_zero() {
                    acc += v * Rat::from(l.clone());
                }
            }
            acc.is_zero()
        })
    }
}

fn scaled_col(v: &[Rat]) -> Vec<(u32, Int)> {
    let ints = primitive_int_vector(v);
    ints.into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i as u32, x))
        .collect()
}

/// Above this many dense entries the modular route takes over.
const RATIONAL_LIMIT: usize = 30_000;

/// Certified description of a column span.
#[derive(Clone, Debug)]
pub struct SpanAnalysis {
    /// Exact rank, certified by a nonsingular minor modulo a prime together
    /// with the verified kernel vectors below.
    pub rank: usize,
    /// Coordinate positions where the span has full rank (row indices of a
    /// nonsingular minor).
    pub pivot_rows: Vec<usize>,
    /// Column indices forming a basis of the span.
    pub pivot_cols: Vec<usize>,
    /// Primitive integer basis of the left kernel, exactly verified against
    /// every column. Each vector has a positive entry at its own free
    /// coordinate, where all the others vanish.
    pub ann: Vec<Vec<Int>>,
}

impl SpanAnalysis {
    pub fn corank(&self) -> usize {
        self.ann.len()
    }
}

/// Canonical form of the subspace spanned by `vectors`: reduced column
/// echelon, with each basis vector's leading entry equal to 1.
pub fn canonical_subspace(vectors: Vec<Vec<Rat>>, width: usize) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    debug_assert!(vectors.iter().all(|v| v.len() == width));
    let mut m = QMat::from_rows(vectors);
    rref::rref_in_place(&mut m);
    (0..m.nrows())
        .filter(|&i| !m.row_is_zero(i))
        .map(|i| m.row(i).to_vec())
        .collect()
}

/// Canonical basis and leading coordinate set of the column span described
/// by `analysis`. Routes through whichever of the span or its annihilator is
/// smaller.
pub fn span_canonical_basis(m: &SparseCols, analysis: &SpanAnalysis) -> Vec<Vec<Rat>> {
    let r = analysis.rank;
    let k = analysis.corank();
    if k == 0 {
        // Full coordinate space.
        return (0..m.n_rows)
            .map(|i| {
                let mut v = vec![Rat::zero(); m.n_rows];
                v[i] = Rat::one();
                v
            })
            .collect();
    }
    if r <= k {
        let gens: Vec<Vec<Rat>> = analysis
            .pivot_cols
            .iter()
            .map(|&c| {
                let mut v = vec![Rat::zero(); m.n_rows];
                for &(i, ref x) in &m.cols[c] {
                    v[i as usize] = Rat::from(x.clone());
                }
                v
            })
            .collect();
        canonical_subspace(gens, m.n_rows)
    } else {
        // The span is the kernel of its annihilator: it is contained by
        // construction, and the dimensions agree.
        let rows: Vec<Vec<Rat>> = analysis
            .ann
            .iter()
            .map(|a| a.iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        let ann_mat = QMat::from_rows(rows);
        ann_mat.kernel_basis()
    }
}

/// Leading coordinates of the canonical basis: the lexicographically first
/// coordinate subset on which the span projects isomorphically.
pub fn leading_coords(basis: &[Vec<Rat>]) -> Vec<usize> {
    basis
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).expect("zero basis vector"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn rank_fixtures() {
        assert_eq!(QMat::zeros(3, 4).rank(), 0);
        assert_eq!(QMat::identity(4).rank(), 4);
        let m = QMat::from_rows(vec![
            vec![rint(1), rint(2), rint(3)],
            vec![rint(2), rint(4), rint(6)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_identity_is_trivial() {
        assert!(QMat::identity(5).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_canonical_form() {
        // ker(1, 1) = span{(1, -1)}: leading entry normalized to 1.
        let m = QMat::from_rows(vec![vec![rint(1), rint(1)]]);
        assert_eq!(m.kernel_basis(), vec![vec![rint(1), rint(-1)]]);
    }

    #[test]
    fn solve_particular_prefers_zero_free_vars() {
        let m = QMat::from_rows(vec![vec![rint(1), rint(1), rint(0)]]);
        let x = m.solve_particular(&[rint(3)]).unwrap();
        assert_eq!(x, vec![rint(3), rint(0), rint(0)]);
        assert!(m.solve_particular(&[rint(0)]).is_some());
        let inconsistent = QMat::from_rows(vec![vec![rint(0), rint(0), rint(0)]]);
        assert!(inconsistent.solve_particular(&[rint(1)]).is_none());
    }

    #[test]
    fn rank_plus_kernel_is_columns_on_seeded_matrices() {
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        for _ in 0..100 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let m = QMat::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| rint(rng.gen_range(-4..5))).collect())
                    .collect(),
            );
            let rank = m.rank();
            let kernel = m.kernel_basis();
            assert_eq!(rank + kernel.len(), cols);
            for v in &kernel {
                assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn modular_and_rational_analyses_agree() {
        let mut rng = ChaCha12Rng::seed_from_u64(23);
        for trial in 0..40 {
            let n = rng.gen_range(3..12);
            let ncols = rng.gen_range(1..14);
            let mut sc = SparseCols::new(n);
            for _ in 0..ncols {
                let mut col: Vec<(u32, Int)> = (0..n)
                    .filter_map(|i| {
                        if rng.gen_bool(0.6) {
                            let v = rng.gen_range(-30i64..31);
                            if v != 0 {
                                return Some((i as u32, Int::from(v)));
                            }
                        }
                        None
                    })
                    .collect();
                col.sort_by_key(|e| e.0);
                if col.is_empty() {
                    col.push((0, Int::from(1)));
                }
                sc.push_col(col);
            }
            let rational = sc.analyze_rational();
            let modular = modular::analyze_modular(&sc).expect("modular analysis");
            assert_eq!(rational.rank, modular.rank, "trial {trial}");
            let to_rat = |ann: &Vec<Vec<Int>>| {
                ann.iter()
                    .map(|v| v.iter().map(|x| Rat::from(x.clone())).collect::<Vec<Rat>>())
                    .collect::<Vec<_>>()
            };
            assert_eq!(
                canonical_subspace(to_rat(&rational.ann), n),
                canonical_subspace(to_rat(&modular.ann), n),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn span_membership_by_annihilator() {
        // span{(1,1,0), (0,1,1)}
        let mut sc = SparseCols::new(3);
        sc.push_col(vec![(0, Int::from(1)), (1, Int::from(1))]);
        sc.push_col(vec![(1, Int::from(1)), (2, Int::from(1))]);
        let a = sc.analyze();
        assert_eq!(a.rank, 2);
        assert_eq!(a.corank(), 1);
        assert!(sc.member_with(&a, &[rint(1), rint(2), rint(1)]));
        assert!(!sc.member_with(&a, &[rint(1), rint(0), rint(1)]));
    }

    #[test]
    fn canonical_basis_routes_agree() {
        let mut rng = ChaCha12Rng::seed_from_u64(41);
        for _ in 0..30 {
            let n = rng.gen_range(2..8);
            let ncols = rng.gen_range(1..9);
            let mut sc = SparseCols::new(n);
            for _ in 0..ncols {
                let col: Vec<(u32, Int)> = (0..n)
                    .filter_map(|i| {
                        let v = rng.gen_range(-3i64..4);
                        (v != 0).then(|| (i as u32, Int::from(v)))
                    })
                    .collect();
                if col.is_empty() {
                    continue;
                }
                sc.push_col(col);
            }
            if sc.cols.is_empty() {
                continue;
            }
            let a = sc.analyze();
            let via_gens: Vec<Vec<Rat>> = {
                let gens = a
                    .pivot_cols
                    .iter()
                    .map(|&c| {
                        let mut v = vec![Rat::zero(); n];
                        for &(i, ref x) in &sc.cols[c] {
                            v[i as usize] = Rat::from(x.clone());
                        }
                        v
                    })
                    .collect();
                canonical_subspace(gens, n)
            };
            let basis = span_canonical_basis(&sc, &a);
            assert_eq!(via_gens, basis);
        }
    }

    #[test]
    fn unimodular_inverse() {
        let u = ZMat::from_rows(vec![
            vec![Int::from(1), Int::from(2)],
            vec![Int::from(0), Int::from(1)],
        ]);
        let ui = u.inverse_unimodular();
        assert_eq!(u.mul(&ui), ZMat::identity(2));
    }

    #[test]
    fn bareiss_det() {
        let m = ZMat::from_rows(vec![
            vec![Int::from(2), Int::from(0), Int::from(1)],
            vec![Int::from(1), Int::from(3), Int::from(2)],
            vec![Int::from(0), Int::from(1), Int::from(4)],
        ]);
        // expansion: 2*(12-2) - 0 + 1*(1-0) = 21
        assert_eq!(m.det(), Int::from(21));
        assert_eq!(ZMat::identity(4).det(), Int::from(1));
        assert_eq!(ZMat::zeros(2, 2).det(), Int::from(0));
    }

    #[test]
    fn canonical_subspace_scales_leading_entries() {
        let vs = vec![vec![rat(-2, 1), rint(4)], vec![rint(1), rint(-2)]];
        let c = canonical_subspace(vs, 2);
        assert_eq!(c, vec![vec![rint(1), rint(-2)]]);
    }
}
