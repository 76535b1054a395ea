//! Certified modular fast path for large exact kernel computations.
//!
//! Nothing leaves this module on modular evidence alone. Kernel vectors are
//! lifted p-adically and then verified over the integers against every
//! column. Rank claims are certified in both directions: a nonsingular r x r
//! minor modulo p bounds the rank below by r, and the verified independent
//! kernel vectors bound it above. A prime that produces an unliftable or
//! unverifiable system is discarded and the next one tried; the prime list
//! is fixed, so results are reproducible.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{SpanAnalysis, SparseCols};
use crate::{Int, Rat};

/// Primes just below 2^62, large enough that a random matrix loses rank
/// modulo one of them with negligible probability, small enough that
/// products fit in u128 arithmetic.
pub(crate) const PRIMES: [u64; 16] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
    4611686018427387701,
    4611686018427387631,
    4611686018427387617,
    4611686018427387587,
    4611686018427387461,
    4611686018427387421,
    4611686018427387409,
    4611686018427387329,
];

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub(crate) fn int_mod(x: &Int, p: u64) -> u64 {
    let m = x.mod_floor(&Int::from(p));
    m.to_u64().expect("residue fits u64")
}

/// Incremental row eliminator modulo p. Pivot rows are normalized to leading
/// coefficient 1, and each inserted row is fully reduced against them first.
pub(crate) struct ModRowReducer {
    pub p: u64,
    pub width: usize,
    /// (normalized row, leading coordinate, caller tag)
    pub pivots: Vec<(Vec<u64>, usize, usize)>,
    pivot_at: Vec<Option<usize>>,
}

impl ModRowReducer {
    pub fn new(width: usize, p: u64) -> Self {
        ModRowReducer {
            p,
            width,
            pivots: Vec::new(),
            pivot_at: vec![None; width],
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` in place against the current pivots; if a nonzero
    /// residue remains it becomes a new pivot. Returns true if the row was
    /// independent of the span so far.
    pub fn insert(&mut self, mut row: Vec<u64>, tag: usize) -> bool {
        let p = self.p;
        debug_assert_eq!(row.len(), self.width);
        let mut c = 0;
        while c < self.width {
            if row[c] == 0 {
                c += 1;
                continue;
            }
            match self.pivot_at[c] {
                Some(k) => {
                    let f = p - row[c];
                    let pr = &self.pivots[k].0;
                    for j in c..self.width {
                        if pr[j] != 0 {
                            row[j] = (row[j] + mulmod(f, pr[j], p)) % p;
                        }
                    }
                    c += 1;
                }
                None => break,
            }
        }
        if c == self.width {
            return false;
        }
        let inv = invmod(row[c], p);
        for x in row[c..].iter_mut() {
            if *x != 0 {
                *x = mulmod(*x, inv, p);
            }
        }
        self.pivot_at[c] = Some(self.pivots.len());
        self.pivots.push((row, c, tag));
        true
    }

    /// Leading coordinates of the pivot rows, in insertion order.
    #[cfg(test)]
    pub fn pivot_coords(&self) -> Vec<usize> {
        self.pivots.iter().map(|(_, c, _)| *c).collect()
    }

    /// Caller tags of the pivot rows, in insertion order.
    #[cfg(test)]
    pub fn pivot_tags(&self) -> Vec<usize> {
        self.pivots.iter().map(|(_, _, t)| *t).collect()
    }
}

/// Row echelon form of a dense matrix modulo p, batch version with parallel
/// updates. Returns (pivot columns ascending, source row index per pivot).
fn echelon_mod_p(rows: &mut [Vec<u64>], n_cols: usize, p: u64) -> (Vec<usize>, Vec<usize>) {
    let m = rows.len();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut pivots = Vec::new();
    let mut sources = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == m {
            break;
        }
        let Some(pi) = (r..m).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pi);
        perm.swap(r, pi);
        let inv = invmod(rows[r][c], p);
        for x in rows[r][c..].iter_mut() {
            if *x != 0 {
                *x = mulmod(*x, inv, p);
            }
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        tail.par_iter_mut().for_each(|row| {
            if row[c] != 0 {
                let f = p - row[c];
                for j in c..n_cols {
                    if pivot_row[j] != 0 {
                        row[j] = (row[j] + mulmod(f, pivot_row[j], p)) % p;
                    }
                }
            }
        });
        pivots.push(c);
        sources.push(perm[r]);
        r += 1;
    }
    (pivots, sources)
}

/// LU factorization modulo p with partial pivoting.
pub(crate) struct ModLu {
    n: usize,
    p: u64,
    rows: Vec<Vec<u64>>,
    perm: Vec<usize>,
    inv_diag: Vec<u64>,
}

impl ModLu {
    pub fn factor(mut rows: Vec<Vec<u64>>, p: u64) -> Option<ModLu> {
        let n = rows.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut inv_diag = vec![0u64; n];
        for c in 0..n {
            let pi = (c..n).find(|&i| rows[i][c] != 0)?;
            rows.swap(c, pi);
            perm.swap(c, pi);
            let inv = invmod(rows[c][c], p);
            inv_diag[c] = inv;
            let (head, tail) = rows.split_at_mut(c + 1);
            let pivot_row = &head[c];
            tail.par_iter_mut().for_each(|row| {
                if row[c] != 0 {
                    let f = mulmod(row[c], inv, p);
                    row[c] = f;
                    for j in (c + 1)..n {
                        if pivot_row[j] != 0 {
                            let s = mulmod(f, pivot_row[j], p);
                            row[j] = (row[j] + p - s) % p;
                        }
                    }
                }
            });
        }
        Some(ModLu {
            n,
            p,
            rows,
            perm,
            inv_diag,
        })
    }

    pub fn solve(&self, b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let n = self.n;
        let mut y: Vec<u64> = (0..n).map(|i| b[self.perm[i]]).collect();
        for i in 1..n {
            let row = &self.rows[i];
            let mut acc = y[i] as u128;
            for c in 0..i {
                if row[c] != 0 && y[c] != 0 {
                    acc += (p - mulmod(row[c], y[c], p)) as u128;
                }
            }
            y[i] = (acc % p as u128) as u64;
        }
        for i in (0..n).rev() {
            let row = &self.rows[i];
            let mut acc = y[i] as u128;
            for c in (i + 1)..n {
                if row[c] != 0 && y[c] != 0 {
                    acc += (p - mulmod(row[c], y[c], p)) as u128;
                }
            }
            y[i] = mulmod((acc % p as u128) as u64, self.inv_diag[i], p);
        }
        y
    }
}

/// Rational reconstruction with symmetric Wang bounds: recover n/d from
/// n/d mod m when |n|, d <= sqrt((m-1)/2).
pub(crate) fn rational_reconstruct(a: &Int, m: &Int) -> Option<Rat> {
    let bound = ((m - Int::one()) >> 1usize).sqrt();
    let mut r0 = m.clone();
    let mut r1 = a.mod_floor(m);
    let mut t0 = Int::zero();
    let mut t1 = Int::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    let (mut n, mut d) = (r1, t1);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    if d > bound || !n.gcd(&d).is_one() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Square system rows for the residual updates during lifting. The small
/// variant keeps entries in i64 and is only built when every entry, every
/// right-hand side, and the accumulated dot products provably fit i128.
pub(crate) enum SqRows {
    Small(Vec<Vec<(u32, i64)>>),
    Big(Vec<Vec<(u32, Int)>>),
}

const RECONSTRUCT_START: usize = 8;

fn checkpoint_next(k: usize) -> usize {
    k + (k / 2).max(4)
}

/// Dixon lifting: solve A x = b exactly, given an LU factorization of A
/// modulo p. Adaptive: attempts rational reconstruction on a growing
/// schedule and returns as soon as a candidate verifies exactly.
pub(crate) fn dixon_solve(a: &SqRows, lu: &ModLu, b: &[Int], max_iters: usize) -> Option<Vec<Rat>> {
    match a {
        SqRows::Small(rows) => {
            let b_small: Option<Vec<i64>> = b.iter().map(|x| x.to_i64()).collect();
            match b_small {
                Some(bs) => dixon_small(rows, lu, &bs, b, max_iters),
                None => None,
            }
        }
        SqRows::Big(rows) => dixon_big(rows, lu, b, max_iters),
    }
}

fn dixon_small(
    rows: &[Vec<(u32, i64)>],
    lu: &ModLu,
    b: &[i64],
    b_int: &[Int],
    max_iters: usize,
) -> Option<Vec<Rat>> {
    let p = lu.p;
    let n = rows.len();
    let mut resid: Vec<i64> = b.to_vec();
    let mut x_acc: Vec<Int> = vec![Int::zero(); n];
    let mut pk = Int::one();
    let mut next_check = RECONSTRUCT_START;
    for iter in 0..max_iters {
        if resid.iter().all(|&x| x == 0) {
            let cand: Vec<Rat> = x_acc.iter().map(|x| Rat::from(x.clone())).collect();
            if verify_small(rows, &cand, b_int) {
                return Some(cand);
            }
            return None;
        }
        let rmod: Vec<u64> = resid.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        let y = lu.solve(&rmod);
        for i in 0..n {
            if y[i] != 0 {
                x_acc[i] += &pk * Int::from(y[i]);
            }
        }
        for (i, row) in rows.iter().enumerate() {
            let mut acc = resid[i] as i128;
            for &(j, v) in row {
                let yj = y[j as usize];
                if yj != 0 {
                    acc -= v as i128 * yj as i128;
                }
            }
            debug_assert_eq!(acc % p as i128, 0);
            resid[i] = (acc / p as i128) as i64;
        }
        pk *= Int::from(p);
        if iter + 1 >= next_check {
            next_check = checkpoint_next(next_check);
            if let Some(cand) = try_reconstruct(&x_acc, &pk) {
                if verify_small(rows, &cand, b_int) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn dixon_big(rows: &[Vec<(u32, Int)>], lu: &ModLu, b: &[Int], max_iters: usize) -> Option<Vec<Rat>> {
    let p = lu.p;
    let p_int = Int::from(p);
    let n = rows.len();
    let mut resid: Vec<Int> = b.to_vec();
    let mut x_acc: Vec<Int> = vec![Int::zero(); n];
    let mut pk = Int::one();
    let mut next_check = RECONSTRUCT_START;
    for iter in 0..max_iters {
        if resid.iter().all(|x| x.is_zero()) {
            let cand: Vec<Rat> = x_acc.iter().map(|x| Rat::from(x.clone())).collect();
            if verify_big(rows, &cand, b) {
                return Some(cand);
            }
            return None;
        }
        let rmod: Vec<u64> = resid.iter().map(|x| int_mod(x, p)).collect();
        let y = lu.solve(&rmod);
        for i in 0..n {
            if y[i] != 0 {
                x_acc[i] += &pk * Int::from(y[i]);
            }
        }
        let new_resid: Vec<Int> = rows
            .par_iter()
            .enumerate()
            .map(|(i, row)| {
                let mut acc = resid[i].clone();
                for &(j, ref v) in row {
                    let yj = y[j as usize];
                    if yj != 0 {
                        acc -= v * Int::from(yj);
                    }
                }
                debug_assert!((&acc % &p_int).is_zero());
                acc / &p_int
            })
            .collect();
        resid = new_resid;
        pk *= &p_int;
        if iter + 1 >= next_check {
            next_check = checkpoint_next(next_check);
            if let Some(cand) = try_reconstruct(&x_acc, &pk) {
                if verify_big(rows, &cand, b) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn try_reconstruct(x_acc: &[Int], modulus: &Int) -> Option<Vec<Rat>> {
    let mut out = Vec::with_capacity(x_acc.len());
    for x in x_acc {
        out.push(rational_reconstruct(x, modulus)?);
    }
    Some(out)
}

/// Check A * cand == b exactly by clearing denominators.
fn verify_small(rows: &[Vec<(u32, i64)>], cand: &[Rat], b: &[Int]) -> bool {
    let (nums, den) = clear_denoms(cand);
    rows.par_iter().enumerate().all(|(i, row)| {
        let mut acc = Int::zero();
        for &(j, v) in row {
            let nj = &nums[j as usize];
            if !nj.is_zero() {
                acc += nj * Int::from(v);
            }
        }
        acc == &b[i] * &den
    })
}

fn verify_big(rows: &[Vec<(u32, Int)>], cand: &[Rat], b: &[Int]) -> bool {
    let (nums, den) = clear_denoms(cand);
    rows.par_iter().enumerate().all(|(i, row)| {
        let mut acc = Int::zero();
        for &(j, ref v) in row {
            let nj = &nums[j as usize];
            if !nj.is_zero() {
                acc += v * nj;
            }
        }
        acc == &b[i] * &den
    })
}

fn clear_denoms(cand: &[Rat]) -> (Vec<Int>, Int) {
    let mut den = Int::one();
    for c in cand {
        den = den.lcm(c.denom());
    }
    let nums: Vec<Int> = cand.iter().map(|c| (c.numer() * &den) / c.denom()).collect();
    (nums, den)
}

/// Certified span analysis by the modular route. Returns None if every prime
/// in the list fails, in which case the caller falls back to rational
/// elimination.
pub(crate) fn analyze_modular(m: &SparseCols) -> Option<SpanAnalysis> {
    let n = m.n_rows;
    let ncols = m.cols.len();
    let max_bits = m.max_entry_bits();
    'primes: for &p in PRIMES.iter() {
        // Row-reduce the transpose: each column of m becomes a dense row.
        let mut rows: Vec<Vec<u64>> = m
            .cols
            .par_iter()
            .map(|col| {
                let mut r = vec![0u64; n];
                for &(i, ref v) in col {
                    r[i as usize] = int_mod(v, p);
                }
                r
            })
            .collect();
        let (pivot_rows, pivot_cols) = echelon_mod_p(&mut rows, n, p);
        drop(rows);
        let r = pivot_rows.len();
        if r == n {
            // Full coordinate rank: the r x r minor on (pivot_rows,
            // pivot_cols) is nonsingular mod p and the kernel is trivially
            // empty, so the rank is certified without lifting.
            return Some(SpanAnalysis {
                rank: r,
                pivot_rows,
                pivot_cols,
                ann: Vec::new(),
            });
        }

        let mut coord_index = vec![usize::MAX; n];
        for (l, &i) in pivot_rows.iter().enumerate() {
            coord_index[i] = l;
        }

        // Square subsystem: one equation per basis column, one unknown per
        // pivot coordinate.
        let small = max_bits <= 40 && r <= 4096;
        let mut sq_small: Vec<Vec<(u32, i64)>> = Vec::new();
        let mut sq_big: Vec<Vec<(u32, Int)>> = Vec::new();
        let mut sq_mod: Vec<Vec<u64>> = Vec::with_capacity(r);
        for &c in &pivot_cols {
            let mut row_mod = vec![0u64; r];
            let mut row_small = Vec::new();
            let mut row_big = Vec::new();
            for &(i, ref v) in &m.cols[c] {
                let l = coord_index[i as usize];
                if l != usize::MAX {
                    row_mod[l] = int_mod(v, p);
                    if small {
                        row_small.push((l as u32, v.to_i64().expect("checked small")));
                    } else {
                        row_big.push((l as u32, v.clone()));
                    }
                }
            }
            sq_mod.push(row_mod);
            if small {
                sq_small.push(row_small);
            } else {
                sq_big.push(row_big);
            }
        }
        let sq = if small {
            SqRows::Small(sq_small)
        } else {
            SqRows::Big(sq_big)
        };
        let Some(lu) = ModLu::factor(sq_mod, p) else {
            continue 'primes;
        };

        // Hadamard-flavored bound on the bit size of solution entries, plus
        // slack for the reconstruction schedule.
        let log_r = (usize::BITS - r.leading_zeros()) as u64;
        let max_iters = ((2 * r as u64 * (max_bits + log_r + 1)) / 62 + 64) as usize;

        let mut ann: Vec<Vec<Int>> = Vec::with_capacity(n - r);
        for j in 0..n {
            if coord_index[j] != usize::MAX {
                continue;
            }
            let mut b = vec![Int::zero(); r];
            for (k, &c) in pivot_cols.iter().enumerate() {
                for &(i, ref v) in &m.cols[c] {
                    if i as usize == j {
                        b[k] = -v.clone();
                    }
                }
            }
            let Some(x) = dixon_solve(&sq, &lu, &b, max_iters) else {
                continue 'primes;
            };
            let mut lam = vec![Rat::zero(); n];
            lam[j] = Rat::one();
            for (l, &i) in pivot_rows.iter().enumerate() {
                lam[i] = x[l].clone();
            }
            ann.push(primitive_int_vector(&lam));
        }

        // Exact verification of every kernel vector against every column.
        let ok = ann
            .par_iter()
            .all(|lam| (0..ncols).all(|c| dot_sparse(lam, &m.cols[c]).is_zero()));
        if !ok {
            continue 'primes;
        }
        return Some(SpanAnalysis {
            rank: r,
            pivot_rows,
            pivot_cols,
            ann,
        });
    }
    None
}

pub(crate) fn dot_sparse(dense: &[Int], col: &[(u32, Int)]) -> Int {
    let mut acc = Int::zero();
    for &(i, ref v) in col {
        let d = &dense[i as usize];
        if !d.is_zero() {
            acc += d * v;
        }
    }
    acc
}

/// Clear denominators and divide by the content; the result generates the
/// same line and its first nonzero entry in scan order keeps the sign of the
/// input's first nonzero entry.
pub(crate) fn primitive_int_vector(v: &[Rat]) -> Vec<Int> {
    let mut den = Int::one();
    for x in v {
        if !x.is_zero() {
            den = den.lcm(x.denom());
        }
    }
    let mut ints: Vec<Int> = v.iter().map(|x| (x.numer() * &den) / x.denom()).collect();
    let mut g = Int::zero();
    for x in &ints {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn miller_rabin(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            if n % q == 0 {
                return n == q;
            }
        }
        let mut d = n - 1;
        let mut s = 0;
        while d % 2 == 0 {
            d /= 2;
            s += 1;
        }
        'wit: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            let mut x = powmod(a, d, n);
            if x == 1 || x == n - 1 {
                continue;
            }
            for _ in 0..s - 1 {
                x = mulmod(x, x, n);
                if x == n - 1 {
                    continue 'wit;
                }
            }
            return false;
        }
        true
    }

    #[test]
    fn prime_list_is_prime() {
        // Deterministic Miller-Rabin with these witnesses is exact below
        // 3.3 * 10^24, far above 2^62.
        for &p in PRIMES.iter() {
            assert!(miller_rabin(p), "{p} is not prime");
            assert!(p < 1 << 62);
        }
    }

    #[test]
    fn reconstruct_roundtrip() {
        let p = Int::from(PRIMES[0]);
        let m = &p * &p * &p;
        for (n, d) in [(22i64, 7i64), (-355, 113), (0, 1), (1, 1), (-100, 99)] {
            let target = rat(n, d);
            // n/d mod m
            let dinv = Int::from(d).extended_gcd(&m).x.mod_floor(&m);
            let residue = (Int::from(n) * dinv).mod_floor(&m);
            let got = rational_reconstruct(&residue, &m).expect("reconstructible");
            assert_eq!(got, target);
        }
    }

    #[test]
    fn dixon_matches_direct_solve() {
        // 3x3 integer system with a fraction-valued solution.
        let a_rows: Vec<Vec<(u32, i64)>> = vec![
            vec![(0, 2), (1, 1)],
            vec![(0, 1), (1, 3), (2, 1)],
            vec![(1, 1), (2, 4)],
        ];
        let p = PRIMES[0];
        let dense: Vec<Vec<u64>> = a_rows
            .iter()
            .map(|r| {
                let mut row = vec![0u64; 3];
                for &(j, v) in r {
                    row[j as usize] = (v.rem_euclid(p as i64)) as u64;
                }
                row
            })
            .collect();
        let lu = ModLu::factor(dense, p).unwrap();
        let b = vec![Int::from(1), Int::from(0), Int::from(5)];
        let x = dixon_solve(&SqRows::Small(a_rows.clone()), &lu, &b, 200).unwrap();
        // verify A x = b independently
        let expect = [
            (&x[0] * rat(2, 1) + &x[1], rat(1, 1)),
            (&x[0] + &x[1] * rat(3, 1) + &x[2], rat(0, 1)),
            (&x[1] + &x[2] * rat(4, 1), rat(5, 1)),
        ];
        for (lhs, rhs) in expect {
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mod_row_reducer_finds_rank() {
        let p = PRIMES[1];
        let mut red = ModRowReducer::new(3, p);
        assert!(red.insert(vec![1, 2, 3], 0));
        assert!(red.insert(vec![2, 4, 7], 1));
        // dependent on the first two
        assert!(!red.insert(vec![3, 6, 10], 2));
        assert_eq!(red.rank(), 2);
        assert_eq!(red.pivot_coords(), vec![0, 2]);
        assert_eq!(red.pivot_tags(), vec![0, 1]);
    }
}
