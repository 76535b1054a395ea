//! Rational Gaussian elimination.
//!
//! Pivots are chosen by smallest combined bit length of numerator and
//! denominator, which keeps intermediate entries from blowing up on the
//! mostly-integer matrices this crate produces. The reduced row echelon
//! form itself is unique, so the pivoting strategy never changes a result,
//! only how fast we get there.

use num_traits::{One, Zero};

use super::QMat;
use crate::Rat;

fn bit_size(x: &Rat) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Reduce `m` to reduced row echelon form in place. Returns the pivot columns
/// in increasing order.
pub(crate) fn rref_in_place(m: &mut QMat) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..m.nrows()).collect();
    rref_with_perm(m, &mut perm)
}

/// Same, additionally tracking the row permutation so the caller learns
/// which original rows carry the pivots (those form an independent set).
pub(crate) fn rref_with_perm(m: &mut QMat, perm: &mut [usize]) -> Vec<usize> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut best: Option<(usize, u64)> = None;
        for i in r..rows {
            let e = m.at(i, c);
            if !e.is_zero() {
                let s = bit_size(e);
                if best.map_or(true, |(_, bs)| s < bs) {
                    best = Some((i, s));
                }
            }
        }
        let Some((pi, _)) = best else { continue };
        m.swap_rows(r, pi);
        perm.swap(r, pi);
        let inv = m.at(r, c).recip();
        if !inv.is_one() {
            m.scale_row_from(r, &inv, c);
        }
        for i in 0..rows {
            if i != r && !m.at(i, c).is_zero() {
                let f = m.at(i, c).clone();
                // Row r is zero left of column c, so the update can skip there.
                m.row_sub_mul_from(i, r, &f, c);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel basis read off a reduced row echelon form: one vector per free
/// column, with that free coordinate set to 1. The vectors are independent
/// but not yet in canonical subspace form.
pub(crate) fn kernel_from_rref(r: &QMat, pivots: &[usize]) -> Vec<Vec<Rat>> {
    let cols = r.ncols();
    let mut pivot_index = vec![usize::MAX; cols];
    for (k, &c) in pivots.iter().enumerate() {
        pivot_index[c] = k;
    }
    let mut out = Vec::new();
    for j in 0..cols {
        if pivot_index[j] != usize::MAX {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[j] = Rat::one();
        for (k, &pc) in pivots.iter().enumerate() {
            let e = r.at(k, j);
            if !e.is_zero() {
                v[pc] = -e.clone();
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rint;

    #[test]
    fn rref_identity_is_fixed() {
        let mut m = QMat::identity(3);
        let pivots = rref_in_place(&mut m);
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(m, QMat::identity(3));
    }

    #[test]
    fn rref_dependent_rows() {
        let mut m = QMat::from_rows(vec![
            vec![rint(1), rint(2)],
            vec![rint(2), rint(4)],
            vec![rint(3), rint(6)],
        ]);
        let pivots = rref_in_place(&mut m);
        assert_eq!(pivots, vec![0]);
        assert_eq!(m.at(0, 1), &rint(2));
        assert!(m.at(1, 0).is_zero() && m.at(1, 1).is_zero());
    }

    #[test]
    fn kernel_of_difference_row() {
        // H^0 of a multiplication map fixture: ker(1, -1) = span{(1, 1)}.
        let mut m = QMat::from_rows(vec![vec![rint(1), rint(-1)]]);
        let pivots = rref_in_place(&mut m);
        let k = kernel_from_rref(&m, &pivots);
        assert_eq!(k, vec![vec![rint(1), rint(1)]]);
    }
}
