//! Smith normal form over the integers.
//!
//! Returns unimodular transforms alongside the diagonal, since class group
//! computations need both directions of the change of basis.

use num_traits::{Signed, Zero};

use super::ZMat;
use crate::Int;

/// Smith normal form `d = u * a * v` with `u`, `v` unimodular, the diagonal
/// of `d` non-negative, and each diagonal entry dividing the next.
pub struct SnfResult {
    pub d: ZMat,
    pub u: ZMat,
    pub v: ZMat,
}

/// Pivot choice: entry of smallest absolute value in the remaining block,
/// breaking ties by row then column. This is deterministic and keeps the
/// Euclidean reduction steps short.
fn find_pivot(a: &ZMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, Int)> = None;
    for i in t..a.nrows() {
        for j in t..a.ncols() {
            let e = a.at(i, j);
            if e.is_zero() {
                continue;
            }
            let v = e.abs();
            let better = match &best {
                None => true,
                Some((_, _, bv)) => v < *bv,
            };
            if better {
                best = Some((i, j, v));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_normal_form(a: &ZMat) -> SnfResult {
    let mut d = a.clone();
    let mut u = ZMat::identity(a.nrows());
    let mut v = ZMat::identity(a.ncols());
    let steps = a.nrows().min(a.ncols());

    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = find_pivot(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            // Euclidean steps shrink the pivot until it divides its whole
            // row and column, then one exact pass clears them.
            for i in (t + 1)..d.nrows() {
                if d.at(i, t).is_zero() {
                    continue;
                }
                let q = d.at(i, t) / d.at(t, t);
                let r = d.at(i, t) - &q * d.at(t, t);
                d.row_sub_mul(i, t, &q);
                u.row_sub_mul(i, t, &q);
                if !r.is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    continue 'reduce;
                }
            }
            for j in (t + 1)..d.ncols() {
                if d.at(t, j).is_zero() {
                    continue;
                }
                let q = d.at(t, j) / d.at(t, t);
                let r = d.at(t, j) - &q * d.at(t, t);
                d.col_sub_mul(j, t, &q);
                v.col_sub_mul(j, t, &q);
                if !r.is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    continue 'reduce;
                }
            }
            // Row and column are clear. Fold in any entry the pivot does not
            // divide yet, so the diagonal ends up a divisibility chain.
            for i in (t + 1)..d.nrows() {
                for j in (t + 1)..d.ncols() {
                    if !(d.at(i, j) % d.at(t, t)).is_zero() {
                        let one = Int::from(-1);
                        d.row_sub_mul(t, i, &one);
                        u.row_sub_mul(t, i, &one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SnfResult { d, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmat(rows: &[&[i64]]) -> ZMat {
        ZMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    fn check(a: &ZMat, expected_diag: &[i64]) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d);
        assert_eq!(snf.u.det().abs(), Int::from(1));
        assert_eq!(snf.v.det().abs(), Int::from(1));
        let n = a.nrows().min(a.ncols());
        let diag: Vec<Int> = (0..n).map(|i| snf.d.at(i, i).clone()).collect();
        let want: Vec<Int> = expected_diag.iter().map(|&x| Int::from(x)).collect();
        assert_eq!(diag, want);
        for i in 0..snf.d.nrows() {
            for j in 0..snf.d.ncols() {
                if i != j {
                    assert!(snf.d.at(i, j).is_zero());
                }
            }
        }
        for i in 1..n {
            if !diag[i - 1].is_zero() {
                assert!((&diag[i] % &diag[i - 1]).is_zero());
            }
        }
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        check(&zmat(&[&[2, 0], &[0, 3]]), &[1, 6]);
    }

    #[test]
    fn identity_fixed() {
        check(&zmat(&[&[1, 0], &[0, 1]]), &[1, 1]);
    }

    #[test]
    fn projective_space_ray_matrix() {
        // Rays of projective 3-space as rows of the map Z^3 -> Z^4; the
        // cokernel of the transpose is the class group Z. Here we feed the
        // 4x3 matrix whose rows are e1, e2, e3, -e1-e2-e3.
        let a = zmat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        check(&a, &[1, 1, 1]);
    }

    #[test]
    fn zero_matrix() {
        check(&zmat(&[&[0, 0], &[0, 0]]), &[0, 0]);
    }

    #[test]
    fn torsion_example() {
        // cokernel Z/2 x Z/4
        check(&zmat(&[&[2, 0], &[2, 4]]), &[2, 4]);
    }
}
