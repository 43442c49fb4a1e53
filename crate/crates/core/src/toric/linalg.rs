//! Exact linear algebra over the integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Rank by fraction-free (Bareiss) elimination.
///
/// After `k` pivots every live entry is a `(k+1)`-minor of the input, so the
/// division by the previous pivot is exact and entries stay integral.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_line = &top[rank];
        let pivot = pivot_line[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = &row[j] * &pivot - &factor * &pivot_line[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_line = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_line) {
                *x -= &factor * y;
            }
        }
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).1.len()
}

/// A basis of `{x : rows · x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction (the zero vector stays zero).
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

pub fn to_rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|x| Rational::from(x.clone())).collect())
        .collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn abs_max(v: &[BigInt]) -> BigInt {
    v.iter().map(Signed::abs).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(bareiss_rank(&ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(&ints(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(
            bareiss_rank(&ints(&[&[0, 0, 1], &[0, 0, 2], &[1, 1, 1]])),
            2
        );
        assert_eq!(bareiss_rank(&[]), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = to_rational_rows(&ints(&[&[1, 1, 0, 0], &[0, 0, 1, 1], &[1, 0, 1, 0]]));
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 1);
        for row in &m {
            assert!(dot(row, &ns[0]).is_zero());
        }
        let prim = primitive_integer(&ns[0]);
        assert_eq!(abs_max(&prim), BigInt::from(1));
    }

    proptest! {
        // fraction-free rank and rational RREF rank agree
        #[test]
        fn bareiss_matches_rref(
            rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..7)
        ) {
            let m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(bareiss_rank(&m), rational_rank(&to_rational_rows(&m)));
        }

        #[test]
        fn rank_nullity(
            rows in prop::collection::vec(prop::collection::vec(0i64..2, 6), 1..6)
        ) {
            let m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let q = to_rational_rows(&m);
            let ns = nullspace(&q, 6);
            prop_assert_eq!(ns.len() + bareiss_rank(&m), 6);
            for v in &ns {
                for row in &q {
                    prop_assert!(dot(row, v).is_zero());
                }
            }
        }
    }
}
