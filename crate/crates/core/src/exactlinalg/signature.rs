use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMat;
use crate::error::{Error, Result};

/// Inertia of a symmetric form: counts of positive, negative and zero squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

/// Sylvester inertia by exact congruence diagonalization.
///
/// When the remaining block has a zero diagonal but a nonzero entry `a_ij`,
/// replacing `e_i` by `e_i + e_j` produces the diagonal entry `2·a_ij`.
pub fn signature(s: &RatMat) -> Result<Inertia> {
    s.ensure_symmetric()?;
    let n = s.rows();
    let mut a = s.clone();
    let (mut pos, mut neg) = (0, 0);
    for t in 0..n {
        if a[(t, t)].is_zero() {
            if let Some(p) = (t + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                a.swap_rows(t, p);
                a.swap_cols(t, p);
            } else if let Some(j) = (t + 1..n).find(|&j| !a[(t, j)].is_zero()) {
                let one = BigRational::one();
                a.add_row_multiple(t, j, &one);
                a.add_col_multiple(t, j, &one);
            } else if let Some((i, j)) =
                (t + 1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&p| !a[p].is_zero())
            {
                let one = BigRational::one();
                a.add_row_multiple(i, j, &one);
                a.add_col_multiple(i, j, &one);
                a.swap_rows(t, i);
                a.swap_cols(t, i);
            } else {
                break;
            }
        }
        let pivot = a[(t, t)].clone();
        debug_assert!(!pivot.is_zero());
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in t + 1..n {
            if a[(i, t)].is_zero() {
                continue;
            }
            let k = -(a[(i, t)].clone() / pivot.clone());
            a.add_row_multiple(i, t, &k);
            a.add_col_multiple(i, t, &k);
        }
    }
    Ok(Inertia { pos, neg, null: n - pos - neg })
}

/// `exp(N) = Σ Nⁱ/i!` for nilpotent `N`, exact.
pub fn nilpotent_exp(n: &RatMat) -> Result<RatMat> {
    n.ensure_square()?;
    let size = n.rows();
    let mut out = RatMat::identity(size);
    let mut term = RatMat::identity(size);
    for i in 1..=size {
        term = &(&term * n) * &BigRational::new(1.into(), (i as i64).into());
        if term.is_zero() {
            return Ok(out);
        }
        out = &out + &term;
    }
    Err(Error::NotNilpotent)
}

pub fn is_positive_definite(s: &RatMat) -> Result<bool> {
    Ok(signature(s)?.pos == s.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::IntMat;
    use proptest::prelude::*;

    fn r(rows: &[&[i64]]) -> RatMat {
        IntMat::from_i64(rows).unwrap().to_rat()
    }

    fn inertia(pos: usize, neg: usize, null: usize) -> Inertia {
        Inertia { pos, neg, null }
    }

    #[test]
    fn diagonal_cases() {
        assert_eq!(signature(&r(&[&[2, 0], &[0, 2]])).unwrap(), inertia(2, 0, 0));
        assert_eq!(signature(&r(&[&[1, 0], &[0, -1]])).unwrap(), inertia(1, 1, 0));
    }

    #[test]
    fn hyperbolic_block() {
        assert_eq!(signature(&r(&[&[0, 1], &[1, 0]])).unwrap(), inertia(1, 1, 0));
        // zero diagonal everywhere, pairing only between the last two
        let s = r(&[&[0, 0, 0], &[0, 0, 3], &[0, 3, 0]]);
        assert_eq!(signature(&s).unwrap(), inertia(1, 1, 1));
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(signature(&r(&[&[0, 1], &[2, 0]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(nilpotent_exp(&RatMat::zeros(2, 2)).unwrap(), RatMat::identity(2));
        assert_eq!(nilpotent_exp(&r(&[&[0, 0], &[-1, 0]])).unwrap(), r(&[&[1, 0], &[-1, 1]]));
        assert_eq!(nilpotent_exp(&r(&[&[0, 1], &[0, 0]])).unwrap(), r(&[&[1, 1], &[0, 1]]));
        // N² ≠ 0, N³ = 0: exp has the 1/2 term
        let n = r(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let half = RatMat::from_ratios(&[&[(1, 1), (1, 1), (1, 2)], &[(0, 1), (1, 1), (1, 1)], &[(0, 1), (0, 1), (1, 1)]]);
        assert_eq!(nilpotent_exp(&n).unwrap(), half.unwrap());
        assert_eq!(nilpotent_exp(&r(&[&[1, 0], &[0, 0]])), Err(Error::NotNilpotent));
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = RatMat> {
        proptest::collection::vec(-3i64..=3, n * n)
            .prop_map(move |v| RatMat::new(n, n, v.into_iter().map(|x| BigRational::from_integer(x.into())).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn sylvester_law(a in small_matrix(4), p in small_matrix(4)) {
            let s = &a + &a.transpose();
            prop_assume!(!p.det().unwrap().is_zero());
            let moved = &(&p.transpose() * &s) * &p;
            prop_assert_eq!(signature(&s).unwrap(), signature(&moved).unwrap());
            let i = signature(&s).unwrap();
            prop_assert_eq!(i.pos + i.neg, s.rank());
        }

        #[test]
        fn exp_inverse(vals in proptest::collection::vec(-4i64..=4, 6)) {
            // strictly upper triangular 4×4
            let mut n = RatMat::zeros(4, 4);
            let mut it = vals.into_iter();
            for i in 0..4 {
                for j in i + 1..4 {
                    n[(i, j)] = BigRational::from_integer(it.next().unwrap().into());
                }
            }
            let prod = &nilpotent_exp(&n).unwrap() * &nilpotent_exp(&-&n).unwrap();
            prop_assert_eq!(prod, RatMat::identity(4));
        }
    }
}
