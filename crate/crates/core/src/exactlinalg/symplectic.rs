//! Integral symplectic normal form of alternating matrices.
//!
//! Pairing reduction: take the smallest nonzero pairing `M[a][b]`, move it to
//! a leading 2×2 block, clear the two rows and columns by congruence, force
//! divisibility of the remainder, recurse. Every step is a simultaneous
//! row/column operation, so `Uᵀ·M·U` is tracked exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMat;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticNf {
    /// Unimodular change of basis with `Uᵀ·M·U = [[0,D],[−D,0]] ⊕ 0`.
    pub u: IntMat,
    /// Elementary divisors `d_1 | d_2 | …`, all positive.
    pub divisors: Vec<BigInt>,
    /// Rank of `M`, always `2 · divisors.len()`.
    pub rank: usize,
}

impl SymplecticNf {
    /// The canonical block matrix `[[0,D],[−D,0]]` padded with zeros to `n×n`.
    pub fn canonical_form(&self, n: usize) -> IntMat {
        canonical_block(&self.divisors, n)
    }
}

pub fn canonical_block(divisors: &[BigInt], n: usize) -> IntMat {
    let k = divisors.len();
    let mut out = IntMat::zeros(n, n);
    for (i, d) in divisors.iter().enumerate() {
        out[(i, k + i)] = d.clone();
        out[(k + i, i)] = -d.clone();
    }
    out
}

struct Congruence {
    m: IntMat,
    u: IntMat,
}

impl Congruence {
    fn swap(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.m.swap_cols(a, b);
        self.u.swap_cols(a, b);
    }

    /// basis vector `dst ← dst + k·src`
    fn add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.m.add_col_multiple(dst, src, k);
        self.m.add_row_multiple(dst, src, k);
        self.u.add_col_multiple(dst, src, k);
    }
}

pub fn symplectic_normal_form(m: &IntMat) -> Result<SymplecticNf> {
    m.ensure_alternating()?;
    let n = m.rows();
    let mut c = Congruence { m: m.clone(), u: IntMat::identity(n) };
    let mut divisors = Vec::new();

    let mut t = 0;
    while t + 1 < n {
        let Some((a, b)) = smallest_pairing(&c.m, t) else {
            break;
        };
        c.swap(t, a);
        c.swap(t + 1, b);

        loop {
            if c.m[(t, t + 1)].is_negative() {
                c.swap(t, t + 1);
            }
            let p = c.m[(t, t + 1)].clone();
            let mut dirty = false;
            for j in t + 2..n {
                // clear row t with column t+1, row t+1 with column t
                if !c.m[(t, j)].is_zero() {
                    let q = -c.m[(t, j)].div_floor(&p);
                    c.add(j, t + 1, &q);
                    dirty |= !c.m[(t, j)].is_zero();
                }
                if !c.m[(t + 1, j)].is_zero() {
                    let q = c.m[(t + 1, j)].div_floor(&p);
                    c.add(j, t, &q);
                    dirty |= !c.m[(t + 1, j)].is_zero();
                }
            }
            if dirty {
                let (a, b) = smallest_pairing_in_strip(&c.m, t);
                c.swap(t, a);
                c.swap(t + 1, b);
                continue;
            }
            let bad = (t + 2..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !c.m[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => c.add(t, i, &BigInt::one()),
                None => break,
            }
        }
        divisors.push(c.m[(t, t + 1)].clone());
        t += 2;
    }

    // reorder e_1, f_1, e_2, f_2, … into e_1…e_k, f_1…f_k
    let k = divisors.len();
    let order: Vec<usize> = (0..k).map(|i| 2 * i).chain((0..k).map(|i| 2 * i + 1)).chain(2 * k..n).collect();
    let u = IntMat::from_fn(n, n, |i, j| c.u[(i, order[j])].clone());
    Ok(SymplecticNf { u, divisors, rank: 2 * k })
}

fn smallest_pairing(m: &IntMat, t: usize) -> Option<(usize, usize)> {
    let n = m.rows();
    (t..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&p| !m[p].is_zero())
        .min_by(|&x, &y| m[x].abs().cmp(&m[y].abs()))
}

/// Smallest nonzero pairing involving basis vector `t` or `t+1`.
fn smallest_pairing_in_strip(m: &IntMat, t: usize) -> (usize, usize) {
    let n = m.rows();
    (t..t + 2)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&p| !m[p].is_zero())
        .min_by(|&x, &y| m[x].abs().cmp(&m[y].abs()))
        .expect("strip has a nonzero pairing")
}

/// `(pf, pfr)`: product of all divisors (zero when degenerate) and the product
/// of the nonzero divisors (one when the form vanishes).
pub fn pfaffians(m: &IntMat) -> Result<(BigInt, BigInt)> {
    let nf = symplectic_normal_form(m)?;
    let pfr: BigInt = nf.divisors.iter().product();
    let pf = if nf.rank == m.rows() { pfr.clone() } else { BigInt::zero() };
    Ok((pf, pfr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_i64(rows).unwrap()
    }

    fn check(input: &IntMat) -> SymplecticNf {
        let nf = symplectic_normal_form(input).unwrap();
        let n = input.rows();
        assert!(nf.u.is_unimodular());
        assert_eq!(&(&nf.u.transpose() * input) * &nf.u, nf.canonical_form(n));
        assert!(nf.divisors.iter().all(Signed::is_positive));
        for w in nf.divisors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        nf
    }

    #[test]
    fn zero_form() {
        let nf = check(&IntMat::zeros(2, 2));
        assert!(nf.divisors.is_empty());
        assert_eq!(nf.rank, 0);
        assert_eq!(pfaffians(&IntMat::zeros(2, 2)).unwrap(), (0.into(), 1.into()));
    }

    #[test]
    fn already_canonical() {
        let e = m(&[&[0, 2], &[-2, 0]]);
        let nf = check(&e);
        assert_eq!(nf.divisors, vec![BigInt::from(2)]);
        assert_eq!(nf.u, IntMat::identity(2));
        assert_eq!(pfaffians(&e).unwrap(), (2.into(), 2.into()));
    }

    #[test]
    fn four_by_four_one_two() {
        let e = m(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 2], &[0, 0, -2, 0]]);
        let nf = check(&e);
        assert_eq!(nf.divisors, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(pfaffians(&e).unwrap(), (2.into(), 2.into()));
    }

    #[test]
    fn needs_divisibility_fix() {
        // pairings 2 and 3 are coprime: divisors become (1, 6)
        let e = m(&[&[0, 2, 0, 0], &[-2, 0, 0, 0], &[0, 0, 0, 3], &[0, 0, -3, 0]]);
        assert_eq!(check(&e).divisors, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rejects_non_alternating() {
        assert_eq!(symplectic_normal_form(&m(&[&[0, 1], &[1, 0]])), Err(Error::NotAlternating));
        assert_eq!(pfaffians(&m(&[&[1, 0], &[0, -1]])), Err(Error::NotAlternating));
    }

    fn alternating(n: usize) -> impl Strategy<Value = IntMat> {
        proptest::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |upper| {
            let mut out = IntMat::zeros(n, n);
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = BigInt::from(it.next().unwrap());
                    out[(j, i)] = -v.clone();
                    out[(i, j)] = v;
                }
            }
            out
        })
    }

    proptest! {
        #[test]
        fn canonical_form_and_pfaffian(e in (1usize..=6).prop_flat_map(alternating)) {
            let nf = check(&e);
            let (pf, _) = pfaffians(&e).unwrap();
            let det = e.det().unwrap();
            prop_assert_eq!(&pf * &pf, det.abs());
            prop_assert_eq!(nf.rank, e.to_rat().rank());
        }
    }
}
