//! Smith normal form over the integers.
//!
//! Row and column reduction with a minimal-absolute-value pivot. The left and
//! right transforms are accumulated so that `U·M·V = D` holds exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMat,
    pub v: IntMat,
    pub d: IntMat,
}

impl SnfResult {
    /// Diagonal entries `d_1 | d_2 | …`, including trailing zeros.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMat) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder appeared in row or column t
                let (pi, pj) = min_in_cross(&d, t);
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&d[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, v, d }
}

fn min_nonzero(d: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if d[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` (from position `t` on).
fn min_in_cross(d: &IntMat, t: usize) -> (usize, usize) {
    let cands = (t..d.rows()).map(|i| (i, t)).chain((t + 1..d.cols()).map(|j| (t, j)));
    cands
        .filter(|&p| !d[p].is_zero())
        .min_by(|&a, &b| d[a].abs().cmp(&d[b].abs()))
        .expect("pivot cross has a nonzero entry")
}
