//! Small machine-integer routines used as independent cross-checks.

use std::collections::BTreeSet;

pub type Mat = Vec<Vec<i64>>;

/// Determinant by fraction-free elimination in `i128`.
pub fn det(m: &Mat) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn minor(m: &Mat, rows: &[usize], cols: &[usize]) -> Mat {
    rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank as the size of the largest nonvanishing minor.
pub fn rank(m: &Mat) -> usize {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    (1..=r.min(c))
        .rev()
        .find(|&k| subsets(r, k).iter().any(|rs| subsets(c, k).iter().any(|cs| det(&minor(m, rs, cs)) != 0)))
        .unwrap_or(0)
}

/// Invariant factors `dₖ = Δₖ/Δₖ₋₁` from the determinantal divisors `Δₖ`
/// (gcd of all `k×k` minors); zeros past the rank.
pub fn invariant_factors(m: &Mat) -> Vec<i128> {
    let (r, c) = (m.len(), m[0].len());
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=r.min(c) {
        let mut g = 0i128;
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                g = gcd(g, det(&minor(m, &rs, &cs)));
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat_n(0, r.min(c) + 1 - k));
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

pub fn isqrt(n: u128) -> Option<u128> {
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Pascal's triangle row `n`.
pub fn pascal_row(n: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

/// All `k ∈ [0, p)ⁿ` with `D·k ≡ 0 (mod p)`.
pub fn torsion_grid_solutions(d: &Mat, p: i64) -> BTreeSet<Vec<i64>> {
    let n = d.len();
    let mut out = BTreeSet::new();
    let mut k = vec![0i64; n];
    loop {
        if d.iter().all(|row| row.iter().zip(&k).map(|(a, b)| a * b).sum::<i64>().rem_euclid(p) == 0) {
            out.insert(k.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            k[i] += 1;
            if k[i] < p {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

/// Functions `ξ : (ℤ/2)ⁿ → ℤ/2` with `ξ(a+b) − ξ(a) − ξ(b) ≡ E(a,b)`, each
/// returned as its table indexed by the bitmask of the argument.
pub fn quadratic_refinements(e_mod2: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = e_mod2.len();
    let size = 1usize << n;
    let form = |a: usize, b: usize| -> u8 {
        let mut s = 0u8;
        for (i, row) in e_mod2.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if a >> i & 1 == 1 && b >> j & 1 == 1 {
                    s ^= v;
                }
            }
        }
        s
    };
    let pairs: Vec<(usize, usize, u8)> =
        (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).map(|(a, b)| (a, b, form(a, b))).collect();
    let mut out = Vec::new();
    for f in 0u64..(1u64 << size) {
        let val = |a: usize| (f >> a & 1) as u8;
        if pairs.iter().all(|&(a, b, e)| val(a ^ b) ^ val(a) ^ val(b) == e) {
            out.push((0..size).map(val).collect());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_sanity() {
        assert_eq!(det(&vec![vec![0, 2], vec![-2, 0]]), 4);
        assert_eq!(rank(&vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(invariant_factors(&vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(isqrt(36), Some(6));
        assert_eq!(isqrt(35), None);
        assert_eq!(pascal_row(3), vec![1, 3, 3, 1]);
        assert_eq!(torsion_grid_solutions(&vec![vec![0, 2], vec![-2, 0]], 2).len(), 4);
        assert_eq!(quadratic_refinements(&[vec![0, 1], vec![1, 0]]).len(), 4);
    }
}
