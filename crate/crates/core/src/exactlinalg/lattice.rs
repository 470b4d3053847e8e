use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMat;
use super::snf::smith_normal_form;

/// Scales a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// ℤ-basis of `ℤⁿ ∩ span_ℚ(vectors)`.
///
/// With `U·B·V = D` for the integer row matrix `B`, the rows of `V⁻¹`
/// form a basis of ℤⁿ whose first `rank` rows span the same ℚ-space as `B`.
pub fn saturate(vectors: &[Vec<BigRational>], n: usize) -> Vec<Vec<BigInt>> {
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| clear_denominators(v)).collect();
    if rows.is_empty() || rows.iter().all(|r| r.iter().all(Zero::is_zero)) {
        return Vec::new();
    }
    let b = IntMat::from_rows(rows).expect("nonempty rectangular rows");
    assert_eq!(b.cols(), n, "vector length mismatch");
    let snf = smith_normal_form(&b);
    let rank = snf.rank();
    let vinv = snf
        .v
        .to_rat()
        .inverse()
        .expect("unimodular transform is invertible")
        .to_int()
        .expect("inverse of a unimodular matrix is integral");
    (0..rank).map(|i| vinv.row(i).to_vec()).collect()
}

/// Lower-triangular basis of the full-rank lattice spanned by `gens` in ℤⁿ.
///
/// Returns columns `b₀, …, b_{n−1}` with `bⱼ` zero above coordinate `j` and
/// `bⱼ[j] > 0`.
pub fn lower_hermite_basis(gens: &[Vec<BigInt>], n: usize) -> Option<Vec<Vec<BigInt>>> {
    let mut cols: Vec<Vec<BigInt>> = gens.iter().filter(|g| g.iter().any(|x| !x.is_zero())).cloned().collect();
    assert!(cols.iter().all(|c| c.len() == n), "vector length mismatch");
    let mut basis = Vec::with_capacity(n);
    for row in 0..n {
        loop {
            let nonzero: Vec<usize> = (0..cols.len()).filter(|&k| !cols[k][row].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by(|&&a, &&b| cols[a][row].magnitude().cmp(cols[b][row].magnitude())).unwrap();
            let pivot = cols[p].clone();
            for &k in &nonzero {
                if k != p {
                    let q = cols[k][row].div_floor(&pivot[row]);
                    for (x, y) in cols[k].iter_mut().zip(&pivot) {
                        *x -= &q * y;
                    }
                }
            }
        }
        let k = (0..cols.len()).find(|&k| !cols[k][row].is_zero())?;
        let mut b = cols.swap_remove(k);
        if b[row].is_negative() {
            b.iter_mut().for_each(|x| *x = -x.clone());
        }
        basis.push(b);
        cols.retain(|c| c.iter().any(|x| !x.is_zero()));
    }
    Some(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn saturates_scaled_vector() {
        let basis = saturate(&[vec![q(2, 3), q(4, 3)]], 2);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert!(v == &[BigInt::from(1), BigInt::from(2)] || v == &[BigInt::from(-1), BigInt::from(-2)]);
    }

    #[test]
    fn full_rank_gives_unimodular_basis() {
        let basis = saturate(&[vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(2, 1)]], 2);
        let m = IntMat::from_rows(basis).unwrap();
        assert!(m.is_unimodular());
    }

    #[test]
    fn hermite_basis_is_lower_triangular() {
        let gens = vec![
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(1), BigInt::from(1)],
        ];
        let b = lower_hermite_basis(&gens, 2).unwrap();
        assert_eq!(b[0][0], BigInt::from(1));
        assert_eq!(b[1][0], BigInt::zero());
        assert_eq!(b[1][1], BigInt::from(2));
        assert!(lower_hermite_basis(&gens[..1], 2).is_none());
    }
}
