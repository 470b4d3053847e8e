use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{Matrix, RatMat};
use super::poly::Poly;
use crate::error::{Error, Result};

pub type PolyMat = Matrix<Poly>;

impl PolyMat {
    pub fn from_rat(m: &RatMat) -> PolyMat {
        m.map(|c| Poly::constant(c.clone()))
    }

    pub fn eval(&self, x: &BigRational) -> RatMat {
        self.map(|p| p.eval(x))
    }

    /// Determinant in ℚ[x] by Bareiss elimination; every division is exact.
    pub fn det(&self) -> Result<Poly> {
        self.ensure_square()?;
        let n = self.rows();
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        negate = !negate;
                    }
                    None => return Ok(Poly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMat {
        let n = self.rows();
        PolyMat::from_fn(n - 1, n - 1, |i, j| {
            let r = if i < skip_row { i } else { i + 1 };
            let c = if j < skip_col { j } else { j + 1 };
            self[(r, c)].clone()
        })
    }

    pub fn adjugate(&self) -> Result<PolyMat> {
        self.ensure_square()?;
        let n = self.rows();
        if n == 1 {
            return Ok(PolyMat::identity(1));
        }
        let mut out = PolyMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det()?;
                out[(i, j)] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Ok(out)
    }
}

/// Inverse of a polynomial matrix whose determinant is a nonzero constant.
pub fn poly_mat_inverse(p: &PolyMat) -> Result<PolyMat> {
    let det = p.det()?;
    let c = match det.as_constant() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(Error::NonUnitDeterminant),
    };
    let scale = Poly::constant(c.recip());
    Ok(&p.adjugate()? * &scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mx(m: i64) -> Poly {
        Poly::monomial(BigRational::from_integer(m.into()), 1)
    }

    fn c(v: i64) -> Poly {
        Poly::from_int(v)
    }

    #[test]
    fn identity_inverse() {
        assert_eq!(poly_mat_inverse(&PolyMat::identity(3)).unwrap(), PolyMat::identity(3));
    }

    #[test]
    fn fiber_metric_inverse() {
        for m in -3..=3 {
            let g = PolyMat::from_rows(vec![
                vec![c(1), -mx(m)],
                vec![-mx(m), c(1) + mx(m).pow(2)],
            ])
            .unwrap();
            let inv = poly_mat_inverse(&g).unwrap();
            let expected = PolyMat::from_rows(vec![
                vec![c(1) + mx(m).pow(2), mx(m)],
                vec![mx(m), c(1)],
            ])
            .unwrap();
            assert_eq!(inv, expected);
            assert_eq!(&g * &inv, PolyMat::identity(2));
        }
    }

    #[test]
    fn non_unit_determinant() {
        let p = PolyMat::from_rows(vec![vec![Poly::x(), c(0)], vec![c(0), c(1)]]).unwrap();
        assert_eq!(poly_mat_inverse(&p), Err(Error::NonUnitDeterminant));
        assert_eq!(poly_mat_inverse(&PolyMat::zeros(2, 2)), Err(Error::NonUnitDeterminant));
    }

    #[test]
    fn det_with_pivoting() {
        let p = PolyMat::from_rows(vec![
            vec![c(0), Poly::x(), c(1)],
            vec![c(1), c(0), Poly::x()],
            vec![Poly::x(), c(1), c(0)],
        ])
        .unwrap();
        // x³ + 1 by cofactor expansion
        assert_eq!(p.det().unwrap(), Poly::x().pow(3) + c(1));
    }
}
