use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Commutative ring elements the dense matrix type can hold.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMat = Matrix<BigInt>;
pub type RatMat = Matrix<BigRational>;

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::RaggedRows);
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<T>]) -> Result<Self> {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|c| c.len() != nrows) {
            return Err(Error::RaggedRows);
        }
        if nrows == 0 || ncols == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self::from_fn(nrows, ncols, |i, j| cols[j][i].clone()))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Alternating: zero diagonal and `Mᵀ = −M`.
    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero() && (0..i).all(|j| self[(i, j)] == -self[(j, i)].clone())
            })
    }

    pub fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare)
        }
    }

    pub fn ensure_alternating(&self) -> Result<()> {
        if self.is_alternating() {
            Ok(())
        } else {
            Err(Error::NotAlternating)
        }
    }

    pub fn ensure_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::NotSymmetric)
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self * rhs)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// `uᵀ · self · v`.
    pub fn bilinear(&self, u: &[T], v: &[T]) -> T {
        let mv = self.mul_vec(v);
        u.iter().zip(mv).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Assembles `[[tl, tr], [bl, br]]`.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Result<Self> {
        if tl.rows != tr.rows || bl.rows != br.rows || tl.cols != bl.cols || tr.cols != br.cols {
            return Err(Error::DimensionMismatch("incompatible block shapes".into()));
        }
        let (r, c) = (tl.rows, tl.cols);
        Ok(Self::from_fn(r + bl.rows, c + tr.cols, |i, j| match (i < r, j < c) {
            (true, true) => tl[(i, j)].clone(),
            (true, false) => tr[(i, j - c)].clone(),
            (false, true) => bl[(i - r, j)].clone(),
            (false, false) => br[(i - r, j - c)].clone(),
        }))
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let z1 = Self::zeros(a.rows, b.cols);
        let z2 = Self::zeros(b.rows, a.cols);
        Self::from_blocks(a, &z1, &z2, b).expect("block shapes are compatible by construction")
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += k · row[src]`
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &T) {
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * k.clone();
            let cur = std::mem::replace(&mut self[(dst, j)], T::zero());
            self[(dst, j)] = cur + v;
        }
    }

    /// `col[dst] += k · col[src]`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &T) {
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * k.clone();
            let cur = std::mem::replace(&mut self[(i, dst)], T::zero());
            self[(i, dst)] = cur + v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let cur = std::mem::replace(&mut self[(i, j)], T::zero());
            self[(i, j)] = -cur;
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self[(i, k)].clone() * rhs[(k, j)].clone())
        })
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix difference dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|a| -a.clone())
    }
}

impl<T: Ring> Mul<&T> for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, k: &T) -> Matrix<T> {
        self.map(|a| a.clone() * k.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Compact bracketed rows, e.g. `[[0,2],[-2,0]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl IntMat {
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn to_rat(&self) -> RatMat {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        self.ensure_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(d) if d.abs().is_one())
    }
}

impl RatMat {
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect())
                .collect(),
        )
    }

    /// Integer matrix when every entry has denominator one.
    pub fn to_int(&self) -> Option<IntMat> {
        if self.data.iter().all(BigRational::is_integer) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a[(r, c)].recip();
            for j in 0..a.cols {
                let v = a[(r, j)].clone() * inv.clone();
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let k = -a[(i, c)].clone();
                    a.add_row_multiple(i, r, &k);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self·v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<BigRational> {
        self.ensure_square()?;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for c in 0..a.rows {
            let Some(p) = (c..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != c {
                a.swap_rows(c, p);
                det = -det;
            }
            det *= a[(c, c)].clone();
            let inv = a[(c, c)].recip();
            for i in c + 1..a.rows {
                if !a[(i, c)].is_zero() {
                    let k = -(a[(i, c)].clone() * inv.clone());
                    a.add_row_multiple(i, c, &k);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<RatMat> {
        self.ensure_square()?;
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(r.block(0, n, n, n))
    }
}

/// Greatest common divisor, always nonnegative.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}
