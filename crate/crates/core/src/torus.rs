//! Complex tori `X = V/Λ` with lattice `Λ = ℤ^{2g}` in a fixed basis and a
//! rational complex structure `J` on `V = ℝ^{2g}`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{frac, int, saturate, signature, IntMat, RatMat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTorus {
    g: usize,
    j: RatMat,
}

impl ComplexTorus {
    /// Validates `J² = −I` on a `2g × 2g` rational matrix.
    pub fn new(g: usize, j: RatMat) -> Result<Self> {
        if g == 0 {
            return Err(Error::OutOfRange("complex dimension"));
        }
        if j.rows() != 2 * g || j.cols() != 2 * g {
            return Err(Error::DimensionMismatch(format!("J must be {0}x{0}", 2 * g)));
        }
        if &j * &j != -&RatMat::identity(2 * g) {
            return Err(Error::NotComplexStructure);
        }
        Ok(ComplexTorus { g, j })
    }

    /// Product of `g` square elliptic curves `ℂ/ℤ[i]`: `J` is block diagonal in
    /// copies of `[[0,−1],[1,0]]`.
    pub fn standard(g: usize) -> Self {
        let mut j = RatMat::zeros(2 * g, 2 * g);
        for k in 0..g {
            j[(2 * k, 2 * k + 1)] = -BigRational::one();
            j[(2 * k + 1, 2 * k)] = BigRational::one();
        }
        ComplexTorus { g, j }
    }

    pub fn dim(&self) -> usize {
        self.g
    }

    /// Real dimension `2g`, the rank of the lattice.
    pub fn real_dim(&self) -> usize {
        2 * self.g
    }

    pub fn complex_structure(&self) -> &RatMat {
        &self.j
    }

    pub(crate) fn check_form(&self, e: &IntMat) -> Result<()> {
        if e.rows() != self.real_dim() || e.cols() != self.real_dim() {
            return Err(Error::DimensionMismatch(format!(
                "form must be {0}x{0}",
                self.real_dim()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_vector<T>(&self, v: &[T]) -> Result<()> {
        if v.len() != self.real_dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector must have {} entries",
                self.real_dim()
            )));
        }
        Ok(())
    }

    /// ℤ-basis of the integral alternating forms of type (1,1), the
    /// Néron–Severi lattice of `X`.
    pub fn neron_severi_basis(&self) -> Vec<IntMat> {
        let n = self.real_dim();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let unit = |k: usize| {
            let (a, b) = pairs[k];
            let mut e = RatMat::zeros(n, n);
            e[(a, b)] = BigRational::one();
            e[(b, a)] = -BigRational::one();
            e
        };
        // column k = vec(Jᵀ E_k J − E_k)
        let jt = self.j.transpose();
        let cols: Vec<Vec<BigRational>> = (0..pairs.len())
            .map(|k| {
                let e = unit(k);
                let d = &(&(&jt * &e) * &self.j) - &e;
                d.entries().to_vec()
            })
            .collect();
        let system = RatMat::from_cols(&cols).expect("at least one pairing");
        let kernel = system.kernel();
        saturate(&kernel, pairs.len())
            .into_iter()
            .map(|coords| {
                let mut e = IntMat::zeros(n, n);
                for (k, c) in coords.into_iter().enumerate() {
                    let (a, b) = pairs[k];
                    e[(b, a)] = -c.clone();
                    e[(a, b)] = c;
                }
                e
            })
            .collect()
    }
}

pub fn make_torus(g: usize, j: RatMat) -> Result<ComplexTorus> {
    ComplexTorus::new(g, j)
}

/// `h^q(𝒪_X) = C(g, q)`.
pub fn hodge_rank_structure_sheaf(x: &ComplexTorus, q: usize) -> Result<BigInt> {
    if q > x.dim() {
        return Err(Error::OutOfRange("cohomological degree"));
    }
    Ok(binomial(x.dim(), q))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * int((n - i) as i64) / int((i + 1) as i64))
}

/// Whether `E(Jv, Jw) = E(v, w)`, i.e. `Jᵀ·E·J = E`.
pub fn is_one_one(e: &IntMat, x: &ComplexTorus) -> Result<bool> {
    x.check_form(e)?;
    let m = e.to_rat();
    let j = x.complex_structure();
    Ok(&(&j.transpose() * &m) * j == m)
}

/// Real quadratic form of the Hermitian form `H(v,w) = E(v,Jw) + i·E(v,w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianForm {
    /// `Sym(E·J)`, representing `v ↦ H(v, v)`.
    pub real_part: RatMat,
    /// Number of positive eigenvalues of `H`.
    pub positive: usize,
    /// Number of negative eigenvalues of `H`.
    pub negative: usize,
}

pub fn hermitian_form(e: &IntMat, x: &ComplexTorus) -> Result<HermitianForm> {
    if !is_one_one(e, x)? {
        return Err(Error::NotOneOne);
    }
    let ej = &e.to_rat() * x.complex_structure();
    let half = BigRational::new(1.into(), 2.into());
    let s = &(&ej + &ej.transpose()) * &half;
    let inertia = signature(&s)?;
    debug_assert!(inertia.pos % 2 == 0 && inertia.neg % 2 == 0);
    Ok(HermitianForm { real_part: s, positive: inertia.pos / 2, negative: inertia.neg / 2 })
}

fn normalized(coords: Vec<BigRational>) -> Vec<BigRational> {
    coords.iter().map(frac).collect()
}

macro_rules! torus_point {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            coords: Vec<BigRational>,
        }

        impl $name {
            /// Reduces each coordinate into `[0, 1)`.
            pub fn new(coords: Vec<BigRational>) -> Self {
                $name { coords: normalized(coords) }
            }

            pub fn zero(real_dim: usize) -> Self {
                $name { coords: vec![BigRational::zero(); real_dim] }
            }

            pub fn coords(&self) -> &[BigRational] {
                &self.coords
            }

            pub fn is_zero(&self) -> bool {
                self.coords.iter().all(Zero::is_zero)
            }

            pub fn len(&self) -> usize {
                self.coords.len()
            }

            pub fn is_empty(&self) -> bool {
                self.coords.is_empty()
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                assert_eq!(self.coords.len(), rhs.coords.len(), "point dimension mismatch");
                $name::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                self + &(-rhs)
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name::new(self.coords.iter().map(|a| -a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (i, c) in self.coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", stringify!($name), self)
            }
        }
    };
}

torus_point!(
    /// Rational point of `X`, coordinates in the lattice basis reduced mod 1.
    TorusPoint
);
torus_point!(
    /// Rational point of the dual torus `X̂ = Hom(Λ, U(1))`, coordinates in the
    /// dual basis: the character `λ ↦ exp(2πi⟨b, λ⟩)`.
    DualTorusPoint
);
