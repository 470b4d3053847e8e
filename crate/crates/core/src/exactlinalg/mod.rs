//! Exact integer, rational and polynomial linear algebra.

mod lattice;
mod matrix;
mod poly;
mod polymat;
mod signature;
mod snf;
mod symplectic;

pub use lattice::{clear_denominators, lower_hermite_basis, saturate};
pub use matrix::{gcd, IntMat, Matrix, RatMat, Ring};
pub use poly::Poly;
pub use polymat::{poly_mat_inverse, PolyMat};
pub use signature::{is_positive_definite, nilpotent_exp, signature, Inertia};
pub use snf::{smith_normal_form, SnfResult};
pub use symplectic::{canonical_block, pfaffians, symplectic_normal_form, SymplecticNf};

use num_bigint::BigInt;
use num_rational::BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// Representative of `r mod 1` in `[0, 1)`.
pub fn frac(r: &BigRational) -> BigRational {
    r - r.floor()
}
