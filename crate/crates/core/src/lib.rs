//! Exact computations for line bundles on complex tori and their Lagrangian
//! lifts to the doubled torus `X × X̂`, together with the doubled-geometry
//! toolkit for T-folds (O(n,n;ℤ) twists, polarizations, generalized metrics).
//!
//! Everything is exact: integers are arbitrary precision, rationals are
//! reduced fractions and the fiber metrics are polynomials over ℚ.

pub mod error;
pub mod exactlinalg;
pub mod torus;
pub mod bundles;
pub mod doubled;
pub mod homspaces;
pub mod tfold;

pub use error::{Error, Result};
