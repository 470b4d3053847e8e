//! Holomorphic line bundles as Appel–Humbert data `(E, χ)`.
//!
//! A semi-character is stored by its values on the lattice basis, written
//! additively as `c ∈ (ℚ/ℤ)^{2g}` with `χ(eᵢ) = exp(2πi·cᵢ)`, and extended by
//! the fixed quadratic rule
//!
//! ```text
//! a(λ) = λ·c + ½ Σ_{i<j} λᵢλⱼ E_ij   (mod 1)
//! ```
//!
//! which satisfies `a(λ+μ) − a(λ) − a(μ) ≡ ½E(λ,μ)`. The two possible
//! quadratic completions differ by integers, so `c` determines `χ`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{frac, smith_normal_form, IntMat};
use crate::torus::{is_one_one, ComplexTorus, DualTorusPoint, TorusPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiCharacter {
    e: IntMat,
    c: Vec<BigRational>,
}

impl SemiCharacter {
    pub fn new(e: IntMat, c: Vec<BigRational>) -> Result<Self> {
        e.ensure_alternating()?;
        if c.len() != e.rows() {
            return Err(Error::DimensionMismatch("semi-character needs one value per basis vector".into()));
        }
        Ok(SemiCharacter { e, c: c.iter().map(frac).collect() })
    }

    pub fn form(&self) -> &IntMat {
        &self.e
    }

    /// Basis values `cᵢ ∈ [0, 1)`.
    pub fn basis_values(&self) -> &[BigRational] {
        &self.c
    }

    pub fn eval(&self, lam: &[BigInt]) -> Result<BigRational> {
        if lam.len() != self.c.len() {
            return Err(Error::DimensionMismatch("lattice vector length".into()));
        }
        Ok(frac(&quadratic_value(&self.e, &self.c, lam)))
    }
}

fn quadratic_value(e: &IntMat, c: &[BigRational], lam: &[BigInt]) -> BigRational {
    let linear: BigRational = lam.iter().zip(c).map(|(l, ci)| ci * l).sum();
    let n = lam.len();
    let mut quad = BigInt::zero();
    for i in 0..n {
        for j in i + 1..n {
            quad += &lam[i] * &lam[j] * &e[(i, j)];
        }
    }
    linear + BigRational::new(quad, 2.into())
}

pub fn semichar_eval(chi: &SemiCharacter, lam: &[BigInt]) -> Result<BigRational> {
    chi.eval(lam)
}

/// Line bundle `ℒ(H, χ)` on a complex torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundle {
    torus: ComplexTorus,
    chi: SemiCharacter,
}

impl LineBundle {
    pub fn torus(&self) -> &ComplexTorus {
        &self.torus
    }

    /// Matrix of `c₁(ℒ) = Im H` in the lattice basis.
    pub fn form(&self) -> &IntMat {
        &self.chi.e
    }

    pub fn semi_character(&self) -> &SemiCharacter {
        &self.chi
    }

    pub fn basis_values(&self) -> &[BigRational] {
        &self.chi.c
    }

    pub fn is_trivial(&self) -> bool {
        self.chi.e.is_zero() && self.chi.c.iter().all(Zero::is_zero)
    }

    /// Degree-zero bundles are points of the dual torus.
    pub fn as_dual_point(&self) -> Option<DualTorusPoint> {
        self.chi.e.is_zero().then(|| DualTorusPoint::new(self.chi.c.clone()))
    }

    pub fn trivial(x: &ComplexTorus) -> Self {
        let n = x.real_dim();
        LineBundle {
            torus: x.clone(),
            chi: SemiCharacter { e: IntMat::zeros(n, n), c: vec![BigRational::zero(); n] },
        }
    }

    /// The flat bundle corresponding to a point of `X̂`.
    pub fn from_dual_point(x: &ComplexTorus, p: &DualTorusPoint) -> Result<Self> {
        make_bundle(x, IntMat::zeros(x.real_dim(), x.real_dim()), p.coords().to_vec())
    }
}

impl fmt::Display for LineBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E={} chi={}", self.chi.e, DualTorusPoint::new(self.chi.c.clone()))
    }
}

pub fn make_bundle(x: &ComplexTorus, e: IntMat, c: Vec<BigRational>) -> Result<LineBundle> {
    x.check_form(&e)?;
    x.check_vector(&c)?;
    e.ensure_alternating()?;
    if !is_one_one(&e, x)? {
        return Err(Error::NotOneOne);
    }
    Ok(LineBundle { torus: x.clone(), chi: SemiCharacter::new(e, c)? })
}

/// `(E₁ + E₂, χ₁χ₂)`. The quadratic rule is linear in `(E, c)`, so adding
/// the stored data composes evaluations exactly.
pub fn tensor(l1: &LineBundle, l2: &LineBundle) -> Result<LineBundle> {
    if l1.torus != l2.torus {
        return Err(Error::TorusMismatch);
    }
    let e = l1.form() + l2.form();
    let c = l1.basis_values().iter().zip(l2.basis_values()).map(|(a, b)| frac(&(a + b))).collect();
    Ok(LineBundle { torus: l1.torus.clone(), chi: SemiCharacter { e, c } })
}

pub fn inverse(l: &LineBundle) -> LineBundle {
    LineBundle {
        torus: l.torus.clone(),
        chi: SemiCharacter {
            e: -l.form(),
            c: l.basis_values().iter().map(|a| frac(&-a)).collect(),
        },
    }
}

/// Pullback by translation: `t_x*ℒ(H, χ) = ℒ(H, χ·exp(2πi·E(v, ·)))` for any
/// lift `v` of `x`.
pub fn translate(l: &LineBundle, x: &TorusPoint) -> LineBundle {
    let shift = phi_shift(l.form(), x.coords());
    LineBundle {
        torus: l.torus.clone(),
        chi: SemiCharacter {
            e: l.form().clone(),
            c: l.basis_values().iter().zip(shift).map(|(a, s)| frac(&(a + s))).collect(),
        },
    }
}

/// `(E(v, eᵢ))ᵢ = Eᵀ·v`.
fn phi_shift(e: &IntMat, v: &[BigRational]) -> Vec<BigRational> {
    e.transpose().to_rat().mul_vec(v)
}

/// Matrix of `φ_ℒ : X → X̂, x ↦ t_x*ℒ ⊗ ℒ⁻¹` in lattice/dual coordinates.
pub fn phi_map(l: &LineBundle) -> IntMat {
    l.form().transpose()
}

/// `(ℝ/ℤ)^free × ⊕ ℤ/dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    /// Invariant factors `d₁ | d₂ | …` of the finite part (ones included).
    pub factors: Vec<BigInt>,
    /// Dimension of the connected component.
    pub free_rank: usize,
}

impl FiniteAbelianGroup {
    /// Order of the finite part.
    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Factors with the trivial `ℤ/1` summands dropped.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub(crate) fn from_divisors(divisors: &[BigInt]) -> Self {
        FiniteAbelianGroup {
            factors: divisors.iter().filter(|d| !d.is_zero()).cloned().collect(),
            free_rank: divisors.iter().filter(|d| d.is_zero()).count(),
        }
    }
}

/// `K(ℒ) = {v : E·v ∈ ℤ^{2g}}/ℤ^{2g}`, read off the Smith form of `E`.
pub fn kernel_group(l: &LineBundle) -> FiniteAbelianGroup {
    FiniteAbelianGroup::from_divisors(&smith_normal_form(l.form()).divisors())
}

/// Symmetric semi-character `ξ : Λ → ℤ₂` with
/// `ξ(γ₁+γ₂) − ξ(γ₁) − ξ(γ₂) = E(γ₁,γ₂)` mod 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymSemiChar {
    e: IntMat,
    bits: Vec<bool>,
}

impl SymSemiChar {
    pub fn form(&self) -> &IntMat {
        &self.e
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `ξ(λ) = Σ λᵢξᵢ + Σ_{i<j} λᵢλⱼE_ij` mod 2.
    pub fn eval(&self, lam: &[BigInt]) -> Result<bool> {
        if lam.len() != self.bits.len() {
            return Err(Error::DimensionMismatch("lattice vector length".into()));
        }
        let n = lam.len();
        let mut acc = BigInt::zero();
        for i in 0..n {
            if self.bits[i] {
                acc += &lam[i];
            }
            for j in i + 1..n {
                acc += &lam[i] * &lam[j] * &self.e[(i, j)];
            }
        }
        Ok(acc.is_odd())
    }

    /// All `2^{2g}` symmetric semi-characters for `E`.
    pub fn all(e: &IntMat) -> Result<Vec<SymSemiChar>> {
        e.ensure_alternating()?;
        let n = e.rows();
        if n >= usize::BITS as usize {
            return Err(Error::OutOfRange("lattice rank"));
        }
        (0..1usize << n)
            .map(|mask| make_xi(e, &(0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
            .collect()
    }
}

pub fn make_xi(e: &IntMat, basis_bits: &[bool]) -> Result<SymSemiChar> {
    e.ensure_alternating()?;
    if basis_bits.len() != e.rows() {
        return Err(Error::DimensionMismatch("one bit per basis vector".into()));
    }
    Ok(SymSemiChar { e: e.clone(), bits: basis_bits.to_vec() })
}

pub fn xi_eval(xi: &SymSemiChar, lam: &[BigInt]) -> Result<bool> {
    xi.eval(lam)
}

/// The symmetric `E`-flat bundle `S_E` with holonomy `(−1)^ξ`, using the
/// canonical all-zero `ξ` (so `S_0 = 𝒪_X`).
pub fn symmetric_flat_bundle(x: &ComplexTorus, e: &IntMat) -> Result<LineBundle> {
    symmetric_flat_bundle_with(x, &make_xi(e, &vec![false; e.rows()])?)
}

/// `S_E` for an explicit `ξ`: basis values `ξ(eᵢ)/2`. The quadratic rule then
/// agrees with `ξ/2` on all of `Λ` modulo integers.
pub fn symmetric_flat_bundle_with(x: &ComplexTorus, xi: &SymSemiChar) -> Result<LineBundle> {
    let half = BigRational::new(1.into(), 2.into());
    let c = xi.bits().iter().map(|&b| if b { half.clone() } else { BigRational::zero() }).collect();
    make_bundle(x, xi.form().clone(), c)
}

/// The unique bundle with curvature `E` and prescribed basis holonomies
/// (written additively, mod 1).
pub fn character_from_holonomy(x: &ComplexTorus, e: &IntMat, values: &[BigRational]) -> Result<LineBundle> {
    make_bundle(x, e.clone(), values.to_vec())
}
