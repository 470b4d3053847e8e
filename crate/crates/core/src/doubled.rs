//! The doubling torus `𝕏 = X × X̂` and the Lagrangian lift of a line bundle.
//!
//! Coordinates on `𝕏` are `(x, x̂)` with `x` in the lattice basis of `X` and
//! `x̂` in the dual basis. The Poincaré form is `σ = [[0, I], [−I, 0]]` and the
//! neutral metric is `[[0, I], [I, 0]]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bundles::{inverse, make_bundle, symmetric_flat_bundle_with, tensor, LineBundle, SymSemiChar};
use crate::error::{Error, Result};
use crate::exactlinalg::{is_positive_definite, IntMat, RatMat};
use crate::torus::{is_one_one, ComplexTorus, DualTorusPoint, TorusPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledTorus {
    base: ComplexTorus,
    sigma: IntMat,
    neutral: IntMat,
}

impl DoubledTorus {
    pub fn base(&self) -> &ComplexTorus {
        &self.base
    }

    pub fn sigma(&self) -> &IntMat {
        &self.sigma
    }

    pub fn neutral(&self) -> &IntMat {
        &self.neutral
    }

    /// Real dimension `4g`.
    pub fn real_dim(&self) -> usize {
        2 * self.base.real_dim()
    }
}

pub fn make_doubled(x: &ComplexTorus) -> DoubledTorus {
    let n = x.real_dim();
    let id = IntMat::identity(n);
    let zero = IntMat::zeros(n, n);
    let sigma = IntMat::from_blocks(&zero, &id, &-&id, &zero).expect("square blocks");
    let neutral = IntMat::from_blocks(&zero, &id, &id, &zero).expect("square blocks");
    DoubledTorus { base: x.clone(), sigma, neutral }
}

/// Affine Lagrangian subtorus `{(x, A·x + b)}` of `𝕏`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lift {
    linear: IntMat,
    offset: DualTorusPoint,
}

impl Lift {
    pub fn new(linear: IntMat, offset: DualTorusPoint) -> Result<Self> {
        linear.ensure_square()?;
        if offset.len() != linear.rows() {
            return Err(Error::DimensionMismatch("lift offset length".into()));
        }
        Ok(Lift { linear, offset })
    }

    /// Linear part `A`, the matrix of `c₁(ℒ)`.
    pub fn linear(&self) -> &IntMat {
        &self.linear
    }

    /// Offset `b`, the point `[ℒ ⊗ S_{−E}]` of `X̂`.
    pub fn offset(&self) -> &DualTorusPoint {
        &self.offset
    }

    /// The fiber point over `x`.
    pub fn dual_over(&self, x: &TorusPoint) -> DualTorusPoint {
        let ax = self.linear.to_rat().mul_vec(x.coords());
        &DualTorusPoint::new(ax) + &self.offset
    }

    pub fn contains(&self, x: &TorusPoint, xhat: &DualTorusPoint) -> bool {
        &self.dual_over(x) == xhat
    }

    /// Translate along `X̂`.
    pub fn shifted(&self, by: &DualTorusPoint) -> Lift {
        Lift { linear: self.linear.clone(), offset: &self.offset + by }
    }
}

/// `𝕃(ℒ) = Γ(x ↦ S_{−E} ⊗ t_{−x}*ℒ)` with the canonical `ξ = 0`.
pub fn lift_bundle(l: &LineBundle) -> Result<Lift> {
    let zero = vec![false; l.torus().real_dim()];
    lift_bundle_with(l, &crate::bundles::make_xi(&-l.form(), &zero)?)
}

/// Lift using an explicit symmetric semi-character for `−E`.
///
/// `t_{−x}*ℒ` shifts the basis values by `E·x`, so the graph has linear part
/// `A = E` and offset the degree-zero bundle `ℒ ⊗ S_{−E}`.
pub fn lift_bundle_with(l: &LineBundle, xi_neg: &SymSemiChar) -> Result<Lift> {
    let x = l.torus();
    if !is_one_one(l.form(), x)? {
        return Err(Error::NotOneOne);
    }
    if xi_neg.form() != &-l.form() {
        return Err(Error::DimensionMismatch("ξ must belong to −E".into()));
    }
    let s = symmetric_flat_bundle_with(x, xi_neg)?;
    let flat = tensor(l, &s)?;
    let offset = flat.as_dual_point().expect("ℒ ⊗ S_{−E} has degree zero");
    Lift::new(l.form().clone(), offset)
}

/// Recovers the bundle from its lift (inverse of [`lift_bundle`]).
pub fn bundle_of_lift(x: &ComplexTorus, lift: &Lift) -> Result<LineBundle> {
    let flat = LineBundle::from_dual_point(x, lift.offset())?;
    let zero = vec![false; x.real_dim()];
    let s = symmetric_flat_bundle_with(x, &crate::bundles::make_xi(&-lift.linear(), &zero)?)?;
    let l = tensor(&flat, &inverse(&s))?;
    make_bundle(x, lift.linear().clone(), l.basis_values().to_vec())
}

/// Linear subspace of `ℚ^n` given by an independent spanning set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<BigRational>>,
}

impl Subspace {
    pub fn new(ambient: usize, basis: Vec<Vec<BigRational>>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch("basis vector length".into()));
        }
        let s = Subspace { ambient, basis };
        if s.rank_of(&s.basis) != s.basis.len() {
            return Err(Error::LinearlyDependent);
        }
        Ok(s)
    }

    pub fn from_int(ambient: usize, basis: &[Vec<BigInt>]) -> Result<Self> {
        Self::new(
            ambient,
            basis.iter().map(|v| v.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect(),
        )
    }

    pub fn full(ambient: usize) -> Self {
        let id = RatMat::identity(ambient);
        Subspace { ambient, basis: (0..ambient).map(|i| id.row(i).to_vec()).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    fn rank_of(&self, vectors: &[Vec<BigRational>]) -> usize {
        if vectors.is_empty() {
            return 0;
        }
        RatMat::from_rows(vectors.to_vec()).expect("nonempty rows").rank()
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        let mut all = self.basis.clone();
        all.push(v.to_vec());
        self.rank_of(&all) == self.dim()
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
    }
}

/// `T𝕃 = span{(eᵢ, A·eᵢ)}`.
pub fn lift_tangent(lift: &Lift) -> Subspace {
    let n = lift.linear.rows();
    let basis = (0..n)
        .map(|i| {
            let mut v = vec![BigInt::zero(); 2 * n];
            v[i] = BigInt::one();
            for k in 0..n {
                v[n + k] = lift.linear[(k, i)].clone();
            }
            v
        })
        .collect::<Vec<_>>();
    Subspace::from_int(2 * n, &basis).expect("graph basis is independent")
}

/// Generalized tangent `{v + ι_vE}` of the brane `(X, ℒ)`, with the cotangent
/// part carried to `TX̂` through `σ`: `v̂` solves `σ(v̂, w) = E(v, w)` for all
/// `w ∈ TX`.
pub fn generalized_tangent(l: &LineBundle, doubled: &DoubledTorus) -> Result<Subspace> {
    if l.torus() != doubled.base() {
        return Err(Error::TorusMismatch);
    }
    let n = doubled.base().real_dim();
    let pairing = doubled.sigma().block(n, 0, n, n).transpose().to_rat();
    let solve = pairing.inverse()?;
    let e = l.form().to_rat();
    let basis = (0..n)
        .map(|i| {
            let mut v = vec![BigRational::zero(); 2 * n];
            v[i] = BigRational::one();
            let hat = solve.mul_vec(e.row(i));
            v[n..].clone_from_slice(&hat);
            v
        })
        .collect();
    Subspace::new(2 * n, basis)
}

pub fn is_isotropic(sub: &Subspace, form: &RatMat) -> bool {
    assert_eq!(form.rows(), sub.ambient(), "form dimension mismatch");
    sub.basis.iter().all(|v| sub.basis.iter().all(|w| form.bilinear(v, w).is_zero()))
}

/// `𝒥_J = [[J, 0], [0, −Jᵀ]]`.
pub fn lift_gcs_complex(x: &ComplexTorus) -> RatMat {
    let j = x.complex_structure();
    RatMat::block_diag(j, &-&j.transpose())
}

/// `𝒥_ω = [[0, −ω⁻¹], [ω, 0]]`.
pub fn lift_gcs_symplectic(omega: &RatMat) -> Result<RatMat> {
    omega.ensure_alternating()?;
    let inv = omega.inverse().map_err(|_| Error::SingularOmega)?;
    let n = omega.rows();
    RatMat::from_blocks(&RatMat::zeros(n, n), &-&inv, omega, &RatMat::zeros(n, n))
}

/// `M² = −I` and `Mᵀ·L·M = L` for the neutral metric `L`.
pub fn is_almost_gcs(m: &RatMat, doubled: &DoubledTorus) -> bool {
    let n = doubled.real_dim();
    if m.rows() != n || m.cols() != n {
        return false;
    }
    let l = doubled.neutral().to_rat();
    m * m == -&RatMat::identity(n) && &(&m.transpose() * &l) * m == l
}

/// B-shifted generalized metric
/// `G^B = [[−g⁻¹B, g⁻¹], [g − Bg⁻¹B, Bg⁻¹]]`.
pub fn generalized_metric(g: &RatMat, b: &RatMat) -> Result<RatMat> {
    g.ensure_symmetric()?;
    b.ensure_alternating()?;
    if g.rows() != b.rows() {
        return Err(Error::DimensionMismatch("metric and B-field sizes".into()));
    }
    if !is_positive_definite(g)? {
        return Err(Error::NotPositiveDefinite);
    }
    let ginv = g.inverse()?;
    let tl = -&(&ginv * b);
    let bl = g - &(&(b * &ginv) * b);
    let br = b * &ginv;
    RatMat::from_blocks(&tl, &ginv, &bl, &br)
}

/// `𝒥♯ = ⟨𝒥 −, −⟩`, as the matrix `𝒥ᵀ·L`.
pub fn j_sharp(jmat: &RatMat, doubled: &DoubledTorus) -> Result<RatMat> {
    if !is_almost_gcs(jmat, doubled) {
        return Err(Error::NotGcs);
    }
    Ok(&jmat.transpose() * &doubled.neutral().to_rat())
}

pub fn is_stable_under(sub: &Subspace, m: &RatMat) -> bool {
    sub.basis.iter().all(|v| sub.contains(&m.mul_vec(v)))
}

/// Kähler form `ω = g·J`, so that `ω(v, w) = g(v, Jw)`.
pub fn kahler_form(g: &RatMat, x: &ComplexTorus) -> RatMat {
    g * x.complex_structure()
}
