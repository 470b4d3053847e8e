//! Doubled geometry of T-folds: the circle T-duality spectrum, `O(n,n;ℤ)`
//! twists, the doubled nilfold, polarizations and the `(g, B)` content of a
//! generalized metric.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{nilpotent_exp, poly_mat_inverse, IntMat, PolyMat, RatMat};

/// `M² = n²/R² + w²R²/α′²`; oscillator contributions are taken to be zero.
pub fn mass_squared(n_mom: &BigInt, w: &BigInt, r: &BigRational, alpha_p: &BigRational) -> Result<BigRational> {
    check_positive(r, alpha_p)?;
    let n = BigRational::from_integer(n_mom.clone());
    let w = BigRational::from_integer(w.clone());
    Ok(&n * &n / (r * r) + &w * &w * r * r / (alpha_p * alpha_p))
}

/// `(n, w, R) ↦ (w, n, α′/R)`.
pub fn t_dual_params(
    n_mom: &BigInt,
    w: &BigInt,
    r: &BigRational,
    alpha_p: &BigRational,
) -> Result<(BigInt, BigInt, BigRational)> {
    check_positive(r, alpha_p)?;
    Ok((w.clone(), n_mom.clone(), alpha_p / r))
}

fn check_positive(r: &BigRational, alpha_p: &BigRational) -> Result<()> {
    if !r.is_positive() {
        return Err(Error::NonPositive("R"));
    }
    if !alpha_p.is_positive() {
        return Err(Error::NonPositive("alpha'"));
    }
    Ok(())
}

/// `L = [[0, I], [I, 0]]` on `ℝⁿ ⊕ ℝⁿ`.
pub fn neutral_metric(n: usize) -> IntMat {
    let id = IntMat::identity(n);
    let zero = IntMat::zeros(n, n);
    IntMat::from_blocks(&zero, &id, &id, &zero).expect("square blocks")
}

pub fn preserves_neutral(m: &RatMat) -> bool {
    if !m.is_square() || !m.rows().is_multiple_of(2) {
        return false;
    }
    let l = neutral_metric(m.rows() / 2).to_rat();
    &(&m.transpose() * &l) * m == l
}

/// Geometric (`f`), B-field (`K`) and T-fold (`Q`) twist data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    f: IntMat,
    k: IntMat,
    q: IntMat,
}

impl TwistData {
    pub fn new(f: IntMat, k: IntMat, q: IntMat) -> Result<Self> {
        f.ensure_square()?;
        if k.rows() != f.rows() || q.rows() != f.rows() || !k.is_square() || !q.is_square() {
            return Err(Error::DimensionMismatch("twist blocks must share a size".into()));
        }
        if !k.is_alternating() || !q.is_alternating() {
            return Err(Error::NotInLieAlgebra);
        }
        Ok(TwistData { f, k, q })
    }

    pub fn size(&self) -> usize {
        self.f.rows()
    }

    /// `N = [[f, Q], [K, −fᵀ]]`.
    pub fn generator(&self) -> IntMat {
        IntMat::from_blocks(&self.f, &self.q, &self.k, &-&self.f.transpose()).expect("square blocks")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnnElement {
    pub n: IntMat,
    pub m: RatMat,
    pub integral: bool,
    pub preserves_l: bool,
}

/// `exp(N)` for a nilpotent twist generator.
pub fn onn_element(t: &TwistData) -> Result<OnnElement> {
    let n = t.generator();
    let m = nilpotent_exp(&n.to_rat())?;
    let integral = m.to_int().is_some();
    let preserves_l = preserves_neutral(&m);
    Ok(OnnElement { n, m, integral, preserves_l })
}

/// Fiber monodromy of the doubled nilfold in coordinates `(y, z, ỹ, z̃)`.
pub fn nilfold_doubled(m: &BigInt) -> IntMat {
    let mut mon = IntMat::identity(4);
    mon[(0, 1)] = m.clone();
    mon[(3, 2)] = -m;
    mon
}

/// The Dehn-twist generator `f = [[0, 0], [−m, 0]]` of the nilfold.
pub fn nilfold_twist(m: &BigInt) -> IntMat {
    let mut f = IntMat::zeros(2, 2);
    f[(1, 0)] = -m;
    f
}

/// Fiber directions quotiented out by a projection onto a maximally
/// isotropic subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    kernel_basis: Vec<Vec<BigInt>>,
}

impl Polarization {
    pub fn new(kernel_basis: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = kernel_basis.len();
        if n == 0 || kernel_basis.iter().any(|v| v.len() != 2 * n) {
            return Err(Error::NotMaximalIsotropic);
        }
        let m = IntMat::from_rows(kernel_basis.clone())?.to_rat();
        if m.rank() != n {
            return Err(Error::LinearlyDependent);
        }
        let l = neutral_metric(n);
        if kernel_basis.iter().any(|v| kernel_basis.iter().any(|w| !l.bilinear(v, w).is_zero())) {
            return Err(Error::NotMaximalIsotropic);
        }
        Ok(Polarization { kernel_basis })
    }

    pub fn kernel_basis(&self) -> &[Vec<BigInt>] {
        &self.kernel_basis
    }

    pub fn ambient(&self) -> usize {
        2 * self.kernel_basis.len()
    }
}

/// The three projections of the doubled nilfold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NilfoldPolarization {
    /// Onto `(y, z)`: the original twisted torus bundle.
    G,
    /// Onto `(ỹ, z)`: the torus with `H`-flux.
    H,
    /// Onto `(y, z̃)`: the T-fold.
    T,
}

impl NilfoldPolarization {
    pub fn polarization(self) -> Polarization {
        let e = |i: usize| (0..4).map(|j| BigInt::from(i64::from(i == j))).collect::<Vec<_>>();
        let basis = match self {
            NilfoldPolarization::G => vec![e(2), e(3)],
            NilfoldPolarization::H => vec![e(0), e(3)],
            NilfoldPolarization::T => vec![e(1), e(2)],
        };
        Polarization::new(basis).expect("coordinate polarizations are maximally isotropic")
    }

    pub fn name(self) -> &'static str {
        match self {
            NilfoldPolarization::G => "G",
            NilfoldPolarization::H => "H",
            NilfoldPolarization::T => "T",
        }
    }
}

/// Whether the monodromy maps the quotiented directions into themselves.
pub fn polarization_well_defined(p: &Polarization, mon: &IntMat) -> Result<bool> {
    mon.ensure_square()?;
    if mon.rows() != p.ambient() {
        return Err(Error::DimensionMismatch("monodromy and polarization sizes".into()));
    }
    let basis = IntMat::from_rows(p.kernel_basis.clone())?.to_rat();
    let rank = basis.rank();
    Ok(p.kernel_basis.iter().all(|v| {
        let image = mon.mul_vec(v).into_iter().map(BigRational::from_integer).collect();
        let mut rows = basis.to_rows();
        rows.push(image);
        RatMat::from_rows(rows).expect("rectangular").rank() == rank
    }))
}

/// `ℋ = [[g − B·g⁻¹·B, B·g⁻¹], [−g⁻¹·B, g⁻¹]]`.
pub fn gen_metric_assemble(g: &PolyMat, b: &PolyMat) -> Result<PolyMat> {
    g.ensure_symmetric()?;
    b.ensure_alternating()?;
    if g.rows() != b.rows() {
        return Err(Error::DimensionMismatch("metric and B-field sizes".into()));
    }
    let ginv = poly_mat_inverse(g)?;
    let bginv = b * &ginv;
    PolyMat::from_blocks(&(g - &(&bginv * b)), &bginv, &-&(&ginv * b), &ginv)
}

/// Inverse of [`gen_metric_assemble`]: `g` from the bottom-right block and
/// `B` from the top-right block, with the remaining blocks checked.
pub fn gen_metric_decompose(h: &PolyMat, n: usize) -> Result<(PolyMat, PolyMat)> {
    if h.rows() != 2 * n || h.cols() != 2 * n || n == 0 {
        return Err(Error::DimensionMismatch("generalized metric must be 2n×2n".into()));
    }
    if !h.is_symmetric() {
        return Err(Error::InconsistentBlocks);
    }
    let tl = h.block(0, 0, n, n);
    let tr = h.block(0, n, n, n);
    let bl = h.block(n, 0, n, n);
    let br = h.block(n, n, n, n);
    let g = poly_mat_inverse(&br)?;
    let b = &tr * &g;
    if !b.is_alternating() {
        return Err(Error::InconsistentBlocks);
    }
    if tl != &g - &(&(&b * &br) * &b) || bl != -&(&br * &b) {
        return Err(Error::InconsistentBlocks);
    }
    Ok((g, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::{rat, Poly};

    fn i(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn mx(m: i64) -> Poly {
        Poly::monomial(BigRational::from_integer(m.into()), 1)
    }

    fn c(v: i64) -> Poly {
        Poly::from_int(v)
    }

    fn alt2() -> IntMat {
        IntMat::from_i64(&[&[0, 1], &[-1, 0]]).unwrap()
    }

    fn nilfold_metric(m: i64) -> PolyMat {
        let g0 = PolyMat::from_rows(vec![vec![c(1), -mx(m)], vec![-mx(m), c(1) + mx(m).pow(2)]]).unwrap();
        PolyMat::block_diag(&g0, &poly_mat_inverse(&g0).unwrap())
    }

    #[test]
    fn mass_examples() {
        assert_eq!(mass_squared(&i(1), &i(0), &rat(2, 1), &rat(1, 1)).unwrap(), rat(1, 4));
        assert_eq!(mass_squared(&i(0), &i(0), &rat(3, 7), &rat(5, 2)).unwrap(), rat(0, 1));
        assert_eq!(mass_squared(&i(1), &i(1), &rat(1, 1), &rat(1, 1)).unwrap(), rat(2, 1));
        assert_eq!(mass_squared(&i(1), &i(1), &rat(0, 1), &rat(1, 1)), Err(Error::NonPositive("R")));
        assert_eq!(mass_squared(&i(1), &i(1), &rat(1, 1), &rat(-1, 1)), Err(Error::NonPositive("alpha'")));
    }

    #[test]
    fn t_duality_examples() {
        let (n, w, r) = t_dual_params(&i(1), &i(0), &rat(2, 1), &rat(1, 1)).unwrap();
        assert_eq!((n.clone(), w.clone(), r.clone()), (i(0), i(1), rat(1, 2)));
        assert_eq!(mass_squared(&n, &w, &r, &rat(1, 1)).unwrap(), rat(1, 4));
        assert_eq!(t_dual_params(&i(3), &i(5), &rat(1, 1), &rat(1, 1)).unwrap(), (i(5), i(3), rat(1, 1)));
        let (n2, w2, r2) = t_dual_params(&n, &w, &r, &rat(1, 1)).unwrap();
        assert_eq!((n2, w2, r2), (i(1), i(0), rat(2, 1)));
    }

    #[test]
    fn twist_examples() {
        let z = IntMat::zeros(2, 2);
        let f = onn_element(&TwistData::new(IntMat::from_i64(&[&[0, 0], &[-1, 0]]).unwrap(), z.clone(), z.clone()).unwrap()).unwrap();
        assert!(f.integral && f.preserves_l);
        assert_eq!(f.m, IntMat::from_i64(&[&[1, 0, 0, 0], &[-1, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]]).unwrap().to_rat());

        let id = IntMat::identity(2);
        let k = onn_element(&TwistData::new(z.clone(), alt2(), z.clone()).unwrap()).unwrap();
        assert_eq!(k.m, IntMat::from_blocks(&id, &z, &alt2(), &id).unwrap().to_rat());
        assert!(k.integral && k.preserves_l);

        let q = onn_element(&TwistData::new(z.clone(), z.clone(), alt2()).unwrap()).unwrap();
        assert_eq!(q.m, IntMat::from_blocks(&id, &alt2(), &z, &id).unwrap().to_rat());
        assert!(q.integral && q.preserves_l);

        assert_eq!(TwistData::new(z.clone(), id.clone(), z.clone()), Err(Error::NotInLieAlgebra));
        let rot = TwistData::new(z.clone(), alt2(), -&alt2()).unwrap();
        assert_eq!(onn_element(&rot), Err(Error::NotNilpotent));
    }

    #[test]
    fn generator_lies_in_lie_algebra() {
        let t = TwistData::new(IntMat::from_i64(&[&[1, 2], &[3, 4]]).unwrap(), alt2(), -&alt2()).unwrap();
        let n = t.generator();
        let l = neutral_metric(2);
        assert!((&(&n.transpose() * &l) + &(&l * &n)).is_zero());
    }

    #[test]
    fn nilfold_examples() {
        assert_eq!(nilfold_doubled(&i(1)), IntMat::from_i64(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, -1, 1]]).unwrap());
        assert_eq!(nilfold_doubled(&i(0)), IntMat::identity(4));
        for m in -5..=5 {
            let mon = nilfold_doubled(&i(m));
            assert!(preserves_neutral(&mon.to_rat()));
            let ef = nilpotent_exp(&nilfold_twist(&i(m)).to_rat()).unwrap();
            assert_eq!(ef, IntMat::from_i64(&[&[1, 0], &[-m, 1]]).unwrap().to_rat());
            assert_eq!(mon.block(2, 2, 2, 2).to_rat(), ef);
            assert_eq!(mon.block(0, 0, 2, 2).to_rat(), ef.inverse().unwrap().transpose());
        }
    }

    #[test]
    fn polarization_verdicts() {
        let mon = nilfold_doubled(&i(1));
        let verdict = |p: NilfoldPolarization| polarization_well_defined(&p.polarization(), &mon).unwrap();
        assert!(verdict(NilfoldPolarization::G));
        assert!(verdict(NilfoldPolarization::H));
        assert!(!verdict(NilfoldPolarization::T));
        let zero = nilfold_doubled(&i(0));
        assert!(polarization_well_defined(&NilfoldPolarization::T.polarization(), &zero).unwrap());
    }

    #[test]
    fn polarization_validation() {
        let v = |a: &[i64]| a.iter().map(|&x| i(x)).collect::<Vec<_>>();
        assert_eq!(Polarization::new(vec![v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])]), Err(Error::NotMaximalIsotropic));
        assert_eq!(Polarization::new(vec![v(&[1, 0, 0, 0]), v(&[2, 0, 0, 0])]), Err(Error::LinearlyDependent));
        let respanned = Polarization::new(vec![v(&[0, 1, 1, 0]), v(&[0, 1, 2, 0])]).unwrap();
        assert!(!polarization_well_defined(&respanned, &nilfold_doubled(&i(1))).unwrap());
    }

    #[test]
    fn decompose_original_metric() {
        for m in -3..=3 {
            let h = nilfold_metric(m);
            let (g, b) = gen_metric_decompose(&h, 2).unwrap();
            assert_eq!(g, h.block(0, 0, 2, 2));
            assert!(b.is_zero());
        }
    }

    #[test]
    fn decompose_swapped_metric() {
        for m in -3..=3 {
            let h = nilfold_metric(m);
            let perm = [2usize, 1, 0, 3];
            let swapped = PolyMat::from_fn(4, 4, |a, b| h[(perm[a], perm[b])].clone());
            let expected = PolyMat::from_rows(vec![
                vec![c(1) + mx(m).pow(2), c(0), c(0), mx(m)],
                vec![c(0), c(1) + mx(m).pow(2), -mx(m), c(0)],
                vec![c(0), -mx(m), c(1), c(0)],
                vec![mx(m), c(0), c(0), c(1)],
            ])
            .unwrap();
            assert_eq!(swapped, expected);
            let (g, b) = gen_metric_decompose(&swapped, 2).unwrap();
            assert_eq!(g, PolyMat::identity(2));
            assert_eq!(b, PolyMat::from_rows(vec![vec![c(0), mx(m)], vec![-mx(m), c(0)]]).unwrap());
            assert_eq!(gen_metric_assemble(&g, &b).unwrap(), swapped);
        }
    }

    #[test]
    fn decompose_rejects() {
        assert_eq!(gen_metric_decompose(&PolyMat::identity(2), 1).unwrap(), (PolyMat::identity(1), PolyMat::zeros(1, 1)));
        let asym = PolyMat::from_rows(vec![vec![c(1), c(1)], vec![c(0), c(1)]]).unwrap();
        assert_eq!(gen_metric_decompose(&asym, 1), Err(Error::InconsistentBlocks));
        let bad_tl = PolyMat::from_rows(vec![vec![c(2), c(0)], vec![c(0), c(1)]]).unwrap();
        assert_eq!(gen_metric_decompose(&bad_tl, 1), Err(Error::InconsistentBlocks));
        let non_unit = PolyMat::from_rows(vec![vec![c(1), c(0)], vec![c(0), Poly::x()]]).unwrap();
        assert_eq!(gen_metric_decompose(&non_unit, 1), Err(Error::NonUnitDeterminant));
    }
}
