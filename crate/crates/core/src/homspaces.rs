//! Cohomology of line bundles, B-model Hom spaces, intersections of lifts and
//! the comparison between the two.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bundles::{inverse, semichar_eval, tensor, FiniteAbelianGroup, LineBundle};
use crate::doubled::{lift_bundle, Lift, Subspace};
use crate::error::{Error, Result};
use crate::exactlinalg::{frac, lower_hermite_basis, pfaffians, saturate, smith_normal_form, IntMat};
use crate::torus::{binomial, hermitian_form, TorusPoint};

/// Dimensions `h⁰, …, h^g` of a graded vector space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: Vec<BigInt>,
}

impl GradedDims {
    pub fn new(dims: Vec<BigInt>) -> Self {
        debug_assert!(dims.iter().all(|d| !d.is_negative()));
        GradedDims { dims }
    }

    pub fn zero(g: usize) -> Self {
        GradedDims { dims: vec![BigInt::zero(); g + 1] }
    }

    pub fn binomials(g: usize) -> Self {
        GradedDims { dims: (0..=g).map(|q| binomial(g, q)).collect() }
    }

    pub fn dims(&self) -> &[BigInt] {
        &self.dims
    }

    pub fn total(&self) -> BigInt {
        self.dims.iter().sum()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.dims.iter().enumerate().map(|(q, d)| if q % 2 == 0 { d.clone() } else { -d }).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Whether `ℒ` restricted to the connected component `K(ℒ)₀` is trivial:
/// the semi-character must vanish on a ℤ-basis of `Λ ∩ rad(E)`.
pub fn trivial_on_kernel_component(l: &LineBundle) -> bool {
    let n = l.torus().real_dim();
    let radical = l.form().to_rat().kernel();
    saturate(&radical, n)
        .iter()
        .all(|lam| semichar_eval(l.semi_character(), lam).expect("lattice vector length").is_zero())
}

/// `h^q(ℒ) = C(g−r−s, q−s)·Pfr(E)` for `s ≤ q ≤ g−r` when `ℒ|K(ℒ)₀` is trivial,
/// and zero otherwise.
pub fn cohomology_dims(l: &LineBundle) -> GradedDims {
    let x = l.torus();
    let g = x.dim();
    if !trivial_on_kernel_component(l) {
        return GradedDims::zero(g);
    }
    let h = hermitian_form(l.form(), x).expect("bundle forms are of type (1,1)");
    let (r, s) = (h.positive, h.negative);
    let (_, pfr) = pfaffians(l.form()).expect("bundle forms are alternating");
    let dims = (0..=g)
        .map(|q| if q >= s && q + r <= g { binomial(g - r - s, q - s) * &pfr } else { BigInt::zero() })
        .collect();
    GradedDims::new(dims)
}

/// `Hom_B(ℒ₁, ℒ₂) = ⊕ Ext^q(ℒ₁, ℒ₂) = ⊕ H^q(ℒ₁⁻¹ ⊗ ℒ₂)`.
pub fn hom_b(l1: &LineBundle, l2: &LineBundle) -> Result<GradedDims> {
    Ok(cohomology_dims(&tensor(&inverse(l1), l2)?))
}

/// Solution set of `R·x ≡ r (mod ℤⁿ)` in the real torus `ℝⁿ/ℤⁿ`, i.e. a
/// translate of a closed subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubgroup {
    relation: IntMat,
    rhs: Vec<BigRational>,
    point: Option<TorusPoint>,
    subtorus: Subspace,
    finite: FiniteAbelianGroup,
    torsion_generators: Vec<Vec<BigRational>>,
    free_directions: Vec<Vec<BigInt>>,
}

impl AffineSubgroup {
    /// Solves `R·x ≡ r` via `U·R·V = D`: with `x = V·y` the system splits into
    /// `dᵢ·yᵢ ≡ (U·r)ᵢ`.
    pub fn solve(relation: IntMat, rhs: Vec<BigRational>) -> Result<Self> {
        relation.ensure_square()?;
        let n = relation.rows();
        if rhs.len() != n {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let snf = smith_normal_form(&relation);
        let d = snf.divisors();
        let r = snf.u.to_rat().mul_vec(&rhs);
        let v = snf.v.to_rat();
        let consistent = (0..n).all(|i| !d[i].is_zero() || r[i].is_integer());
        let mut y = vec![BigRational::zero(); n];
        let mut torsion_generators = Vec::new();
        let mut free_directions = Vec::new();
        for i in 0..n {
            if d[i].is_zero() {
                free_directions.push(snf.v.col(i));
            } else {
                let di = BigRational::from_integer(d[i].clone());
                y[i] = &r[i] / &di;
                if !d[i].is_one() {
                    torsion_generators.push(snf.v.col(i).into_iter().map(|c| BigRational::from_integer(c) / &di).collect());
                }
            }
        }
        let subtorus = Subspace::from_int(n, &free_directions).expect("columns of a unimodular matrix");
        let finite = FiniteAbelianGroup { factors: d.iter().filter(|x| !x.is_zero()).cloned().collect(), free_rank: free_directions.len() };
        let mut out = AffineSubgroup { relation, rhs, point: None, subtorus, finite, torsion_generators, free_directions };
        if consistent {
            out.point = Some(out.canonical(v.mul_vec(&y)));
        }
        Ok(out)
    }

    /// Lexicographically smallest representative of `p` modulo the torsion
    /// lattice `ℤⁿ + Σ ℤ·tᵢ`, found by reducing against a triangular basis.
    fn canonical(&self, p: Vec<BigRational>) -> TorusPoint {
        let n = p.len();
        let scale = self.torsion_generators.iter().flatten().fold(BigInt::one(), |acc, t| acc.lcm(t.denom()));
        let mut gens: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { scale.clone() } else { BigInt::zero() }).collect())
            .collect();
        for t in &self.torsion_generators {
            gens.push(t.iter().map(|c| (c * BigRational::from_integer(scale.clone())).to_integer()).collect());
        }
        let basis = lower_hermite_basis(&gens, n).expect("contains a multiple of ℤⁿ");
        let scale = BigRational::from_integer(scale);
        let mut x: Vec<BigRational> = p.iter().map(frac).collect();
        for (j, b) in basis.iter().enumerate() {
            let step = BigRational::from_integer(b[j].clone()) / &scale;
            let t = (&x[j] / &step).floor();
            for (xk, bk) in x.iter_mut().zip(b).skip(j) {
                *xk -= &t * BigRational::from_integer(bk.clone()) / &scale;
            }
        }
        TorusPoint::new(x)
    }

    pub fn ambient(&self) -> usize {
        self.rhs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.point.is_none()
    }

    /// The canonical particular solution.
    pub fn point(&self) -> Option<&TorusPoint> {
        self.point.as_ref()
    }

    /// Directions of the connected component.
    pub fn subtorus(&self) -> &Subspace {
        &self.subtorus
    }

    /// Structure of the underlying subgroup `{x : R·x ∈ ℤⁿ}`.
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.finite
    }

    pub fn free_rank(&self) -> usize {
        self.finite.free_rank
    }

    pub fn relation(&self) -> &IntMat {
        &self.relation
    }

    /// Number of points: `Some(0)` if empty, `None` if positive-dimensional.
    pub fn cardinality(&self) -> Option<BigInt> {
        match (&self.point, self.finite.is_finite()) {
            (None, _) => Some(BigInt::zero()),
            (Some(_), true) => Some(self.finite.order()),
            (Some(_), false) => None,
        }
    }

    pub fn contains(&self, x: &TorusPoint) -> bool {
        x.len() == self.ambient()
            && self.relation.to_rat().mul_vec(x.coords()).iter().zip(&self.rhs).all(|(a, b)| (a - b).is_integer())
    }

    fn in_group(&self, v: &[BigRational]) -> bool {
        self.relation.to_rat().mul_vec(v).iter().all(BigRational::is_integer)
    }

    fn annihilates(&self, v: &[BigInt]) -> bool {
        self.relation.mul_vec(v).iter().all(Zero::is_zero)
    }

    /// All points, sorted, when the set is finite.
    pub fn points(&self) -> Option<Vec<TorusPoint>> {
        let p = match &self.point {
            None => return Some(Vec::new()),
            Some(p) => p,
        };
        if !self.finite.is_finite() {
            return None;
        }
        let mut acc: BTreeSet<TorusPoint> = BTreeSet::from([p.clone()]);
        for t in &self.torsion_generators {
            let t = TorusPoint::new(t.clone());
            let mut next = acc.clone();
            for q in &acc {
                let mut cur = q.clone();
                loop {
                    cur = &cur + &t;
                    if !next.insert(cur.clone()) {
                        break;
                    }
                }
            }
            acc = next;
        }
        Some(acc.into_iter().collect())
    }

    /// Set equality, decided from generators and particular points.
    pub fn same_points(&self, other: &AffineSubgroup) -> bool {
        match (&self.point, &other.point) {
            (None, None) => true,
            (Some(p), Some(q)) => {
                self.ambient() == other.ambient()
                    && self.finite == other.finite
                    && self.contains(q)
                    && other.contains(p)
                    && other.torsion_generators.iter().all(|t| self.in_group(t))
                    && self.torsion_generators.iter().all(|t| other.in_group(t))
                    && other.free_directions.iter().all(|w| self.annihilates(w))
                    && self.free_directions.iter().all(|w| other.annihilates(w))
            }
            _ => false,
        }
    }
}

/// Base points of `𝕃₁ ∩ 𝕃₂`: `(A₂ − A₁)·x ≡ b₁ − b₂`.
pub fn intersect_lifts(l1: &Lift, l2: &Lift) -> Result<AffineSubgroup> {
    if l1.linear().rows() != l2.linear().rows() {
        return Err(Error::DimensionMismatch("lifts live in different doubled tori".into()));
    }
    let relation = l2.linear() - l1.linear();
    let rhs = l1.offset().coords().iter().zip(l2.offset().coords()).map(|(a, b)| a - b).collect();
    AffineSubgroup::solve(relation, rhs)
}

/// `J`-holomorphic Floer dimensions of `(𝕃(ℒ₁), 𝕃(ℒ₂))` for `c₁(ℒ₁) = c₁(ℒ₂)`.
pub fn floer_dims_j(l1: &LineBundle, l2: &LineBundle) -> Result<GradedDims> {
    if l1.torus() != l2.torus() {
        return Err(Error::TorusMismatch);
    }
    if l1.form() != l2.form() {
        return Err(Error::UnequalChernClass);
    }
    let g = l1.torus().dim();
    let meet = intersect_lifts(&lift_bundle(l1)?, &lift_bundle(l2)?)?;
    Ok(if meet.is_empty() { GradedDims::zero(g) } else { GradedDims::binomials(g) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtReport {
    pub hom: GradedDims,
    pub intersection: AffineSubgroup,
    pub equal_chern: bool,
    /// `HF_J = Hom_B`, evaluated when the Chern classes agree.
    pub agreement: Option<bool>,
    /// `#(𝕃₁ ∩ 𝕃₂) = (Σ h^q)²`, evaluated when the Chern classes differ and
    /// the intersection is finite.
    pub squared_relation: Option<bool>,
}

pub fn verify_ext_intersection(l1: &LineBundle, l2: &LineBundle) -> Result<ExtReport> {
    let hom = hom_b(l1, l2)?;
    let intersection = intersect_lifts(&lift_bundle(l1)?, &lift_bundle(l2)?)?;
    let equal_chern = l1.form() == l2.form();
    let agreement = if equal_chern { Some(floer_dims_j(l1, l2)? == hom) } else { None };
    let squared_relation = if !equal_chern && intersection.group().is_finite() {
        let total = hom.total();
        intersection.cardinality().map(|c| c == &total * &total)
    } else {
        None
    };
    Ok(ExtReport { hom, intersection, equal_chern, agreement, squared_relation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::make_bundle;
    use crate::exactlinalg::rat;
    use crate::torus::ComplexTorus;

    fn alt(n: usize, entries: &[(usize, usize, i64)]) -> IntMat {
        let mut e = IntMat::zeros(n, n);
        for &(a, b, v) in entries {
            e[(a, b)] = v.into();
            e[(b, a)] = (-v).into();
        }
        e
    }

    fn dims(v: &[i64]) -> GradedDims {
        GradedDims::new(v.iter().map(|&x| x.into()).collect())
    }

    fn bundle(x: &ComplexTorus, e: IntMat, c: &[(i64, i64)]) -> LineBundle {
        make_bundle(x, e, c.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    fn pt(c: &[(i64, i64)]) -> TorusPoint {
        TorusPoint::new(c.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn cohomology_examples() {
        let x1 = ComplexTorus::standard(1);
        let x2 = ComplexTorus::standard(2);
        assert_eq!(cohomology_dims(&LineBundle::trivial(&x2)), dims(&[1, 2, 1]));
        assert_eq!(cohomology_dims(&bundle(&x1, alt(2, &[(0, 1, 2)]), &[(0, 1), (0, 1)])), dims(&[2, 0]));
        assert_eq!(cohomology_dims(&bundle(&x1, alt(2, &[(0, 1, -1)]), &[(0, 1), (0, 1)])), dims(&[0, 1]));
        assert_eq!(cohomology_dims(&bundle(&x1, IntMat::zeros(2, 2), &[(1, 3), (0, 1)])), dims(&[0, 0]));
    }

    #[test]
    fn degenerate_cohomology() {
        let x2 = ComplexTorus::standard(2);
        let e = alt(4, &[(0, 1, 2)]);
        let l = bundle(&x2, e.clone(), &[(1, 2), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(cohomology_dims(&l), dims(&[2, 2, 0]));
        let twisted = bundle(&x2, e, &[(0, 1), (0, 1), (1, 3), (0, 1)]);
        assert_eq!(cohomology_dims(&twisted), dims(&[0, 0, 0]));
    }

    #[test]
    fn euler_characteristic_of_nondegenerate() {
        let x1 = ComplexTorus::standard(1);
        for d in [-3i64, -1, 1, 4] {
            let h = cohomology_dims(&bundle(&x1, alt(2, &[(0, 1, d)]), &[(1, 5), (2, 7)]));
            assert_eq!(h.euler_characteristic(), BigInt::from(d));
        }
    }

    #[test]
    fn hom_examples() {
        let x1 = ComplexTorus::standard(1);
        let l = bundle(&x1, alt(2, &[(0, 1, 2)]), &[(1, 4), (0, 1)]);
        assert_eq!(hom_b(&l, &l).unwrap(), GradedDims::binomials(1));
        let deg2 = bundle(&x1, alt(2, &[(0, 1, 2)]), &[(0, 1), (0, 1)]);
        assert_eq!(hom_b(&LineBundle::trivial(&x1), &deg2).unwrap(), dims(&[2, 0]));
        assert!(hom_b(&l, &deg2).unwrap().is_zero());
        let x2 = ComplexTorus::standard(2);
        assert_eq!(hom_b(&l, &LineBundle::trivial(&x2)), Err(Error::TorusMismatch));
    }

    #[test]
    fn intersection_examples() {
        let x1 = ComplexTorus::standard(1);
        let l = bundle(&x1, alt(2, &[(0, 1, 3)]), &[(1, 4), (0, 1)]);
        let lift = lift_bundle(&l).unwrap();
        let whole = intersect_lifts(&lift, &lift).unwrap();
        assert_eq!(whole.free_rank(), 2);
        assert_eq!(whole.cardinality(), None);

        let other = bundle(&x1, alt(2, &[(0, 1, 3)]), &[(1, 4), (1, 2)]);
        assert!(intersect_lifts(&lift, &lift_bundle(&other).unwrap()).unwrap().is_empty());

        let o = lift_bundle(&LineBundle::trivial(&x1)).unwrap();
        let deg2 = lift_bundle(&bundle(&x1, alt(2, &[(0, 1, 2)]), &[(0, 1), (0, 1)])).unwrap();
        let meet = intersect_lifts(&o, &deg2).unwrap();
        assert_eq!(meet.cardinality(), Some(BigInt::from(4)));
        let expected = vec![pt(&[(0, 1), (0, 1)]), pt(&[(0, 1), (1, 2)]), pt(&[(1, 2), (0, 1)]), pt(&[(1, 2), (1, 2)])];
        assert_eq!(meet.points().unwrap(), expected);
        let brute: Vec<TorusPoint> = (0..2)
            .flat_map(|a| (0..2).map(move |b| pt(&[(a, 2), (b, 2)])))
            .filter(|p| o.dual_over(p) == deg2.dual_over(p))
            .collect();
        assert_eq!(brute, expected);
        assert_eq!(meet.point(), Some(&expected[0]));
    }

    #[test]
    fn canonical_point_is_lexicographic_minimum() {
        let rel = IntMat::from_i64(&[&[2, 1], &[0, 3]]).unwrap();
        let s = AffineSubgroup::solve(rel, vec![rat(1, 3), rat(1, 2)]).unwrap();
        let pts = s.points().unwrap();
        assert_eq!(pts.len(), 6);
        assert_eq!(s.point(), pts.first());
        assert!(pts.iter().all(|p| s.contains(p)));
    }

    #[test]
    fn degenerate_intersection_has_free_part() {
        let x2 = ComplexTorus::standard(2);
        let a = lift_bundle(&LineBundle::trivial(&x2)).unwrap();
        let b = lift_bundle(&bundle(&x2, alt(4, &[(0, 1, 2)]), &[(0, 1); 4])).unwrap();
        let meet = intersect_lifts(&a, &b).unwrap();
        assert_eq!(meet.free_rank(), 2);
        assert_eq!(meet.group().nontrivial_factors(), vec![BigInt::from(2), BigInt::from(2)]);
        assert!(meet.contains(&pt(&[(1, 2), (0, 1), (1, 7), (2, 5)])));
        assert!(!meet.contains(&pt(&[(1, 3), (0, 1), (0, 1), (0, 1)])));
        let shifted = lift_bundle(&bundle(&x2, alt(4, &[(0, 1, 2)]), &[(0, 1), (0, 1), (1, 2), (0, 1)])).unwrap();
        assert!(intersect_lifts(&a, &shifted).unwrap().is_empty());
    }

    #[test]
    fn floer_examples() {
        let x2 = ComplexTorus::standard(2);
        let o = LineBundle::trivial(&x2);
        assert_eq!(floer_dims_j(&o, &o).unwrap(), dims(&[1, 2, 1]));
        let x1 = ComplexTorus::standard(1);
        let a = bundle(&x1, alt(2, &[(0, 1, 2)]), &[(0, 1), (0, 1)]);
        let b = bundle(&x1, alt(2, &[(0, 1, 2)]), &[(1, 3), (0, 1)]);
        assert_eq!(floer_dims_j(&a, &b).unwrap(), dims(&[0, 0]));
        assert_eq!(floer_dims_j(&a, &LineBundle::trivial(&x1)), Err(Error::UnequalChernClass));
    }

    #[test]
    fn ext_report_examples() {
        let x1 = ComplexTorus::standard(1);
        let o = LineBundle::trivial(&x1);
        let r = verify_ext_intersection(&o, &o).unwrap();
        assert_eq!(r.agreement, Some(true));
        assert_eq!(r.hom, GradedDims::binomials(1));

        let deg2 = bundle(&x1, alt(2, &[(0, 1, 2)]), &[(0, 1), (0, 1)]);
        let r = verify_ext_intersection(&o, &deg2).unwrap();
        assert_eq!(r.hom.total(), BigInt::from(2));
        assert_eq!(r.intersection.cardinality(), Some(BigInt::from(4)));
        assert_eq!(r.squared_relation, Some(true));
        assert_eq!(r.agreement, None);

        let flat = bundle(&x1, IntMat::zeros(2, 2), &[(1, 3), (0, 1)]);
        let r = verify_ext_intersection(&flat, &o).unwrap();
        assert!(r.hom.is_zero());
        assert!(r.intersection.is_empty());
        assert_eq!(r.agreement, Some(true));
    }
}
