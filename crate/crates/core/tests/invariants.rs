use doubletorus_core::bundles::{inverse, make_bundle, tensor, translate, LineBundle};
use doubletorus_core::doubled::{
    bundle_of_lift, is_isotropic, is_stable_under, lift_bundle, lift_gcs_complex, lift_tangent, make_doubled,
};
use doubletorus_core::exactlinalg::{pfaffians, rat, IntMat, Poly, PolyMat, RatMat};
use doubletorus_core::homspaces::{cohomology_dims, hom_b, intersect_lifts, GradedDims};
use doubletorus_core::tfold::{
    gen_metric_assemble, gen_metric_decompose, mass_squared, nilfold_doubled, onn_element, preserves_neutral,
    t_dual_params, TwistData,
};
use doubletorus_core::torus::{ComplexTorus, TorusPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn form(x: &ComplexTorus, coeffs: &[i64]) -> IntMat {
    let n = x.real_dim();
    x.neron_severi_basis()
        .iter()
        .zip(coeffs)
        .fold(IntMat::zeros(n, n), |acc, (b, &c)| &acc + &(b * &BigInt::from(c)))
}

fn point(nums: &[(i64, i64)]) -> Vec<BigRational> {
    nums.iter().map(|&(p, q)| rat(p.rem_euclid(q), q)).collect()
}

fn bundle(x: &ComplexTorus, coeffs: &[i64], chi: &[(i64, i64)]) -> LineBundle {
    make_bundle(x, form(x, coeffs), point(&chi[..x.real_dim()])).unwrap()
}

fn case() -> impl Strategy<Value = (usize, Vec<i64>, Vec<(i64, i64)>)> {
    (1usize..=2).prop_flat_map(|g| {
        let ns = ComplexTorus::standard(g).neron_severi_basis().len();
        (Just(g), prop::collection::vec(-2i64..=2, ns), prop::collection::vec((0i64..12, 1i64..=12), 2 * g))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn euler_characteristic_is_pfaffian_up_to_sign((g, coeffs, chi) in case()) {
        let x = ComplexTorus::standard(g);
        let l = bundle(&x, &coeffs, &chi);
        let (pf, _) = pfaffians(l.form()).unwrap();
        let h = cohomology_dims(&l);
        prop_assert_eq!(h.dims().len(), g + 1);
        if !pf.is_zero() {
            prop_assert_eq!(h.euler_characteristic().abs(), pf.clone());
            prop_assert_eq!(h.total(), pf);
        }
    }

    #[test]
    fn self_hom_is_structure_sheaf((g, coeffs, chi) in case()) {
        let x = ComplexTorus::standard(g);
        let l = bundle(&x, &coeffs, &chi);
        prop_assert_eq!(hom_b(&l, &l).unwrap(), GradedDims::binomials(g));
        prop_assert_eq!(cohomology_dims(&tensor(&l, &inverse(&l)).unwrap()), GradedDims::binomials(g));
    }

    #[test]
    fn lift_round_trips_and_is_lagrangian((g, coeffs, chi) in case()) {
        let x = ComplexTorus::standard(g);
        let l = bundle(&x, &coeffs, &chi);
        let lift = lift_bundle(&l).unwrap();
        prop_assert_eq!(&bundle_of_lift(&x, &lift).unwrap(), &l);
        let doubled = make_doubled(&x);
        let tangent = lift_tangent(&lift);
        prop_assert_eq!(tangent.dim(), x.real_dim());
        prop_assert!(is_isotropic(&tangent, &doubled.neutral().to_rat()));
        prop_assert!(is_stable_under(&tangent, &lift_gcs_complex(&x)));
    }

    #[test]
    fn lifts_of_tensor_products_add((g, c1, chi1) in case(), c2 in prop::collection::vec(-2i64..=2, 6), chi2 in prop::collection::vec((0i64..12, 1i64..=12), 4)) {
        let x = ComplexTorus::standard(g);
        let l1 = bundle(&x, &c1, &chi1);
        let l2 = bundle(&x, &c2[..c1.len()], &chi2);
        let sum = lift_bundle(&tensor(&l1, &l2).unwrap()).unwrap();
        let (a1, a2) = (lift_bundle(&l1).unwrap(), lift_bundle(&l2).unwrap());
        prop_assert_eq!(sum.linear(), &(a1.linear() + a2.linear()));
        let meet = intersect_lifts(&a1, &a2).unwrap();
        let d = l2.form() - l1.form();
        let det = d.det().unwrap();
        if det.is_zero() {
            prop_assert!(meet.cardinality().is_none_or(|c| c.is_zero()));
        } else {
            prop_assert_eq!(meet.cardinality(), Some(det.abs()));
            prop_assert_eq!(meet.points().unwrap().len(), usize::try_from(det.abs()).unwrap());
        }
    }

    #[test]
    fn translation_keeps_the_form_and_cohomology((g, coeffs, chi) in case(), shift in prop::collection::vec((0i64..12, 1i64..=12), 4)) {
        let x = ComplexTorus::standard(g);
        let l = bundle(&x, &coeffs, &chi);
        let moved = translate(&l, &TorusPoint::new(point(&shift[..2 * g])));
        prop_assert_eq!(moved.form(), l.form());
        let (pf, _) = pfaffians(l.form()).unwrap();
        if !pf.is_zero() {
            prop_assert_eq!(cohomology_dims(&moved), cohomology_dims(&l));
        }
    }

    #[test]
    fn t_duality_preserves_mass(n in -20i64..=20, w in -20i64..=20, (rp, rq) in (1i64..50, 1i64..50), (ap, aq) in (1i64..50, 1i64..50)) {
        let (n, w, r, a) = (BigInt::from(n), BigInt::from(w), rat(rp, rq), rat(ap, aq));
        let m2 = mass_squared(&n, &w, &r, &a).unwrap();
        let (n2, w2, r2) = t_dual_params(&n, &w, &r, &a).unwrap();
        prop_assert_eq!(mass_squared(&n2, &w2, &r2, &a).unwrap(), m2);
        prop_assert_eq!(t_dual_params(&n2, &w2, &r2, &a).unwrap(), (n, w, r));
    }

    #[test]
    fn twist_exponentials_are_orthogonal(f in prop::collection::vec(-3i64..=3, 3), k in -3i64..=3, upper in any::<bool>()) {
        let f = IntMat::from_rows(vec![vec![0.into(), f[0].into(), f[1].into()], vec![0.into(), 0.into(), f[2].into()], vec![0.into(), 0.into(), 0.into()]]).unwrap();
        let alt = |v: i64| {
            let mut m = IntMat::zeros(3, 3);
            m[(0, 2)] = v.into();
            m[(2, 0)] = (-v).into();
            m
        };
        let (kk, qq) = if upper { (alt(0), alt(k)) } else { (alt(k), alt(0)) };
        let t = TwistData::new(f, kk, qq).unwrap();
        let o = onn_element(&t).unwrap();
        prop_assert!(o.preserves_l);
    }

    #[test]
    fn nilfold_monodromy_preserves_neutral_metric(m in -50i64..=50) {
        prop_assert!(preserves_neutral(&nilfold_doubled(&BigInt::from(m)).to_rat()));
    }

    #[test]
    fn generalized_metric_round_trips(p in -2i64..=2, b in prop::collection::vec(-3i64..=3, 2)) {
        // g = PᵀP with P = [[1, p], [0, 1]] is unimodular.
        let g = RatMat::from_rows(vec![vec![rat(1, 1), rat(p, 1)], vec![rat(p, 1), rat(1 + p * p, 1)]]).unwrap();
        let g = PolyMat::from_rat(&g);
        let beta = Poly::new(vec![rat(b[0], 1), rat(b[1], 1)]);
        let bmat = PolyMat::from_rows(vec![vec![Poly::zero(), beta.clone()], vec![-beta, Poly::zero()]]).unwrap();
        let h = gen_metric_assemble(&g, &bmat).unwrap();
        prop_assert_eq!(gen_metric_decompose(&h, 2).unwrap(), (g, bmat));
    }
}
