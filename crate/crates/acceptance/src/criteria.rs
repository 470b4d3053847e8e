use std::collections::{BTreeMap, BTreeSet};

use doubletorus_core::bundles::{
    inverse, make_bundle, symmetric_flat_bundle, tensor, translate, LineBundle, SemiCharacter, SymSemiChar,
};
use doubletorus_core::doubled::{
    generalized_metric, generalized_tangent, is_almost_gcs, is_isotropic, is_stable_under, j_sharp, kahler_form,
    lift_bundle, lift_gcs_complex, lift_gcs_symplectic, lift_tangent, make_doubled, Lift,
};
use doubletorus_core::exactlinalg::{
    nilpotent_exp, poly_mat_inverse, rat, symplectic_normal_form, IntMat, Poly, PolyMat, RatMat,
};
use doubletorus_core::homspaces::{cohomology_dims, floer_dims_j, hom_b, intersect_lifts, GradedDims};
use doubletorus_core::tfold::{
    gen_metric_decompose, mass_squared, nilfold_doubled, nilfold_twist, polarization_well_defined, preserves_neutral,
    t_dual_params, NilfoldPolarization,
};
use doubletorus_core::torus::{ComplexTorus, DualTorusPoint, TorusPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::gen::{max_abs, to_i64, Gen};
use crate::oracle;

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

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

fn zeros(n: usize) -> Vec<BigRational> {
    vec![BigRational::zero(); n]
}

/// Fiber of `𝕃(ℒ)` over `x` straight from the definition
/// `S_{−E} ⊗ t_{−x}*ℒ`, without going through [`Lift`].
fn fiber_by_definition(l: &LineBundle, x: &TorusPoint) -> DualTorusPoint {
    let s = symmetric_flat_bundle(l.torus(), &-l.form()).expect("alternating");
    tensor(&s, &translate(l, &-x)).expect("same torus").as_dual_point().expect("degree zero")
}

pub fn elliptic_curve_count() -> Outcome {
    let x = ComplexTorus::standard(1);
    let o = LineBundle::trivial(&x);
    let l = make_bundle(&x, alt(2, &[(0, 1, 2)]), zeros(2)).map_err(|e| e.to_string())?;
    let h = cohomology_dims(&l);
    ensure!(h.dims()[0] == BigInt::from(2), "h0 = {}", h.dims()[0]);
    let meet = intersect_lifts(&lift_bundle(&l).unwrap(), &lift_bundle(&o).unwrap()).unwrap();
    ensure!(meet.cardinality() == Some(BigInt::from(4)), "cardinality {:?}", meet.cardinality());
    let expected: BTreeSet<TorusPoint> =
        [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(a, b)| TorusPoint::new(vec![rat(a, 2), rat(b, 2)])).collect();
    let computed: BTreeSet<TorusPoint> = meet.points().unwrap().into_iter().collect();
    ensure!(computed == expected, "points {:?}", computed);
    let brute: BTreeSet<TorusPoint> = (0..12)
        .flat_map(|a| (0..12).map(move |b| TorusPoint::new(vec![rat(a, 12), rat(b, 12)])))
        .filter(|p| fiber_by_definition(&l, p) == fiber_by_definition(&o, p))
        .collect();
    ensure!(brute == expected, "brute force found {:?}", brute);
    let total = h.total();
    ensure!(BigInt::from(4) == &total * &total, "(h0)^2 != 4");
    Ok("h0 = 2, #(L ∩ O) = 4 at {0,1/2}^2, brute force agrees".into())
}

pub fn cohomology_formula() -> Outcome {
    let x1 = ComplexTorus::standard(1);
    let x2 = ComplexTorus::standard(2);
    let cases = [
        (LineBundle::trivial(&x2), dims(&[1, 2, 1])),
        (make_bundle(&x1, alt(2, &[(0, 1, 2)]), zeros(2)).unwrap(), dims(&[2, 0])),
        (make_bundle(&x1, alt(2, &[(0, 1, -1)]), zeros(2)).unwrap(), dims(&[0, 1])),
        (make_bundle(&x1, IntMat::zeros(2, 2), vec![rat(1, 3), rat(0, 1)]).unwrap(), dims(&[0, 0])),
    ];
    for (l, want) in &cases {
        let got = cohomology_dims(l);
        ensure!(&got == want, "{l}: got {got}, want {want}");
    }
    Ok("4 worked cases reproduce".into())
}

pub fn structure_sheaf() -> Outcome {
    for g in 1..=3 {
        let got = cohomology_dims(&LineBundle::trivial(&ComplexTorus::standard(g)));
        let want = GradedDims::new(oracle::pascal_row(g).into_iter().map(BigInt::from).collect());
        ensure!(got == want, "g={g}: got {got}, want {want}");
    }
    Ok("h^q(O) = C(g,q) for g = 1, 2, 3".into())
}

pub fn theorem_of_square() -> Outcome {
    let mut gen = Gen::new(4);
    for i in 0..100 {
        let g = 1 + i % 3;
        let case = gen.torus(g);
        let l = gen.bundle(&case, 2, 12);
        let x = gen.point(2 * g, 12);
        let y = gen.point(2 * g, 12);
        let lhs = tensor(&translate(&l, &(&x + &y)), &l).unwrap();
        let rhs = tensor(&translate(&l, &x), &translate(&l, &y)).unwrap();
        ensure!(lhs == rhs, "case {i}: {lhs} != {rhs}");
    }
    Ok("100 random (L, x, y) with g ≤ 3".into())
}

fn lattice_box(n: usize, lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (lo..=hi).map(move |k| [v.clone(), vec![BigInt::from(k)]].concat())).collect();
    }
    out
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn all_alternating(n: usize, lo: i64, hi: i64) -> Vec<IntMat> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    lattice_box(pairs.len(), lo, hi)
        .into_iter()
        .map(|vals| {
            let mut e = IntMat::zeros(n, n);
            for (&(i, j), v) in pairs.iter().zip(vals) {
                e[(j, i)] = -&v;
                e[(i, j)] = v;
            }
            e
        })
        .collect()
}

fn xi_table(xi: &SymSemiChar, n: usize) -> Vec<u8> {
    (0..1usize << n)
        .map(|mask| {
            let v: Vec<BigInt> = (0..n).map(|i| BigInt::from((mask >> i & 1) as i64)).collect();
            u8::from(xi.eval(&v).unwrap())
        })
        .collect()
}

pub fn semicharacter_law() -> Outcome {
    let mut gen = Gen::new(5);
    let mut forms = 0usize;
    let mut oracle_cache: BTreeMap<Vec<Vec<u8>>, BTreeSet<Vec<u8>>> = BTreeMap::new();
    for g in 1..=2usize {
        let n = 2 * g;
        let probes = lattice_box(n, -1, 1);
        let units: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
        for e in all_alternating(n, -2, 2) {
            forms += 1;
            let chi = SemiCharacter::new(e.clone(), gen.vector(n, 12)).unwrap();
            let half = rat(1, 2);
            let last = probes.len() as i64 - 1;
            let random: Vec<(usize, usize)> = (0..2).map(|_| (gen.int(0, last) as usize, gen.int(0, last) as usize)).collect();
            for (a, b) in random
                .iter()
                .map(|&(a, b)| (&probes[a], &probes[b]))
                .chain(units.iter().enumerate().flat_map(|(i, u)| units[i + 1..].iter().map(move |v| (u, v))))
            {
                let lhs = chi.eval(&add(a, b)).unwrap() - chi.eval(a).unwrap() - chi.eval(b).unwrap();
                let want = BigRational::from_integer(e.bilinear(a, b)) * &half;
                ensure!((lhs - want).is_integer(), "law fails for E={e}");
            }
            let xis = SymSemiChar::all(&e).unwrap();
            ensure!(xis.len() == 1 << n, "E={e}: {} symmetric semi-characters", xis.len());
            let e_mod2: Vec<Vec<u8>> = to_i64(&e).iter().map(|r| r.iter().map(|v| v.rem_euclid(2) as u8).collect()).collect();
            let first_of_class = !oracle_cache.contains_key(&e_mod2);
            let expected = oracle_cache
                .entry(e_mod2.clone())
                .or_insert_with(|| oracle::quadratic_refinements(&e_mod2).into_iter().collect());
            // a refinement is determined by its values on the basis
            let on_basis = |table: &Vec<u8>| (0..n).map(|i| table[1 << i] == 1).collect::<Vec<bool>>();
            let want_bits: BTreeSet<Vec<bool>> = expected.iter().map(on_basis).collect();
            let got_bits: BTreeSet<Vec<bool>> = xis.iter().map(|xi| xi.bits().to_vec()).collect();
            ensure!(got_bits == want_bits, "E={e}: basis values differ from brute force");
            if first_of_class {
                let got: BTreeSet<Vec<u8>> = xis.iter().map(|xi| xi_table(xi, n)).collect();
                ensure!(&got == expected, "E={e}: ξ tables differ from brute force");
            }
            ensure!(expected.len() == 1 << n, "brute force count {}", expected.len());
        }
    }
    Ok(format!("{forms} forms with entries in [-2,2]; 2^(2g) symmetric semi-characters each"))
}

pub fn disjointness() -> Outcome {
    let mut gen = Gen::new(6);
    for i in 0..50 {
        let g = 1 + i % 3;
        let case = gen.torus(g);
        let l1 = gen.bundle(&case, 2, 12);
        let mut c2 = gen.vector(2 * g, 12);
        if c2.as_slice() == l1.basis_values() {
            c2[0] = (&c2[0] + rat(1, 2)) - (&c2[0] + rat(1, 2)).floor();
        }
        let l2 = make_bundle(&case.x, l1.form().clone(), c2).unwrap();
        let a = lift_bundle(&l1).unwrap();
        ensure!(intersect_lifts(&a, &lift_bundle(&l2).unwrap()).unwrap().is_empty(), "case {i}: nonempty");
        let same = intersect_lifts(&a, &a).unwrap();
        ensure!(same.free_rank() == 2 * g && !same.is_empty(), "case {i}: self-intersection rank {}", same.free_rank());
    }
    Ok("50 equal-E pairs disjoint; self-intersections full rank".into())
}

pub fn intersection_structure() -> Outcome {
    let mut gen = Gen::new(7);
    let mut done = 0;
    let mut attempts = 0;
    while done < 50 {
        attempts += 1;
        ensure!(attempts < 10_000, "could not generate nondegenerate cases");
        let g = 1 + done % 2;
        let case = gen.torus(g);
        let d = gen.ns_form(&case, 2);
        if max_abs(&d) > BigInt::from(3) || d.det().unwrap().is_zero() {
            continue;
        }
        let e1 = gen.ns_form(&case, 1);
        let zero_offsets = done % 2 == 0;
        let den = if zero_offsets { 1 } else { 12 };
        let l1 = gen.bundle_with_form(&case, e1.clone(), den);
        let l2 = gen.bundle_with_form(&case, &e1 + &d, den);
        let meet = intersect_lifts(&lift_bundle(&l1).unwrap(), &lift_bundle(&l2).unwrap()).unwrap();
        let di = to_i64(&d);
        let det = oracle::det(&di).unsigned_abs();
        let pf = oracle::isqrt(det).ok_or("determinant of an alternating form is a square")?;
        ensure!(meet.cardinality() == Some(BigInt::from(det)), "order {:?} != |det| {det}", meet.cardinality());
        if zero_offsets {
            let brute: BTreeSet<TorusPoint> = oracle::torsion_grid_solutions(&di, pf as i64)
                .into_iter()
                .map(|k| TorusPoint::new(k.iter().map(|&v| rat(v, pf as i64)).collect()))
                .collect();
            let got: BTreeSet<TorusPoint> = meet.points().unwrap().into_iter().collect();
            ensure!(got == brute, "points differ from torsion-grid enumeration for D={d}");
        }
        done += 1;
    }
    let mut degenerate = 0;
    while degenerate < 10 {
        attempts += 1;
        ensure!(attempts < 20_000, "could not generate degenerate cases");
        let case = gen.torus(2);
        let d = gen.ns_form(&case, 1);
        if !d.det().unwrap().is_zero() || d.is_zero() && degenerate > 0 {
            continue;
        }
        let e1 = gen.ns_form(&case, 1);
        let l1 = gen.bundle_with_form(&case, e1.clone(), 1);
        let l2 = gen.bundle_with_form(&case, &e1 + &d, 1);
        let meet = intersect_lifts(&lift_bundle(&l1).unwrap(), &lift_bundle(&l2).unwrap()).unwrap();
        let nullity = 4 - oracle::rank(&to_i64(&d));
        ensure!(!meet.is_empty() && meet.free_rank() == nullity, "free rank {} != nullity {nullity}", meet.free_rank());
        degenerate += 1;
    }
    Ok("50 nondegenerate differences match |det| = pf^2 and the torsion grid; 10 degenerate match nullity".into())
}

pub fn equivariance_and_tensor_invariance() -> Outcome {
    let mut gen = Gen::new(8);
    for i in 0..50 {
        let g = 1 + i % 3;
        let case = gen.torus(g);
        let l = gen.bundle(&case, 2, 12);
        let l0 = gen.flat(&case, 12);
        let lhs = lift_bundle(&tensor(&l, &l0).unwrap()).unwrap();
        let rhs = lift_bundle(&l).unwrap().shifted(&l0.as_dual_point().unwrap());
        ensure!(lhs == rhs, "equivariance case {i}");
    }
    for i in 0..50 {
        let g = 1 + i % 2;
        let case = gen.torus(g);
        let l1 = gen.bundle(&case, 1, 6);
        let l2 = gen.bundle(&case, 1, 6);
        let l = gen.bundle(&case, 2, 6);
        let base = intersect_lifts(&lift_bundle(&l1).unwrap(), &lift_bundle(&l2).unwrap()).unwrap();
        let t1 = lift_bundle(&tensor(&l1, &l).unwrap()).unwrap();
        let t2 = lift_bundle(&tensor(&l2, &l).unwrap()).unwrap();
        let moved = intersect_lifts(&t1, &t2).unwrap();
        ensure!(moved.free_rank() == base.free_rank(), "case {i}: free rank changed");
        ensure!(moved.group() == base.group(), "case {i}: invariant factors changed");
        ensure!(moved.same_points(&base), "case {i}: base point sets differ");
        let shift = lift_bundle(&l).unwrap();
        let l1_lift = lift_bundle(&l1).unwrap();
        if let Some(points) = base.points() {
            for p in points.iter().take(32) {
                ensure!(t1.dual_over(p) == &l1_lift.dual_over(p) + &shift.dual_over(p), "case {i}: fiber shift");
                ensure!(t1.dual_over(p) == t2.dual_over(p), "case {i}: not an intersection point");
            }
        }
    }
    Ok("50 equivariance and 50 tensor-invariance cases".into())
}

pub fn floer_ext_agreement() -> Outcome {
    let mut gen = Gen::new(9);
    for i in 0..50 {
        let g = 1 + i % 3;
        let case = gen.torus(g);
        let l1 = gen.bundle(&case, 2, 6);
        let l2 = if gen.coin() { l1.clone() } else { gen.bundle_with_form(&case, l1.form().clone(), 6) };
        let hf = floer_dims_j(&l1, &l2).unwrap();
        let hom = hom_b(&l1, &l2).unwrap();
        ensure!(hf == hom, "case {i}: HF = {hf}, Hom = {hom}");
        ensure!(hom_b(&l1, &l2).unwrap() == cohomology_dims(&tensor(&inverse(&l1), &l2).unwrap()), "case {i}");
    }
    Ok("HF_J = Hom_B on 50 equal-Chern pairs".into())
}

pub fn doubled_geometry() -> Outcome {
    let mut gen = Gen::new(10);
    for i in 0..50 {
        let g = 1 + i % 3;
        let case = gen.torus(g);
        let l = gen.bundle(&case, 2, 12);
        let d = make_doubled(&case.x);
        let tangent = lift_tangent(&lift_bundle(&l).unwrap());
        let jj = lift_gcs_complex(&case.x);
        ensure!(tangent.same_span(&generalized_tangent(&l, &d).unwrap()), "case {i}: tangent");
        ensure!(is_isotropic(&tangent, &d.neutral().to_rat()) && tangent.dim() * 2 == d.real_dim(), "case {i}: isotropy");
        ensure!(is_stable_under(&tangent, &jj), "case {i}: not holomorphic");
        ensure!(is_isotropic(&tangent, &j_sharp(&jj, &d).unwrap()), "case {i}: not Lagrangian");
    }
    let x = ComplexTorus::standard(2);
    let bad = Lift::new(alt(4, &[(0, 2, 1)]), DualTorusPoint::zero(4)).unwrap();
    ensure!(!is_stable_under(&lift_tangent(&bad), &lift_gcs_complex(&x)), "non-(1,1) graph is stable");
    Ok("50 lifts pass; non-(1,1) graph fails stability".into())
}

pub fn gcs_algebra() -> Outcome {
    for g in 1..=2 {
        let x = ComplexTorus::standard(g);
        let n = 2 * g;
        let d = make_doubled(&x);
        let id = RatMat::identity(n);
        let jj = lift_gcs_complex(&x);
        let jw = lift_gcs_symplectic(&kahler_form(&id, &x)).unwrap();
        let gm = generalized_metric(&id, &RatMat::zeros(n, n)).unwrap();
        ensure!(is_almost_gcs(&jj, &d), "J_J");
        ensure!(is_almost_gcs(&jw, &d), "J_omega");
        ensure!(&gm * &gm == RatMat::identity(2 * n), "G^2");
        ensure!(&gm * &jj == jw && &jj * &gm == jw, "Kähler relation on the square torus, g={g}");
    }
    Ok("J_J, J_omega almost GCS; G^2 = 1; J_omega = G J_J".into())
}

pub fn t_duality_spectrum() -> Outcome {
    let mut gen = Gen::new(12);
    for i in 0..100 {
        let n = BigInt::from(gen.int(-20, 20));
        let w = BigInt::from(gen.int(-20, 20));
        let r = gen.positive_rational(30);
        let a = gen.positive_rational(30);
        let (dn, dw, dr) = t_dual_params(&n, &w, &r, &a).unwrap();
        let direct = mass_squared(&n, &w, &r, &a).unwrap();
        ensure!(direct == mass_squared(&dn, &dw, &dr, &a).unwrap(), "case {i}");
        let nr = BigRational::from_integer(n.clone());
        let wr = BigRational::from_integer(w.clone());
        ensure!(direct == &nr * &nr / (&r * &r) + &wr * &wr * &r * &r / (&a * &a), "case {i}: formula");
    }
    let m2 = mass_squared(&BigInt::from(1), &BigInt::from(0), &rat(2, 1), &rat(1, 1)).unwrap();
    ensure!(m2 == rat(1, 4), "M^2(1,0,2,1) = {m2}");
    Ok("100 random invariance checks; M^2(1,0,2,1) = 1/4".into())
}

pub fn nilfold_example() -> Outcome {
    for m in -5..=5i64 {
        let mb = BigInt::from(m);
        let ef = nilpotent_exp(&nilfold_twist(&mb).to_rat()).unwrap();
        ensure!(ef == IntMat::from_i64(&[&[1, 0], &[-m, 1]]).unwrap().to_rat(), "exp(f), m={m}");
        let mon = nilfold_doubled(&mb);
        ensure!(preserves_neutral(&mon.to_rat()), "monodromy does not preserve L, m={m}");
        let mon = mon.to_rat();
        ensure!(mon.block(0, 0, 2, 2) == ef.inverse().unwrap().transpose(), "coordinate block, m={m}");
        ensure!(mon.block(2, 2, 2, 2) == ef, "dual block, m={m}");
        ensure!(mon.block(0, 2, 2, 2).is_zero() && mon.block(2, 0, 2, 2).is_zero(), "off-diagonal blocks, m={m}");
    }
    let mon = nilfold_doubled(&BigInt::from(1));
    let shown = IntMat::from_i64(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, -1, 1]]).unwrap();
    ensure!(mon == shown, "m=1 monodromy {mon}");
    let verdicts: Vec<bool> = [NilfoldPolarization::G, NilfoldPolarization::H, NilfoldPolarization::T]
        .iter()
        .map(|p| polarization_well_defined(&p.polarization(), &mon).unwrap())
        .collect();
    ensure!(verdicts == [true, true, false], "verdicts {:?}", verdicts);
    Ok("exp(f) and monodromy blocks for m in [-5,5]; L preserved; G yes, H yes, T no".into())
}

pub fn metric_decomposition() -> Outcome {
    for m in -3..=3i64 {
        let mx = Poly::monomial(BigRational::from_integer(m.into()), 1);
        let c = Poly::from_int;
        let g0 = PolyMat::from_rows(vec![vec![c(1), -mx.clone()], vec![-mx.clone(), c(1) + mx.pow(2)]]).unwrap();
        let h = PolyMat::block_diag(&g0, &poly_mat_inverse(&g0).unwrap());
        let (g, b) = gen_metric_decompose(&h, 2).unwrap();
        ensure!(g == g0 && b.is_zero(), "original metric, m={m}");
        let swapped = PolyMat::from_rows(vec![
            vec![c(1) + mx.pow(2), c(0), c(0), mx.clone()],
            vec![c(0), c(1) + mx.pow(2), -mx.clone(), c(0)],
            vec![c(0), -mx.clone(), c(1), c(0)],
            vec![mx.clone(), c(0), c(0), c(1)],
        ])
        .unwrap();
        let perm = [2usize, 1, 0, 3];
        ensure!(swapped == PolyMat::from_fn(4, 4, |i, j| h[(perm[i], perm[j])].clone()), "coordinate swap, m={m}");
        let (g, b) = gen_metric_decompose(&swapped, 2).unwrap();
        let want_b = PolyMat::from_rows(vec![vec![c(0), mx.clone()], vec![-mx.clone(), c(0)]]).unwrap();
        ensure!(g == PolyMat::identity(2) && b == want_b, "swapped metric, m={m}: g={g}, B={b}");
    }
    Ok("swapped H gives g = I, B = [[0,mx],[-mx,0]]; original gives (g0, 0)".into())
}

pub fn normal_form_oracles() -> Outcome {
    let mut gen = Gen::new(15);
    for i in 0..200 {
        let n = gen.int(2, 6) as usize;
        let mut m = IntMat::zeros(n, n);
        for a in 0..n {
            for b in a + 1..n {
                let v = BigInt::from(gen.int(-4, 4));
                m[(b, a)] = -&v;
                m[(a, b)] = v;
            }
        }
        let nf = symplectic_normal_form(&m).map_err(|e| e.to_string())?;
        let u = to_i64(&nf.u);
        ensure!(oracle::det(&u).abs() == 1, "case {i}: U not unimodular");
        let k = nf.divisors.len();
        let mut canonical = vec![vec![0i64; n]; n];
        for (j, d) in nf.divisors.iter().enumerate() {
            let d = i64::try_from(d).map_err(|e| e.to_string())?;
            canonical[j][k + j] = d;
            canonical[k + j][j] = -d;
        }
        ensure!(to_i64(&(&(&nf.u.transpose() * &m) * &nf.u)) == canonical, "case {i}: UᵀMU is not canonical");
        ensure!(nf.divisors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()), "case {i}: divisibility chain");
        let mi = to_i64(&m);
        let det = oracle::det(&mi);
        let pf: BigInt = if 2 * nf.divisors.len() == n { nf.divisors.iter().product() } else { BigInt::zero() };
        ensure!(&pf * &pf == BigInt::from(det.abs()), "case {i}: pf^2 != |det|");
        let factors = oracle::invariant_factors(&mi);
        let mut doubled: Vec<i128> =
            nf.divisors.iter().flat_map(|d| { let d = i128::try_from(d).unwrap(); [d, d] }).collect();
        doubled.resize(n, 0);
        ensure!(doubled == factors, "case {i}: divisors {:?} vs invariant factors {:?}", nf.divisors, factors);
        ensure!(nf.divisors.iter().all(|d| d.is_positive()), "case {i}: nonpositive divisor");
    }
    Ok("200 random alternating matrices".into())
}
