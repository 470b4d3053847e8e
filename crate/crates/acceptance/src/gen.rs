//! Seeded random cases.

use doubletorus_core::bundles::{make_bundle, LineBundle};
use doubletorus_core::exactlinalg::{IntMat, RatMat};
use doubletorus_core::torus::{ComplexTorus, TorusPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A torus together with its Néron–Severi basis.
#[derive(Clone, Debug)]
pub struct TorusCase {
    pub x: ComplexTorus,
    pub ns: Vec<IntMat>,
}

impl TorusCase {
    pub fn new(x: ComplexTorus) -> Self {
        let ns = x.neron_severi_basis();
        TorusCase { x, ns }
    }
}

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    /// A rational in `[0, 1)` with denominator at most `max_den`.
    pub fn unit_rational(&mut self, max_den: i64) -> BigRational {
        let q = self.int(1, max_den);
        BigRational::new(self.int(0, q - 1).into(), q.into())
    }

    pub fn positive_rational(&mut self, max: i64) -> BigRational {
        BigRational::new(self.int(1, max).into(), self.int(1, max).into())
    }

    pub fn vector(&mut self, n: usize, max_den: i64) -> Vec<BigRational> {
        (0..n).map(|_| self.unit_rational(max_den)).collect()
    }

    pub fn point(&mut self, n: usize, max_den: i64) -> TorusPoint {
        TorusPoint::new(self.vector(n, max_den))
    }

    /// A unimodular matrix built from a few elementary operations.
    pub fn unimodular(&mut self, n: usize) -> IntMat {
        let mut p = IntMat::identity(n);
        for _ in 0..n {
            let (i, j) = (self.int(0, n as i64 - 1) as usize, self.int(0, n as i64 - 1) as usize);
            if i != j {
                let k = BigInt::from(self.int(-1, 1));
                for c in 0..n {
                    let v = &p[(j, c)] * &k;
                    p[(i, c)] += v;
                }
            }
        }
        p
    }

    /// The square torus of dimension `g`, optionally with its lattice basis
    /// changed by a unimodular matrix (`J ↦ P⁻¹JP`).
    pub fn torus(&mut self, g: usize) -> TorusCase {
        let x = ComplexTorus::standard(g);
        if self.coin() {
            return TorusCase::new(x);
        }
        let p = self.unimodular(2 * g).to_rat();
        let j: RatMat = &(&p.inverse().expect("unimodular") * x.complex_structure()) * &p;
        TorusCase::new(ComplexTorus::new(g, j).expect("conjugate complex structure"))
    }

    /// `Σ cₖ·Bₖ` over the Néron–Severi basis with `cₖ ∈ [−k, k]`.
    pub fn ns_form(&mut self, case: &TorusCase, k: i64) -> IntMat {
        let n = case.x.real_dim();
        case.ns.iter().fold(IntMat::zeros(n, n), |acc, b| &acc + &(b * &BigInt::from(self.int(-k, k))))
    }

    pub fn bundle_with_form(&mut self, case: &TorusCase, e: IntMat, max_den: i64) -> LineBundle {
        let c = self.vector(case.x.real_dim(), max_den);
        make_bundle(&case.x, e, c).expect("Néron–Severi forms are of type (1,1)")
    }

    pub fn bundle(&mut self, case: &TorusCase, k: i64, max_den: i64) -> LineBundle {
        let e = self.ns_form(case, k);
        self.bundle_with_form(case, e, max_den)
    }

    /// A flat (degree-zero) bundle.
    pub fn flat(&mut self, case: &TorusCase, max_den: i64) -> LineBundle {
        let n = case.x.real_dim();
        self.bundle_with_form(case, IntMat::zeros(n, n), max_den)
    }
}

pub fn to_i64(m: &IntMat) -> Vec<Vec<i64>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(|x| i64::try_from(x).expect("small entries")).collect()).collect()
}

pub fn max_abs(m: &IntMat) -> BigInt {
    m.entries().iter().map(|x| if x < &BigInt::zero() { -x } else { x.clone() }).max().unwrap_or_else(BigInt::zero)
}
