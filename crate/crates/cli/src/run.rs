//! Executes a validated session.

use std::fmt::Display;

use doubletorus_core::bundles::LineBundle;
use doubletorus_core::doubled::{
    generalized_metric, generalized_tangent, is_almost_gcs, is_isotropic, is_stable_under, j_sharp, kahler_form,
    lift_bundle, lift_gcs_complex, lift_gcs_symplectic, lift_tangent, make_doubled,
};
use doubletorus_core::exactlinalg::{rat, PolyMat, RatMat};
use doubletorus_core::homspaces::{cohomology_dims, hom_b, intersect_lifts, verify_ext_intersection, AffineSubgroup};
use doubletorus_core::tfold::{
    gen_metric_decompose, mass_squared, nilfold_doubled, polarization_well_defined, preserves_neutral, t_dual_params,
    NilfoldPolarization,
};
use doubletorus_core::torus::ComplexTorus;
use doubletorus_core::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::record::Record;
use crate::session::{parse_session, Command, Session};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Finite intersections with at most this many points are listed in full.
pub const MAX_LISTED_POINTS: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Emit `key=value` records instead of prose.
    pub records: bool,
    /// Treat negative verdicts (ill-defined polarization, failed
    /// decomposition) as failures.
    pub assert: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A legitimate negative answer.
    Negative,
    /// An identity that must hold did not.
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub human: String,
    pub record: Record,
    pub status: Status,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunReport {
    pub stdout: Vec<String>,
    pub stderr: Vec<String>,
    pub exit_code: i32,
}

pub fn run_text(text: &str, opts: RunOptions) -> RunReport {
    match parse_session(text) {
        Ok(s) => run_session(&s, opts),
        Err(e) => RunReport { stdout: Vec::new(), stderr: vec![e.to_string()], exit_code: EXIT_INPUT },
    }
}

pub fn run_session(session: &Session, opts: RunOptions) -> RunReport {
    let mut report = RunReport::default();
    for stmt in session.commands() {
        let outcome = match execute(session, &stmt.command) {
            Ok(o) => o,
            Err(e) => {
                report.stderr.push(format!("line {}: {}", stmt.line, e));
                report.exit_code = EXIT_INPUT;
                return report;
            }
        };
        report.stdout.push(if opts.records { outcome.record.to_string() } else { outcome.human });
        let failed = match outcome.status {
            Status::Ok => false,
            Status::Negative => opts.assert,
            Status::Failed => true,
        };
        if failed {
            let what = if outcome.status == Status::Negative { "negative verdict" } else { "verification failed" };
            report.stderr.push(format!("line {}: {what}", stmt.line));
            report.exit_code = EXIT_FAILED;
        }
    }
    report
}

fn bundle<'a>(session: &'a Session, name: &str) -> &'a LineBundle {
    session.bundle(name).expect("names are resolved during parsing")
}

fn torus(session: &Session) -> &ComplexTorus {
    session.torus().expect("torus presence is checked during parsing")
}

fn check(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn status_of(all_ok: bool) -> Status {
    if all_ok {
        Status::Ok
    } else {
        Status::Failed
    }
}

fn compact<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|t| t.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn execute(session: &Session, command: &Command) -> Result<Outcome> {
    match command {
        Command::Cohomology(a) => {
            let h = cohomology_dims(bundle(session, a));
            Ok(Outcome {
                human: format!("cohomology {a}: h = {h}"),
                record: Record::new("cohomology").with("bundle", a).with("h", &h),
                status: Status::Ok,
            })
        }
        Command::Hom(a, b) => {
            let h = hom_b(bundle(session, a), bundle(session, b))?;
            Ok(Outcome {
                human: format!("hom {a} {b}: ext = {h}"),
                record: Record::new("hom").with("source", a).with("target", b).with("ext", &h),
                status: Status::Ok,
            })
        }
        Command::Lift(a) => lift(session, a),
        Command::Intersect(a, b) => {
            let meet = intersect_lifts(&lift_bundle(bundle(session, a))?, &lift_bundle(bundle(session, b))?)?;
            let mut record = Record::new("intersect").with("first", a).with("second", b);
            describe_intersection(&meet, &mut record);
            Ok(Outcome { human: format!("intersect: {}", intersection_text(&meet, true)), record, status: Status::Ok })
        }
        Command::ExtCheck(a, b) => ext_check(session, a, b),
        Command::GcsCheck => gcs_check(torus(session)),
        Command::TDuality { n, w, r, alpha } => tduality(n, w, r, alpha),
        Command::Nilfold { m, polarization } => nilfold(m, *polarization),
        Command::Decompose(h) => decompose(h),
    }
}

fn lift(session: &Session, a: &str) -> Result<Outcome> {
    let l = bundle(session, a);
    let x = l.torus();
    let d = make_doubled(x);
    let lift = lift_bundle(l)?;
    let tangent = lift_tangent(&lift);
    let jj = lift_gcs_complex(x);
    let gen_tangent = tangent.same_span(&generalized_tangent(l, &d)?);
    let isotropic = is_isotropic(&tangent, &d.neutral().to_rat()) && 2 * tangent.dim() == d.real_dim();
    let holomorphic = is_stable_under(&tangent, &jj);
    let lagrangian = is_isotropic(&tangent, &j_sharp(&jj, &d)?);
    let human = format!(
        "lift {a}: A = {}, b = {}; generalized tangent {}, maximally isotropic {}, holomorphic {}, Lagrangian {}",
        lift.linear(),
        lift.offset(),
        check(gen_tangent),
        check(isotropic),
        check(holomorphic),
        check(lagrangian)
    );
    let record = Record::new("lift")
        .with("bundle", a)
        .with("a", lift.linear())
        .with("b", lift.offset())
        .with("generalized_tangent", gen_tangent)
        .with("isotropic", isotropic)
        .with("holomorphic", holomorphic)
        .with("lagrangian", lagrangian);
    Ok(Outcome { human, record, status: status_of(gen_tangent && isotropic && holomorphic && lagrangian) })
}

fn intersection_text(meet: &AffineSubgroup, list: bool) -> String {
    let point = match meet.point() {
        None => return "empty".to_string(),
        Some(p) => p,
    };
    if meet.free_rank() > 0 {
        return format!(
            "dimension {}, {} component{}, canonical point {}",
            meet.free_rank(),
            meet.group().order(),
            if meet.group().order() == 1u32.into() { "" } else { "s" },
            point
        );
    }
    let order = meet.group().order();
    match meet.points() {
        Some(pts) if list && pts.len() <= MAX_LISTED_POINTS => {
            let listed: Vec<String> = pts.iter().map(ToString::to_string).collect();
            format!("{order} points {}", listed.join(" "))
        }
        _ => format!("{order} points, canonical point {point}"),
    }
}

fn describe_intersection(meet: &AffineSubgroup, record: &mut Record) {
    let point = match meet.point() {
        None => {
            record.push("empty", true);
            return;
        }
        Some(p) => p,
    };
    record.push("empty", false);
    record.push("free_rank", meet.free_rank());
    record.push("order", meet.group().order());
    record.push("factors", compact(meet.group().nontrivial_factors()));
    record.push("point", point);
    if let Some(pts) = meet.points().filter(|p| p.len() <= MAX_LISTED_POINTS) {
        record.push("points", compact(pts));
    }
}

fn ext_check(session: &Session, a: &str, b: &str) -> Result<Outcome> {
    let r = verify_ext_intersection(bundle(session, a), bundle(session, b))?;
    let size = match r.intersection.cardinality() {
        Some(c) if c == BigInt::from(0) => "empty".to_string(),
        Some(c) => format!("{c} points"),
        None => format!("dimension {}", r.intersection.free_rank()),
    };
    let mut human = format!("ext-check {a} {b}: hom = {}, intersection {size}", r.hom);
    if let Some(ok) = r.agreement {
        human.push_str(if ok { ", Floer/Ext agreement holds" } else { ", Floer/Ext agreement FAILED" });
    }
    if let Some(ok) = r.squared_relation {
        human.push_str(if ok { ", squared relation holds" } else { ", squared relation does not hold" });
    }
    let flag = |f: Option<bool>| f.map_or("-".to_string(), |b| b.to_string());
    let record = Record::new("ext-check")
        .with("first", a)
        .with("second", b)
        .with("hom", &r.hom)
        .with("intersection", size.replace(' ', "_"))
        .with("equal_chern", r.equal_chern)
        .with("agreement", flag(r.agreement))
        .with("squared_relation", flag(r.squared_relation));
    Ok(Outcome { human, record, status: status_of(r.agreement != Some(false)) })
}

/// Uses the `J`-compatible metric `g = (I + JᵀJ)/2`, which is the identity
/// for orthogonal `J`.
fn gcs_check(x: &ComplexTorus) -> Result<Outcome> {
    let d = make_doubled(x);
    let j = x.complex_structure();
    let n = x.real_dim();
    let g = &(&RatMat::identity(n) + &(&j.transpose() * j)) * &rat(1, 2);
    let jj = lift_gcs_complex(x);
    let jw = lift_gcs_symplectic(&kahler_form(&g, x))?;
    let gm = generalized_metric(&g, &RatMat::zeros(n, n))?;
    let complex = is_almost_gcs(&jj, &d);
    let symplectic = is_almost_gcs(&jw, &d);
    let involution = &gm * &gm == RatMat::identity(2 * n);
    let kahler = &gm * &jj == jw && &jj * &gm == jw;
    let human = format!(
        "gcs-check: J_J {}, J_omega {}, G^2 = 1 {}, Kahler relation {}",
        check(complex),
        check(symplectic),
        check(involution),
        check(kahler)
    );
    let record = Record::new("gcs-check")
        .with("complex", complex)
        .with("symplectic", symplectic)
        .with("involution", involution)
        .with("kahler", kahler);
    Ok(Outcome { human, record, status: status_of(complex && symplectic && involution && kahler) })
}

fn tduality(n: &BigInt, w: &BigInt, r: &BigRational, alpha: &BigRational) -> Result<Outcome> {
    let m2 = mass_squared(n, w, r, alpha)?;
    let (dn, dw, dr) = t_dual_params(n, w, r, alpha)?;
    let dm2 = mass_squared(&dn, &dw, &dr, alpha)?;
    let invariant = m2 == dm2;
    let human = format!(
        "tduality n={n} w={w} R={r} a={alpha}: M^2 = {m2}; dual n={dn} w={dw} R={dr}: M^2 = {dm2}{}",
        if invariant { "" } else { " (MISMATCH)" }
    );
    let record = Record::new("tduality")
        .with("n", n)
        .with("w", w)
        .with("R", r)
        .with("a", alpha)
        .with("m2", &m2)
        .with("dual_n", &dn)
        .with("dual_w", &dw)
        .with("dual_R", &dr)
        .with("dual_m2", &dm2)
        .with("invariant", invariant);
    Ok(Outcome { human, record, status: status_of(invariant) })
}

fn nilfold(m: &BigInt, p: NilfoldPolarization) -> Result<Outcome> {
    let mon = nilfold_doubled(m);
    let preserves = preserves_neutral(&mon.to_rat());
    let defined = polarization_well_defined(&p.polarization(), &mon)?;
    let mut human = format!(
        "polarization {}: {}",
        p.name(),
        if defined { "globally defined" } else { "not globally defined" }
    );
    if !preserves {
        human.push_str(" (monodromy does not preserve L)");
    }
    let record = Record::new("tfold-nilfold")
        .with("m", m)
        .with("polarization", p.name())
        .with("preserves_l", preserves)
        .with("well_defined", defined);
    let status = match (preserves, defined) {
        (false, _) => Status::Failed,
        (true, false) => Status::Negative,
        (true, true) => Status::Ok,
    };
    Ok(Outcome { human, record, status })
}

fn decompose(h: &PolyMat) -> Result<Outcome> {
    match gen_metric_decompose(h, h.rows() / 2) {
        Ok((g, b)) => Ok(Outcome {
            human: format!("decompose: g = {g}, B = {b}"),
            record: Record::new("tfold-decompose").with("g", &g).with("B", &b),
            status: Status::Ok,
        }),
        Err(e @ (Error::InconsistentBlocks | Error::NonUnitDeterminant)) => {
            let code = if e == Error::InconsistentBlocks { "inconsistent-blocks" } else { "non-unit-determinant" };
            Ok(Outcome {
                human: format!("decompose: not a generalized metric ({e})"),
                record: Record::new("tfold-decompose").with("error", code),
                status: Status::Negative,
            })
        }
        Err(e) => Err(e),
    }
}
