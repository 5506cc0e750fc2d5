use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use stcalc_core::exactring::{BigRat, Ring};
use stcalc_core::pseries::Series;
use stcalc_core::{Error, Result};

use crate::env::{specialize, Env, Value};
use crate::registry::{select, Expect, RingReq, TheoremCase};
use crate::report::{CaseReport, Status, VerifyReport, Witness};

/// Attempts per random point before a case is declared degenerate.
const MAX_RESAMPLES: usize = 32;

/// A deliberate corruption of one coefficient of a case's left side.
#[derive(Clone, Debug)]
pub struct Injection {
    pub case_id: String,
    pub index: usize,
    pub delta: BigRat,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub order: usize,
    pub seed: u64,
    pub random_points: usize,
    pub filter: Option<String>,
    pub injection: Option<Injection>,
    /// Worker threads; `None` reads `ST_CALC_THREADS`, then falls back to rayon's default.
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(order: usize, seed: u64) -> Self {
        RunConfig { order, seed, random_points: 5, filter: None, injection: None, threads: None }
    }
}

/// First index where two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Coefficientwise comparison; `None` means equal.
pub fn compare_series<R: Ring>(a: &Series<R>, b: &Series<R>) -> Result<Option<Divergence>> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    if a.ring_tag() != b.ring_tag() {
        return Err(Error::Unsupported("ring mismatch".into()));
    }
    Ok(first_diff(a.coeffs(), b.coeffs()))
}

fn first_diff<R: Ring>(a: &[R], b: &[R]) -> Option<Divergence> {
    a.iter().zip(b).enumerate().find_map(|(i, (x, y))| {
        (!x.sub(y).is_zero()).then(|| Divergence { index: i, lhs: format!("{x}"), rhs: format!("{y}") })
    })
}

/// Compares two value lists of the same ring and length.
pub fn compare_values(a: &Value, b: &Value) -> Result<Option<Divergence>> {
    if a.len() != b.len() {
        return Err(Error::OrderMismatch(a.len(), b.len()));
    }
    match (a, b) {
        (Value::Rat(x), Value::Rat(y)) => Ok(first_diff(x, y)),
        (Value::Quad(x), Value::Quad(y)) => Ok(first_diff(x, y)),
        _ => Err(Error::Unsupported(format!("ring mismatch: {} vs {}", a.ring_name(), b.ring_name()))),
    }
}

/// Runs every registered case whose id contains `filter`.
pub fn run_all(order: usize, seed: u64, filter: Option<&str>) -> Result<VerifyReport> {
    let mut cfg = RunConfig::new(order, seed);
    cfg.filter = filter.map(str::to_string);
    run_with(&cfg)
}

pub fn run_with(cfg: &RunConfig) -> Result<VerifyReport> {
    if cfg.order < 4 {
        return Err(Error::InvalidArgument(format!("order must be at least 4, got {}", cfg.order)));
    }
    let cases = select(cfg.filter.as_deref());
    let threads = cfg.threads.or_else(|| std::env::var("ST_CALC_THREADS").ok().and_then(|v| v.parse().ok()));
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let start = Instant::now();
    let reports = pool.install(|| cases.par_iter().map(|c| run_case(c, cfg)).collect::<Vec<_>>());
    Ok(VerifyReport { order: cfg.order, seed: cfg.seed, cases: reports, millis: start.elapsed().as_millis() as u64 })
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn is_degenerate(e: &Error) -> bool {
    matches!(
        e,
        Error::Pole(_)
            | Error::VanishingDenominator(_)
            | Error::DivisionByZero
            | Error::Degenerate
            | Error::NotAUnit(_)
            | Error::NonUnitConstant
    )
}

fn point_label(env: &Env) -> String {
    if env.is_symbolic() {
        return "symbolic".into();
    }
    env.point().iter().map(|(v, r)| format!("{v}={r}")).collect::<Vec<_>>().join(", ")
}

/// Builds both sides at `env`, applies the injection, and compares.
fn evaluate(case: &TheoremCase, env: &Env, cfg: &RunConfig) -> Result<Option<Witness>> {
    let (mut l, mut r) = (case.build)(env)?;
    if case.ring == RingReq::QuadraticExtension && !env.is_symbolic() {
        let p = env.point();
        l = specialize(&l, &p)?;
        r = specialize(&r, &p)?;
    }
    if let Some(inj) = cfg.injection.as_ref().filter(|i| i.case_id == case.id) {
        if inj.index >= l.len() {
            return Err(Error::InvalidArgument(format!("injection index {} past {} values", inj.index, l.len())));
        }
        l.perturb(inj.index, &inj.delta);
    }
    Ok(compare_values(&l, &r)?.map(|d| Witness {
        index: Some(d.index),
        lhs: d.lhs,
        rhs: d.rhs,
        point: point_label(env),
        message: None,
    }))
}

fn error_witness(env_label: &str, e: &Error) -> Witness {
    Witness {
        index: None,
        lhs: String::new(),
        rhs: String::new(),
        point: env_label.to_string(),
        message: Some(e.to_string()),
    }
}

fn run_case(case: &TheoremCase, cfg: &RunConfig) -> CaseReport {
    let start = Instant::now();
    let mut symbolic = false;
    let mut points = 0;
    let mut found: Option<Witness> = None;
    let mut error: Option<Witness> = None;

    if cfg.order <= case.symbolic_budget {
        symbolic = true;
        let env = Env::symbolic(cfg.order);
        match evaluate(case, &env, cfg) {
            Ok(w) => found = w,
            Err(e) => error = Some(error_witness("symbolic", &e)),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ fnv1a(case.id));
    let mut degenerate = 0;
    while found.is_none() && error.is_none() && points < cfg.random_points {
        let env = Env::random(cfg.order, &mut rng);
        match evaluate(case, &env, cfg) {
            Ok(w) => {
                points += 1;
                found = w;
            }
            Err(e) if is_degenerate(&e) && degenerate < MAX_RESAMPLES => degenerate += 1,
            Err(e) => error = Some(error_witness(&point_label(&env), &e)),
        }
    }

    let status = match (error, found, case.expect) {
        (Some(w), _, _) => Status::Fail { witness: w },
        (None, Some(w), Expect::Holds) => Status::Fail { witness: w },
        (None, Some(w), Expect::PrintedTypo) => Status::ExpectedFailure { witness: w },
        (None, None, Expect::Holds) if !symbolic && points == 0 => {
            Status::Skipped { reason: "no evaluation point was available".into() }
        }
        (None, None, Expect::Holds) => Status::Pass,
        (None, None, Expect::PrintedTypo) => Status::Fail {
            witness: Witness {
                index: None,
                lhs: String::new(),
                rhs: String::new(),
                point: String::new(),
                message: Some("the printed form was expected to fail but agreed everywhere".into()),
            },
        },
    };
    CaseReport {
        id: case.id.to_string(),
        reference: case.reference.to_string(),
        ring: match case.ring {
            RingReq::RationalFunction => "rational_function",
            RingReq::QuadraticExtension => "quadratic_extension",
        }
        .into(),
        expect: match case.expect {
            Expect::Holds => "holds",
            Expect::PrintedTypo => "printed_typo",
        }
        .into(),
        note: case.note.to_string(),
        status,
        symbolic,
        points,
        millis: start.elapsed().as_millis() as u64,
    }
}
