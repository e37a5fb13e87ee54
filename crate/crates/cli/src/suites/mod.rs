//! Verification suites. Every check is an ordinary function generic over the
//! coefficient field, run once over Q(q, K1..K6, P3) in exact mode and at
//! random rational points in sampled mode.

mod appendix;
mod garnir;
mod hecke;
mod repmat;
mod young;

use std::fmt::Display;
use std::sync::OnceLock;

use qyoung_core::clifford::Multivector;
use qyoung_core::formula::Env;
use qyoung_core::hecke::{HeckeAlgebra, HeckeElement};
use qyoung_core::linalg::FieldMatrix;
use qyoung_core::repmat::RepresentationData;
use qyoung_field::{rational, BigRational, Binding, RationalFunction, Scalar, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::field::CliField;
use crate::report::{Mode, Outcome, Report};

pub const SUITES: [&str; 8] = ["hecke", "n2", "n3", "garnir", "intertwine", "repmat", "appendix", "all"];

/// Sampled mode draws every variable from this range.
pub const SAMPLE_RANGE: (i64, i64) = (2, 1_000_000);

/// Fresh points tried per sample before a singular check counts as failed.
const MAX_RESAMPLES: usize = 64;

/// Shared state of one run.
pub struct Ctx<F> {
    pub env: Env<F>,
    pub q: F,
    pub h2: HeckeAlgebra<F>,
    pub h3: HeckeAlgebra<F>,
    pub seed: u64,
    rep: OnceLock<std::result::Result<RepresentationData<F>, CliError>>,
}

impl<F: CliField> Ctx<F> {
    pub fn new(env: Env<F>, seed: u64) -> Result<Ctx<F>> {
        let q = env.q()?;
        Ok(Ctx {
            h2: HeckeAlgebra::new(2, q.clone())?,
            h3: HeckeAlgebra::new(3, q.clone())?,
            q,
            env,
            seed,
            rep: OnceLock::new(),
        })
    }

    pub fn rep(&self) -> Result<&RepresentationData<F>> {
        self.rep
            .get_or_init(|| Ok(RepresentationData::compute(&self.h3, &self.env)?))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn eval(&self, src: &str) -> Result<F> {
        Ok(self.env.eval(src)?)
    }
}

pub type CheckFn<F> = fn(&Ctx<F>) -> Result<Vec<Outcome>>;

/// A check function and the id its failure is reported under.
pub struct Check<F> {
    pub id: &'static str,
    pub run: CheckFn<F>,
}

fn checks<F: CliField>(suite: &str) -> Result<Vec<Check<F>>> {
    Ok(match suite {
        "hecke" => hecke::checks(),
        "n2" => young::n2_checks(),
        "n3" => young::n3_checks(),
        "garnir" => garnir::garnir_checks(),
        "intertwine" => garnir::intertwine_checks(),
        "repmat" => repmat::checks(),
        "appendix" => appendix::checks(),
        "all" => {
            let mut all = Vec::new();
            for s in &SUITES[..SUITES.len() - 1] {
                all.extend(checks(s)?);
            }
            all
        }
        other => return Err(CliError::UnknownSuite(other.to_string())),
    })
}

fn error_outcome(id: &str, e: &CliError) -> Outcome {
    Outcome::new(id, "check raised an error", Some(format!("error: {e}")))
}

/// Builds a thread pool of `QYOUNG_THREADS` threads, or rayon's default.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("QYOUNG_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

/// Runs `suite`. Sampled mode uses `points` random points drawn from `seed`.
pub fn run_suite(suite: &str, mode: Mode, seed: u64, points: usize) -> Result<Report> {
    checks::<RationalFunction>(suite)?;
    let pool = thread_pool();
    pool.install(|| match mode {
        Mode::Exact => {
            let ctx = Ctx::new(Env::symbolic(), seed)?;
            let outcomes = run_exact(&ctx, &checks(suite)?);
            Ok(Report::new(suite, mode, None, None, outcomes))
        }
        Mode::Sampled => {
            let outcomes = run_sampled(suite, seed, points)?;
            Ok(Report::new(suite, mode, Some(seed), Some(points), outcomes))
        }
    })
}

fn run_exact<F: CliField>(ctx: &Ctx<F>, checks: &[Check<F>]) -> Vec<Outcome> {
    let per: Vec<Vec<Outcome>> =
        checks.par_iter().map(|c| (c.run)(ctx).unwrap_or_else(|e| vec![error_outcome(c.id, &e)])).collect();
    per.into_iter().flatten().collect()
}

fn random_binding(rng: &mut ChaCha8Rng) -> Binding {
    let mut b = Binding::new();
    for v in Var::ALL {
        b = b.with_int(v, rng.gen_range(SAMPLE_RANGE.0..=SAMPLE_RANGE.1));
    }
    b
}

/// Runs every check at one point, drawing a fresh point while any check hits
/// a singularity.
fn run_point(suite: &str, seed: u64) -> Result<Vec<Outcome>> {
    let checks = checks::<BigRational>(suite)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Vec::new();
    for _ in 0..MAX_RESAMPLES {
        let ctx = Ctx::new(Env::numeric(&random_binding(&mut rng)), seed)?;
        let results: Vec<Result<Vec<Outcome>>> = checks.iter().map(|c| (c.run)(&ctx)).collect();
        if results.iter().any(|r| matches!(r, Err(e) if e.is_singular())) {
            last = results;
            continue;
        }
        return Ok(flatten(&checks, results));
    }
    Ok(flatten(&checks, last))
}

fn flatten<F>(checks: &[Check<F>], results: Vec<Result<Vec<Outcome>>>) -> Vec<Outcome> {
    checks
        .iter()
        .zip(results)
        .flat_map(|(c, r)| r.unwrap_or_else(|e| vec![error_outcome(c.id, &e)]))
        .collect()
}

fn run_sampled(suite: &str, seed: u64, points: usize) -> Result<Vec<Outcome>> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..points).map(|_| master.gen()).collect();
    let per: Vec<Vec<Outcome>> = seeds.par_iter().map(|&s| run_point(suite, s)).collect::<Result<_>>()?;
    let mut merged: Vec<Outcome> = Vec::new();
    for (k, outcomes) in per.into_iter().enumerate() {
        for o in outcomes {
            match merged.iter_mut().find(|m| m.id == o.id) {
                Some(m) => {
                    if m.passed() && !o.passed() {
                        m.status = o.status;
                        m.residual = format!("point {k}: {}", o.residual);
                    }
                }
                None => {
                    let mut o = o;
                    if !o.passed() {
                        o.residual = format!("point {k}: {}", o.residual);
                    }
                    merged.push(o);
                }
            }
        }
    }
    Ok(merged)
}

/// Residual text of `got - want`, or `None` when they agree.
pub trait Diff {
    fn diff(&self, want: &Self) -> Option<String>;
}

impl<F: Scalar> Diff for HeckeElement<F> {
    fn diff(&self, want: &Self) -> Option<String> {
        (self != want).then(|| self.sub(want).to_string())
    }
}

impl<F: Scalar> Diff for Multivector<F> {
    fn diff(&self, want: &Self) -> Option<String> {
        (self != want).then(|| self.sub(want).to_string())
    }
}

impl<F: Scalar> Diff for FieldMatrix<F> {
    fn diff(&self, want: &Self) -> Option<String> {
        let mut cells = Vec::new();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                if self.get(i, j) != want.get(i, j) {
                    cells.push(format!("({},{}): {}", i + 1, j + 1, self.get(i, j).sub(want.get(i, j))));
                }
            }
        }
        (!cells.is_empty()).then(|| cells.join("; "))
    }
}

/// A field value compared as a [`Diff`].
pub struct Value<F>(pub F);

impl<F: Scalar> Diff for Value<F> {
    fn diff(&self, want: &Self) -> Option<String> {
        (self.0 != want.0).then(|| self.0.sub(&want.0).to_string())
    }
}

pub fn same<T: Diff>(id: &str, description: &str, got: &T, want: &T) -> Outcome {
    Outcome::new(id, description, got.diff(want))
}

pub fn zero<F: Scalar>(id: &str, description: &str, x: &HeckeElement<F>) -> Outcome {
    Outcome::new(id, description, (!x.is_zero()).then(|| x.to_string()))
}

pub fn holds(id: &str, description: &str, ok: bool, otherwise: impl Display) -> Outcome {
    Outcome::new(id, description, (!ok).then(|| otherwise.to_string()))
}

pub fn count(id: &str, description: &str, got: usize, want: usize) -> Outcome {
    holds(id, description, got == want, format!("got {got}, expected {want}"))
}

/// Integers drawn for the Clifford property checks.
pub fn small_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(n: i64) -> BigRational {
    rational(n, 1)
}
