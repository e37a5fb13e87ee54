//! Evaluation of [`Expr`] to multivectors in the algebra on `build_b(n, q)`.

use qyoung_core::clifford::{CliffordAlgebra, Multivector};
use qyoung_core::formula::Env;
use qyoung_core::garnir::{self, GARNIR_NAMES};
use qyoung_core::hecke::{HeckeAlgebra, HeckeElement, WORDS3};
use qyoung_core::young::{self, YOUNG_NAMES};
use qyoung_core::CoreError;
use qyoung_field::{BigRational, QuadExt, RationalFunction};

use crate::error::{CliError, Result};
use crate::expr::{Expr, Func};
use crate::field::CliField;

/// Scalar symbols resolved through the formula environment.
fn is_scalar_symbol(name: &str) -> bool {
    const FIXED: [&str; 10] = ["q", "K1", "K2", "K3", "K4", "K5", "K6", "P3", "kappa", "alpha"];
    FIXED.contains(&name) || qyoung_core::appendix::lookup(name).is_some()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value<F> {
    Scalar(F),
    Mv(Multivector<F>),
}

pub struct Evaluator<F> {
    env: Env<F>,
    cl: CliffordAlgebra<F>,
    h3: Option<HeckeAlgebra<F>>,
}

impl<F: CliField> Evaluator<F> {
    /// `n` generators pairs; Hecke names need `n = 4`.
    pub fn new(env: Env<F>, n: usize) -> Result<Evaluator<F>> {
        if !(1..=8).contains(&n) {
            return Err(CliError::Unsupported(format!("n must lie in 1..=8, got {n}")));
        }
        let q = env.q()?;
        let cl = CliffordAlgebra::hecke_form(n, &q);
        let h3 = if n == 4 { Some(HeckeAlgebra::new(3, q)?) } else { None };
        Ok(Evaluator { env, cl, h3 })
    }

    pub fn algebra(&self) -> &CliffordAlgebra<F> {
        &self.cl
    }

    pub fn hecke(&self) -> Result<&HeckeAlgebra<F>> {
        self.h3.as_ref().ok_or_else(|| CliError::Unsupported("Hecke elements need n = 4".into()))
    }

    pub fn env(&self) -> &Env<F> {
        &self.env
    }

    fn dim(&self) -> usize {
        self.cl.dim()
    }

    fn to_mv(&self, v: Value<F>) -> Multivector<F> {
        match v {
            Value::Scalar(c) => Multivector::scalar(self.dim(), c),
            Value::Mv(m) => m,
        }
    }

    /// The value as a multivector.
    pub fn multivector(&self, e: &Expr) -> Result<Multivector<F>> {
        let v = self.eval(e)?;
        Ok(self.to_mv(v))
    }

    /// The value as an element of H(3, q).
    pub fn hecke_element(&self, e: &Expr) -> Result<HeckeElement<F>> {
        let m = self.multivector(e)?;
        Ok(self.hecke()?.to_hecke_coords(&m)?)
    }

    fn name(&self, name: &str) -> Result<Value<F>> {
        if is_scalar_symbol(name) {
            return Ok(Value::Scalar(self.env.eval(name)?));
        }
        if name == "Id" {
            return Ok(Value::Scalar(F::one()));
        }
        if let Some(i) = name.strip_prefix('e').and_then(|d| d.parse::<usize>().ok()) {
            return match self.cl.e(i) {
                Ok(m) => Ok(Value::Mv(m)),
                Err(_) => Err(CliError::UnknownName(name.to_string())),
            };
        }
        let hecke = if let Some(k) = WORDS3.iter().position(|w| *w == name) {
            self.hecke()?.basis(k)
        } else if YOUNG_NAMES.contains(&name) || ["Y2", "Y11", "R12", "C12"].contains(&name) {
            young::named(self.hecke()?, &self.env, name)?
        } else if GARNIR_NAMES.contains(&name) {
            garnir::named(self.hecke()?, &self.env, name)?
        } else {
            return Err(CliError::UnknownName(name.to_string()));
        };
        Ok(Value::Mv(self.hecke()?.to_multivector(&hecke)))
    }

    pub fn eval(&self, e: &Expr) -> Result<Value<F>> {
        use Value::{Mv, Scalar as S};
        Ok(match e {
            Expr::Num(n) => S(F::from_rational(&BigRational::from_integer(n.clone()))),
            Expr::Name(n) => self.name(n)?,
            Expr::Neg(x) => match self.eval(x)? {
                S(c) => S(c.neg()),
                Mv(m) => Mv(m.neg()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let sub = matches!(e, Expr::Sub(..));
                match (self.eval(a)?, self.eval(b)?) {
                    (S(x), S(y)) => S(if sub { x.sub(&y) } else { x.add(&y) }),
                    (x, y) => {
                        let (x, y) = (self.to_mv(x), self.to_mv(y));
                        Mv(if sub { x.sub(&y) } else { x.add(&y) })
                    }
                }
            }
            Expr::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (S(x), S(y)) => S(x.mul(&y)),
                (S(c), Mv(m)) | (Mv(m), S(c)) => Mv(m.scale(&c)),
                (Mv(x), Mv(y)) => Mv(self.cl.cmul(&x, &y)?),
            },
            Expr::Wedge(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (S(x), S(y)) => S(x.mul(&y)),
                (S(c), Mv(m)) | (Mv(m), S(c)) => Mv(m.scale(&c)),
                (Mv(x), Mv(y)) => Mv(x.wedge(&y)?),
            },
            Expr::Div(a, b) => {
                let d = match self.eval(b)? {
                    S(d) => d,
                    Mv(m) if m.is_zero() => F::zero(),
                    Mv(m) => match m.terms().next() {
                        Some((0, c)) if m.len() == 1 => c.clone(),
                        _ => return Err(CliError::Unsupported("division by a non-scalar".into())),
                    },
                };
                let inv = d.inv().map_err(CoreError::from)?;
                match self.eval(a)? {
                    S(x) => S(x.mul(&inv)),
                    Mv(m) => Mv(m.scale(&inv)),
                }
            }
            Expr::Pow(a, k) => match self.eval(a)? {
                S(x) => S(x.pow(*k)),
                Mv(m) => {
                    let mut acc = Multivector::one(self.dim());
                    for _ in 0..*k {
                        acc = self.cl.cmul(&acc, &m)?;
                    }
                    Mv(acc)
                }
            },
            Expr::Call(func, x) => {
                let v = self.eval(x)?;
                match (func, v) {
                    (Func::Rev, S(c)) | (Func::AlphaQ, S(c)) => S(c),
                    (Func::Rev, Mv(m)) => Mv(self.cl.reverse(&m)?),
                    (Func::AlphaQ, Mv(m)) => {
                        let h = self.hecke()?;
                        let a = h.alpha_q(&h.to_hecke_coords(&m)?)?;
                        Mv(h.to_multivector(&a))
                    }
                    (Func::Lim1, S(c)) => S(c.at_q1()?),
                    (Func::Lim1, Mv(m)) => Mv(m.try_map(|c| c.at_q1())?),
                }
            }
        })
    }
}

/// Which root an expression needs adjoined, if any.
pub fn required_root(e: &Expr) -> Result<Option<&'static str>> {
    let names = e.names();
    let kappa = names.iter().any(|n| ["kappa", "r5", "f4"].contains(n));
    let alpha = names.iter().any(|n| ["alpha", "r6"].contains(n));
    match (kappa, alpha) {
        (true, true) => Err(CliError::Unsupported("kappa and alpha cannot be used together".into())),
        (true, false) => Ok(Some("kappa")),
        (false, true) => Ok(Some("alpha")),
        (false, false) => Ok(None),
    }
}

/// Canonical text of the value of `src` in the algebra with `n` generator
/// pairs, with every symbol left free.
pub fn expand(src: &str, n: usize) -> Result<String> {
    let e = Expr::parse(src)?;
    let env = Env::symbolic();
    match required_root(&e)? {
        None => Ok(Evaluator::<RationalFunction>::new(env, n)?.multivector(&e)?.to_string()),
        Some(root) => {
            let ext: Env<QuadExt<RationalFunction>> = env.with_root(root)?;
            Ok(Evaluator::new(ext, n)?.multivector(&e)?.to_string())
        }
    }
}
