//! Evaluation of formula text into any scalar field.
//!
//! Formulas reference `q`, `K1`..`K6`, `P3`, the adjoined roots `kappa` and
//! `alpha`, and the named polynomials `p1`..`p25`, `t1`..`t8`.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::sync::Arc;

use qyoung_field::{BigRational, Binding, Expr, QuadExt, QuadRelation, RationalFunction, Scalar, Var};

use crate::appendix;
use crate::error::{CoreError, Result};

/// Minimal relations `c2*z^2 + c1*z + c0 = 0` of the two adjoined roots.
pub const ROOT_RELATIONS: [(&str, [&str; 3]); 2] = [
    (
        "kappa",
        [
            "1 + q",
            "-q^2*K4 + K4 + q*K2 + 1 + K2",
            "K4*K2 + K2^2 + K4 + K2 - q*K4 - q^2*K4^2 - q*K4^2 - q^2*K2*K4 + q*K2^2",
        ],
    ),
    (
        "alpha",
        [
            "1 + q",
            "-q^2*K4 + K4 + q*K2 - 1 + K2",
            "K4*K2 + K2^2 - K4 - K2 + q*K4 - q^2*K4^2 - q*K4^2 - q^2*K2*K4 + q*K2^2",
        ],
    ),
];

/// Symbol values used to evaluate formula text.
#[derive(Clone, Debug)]
pub struct Env<F> {
    values: BTreeMap<String, F>,
}

impl<F: Scalar> Default for Env<F> {
    fn default() -> Self {
        Env { values: BTreeMap::new() }
    }
}

impl<F: Scalar> Env<F> {
    pub fn new() -> Env<F> {
        Env::default()
    }

    pub fn with(mut self, name: &str, value: F) -> Env<F> {
        self.values.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: F) {
        self.values.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<&F> {
        self.values.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(|s| s.as_str())
    }

    pub fn q(&self) -> Result<F> {
        self.lookup("q")
    }

    fn lookup(&self, name: &str) -> Result<F> {
        if let Some(v) = self.values.get(name) {
            return Ok(v.clone());
        }
        if let Some(expr) = appendix::expr(name) {
            return self.eval_expr(expr);
        }
        Err(CoreError::UnknownName(name.to_string()))
    }

    pub fn eval_expr(&self, expr: &Expr) -> Result<F> {
        let missing = RefCell::new(None);
        let out = expr.eval(&|s: &str| match self.lookup(s) {
            Ok(v) => Some(v),
            Err(e) => {
                missing.borrow_mut().get_or_insert(e);
                None
            }
        });
        match (out, missing.into_inner()) {
            (Ok(v), _) => Ok(v),
            (Err(_), Some(e)) => Err(e),
            (Err(e), None) => Err(e.into()),
        }
    }

    pub fn eval(&self, src: &str) -> Result<F> {
        self.eval_expr(&Expr::parse(src)?)
    }

    pub fn eval_all(&self, srcs: &[&str]) -> Result<Vec<F>> {
        srcs.iter().map(|s| self.eval(s)).collect()
    }

    /// Adjoins the root `name` (`kappa` or `alpha`) with its relation
    /// evaluated in this environment.
    pub fn with_root(&self, name: &str) -> Result<Env<QuadExt<F>>> {
        let (_, coeffs) = ROOT_RELATIONS
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| CoreError::UnknownName(name.to_string()))?;
        let c = self.eval_all(coeffs)?;
        let rel = QuadRelation::new(name, &c[0], &c[1], &c[2])?;
        Ok(self.lift(&rel))
    }

    fn lift(&self, rel: &Arc<QuadRelation<F>>) -> Env<QuadExt<F>> {
        let mut out = Env::new();
        for (k, v) in &self.values {
            out.set(k, QuadExt::base(v.clone()));
        }
        out.set(&rel.name, QuadExt::generator(rel));
        out
    }
}

impl Env<RationalFunction> {
    /// Every ring variable bound to itself.
    pub fn symbolic() -> Env<RationalFunction> {
        let mut env = Env::new();
        for v in Var::ALL {
            env.set(v.name(), RationalFunction::var(v));
        }
        env
    }

    /// Ring variables bound by `binding` take the bound value, the rest stay
    /// symbolic.
    pub fn partial(binding: &Binding) -> Env<RationalFunction> {
        let mut env = Env::symbolic();
        for (v, x) in binding.iter() {
            env.set(v.name(), RationalFunction::from_rational(x));
        }
        env
    }
}

impl Env<BigRational> {
    /// Numeric environment; unbound ring variables are absent.
    pub fn numeric(binding: &Binding) -> Env<BigRational> {
        let mut env = Env::new();
        for (v, x) in binding.iter() {
            env.set(v.name(), x.clone());
        }
        env
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qyoung_field::{parse_rational_function, rational};

    #[test]
    fn appendix_names_resolve() {
        let env = Env::symbolic();
        let p21 = env.eval("p21").unwrap();
        assert_eq!(p21, parse_rational_function("-K4*q - K2*q + K6 + K5").unwrap());
        assert_eq!(env.eval("p21 - p21").unwrap(), RationalFunction::zero());
    }

    #[test]
    fn unknown_names_are_reported() {
        let env = Env::<RationalFunction>::symbolic();
        assert_eq!(env.eval("q + Z9"), Err(CoreError::UnknownName("Z9".into())));
    }

    #[test]
    fn kappa_reduces_by_its_relation() {
        let env = Env::symbolic().with_root("kappa").unwrap();
        let k = env.eval("kappa").unwrap();
        let sq = env.eval("kappa*kappa").unwrap();
        let expect = env
            .eval("-((-q^2*K4 + K4 + q*K2 + 1 + K2)*kappa + (K4*K2 + K2^2 + K4 + K2 - q*K4 - q^2*K4^2 - q*K4^2 - q^2*K2*K4 + q*K2^2))/(1 + q)")
            .unwrap();
        assert_eq!(sq, expect);
        assert_eq!(k.mul(&k.inv().unwrap()), QuadExt::one());
    }

    #[test]
    fn numeric_env() {
        let b = Binding::new().with_int(Var::Q, 2).with(Var::K4, rational(1, 3));
        let env = Env::numeric(&b);
        assert_eq!(env.eval("q*K4 + 1").unwrap(), rational(5, 3));
        assert_eq!(env.eval("K2"), Err(CoreError::UnknownName("K2".into())));
    }
}
