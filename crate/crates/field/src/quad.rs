//! Simple quadratic extensions F(z) with z a root of c2*z^2 + c1*z + c0.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::FieldError;
use crate::scalar::Scalar;

/// Normalized as `z^2 = p*z + r`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadRelation<F> {
    pub name: String,
    pub p: F,
    pub r: F,
}

impl<F: Scalar> QuadRelation<F> {
    /// Relation `c2*z^2 + c1*z + c0 = 0`; `c2` must be nonzero.
    pub fn new(name: &str, c2: &F, c1: &F, c0: &F) -> Result<Arc<QuadRelation<F>>, FieldError> {
        let inv = c2.inv()?;
        Ok(Arc::new(QuadRelation {
            name: name.to_string(),
            p: c1.mul(&inv).neg(),
            r: c0.mul(&inv).neg(),
        }))
    }
}

/// `a + b*z`. Base-field constants carry no relation until they meet an
/// element that does.
#[derive(Clone, Debug)]
pub struct QuadExt<F> {
    pub a: F,
    pub b: F,
    rel: Option<Arc<QuadRelation<F>>>,
}

impl<F: Scalar> QuadExt<F> {
    pub fn base(a: F) -> QuadExt<F> {
        QuadExt { a, b: F::zero(), rel: None }
    }

    pub fn generator(rel: &Arc<QuadRelation<F>>) -> QuadExt<F> {
        QuadExt { a: F::zero(), b: F::one(), rel: Some(rel.clone()) }
    }

    pub fn new(a: F, b: F, rel: &Arc<QuadRelation<F>>) -> QuadExt<F> {
        QuadExt { a, b, rel: Some(rel.clone()) }
    }

    pub fn relation(&self) -> Option<&Arc<QuadRelation<F>>> {
        self.rel.as_ref()
    }

    /// The value in the base field, if the z-component vanishes.
    pub fn as_base(&self) -> Option<&F> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    fn joint(&self, other: &QuadExt<F>) -> Option<Arc<QuadRelation<F>>> {
        match (&self.rel, &other.rel) {
            (Some(x), Some(y)) => {
                debug_assert!(Arc::ptr_eq(x, y) || **x == **y, "mixing distinct extensions");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    /// Norm `(a + b z)(a + b z')` with `z'` the conjugate root.
    pub fn norm(&self) -> F {
        match &self.rel {
            None => self.a.mul(&self.a),
            Some(rel) => {
                let ab = self.a.mul(&self.b);
                self.a.mul(&self.a).add(&ab.mul(&rel.p)).sub(&self.b.mul(&self.b).mul(&rel.r))
            }
        }
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> Result<G, FieldError>) -> Result<QuadExt<G>, FieldError> {
        let rel = match &self.rel {
            None => None,
            Some(r) => Some(Arc::new(QuadRelation { name: r.name.clone(), p: f(&r.p)?, r: f(&r.r)? })),
        };
        Ok(QuadExt { a: f(&self.a)?, b: f(&self.b)?, rel })
    }
}

impl<F: Scalar> PartialEq for QuadExt<F> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl<F: Scalar> fmt::Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.rel.as_ref().map(|r| r.name.as_str()).unwrap_or("z");
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let bz = if self.b.is_one() {
            name.to_string()
        } else if self.b.is_atomic() {
            format!("{}*{name}", self.b)
        } else {
            format!("({})*{name}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{bz}")
        } else {
            write!(f, "{} + {bz}", self.a)
        }
    }
}

impl<F: Scalar> Scalar for QuadExt<F> {
    fn zero() -> Self {
        QuadExt::base(F::zero())
    }
    fn one() -> Self {
        QuadExt::base(F::one())
    }
    fn from_rational(r: &BigRational) -> Self {
        QuadExt::base(F::from_rational(r))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        QuadExt { a: self.a.add(&rhs.a), b: self.b.add(&rhs.b), rel: self.joint(rhs) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        QuadExt { a: self.a.sub(&rhs.a), b: self.b.sub(&rhs.b), rel: self.joint(rhs) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let rel = self.joint(rhs);
        let ac = self.a.mul(&rhs.a);
        let cross = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        let bd = self.b.mul(&rhs.b);
        match &rel {
            Some(r) if !bd.is_zero() => QuadExt {
                a: ac.add(&bd.mul(&r.r)),
                b: cross.add(&bd.mul(&r.p)),
                rel,
            },
            _ => QuadExt { a: ac, b: cross, rel },
        }
    }
    fn neg(&self) -> Self {
        QuadExt { a: self.a.neg(), b: self.b.neg(), rel: self.rel.clone() }
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if self.b.is_zero() {
            return Ok(QuadExt { a: self.a.inv()?, b: F::zero(), rel: self.rel.clone() });
        }
        let rel = self.rel.as_ref().expect("z-component without relation");
        let n = self.norm();
        if n.is_zero() {
            return Err(FieldError::NotInvertible);
        }
        let ninv = n.inv()?;
        Ok(QuadExt {
            a: self.a.add(&self.b.mul(&rel.p)).mul(&ninv),
            b: self.b.neg().mul(&ninv),
            rel: self.rel.clone(),
        })
    }
    fn is_atomic(&self) -> bool {
        self.b.is_zero() && self.a.is_atomic()
    }
    fn size_hint(&self) -> usize {
        self.a.size_hint() + self.b.size_hint()
    }
}
