//! Exact arithmetic for the coefficient field Q(q, K1, ..., K6, P3).
//!
//! [`Poly`] is a sparse integer polynomial, [`RationalFunction`] a canonical
//! quotient of two of them, and [`QuadExt`] adjoins a root of a quadratic.
//! Everything generic in the workspace is written against [`Scalar`].

pub mod error;
pub mod expr;
pub mod gcd;
pub mod poly;
pub mod quad;
pub mod ratfunc;
pub mod scalar;
pub mod var;

pub use error::FieldError;
pub use expr::{parse_poly, parse_rational_function, Expr};
pub use gcd::gcd;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::Poly;
pub use quad::{QuadExt, QuadRelation};
pub use ratfunc::{content_factors, Binding, RationalFunction};
pub use scalar::Scalar;
pub use var::{Monomial, Var, NVARS};

pub type Rational = BigRational;

/// Shorthand for `n/d` as a [`Rational`].
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
