//! Canonical rational functions in q, K1..K6, P3 over Q.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::FieldError;
use crate::gcd::{content_in, gcd};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::var::{Var, NVARS};

/// `num / den` with `gcd(num, den) = 1` and the leading coefficient of `den`
/// positive; zero is `0 / 1`. Equal functions have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

/// Partial assignment of rational values to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Binding {
    values: [Option<BigRational>; NVARS],
}

impl Binding {
    pub fn new() -> Binding {
        Binding::default()
    }

    pub fn with(mut self, v: Var, value: BigRational) -> Binding {
        self.values[v.index()] = Some(value);
        self
    }

    pub fn with_int(self, v: Var, value: i64) -> Binding {
        self.with(v, BigRational::from_integer(value.into()))
    }

    pub fn set(&mut self, v: Var, value: BigRational) {
        self.values[v.index()] = Some(value);
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.values[v.index()].as_ref()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &BigRational)> {
        Var::ALL
            .into_iter()
            .filter_map(|v| self.values[v.index()].as_ref().map(|x| (v, x)))
    }
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<RationalFunction, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn from_int(n: i64) -> RationalFunction {
        Self::from_poly(Poly::from_i64(n))
    }

    pub fn var(v: Var) -> RationalFunction {
        Self::from_poly(Poly::var(v))
    }

    pub fn q() -> RationalFunction {
        Self::var(Var::Q)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    /// The value as a rational number, if the function is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    fn normalized(num: Poly, den: Poly) -> RationalFunction {
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one() };
        }
        if den.is_one() {
            return RationalFunction { num, den };
        }
        let g = gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading_coeff().is_negative() {
            n = -n;
            d = -d;
        }
        RationalFunction { num: n, den: d }
    }

    fn checked_inv(&self) -> Result<RationalFunction, FieldError> {
        if self.num.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.leading_coeff().is_negative() {
            n = -n;
            d = -d;
        }
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction, FieldError> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Substitutes the bound variables. Fails with [`FieldError::Pole`] when
    /// the denominator vanishes; the error names the vanishing factor.
    pub fn substitute(&self, binding: &Binding) -> Result<RationalFunction, FieldError> {
        let (n, nd) = substitute_poly(&self.num, binding);
        let (d, dd) = substitute_poly(&self.den, binding);
        if d.is_zero() {
            return Err(FieldError::Pole { factor: vanishing_factor(&self.den, binding) });
        }
        Ok(Self::normalized(&n * &Poly::constant(dd), &d * &Poly::constant(nd)))
    }

    /// Full evaluation to a rational number.
    pub fn evaluate(&self, binding: &Binding) -> Result<BigRational, FieldError> {
        let r = self.substitute(binding)?;
        match r.as_rational() {
            Some(x) => Ok(x),
            None => {
                let v = Var::ALL.into_iter().find(|&v| r.uses(v)).expect("non-constant");
                Err(FieldError::Unbound(v.name().to_string()))
            }
        }
    }

    pub fn pow(&self, e: u32) -> RationalFunction {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

fn substitute_poly(p: &Poly, binding: &Binding) -> (Poly, BigInt) {
    let mut cur = p.clone();
    let mut den = BigInt::one();
    for (v, x) in binding.iter() {
        if cur.uses(v) {
            let (n, d) = cur.substitute(v, x);
            cur = n;
            den *= d;
        }
    }
    (cur, den)
}

/// Splits `p` into factors by repeatedly taking integer, monomial and
/// per-variable content. The factors are not necessarily irreducible.
pub fn content_factors(p: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    split_factors(p, &mut out);
    out
}

fn split_factors(p: &Poly, out: &mut Vec<Poly>) {
    if p.is_constant() {
        return;
    }
    let c = p.content();
    let mut p = p.div_scalar_exact(&c).with_positive_lead();
    let m = p.monomial_content();
    if !m.is_one() {
        for v in Var::ALL {
            for _ in 0..m.exp(v) {
                out.push(Poly::var(v));
            }
        }
        p = p.div_monomial(&m);
        if p.is_constant() {
            return;
        }
    }
    for v in p.vars() {
        let cont = content_in(&p, v).with_positive_lead();
        if !cont.is_constant() {
            let rest = p.div_exact(&cont).expect("content divides");
            split_factors(&cont, out);
            split_factors(&rest, out);
            return;
        }
    }
    out.push(p);
}

fn vanishing_factor(den: &Poly, binding: &Binding) -> String {
    for f in content_factors(den) {
        if substitute_poly(&f, binding).0.is_zero() {
            return f.to_string();
        }
    }
    den.to_string()
}

fn poly_is_atomic(p: &Poly) -> bool {
    match p.terms() {
        [] => true,
        [(m, c)] => {
            if m.is_one() {
                !c.is_negative()
            } else {
                c.is_one() && Var::ALL.into_iter().filter(|&v| m.exp(v) > 0).count() == 1
            }
        }
        _ => false,
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if poly_is_atomic(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl FromStr for RationalFunction {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, FieldError> {
        crate::expr::parse_rational_function(s)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        add_sub(self, rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        add_sub(self, rhs, true)
    }
}

fn add_sub(a: &RationalFunction, b: &RationalFunction, negate: bool) -> RationalFunction {
    let combine = |x: &Poly, y: &Poly| if negate { x - y } else { x + y };
    if a.num.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    if b.num.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let n = combine(&a.num, &b.num);
        return RationalFunction::normalized(n, a.den.clone());
    }
    let g = gcd(&a.den, &b.den);
    if g.is_one() {
        let n = combine(&(&a.num * &b.den), &(&b.num * &a.den));
        return RationalFunction::normalized_coprime(n, &a.den * &b.den);
    }
    let ad = a.den.div_exact(&g).expect("gcd divides");
    let bd = b.den.div_exact(&g).expect("gcd divides");
    let t = combine(&(&a.num * &bd), &(&b.num * &ad));
    if t.is_zero() {
        return RationalFunction::zero();
    }
    let g2 = gcd(&t, &g);
    let num = t.div_exact(&g2).expect("gcd divides");
    let den = &ad * &b.den.div_exact(&g2).expect("gcd divides");
    RationalFunction::normalized_coprime(num, den)
}

impl RationalFunction {
    /// Sign normalization only; the caller guarantees coprimality.
    fn normalized_coprime(num: Poly, den: Poly) -> RationalFunction {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        if den.leading_coeff().is_negative() {
            RationalFunction { num: -num, den: -den }
        } else {
            RationalFunction { num, den }
        }
    }

    pub fn zero() -> RationalFunction {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RationalFunction {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RationalFunction::normalized_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; use [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                <&RationalFunction as $tr>::$m(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_rational(r: &BigRational) -> Self {
        RationalFunction::normalized(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, FieldError> {
        self.checked_inv()
    }
    fn is_atomic(&self) -> bool {
        self.den.is_one() && poly_is_atomic(&self.num)
    }
    fn size_hint(&self) -> usize {
        self.num.len() + self.den.len()
    }
    fn pow(&self, e: u32) -> Self {
        RationalFunction::pow(self, e)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}
