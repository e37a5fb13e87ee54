//! Sparse multivariate polynomials with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::var::{Monomial, Var, NVARS};

/// Terms are kept sorted by descending monomial with no zero coefficients,
/// so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn from_i64(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v, 1), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Poly {
        let mut v: Vec<(Monomial, BigInt)> = terms.into_iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.uses(v)).collect()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.meet(m)),
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(x, y)| (x.mul(m), y * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; panics if any division is inexact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    (*m, q)
                })
                .collect(),
        }
    }

    /// Divides every monomial by `m`; panics if `m` does not divide a term.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (m.div_into(x).expect("monomial does not divide"), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let qm = dm.div_into(m)?;
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((qm, qc));
            }
            return Some(Poly { terms: out });
        }
        for v in Var::ALL {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (dm, dc) = d.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let qm = dm.div_into(&rm)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.push((qm, qc));
        }
        Some(Poly::from_terms(quot))
    }

    /// Coefficients with respect to `v`: entry k is the coefficient of `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(Poly::from_terms)
            .collect()
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: Var) -> Poly {
        let d = self.degree_in(v);
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) == d)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone())),
        )
    }

    /// Substitutes a rational value for `v`; returns `(p, d)` with
    /// `self|v=value = p / d` and `d > 0`.
    pub fn substitute(&self, v: Var, value: &BigRational) -> (Poly, BigInt) {
        let deg = self.degree_in(v) as u32;
        let n = value.numer();
        let d = value.denom();
        let npow: Vec<BigInt> = (0..=deg).map(|k| num_traits::pow(n.clone(), k as usize)).collect();
        let dpow: Vec<BigInt> = (0..=deg).map(|k| num_traits::pow(d.clone(), k as usize)).collect();
        let p = Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(v) as usize;
            (m.with_exp(v, 0), c * &npow[e] * &dpow[deg as usize - e])
        }));
        (p, dpow[deg as usize].clone())
    }

    /// Full evaluation; `values[i]` is the value of `Var::ALL[i]`.
    pub fn evaluate(&self, values: &[BigRational; NVARS]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t *= num_traits::pow(values[v.index()].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    /// Sign-normalized: leading coefficient positive.
    pub fn with_positive_lead(self) -> Poly {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self
        }
    }

    fn fmt_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &BigInt, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else if neg {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        if m.is_one() {
            write!(f, "{abs}")
        } else if abs.is_one() {
            write!(f, "{m}")
        } else {
            write!(f, "{abs}*{m}")
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            Poly::fmt_term(f, m, c, k == 0)?;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, c);
        }
        let mut acc = std::collections::HashMap::with_capacity(big.terms.len() * 2);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }

    #[test]
    fn arithmetic_basics() {
        let a = &q() + &Poly::one();
        let b = &q() - &Poly::one();
        let p = &a * &b;
        assert_eq!(p, &q().pow(2) - &Poly::one());
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&Poly::var(Var::K4)), None);
        assert_eq!((&p - &p), Poly::zero());
    }

    #[test]
    fn display_orders_terms_grlex() {
        let k4 = Poly::var(Var::K4);
        let p = &(&(&k4 * &q().pow(3)) - &q().pow(2)) + &Poly::from_i64(-2);
        assert_eq!(p.to_string(), "q^3*K4 - q^2 - 2");
    }

    #[test]
    fn substitute_clears_denominators() {
        let p = &q().pow(2) + &Poly::var(Var::K1);
        let (n, d) = p.substitute(Var::Q, &BigRational::new(1.into(), 2.into()));
        assert_eq!(d, BigInt::from(4));
        assert_eq!(n, &Poly::one() + &Poly::var(Var::K1).scale(&4.into()));
    }
}
