//! Parser and evaluator for scalar expressions such as `(q^2 - 1)/(K4*q + 1)`.
//!
//! Grammar: sums of products of signed powers of atoms; atoms are integer
//! literals, identifiers and parenthesized expressions. Exponents are
//! non-negative integer literals.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::FieldError;
use crate::poly::Poly;
use crate::ratfunc::RationalFunction;
use crate::scalar::Scalar;
use crate::var::Var;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, FieldError> {
        let mut p = Parser { src: src.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Evaluates with symbols resolved by `lookup`.
    pub fn eval<F: Scalar>(&self, lookup: &dyn Fn(&str) -> Option<F>) -> Result<F, FieldError> {
        Ok(match self {
            Expr::Num(n) => F::from_rational(&BigRational::from_integer(n.clone())),
            Expr::Sym(s) => lookup(s).ok_or_else(|| FieldError::UnknownSymbol(s.clone()))?,
            Expr::Neg(a) => a.eval(lookup)?.neg(),
            Expr::Add(a, b) => a.eval(lookup)?.add(&b.eval(lookup)?),
            Expr::Sub(a, b) => a.eval(lookup)?.sub(&b.eval(lookup)?),
            Expr::Mul(a, b) => a.eval(lookup)?.mul(&b.eval(lookup)?),
            Expr::Div(a, b) => a.eval(lookup)?.div(&b.eval(lookup)?)?,
            Expr::Pow(a, e) => a.eval(lookup)?.pow(*e),
        })
    }

    /// Names of all symbols, in first-occurrence order.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Sym(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_symbols(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }
}

/// Resolves the ring variables `q`, `K1`..`K6`, `P3`.
pub fn ring_lookup(name: &str) -> Option<RationalFunction> {
    Var::from_name(name).map(RationalFunction::var)
}

pub fn parse_rational_function(src: &str) -> Result<RationalFunction, FieldError> {
    Expr::parse(src)?.eval(&ring_lookup)
}

pub fn parse_poly(src: &str) -> Result<Poly, FieldError> {
    let r = parse_rational_function(src)?;
    if !r.denom().is_one() {
        return Err(FieldError::NotPolynomial);
    }
    Ok(r.numer().clone())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> FieldError {
        FieldError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, FieldError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, FieldError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, FieldError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, FieldError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected integer exponent"));
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            let e: u32 = text.parse().map_err(|_| FieldError::Syntax {
                offset: start,
                message: "exponent too large".into(),
            })?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, FieldError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Expr::Num(text.parse().expect("digits")))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Expr::Sym(text.to_string()))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let a = parse_rational_function("1 + 2*q^2 - -q").unwrap();
        assert_eq!(a, parse_rational_function("2*q*q + q + 1").unwrap());
        let b = parse_rational_function("-q^2").unwrap();
        assert_eq!(b, parse_rational_function("0 - q*q").unwrap());
        let c = parse_rational_function("1/2/q").unwrap();
        assert_eq!(c, parse_rational_function("1/(2*q)").unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(Expr::parse("q + (1"), Err(FieldError::Syntax { offset: 6, .. })));
        assert!(matches!(Expr::parse("q^x"), Err(FieldError::Syntax { offset: 2, .. })));
        assert_eq!(parse_rational_function("K9"), Err(FieldError::UnknownSymbol("K9".into())));
        assert_eq!(parse_rational_function("1/(q-q)"), Err(FieldError::DivisionByZero));
    }
}
