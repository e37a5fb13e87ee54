//! The expression language of the command line.
//!
//! `+ -` bind loosest, then `* /`, then unary minus, then `^`. A `^` followed
//! by an integer literal is a power; any other `^` is the wedge product.
//! `*` is the Clifford product.

use std::fmt;

use qyoung_field::BigInt;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Rev,
    AlphaQ,
    Lim1,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Rev => "rev",
            Func::AlphaQ => "alphaq",
            Func::Lim1 => "lim1",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        match s {
            "rev" => Some(Func::Rev),
            "alphaq" => Some(Func::AlphaQ),
            "lim1" => Some(Func::Lim1),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser { src, pos: 0 };
        let e = p.sum()?;
        p.skip_ws();
        if p.pos < src.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(e)
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Wedge(..) | Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Name(_) | Expr::Call(..) => 5,
        }
    }

    /// Every name referenced, in order of first appearance.
    pub fn names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Num(_) => {}
            Expr::Name(n) => {
                if !out.contains(&n.as_str()) {
                    out.push(n);
                }
            }
            Expr::Neg(x) | Expr::Pow(x, _) | Expr::Call(_, x) => x.collect_names(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Wedge(a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.prec() < min;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            Expr::Num(n) => write!(f, "{n}")?,
            Expr::Name(n) => f.write_str(n)?,
            Expr::Neg(x) => {
                f.write_str("-")?;
                x.write(f, 3)?;
            }
            Expr::Add(a, b) => binary(f, a, " + ", b, 1)?,
            Expr::Sub(a, b) => binary(f, a, " - ", b, 1)?,
            Expr::Mul(a, b) => binary(f, a, "*", b, 2)?,
            Expr::Div(a, b) => binary(f, a, "/", b, 2)?,
            Expr::Wedge(a, b) => {
                a.write(f, 4)?;
                f.write_str("^")?;
                if matches!(**b, Expr::Num(_)) {
                    write!(f, "({b})")?;
                } else {
                    b.write(f, 5)?;
                }
            }
            Expr::Pow(a, e) => {
                a.write(f, 4)?;
                write!(f, "^{e}")?;
            }
            Expr::Call(func, x) => {
                write!(f, "{}(", func.name())?;
                x.write(f, 0)?;
                f.write_str(")")?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn binary(f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, prec: u8) -> fmt::Result {
    a.write(f, prec)?;
    f.write_str(op)?;
    b.write(f, prec + 1)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> CliError {
        CliError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.wedge()
    }

    fn wedge(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.eat('^') {
            self.skip_ws();
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let start = self.pos;
                let digits = self.digits();
                let exp = digits.parse::<u32>().map_err(|_| CliError::Syntax {
                    offset: start,
                    message: "exponent too large".into(),
                })?;
                e = Expr::Pow(Box::new(e), exp);
            } else {
                e = Expr::Wedge(Box::new(e), Box::new(self.atom()?));
            }
        }
        Ok(e)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(Expr::Num(d.parse().expect("ascii digits")))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                if let Some(func) = Func::from_name(name) {
                    if !self.eat('(') {
                        return Err(self.error(&format!("expected `(` after {name}")));
                    }
                    let arg = self.sum()?;
                    if !self.eat(')') {
                        return Err(self.error("expected `)`"));
                    }
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                Ok(Expr::Name(name.to_string()))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
