//! Multivectors over a Clifford algebra with an arbitrary bilinear form.
//!
//! Blades are bitmasks: bit `i-1` stands for `e_i`. The Clifford product is
//! built from wedge and left contraction by peeling one vector at a time.

use std::collections::BTreeMap;
use std::fmt;

use qyoung_field::Scalar;

use crate::error::{CoreError, Result};

pub type Blade = u32;

pub fn grade(b: Blade) -> u32 {
    b.count_ones()
}

/// Sign of `e_a ^ e_b` relative to the sorted blade `a | b`, for disjoint masks.
fn wedge_sign(a: Blade, b: Blade) -> bool {
    let mut swaps = 0u32;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (b & ((1u32 << i) - 1)).count_ones();
    }
    swaps % 2 == 1
}

/// A `dim x dim` bilinear form, stored row-major and addressed 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<F> {
    dim: usize,
    entries: Vec<F>,
}

impl<F: Scalar> BilinearForm<F> {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> F) -> BilinearForm<F> {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 1..=dim {
            for j in 1..=dim {
                entries.push(f(i, j));
            }
        }
        BilinearForm { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> BilinearForm<G> {
        BilinearForm { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }
}

/// The `2n x 2n` form that makes `e_i ^ e_{i+n}` satisfy the Hecke relations.
pub fn build_b<F: Scalar>(n: usize, q: &F) -> BilinearForm<F> {
    assert!(n >= 1, "n must be positive");
    let n_i = n as i64;
    BilinearForm::from_fn(2 * n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        if (i <= n_i && j <= n_i) || (i > n_i && j > n_i) {
            F::zero()
        } else if i == j - n_i || i - 1 - n_i == j {
            q.clone()
        } else if i + 1 == j - n_i || i == j + 1 - n_i {
            q.add(&F::one()).neg()
        } else if (i - j - n_i).abs() >= 2 && i > n_i {
            F::from_i64(-1)
        } else {
            F::one()
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<F> {
    dim: usize,
    terms: BTreeMap<Blade, F>,
}

impl<F: Scalar> Multivector<F> {
    pub fn zero(dim: usize) -> Multivector<F> {
        Multivector { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: F) -> Multivector<F> {
        Multivector::blade(dim, 0, c)
    }

    pub fn one(dim: usize) -> Multivector<F> {
        Multivector::scalar(dim, F::one())
    }

    pub fn blade(dim: usize, b: Blade, c: F) -> Multivector<F> {
        let mut m = Multivector::zero(dim);
        if !c.is_zero() {
            m.terms.insert(b, c);
        }
        m
    }

    /// The generator `e_i`, 1-based.
    pub fn basis_vector(dim: usize, i: usize) -> Result<Multivector<F>> {
        if i == 0 || i > dim {
            return Err(CoreError::IndexOutOfRange { index: i, max: dim });
        }
        Ok(Multivector::blade(dim, 1 << (i - 1), F::one()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: Blade) -> F {
        self.terms.get(&b).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: Blade, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(x) => {
                *x = x.add(c);
                if x.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Multivector<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.terms {
            self.add_term(*b, &x.mul(c));
        }
    }

    pub fn add(&self, other: &Multivector<F>) -> Multivector<F> {
        let mut out = self.clone();
        for (b, x) in &other.terms {
            out.add_term(*b, x);
        }
        out
    }

    pub fn sub(&self, other: &Multivector<F>) -> Multivector<F> {
        let mut out = self.clone();
        for (b, x) in &other.terms {
            out.add_term(*b, &x.neg());
        }
        out
    }

    pub fn neg(&self) -> Multivector<F> {
        self.scale(&F::from_i64(-1))
    }

    pub fn scale(&self, c: &F) -> Multivector<F> {
        if c.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, x)| (*b, x.mul(c))).collect(),
        }
    }

    pub fn grade_involute(&self) -> Multivector<F> {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, x)| (*b, if grade(*b) % 2 == 1 { x.neg() } else { x.clone() }))
                .collect(),
        }
    }

    pub fn grade_project(&self, k: u32) -> Multivector<F> {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| grade(**b) == k)
                .map(|(b, x)| (*b, x.clone()))
                .collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| grade(*b).is_multiple_of(2))
    }

    /// Exterior product; needs no bilinear form.
    pub fn wedge(&self, other: &Multivector<F>) -> Result<Multivector<F>> {
        if self.dim != other.dim {
            return Err(CoreError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = Multivector::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = x.mul(y);
                out.add_term(a | b, &if wedge_sign(*a, *b) { c.neg() } else { c });
            }
        }
        Ok(out)
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Multivector<G> {
        let mut out = Multivector::zero(self.dim);
        for (b, x) in &self.terms {
            out.add_term(*b, &f(x));
        }
        out
    }

    pub fn try_map<G: Scalar, E>(&self, f: impl Fn(&F) -> std::result::Result<G, E>) -> std::result::Result<Multivector<G>, E> {
        let mut out = Multivector::zero(self.dim);
        for (b, x) in &self.terms {
            out.add_term(*b, &f(x)?);
        }
        Ok(out)
    }
}

pub fn blade_name(b: Blade) -> String {
    if b == 0 {
        return "Id".to_string();
    }
    let mut parts = Vec::new();
    for i in 0..32 {
        if b & (1 << i) != 0 {
            parts.push(format!("e{}", i + 1));
        }
    }
    parts.join("^")
}

/// True if `s` has a `+` or `-` outside parentheses after its first character.
pub fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Writes `c*name` terms joined by ` + ` / ` - `, in the given order. An
/// empty name writes the bare coefficient.
pub fn fmt_linear<F: Scalar>(f: &mut fmt::Formatter<'_>, terms: &[(String, &F)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, (name, c)) in terms.iter().enumerate() {
        let text = c.to_string();
        let negated;
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) if !has_top_level_sum(rest) => (true, rest),
            Some(_) => {
                negated = c.neg().to_string();
                (true, negated.as_str())
            }
            None => (false, text.as_str()),
        };
        if k == 0 {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        let wrap = has_top_level_sum(body) || body.starts_with('-');
        if name.is_empty() {
            if wrap {
                write!(f, "({body})")?;
            } else {
                f.write_str(body)?;
            }
        } else if body == "1" {
            f.write_str(name)?;
        } else if wrap {
            write!(f, "({body})*{name}")?;
        } else {
            write!(f, "{body}*{name}")?;
        }
    }
    Ok(())
}

impl<F: Scalar> fmt::Display for Multivector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &F)> = self.terms.iter().map(|(b, c)| (blade_name(*b), c)).collect();
        fmt_linear(f, &terms)
    }
}

/// `Cl(B, V)` for a fixed form `B`.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra<F> {
    form: BilinearForm<F>,
}

impl<F: Scalar> CliffordAlgebra<F> {
    pub fn new(form: BilinearForm<F>) -> CliffordAlgebra<F> {
        assert!(form.dim() <= 32, "at most 32 generators");
        CliffordAlgebra { form }
    }

    /// The algebra on `build_b(n, q)`.
    pub fn hecke_form(n: usize, q: &F) -> CliffordAlgebra<F> {
        CliffordAlgebra::new(build_b(n, q))
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &BilinearForm<F> {
        &self.form
    }

    pub fn e(&self, i: usize) -> Result<Multivector<F>> {
        Multivector::basis_vector(self.dim(), i)
    }

    fn check(&self, x: &Multivector<F>) -> Result<()> {
        if x.dim != self.dim() {
            Err(CoreError::DimensionMismatch(x.dim, self.dim()))
        } else {
            Ok(())
        }
    }

    /// `e_i ⌟ e_J` for a single blade.
    fn contract_blade(&self, i: usize, b: Blade, c: &F, out: &mut Multivector<F>) {
        let mut rest = b;
        let mut m = 0;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let bij = self.form.get(i, j + 1);
            if !bij.is_zero() {
                let t = bij.mul(c);
                out.add_term(b & !(1 << j), &if m % 2 == 1 { t.neg() } else { t });
            }
            m += 1;
        }
    }

    /// Left contraction of the generator `e_i` onto `y`.
    pub fn contract_left(&self, i: usize, y: &Multivector<F>) -> Result<Multivector<F>> {
        self.check(y)?;
        if i == 0 || i > self.dim() {
            return Err(CoreError::IndexOutOfRange { index: i, max: self.dim() });
        }
        let mut out = Multivector::zero(self.dim());
        for (b, c) in &y.terms {
            self.contract_blade(i, *b, c, &mut out);
        }
        Ok(out)
    }

    /// `e_i * y = e_i ^ y + e_i ⌟ y`.
    fn vec_mul(&self, i: usize, y: &Multivector<F>) -> Multivector<F> {
        let bit = 1u32 << (i - 1);
        let mut out = Multivector::zero(self.dim());
        for (b, c) in &y.terms {
            if b & bit == 0 {
                let sign = (b & (bit - 1)).count_ones() % 2 == 1;
                out.add_term(b | bit, &if sign { c.neg() } else { c.clone() });
            }
            self.contract_blade(i, *b, c, &mut out);
        }
        out
    }

    /// `e_I * y` for a single blade `I`.
    fn blade_mul(&self, a: Blade, y: &Multivector<F>) -> Multivector<F> {
        if a == 0 {
            return y.clone();
        }
        let i1 = a.trailing_zeros() as usize + 1;
        let rest = a & (a - 1);
        let inner = self.blade_mul(rest, y);
        let mut out = self.vec_mul(i1, &inner);
        if rest != 0 {
            let mut corr = Multivector::zero(self.dim());
            self.contract_blade(i1, rest, &F::one(), &mut corr);
            for (b, c) in &corr.terms {
                let t = self.blade_mul(*b, y);
                out.add_scaled(&t, &c.neg());
            }
        }
        out
    }

    /// The Clifford product.
    pub fn cmul(&self, x: &Multivector<F>, y: &Multivector<F>) -> Result<Multivector<F>> {
        self.check(x)?;
        self.check(y)?;
        let mut out = Multivector::zero(self.dim());
        for (a, c) in &x.terms {
            let t = self.blade_mul(*a, y);
            out.add_scaled(&t, c);
        }
        Ok(out)
    }

    fn reverse_blade(&self, a: Blade) -> Multivector<F> {
        if grade(a) <= 1 {
            return Multivector::blade(self.dim(), a, F::one());
        }
        let i1 = a.trailing_zeros() as usize + 1;
        let rest = a & (a - 1);
        let rr = self.reverse_blade(rest);
        let ei = Multivector::blade(self.dim(), 1 << (i1 - 1), F::one());
        let mut out = self.cmul(&rr, &ei).expect("same algebra");
        let mut corr = Multivector::zero(self.dim());
        self.contract_blade(i1, rest, &F::one(), &mut corr);
        for (b, c) in &corr.terms {
            out.add_scaled(&self.reverse_blade(*b), &c.neg());
        }
        out
    }

    /// The anti-automorphism of the Clifford product fixing every vector.
    pub fn reverse(&self, x: &Multivector<F>) -> Result<Multivector<F>> {
        self.check(x)?;
        let mut out = Multivector::zero(self.dim());
        for (a, c) in &x.terms {
            out.add_scaled(&self.reverse_blade(*a), c);
        }
        Ok(out)
    }

    pub fn wedge(&self, x: &Multivector<F>, y: &Multivector<F>) -> Result<Multivector<F>> {
        self.check(x)?;
        x.wedge(y)
    }
}
