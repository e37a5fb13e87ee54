//! Multivariate polynomial gcd over Z.
//!
//! Recursive by variable: integer and monomial content are split off first,
//! variables present in only one argument reduce to a gcd with coefficients,
//! and the remaining case runs a primitive pseudo-remainder sequence in a
//! chosen main variable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::var::{Monomial, Var};

/// Greatest common divisor, primitive up to integer content and with a
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().with_positive_lead();
    }
    if b.is_zero() {
        return a.clone().with_positive_lead();
    }
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.meet(&mb);
    let pa = a.div_scalar_exact(&ca).div_monomial(&ma);
    let pb = b.div_scalar_exact(&cb).div_monomial(&mb);
    let g = gcd_primitive(&pa, &pb);
    g.mul_term(&m, &c).with_positive_lead()
}

/// Gcd of a list; stops early once the result is 1.
pub fn gcd_many<'a, I: IntoIterator<Item = &'a Poly>>(items: I) -> Poly {
    let mut g = Poly::zero();
    for p in items {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Both inputs are primitive over Z and free of monomial content.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    for v in Var::ALL {
        let (ua, ub) = (a.uses(v), b.uses(v));
        if ua && !ub {
            return gcd_with_coeffs(b, a, v);
        }
        if ub && !ua {
            return gcd_with_coeffs(a, b, v);
        }
    }
    if a == b {
        return a.clone().with_positive_lead();
    }
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.clone().with_positive_lead();
    }
    for v in Var::ALL.into_iter().filter(|&v| a.uses(v)) {
        if free_of_gcd(a, b, v) {
            return gcd(&content_in(a, v), &content_in(b, v));
        }
    }
    let v = main_var(a, b);
    let conta = content_in(a, v);
    let contb = content_in(b, v);
    let gc = gcd(&conta, &contb);
    let mut r0 = a.div_exact(&conta).expect("content divides");
    let mut r1 = b.div_exact(&contb).expect("content divides");
    if r0.degree_in(v) < r1.degree_in(v) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let r = prem(&r0, &r1, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            return gc.with_positive_lead();
        }
        let rp = primitive_in(&r, v);
        r0 = r1;
        r1 = rp;
    }
    let g = primitive_in(&r1, v);
    (&gc * &g).with_positive_lead()
}

/// Whether `gcd(a, b)` is free of `v`, shown by specializing the other
/// variables at a point where both leading coefficients in `v` are nonzero.
/// There the gcd's degree in `v` can only grow. `false` means undecided.
fn free_of_gcd(a: &Poly, b: &Poly, v: Var) -> bool {
    let others: Vec<Var> = Var::ALL.into_iter().filter(|&w| w != v && (a.uses(w) || b.uses(w))).collect();
    if others.is_empty() {
        return false;
    }
    for attempt in 0..3 {
        let (mut sa, mut sb) = (a.clone(), b.clone());
        for (k, &w) in others.iter().enumerate() {
            let x = BigRational::from_integer(BigInt::from(3 + 7 * k + 11 * attempt));
            sa = sa.substitute(w, &x).0;
            sb = sb.substitute(w, &x).0;
        }
        if sa.degree_in(v) == a.degree_in(v) && sb.degree_in(v) == b.degree_in(v) {
            return gcd(&sa, &sb).degree_in(v) == 0;
        }
    }
    false
}

/// `gcd(p, x)` where `v` occurs in `x` but not in `p`.
fn gcd_with_coeffs(p: &Poly, x: &Poly, v: Var) -> Poly {
    let mut g = p.clone();
    let mut coeffs = x.coeffs_in(v);
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(|c| c.len());
    for c in &coeffs {
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn main_var(a: &Poly, b: &Poly) -> Var {
    Var::ALL
        .into_iter()
        .filter(|&v| a.uses(v))
        .min_by_key(|&v| {
            let (da, db) = (a.degree_in(v), b.degree_in(v));
            (da.min(db), da.max(db))
        })
        .expect("non-constant polynomial")
}

/// Gcd of the coefficients of `p` with respect to `v`.
pub fn content_in(p: &Poly, v: Var) -> Poly {
    let mut coeffs = p.coeffs_in(v);
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(|c| c.len());
    let g = gcd_many(coeffs.iter());
    if p.leading_coeff() < BigInt::zero() {
        -g
    } else {
        g
    }
}

fn primitive_in(p: &Poly, v: Var) -> Poly {
    let c = content_in(p, v);
    let pp = p.div_exact(&c).expect("content divides");
    let ic = pp.content();
    pp.div_scalar_exact(&ic).with_positive_lead()
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
pub fn prem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let lcb = b.lc_in(v);
    let mut r = a.clone();
    assert!(db > 0, "pseudo-remainder needs positive degree divisor");
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = r.lc_in(v);
        let shift = Poly::term(Monomial::var(v, dr - db), BigInt::one());
        r = &(&lcb * &r) - &(&(&lcr * &shift) * b);
    }
    r
}
