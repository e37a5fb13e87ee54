//! Variables and monomials of the coefficient ring.
//!
//! The ring carries a fixed set of eight indeterminates: the deformation
//! parameter `q`, the free parameters `K1`..`K6` and `P3`. Monomials are
//! ordered graded-lexicographically with `q` as the most significant variable.

use std::cmp::Ordering;
use std::fmt;

pub const NVARS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    P3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Q,
        Var::K1,
        Var::K2,
        Var::K3,
        Var::K4,
        Var::K5,
        Var::K6,
        Var::P3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::K1 => "K1",
            Var::K2 => "K2",
            Var::K3 => "K3",
            Var::K4 => "K4",
            Var::K5 => "K5",
            Var::K6 => "K6",
            Var::P3 => "P3",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Var::ALL`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u8; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: u8) -> Monomial {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: [u8; NVARS]) -> Monomial {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u8; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u8 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = other.0[i].checked_sub(self.0[i])?;
        }
        Some(Monomial(e))
    }

    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = (*a).min(b);
        }
        Monomial(e)
    }

    pub fn with_exp(&self, v: Var, exp: u8) -> Monomial {
        let mut e = self.0;
        e[v.index()] = exp;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_puts_degree_first_then_q() {
        let q3k4 = Monomial::var(Var::Q, 3).mul(&Monomial::var(Var::K4, 1));
        let q4 = Monomial::var(Var::Q, 4);
        let k4_4 = Monomial::var(Var::K4, 4);
        assert!(q4 > k4_4);
        assert!(q4 > q3k4);
        assert!(q3k4 > k4_4);
        assert!(Monomial::var(Var::K1, 1) > Monomial::var(Var::P3, 1));
        assert!(Monomial::var(Var::P3, 1) > Monomial::ONE);
    }

    #[test]
    fn names_round_trip() {
        for v in Var::ALL {
            assert_eq!(Var::from_name(v.name()), Some(v));
        }
        assert_eq!(Var::from_name("K7"), None);
    }
}
