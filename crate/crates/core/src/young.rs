//! q-Young operators in H(2, q) and H(3, q).
//!
//! Displayed coordinate formulas are kept as text over the word basis
//! `[Id, b1, b2, b12, b21, b121]` and evaluated in an [`Env`].

use std::fmt;

use qyoung_field::{content_factors, Poly, RationalFunction, Scalar};

use crate::error::{CoreError, Result};
use crate::formula::Env;
use crate::hecke::{HeckeAlgebra, HeckeElement};

pub type Coords = [&'static str; 6];

pub const Y3: Coords = [
    "q^3/((1+q+q^2)*(1+q))",
    "q^2/((1+q+q^2)*(1+q))",
    "q^2/((1+q+q^2)*(1+q))",
    "q/((1+q+q^2)*(1+q))",
    "q/((1+q+q^2)*(1+q))",
    "1/((1+q+q^2)*(1+q))",
];

pub const Y111: Coords = [
    "1/((1+q+q^2)*(1+q))",
    "-1/((1+q+q^2)*(1+q))",
    "-1/((1+q+q^2)*(1+q))",
    "1/((1+q+q^2)*(1+q))",
    "1/((1+q+q^2)*(1+q))",
    "-1/((1+q+q^2)*(1+q))",
];

pub const R1: Coords = [
    "1/(1+q)",
    "-K4",
    "q*K4",
    "K4",
    "-(q^3*K4+q+K4-1)/(q*(1+q))",
    "-(-K4+q^2*K4+1)/(q*(1+q))",
];

pub const R2: Coords = [
    "q/(1+q)",
    "-K4",
    "q*K4",
    "K4",
    "-(q^3*K4-q+K4+1)/(q*(1+q))",
    "-(-K4+q^2*K4-1)/(q*(1+q))",
];

pub const R3: Coords = [
    "1/(1+q)",
    "q*K4",
    "-K4",
    "K4",
    "-(q^3*K4+q+K4-1)/(q*(1+q))",
    "-(-K4+q^2*K4+1)/(q*(1+q))",
];

pub const R4: Coords = [
    "q/(1+q)",
    "q*K4",
    "-K4",
    "K4",
    "-(q^3*K4-q+K4+1)/(q*(1+q))",
    "-(-K4+q^2*K4-1)/(q*(1+q))",
];

pub const R5: Coords = [
    "1/(1+q)",
    "K2",
    "-(kappa+K2-q*K4+K4-q^2*K4^2+q*K2^2-q^2*K2*K4-q*K4^2+K2^2+K4*K2)/((K2+K4-q*K4+kappa)*(1+q))",
    "K4",
    "-(q*kappa*K4+q*K2*K4+q*kappa*K2-kappa*K2)/(q*(K2+K4-q*K4+kappa))",
    "(kappa*K2+q*K4^2)/(q*(-K2-K4+q*K4-kappa))",
];

pub const R6: Coords = [
    "q/(1+q)",
    "K2",
    "-(q^2*K4^2-q*K2^2+q^2*K2*K4+q*K4^2+alpha-q*K4+K2+K4-K2^2-K4*K2)/((-K2-K4+q*K4-alpha)*(1+q))",
    "K4",
    "(q*K2*K4+q*alpha*K4+q*alpha*K2-alpha*K2)/((-K2-K4+q*K4-alpha)*q)",
    "(alpha*K2+q*K4^2)/(q*(-K2-K4+q*K4-alpha))",
];

pub const Y21_132: Coords = [
    "q/(q+1+q^2)",
    "-(q^3*K4+2*q^2*K4+2*q*K4-1+K4)/(q^3+2*q^2+2*q+1)",
    "(K4*q^4+2*q^3*K4+2*q^2*K4+q*K4+1)/(q^3+2*q^2+2*q+1)",
    "(q^3*K4+2*q^2*K4+2*q*K4-1+K4)/(q^3+2*q^2+2*q+1)",
    "-(K4*q^5+K4*q^4+q^3*K4+q^3+q^2*K4+q*K4+q+K4-1)/((q^3+2*q^2+2*q+1)*q)",
    "-(K4*q^4+q^3*K4+q^2-q*K4+1-K4)/((q+1+q^2)*q*(1+q))",
];

pub const Y21_123: Coords = [
    "q/(q+1+q^2)",
    "(q^3*K4-q^2+2*q^2*K4+2*q*K4+K4)/((1+q)*(q+1+q^2))",
    "-q*(q^3*K4+2*q^2*K4+2*q*K4+q+K4)/((1+q)*(q+1+q^2))",
    "-(q^3*K4+2*q^2*K4+2*q*K4+q+K4)/(q^3+2*q^2+2*q+1)",
    "(K4*q^5+K4*q^4+q^3*K4+q^3-q^2+q^2*K4+q*K4-1+K4)/(q*(q^3+2*q^2+2*q+1))",
    "(K4*q^4+q^3*K4+q^2-q*K4+1-K4)/((q+1+q^2)*q*(1+q))",
];

pub const R13: Coords = [
    "q/(1+q)",
    "-(-q^2+q^2*P3+P3*q-1+P3)/((q+1+q^2)*q)",
    "P3",
    "(q^2*P3+P3*q+P3-1)/(q*(1+q+q^2))",
    "-(q^5*P3+q^4*P3+q^3*P3+q^2*P3-q^2+P3*q-1+P3)/((1+q)*q^2*(1+q+q^2))",
    "-(q^4*P3+q^3*P3-P3*q+1-P3)/((1+q)*q^2*(1+q+q^2))",
];

/// The displayed value of `C(13) - rev(R(13))` for `R(13) = q^3 + b121`,
/// `C(13) = 1 - b121`.
pub const KW_DISCREPANCY: Coords = ["2*(q^2-q)", "-1-q^2+2*q", "-1-q^2+2*q", "1-q", "1-q", "0"];

/// Displayed coordinates of the general solution of `X + rev(X) = 1` that
/// are not free parameters: scalar and `b21`.
pub const SPLIT_SCALAR: &str = "(q*K2-q*K6+1+q*K3-K2+q^2*K6-K3)/2";
pub const SPLIT_B21: &str = "-K4+q*K6-K6";

pub fn eval_coords<F: Scalar>(env: &Env<F>, coords: &[&str]) -> Result<HeckeElement<F>> {
    Ok(HeckeElement::new(env.eval_all(coords)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Numbering {
    N123,
    N132,
}

impl Numbering {
    pub fn digits(self) -> Vec<u32> {
        match self {
            Numbering::N123 => vec![1, 2, 3],
            Numbering::N132 => vec![1, 3, 2],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct YoungOperator<F> {
    pub name: &'static str,
    pub partition: Vec<u32>,
    pub numbering: Vec<u32>,
    pub element: HeckeElement<F>,
    pub parameters: Vec<&'static str>,
}

impl<F: Scalar> YoungOperator<F> {
    fn new(name: &'static str, partition: &[u32], numbering: &[u32], element: HeckeElement<F>, parameters: &[&'static str]) -> Self {
        YoungOperator {
            name,
            partition: partition.to_vec(),
            numbering: numbering.to_vec(),
            element,
            parameters: parameters.to_vec(),
        }
    }

    pub fn is_idempotent(&self, h: &HeckeAlgebra<F>) -> bool {
        h.mul(&self.element, &self.element) == self.element
    }
}

impl<F: Scalar> fmt::Display for YoungOperator<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.element)
    }
}

/// `q + b1`.
pub fn r12<F: Scalar>(h: &HeckeAlgebra<F>) -> Result<HeckeElement<F>> {
    Ok(h.scalar(h.q().clone()).add(&h.gen(1)?))
}

/// `1 - b1`.
pub fn c12<F: Scalar>(h: &HeckeAlgebra<F>) -> Result<HeckeElement<F>> {
    Ok(h.one().sub(&h.gen(1)?))
}

/// `Y(2) = R(12)/(1+q)` and `Y(11) = C(12)/(1+q)`.
pub fn young_n2<F: Scalar>(h: &HeckeAlgebra<F>) -> Result<(YoungOperator<F>, YoungOperator<F>)> {
    let norm = F::one().add(h.q()).inv()?;
    let y2 = r12(h)?.scale(&norm);
    let y11 = c12(h)?.scale(&norm);
    Ok((
        YoungOperator::new("Y2", &[2], &[1, 2], y2, &[]),
        YoungOperator::new("Y11", &[1, 1], &[1, 2], y11, &[]),
    ))
}

fn require_h3<F: Scalar>(h: &HeckeAlgebra<F>) -> Result<()> {
    if h.rank() != 3 {
        return Err(CoreError::UnsupportedRank(h.rank()));
    }
    Ok(())
}

/// The full symmetrizer `Y(3)` and `Y(111) = rev(Y(3))`.
pub fn young_full3<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<(YoungOperator<F>, YoungOperator<F>)> {
    require_h3(h)?;
    let y3 = eval_coords(env, &Y3)?;
    let y111 = h.rev(&y3);
    Ok((
        YoungOperator::new("Y3", &[3], &[1, 2, 3], y3, &[]),
        YoungOperator::new("Y111", &[1, 1, 1], &[1, 2, 3], y111, &[]),
    ))
}

/// `C(13) - rev(R(13))` for `R(13) = q^3 + b121`, `C(13) = 1 - b121`.
pub fn kw_discrepancy<F: Scalar>(h: &HeckeAlgebra<F>) -> Result<HeckeElement<F>> {
    require_h3(h)?;
    let b121 = h.basis(5);
    let r13 = h.scalar(h.q().pow(3)).add(&b121);
    let c13 = h.one().sub(&b121);
    Ok(c13.sub(&h.rev(&r13)))
}

/// General solution of `X + rev(X) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitFamily<F> {
    pub element: HeckeElement<F>,
    pub free: Vec<&'static str>,
}

/// Solves `X + rev(X) = 1` for the scalar and `b21` coordinates of
/// `K1 + K2 b1 + K3 b2 + K4 b12 + K5 b21 + K6 b121`.
pub fn solve_reversion_split<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<SplitFamily<F>> {
    require_h3(h)?;
    let general = eval_coords(env, &["0", "K2", "K3", "K4", "0", "K6"])?;
    let element = h.solve_for(|x| x.add(&h.rev(x)), &h.one(), &general, &[0, 4])?;
    Ok(SplitFamily { element, free: vec!["K2", "K3", "K4", "K6"] })
}

pub fn representative_coords(i: usize) -> Result<&'static Coords> {
    Ok(match i {
        1 => &R1,
        2 => &R2,
        3 => &R3,
        4 => &R4,
        5 => &R5,
        6 => &R6,
        _ => return Err(CoreError::IndexOutOfRange { index: i, max: 6 }),
    })
}

/// `r_i`; `r5` needs `kappa` and `r6` needs `alpha` bound in `env`.
pub fn representative<F: Scalar>(env: &Env<F>, i: usize) -> Result<HeckeElement<F>> {
    eval_coords(env, representative_coords(i)?)
}

/// `f1..f4 = r1, r2, r3, r5`.
pub fn f_index(i: usize) -> Result<usize> {
    [1, 2, 3, 5]
        .get(i.wrapping_sub(1))
        .copied()
        .ok_or(CoreError::IndexOutOfRange { index: i, max: 4 })
}

/// `Y(21)_{1,3,2} = f1 - Y(111)` and `Y(21)_{1,2,3}` its reversion.
pub fn mixed_young<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>, numbering: Numbering) -> Result<YoungOperator<F>> {
    require_h3(h)?;
    let (_, y111) = young_full3(h, env)?;
    let y132 = representative(env, 1)?.sub(&y111.element);
    let (name, element) = match numbering {
        Numbering::N132 => ("Y21_132", y132),
        Numbering::N123 => ("Y21_123", h.rev(&y132)),
    };
    Ok(YoungOperator::new(name, &[2, 1], &numbering.digits(), element, &["K4"]))
}

/// The one-parameter row symmetrizer `R(13)` in `P3`.
pub fn row_symmetrizer_r13<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<HeckeElement<F>> {
    require_h3(h)?;
    eval_coords(env, &R13)
}

pub const YOUNG_NAMES: [&str; 20] = [
    "Y3", "Y111", "Y21_132", "Y21_123", "R13", "C13", "R12", "C12", "Y2", "Y11", "f1", "f2", "f3", "f4", "r1", "r2",
    "r3", "r4", "r5", "r6",
];

/// The named operators of this module, built in `h` (rank 2 admits only the
/// n = 2 names).
pub fn named<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>, name: &str) -> Result<HeckeElement<F>> {
    let (y2, y11) = young_n2(h)?;
    match name {
        "R12" => return r12(h),
        "C12" => return c12(h),
        "Y2" => return Ok(y2.element),
        "Y11" => return Ok(y11.element),
        _ => {}
    }
    if !YOUNG_NAMES.contains(&name) {
        return Err(CoreError::UnknownName(name.to_string()));
    }
    require_h3(h)?;
    match name {
        "Y3" => Ok(young_full3(h, env)?.0.element),
        "Y111" => Ok(young_full3(h, env)?.1.element),
        "Y21_132" => Ok(mixed_young(h, env, Numbering::N132)?.element),
        "Y21_123" => Ok(mixed_young(h, env, Numbering::N123)?.element),
        "R13" => row_symmetrizer_r13(h, env),
        "C13" => Ok(h.rev(&row_symmetrizer_r13(h, env)?)),
        _ => {
            let (kind, digit) = name.split_at(1);
            let i: usize = digit.parse().map_err(|_| CoreError::UnknownName(name.to_string()))?;
            let i = if kind == "f" { f_index(i)? } else { i };
            representative(env, i)
        }
    }
}

/// Distinct non-constant content factors of all coordinate denominators.
pub fn exclusion_factors(x: &HeckeElement<RationalFunction>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for c in x.coords() {
        for f in content_factors(c.denom()) {
            if !f.is_constant() && !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qyoung_field::parse_rational_function as rf;

    type RF = RationalFunction;

    fn setup() -> (HeckeAlgebra<RF>, Env<RF>) {
        (HeckeAlgebra::new(3, RF::q()).unwrap(), Env::symbolic())
    }

    #[test]
    fn split_family_display_form() {
        let (h, env) = setup();
        let fam = solve_reversion_split(&h, &env).unwrap();
        assert_eq!(fam.element.coord(0), &env.eval(SPLIT_SCALAR).unwrap());
        assert_eq!(fam.element.coord(4), &env.eval(SPLIT_B21).unwrap());
        assert_eq!(fam.element.add(&h.rev(&fam.element)), h.one());
    }

    #[test]
    fn r1_alternating_specialization() {
        let (h, _) = setup();
        let env = Env::symbolic().with("K4", rf("1/(q+1)").unwrap());
        let r1 = representative(&env, 1).unwrap();
        let expect = eval_coords(&env, &["1", "-1", "q", "1", "-q", "-1"]).unwrap().scale(&rf("1/(1+q)").unwrap());
        assert_eq!(r1, expect);
        assert!(h.mul(&r1, &r1) == r1);
    }

    #[test]
    fn named_lookup() {
        let (h, env) = setup();
        assert_eq!(named(&h, &env, "f3").unwrap(), representative(&env, 3).unwrap());
        assert!(matches!(named(&h, &env, "f5"), Err(CoreError::UnknownName(_))));
        assert!(matches!(named(&h, &env, "Y4"), Err(CoreError::UnknownName(_))));
        assert_eq!(named(&h, &env, "r5"), Err(CoreError::UnknownName("kappa".into())));
        let h2 = HeckeAlgebra::new(2, RF::q()).unwrap();
        assert_eq!(named(&h2, &env, "Y3"), Err(CoreError::UnsupportedRank(2)));
        assert_eq!(named(&h2, &env, "R12").unwrap().to_string(), "q*Id + b1");
    }

    #[test]
    fn exclusions_of_mixed_operator() {
        let (h, env) = setup();
        let y = mixed_young(&h, &env, Numbering::N132).unwrap();
        let names: Vec<String> = exclusion_factors(&y.element).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["q^2 + q + 1", "q^3 + 2*q^2 + 2*q + 1", "q"]);
    }
}
