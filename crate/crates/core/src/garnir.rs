//! Garnir elements for the (21) operators and intertwiners between
//! q-Young operators, found as solution spaces of linear systems in the
//! six Hecke coordinates.

use qyoung_field::Scalar;

use crate::error::{CoreError, Result};
use crate::formula::Env;
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::linalg::FieldMatrix;
use crate::young::{eval_coords, mixed_young, Coords, Numbering};

pub const XX1: Coords = ["-K6*q+K2*q+K4", "K2", "t1/q", "K4", "K5", "K6"];

pub const XX2: Coords = ["K1", "t2/(q^2*(1+q))", "t3/(q^3*(1+q))", "-1/(q*(1+q))", "K5", "K6"];

pub const XX3: Coords = [
    "K1",
    "t4/(q*(q^3+2*q^2+2*q+1))",
    "t5/(q^2*(q^3+2*q^2+2*q+1))",
    "-(q-1)/(q^3+2*q^2+2*q+1)",
    "K5",
    "K6",
];

/// Displayed `alpha_q(XX1)`.
pub const ALPHA_G: Coords = [
    "-t6/q^3",
    "t7/q^3",
    "-t8/q^3",
    "(-K6+K6*q+K5*q)/q^3",
    "(-K6+K4*q+K6*q)/q^3",
    "K6/q^3",
];

/// Displayed one-parameter intertwiner from `Y21_123` to `Y21_132`.
pub const T: Coords = [
    "(1-K4-q^3-K4*q+K4*q^3+q^4*K4)/(q*(2*K4-q^2-q-q^3+2*q^4*K4+8*K4*q^2+6*K4*q+6*K4*q^3-1))",
    "2*(-1-q-q^2+K4+2*K4*q+K4*q^3+2*K4*q^2)/(q*(2*K4-q^2-q-q^3+2*q^4*K4+8*K4*q^2+6*K4*q+6*K4*q^3-1))",
    "-1/(1+q)",
    "-1/(q*(1+q))",
    "1/(1+q)",
    "1/(q*(1+q))",
];

/// The value of `K4` excluded for [`T`].
pub const T_POLE: &str = "(q^2+1)/(2*(q^3+2*q^2+2*q+1))";

/// `particular + sum c_i directions[i]`, with `parameters` naming symbols the
/// system itself depends on.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionFamily<F> {
    pub particular: HeckeElement<F>,
    pub directions: Vec<HeckeElement<F>>,
    pub parameters: Vec<&'static str>,
}

impl<F: Scalar> SolutionFamily<F> {
    pub fn dimension(&self) -> usize {
        self.directions.len()
    }

    /// Linear directions plus the parameters carried by the system.
    pub fn free_parameter_count(&self) -> usize {
        self.directions.len() + self.parameters.len()
    }

    pub fn member(&self, coeffs: &[F]) -> HeckeElement<F> {
        assert_eq!(coeffs.len(), self.directions.len());
        self.directions.iter().zip(coeffs).fold(self.particular.clone(), |acc, (d, c)| acc.add(&d.scale(c)))
    }

    /// Whether `x - particular` lies in the span of the directions.
    pub fn contains(&self, x: &HeckeElement<F>) -> bool {
        let cols: Vec<Vec<F>> = self.directions.iter().map(|d| d.coords().to_vec()).collect();
        let rhs = x.sub(&self.particular);
        if cols.is_empty() {
            return rhs.is_zero();
        }
        FieldMatrix::from_columns(&cols).solve(rhs.coords()).is_ok()
    }
}

fn homogeneous<F: Scalar>(h: &HeckeAlgebra<F>, m: &FieldMatrix<F>, parameters: &[&'static str]) -> SolutionFamily<F> {
    SolutionFamily {
        particular: h.zero(),
        directions: m.nullspace().into_iter().map(HeckeElement::new).collect(),
        parameters: parameters.to_vec(),
    }
}

/// All `G` with `y * G = 0`.
pub fn solve_right_annihilator<F: Scalar>(h: &HeckeAlgebra<F>, y: &HeckeElement<F>) -> SolutionFamily<F> {
    homogeneous(h, &h.left_matrix(y), &[])
}

/// All `G` with `y * G = 0` and `G * y = 0`.
pub fn two_sided_annihilator<F: Scalar>(h: &HeckeAlgebra<F>, y: &HeckeElement<F>) -> SolutionFamily<F> {
    let left = h.left_matrix(y);
    let right = h.linear_map_matrix(|g| h.mul(g, y));
    let rows = (0..12).map(|i| if i < 6 { left.row(i).to_vec() } else { right.row(i - 6).to_vec() }).collect();
    homogeneous(h, &FieldMatrix::from_rows(rows), &[])
}

/// Whether `y * g = 0` and `g * y != 0`.
pub fn is_garnir<F: Scalar>(h: &HeckeAlgebra<F>, y: &HeckeElement<F>, g: &HeckeElement<F>) -> bool {
    h.mul(y, g).is_zero() && !h.mul(g, y).is_zero()
}

/// The displayed Garnir element `XX1` for `Y21_123`, with parameters taken
/// from `env`.
pub fn garnir_element<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<HeckeElement<F>> {
    let y = mixed_young(h, env, Numbering::N123)?.element;
    let g = eval_coords(env, &XX1)?;
    if !is_garnir(h, &y, &g) {
        return Err(CoreError::Degenerate("G does not satisfy Y*G = 0, G*Y != 0".into()));
    }
    Ok(g)
}

pub fn alpha_q_garnir<F: Scalar>(h: &HeckeAlgebra<F>, g: &HeckeElement<F>) -> Result<HeckeElement<F>> {
    h.alpha_q(g)
}

/// All `T` with `T * ya = yb * T`.
pub fn solve_intertwiner<F: Scalar>(
    h: &HeckeAlgebra<F>,
    ya: &HeckeElement<F>,
    yb: &HeckeElement<F>,
    parameters: &[&'static str],
) -> SolutionFamily<F> {
    let m = h.linear_map_matrix(|t| h.mul(t, ya).sub(&h.mul(yb, t)));
    homogeneous(h, &m, parameters)
}

/// Whether every intertwiner from `ya` to `yb` annihilates `ya`.
pub fn check_no_intertwiner<F: Scalar>(h: &HeckeAlgebra<F>, ya: &HeckeElement<F>, yb: &HeckeElement<F>) -> bool {
    solve_intertwiner(h, ya, yb, &[]).directions.iter().all(|t| h.mul(t, ya).is_zero())
}

pub const GARNIR_NAMES: [&str; 6] = ["G", "XX1", "XX2", "XX3", "aG", "T"];

pub fn named<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>, name: &str) -> Result<HeckeElement<F>> {
    let coords = match name {
        "G" | "XX1" => &XX1,
        "XX2" => &XX2,
        "XX3" => &XX3,
        "aG" => return h.alpha_q(&eval_coords(env, &XX1)?),
        "T" => &T,
        _ => return Err(CoreError::UnknownName(name.to_string())),
    };
    if h.rank() != 3 {
        return Err(CoreError::UnsupportedRank(h.rank()));
    }
    eval_coords(env, coords)
}
