//! The `matrix` and `solve` commands.

use std::collections::BTreeMap;
use std::fmt::Write;

use qyoung_core::formula::Env;
use qyoung_core::garnir::{self, solve_right_annihilator, two_sided_annihilator, SolutionFamily};
use qyoung_core::hecke::{HeckeAlgebra, HeckeElement};
use qyoung_core::linalg::FieldMatrix;
use qyoung_core::repmat::YoungBasis;
use qyoung_core::young::{self, Numbering};
use qyoung_field::{QuadExt, RationalFunction, Var};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::eval::{required_root, Evaluator};
use crate::expr::Expr;
use crate::field::CliField;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Young,
    Hecke,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Young => "young",
            Basis::Hecke => "hecke",
        }
    }
}

/// Left multiplication by an element of H(3, q), column `j` holding the
/// image of the `j`-th basis element.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixOutput {
    pub element: String,
    pub basis: &'static str,
    pub rows: Vec<Vec<String>>,
}

impl MatrixOutput {
    pub fn pretty(&self) -> String {
        let width: Vec<usize> = (0..self.rows[0].len()).map(|j| self.rows.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        let mut out = format!("M({}) in the {} basis\n", self.element, self.basis);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().zip(&width).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(out, "[ {} ]", cells.join("  ")).unwrap();
        }
        out
    }
}

fn strings<F: CliField>(m: &FieldMatrix<F>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn matrix_in<F: CliField>(env: Env<F>, e: &Expr, basis: Basis) -> Result<Vec<Vec<String>>> {
    let ev = Evaluator::new(env, 4)?;
    let h = ev.hecke()?;
    let x = ev.hecke_element(e)?;
    Ok(match basis {
        Basis::Hecke => strings(&h.left_matrix(&x)),
        Basis::Young => strings(&YoungBasis::new(h, ev.env())?.left_regular_matrix(h, &x)?),
    })
}

/// The matrix of left multiplication by the value of `src`.
pub fn matrix(src: &str, basis: Basis) -> Result<MatrixOutput> {
    let e = Expr::parse(src)?;
    let env = Env::symbolic();
    let rows = match required_root(&e)? {
        None => matrix_in::<RationalFunction>(env, &e, basis)?,
        Some(root) => matrix_in::<QuadExt<RationalFunction>>(env.with_root(root)?, &e, basis)?,
    };
    Ok(MatrixOutput { element: e.to_string(), basis: basis.name(), rows })
}

/// A solution space `particular + span(directions)` of a linear equation in H(n, q).
#[derive(Clone, Debug, Serialize)]
pub struct SolveOutput {
    pub equation: String,
    pub dimension: usize,
    pub free_parameters: usize,
    pub parameters: Vec<&'static str>,
    pub particular: String,
    pub directions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_sided_dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annihilates: Option<bool>,
    /// Named elements and whether the family contains them.
    pub contains: BTreeMap<String, bool>,
}

impl SolveOutput {
    fn new(equation: String, fam: &SolutionFamily<RationalFunction>) -> SolveOutput {
        SolveOutput {
            equation,
            dimension: fam.dimension(),
            free_parameters: fam.free_parameter_count(),
            parameters: fam.parameters.clone(),
            particular: fam.particular.to_string(),
            directions: fam.directions.iter().map(ToString::to_string).collect(),
            two_sided_dimension: None,
            annihilates: None,
            contains: BTreeMap::new(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("{}\ndimension: {}\n", self.equation, self.dimension);
        if !self.parameters.is_empty() {
            writeln!(out, "parameters: {} ({} free in total)", self.parameters.join(", "), self.free_parameters).unwrap();
        }
        for (k, d) in self.directions.iter().enumerate() {
            writeln!(out, "  v{}: {}", k + 1, d).unwrap();
        }
        if let Some(d) = self.two_sided_dimension {
            writeln!(out, "two-sided annihilator dimension: {d}").unwrap();
        }
        if let Some(a) = self.annihilates {
            writeln!(out, "every solution annihilates: {}", if a { "yes" } else { "no" }).unwrap();
        }
        for (name, inside) in &self.contains {
            writeln!(out, "contains {name}: {}", if *inside { "yes" } else { "no" }).unwrap();
        }
        out
    }
}

/// All `G` with `Y21_123 * G = 0`.
pub fn solve_garnir() -> Result<SolveOutput> {
    let env = Env::symbolic();
    let h = HeckeAlgebra::new(3, env.q()?)?;
    let y = young::mixed_young(&h, &env, Numbering::N123)?.element;
    let fam = solve_right_annihilator(&h, &y);
    let mut out = SolveOutput::new("Y21_123 * G = 0".into(), &fam);
    out.two_sided_dimension = Some(two_sided_annihilator(&h, &y).dimension());
    for name in ["XX1", "XX2", "XX3"] {
        out.contains.insert(name.into(), fam.contains(&garnir::named(&h, &env, name)?));
    }
    Ok(out)
}

fn parameters(xs: &[&HeckeElement<RationalFunction>]) -> Vec<&'static str> {
    Var::ALL
        .into_iter()
        .filter(|&v| v != Var::Q && xs.iter().any(|x| x.coords().iter().any(|c| !c.free_of(v))))
        .map(Var::name)
        .collect()
}

/// All `T` with `T * A = B * T` for the operators named in `pair`, `A,B`.
pub fn solve_intertwiner(pair: &str, rank: usize) -> Result<SolveOutput> {
    let (a, b) = pair
        .split_once(',')
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| CliError::Unsupported(format!("expected a pair `A,B`, got `{pair}`")))?;
    let env = Env::symbolic();
    let h = HeckeAlgebra::new(rank, env.q()?)?;
    let ya = young::named(&h, &env, a)?;
    let yb = young::named(&h, &env, b)?;
    let fam = garnir::solve_intertwiner(&h, &ya, &yb, &parameters(&[&ya, &yb]));
    let mut out = SolveOutput::new(format!("T * {a} = {b} * T"), &fam);
    out.annihilates = Some(fam.directions.iter().all(|t| h.mul(t, &ya).is_zero()));
    if rank == 3 && a == "Y21_123" && b == "Y21_132" {
        out.contains.insert("T".into(), fam.contains(&garnir::named(&h, &env, "T")?));
    }
    Ok(out)
}
