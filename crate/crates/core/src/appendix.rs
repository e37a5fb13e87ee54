//! The abbreviation polynomials `p1`..`p25` and `t1`..`t8`.
//!
//! Stored verbatim in `data/appendix.txt`, one `name := polynomial` per line.

use std::fmt;
use std::sync::OnceLock;

use qyoung_field::{Expr, Poly, Scalar};

use crate::error::{CoreError, Result};
use crate::formula::Env;
use crate::garnir::ALPHA_G;
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::repmat::{DisplayedMatrix, RepresentationData, M_B1, M_B2, M_S, WORDS_IN_S};
use crate::young::{eval_coords, mixed_young, Numbering};

const TABLE_TEXT: &str = include_str!("../data/appendix.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Appendix,
    Footnote,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Appendix => "appendix",
            Source::Footnote => "footnote",
        })
    }
}

#[derive(Clone, Debug)]
pub struct NamedPolynomial {
    pub name: String,
    /// The transcription as written, including its term order.
    pub text: String,
    pub stored: Poly,
    pub source: Source,
    expr: Expr,
}

fn load() -> Vec<NamedPolynomial> {
    TABLE_TEXT
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (name, text) = line.split_once(":=").expect("`name := polynomial`");
            let (name, text) = (name.trim(), text.trim());
            let expr = Expr::parse(text).expect("appendix entry parses");
            let stored = qyoung_field::parse_poly(text).expect("appendix entry is a polynomial");
            let source = if name.starts_with('t') { Source::Footnote } else { Source::Appendix };
            NamedPolynomial { name: name.to_string(), text: text.to_string(), stored, source, expr }
        })
        .collect()
}

/// All 33 stored polynomials, `p1`..`p25` then `t1`..`t8`.
pub fn appendix_table() -> &'static [NamedPolynomial] {
    static TABLE: OnceLock<Vec<NamedPolynomial>> = OnceLock::new();
    TABLE.get_or_init(load)
}

pub fn lookup(name: &str) -> Option<&'static NamedPolynomial> {
    appendix_table().iter().find(|p| p.name == name)
}

pub(crate) fn expr(name: &str) -> Option<&'static Expr> {
    lookup(name).map(|p| &p.expr)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// A displayed formula that uses one or more stored names, paired with the
/// independently computed quantity it should equal.
#[derive(Clone, Debug)]
pub struct Citation<F> {
    pub label: String,
    pub display: &'static str,
    pub computed: F,
}

impl<F: Scalar> Citation<F> {
    pub fn cites(&self, name: &str) -> bool {
        Expr::parse(self.display).map(|e| e.symbols().iter().any(|s| s == name)).unwrap_or(false)
    }
}

#[derive(Clone, Debug)]
pub struct FormulaCheck {
    pub label: String,
    pub display: &'static str,
    pub status: Status,
    /// Displayed minus computed.
    pub residual: String,
}

#[derive(Clone, Debug)]
pub struct AppendixEntry {
    pub name: String,
    pub source: Source,
    pub stored: String,
    pub recomputed: String,
    /// Stored minus recomputed.
    pub residual: String,
    pub status: Status,
    pub checks: Vec<FormulaCheck>,
}

#[derive(Clone, Debug)]
pub struct AppendixReport {
    pub entries: Vec<AppendixEntry>,
}

impl AppendixReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AppendixEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entry(&self, name: &str) -> Option<&AppendixEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn matrix_citations<F: Scalar>(d: &DisplayedMatrix, m: &crate::linalg::FieldMatrix<F>, out: &mut Vec<Citation<F>>) {
    for &(i, j, text) in d.entries {
        out.push(Citation { label: format!("{}[{},{}]", d.name, i, j), display: text, computed: m.get(i - 1, j - 1).clone() });
    }
}

/// Solves `Y21_123 * G = 0` for the coordinates `unknowns` of `G`, the rest
/// given by `fixed`.
fn garnir_solve<F: Scalar>(
    h: &HeckeAlgebra<F>,
    y: &HeckeElement<F>,
    env: &Env<F>,
    fixed: &[&str],
    unknowns: &[usize],
) -> Result<HeckeElement<F>> {
    h.solve_for(|g| h.mul(y, g), &h.zero(), &eval_coords(env, fixed)?, unknowns)
}

/// Every displayed formula that uses a stored name, with its recomputation.
pub fn citations<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<Vec<Citation<F>>> {
    const WORDS: [&str; 5] = ["b1", "b2", "b12", "b21", "b121"];
    let data = RepresentationData::compute(h, env)?;
    let mut out = Vec::new();
    for (w, row) in WORDS_IN_S.iter().enumerate() {
        for (k, text) in row.iter().enumerate() {
            out.push(Citation {
                label: format!("{} in S, S{}", WORDS[w], k + 1),
                display: text,
                computed: data.words_in_s[w + 1][k].clone(),
            });
        }
    }
    matrix_citations(&M_B1, &data.m_b1, &mut out);
    matrix_citations(&M_B2, &data.m_b2, &mut out);
    for (d, m) in M_S.iter().zip(&data.m_s) {
        matrix_citations(d, m, &mut out);
    }

    let y = mixed_young(h, env, Numbering::N123)?.element;
    let g1 = garnir_solve(h, &y, env, &["0", "K2", "0", "K4", "K5", "K6"], &[0, 2])?;
    out.push(Citation { label: "XX1 b2".into(), display: "t1/q", computed: g1.coord(2).clone() });
    let g2 = garnir_solve(h, &y, env, &["K1", "0", "0", "-1/(q*(1+q))", "K5", "K6"], &[1, 2])?;
    out.push(Citation { label: "XX2 b1".into(), display: "t2/(q^2*(1+q))", computed: g2.coord(1).clone() });
    out.push(Citation { label: "XX2 b2".into(), display: "t3/(q^3*(1+q))", computed: g2.coord(2).clone() });
    let g3 = garnir_solve(h, &y, env, &["K1", "0", "0", "-(q-1)/(q^3+2*q^2+2*q+1)", "K5", "K6"], &[1, 2])?;
    out.push(Citation { label: "XX3 b1".into(), display: "t4/(q*(q^3+2*q^2+2*q+1))", computed: g3.coord(1).clone() });
    out.push(Citation { label: "XX3 b2".into(), display: "t5/(q^2*(q^3+2*q^2+2*q+1))", computed: g3.coord(2).clone() });
    let ag = h.alpha_q(&g1)?;
    for (k, word) in ["Id", "b1", "b2"].iter().enumerate() {
        out.push(Citation { label: format!("alpha_q(G) {word}"), display: ALPHA_G[k], computed: ag.coord(k).clone() });
    }
    out.retain(|c| Expr::parse(c.display).map(|e| e.symbols().iter().any(|s| lookup(s).is_some())).unwrap_or(false));
    Ok(out)
}

/// Compares every stored polynomial against recomputation.
pub fn verify_appendix<F: Scalar>(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<AppendixReport> {
    verify_appendix_with(h, env, &[])
}

/// As [`verify_appendix`], with some stored values replaced.
pub fn verify_appendix_with<F: Scalar>(
    h: &HeckeAlgebra<F>,
    env: &Env<F>,
    overrides: &[(&str, F)],
) -> Result<AppendixReport> {
    let cites = citations(h, env)?;
    let mut cenv = env.clone();
    for (name, v) in overrides {
        cenv.set(name, v.clone());
    }
    let mut displayed = Vec::with_capacity(cites.len());
    for c in &cites {
        displayed.push(cenv.eval(c.display)?);
    }
    let mut entries = Vec::new();
    for np in appendix_table() {
        let name = np.name.as_str();
        let stored = cenv.eval(name)?;
        let mut checks = Vec::new();
        let mut basis_idx = None;
        for (k, c) in cites.iter().enumerate() {
            if !c.cites(name) {
                continue;
            }
            let status = if displayed[k] == c.computed { Status::Pass } else { Status::Fail };
            if basis_idx.is_none() || (status == Status::Fail && checks.iter().all(|x: &FormulaCheck| x.status == Status::Pass)) {
                basis_idx = Some(k);
            }
            checks.push(FormulaCheck {
                label: c.label.clone(),
                display: c.display,
                status,
                residual: displayed[k].sub(&c.computed).to_string(),
            });
        }
        let k = basis_idx.ok_or_else(|| CoreError::UnknownName(format!("{name} is not cited by any formula")))?;
        let recomputed = recompute(&cenv, name, &stored, cites[k].display, &displayed[k], &cites[k].computed)?;
        let status = if checks.iter().all(|c| c.status == Status::Pass) { Status::Pass } else { Status::Fail };
        entries.push(AppendixEntry {
            name: name.to_string(),
            source: np.source,
            stored: stored.to_string(),
            residual: stored.sub(&recomputed).to_string(),
            recomputed: recomputed.to_string(),
            status,
            checks,
        });
    }
    Ok(AppendixReport { entries })
}

/// The value of `name` that makes `display` equal `computed`, using that the
/// display is a monomial in `name`.
fn recompute<F: Scalar>(env: &Env<F>, name: &str, stored: &F, display: &str, shown: &F, computed: &F) -> Result<F> {
    if shown == computed {
        return Ok(stored.clone());
    }
    let two = F::from_i64(2);
    let doubled = env.clone().with(name, stored.mul(&two)).eval(display)?;
    if shown.is_zero() || computed.is_zero() {
        return Err(CoreError::Degenerate(format!("cannot solve `{display}` for {name}")));
    }
    if doubled == shown.mul(&two) {
        Ok(stored.mul(computed).div(shown)?)
    } else if doubled.mul(&two) == *shown {
        Ok(stored.mul(shown).div(computed)?)
    } else {
        Err(CoreError::Degenerate(format!("`{display}` is not linear in {name}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qyoung_field::parse_poly;

    #[test]
    fn table_shape() {
        let t = appendix_table();
        assert_eq!(t.len(), 33);
        assert_eq!(t[0].name, "p1");
        assert_eq!(t[24].name, "p25");
        assert_eq!(t[32].name, "t8");
        assert_eq!(t.iter().filter(|p| p.source == Source::Footnote).count(), 8);
    }

    #[test]
    fn transcribed_entries() {
        let p3 = lookup("p3").unwrap();
        assert_eq!(p3.stored, parse_poly("-K6*q^3 - K4*q^3 + K6*q^2 + K5*q^2 + K6*q + K5*q - K6 - K4").unwrap());
        let t1 = lookup("t1").unwrap();
        assert_eq!(t1.stored, parse_poly("K6*q^2 + K4*q^2 - K5*q - K4*q - K6*q + K2 + K4").unwrap());
        assert!(lookup("p26").is_none());
    }
}
