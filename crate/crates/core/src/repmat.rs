//! The Young basis `S` of H(3, q) and the left regular representation in it.
//!
//! `S = [Y3, Y21_123, G*Y21_123, alpha_q(G)*Y21_132, Y21_132, Y111]` with `G`
//! the Garnir element `XX1`. Coordinates are found blockwise: `x*Y3` and
//! `x*Y111` are multiples of those idempotents, `x*Y21_123` lies in the span
//! of `S2, S3` and `x*Y21_132` in the span of `S4, S5`.

use qyoung_field::Scalar;

use crate::error::{CoreError, Result};
use crate::formula::Env;
use crate::garnir::XX1;
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::linalg::FieldMatrix;
use crate::young::{eval_coords, mixed_young, young_full3, Coords, Numbering};

pub const ONE_IN_S: Coords = ["1", "1", "0", "0", "1", "1"];

/// Displayed S-coordinates of `b1, b2, b12, b21, b121`.
pub const WORDS_IN_S: [Coords; 5] = [
    [
        "1",
        "(K4*q^3+2*K4*q^2-q^2+2*K4*q+K4)/(1+q)",
        "p1*q/(p2*(1+q))",
        "q^2/p3",
        "q*(-K4*q-K2*q+K6+K5)/p4",
        "-q",
    ],
    ["1", "-q*p5/(1+q)", "-p6*q/(p2*(1+q))", "-q^3/p3", "-p7/p4", "-q"],
    ["1", "p8/(1+q)", "p9*q/(p2*(1+q))", "(1-q+q^2)*q^2/p3", "-q*p10/p4", "q^2"],
    ["1", "-q*p5/(1+q)", "-p11*q^2/(p2*(1+q))", "-q^3/p3", "-q^2*(-K4*q-K2*q+K6+K5)/p4", "q^2"],
    ["1", "p13*q/(1+q)", "p12*q^2/(p2*(1+q))", "(q-1)*q^3/p3", "-q^2*p14/p4", "-q^3"],
];

/// A displayed 6x6 matrix given by its nonzero entries, 1-based.
#[derive(Clone, Copy, Debug)]
pub struct DisplayedMatrix {
    pub name: &'static str,
    pub entries: &'static [(usize, usize, &'static str)],
}

impl DisplayedMatrix {
    pub fn get(&self, i: usize, j: usize) -> &'static str {
        self.entries.iter().find(|e| e.0 == i && e.1 == j).map_or("0", |e| e.2)
    }

    pub fn eval<F: Scalar>(&self, env: &Env<F>) -> Result<FieldMatrix<F>> {
        let mut m = FieldMatrix::zeros(6, 6);
        for &(i, j, text) in self.entries {
            m.set(i - 1, j - 1, env.eval(text)?);
        }
        Ok(m)
    }
}

pub const M_B1: DisplayedMatrix = DisplayedMatrix {
    name: "M_b1",
    entries: &[
        (1, 1, "1"),
        (2, 2, "p15/(1+q)"),
        (2, 3, "-p16/(q*(1+q))"),
        (3, 2, "q*p1/p17"),
        (3, 3, "-p18/(1+q)"),
        (4, 4, "-p19/p4"),
        (4, 5, "q^2/p3"),
        (5, 4, "-p20/(q*p4)"),
        (5, 5, "q*p21/p4"),
        (6, 6, "-q"),
    ],
};

pub const M_B2: DisplayedMatrix = DisplayedMatrix {
    name: "M_b2",
    entries: &[
        (1, 1, "1"),
        (2, 2, "-q*p5/(1+q)"),
        (2, 3, "p16/(1+q)"),
        (3, 2, "-q*p6/p17"),
        (3, 3, "p21/(1+q)"),
        (4, 4, "q*p22/p4"),
        (4, 5, "-q^3/p3"),
        (5, 4, "-p23/(q*p4)"),
        (5, 5, "-p7/p4"),
        (6, 6, "-q"),
    ],
};

pub const M_S: [DisplayedMatrix; 6] = [
    DisplayedMatrix { name: "M_S1", entries: &[(1, 1, "1")] },
    DisplayedMatrix { name: "M_S2", entries: &[(2, 2, "1"), (4, 4, "1"), (5, 4, "p24/q^2")] },
    DisplayedMatrix { name: "M_S3", entries: &[(3, 2, "1"), (5, 4, "-p25/q^3")] },
    DisplayedMatrix {
        name: "M_S4",
        entries: &[(2, 3, "-p25/q^3"), (3, 3, "-p24/q^2"), (4, 4, "-p24/q^2"), (4, 5, "1")],
    },
    DisplayedMatrix { name: "M_S5", entries: &[(3, 3, "1"), (5, 4, "-p24/q^2"), (5, 5, "1")] },
    DisplayedMatrix { name: "M_S6", entries: &[(6, 6, "1")] },
];

#[derive(Clone, Debug)]
pub struct YoungBasis<F> {
    elements: Vec<HeckeElement<F>>,
    block123: FieldMatrix<F>,
    block132: FieldMatrix<F>,
}

impl<F: Scalar> YoungBasis<F> {
    /// Builds `S` with the parameters of `env`; fails if the six elements are
    /// dependent there.
    pub fn new(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<YoungBasis<F>> {
        let (y3, y111) = young_full3(h, env)?;
        let y123 = mixed_young(h, env, Numbering::N123)?.element;
        let y132 = mixed_young(h, env, Numbering::N132)?.element;
        let g = eval_coords(env, &XX1)?;
        let gy = h.mul(&g, &y123);
        let ay = h.mul(&h.alpha_q(&g)?, &y132);
        let block123 = FieldMatrix::from_columns(&[y123.coords().to_vec(), gy.coords().to_vec()]);
        let block132 = FieldMatrix::from_columns(&[ay.coords().to_vec(), y132.coords().to_vec()]);
        if block123.rank() < 2 || block132.rank() < 2 {
            return Err(CoreError::Degenerate("Young basis blocks are dependent".into()));
        }
        let basis = YoungBasis { elements: vec![y3.element, y123, gy, ay, y132, y111.element], block123, block132 };
        for w in 0..6 {
            let x = h.basis(w);
            let c = basis.coords(h, &x)?;
            if basis.combine(&c) != x {
                return Err(CoreError::Degenerate("Young basis does not span H(3)".into()));
            }
        }
        Ok(basis)
    }

    pub fn elements(&self) -> &[HeckeElement<F>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &HeckeElement<F> {
        &self.elements[i]
    }

    /// `sum c_i S_i`.
    pub fn combine(&self, c: &[F]) -> HeckeElement<F> {
        let mut out = HeckeElement::zero(6);
        for (ci, s) in c.iter().zip(&self.elements) {
            out = out.add(&s.scale(ci));
        }
        out
    }

    /// S-coordinates of `x`.
    pub fn coords(&self, h: &HeckeAlgebra<F>, x: &HeckeElement<F>) -> Result<Vec<F>> {
        let c1 = multiple_of(&h.mul(x, &self.elements[0]), &self.elements[0])?;
        let c6 = multiple_of(&h.mul(x, &self.elements[5]), &self.elements[5])?;
        let c23 = self.block123.solve(h.mul(x, &self.elements[1]).coords())?;
        let c45 = self.block132.solve(h.mul(x, &self.elements[4]).coords())?;
        Ok(vec![c1, c23[0].clone(), c23[1].clone(), c45[0].clone(), c45[1].clone(), c6])
    }

    /// Column `j` holds the S-coordinates of `x * S_j`.
    pub fn left_regular_matrix(&self, h: &HeckeAlgebra<F>, x: &HeckeElement<F>) -> Result<FieldMatrix<F>> {
        let cols = self.elements.iter().map(|s| self.coords(h, &h.mul(x, s))).collect::<Result<Vec<_>>>()?;
        Ok(FieldMatrix::from_columns(&cols))
    }

    /// Column `j` holds the word coordinates of `S_j`.
    pub fn to_words(&self) -> FieldMatrix<F> {
        let cols: Vec<Vec<F>> = self.elements.iter().map(|s| s.coords().to_vec()).collect();
        FieldMatrix::from_columns(&cols)
    }

    /// Column `w` holds the S-coordinates of the `w`-th word.
    pub fn from_words(&self, h: &HeckeAlgebra<F>) -> Result<FieldMatrix<F>> {
        let cols = (0..6).map(|w| self.coords(h, &h.basis(w))).collect::<Result<Vec<_>>>()?;
        Ok(FieldMatrix::from_columns(&cols))
    }
}

/// Everything the displayed expansions and matrices are compared against.
#[derive(Clone, Debug)]
pub struct RepresentationData<F> {
    pub basis: YoungBasis<F>,
    /// S-coordinates of `1, b1, b2, b12, b21, b121`.
    pub words_in_s: Vec<Vec<F>>,
    pub m_b1: FieldMatrix<F>,
    pub m_b2: FieldMatrix<F>,
    pub m_s: Vec<FieldMatrix<F>>,
}

impl<F: Scalar> RepresentationData<F> {
    pub fn compute(h: &HeckeAlgebra<F>, env: &Env<F>) -> Result<RepresentationData<F>> {
        let basis = YoungBasis::new(h, env)?;
        let words_in_s = (0..6).map(|w| basis.coords(h, &h.basis(w))).collect::<Result<Vec<_>>>()?;
        let m_b1 = basis.left_regular_matrix(h, &h.basis(1))?;
        let m_b2 = basis.left_regular_matrix(h, &h.basis(2))?;
        let m_s = basis.elements().iter().map(|s| basis.left_regular_matrix(h, s)).collect::<Result<Vec<_>>>()?;
        Ok(RepresentationData { basis, words_in_s, m_b1, m_b2, m_s })
    }
}

/// `c` with `x = c * y`, for nonzero `y`.
fn multiple_of<F: Scalar>(x: &HeckeElement<F>, y: &HeckeElement<F>) -> Result<F> {
    let k = y.coords().iter().position(|c| !c.is_zero()).ok_or(CoreError::Degenerate("zero basis element".into()))?;
    let c = x.coord(k).div(y.coord(k))?;
    if &y.scale(&c) != x {
        return Err(CoreError::NoSolution);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qyoung_field::{rational, Binding, Rational, Var};

    fn point() -> (HeckeAlgebra<Rational>, Env<Rational>) {
        let b = Binding::new()
            .with_int(Var::Q, 3)
            .with(Var::K2, rational(1, 2))
            .with_int(Var::K4, 5)
            .with(Var::K5, rational(-2, 3))
            .with_int(Var::K6, 7);
        (HeckeAlgebra::new(3, rational(3, 1)).unwrap(), Env::numeric(&b))
    }

    #[test]
    fn unit_coordinates() {
        let (h, env) = point();
        let s = YoungBasis::new(&h, &env).unwrap();
        let c = s.coords(&h, &h.one()).unwrap();
        assert_eq!(c, env.eval_all(&ONE_IN_S).unwrap());
        assert_eq!(s.to_words().rank(), 6);
    }

    #[test]
    fn b1_matrix_invariants_at_a_point() {
        let (h, env) = point();
        let s = YoungBasis::new(&h, &env).unwrap();
        let m = s.left_regular_matrix(&h, &h.basis(1)).unwrap();
        assert_eq!(m.trace(), rational(-6, 1));
        assert_eq!(m.det(), rational(-27, 1));
    }

    #[test]
    fn displayed_matrix_lookup() {
        assert_eq!(M_B1.get(6, 6), "-q");
        assert_eq!(M_B1.get(1, 6), "0");
        assert_eq!(M_S[1].get(5, 4), "p24/q^2");
    }
}
