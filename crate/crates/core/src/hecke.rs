//! The Hecke algebras H(2, q) and H(3, q) inside Cl(B, V).
//!
//! Generators are `b_i = e_i ^ e_{i+4}` in the algebra on `build_b(4, q)`.
//! Elements are coordinate vectors over the word basis
//! `[1, b1]` or `[1, b1, b2, b12, b21, b121]`.

use std::fmt;

use qyoung_field::{Binding, RationalFunction, Scalar, Var};

use crate::clifford::{build_b, Blade, CliffordAlgebra, Multivector};
use crate::error::{CoreError, Result};
use crate::linalg::FieldMatrix;

pub const WORDS3: [&str; 6] = ["Id", "b1", "b2", "b12", "b21", "b121"];
pub const WORDS2: [&str; 2] = ["Id", "b1"];
const WORD_LETTERS: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];

/// The Clifford generator `e_i ^ e_{i+n}` in the algebra on `build_b(n, q)`.
pub fn generator<F: Scalar>(cl: &CliffordAlgebra<F>, i: usize) -> Result<Multivector<F>> {
    let n = cl.dim() / 2;
    if i == 0 || i >= n {
        return Err(CoreError::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    cl.e(i)?.wedge(&cl.e(i + n)?)
}

#[derive(Clone, Debug)]
pub struct RelationCheck<F> {
    pub name: String,
    pub residual: Multivector<F>,
}

impl<F: Scalar> RelationCheck<F> {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Quadratic, far-commutation and braid relations of `b_1..b_{n-1}` in the
/// algebra on `build_b(n, q)`.
pub fn check_relations<F: Scalar>(n: usize, q: &F) -> Result<Vec<RelationCheck<F>>> {
    if !(2..=4).contains(&n) {
        return Err(CoreError::UnsupportedRank(n));
    }
    let cl = CliffordAlgebra::new(build_b(n, q));
    let dim = cl.dim();
    let b: Vec<Multivector<F>> = (1..n).map(|i| generator(&cl, i)).collect::<Result<_>>()?;
    let one = Multivector::one(dim);
    let mut out = Vec::new();
    for (k, bi) in b.iter().enumerate() {
        let sq = cl.cmul(bi, bi)?;
        let rhs = bi.scale(&F::one().sub(q)).add(&one.scale(q));
        out.push(RelationCheck { name: format!("quadratic b{}", k + 1), residual: sq.sub(&rhs) });
    }
    for i in 0..b.len() {
        for j in i + 2..b.len() {
            let r = cl.cmul(&b[i], &b[j])?.sub(&cl.cmul(&b[j], &b[i])?);
            out.push(RelationCheck { name: format!("commute b{} b{}", i + 1, j + 1), residual: r });
        }
    }
    for i in 0..b.len().saturating_sub(1) {
        let lhs = cl.cmul(&cl.cmul(&b[i], &b[i + 1])?, &b[i])?;
        let rhs = cl.cmul(&cl.cmul(&b[i + 1], &b[i])?, &b[i + 1])?;
        out.push(RelationCheck { name: format!("braid b{} b{}", i + 1, i + 2), residual: lhs.sub(&rhs) });
    }
    Ok(out)
}

/// Coordinates over the word basis.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<F> {
    coords: Vec<F>,
}

impl<F: Scalar> HeckeElement<F> {
    pub fn new(coords: Vec<F>) -> HeckeElement<F> {
        assert!(coords.len() == 2 || coords.len() == 6, "Hecke elements have 2 or 6 coordinates");
        HeckeElement { coords }
    }

    pub fn zero(len: usize) -> HeckeElement<F> {
        HeckeElement::new(vec![F::zero(); len])
    }

    pub fn unit(len: usize) -> HeckeElement<F> {
        HeckeElement::basis(len, 0)
    }

    pub fn basis(len: usize, k: usize) -> HeckeElement<F> {
        let mut c = vec![F::zero(); len];
        c[k] = F::one();
        HeckeElement::new(c)
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &F {
        &self.coords[k]
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &HeckeElement<F>) -> HeckeElement<F> {
        HeckeElement::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, o: &HeckeElement<F>) -> HeckeElement<F> {
        HeckeElement::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn scale(&self, c: &F) -> HeckeElement<F> {
        HeckeElement::new(self.coords.iter().map(|a| a.mul(c)).collect())
    }

    pub fn neg(&self) -> HeckeElement<F> {
        HeckeElement::new(self.coords.iter().map(|a| a.neg()).collect())
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> HeckeElement<G> {
        HeckeElement::new(self.coords.iter().map(f).collect())
    }

    pub fn try_map<G: Scalar, E>(&self, f: impl Fn(&F) -> std::result::Result<G, E>) -> std::result::Result<HeckeElement<G>, E> {
        Ok(HeckeElement::new(self.coords.iter().map(f).collect::<std::result::Result<_, E>>()?))
    }

    pub fn word_names(&self) -> &'static [&'static str] {
        if self.coords.len() == 2 {
            &WORDS2
        } else {
            &WORDS3
        }
    }
}

impl<F: Scalar> fmt::Display for HeckeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &F)> = self
            .coords
            .iter()
            .zip(self.word_names())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| (n.to_string(), c))
            .collect();
        crate::clifford::fmt_linear(f, &terms)
    }
}

/// H(n, q) for n = 2 or 3, with structure constants computed in Cl(4, 4).
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<F> {
    n: usize,
    q: F,
    cl: CliffordAlgebra<F>,
    words: Vec<Multivector<F>>,
    table: Vec<Vec<HeckeElement<F>>>,
    rev: Vec<HeckeElement<F>>,
    pivot_blades: Vec<Blade>,
    pivot_inverse: FieldMatrix<F>,
}

impl<F: Scalar> HeckeAlgebra<F> {
    pub fn new(n: usize, q: F) -> Result<HeckeAlgebra<F>> {
        let len = match n {
            2 => 2,
            3 => 6,
            _ => return Err(CoreError::UnsupportedRank(n)),
        };
        let cl = CliffordAlgebra::new(build_b(4, &q));
        let gens = [generator(&cl, 1)?, generator(&cl, 2)?];
        let mut words = Vec::with_capacity(len);
        for letters in &WORD_LETTERS[..len] {
            let mut w = Multivector::one(cl.dim());
            for &l in *letters {
                w = cl.cmul(&w, &gens[l - 1])?;
            }
            words.push(w);
        }
        let mut blades: Vec<Blade> = words.iter().flat_map(|w| w.terms().map(|(b, _)| *b)).collect();
        blades.sort_unstable();
        blades.dedup();
        let full = FieldMatrix::from_fn(blades.len(), len, |i, j| words[j].coeff(blades[i]));
        let (_, pivot_rows) = full.transpose().rref();
        if pivot_rows.len() < len {
            return Err(CoreError::Degenerate("Hecke words are linearly dependent".into()));
        }
        let pivot_blades: Vec<Blade> = pivot_rows.iter().map(|&r| blades[r]).collect();
        let square = FieldMatrix::from_fn(len, len, |i, j| words[j].coeff(pivot_blades[i]));
        let pivot_inverse = square.inverse()?;
        let mut alg = HeckeAlgebra {
            n,
            q,
            cl,
            words,
            table: Vec::new(),
            rev: Vec::new(),
            pivot_blades,
            pivot_inverse,
        };
        let mut table = Vec::with_capacity(len);
        for i in 0..len {
            let mut row = Vec::with_capacity(len);
            for j in 0..len {
                let p = alg.cl.cmul(&alg.words[i], &alg.words[j])?;
                row.push(alg.to_hecke_coords(&p)?);
            }
            table.push(row);
        }
        let mut rev = Vec::with_capacity(len);
        for i in 0..len {
            let r = alg.cl.reverse(&alg.words[i])?;
            rev.push(alg.to_hecke_coords(&r)?);
        }
        alg.table = table;
        alg.rev = rev;
        Ok(alg)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn clifford(&self) -> &CliffordAlgebra<F> {
        &self.cl
    }

    /// Grassmann expansion of the k-th word.
    pub fn word(&self, k: usize) -> &Multivector<F> {
        &self.words[k]
    }

    pub fn word_length(&self, k: usize) -> u32 {
        WORD_LETTERS[k].len() as u32
    }

    pub fn word_names(&self) -> &'static [&'static str] {
        if self.n == 2 {
            &WORDS2
        } else {
            &WORDS3
        }
    }

    pub fn one(&self) -> HeckeElement<F> {
        HeckeElement::unit(self.len())
    }

    pub fn zero(&self) -> HeckeElement<F> {
        HeckeElement::zero(self.len())
    }

    pub fn basis(&self, k: usize) -> HeckeElement<F> {
        HeckeElement::basis(self.len(), k)
    }

    pub fn scalar(&self, c: F) -> HeckeElement<F> {
        self.one().scale(&c)
    }

    /// The generator `b_i` as a Hecke element.
    pub fn gen(&self, i: usize) -> Result<HeckeElement<F>> {
        if i == 0 || i >= self.n {
            return Err(CoreError::IndexOutOfRange { index: i, max: self.n - 1 });
        }
        Ok(self.basis(i))
    }

    pub fn from_coords(&self, coords: Vec<F>) -> Result<HeckeElement<F>> {
        if coords.len() != self.len() {
            return Err(CoreError::DimensionMismatch(coords.len(), self.len()));
        }
        Ok(HeckeElement::new(coords))
    }

    pub fn to_multivector(&self, x: &HeckeElement<F>) -> Multivector<F> {
        let mut out = Multivector::zero(self.cl.dim());
        for (c, w) in x.coords.iter().zip(&self.words) {
            out.add_scaled(w, c);
        }
        out
    }

    /// Coordinates of `x` over the word basis; fails with the residual if
    /// `x` is not in the span.
    pub fn to_hecke_coords(&self, x: &Multivector<F>) -> Result<HeckeElement<F>> {
        if x.dim() != self.cl.dim() {
            return Err(CoreError::DimensionMismatch(x.dim(), self.cl.dim()));
        }
        let rhs: Vec<F> = self.pivot_blades.iter().map(|b| x.coeff(*b)).collect();
        let coords = self.pivot_inverse.mul_vec(&rhs);
        let h = HeckeElement::new(coords);
        let residual = x.sub(&self.to_multivector(&h));
        if !residual.is_zero() {
            return Err(CoreError::NotInSubalgebra { residual: residual.to_string() });
        }
        Ok(h)
    }

    fn check(&self, x: &HeckeElement<F>) {
        assert_eq!(x.len(), self.len(), "element from a different Hecke algebra");
    }

    pub fn mul(&self, x: &HeckeElement<F>, y: &HeckeElement<F>) -> HeckeElement<F> {
        self.check(x);
        self.check(y);
        let len = self.len();
        let mut out = vec![F::zero(); len];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, t) in self.table[i][j].coords.iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].add(&c.mul(t));
                    }
                }
            }
        }
        HeckeElement::new(out)
    }

    pub fn mul_all(&self, xs: &[&HeckeElement<F>]) -> HeckeElement<F> {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &HeckeElement<F>, e: u32) -> HeckeElement<F> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Reversion, restricted to the Hecke span.
    pub fn rev(&self, x: &HeckeElement<F>) -> HeckeElement<F> {
        self.check(x);
        let mut out = self.zero();
        for (c, r) in x.coords.iter().zip(&self.rev) {
            if !c.is_zero() {
                out = out.add(&r.scale(c));
            }
        }
        out
    }

    /// `(-1/q)^s` times the reversion of each length-s word, extended linearly.
    pub fn alpha_q(&self, x: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        self.check(x);
        let m = self.q.inv()?.neg();
        let mut out = self.zero();
        for (k, (c, r)) in x.coords.iter().zip(&self.rev).enumerate() {
            if !c.is_zero() {
                out = out.add(&r.scale(&c.mul(&m.pow(self.word_length(k)))));
            }
        }
        Ok(out)
    }

    /// Matrix of `y -> x*y` over the word basis.
    pub fn left_matrix(&self, x: &HeckeElement<F>) -> FieldMatrix<F> {
        let cols: Vec<Vec<F>> = (0..self.len()).map(|j| self.mul(x, &self.basis(j)).coords).collect();
        FieldMatrix::from_columns(&cols)
    }

    /// Two-sided inverse.
    pub fn inverse(&self, x: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        let l = self.left_matrix(x);
        let y = match l.solve(&self.one().coords) {
            Ok(v) => HeckeElement::new(v),
            Err(_) => return Err(CoreError::NotInvertible),
        };
        if self.mul(x, &y) != self.one() || self.mul(&y, x) != self.one() {
            return Err(CoreError::NotInvertible);
        }
        Ok(y)
    }

    /// Whether `alpha_q(x) * x = 1`.
    pub fn gamma_q_member(&self, x: &HeckeElement<F>) -> Result<bool> {
        Ok(self.mul(&self.alpha_q(x)?, x) == self.one())
    }

    /// The algebra map `b_i -> -b_i`.
    pub fn kw_transform(&self, x: &HeckeElement<F>) -> HeckeElement<F> {
        self.check(x);
        HeckeElement::new(
            x.coords
                .iter()
                .enumerate()
                .map(|(k, c)| if self.word_length(k) % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// Solves `f(x) = target` for the coordinates `unknowns` of `x`, taking the
    /// remaining coordinates from `fixed`. `f` must be linear.
    pub fn solve_for(
        &self,
        f: impl Fn(&HeckeElement<F>) -> HeckeElement<F>,
        target: &HeckeElement<F>,
        fixed: &HeckeElement<F>,
        unknowns: &[usize],
    ) -> Result<HeckeElement<F>> {
        let mut base = fixed.clone();
        for &k in unknowns {
            base.coords[k] = F::zero();
        }
        let rhs = target.sub(&f(&base));
        let cols: Vec<Vec<F>> = unknowns.iter().map(|&k| f(&self.basis(k)).coords).collect();
        let sol = FieldMatrix::from_columns(&cols).solve(&rhs.coords)?;
        for (&k, v) in unknowns.iter().zip(sol) {
            base.coords[k] = v;
        }
        Ok(base)
    }

    /// Linear system in unknown coordinates: column j holds `f(w_j)`.
    pub fn linear_map_matrix(&self, f: impl Fn(&HeckeElement<F>) -> HeckeElement<F>) -> FieldMatrix<F> {
        let cols: Vec<Vec<F>> = (0..self.len()).map(|j| f(&self.basis(j)).coords).collect();
        FieldMatrix::from_columns(&cols)
    }
}

/// Substitutes `q := 1` coordinatewise; fails on a pole at `q = 1`.
pub fn limit_q1(x: &HeckeElement<RationalFunction>) -> Result<HeckeElement<RationalFunction>> {
    let b = Binding::new().with_int(Var::Q, 1);
    Ok(x.try_map(|c| c.substitute(&b))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qyoung_field::parse_rational_function as rf;

    type RF = RationalFunction;

    fn h3() -> HeckeAlgebra<RF> {
        HeckeAlgebra::new(3, RF::q()).unwrap()
    }

    #[test]
    fn b1_inverse_is_alpha() {
        let h = h3();
        let b1 = h.gen(1).unwrap();
        let inv = h.inverse(&b1).unwrap();
        assert_eq!(inv, h.alpha_q(&b1).unwrap());
        assert_eq!(inv.coord(0), &rf("(q-1)/q").unwrap());
        assert_eq!(inv.coord(1), &rf("1/q").unwrap());
        assert_eq!(h.inverse(&h.zero()), Err(CoreError::NotInvertible));
    }

    #[test]
    fn odd_element_rejected() {
        let h = h3();
        let e1 = h.clifford().e(1).unwrap();
        assert!(matches!(h.to_hecke_coords(&e1), Err(CoreError::NotInSubalgebra { .. })));
    }

    #[test]
    fn generator_bounds() {
        let cl = CliffordAlgebra::hecke_form(4, &RF::q());
        assert_eq!(generator(&cl, 1).unwrap().to_string(), "e1^e5");
        assert!(matches!(generator(&cl, 4), Err(CoreError::IndexOutOfRange { .. })));
    }

    #[test]
    fn display_uses_word_names() {
        let h = h3();
        let x = h.alpha_q(&h.gen(1).unwrap()).unwrap();
        assert_eq!(x.to_string(), "(q - 1)/q*Id + 1/q*b1");
    }
}
