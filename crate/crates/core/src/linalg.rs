//! Dense matrices over a [`Scalar`] field: elimination, rank, nullspace,
//! solving, determinants and characteristic/minimal polynomials.

use std::fmt;

use qyoung_field::Scalar;

use crate::error::{CoreError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> FieldMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> FieldMatrix<F> {
        FieldMatrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> FieldMatrix<F> {
        FieldMatrix::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    /// Entries from `f(row, col)`, 0-based.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> FieldMatrix<F> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FieldMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> FieldMatrix<F> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        FieldMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(cols: &[Vec<F>]) -> FieldMatrix<F> {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        FieldMatrix::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> FieldMatrix<G> {
        FieldMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> FieldMatrix<F> {
        FieldMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &FieldMatrix<F>) -> FieldMatrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        FieldMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &FieldMatrix<F>) -> FieldMatrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        FieldMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn scale(&self, c: &F) -> FieldMatrix<F> {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, other: &FieldMatrix<F>) -> FieldMatrix<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        FieldMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        (0..self.rows).fold(F::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    fn pivot_row(&self, col: usize, from: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&i| !self.get(i, col).is_zero())
            .min_by_key(|&i| self.get(i, col).size_hint())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the pivot
    /// columns, the number of row swaps and the reduced matrix.
    pub fn bareiss(&self) -> (Vec<usize>, usize, FieldMatrix<F>) {
        let mut m = self.clone();
        let mut prev = F::one();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = m.pivot_row(c, r) else { continue };
            if p != r {
                m.swap_rows(p, r);
                swaps += 1;
            }
            let piv = m.get(r, c).clone();
            for i in r + 1..m.rows {
                let lead = m.get(i, c).clone();
                for j in c + 1..m.cols {
                    let v = piv.mul(m.get(i, j)).sub(&lead.mul(m.get(r, j)));
                    let v = v.div(&prev).expect("Bareiss division is exact");
                    m.set(i, j, v);
                }
                m.set(i, c, F::zero());
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (pivots, swaps, m)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0.len()
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return F::one();
        }
        let (pivots, swaps, m) = self.bareiss();
        if pivots.len() < n {
            return F::zero();
        }
        let d = m.get(n - 1, n - 1).clone();
        if swaps % 2 == 1 {
            d.neg()
        } else {
            d
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (FieldMatrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = m.pivot_row(c, r) else { continue };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = m.get(r, f).neg();
                }
                v
            })
            .collect()
    }

    /// One solution of `M x = b`, free variables set to zero.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = FieldMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(CoreError::NoSolution);
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m.get(r, self.cols).clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<FieldMatrix<F>> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = FieldMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(CoreError::NotInvertible);
        }
        Ok(FieldMatrix::from_fn(n, n, |i, j| m.get(i, n + j).clone()))
    }

    pub fn pow(&self, e: u32) -> FieldMatrix<F> {
        let mut out = FieldMatrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `det(x I - M)` by Berkowitz's division-free algorithm.
    pub fn charpoly(&self) -> UniPoly<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut vect: Vec<F> = vec![F::one()];
        for r in 0..n {
            let mut t = vec![F::one(), self.get(r, r).neg()];
            let mut v: Vec<F> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let mut dot = F::zero();
                for (k, vk) in v.iter().enumerate() {
                    dot = dot.add(&self.get(r, k).mul(vk));
                }
                t.push(dot.neg());
                v = (0..r)
                    .map(|i| {
                        let mut acc = F::zero();
                        for (k, vk) in v.iter().enumerate() {
                            acc = acc.add(&self.get(i, k).mul(vk));
                        }
                        acc
                    })
                    .collect();
            }
            let mut next = vec![F::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in vect.iter().enumerate() {
                    if j <= i && i - j < t.len() {
                        *slot = slot.add(&t[i - j].mul(vj));
                    }
                }
            }
            vect = next;
        }
        vect.reverse();
        UniPoly::new(vect)
    }

    /// Minimal polynomial from the first linear dependence among `I, M, M^2, ...`.
    pub fn minpoly(&self) -> UniPoly<F> {
        assert!(self.is_square());
        let n = self.rows;
        let flat = |m: &FieldMatrix<F>| m.data.clone();
        let mut powers = vec![flat(&FieldMatrix::identity(n))];
        let mut cur = FieldMatrix::identity(n);
        for k in 1..=n {
            cur = cur.mul(self);
            let target = flat(&cur);
            let basis = FieldMatrix::from_columns(&powers);
            if let Ok(c) = basis.solve(&target) {
                let mut coeffs: Vec<F> = c.iter().map(|x| x.neg()).collect();
                coeffs.push(F::one());
                debug_assert_eq!(coeffs.len(), k + 1);
                return UniPoly::new(coeffs);
            }
            powers.push(target);
        }
        unreachable!("Cayley-Hamilton bounds the degree")
    }
}

impl<F: Scalar> fmt::Display for FieldMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Univariate polynomial in `x`, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> UniPoly<F> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// `x - root`.
    pub fn linear(root: &F) -> UniPoly<F> {
        UniPoly::new(vec![root.neg(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &UniPoly<F>) -> UniPoly<F> {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UniPoly<F> {
        let mut out = UniPoly::new(vec![F::one()]);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Remainder of division by a monic polynomial.
    pub fn rem_monic(&self, d: &UniPoly<F>) -> UniPoly<F> {
        let dd = d.degree().expect("nonzero divisor");
        assert!(d.coeffs[dd].is_one(), "divisor must be monic");
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let lead = r.pop().expect("nonempty");
            let shift = r.len() - dd;
            for k in 0..dd {
                r[shift + k] = r[shift + k].sub(&lead.mul(&d.coeffs[k]));
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Evaluates at a matrix argument.
    pub fn eval_matrix(&self, m: &FieldMatrix<F>) -> FieldMatrix<F> {
        let n = m.rows();
        let mut acc = FieldMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&FieldMatrix::identity(n).scale(c));
        }
        acc
    }
}

impl<F: Scalar> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &F)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let name = match k {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                (name, c)
            })
            .collect();
        crate::clifford::fmt_linear(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qyoung_field::{rational, Rational};

    fn m(rows: &[&[i64]]) -> FieldMatrix<Rational> {
        FieldMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rational(x, 1)).collect()).collect())
    }

    #[test]
    fn rank_det_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.rank(), 3);
        assert_eq!(a.det(), rational(18, 1));
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai), FieldMatrix::identity(3));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.det(), rational(0, 1));
        assert_eq!(s.nullspace(), vec![vec![rational(-2, 1), rational(1, 1)]]);
        assert!(s.solve(&[rational(1, 1), rational(0, 1)]).is_err());
    }

    #[test]
    fn swapped_determinant_sign() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.det(), rational(-1, 1));
    }

    #[test]
    fn char_and_min_poly() {
        let a = m(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let x2 = UniPoly::linear(&rational(2, 1));
        let x3 = UniPoly::linear(&rational(3, 1));
        assert_eq!(a.charpoly(), x2.pow(2).mul(&x3));
        assert_eq!(a.minpoly(), x2.pow(2).mul(&x3));
        let id: FieldMatrix<Rational> = FieldMatrix::identity(6);
        assert_eq!(id.minpoly(), UniPoly::linear(&rational(1, 1)));
        assert_eq!(id.charpoly(), UniPoly::linear(&rational(1, 1)).pow(6));
        assert!(a.charpoly().eval_matrix(&a).is_zero());
        assert_eq!(a.charpoly().to_string(), "x^3 - 7*x^2 + 16*x - 12");
    }
}
