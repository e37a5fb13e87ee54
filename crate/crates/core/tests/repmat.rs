use std::sync::OnceLock;

use qyoung_core::formula::Env;
use qyoung_core::hecke::HeckeAlgebra;
use qyoung_core::linalg::{FieldMatrix, UniPoly};
use qyoung_core::repmat::*;
use qyoung_core::young::eval_coords;
use qyoung_field::{parse_rational_function as rf, RationalFunction, Scalar};

type RF = RationalFunction;

fn data() -> &'static (HeckeAlgebra<RF>, Env<RF>, RepresentationData<RF>) {
    static DATA: OnceLock<(HeckeAlgebra<RF>, Env<RF>, RepresentationData<RF>)> = OnceLock::new();
    DATA.get_or_init(|| {
        let h = HeckeAlgebra::new(3, RF::q()).unwrap();
        let env = Env::symbolic();
        let d = RepresentationData::compute(&h, &env).unwrap();
        (h, env, d)
    })
}

fn mismatches(m: &FieldMatrix<RF>, shown: &DisplayedMatrix, env: &Env<RF>) -> Vec<(usize, usize)> {
    let e = shown.eval(env).unwrap();
    let mut out = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if m.get(i, j) != e.get(i, j) {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

#[test]
fn basis_is_independent() {
    let (_, _, d) = data();
    assert_eq!(d.basis.to_words().rank(), 6);
    assert_eq!(FieldMatrix::<RF>::identity(6).rank(), 6);
}

#[test]
fn word_expansions_match() {
    let (h, env, d) = data();
    assert_eq!(d.words_in_s[0], env.eval_all(&ONE_IN_S).unwrap());
    for (w, shown) in WORDS_IN_S.iter().enumerate() {
        assert_eq!(d.words_in_s[w + 1], env.eval_all(shown).unwrap(), "word {}", w + 1);
    }
    for w in 0..6 {
        assert_eq!(d.basis.combine(&d.words_in_s[w]), h.basis(w));
    }
    let back = d.basis.from_words(h).unwrap();
    assert_eq!(d.basis.to_words().mul(&back), FieldMatrix::identity(6));
}

#[test]
fn generator_matrices() {
    let (_, env, d) = data();
    assert!(mismatches(&d.m_b1, &M_B1, env).is_empty());
    assert_eq!(mismatches(&d.m_b2, &M_B2, env), [(3, 3)]);
    assert_eq!(d.m_b2.get(2, 2), &rf("(K4*q^4+2*K4*q^3+2*K4*q^2+K4*q+1)/(q+1)").unwrap());
    assert_eq!(d.m_b1.get(5, 5), &rf("-q").unwrap());
}

#[test]
fn generator_matrix_invariants() {
    let (_, _, d) = data();
    let q = RF::q();
    let det = rf("-q^3").unwrap();
    let x_minus_1 = UniPoly::linear(&RF::one());
    let x_plus_q = UniPoly::linear(&q.neg());
    let minimal = x_minus_1.mul(&x_plus_q);
    let characteristic = x_minus_1.pow(3).mul(&x_plus_q.pow(3));
    for m in [&d.m_b1, &d.m_b2] {
        assert_eq!(m.trace(), rf("3*(1-q)").unwrap());
        assert_eq!(m.det(), det);
        assert_eq!(m.minpoly(), minimal);
        assert_eq!(m.charpoly(), characteristic);
        assert!(m.charpoly().rem_monic(&m.minpoly()).coeffs().is_empty());
        let quad = m.mul(m).sub(&m.scale(&RF::one().sub(&q))).sub(&FieldMatrix::identity(6).scale(&q));
        assert!(quad.is_zero());
        for i in 0..6 {
            for j in 0..6 {
                let block = |k: usize| [0, 1, 1, 2, 2, 3][k];
                if block(i) != block(j) {
                    assert!(m.get(i, j).is_zero(), "({}, {})", i + 1, j + 1);
                }
            }
        }
    }
    assert_eq!(FieldMatrix::<RF>::identity(6).minpoly(), x_minus_1);
}

#[test]
fn basis_element_matrices() {
    let (_, env, d) = data();
    for (m, shown) in d.m_s.iter().zip(M_S.iter()) {
        assert!(mismatches(m, shown, env).is_empty(), "{}", shown.name);
    }
}

#[test]
fn representation_is_multiplicative() {
    let (h, _, d) = data();
    let mats: Vec<FieldMatrix<RF>> = (0..6).map(|w| d.basis.left_regular_matrix(h, &h.basis(w)).unwrap()).collect();
    for i in 0..6 {
        for j in 0..6 {
            let xy = h.mul(&h.basis(i), &h.basis(j));
            let lhs = d.basis.left_regular_matrix(h, &xy).unwrap();
            assert_eq!(lhs, mats[i].mul(&mats[j]), "({i}, {j})");
        }
    }
}

#[test]
fn degenerate_parameters_are_rejected() {
    let h = HeckeAlgebra::new(3, RF::q()).unwrap();
    let env = Env::symbolic().with("K2", RF::zero()).with("K4", RF::zero()).with("K5", RF::zero()).with("K6", RF::zero());
    assert!(YoungBasis::new(&h, &env).is_err());
    assert!(eval_coords(&Env::symbolic(), &["p3", "0", "0", "0", "0", "0"]).is_ok());
}
