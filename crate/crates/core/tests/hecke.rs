use std::collections::BTreeMap;

use qyoung_core::clifford::Multivector;
use qyoung_core::hecke::{check_relations, generator, limit_q1, HeckeAlgebra, HeckeElement};
use qyoung_core::young::{c12, r12};
use qyoung_core::CoreError;
use qyoung_field::{parse_rational_function as rf, RationalFunction, Scalar};

type RF = RationalFunction;

fn h3() -> HeckeAlgebra<RF> {
    HeckeAlgebra::new(3, RF::q()).unwrap()
}

fn elem(coords: &[&str]) -> HeckeElement<RF> {
    HeckeElement::new(coords.iter().map(|c| rf(c).unwrap()).collect())
}

#[test]
fn relations_hold_for_n_2_3_4() {
    for (n, count) in [(2, 1), (3, 3), (4, 6)] {
        let checks = check_relations(n, &RF::q()).unwrap();
        assert_eq!(checks.len(), count, "n={n}");
        for c in &checks {
            assert!(c.passed(), "n={n} {}: {}", c.name, c.residual);
        }
    }
    let names: Vec<String> = check_relations(4, &RF::q()).unwrap().into_iter().map(|c| c.name).collect();
    assert!(names.contains(&"commute b1 b3".to_string()));
    assert!(matches!(check_relations(5, &RF::q()), Err(CoreError::UnsupportedRank(5))));
}

#[test]
fn generators() {
    let h = h3();
    let cl = h.clifford();
    assert_eq!(generator(cl, 1).unwrap().to_string(), "e1^e5");
    assert_eq!(generator(cl, 2).unwrap().to_string(), "e2^e6");
    assert!(matches!(generator(cl, 4), Err(CoreError::IndexOutOfRange { .. })));
    assert!(generator(cl, 0).is_err());
}

fn grassmann(terms: &[(&[usize], &str)]) -> Multivector<RF> {
    let mut m = Multivector::zero(8);
    for (idx, c) in terms {
        let blade = idx.iter().fold(0u32, |b, i| b | 1 << (i - 1));
        m.add_term(blade, &rf(c).unwrap());
    }
    m
}

#[test]
fn displayed_grassmann_expansions() {
    let h = h3();
    let b12 = grassmann(&[(&[], "-(1+q)"), (&[1, 6], "1"), (&[1, 2, 5, 6], "-1"), (&[2, 5], "1+q")]);
    let b21 = grassmann(&[(&[], "-q*(1+q)"), (&[1, 6], "1+q"), (&[1, 2, 5, 6], "-1"), (&[2, 5], "q")]);
    let b121 = grassmann(&[
        (&[1, 5], "q"),
        (&[], "-(1+2*q)"),
        (&[2, 6], "q"),
        (&[1, 6], "1"),
        (&[1, 2, 5, 6], "q-1"),
        (&[2, 5], "-(q^2-q-1)"),
    ]);
    assert_eq!(h.word(3), &b12);
    assert_eq!(h.word(4), &b21);
    assert_eq!(h.word(5), &b121);
    assert_eq!(h.to_hecke_coords(&b12).unwrap(), h.basis(3));
    assert_eq!(h.to_hecke_coords(&Multivector::one(8)).unwrap(), h.one());
    let e1 = h.clifford().e(1).unwrap();
    assert!(matches!(h.to_hecke_coords(&e1), Err(CoreError::NotInSubalgebra { .. })));
}

#[test]
fn coordinates_round_trip() {
    let h = h3();
    let x = elem(&["K1", "K2/q", "q^2", "0", "1/(1+q)", "K6-K5"]);
    assert_eq!(h.to_hecke_coords(&h.to_multivector(&x)).unwrap(), x);
}

#[test]
fn reversion_of_generators() {
    let h = h3();
    for i in 1..=2 {
        let b = h.gen(i).unwrap();
        assert_eq!(h.rev(&b), h.scalar(rf("1-q").unwrap()).sub(&b));
    }
}

#[test]
fn alpha_examples() {
    let h = h3();
    let b1 = h.basis(1);
    assert_eq!(h.alpha_q(&b1).unwrap(), elem(&["(q-1)/q", "1/q", "0", "0", "0", "0"]));
    assert_eq!(
        h.alpha_q(&h.basis(3)).unwrap(),
        elem(&["(1-2*q+q^2)/q^2", "(q-1)/q^2", "(q-1)/q^2", "0", "1/q^2", "0"])
    );
    let x = h.one().add(&b1);
    assert_eq!(h.alpha_q(&x).unwrap(), elem(&["(2*q-1)/q", "1/q", "0", "0", "0", "0"]));
    assert_eq!(h.alpha_q(&h.one()).unwrap(), h.one());
}

#[test]
fn alpha_is_reversed_product_on_words() {
    let h = h3();
    let letters: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];
    for (k, w) in letters.iter().enumerate() {
        let mut expect = h.one();
        for &i in w.iter().rev() {
            expect = h.mul(&expect, &h.alpha_q(&h.gen(i).unwrap()).unwrap());
        }
        let aw = h.alpha_q(&h.basis(k)).unwrap();
        assert_eq!(aw, expect, "word {k}");
        assert_eq!(h.mul(&aw, &h.basis(k)), h.one(), "versor inverse {k}");
    }
}

#[test]
fn inverses() {
    let h = h3();
    let b1 = h.basis(1);
    let x = h.one().add(&b1);
    let inv = h.inverse(&x).unwrap();
    assert_eq!(inv, elem(&["(q-2)/(2*(q-1))", "1/(2*(q-1))", "0", "0", "0", "0"]));
    assert_ne!(inv, h.alpha_q(&x).unwrap());
    assert_eq!(h.inverse(&b1).unwrap(), elem(&["(q-1)/q", "1/q", "0", "0", "0", "0"]));
    assert!(matches!(h.inverse(&h.zero()), Err(CoreError::NotInvertible)));
}

#[test]
fn gamma_membership() {
    let h = h3();
    assert!(h.gamma_q_member(&h.basis(1)).unwrap());
    assert!(h.gamma_q_member(&h.basis(3)).unwrap());
    assert!(h.gamma_q_member(&h.basis(5)).unwrap());
    assert!(!h.gamma_q_member(&h.one().add(&h.basis(1))).unwrap());
}

#[test]
fn kw_transform() {
    let h = h3();
    let q = RF::q();
    let g1 = h.kw_transform(&h.basis(1));
    assert_eq!(g1, h.basis(1).neg());
    let quad = h.mul(&g1, &g1).sub(&g1.scale(&q.sub(&RF::one()))).sub(&h.scalar(q));
    assert!(quad.is_zero());
    assert_eq!(h.kw_transform(&h.one()), h.one());
    let g2 = h.kw_transform(&h.basis(2));
    assert_eq!(h.kw_transform(&h.basis(3)), h.mul(&g1, &g2));
    assert_eq!(h.kw_transform(&h.basis(3)), h.basis(3));
}

#[test]
fn classical_limit() {
    let h = h3();
    let norm = rf("1/(1+q)").unwrap();
    let half = rf("1/2").unwrap();
    let r = limit_q1(&r12(&h).unwrap().scale(&norm)).unwrap();
    assert_eq!(r, elem(&["1/2", "1/2", "0", "0", "0", "0"]));
    let c = limit_q1(&c12(&h).unwrap().scale(&norm)).unwrap();
    assert_eq!(c, h.one().sub(&h.basis(1)).scale(&half));

    let h1 = HeckeAlgebra::new(3, RF::one()).unwrap();
    let (s1, s2) = (limit_q1(&h.basis(1)).unwrap(), limit_q1(&h.basis(2)).unwrap());
    assert_eq!(h1.mul(&s1, &s1), h1.one());
    assert_eq!(h1.mul_all(&[&s1, &s2, &s1]), h1.mul_all(&[&s2, &s1, &s2]));
    let s12 = h1.mul(&s1, &s2);
    assert_eq!(h1.pow(&s12, 3), h1.one());
    assert!(limit_q1(&h.basis(1).scale(&rf("1/(q-1)").unwrap())).is_err());
}

/// Reduces words in `t1, t2` to the normal forms `[], 1, 2, 12, 21, 121` with
/// `tt -> (1-q)t + q` and `212 -> 121` only.
fn rewrite(word: &[u8]) -> BTreeMap<Vec<u8>, RF> {
    let q = RF::q();
    let mut todo: Vec<(Vec<u8>, RF)> = vec![(word.to_vec(), RF::one())];
    let mut done: BTreeMap<Vec<u8>, RF> = BTreeMap::new();
    while let Some((w, c)) = todo.pop() {
        if let Some(p) = w.windows(2).position(|x| x[0] == x[1]) {
            let mut short = w.clone();
            short.remove(p);
            let mut shorter = short.clone();
            shorter.remove(p);
            todo.push((short, c.mul(&RF::one().sub(&q))));
            todo.push((shorter, c.mul(&q)));
        } else if let Some(p) = w.windows(3).position(|x| x == [2, 1, 2]) {
            let mut v = w.clone();
            v[p..p + 3].copy_from_slice(&[1, 2, 1]);
            todo.push((v, c));
        } else {
            let e = done.entry(w).or_insert_with(RF::zero);
            *e = e.add(&c);
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

#[test]
fn words_up_to_length_four_reduce_consistently() {
    let h = h3();
    let normal: [&[u8]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    for len in 1..=4 {
        for code in 0..(1u32 << len) {
            words.push((0..len).map(|k| if code >> k & 1 == 1 { 2 } else { 1 }).collect());
        }
    }
    assert_eq!(words.len(), 31);
    for w in &words {
        let gens: Vec<HeckeElement<RF>> = w.iter().map(|&i| h.gen(i as usize).unwrap()).collect();
        let got = h.mul_all(&gens.iter().collect::<Vec<_>>());
        let oracle = rewrite(w);
        let mut expect = h.zero();
        for (nf, c) in oracle {
            let k = normal.iter().position(|x| *x == nf.as_slice()).expect("normal form");
            expect = expect.add(&h.basis(k).scale(&c));
        }
        assert_eq!(got, expect, "word {w:?}");
    }
}

#[test]
fn rank_two_algebra() {
    let h2 = HeckeAlgebra::new(2, RF::q()).unwrap();
    assert_eq!(h2.len(), 2);
    let b1 = h2.gen(1).unwrap();
    let sq = h2.mul(&b1, &b1);
    assert_eq!(sq, h2.scalar(RF::q()).add(&b1.scale(&rf("1-q").unwrap())));
    assert!(h2.gen(2).is_err());
    assert!(HeckeAlgebra::new(4, RF::q()).is_err());
}

#[test]
fn display_in_word_basis() {
    let h = h3();
    assert_eq!(h.alpha_q(&h.basis(1)).unwrap().to_string(), "(q - 1)/q*Id + 1/q*b1");
    assert_eq!(h.basis(5).to_string(), "b121");
}
