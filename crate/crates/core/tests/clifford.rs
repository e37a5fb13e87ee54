use proptest::prelude::*;
use qyoung_core::clifford::{build_b, grade, Blade, CliffordAlgebra, Multivector};
use qyoung_field::{parse_rational_function as rf, RationalFunction, Scalar};

type RF = RationalFunction;

fn cl4() -> CliffordAlgebra<RF> {
    CliffordAlgebra::hecke_form(4, &RF::q())
}

/// The piecewise definition evaluated literally, first matching case wins.
fn case_table(n: usize, i: usize, j: usize) -> RF {
    let (ii, jj, nn) = (i as i64, j as i64, n as i64);
    let q = RF::q();
    if (i <= n && j <= n) || (i > n && j > n) {
        RF::zero()
    } else if ii == jj - nn || ii - 1 - nn == jj {
        q
    } else if ii + 1 == jj - nn || ii == jj + 1 - nn {
        -(&RF::one() + &q)
    } else if (ii - jj - nn).abs() >= 2 && i > n {
        -RF::one()
    } else {
        RF::one()
    }
}

#[test]
fn form_follows_case_table() {
    for n in 1..=4 {
        let b = build_b(n, &RF::q());
        for i in 1..=2 * n {
            for j in 1..=2 * n {
                assert_eq!(b.get(i, j), &case_table(n, i, j), "n={n} ({i},{j})");
            }
        }
    }
    let b1 = build_b(1, &RF::q());
    assert_eq!((b1.get(1, 1), b1.get(1, 2), b1.get(2, 1), b1.get(2, 2)), (&RF::zero(), &RF::q(), &RF::one(), &RF::zero()));
    assert_eq!(build_b(2, &RF::q()).get(1, 4), &rf("-1-q").unwrap());
}

#[test]
fn contraction_examples() {
    let cl = cl4();
    let e = |i| cl.e(i).unwrap();
    assert_eq!(cl.contract_left(1, &e(5)).unwrap(), Multivector::scalar(8, RF::q()));
    assert!(cl.contract_left(1, &Multivector::one(8)).unwrap().is_zero());
    let e56 = e(5).wedge(&e(6)).unwrap();
    let expect = e(6).scale(&RF::q()).add(&e(5).scale(&rf("1+q").unwrap()));
    assert_eq!(cl.contract_left(1, &e56).unwrap(), expect);
}

#[test]
fn wedge_examples() {
    let cl = cl4();
    let e = |i| cl.e(i).unwrap();
    assert!(e(1).wedge(&e(1)).unwrap().is_zero());
    assert_eq!(e(5).wedge(&e(1)).unwrap(), e(1).wedge(&e(5)).unwrap().neg());
    assert!(e(1).wedge(&Multivector::one(6)).is_err());
}

#[test]
fn product_examples() {
    let cl = cl4();
    let e = |i| cl.e(i).unwrap();
    assert_eq!(cl.cmul(&e(1), &e(5)).unwrap().to_string(), "q*Id + e1^e5");
    assert!(cl.cmul(&e(1), &e(1)).unwrap().is_zero());
    let b1 = e(1).wedge(&e(5)).unwrap();
    let b2 = e(2).wedge(&e(6)).unwrap();
    let b12 = cl.cmul(&b1, &b2).unwrap();
    assert_eq!(b12.grade_project(0), Multivector::scalar(8, rf("-1-q").unwrap()));
    let r = cl.reverse(&b1).unwrap();
    assert_eq!(r, Multivector::scalar(8, rf("1-q").unwrap()).sub(&b1));
    let r12 = Multivector::scalar(8, RF::q()).add(&b1);
    assert_eq!(cl.reverse(&r12).unwrap(), Multivector::one(8).sub(&b1));
    assert_eq!(e(1).wedge(&e(5)).unwrap().grade_involute(), b1);
    assert_eq!(e(1).grade_involute(), e(1).neg());
}

fn multivector() -> impl Strategy<Value = Multivector<RF>> {
    prop::collection::vec((0u32..256, -3i64..4), 1..3).prop_map(|terms| {
        let mut m = Multivector::zero(8);
        for (b, c) in terms {
            m.add_term(b as Blade, &RF::from_i64(c));
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(224))]

    #[test]
    fn product_associates(x in multivector(), y in multivector(), z in multivector()) {
        let cl = cl4();
        let lhs = cl.cmul(&cl.cmul(&x, &y).unwrap(), &z).unwrap();
        let rhs = cl.cmul(&x, &cl.cmul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversion_is_an_anti_automorphism(x in multivector(), y in multivector()) {
        let cl = cl4();
        let lhs = cl.reverse(&cl.cmul(&x, &y).unwrap()).unwrap();
        let rhs = cl.cmul(&cl.reverse(&y).unwrap(), &cl.reverse(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(cl.reverse(&cl.reverse(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn even_elements_close(x in multivector(), y in multivector()) {
        let cl = cl4();
        let (x, y) = (x.add(&x.grade_involute()), y.add(&y.grade_involute()));
        prop_assert!(cl.cmul(&x, &y).unwrap().is_even());
    }

    #[test]
    fn product_recovers_wedge(i in 1usize..9, b in 0u32..256) {
        let cl = cl4();
        prop_assume!(b & (1 << (i - 1)) == 0);
        let ej = Multivector::blade(8, b, RF::one());
        let ei = cl.e(i).unwrap();
        let p = cl.cmul(&ei, &ej).unwrap();
        prop_assert_eq!(p.grade_project(grade(b) + 1), ei.wedge(&ej).unwrap());
    }
}

#[test]
fn generators_anticommute_through_the_form() {
    let cl = cl4();
    for i in 1..=8 {
        for j in 1..=8 {
            let (ei, ej) = (cl.e(i).unwrap(), cl.e(j).unwrap());
            let s = cl.cmul(&ei, &ej).unwrap().add(&cl.cmul(&ej, &ei).unwrap());
            let b = cl.form();
            assert_eq!(s, Multivector::scalar(8, b.get(i, j).add(b.get(j, i))), "({i},{j})");
        }
    }
}
