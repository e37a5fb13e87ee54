use proptest::prelude::*;
use qyoung_field::{gcd, parse_rational_function, rational, BigInt, Binding, Monomial, Poly, RationalFunction, Scalar, Var};

const VARS: [Var; 3] = [Var::Q, Var::K2, Var::K4];

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u8..3, 0u8..3, 0u8..3), -4i64..5), 1..5).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|((a, b, c), k)| {
            let m = Monomial::var(VARS[0], a)
                .mul(&Monomial::var(VARS[1], b))
                .mul(&Monomial::var(VARS[2], c));
            (m, BigInt::from(k))
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn binding() -> impl Strategy<Value = Binding> {
    (-20i64..21, -20i64..21, 1i64..9).prop_map(|(a, b, d)| {
        Binding::new().with(Var::Q, rational(a, d)).with_int(Var::K2, b).with(Var::K4, rational(b + 3, d + 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn addition_associates(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
    }

    #[test]
    fn multiplication_distributes(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn inverse_cancels(f in ratfunc()) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(&f * &Scalar::inv(&f).unwrap(), RationalFunction::one());
    }

    #[test]
    fn normalization_is_idempotent(n in poly(), d in nonzero_poly()) {
        let f = RationalFunction::new(n, d).unwrap();
        let again = RationalFunction::new(f.numer().clone(), f.denom().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(gcd(f.numer(), f.denom()).is_one() || f.is_zero());
    }

    #[test]
    fn common_factors_cancel(a in nonzero_poly(), n in poly(), d in nonzero_poly()) {
        let f = RationalFunction::new(&n * &a, &d * &a).unwrap();
        prop_assert_eq!(f, RationalFunction::new(n, d).unwrap());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = gcd(&(&a * &c), &(&b * &c));
        prop_assert!((&a * &c).div_exact(&g).is_some());
        prop_assert!((&b * &c).div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.clone().with_positive_lead()).is_some() || g.div_exact(&(-&c)).is_some());
    }

    #[test]
    fn substitution_commutes_with_arithmetic(f in ratfunc(), g in ratfunc(), b in binding()) {
        let (Ok(sf), Ok(sg)) = (f.substitute(&b), g.substitute(&b)) else { return Ok(()) };
        prop_assert_eq!((&f * &g).substitute(&b).unwrap(), &sf * &sg);
        prop_assert_eq!((&f + &g).substitute(&b).unwrap(), &sf + &sg);
    }

    #[test]
    fn equal_functions_agree_at_points(f in ratfunc(), g in ratfunc(), b in binding()) {
        let lhs = &(&f + &g) * &g;
        let rhs = &(&f * &g) + &(&g * &g);
        prop_assert_eq!(&lhs, &rhs);
        if let (Ok(x), Ok(y)) = (lhs.evaluate(&b), rhs.evaluate(&b)) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn text_round_trip(f in ratfunc()) {
        prop_assert_eq!(parse_rational_function(&f.to_string()).unwrap(), f);
    }
}

#[test]
fn documented_examples() {
    let rf = |s| parse_rational_function(s).unwrap();
    assert_eq!(rf("(q^2-1)/(q+1)"), rf("q-1"));
    assert_eq!(rf("(1+q)/(1+q)"), RationalFunction::one());
    assert_eq!(rf("((1+q)*q)/((1+q)^2)"), rf("q/(1+q)"));
    let q1 = Binding::new().with_int(Var::Q, 1);
    assert_eq!(rf("q/(1+q)").substitute(&q1).unwrap(), rf("1/2"));
    let k = Binding::new().with_int(Var::Q, 1);
    let err = rf("1/(q-1)").substitute(&k).unwrap_err();
    assert!(err.to_string().contains("q - 1"), "{err}");
    let partial = rf("K4").substitute(&Binding::new()).unwrap();
    assert_eq!(partial, rf("K4"));
}

#[test]
fn quadratic_extension_examples() {
    use qyoung_field::{QuadExt, QuadRelation};
    let one = RationalFunction::one();
    let rel = QuadRelation::new("z", &one, &one, &one).unwrap();
    let z = QuadExt::generator(&rel);
    assert_eq!(z.mul(&z), QuadExt::new(-one.clone(), -one.clone(), &rel));
    let a = QuadExt::base(parse_rational_function("q").unwrap());
    let c = QuadExt::base(parse_rational_function("K4").unwrap());
    assert_eq!(a.mul(&c).as_base(), Some(&parse_rational_function("q*K4").unwrap()));
    assert!(QuadExt::<RationalFunction>::zero().inv().is_err());
}

#[test]
fn sum_over_a_shared_denominator_factor() {
    let rf = |s: &str| parse_rational_function(s).unwrap();
    let f = rf("-1/(q*K4 + K2^2)");
    let g = rf("-(K2^2*K4^2 + q^2 + q)/(q^2*K2*K4^2 + q*K2^2 + 1)");
    let lhs = &(&f + &g) * &g;
    let rhs = &(&f * &g) + &(&g * &g);
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.denom(), &(&rf("q*K4 + K2^2") * &rf("(q^2*K2*K4^2 + q*K2^2 + 1)^2")).numer().clone().with_positive_lead());
}
