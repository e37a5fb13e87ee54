use qyoung_core::formula::Env;
use qyoung_core::garnir::*;
use qyoung_core::hecke::HeckeAlgebra;
use qyoung_core::linalg::FieldMatrix;
use qyoung_core::young::{eval_coords, mixed_young, young_full3, young_n2, Numbering};
use qyoung_core::CoreError;
use qyoung_field::{parse_rational_function as rf, Binding, RationalFunction, Scalar, Var};

type RF = RationalFunction;

fn setup() -> (HeckeAlgebra<RF>, Env<RF>) {
    (HeckeAlgebra::new(3, RF::q()).unwrap(), Env::symbolic())
}

#[test]
fn displayed_solutions_annihilate() {
    let (h, env) = setup();
    let y = mixed_young(&h, &env, Numbering::N123).unwrap().element;
    let xs: Vec<_> = [XX1, XX2, XX3].iter().map(|c| eval_coords(&env, c).unwrap()).collect();
    for (k, x) in xs.iter().enumerate() {
        assert!(h.mul(&y, x).is_zero(), "XX{}", k + 1);
    }
    let cols: Vec<Vec<RF>> = xs.iter().map(|x| x.coords().to_vec()).collect();
    assert_eq!(FieldMatrix::from_columns(&cols).rank(), 3);
    let fam = solve_right_annihilator(&h, &y);
    assert_eq!(fam.dimension(), 4);
    for (k, x) in xs.iter().enumerate() {
        assert!(fam.contains(x), "XX{}", k + 1);
    }
    for d in &fam.directions {
        assert!(h.mul(&y, d).is_zero());
    }
    assert!(fam.contains(&h.zero()));
}

#[test]
fn degenerate_part_of_the_annihilator() {
    let (h, env) = setup();
    let y = mixed_young(&h, &env, Numbering::N123).unwrap().element;
    let two = two_sided_annihilator(&h, &y);
    assert_eq!(two.dimension(), 3);
    let (y3, y111) = young_full3(&h, &env).unwrap();
    let y132 = mixed_young(&h, &env, Numbering::N132).unwrap().element;
    for x in [&y3.element, &y111.element, &y132] {
        assert!(two.contains(x));
        assert!(!is_garnir(&h, &y, x));
    }
}

#[test]
fn garnir_element_and_witness() {
    let (h, env) = setup();
    let g = garnir_element(&h, &env).unwrap();
    assert_eq!(g.coord(0), &rf("-K6*q+K2*q+K4").unwrap());
    assert_eq!(env.eval("t1").unwrap(), rf("K6*q^2+K4*q^2-K5*q-K4*q-K6*q+K2+K4").unwrap());

    let b = Binding::new().with_int(Var::Q, 2).with_int(Var::K2, 1).with_int(Var::K4, 0).with_int(Var::K5, 0).with_int(Var::K6, 0);
    let wenv = Env::numeric(&b);
    let wh = HeckeAlgebra::new(3, wenv.q().unwrap()).unwrap();
    let wg = garnir_element(&wh, &wenv).unwrap();
    assert_eq!(wenv.eval("t1").unwrap(), Scalar::one());
    let y = mixed_young(&wh, &wenv, Numbering::N123).unwrap().element;
    assert!(wh.mul(&y, &wg).is_zero());
    assert!(!wh.mul(&wg, &y).is_zero());

    let zero = Env::partial(&Binding::new().with_int(Var::K2, 0).with_int(Var::K4, 0).with_int(Var::K5, 0).with_int(Var::K6, 0));
    assert!(matches!(garnir_element(&h, &zero), Err(CoreError::Degenerate(_))));
}

#[test]
fn alpha_of_garnir_matches_display() {
    let (h, env) = setup();
    let g = eval_coords(&env, &XX1).unwrap();
    let a = alpha_q_garnir(&h, &g).unwrap();
    assert_eq!(a, eval_coords(&env, &ALPHA_G).unwrap());
    assert_eq!(a.coord(5), &rf("K6/q^3").unwrap());
    assert_eq!(named(&h, &env, "aG").unwrap(), a);
}

#[test]
fn alpha_twice_is_not_the_identity() {
    let (h, env) = setup();
    let g = eval_coords(&env, &XX1).unwrap();
    let back = h.alpha_q(&h.alpha_q(&g).unwrap()).unwrap();
    let residual = back.sub(&g);
    assert!(!residual.is_zero());
    let f = rf("(q-1)*(q+1)").unwrap();
    for c in residual.coords() {
        assert!(c.is_zero() || c.numer().div_exact(f.numer()).is_some());
    }
    let h1 = HeckeAlgebra::new(3, RF::one()).unwrap();
    let env1 = Env::symbolic().with("q", RF::one());
    let g1 = eval_coords(&env1, &XX1).unwrap();
    assert_eq!(h1.alpha_q(&h1.alpha_q(&g1).unwrap()).unwrap(), g1);
}

#[test]
fn mixed_intertwiners() {
    let (h, env) = setup();
    let y123 = mixed_young(&h, &env, Numbering::N123).unwrap().element;
    let y132 = mixed_young(&h, &env, Numbering::N132).unwrap().element;
    let fam = solve_intertwiner(&h, &y123, &y132, &["K4"]);
    assert_eq!(fam.dimension(), 4);
    assert_eq!(fam.free_parameter_count(), 5);
    let t = eval_coords(&env, &T).unwrap();
    assert!(fam.contains(&t));
    assert_eq!(h.mul(&t, &y123), h.mul(&y132, &t));
    assert!(!h.mul(&t, &y123).is_zero());
    assert!(!check_no_intertwiner(&h, &y123, &y132));
    assert_eq!(t.coord(2), &rf("-1/(1+q)").unwrap());

    let pole = env.eval(T_POLE).unwrap();
    let at_pole = Env::symbolic().with("K4", pole);
    assert!(eval_coords(&at_pole, &T).is_err());
}

#[test]
fn other_pairs_only_annihilate() {
    let (h, env) = setup();
    let (y3, y111) = young_full3(&h, &env).unwrap();
    let y123 = mixed_young(&h, &env, Numbering::N123).unwrap().element;
    let y132 = mixed_young(&h, &env, Numbering::N132).unwrap().element;
    for (a, b, dim) in [(&y3.element, &y111.element, 4), (&y3.element, &y123, 3), (&y111.element, &y132, 3)] {
        assert_eq!(solve_intertwiner(&h, a, b, &[]).dimension(), dim);
        assert!(check_no_intertwiner(&h, a, b));
    }
}

#[test]
fn no_intertwiner_for_n2() {
    let h = HeckeAlgebra::new(2, RF::q()).unwrap();
    let (y2, y11) = young_n2(&h).unwrap();
    let fam = solve_intertwiner(&h, &y2.element, &y11.element, &[]);
    assert_eq!(fam.dimension(), 0);
    assert!(fam.particular.is_zero());
}

#[test]
fn named_elements() {
    let (h, env) = setup();
    for name in GARNIR_NAMES {
        assert!(named(&h, &env, name).is_ok(), "{name}");
    }
    assert!(matches!(named(&h, &env, "XX4"), Err(CoreError::UnknownName(_))));
    let h2 = HeckeAlgebra::new(2, RF::q()).unwrap();
    assert!(named(&h2, &env, "XX1").is_err());
}
