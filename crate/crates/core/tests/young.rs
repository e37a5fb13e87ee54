use qyoung_core::formula::Env;
use qyoung_core::hecke::{limit_q1, HeckeAlgebra, HeckeElement};
use qyoung_core::linalg::FieldMatrix;
use qyoung_core::young::*;
use qyoung_field::{parse_rational_function as rf, QuadExt, RationalFunction, Scalar, Var};

type RF = RationalFunction;

fn setup() -> (HeckeAlgebra<RF>, Env<RF>) {
    (HeckeAlgebra::new(3, RF::q()).unwrap(), Env::symbolic())
}

fn split_equations<F: Scalar>(h: &HeckeAlgebra<F>, x: &HeckeElement<F>) -> [bool; 3] {
    let rx = h.rev(x);
    [x.add(&rx) == h.one(), h.mul(x, x) == *x, h.mul(x, &rx).is_zero()]
}

#[test]
fn n2_operators() {
    let h = HeckeAlgebra::new(2, RF::q()).unwrap();
    let (y2, y11) = young_n2(&h).unwrap();
    let (a, b) = (&y2.element, &y11.element);
    assert!(y2.is_idempotent(&h) && y11.is_idempotent(&h));
    assert!(h.mul(a, b).is_zero() && h.mul(b, a).is_zero());
    assert_eq!(a.add(b), h.one());
    assert_eq!(h.rev(a), *b);
    let r = r12(&h).unwrap();
    assert_eq!(h.mul(&r, &r), r.scale(&rf("1+q").unwrap()));
    assert_eq!(r.to_string(), "q*Id + b1");
}

#[test]
fn full_operators() {
    let (h, env) = setup();
    let (y3, y111) = young_full3(&h, &env).unwrap();
    assert!(y3.is_idempotent(&h) && y111.is_idempotent(&h));
    assert_eq!(y111.element, eval_coords(&env, &Y111).unwrap());
    assert_eq!(h.rev(&y111.element), y3.element);
    let sixth = rf("1/6").unwrap();
    assert_eq!(limit_q1(&y3.element).unwrap(), HeckeElement::new(vec![sixth; 6]));
}

#[test]
fn mixed_operators_match_displays() {
    let (h, env) = setup();
    let y132 = mixed_young(&h, &env, Numbering::N132).unwrap();
    let y123 = mixed_young(&h, &env, Numbering::N123).unwrap();
    assert_eq!(y132.element, eval_coords(&env, &Y21_132).unwrap());
    assert_eq!(y123.element, eval_coords(&env, &Y21_123).unwrap());
    assert_eq!(y132.element.coord(0), &rf("q/(q+1+q^2)").unwrap());
    assert!(y132.is_idempotent(&h) && y123.is_idempotent(&h));
    assert_eq!(h.rev(&y123.element), y132.element);
    assert_eq!(y132.partition, [2, 1]);
    assert_eq!(y132.parameters, ["K4"]);
}

#[test]
fn decomposition_of_unity() {
    let (h, env) = setup();
    let (y3, y111) = young_full3(&h, &env).unwrap();
    let y132 = mixed_young(&h, &env, Numbering::N132).unwrap();
    let y123 = mixed_young(&h, &env, Numbering::N123).unwrap();
    let ys = [&y3.element, &y111.element, &y123.element, &y132.element];
    let mut sum = h.zero();
    for (i, a) in ys.iter().enumerate() {
        sum = sum.add(a);
        for (j, b) in ys.iter().enumerate() {
            if i != j {
                assert!(h.mul(a, b).is_zero(), "Y{i} * Y{j}");
            }
        }
    }
    assert_eq!(sum, h.one());
}

#[test]
fn kw_discrepancy_values() {
    let (h, env) = setup();
    let d = kw_discrepancy(&h).unwrap();
    assert!(limit_q1(&d).unwrap().is_zero());
    let displayed = eval_coords(&env, &KW_DISCREPANCY).unwrap();
    assert_eq!(d, displayed.neg());
    let at2 = env.clone().with("q", RF::from_i64(2));
    assert_eq!(eval_coords(&at2, &KW_DISCREPANCY).unwrap(), eval_coords(&at2, &["4", "-1", "-1", "-1", "-1", "0"]).unwrap());
    let h2 = HeckeAlgebra::new(3, RF::from_i64(2)).unwrap();
    assert_eq!(kw_discrepancy(&h2).unwrap(), eval_coords(&at2, &["-4", "1", "1", "1", "1", "0"]).unwrap());
}

#[test]
fn split_family_at_origin() {
    let (h, _) = setup();
    let env = Env::symbolic().with("K2", RF::zero()).with("K3", RF::zero()).with("K4", RF::zero()).with("K6", RF::zero());
    let fam = solve_reversion_split(&h, &env).unwrap();
    assert_eq!(fam.element, h.scalar(rf("1/2").unwrap()));
    assert_eq!(fam.free, ["K2", "K3", "K4", "K6"]);
}

#[test]
fn representatives_one_to_four() {
    let (h, env) = setup();
    for i in 1..=4 {
        let r = representative(&env, i).unwrap();
        assert_eq!(split_equations(&h, &r), [true; 3], "r{i}");
    }
}

#[test]
fn representatives_in_quadratic_extensions() {
    for (i, root) in [(5, "kappa"), (6, "alpha")] {
        let env = Env::symbolic().with_root(root).unwrap();
        let h = HeckeAlgebra::new(3, QuadExt::base(RF::q())).unwrap();
        let r = representative(&env, i).unwrap();
        assert_eq!(split_equations(&h, &r), [true; 3], "r{i}");
    }
}

#[test]
fn rank_of_selected_representatives() {
    let env = Env::symbolic().with_root("kappa").unwrap();
    let cols: Vec<Vec<_>> = [1, 2, 3, 5].iter().map(|&i| representative(&env, i).unwrap().coords().to_vec()).collect();
    assert_eq!(FieldMatrix::from_columns(&cols).rank(), 4);
}

#[test]
fn r5_with_a_rational_root() {
    // K2 = K4 = 0 leaves (1+q) z^2 + z = 0 with roots 0 and -1/(1+q); the root 0 is a pole of r5.
    let env = Env::partial(&qyoung_field::Binding::new().with_int(Var::K2, 0).with_int(Var::K4, 0)).with("kappa", RF::zero());
    let c = env.eval_all(&qyoung_core::formula::ROOT_RELATIONS[0].1).unwrap();
    assert!(c[2].is_zero());
    let (h, _) = setup();
    assert!(representative(&env, 5).is_err());
    let env = Env::partial(&qyoung_field::Binding::new().with_int(Var::K2, 0).with_int(Var::K4, 0))
        .with("kappa", rf("-1/(1+q)").unwrap());
    let r5 = representative(&env, 5).unwrap();
    assert_eq!(split_equations(&h, &r5), [true; 3]);
}

#[test]
fn row_symmetrizer() {
    let (h, env) = setup();
    let r13 = row_symmetrizer_r13(&h, &env).unwrap();
    assert_eq!(h.mul(&r13, &r13), r13);
    let f1 = named(&h, &env, "f1").unwrap();
    let y132 = mixed_young(&h, &env, Numbering::N132).unwrap().element;
    let prod = h.mul(&r13, &f1);
    assert_eq!(prod, y132);
    assert!(prod.coords().iter().all(|c| !c.uses(Var::P3)));
    assert!(r13.coords().iter().any(|c| c.uses(Var::P3)));
    let c13 = h.rev(&r13);
    assert_eq!(r13.add(&c13), h.one());
    let y123 = mixed_young(&h, &env, Numbering::N123).unwrap().element;
    assert_eq!(h.mul(&h.rev(&f1), &c13), y123);
}
