use qyoung_core::garnir::*;
use qyoung_core::linalg::FieldMatrix;
use qyoung_core::young::{eval_coords, mixed_young, young_full3, young_n2, Numbering};

use super::{count, holds, same, zero, Check, Ctx};
use crate::error::Result;
use crate::field::CliField;
use crate::report::Outcome;

pub fn garnir_checks<F: CliField>() -> Vec<Check<F>> {
    vec![Check { id: "garnir", run: garnir::<F> }]
}

pub fn intertwine_checks<F: CliField>() -> Vec<Check<F>> {
    vec![Check { id: "intertwine", run: intertwine::<F> }]
}

fn garnir<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let (h, env) = (&ctx.h3, &ctx.env);
    let y = mixed_young(h, env, Numbering::N123)?.element;
    // The K4 of G taken independent of the K4 of Y.
    let genv = env.clone().with("K4", env.eval("P3")?);
    let names = ["XX1", "XX2", "XX3"];
    let xs = [XX1, XX2, XX3].iter().map(|c| eval_coords(env, c)).collect::<std::result::Result<Vec<_>, _>>()?;
    let fam = solve_right_annihilator(h, &y);
    let mut out = Vec::new();
    for (k, c) in [XX1, XX2, XX3].iter().enumerate() {
        let n = names[k];
        out.push(zero(&format!("garnir.annihilate.{n}"), &format!("Y21_123 {n} = 0"), &h.mul(&y, &xs[k])));
        let free = eval_coords(&genv, c)?;
        out.push(zero(&format!("garnir.annihilate_free.{n}"), &format!("Y21_123 {n} = 0 with the K4 of {n} independent"), &h.mul(&y, &free)));
    }
    let cols: Vec<Vec<F>> = xs.iter().map(|x| x.coords().to_vec()).collect();
    out.push(count("garnir.independent", "XX1, XX2, XX3 are linearly independent", FieldMatrix::from_columns(&cols).rank(), 3));
    let outside: Vec<&str> = names.iter().zip(&xs).filter(|(_, x)| !fam.contains(x)).map(|(n, _)| *n).collect();
    out.push(holds("garnir.in_family", "XX1, XX2, XX3 lie in the computed solution space of Y21_123 G = 0", outside.is_empty(), outside.join(" ")));
    out.push(count("garnir.dimension", "solution space of Y21_123 G = 0 has dimension 4", fam.dimension(), 4));
    out.push(count("garnir.two_sided", "solutions that also satisfy G Y21_123 = 0 form a space of dimension 3", two_sided_annihilator(h, &y).dimension(), 3));

    let wenv = env.clone().with("K2", F::one()).with("K4", F::zero()).with("K5", F::zero()).with("K6", F::zero());
    let wy = mixed_young(h, &wenv, Numbering::N123)?.element;
    let wg = eval_coords(&wenv, &XX1)?;
    out.push(holds(
        "garnir.witness",
        "at K2 = 1, K4 = K5 = K6 = 0 the element XX1 has Y21_123 G = 0 and G Y21_123 != 0",
        is_garnir(h, &wy, &wg),
        "not a Garnir element at the witness",
    ));
    let g = garnir_element(h, env)?;
    out.push(same("garnir.alpha", "alpha_q(XX1) equals its displayed coordinates", &alpha_q_garnir(h, &g)?, &eval_coords(env, &ALPHA_G)?));
    Ok(out)
}

fn intertwine<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let (h, env) = (&ctx.h3, &ctx.env);
    let (y3, y111) = young_full3(h, env)?;
    let (y3, y111) = (y3.element, y111.element);
    let y123 = mixed_young(h, env, Numbering::N123)?.element;
    let y132 = mixed_young(h, env, Numbering::N132)?.element;
    let fam = solve_intertwiner(h, &y123, &y132, &["K4"]);
    let t = eval_coords(env, &T)?;
    let pole = env.clone().with("K4", env.eval(T_POLE)?);
    let mut out = vec![
        count("intertwine.parameters", "T Y21_123 = Y21_132 T has 4 linear directions plus K4, 5 parameters", fam.free_parameter_count(), 5),
        holds("intertwine.T_member", "the displayed T solves T Y21_123 = Y21_132 T", fam.contains(&t), "not in the solution space"),
        holds("intertwine.T_nonzero", "T Y21_123 != 0", !h.mul(&t, &y123).is_zero(), "T Y21_123 = 0"),
        holds("intertwine.T_pole", "T is undefined at the excluded K4", eval_coords(&pole, &T).is_err(), "defined"),
    ];
    for (name, a, b) in [("Y3_Y111", &y3, &y111), ("Y3_Y21_123", &y3, &y123), ("Y111_Y21_132", &y111, &y132)] {
        let desc = format!("every intertwiner of {} annihilates", name.replacen('_', ", ", 1));
        out.push(holds(&format!("intertwine.trivial.{name}"), &desc, check_no_intertwiner(h, a, b), "a solution survives"));
    }
    let (y2, y11) = young_n2(&ctx.h2)?;
    let n2 = solve_intertwiner(&ctx.h2, &y2.element, &y11.element, &[]);
    out.push(count("intertwine.n2", "no nonzero T with T Y(2) = Y(11) T in H(2)", n2.dimension(), 0));
    Ok(out)
}
