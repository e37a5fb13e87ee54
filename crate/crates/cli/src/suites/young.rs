use qyoung_core::hecke::{HeckeAlgebra, HeckeElement};
use qyoung_core::linalg::FieldMatrix;
use qyoung_core::young::*;
use qyoung_field::{Scalar, Var};

use super::{holds, same, zero, Check, Ctx, Diff, Value};
use crate::error::Result;
use crate::field::CliField;
use crate::report::Outcome;

pub fn n2_checks<F: CliField>() -> Vec<Check<F>> {
    vec![Check { id: "n2", run: n2::<F> }]
}

fn n2<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let h = &ctx.h2;
    let (y2, y11) = young_n2(h)?;
    let (a, b) = (&y2.element, &y11.element);
    Ok(vec![
        same("n2.idempotent.Y2", "Y(2) Y(2) = Y(2)", &h.mul(a, a), a),
        same("n2.idempotent.Y11", "Y(11) Y(11) = Y(11)", &h.mul(b, b), b),
        zero("n2.annihilate.Y2_Y11", "Y(2) Y(11) = 0", &h.mul(a, b)),
        zero("n2.annihilate.Y11_Y2", "Y(11) Y(2) = 0", &h.mul(b, a)),
        same("n2.unity", "Y(2) + Y(11) = 1", &a.add(b), &h.one()),
        same("n2.reversion", "rev(Y(2)) = Y(11)", &h.rev(a), b),
    ])
}

pub fn n3_checks<F: CliField>() -> Vec<Check<F>> {
    vec![
        Check { id: "young", run: operators::<F> },
        Check { id: "kw", run: kw::<F> },
        Check { id: "split", run: split::<F> },
        Check { id: "split.kappa", run: split_kappa::<F> },
        Check { id: "split.alpha", run: split_alpha::<F> },
        Check { id: "r13", run: r13::<F> },
    ]
}

struct Ops<F> {
    names: [&'static str; 4],
    elems: [HeckeElement<F>; 4],
}

fn ops<F: CliField>(ctx: &Ctx<F>) -> Result<Ops<F>> {
    let (h, env) = (&ctx.h3, &ctx.env);
    let (y3, y111) = young_full3(h, env)?;
    let y123 = mixed_young(h, env, Numbering::N123)?;
    let y132 = mixed_young(h, env, Numbering::N132)?;
    Ok(Ops {
        names: ["Y3", "Y111", "Y21_123", "Y21_132"],
        elems: [y3.element, y111.element, y123.element, y132.element],
    })
}

fn operators<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let (h, env) = (&ctx.h3, &ctx.env);
    let o = ops(ctx)?;
    let mut out = Vec::new();
    for (n, y) in o.names.iter().zip(&o.elems) {
        out.push(same(&format!("young.idempotent.{n}"), &format!("{n} {n} = {n}"), &h.mul(y, y), y));
    }
    for (i, a) in o.elems.iter().enumerate() {
        for (j, b) in o.elems.iter().enumerate() {
            if i != j {
                let (na, nb) = (o.names[i], o.names[j]);
                out.push(zero(&format!("young.annihilate.{na}_{nb}"), &format!("{na} {nb} = 0"), &h.mul(a, b)));
            }
        }
    }
    let sum = o.elems.iter().fold(h.zero(), |acc, y| acc.add(y));
    out.push(same("young.unity", "Y3 + Y21_123 + Y21_132 + Y111 = 1", &sum, &h.one()));
    out.push(same("young.reversion.Y3", "rev(Y3) = Y111", &h.rev(&o.elems[0]), &o.elems[1]));
    out.push(same("young.reversion.Y21", "rev(Y21_123) = Y21_132", &h.rev(&o.elems[2]), &o.elems[3]));
    for (k, shown) in [(1, &Y111), (2, &Y21_123), (3, &Y21_132)] {
        let n = o.names[k];
        out.push(same(&format!("young.display.{n}"), &format!("{n} equals its displayed coordinates"), &o.elems[k], &eval_coords(env, shown)?));
    }
    let h1 = HeckeAlgebra::new(3, F::one())?;
    let env1 = ctx.env.clone().with("q", F::one());
    let sixth = F::from_i64(6).inv()?;
    let classical = (0..6).fold(h1.zero(), |acc, k| acc.add(&h1.basis(k).scale(&sixth)));
    out.push(same("young.limit.Y3", "Y3 at q = 1 is the S3 symmetrizer", &young_full3(&h1, &env1)?.0.element, &classical));
    Ok(out)
}

fn kw<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let d = kw_discrepancy(&ctx.h3)?;
    let shown = eval_coords(&ctx.env, &KW_DISCREPANCY)?;
    let h1 = HeckeAlgebra::new(3, F::one())?;
    Ok(vec![
        same("kw.discrepancy", "C(13) - rev(R(13)) for R(13) = q^3 + b121, C(13) = 1 - b121 equals the displayed element", &d, &shown),
        zero("kw.limit", "C(13) - rev(R(13)) vanishes at q = 1", &kw_discrepancy(&h1)?),
    ])
}

fn split_eqs<F: Scalar>(h: &HeckeAlgebra<F>, x: &HeckeElement<F>) -> Vec<String> {
    let rx = h.rev(x);
    let mut bad = Vec::new();
    if let Some(r) = x.add(&rx).diff(&h.one()) {
        bad.push(format!("X + rev(X) - 1 = {r}"));
    }
    if let Some(r) = h.mul(x, x).diff(x) {
        bad.push(format!("X^2 - X = {r}"));
    }
    if !h.mul(x, &rx).is_zero() {
        bad.push(format!("X rev(X) = {}", h.mul(x, &rx)));
    }
    bad
}

fn split<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let (h, env) = (&ctx.h3, &ctx.env);
    let fam = solve_reversion_split(h, env)?;
    let mut out = vec![
        same("split.scalar", "scalar coordinate of the general solution of X + rev(X) = 1", &Value(fam.element.coord(0).clone()), &Value(env.eval(SPLIT_SCALAR)?)),
        same("split.b21", "b21 coordinate of the general solution of X + rev(X) = 1", &Value(fam.element.coord(4).clone()), &Value(env.eval(SPLIT_B21)?)),
    ];
    for i in 1..=4 {
        let bad = split_eqs(h, &representative(env, i)?);
        out.push(holds(&format!("split.r{i}"), &format!("r{i} satisfies X + rev(X) = 1, X^2 = X, X rev(X) = 0"), bad.is_empty(), bad.join("; ")));
    }
    let special = env.clone().with("K4", F::one().add(&ctx.q).inv()?);
    let alt = eval_coords(&special, &["1", "-1", "q", "1", "-q", "-1"])?.scale(&F::one().add(&ctx.q).inv()?);
    out.push(same("split.r1_alternating", "r1 at K4 = 1/(q+1) has alternating signs", &representative(&special, 1)?, &alt));
    Ok(out)
}

fn split_kappa<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let env = ctx.env.with_root("kappa")?;
    let h = HeckeAlgebra::new(3, env.q()?)?;
    let bad = split_eqs(&h, &representative(&env, 5)?);
    let cols: Vec<Vec<_>> = [1, 2, 3, 5].iter().map(|&i| Ok(representative(&env, i)?.coords().to_vec())).collect::<Result<_>>()?;
    let rank = FieldMatrix::from_columns(&cols).rank();
    Ok(vec![
        holds("split.r5", "r5 satisfies the three equations with kappa adjoined", bad.is_empty(), bad.join("; ")),
        super::count("split.rank", "r1, r2, r3, r5 have rank 4", rank, 4),
    ])
}

fn split_alpha<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let env = ctx.env.with_root("alpha")?;
    let h = HeckeAlgebra::new(3, env.q()?)?;
    let bad = split_eqs(&h, &representative(&env, 6)?);
    Ok(vec![holds("split.r6", "r6 satisfies the three equations with alpha adjoined", bad.is_empty(), bad.join("; "))])
}

fn r13<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let (h, env) = (&ctx.h3, &ctx.env);
    let r = row_symmetrizer_r13(h, env)?;
    let f1 = named(h, env, "f1")?;
    let y132 = mixed_young(h, env, Numbering::N132)?.element;
    let y123 = mixed_young(h, env, Numbering::N123)?.element;
    let rf = h.mul(&r, &f1);
    let c = h.rev(&r);
    Ok(vec![
        same("r13.idempotent", "R(13) R(13) = R(13) with P3 free", &h.mul(&r, &r), &r),
        same("r13.f1", "R(13) f1 = Y21_132", &rf, &y132),
        holds("r13.p3_free", "R(13) f1 does not depend on P3", rf.coords().iter().all(|x| x.free_of(Var::P3)), &rf),
        same("r13.unity", "R(13) + C(13) = 1", &r.add(&c), &h.one()),
        same("r13.reversed", "rev(f1) C(13) = Y21_123", &h.mul(&h.rev(&f1), &c), &y123),
    ])
}
