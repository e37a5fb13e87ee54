use qyoung_core::clifford::{build_b, CliffordAlgebra, Multivector};
use qyoung_core::hecke::{check_relations, HeckeAlgebra, HeckeElement};
use qyoung_core::young::{eval_coords, r12, young_n2};
use qyoung_core::CoreError;
use rand::Rng;

use super::{count, holds, same, small_rng, zero, Check, Ctx, Diff};
use crate::error::Result;
use crate::field::CliField;
use crate::report::Outcome;

/// The bilinear form for n = 4, row by row.
const B4: [[&str; 8]; 8] = [
    ["0", "0", "0", "0", "q", "-1-q", "1", "1"],
    ["0", "0", "0", "0", "-1-q", "q", "-1-q", "1"],
    ["0", "0", "0", "0", "1", "-1-q", "q", "-1-q"],
    ["0", "0", "0", "0", "1", "1", "-1-q", "q"],
    ["1", "1", "-1", "-1", "0", "0", "0", "0"],
    ["q", "1", "1", "-1", "0", "0", "0", "0"],
    ["-1", "q", "1", "1", "0", "0", "0", "0"],
    ["-1", "-1", "q", "1", "0", "0", "0", "0"],
];

type Grassmann = &'static [(&'static [usize], &'static str)];

const B12: Grassmann = &[(&[], "-(1+q)"), (&[1, 6], "1"), (&[1, 2, 5, 6], "-1"), (&[2, 5], "1+q")];
const B21: Grassmann = &[(&[], "-q*(1+q)"), (&[1, 6], "1+q"), (&[1, 2, 5, 6], "-1"), (&[2, 5], "q")];
const B121: Grassmann = &[
    (&[1, 5], "q"),
    (&[], "-(1+2*q)"),
    (&[2, 6], "q"),
    (&[1, 6], "1"),
    (&[1, 2, 5, 6], "q-1"),
    (&[2, 5], "-(q^2-q-1)"),
];

const LETTERS: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];

pub fn checks<F: CliField>() -> Vec<Check<F>> {
    vec![
        Check { id: "form.b4", run: form_b4::<F> },
        Check { id: "relations", run: relations::<F> },
        Check { id: "grassmann", run: grassmann::<F> },
        Check { id: "coords", run: coords::<F> },
        Check { id: "clifford.associativity", run: associativity::<F> },
        Check { id: "clifford.reversion", run: reversion::<F> },
        Check { id: "alpha", run: alpha::<F> },
        Check { id: "inverse", run: inverse::<F> },
        Check { id: "gamma", run: gamma::<F> },
        Check { id: "kw", run: kw::<F> },
        Check { id: "limit", run: limit::<F> },
    ]
}

fn form_b4<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let b = build_b(4, &ctx.q);
    let mut bad = Vec::new();
    for (i, row) in B4.iter().enumerate() {
        for (j, text) in row.iter().enumerate() {
            if b.get(i + 1, j + 1) != &ctx.eval(text)? {
                bad.push(format!("({},{})", i + 1, j + 1));
            }
        }
    }
    Ok(vec![holds("form.b4", "bilinear form for n = 4 equals the displayed 8x8 matrix", bad.is_empty(), bad.join(" "))])
}

fn relations<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let failed: Vec<String> = check_relations(n, &ctx.q)?
            .into_iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.name, c.residual))
            .collect();
        let desc = format!("quadratic, commutation and braid relations of b_i for n = {n}");
        out.push(holds(&format!("relations.n{n}"), &desc, failed.is_empty(), failed.join("; ")));
    }
    Ok(out)
}

fn grassmann_value<F: CliField>(ctx: &Ctx<F>, terms: Grassmann) -> Result<Multivector<F>> {
    let mut m = Multivector::zero(8);
    for (idx, c) in terms {
        let blade = idx.iter().fold(0u32, |b, i| b | 1 << (i - 1));
        m.add_term(blade, &ctx.eval(c)?);
    }
    Ok(m)
}

fn grassmann<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for (k, name, terms) in [(3, "b12", B12), (4, "b21", B21), (5, "b121", B121)] {
        let want = grassmann_value(ctx, terms)?;
        let desc = format!("Grassmann expansion of {name}");
        out.push(same(&format!("grassmann.{name}"), &desc, ctx.h3.word(k), &want));
    }
    Ok(out)
}

fn coords<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let h = &ctx.h3;
    let x = eval_coords(&ctx.env, &["K1", "K2", "K3", "K4/q", "K5", "K6+q"])?;
    let back = h.to_hecke_coords(&h.to_multivector(&x))?;
    let odd = h.to_hecke_coords(&h.clifford().e(1)?);
    let b12 = h.to_hecke_coords(&grassmann_value(ctx, B12)?)?;
    Ok(vec![
        same("coords.round_trip", "Hecke coordinates of an embedded general element", &back, &x),
        same("coords.b12", "Grassmann form of b12 has coordinates (0,0,0,1,0,0)", &b12, &h.basis(3)),
        holds(
            "coords.odd",
            "e1 lies outside the Hecke subalgebra",
            matches!(odd, Err(CoreError::NotInSubalgebra { .. })),
            "accepted",
        ),
    ])
}

fn random_multivector<F: CliField>(rng: &mut impl Rng, q: &F) -> Multivector<F> {
    let mut m = Multivector::zero(8);
    for _ in 0..rng.gen_range(1..=3) {
        let c = F::from_i64(rng.gen_range(-3..=3)).add(&q.mul(&F::from_i64(rng.gen_range(-2..=2))));
        m.add_term(rng.gen_range(0..256u32), &c);
    }
    m
}

fn associativity<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let cl = CliffordAlgebra::hecke_form(4, &ctx.q);
    let mut rng = small_rng(ctx.seed);
    let mut bad = None;
    for k in 0..200 {
        let [x, y, z] = [0; 3].map(|_| random_multivector(&mut rng, &ctx.q));
        let lhs = cl.cmul(&cl.cmul(&x, &y)?, &z)?;
        let rhs = cl.cmul(&x, &cl.cmul(&y, &z)?)?;
        if let Some(r) = lhs.diff(&rhs) {
            bad.get_or_insert(format!("triple {k}: {r}"));
        }
    }
    Ok(vec![Outcome::new("clifford.associativity", "(xy)z = x(yz) on 200 random triples in Cl(4,4)", bad)])
}

fn reversion<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let cl = CliffordAlgebra::hecke_form(4, &ctx.q);
    let mut rng = small_rng(ctx.seed.wrapping_add(1));
    let mut bad = None;
    for k in 0..100 {
        let [x, y] = [0; 2].map(|_| random_multivector(&mut rng, &ctx.q));
        let lhs = cl.reverse(&cl.cmul(&x, &y)?)?;
        let rhs = cl.cmul(&cl.reverse(&y)?, &cl.reverse(&x)?)?;
        let twice = cl.reverse(&cl.reverse(&x)?)?;
        if let Some(r) = lhs.diff(&rhs).or_else(|| twice.diff(&x)) {
            bad.get_or_insert(format!("pair {k}: {r}"));
        }
    }
    let h = &ctx.h3;
    let b1 = h.basis(1);
    let rb1 = h.scalar(F::one().sub(&ctx.q)).sub(&b1);
    Ok(vec![
        Outcome::new("clifford.reversion", "rev(xy) = rev(y)rev(x) and rev(rev(x)) = x on 100 random pairs", bad),
        same("clifford.reversion_b1", "rev(b1) = (1-q) - b1", &h.rev(&b1), &rb1),
    ])
}

fn alpha<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let h = &ctx.h3;
    let a1 = eval_coords(&ctx.env, &["(q-1)/q", "1/q", "0", "0", "0", "0"])?;
    let a12 = eval_coords(&ctx.env, &["(1-2*q+q^2)/q^2", "(q-1)/q^2", "(q-1)/q^2", "0", "1/q^2", "0"])?;
    let a1p = eval_coords(&ctx.env, &["(2*q-1)/q", "1/q", "0", "0", "0", "0"])?;
    let mut reversed = Vec::new();
    let mut inverse = Vec::new();
    for (k, w) in LETTERS.iter().enumerate() {
        let aw = h.alpha_q(&h.basis(k))?;
        let mut prod = h.one();
        for &i in w.iter().rev() {
            prod = h.mul(&prod, &h.alpha_q(&h.gen(i)?)?);
        }
        if let Some(r) = aw.diff(&prod) {
            reversed.push(format!("{}: {r}", h.word_names()[k]));
        }
        if let Some(r) = h.mul(&aw, &h.basis(k)).diff(&h.one()) {
            inverse.push(format!("{}: {r}", h.word_names()[k]));
        }
    }
    Ok(vec![
        same("alpha.b1", "alpha_q(b1) = (q-1)/q + b1/q", &h.alpha_q(&h.basis(1))?, &a1),
        same("alpha.b12", "alpha_q(b1 b2) in the word basis", &h.alpha_q(&h.basis(3))?, &a12),
        same("alpha.one_plus_b1", "alpha_q(1 + b1) = (2q-1)/q + b1/q", &h.alpha_q(&h.one().add(&h.basis(1)))?, &a1p),
        holds("alpha.reversed_product", "alpha_q of a word is the reversed product of alpha_q(b_i)", reversed.is_empty(), reversed.join("; ")),
        holds("alpha.versor_inverse", "alpha_q(w) w = 1 for all six words", inverse.is_empty(), inverse.join("; ")),
    ])
}

fn inverse<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let h = &ctx.h3;
    let x = h.one().add(&h.basis(1));
    let inv = h.inverse(&x)?;
    let want = eval_coords(&ctx.env, &["(q-2)/(2*(q-1))", "1/(2*(q-1))", "0", "0", "0", "0"])?;
    let ax = h.alpha_q(&x)?;
    Ok(vec![
        same("inverse.one_plus_b1", "(1 + b1)^-1 = (q-2)/(2(q-1)) + b1/(2(q-1))", &inv, &want),
        holds("inverse.not_alpha", "(1 + b1)^-1 differs from alpha_q(1 + b1)", inv != ax, "equal"),
        same("inverse.b1", "b1^-1 = alpha_q(b1)", &h.inverse(&h.basis(1))?, &h.alpha_q(&h.basis(1))?),
        holds("inverse.zero", "0 is not invertible", h.inverse(&h.zero()).is_err(), "inverted"),
    ])
}

fn gamma<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let h = &ctx.h3;
    let got = [h.gamma_q_member(&h.basis(1))?, h.gamma_q_member(&h.basis(3))?, h.gamma_q_member(&h.one().add(&h.basis(1)))?];
    Ok(vec![holds(
        "gamma.examples",
        "b1 and b1 b2 satisfy alpha_q(X) X = 1, 1 + b1 does not",
        got == [true, true, false],
        format!("membership {got:?}"),
    )])
}

fn kw<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let h = &ctx.h3;
    let g1 = h.kw_transform(&h.basis(1));
    let g2 = h.kw_transform(&h.basis(2));
    let quad = h.mul(&g1, &g1).sub(&g1.scale(&ctx.q.sub(&F::one()))).sub(&h.scalar(ctx.q.clone()));
    Ok(vec![
        zero("kw.quadratic", "g1 = -b1 satisfies g^2 = (q-1) g + q", &quad),
        same("kw.b12", "the transform fixes b12 and equals g1 g2 there", &h.kw_transform(&h.basis(3)), &h.mul(&g1, &g2)),
        same("kw.one", "the transform fixes 1", &h.kw_transform(&h.one()), &h.one()),
    ])
}

/// At `q = 1` the generators become the transpositions of S3.
fn limit<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let h1 = HeckeAlgebra::new(3, F::one())?;
    let (y2, y11) = young_n2(&h1)?;
    let half = F::from_i64(2).inv()?;
    let (s1, s2) = (h1.gen(1)?, h1.gen(2)?);
    let sym = h1.one().add(&s1).scale(&half);
    let anti = h1.one().sub(&s1).scale(&half);
    let mut coxeter = Vec::new();
    for (name, lhs, rhs) in [
        ("s1^2", h1.mul(&s1, &s1), h1.one()),
        ("s2^2", h1.mul(&s2, &s2), h1.one()),
        ("braid", h1.mul_all(&[&s1, &s2, &s1]), h1.mul_all(&[&s2, &s1, &s2])),
        ("(s1 s2)^3", h1.pow(&h1.mul(&s1, &s2), 3), h1.one()),
    ] {
        if let Some(r) = lhs.diff(&rhs) {
            coxeter.push(format!("{name}: {r}"));
        }
    }
    let at1 = check_relations(4, &F::one())?.iter().filter(|c| !c.passed()).count();
    let r = r12(&ctx.h2)?;
    let r_sq: HeckeElement<F> = ctx.h2.mul(&r, &r);
    Ok(vec![
        same("limit.r12", "Y(2) at q = 1 is (1 + s1)/2", &y2.element, &sym),
        same("limit.c12", "Y(11) at q = 1 is (1 - s1)/2", &y11.element, &anti),
        holds("limit.coxeter", "s_i^2 = 1, braid relation and (s1 s2)^3 = 1 at q = 1", coxeter.is_empty(), coxeter.join("; ")),
        count("limit.relations", "relation residuals vanish at q = 1", at1, 0),
        same("r12.square", "R(12)^2 = (1+q) R(12)", &r_sq, &r.scale(&F::one().add(&ctx.q))),
    ])
}
