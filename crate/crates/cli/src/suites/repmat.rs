use qyoung_core::linalg::{FieldMatrix, UniPoly};
use qyoung_core::repmat::*;

use super::{count, holds, same, Check, Ctx, Diff, Value};
use crate::error::Result;
use crate::field::CliField;
use crate::report::Outcome;

const WORDS: [&str; 6] = ["Id", "b1", "b2", "b12", "b21", "b121"];

pub fn checks<F: CliField>() -> Vec<Check<F>> {
    vec![
        Check { id: "repmat.basis", run: basis::<F> },
        Check { id: "repmat.matrices", run: matrices::<F> },
        Check { id: "repmat.invariants", run: invariants::<F> },
        Check { id: "repmat.multiplicative", run: multiplicative::<F> },
    ]
}

fn basis<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let d = ctx.rep()?;
    let mut out = vec![count("repmat.independent", "the six elements of S are linearly independent", d.basis.to_words().rank(), 6)];
    let shown = std::iter::once(&ONE_IN_S).chain(WORDS_IN_S.iter());
    for (w, row) in shown.enumerate() {
        let want = ctx.env.eval_all(row)?;
        let got = &d.words_in_s[w];
        let bad: Vec<String> = (0..6).filter(|&k| got[k] != want[k]).map(|k| format!("S{}: {}", k + 1, got[k].sub(&want[k]))).collect();
        let desc = format!("S-coordinates of {} equal the displayed expansion", WORDS[w]);
        out.push(holds(&format!("repmat.words.{}", WORDS[w]), &desc, bad.is_empty(), bad.join("; ")));
    }
    Ok(out)
}

fn matrices<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let d = ctx.rep()?;
    let mut out = Vec::new();
    let pairs = [(&M_B1, &d.m_b1), (&M_B2, &d.m_b2)].into_iter().chain(M_S.iter().zip(&d.m_s));
    for (shown, m) in pairs {
        let desc = format!("{} equals the displayed matrix", shown.name);
        out.push(same(&format!("repmat.{}", shown.name), &desc, m, &shown.eval(&ctx.env)?));
    }
    Ok(out)
}

fn invariants<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let d = ctx.rep()?;
    let q = &ctx.q;
    let x1 = UniPoly::linear(&F::one());
    let xq = UniPoly::linear(&q.neg());
    let minimal = x1.mul(&xq);
    let characteristic = x1.pow(3).mul(&xq.pow(3));
    let mut out = Vec::new();
    for (name, m) in [("M_b1", &d.m_b1), ("M_b2", &d.m_b2)] {
        let trace = ctx.eval("3*(q-1)")?;
        out.push(same(&format!("repmat.trace.{name}"), &format!("trace {name} = 3(q-1)"), &Value(m.trace()), &Value(trace)));
        out.push(same(&format!("repmat.det.{name}"), &format!("det {name} = -q^3"), &Value(m.det()), &Value(ctx.eval("-q^3")?)));
        let mp = m.minpoly();
        out.push(holds(&format!("repmat.minpoly.{name}"), &format!("minimal polynomial of {name} is (x-1)(x+q)"), mp == minimal, &mp));
        let cp = m.charpoly();
        out.push(holds(&format!("repmat.charpoly.{name}"), &format!("characteristic polynomial of {name} is (x-1)^3 (x+q)^3"), cp == characteristic, &cp));
        let quad = m.mul(m).sub(&m.scale(&F::one().sub(q))).sub(&FieldMatrix::identity(6).scale(q));
        out.push(holds(&format!("repmat.quadratic.{name}"), &format!("{name}^2 = (1-q) {name} + q"), quad.is_zero(), quad.diff(&FieldMatrix::zeros(6, 6)).unwrap_or_default()));
        let block = |k: usize| [0, 1, 1, 2, 2, 3][k];
        let stray: Vec<String> = (0..36)
            .map(|k| (k / 6, k % 6))
            .filter(|&(i, j)| block(i) != block(j) && !m.get(i, j).is_zero())
            .map(|(i, j)| format!("({},{})", i + 1, j + 1))
            .collect();
        out.push(holds(&format!("repmat.blocks.{name}"), &format!("{name} is block diagonal with blocks 1, 2, 2, 1"), stray.is_empty(), stray.join(" ")));
    }
    Ok(out)
}

fn multiplicative<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let (h, d) = (&ctx.h3, ctx.rep()?);
    let mats = (0..6).map(|w| d.basis.left_regular_matrix(h, &h.basis(w))).collect::<std::result::Result<Vec<_>, _>>()?;
    let mut bad = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            let lhs = d.basis.left_regular_matrix(h, &h.mul(&h.basis(i), &h.basis(j)))?;
            if lhs != mats[i].mul(&mats[j]) {
                bad.push(format!("{} {}", WORDS[i], WORDS[j]));
            }
        }
    }
    Ok(vec![holds("repmat.multiplicative", "M(xy) = M(x) M(y) for all 36 pairs of words", bad.is_empty(), bad.join("; "))])
}
