use qyoung_core::appendix::{verify_appendix, Status};

use super::{Check, Ctx};
use crate::error::Result;
use crate::field::CliField;
use crate::report::Outcome;

pub fn checks<F: CliField>() -> Vec<Check<F>> {
    vec![Check { id: "appendix", run: appendix::<F> }]
}

fn appendix<F: CliField>(ctx: &Ctx<F>) -> Result<Vec<Outcome>> {
    let report = verify_appendix(&ctx.h3, &ctx.env)?;
    Ok(report
        .entries
        .iter()
        .map(|e| {
            let failed: Vec<String> =
                e.checks.iter().filter(|c| c.status == Status::Fail).map(|c| format!("{}: {}", c.label, c.residual)).collect();
            let residual = (e.status == Status::Fail).then(|| {
                format!("stored {} recomputed {} difference {} in {}", e.stored, e.recomputed, e.residual, failed.join("; "))
            });
            let desc = format!("stored {} agrees with {} citing formula(s)", e.name, e.checks.len());
            Outcome::new(format!("appendix.{}", e.name), desc, residual)
        })
        .collect())
}
