use qyoung_core::appendix::{verify_appendix, verify_appendix_with, Status};
use qyoung_core::formula::Env;
use qyoung_core::hecke::HeckeAlgebra;
use qyoung_field::RationalFunction;

#[test]
fn symbolic_reconciliation() {
    let h = HeckeAlgebra::new(3, RationalFunction::q()).unwrap();
    let env = Env::symbolic();
    let report = verify_appendix(&h, &env).unwrap();
    for e in &report.entries {
        eprintln!("{} {} checks={} residual={}", e.name, e.status, e.checks.len(), e.residual);
        for c in &e.checks {
            if c.status == Status::Fail {
                eprintln!("   {} {} {}", c.label, c.display, c.residual);
            }
        }
    }
    assert_eq!(report.entries.len(), 33);
    let failed: Vec<&str> = report.failures().map(|e| e.name.as_str()).collect();
    assert_eq!(failed, ["p21"]);
    let p3 = env.eval("p3 + 1").unwrap();
    let perturbed = verify_appendix_with(&h, &env, &[("p3", p3)]).unwrap();
    let e = perturbed.entry("p3").unwrap();
    assert_eq!(e.status, Status::Fail);
    assert_eq!(e.residual, RationalFunction::one().to_string());
}
