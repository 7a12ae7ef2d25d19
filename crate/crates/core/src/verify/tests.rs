use super::*;
use crate::catalog::extended_galilei;
use crate::exact::int;

fn quick() -> VerifyOptions {
    VerifyOptions {
        degree_cap: 2,
        ..VerifyOptions::default()
    }
}

#[test]
fn builtin_catalog_passes() {
    let report = verify_catalog(&Catalog::builtin(), &quick());
    let failed: Vec<_> = report
        .records
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(report.get("contraction.extended_galilei").is_some());
    assert_eq!(
        report.get("rest.extended_galilei.C2G").unwrap().detail,
        ["m*h"]
    );
}

#[test]
fn corrupted_target_breaks_contraction() {
    let broken = extended_galilei().with_bracket("p1", "kg1", &[]).unwrap();
    let cat = Catalog::builtin().with_algebra("extended_galilei", broken);
    let report = verify_catalog(&cat, &quick());
    assert_eq!(
        report.get("contraction.extended_galilei").unwrap().status,
        Status::Fail
    );
    assert!(!report.passed());
}

#[test]
fn corrupted_source_is_a_failure_not_a_panic() {
    let broken = extended_galilei()
        .with_bracket("p1", "kg1", &[("m", int(2))])
        .unwrap();
    let cat = Catalog::builtin().with_algebra("extended_poincare_hbar", broken);
    let report = verify_catalog(&cat, &quick());
    assert_eq!(report.get("limits.C1PE").unwrap().status, Status::Fail);
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let a = verify_catalog(&Catalog::builtin(), &quick());
    let b = verify_catalog(&Catalog::builtin(), &quick());
    assert_eq!(a, b);
    let text = a.to_jsonl();
    assert_eq!(VerificationReport::from_jsonl(&text).unwrap(), a);
    assert_eq!(text.lines().count(), a.records.len());
}
