use dioph_verify::driver::{verify_all, VerifyOptions};
use dioph_verify::{Reason, RunReport};

const SCHEMA: &str = include_str!("../schema/report.schema.json");

fn assert_valid(report: &RunReport) {
    let schema: serde_json::Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let instance: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(&instance)
        .take(5)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

fn assert_case_invariants(report: &RunReport) {
    for c in &report.cases {
        assert_eq!(c.eliminated, c.reason != Reason::FailureSurvivor, "{}", c.case);
        let js: Vec<usize> = c.convergents.iter().map(|r| r.j).collect();
        assert!(js.iter().all(|j| j % 2 == 0 && *j >= 2), "{}: {js:?}", c.case);
        assert!(js.windows(2).all(|w| w[0] < w[1]), "{}: {js:?}", c.case);
    }
}

#[test]
fn full_report_matches_schema() {
    let report = verify_all(&VerifyOptions::default()).unwrap();
    assert_valid(&report);
    assert_case_invariants(&report);
}

#[test]
fn incomplete_report_matches_schema() {
    let report = verify_all(&VerifyOptions {
        precision_start: 8,
        precision_cap: 8,
        ..VerifyOptions::default()
    })
    .unwrap();
    assert_valid(&report);
    assert_case_invariants(&report);
    assert!(report.chains.iter().any(|c| c.error.is_some() && c.lhs.is_none()));
}

#[test]
fn schema_rejects_inconsistent_certificate() {
    let report = verify_all(&VerifyOptions {
        precision_start: 8,
        precision_cap: 8,
        ..VerifyOptions::default()
    })
    .unwrap();
    let schema: serde_json::Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut instance: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    instance["cases"][0]["eliminated"] = serde_json::Value::Bool(false);
    assert!(!validator.is_valid(&instance));
    let mut instance: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    instance["cases"][0]["q_cap"] = serde_json::Value::String("1.5e3".into());
    assert!(!validator.is_valid(&instance));
}
