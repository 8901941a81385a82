use schurdet::harness::*;
use schurdet::Exec;
use serde_json::json;

fn opts() -> SuiteOptions {
    SuiteOptions { exec: Exec::Parallel, ..SuiteOptions::default() }
}

#[test]
fn theorem1_suite() {
    let r = run_suite("theorem1", &opts()).unwrap();
    assert_eq!(r.summary, Summary { total: 5, passed: 5, failed: 0 });
    assert!(r.ok());
}

#[test]
fn bazin_suite_is_reproducible() {
    let r = run_suite("bazin", &SuiteOptions { seed: 42, ..opts() }).unwrap();
    assert_eq!(r.cases.len(), 100);
    assert_eq!(r.summary.failed, 0);
    assert_eq!(r.seed, 42);
    let seq = run_suite("bazin", &SuiteOptions { seed: 42, exec: Exec::Sequential, ..SuiteOptions::default() }).unwrap();
    let strip = |r: &SuiteReport| r.cases.iter().map(|c| (c.id.clone(), c.status, c.detail.clone())).collect::<Vec<_>>();
    assert_eq!(strip(&r), strip(&seq));
    let other = run_suite("bazin", &SuiteOptions { seed: 7, ..opts() }).unwrap();
    assert_eq!(other.summary.failed, 0);
    assert_ne!(strip(&r), strip(&other));
}

#[test]
fn cases_are_sorted() {
    let r = run_suite("asm", &opts()).unwrap();
    let ids: Vec<&str> = r.cases.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn unknown_suite() {
    assert_eq!(run_suite("nope", &opts()).unwrap_err(), HarnessError::UnknownSuite("nope".into()));
}

#[test]
fn json_round_trip() {
    let r = run_suite("wheel", &opts()).unwrap();
    let text = r.to_json();
    assert_eq!(SuiteReport::from_json(&text).unwrap(), r);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 4);
    for k in ["suite", "seed", "cases", "summary"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["cases"][0]["status"], "pass");
}

#[test]
fn statuses_serialize_lowercase() {
    let fixture = SuiteReport::new(
        "fixture",
        1,
        vec![
            CaseReport { id: "b".into(), params: json!({}), status: Status::Fail, detail: "x".into(), elapsed_ms: 0 },
            CaseReport { id: "a".into(), params: json!({"n": 1}), status: Status::Infeasible, detail: String::new(), elapsed_ms: 3 },
            CaseReport { id: "c".into(), params: json!({}), status: Status::Skipped, detail: String::new(), elapsed_ms: 0 },
        ],
    );
    assert_eq!(fixture.cases[0].id, "a");
    assert_eq!(fixture.summary, Summary { total: 3, passed: 0, failed: 1 });
    assert!(!fixture.ok());
    let v: serde_json::Value = serde_json::from_str(&fixture.to_json()).unwrap();
    assert_eq!(v["cases"][0]["status"], "infeasible");
    assert_eq!(v["cases"][1]["status"], "fail");
    assert_eq!(v["cases"][2]["status"], "skipped");
}

#[test]
fn infeasible_cases_are_reported() {
    let o = SuiteOptions { n: Some(3), l: Some(2), lp: Some(0), ..opts() };
    let r = run_suite("theorem2", &o).unwrap();
    assert!(!r.cases.is_empty());
    assert!(r.cases.iter().all(|c| c.status == Status::Infeasible));
    assert!(r.ok());
}

#[test]
fn parameter_filters() {
    let o = SuiteOptions { n: Some(2), l: Some(1), lp: Some(0), ..opts() };
    let r = run_suite("theorem2", &o).unwrap();
    assert!(r.cases.iter().any(|c| c.id == "identity/n=2,l=1,lp=0"));
    assert!(r.ok());
    let o = SuiteOptions { m: Some(3), big_n: Some(4), ..opts() };
    let r = run_suite("appendixB", &o).unwrap();
    assert!(r.cases.iter().all(|c| c.params["m"] == 3 && c.params["N"] == 4));
    assert!(r.ok());
}

#[test]
fn golden_csv_format() {
    assert_eq!(golden_csv(2).unwrap(), "i\\j,1,2\n1,0,1\n2,1,0\n");
    assert!(golden_csv(6).is_none());
}
