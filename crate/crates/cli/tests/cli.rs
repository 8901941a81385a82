use std::process::Command;

fn schurdet(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schurdet")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn schur_eval_at_ones() {
    let (code, out) = schurdet(&["schur", "eval", "--partition", "2,2,1,1,0,0", "--at", "ones"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "189");
    let (code, out) = schurdet(&["schur", "eval", "--partition", "1,0", "--at", "2,1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "5/2");
}

#[test]
fn schur_poly() {
    let (code, out) = schurdet(&["schur", "poly", "--partition", "1,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "z1*z2 + z1*z3 + z2*z3");
}

#[test]
fn refined_csv() {
    let (code, out) = schurdet(&["asm", "refined", "--n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "i\\j,1,2,3,4\n1,0,2,3,2\n2,2,4,5,3\n3,3,5,4,2\n4,2,3,2,0\n");
    let (_, json) = schurdet(&["asm", "refined", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["counts"], serde_json::json!([[0, 1], [1, 0]]));
}

#[test]
fn asm_count_and_det() {
    assert_eq!(schurdet(&["asm", "count", "--n", "5"]), (0, "429\n".into()));
    let (code, out) = schurdet(&["asm", "det", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("det = -7\n"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(schurdet(&["verify", "theorem2", "--n", "2", "--l", "1", "--lp", "0"]).0, 0);
    assert_eq!(schurdet(&["verify", "nosuch"]).0, 2);
    assert_eq!(schurdet(&["verify"]).0, 2);
    assert_eq!(schurdet(&["asm", "count", "--n", "9"]).0, 2);
    assert_eq!(schurdet(&["schur", "eval", "--partition", "1,2"]).0, 2);
}

#[test]
fn json_report_and_replay() {
    let dir = std::env::temp_dir().join(format!("schurdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bazin.json");
    let p = path.to_str().unwrap();
    let (code, _) = schurdet(&["verify", "bazin", "--seed", "42", "--json", p]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["summary"]["total"], 100);
    let (code, out) = schurdet(&["report", p]);
    assert_eq!(code, 0);
    assert!(out.ends_with("bazin: 100 cases, 100 passed, 0 failed\n"));

    // a crafted failing report replays with exit 1
    let mut failing = v.clone();
    failing["cases"][0]["status"] = "fail".into();
    failing["summary"]["passed"] = 99.into();
    failing["summary"]["failed"] = 1.into();
    let bad = dir.join("failing.json");
    std::fs::write(&bad, failing.to_string()).unwrap();
    assert_eq!(schurdet(&["report", bad.to_str().unwrap()]).0, 1);
    std::fs::write(&bad, "{").unwrap();
    assert_eq!(schurdet(&["report", bad.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn output_is_deterministic() {
    let strip = |s: String| s.lines().map(|l| l.split(" (").next().unwrap().to_string()).collect::<Vec<_>>();
    let a = strip(schurdet(&["verify", "minexp", "--seed", "3"]).1);
    let b = strip(schurdet(&["--sequential", "verify", "minexp", "--seed", "3"]).1);
    assert_eq!(a, b);
}
