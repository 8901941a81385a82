//! Acceptance run: one line per criterion, exact equality throughout.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use schurdet::asmlab::{self, EnumOptions};
use schurdet::harness::{golden_csv, run_suite, SuiteOptions, SuiteReport, Status};
use schurdet::{BigRat, Exec};

struct Verdict {
    ok: bool,
    detail: String,
}

fn suite_verdict(reports: &[SuiteReport], keep: impl Fn(&str) -> bool, expected: Option<usize>) -> Verdict {
    let cases: Vec<_> = reports.iter().flat_map(|r| &r.cases).filter(|c| keep(&c.id)).collect();
    let passed = cases.iter().filter(|c| c.status == Status::Pass).count();
    let bad: Vec<String> =
        cases.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{} [{:?}]", c.id, c.status)).collect();
    let count_ok = expected.is_none_or(|e| e == cases.len());
    Verdict {
        ok: bad.is_empty() && count_ok && !cases.is_empty(),
        detail: if bad.is_empty() {
            format!("{passed}/{} cases", cases.len())
        } else {
            format!("{passed}/{} cases; not passing: {}", cases.len(), bad.join(", "))
        },
    }
}

fn suite(name: &str) -> SuiteReport {
    run_suite(name, &SuiteOptions::default()).expect("known suite")
}

fn criterion_1() -> Verdict {
    let expected = [1u64, 2, 7, 42, 429, 7436];
    let counts: Vec<u64> =
        (1..=6).map(|n| asmlab::enumerate(n, EnumOptions::default()).unwrap().count() as u64).collect();
    let formula_ok = (1..=6).all(|n| asmlab::count_formula(n) == BigUint::from(expected[n - 1]));
    Verdict { ok: counts == expected && formula_ok, detail: format!("counts {counts:?}") }
}

fn criterion_2() -> Verdict {
    let mismatched: Vec<usize> = (1..=5)
        .filter(|&n| {
            let t = asmlab::refined_matrix(n, EnumOptions::default(), Exec::default()).unwrap();
            Some(t.to_csv()) != golden_csv(n)
        })
        .collect();
    Verdict { ok: mismatched.is_empty(), detail: format!("tables 1..5, mismatched {mismatched:?}") }
}

fn criterion_3() -> Verdict {
    let mut dets = Vec::new();
    let mut ok = true;
    for n in 2..=6 {
        let (det, expected) = asmlab::theorem1_values(n, EnumOptions::default(), Exec::default()).unwrap();
        ok &= BigRat::from_integer(det.clone()) == expected;
        dets.push(det);
    }
    let printed: Vec<BigInt> = [-1i64, 1, -7, 1764].into_iter().map(BigInt::from).collect();
    ok &= dets[..4] == printed[..];
    let shown: Vec<String> = dets.iter().map(|d| d.to_string()).collect();
    Verdict { ok, detail: format!("det = {}", shown.join(", ")) }
}

fn criterion_4() -> Verdict {
    suite_verdict(&[suite("theorem2")], |id| id.starts_with("identity/"), Some(22))
}

fn criterion_5() -> Verdict {
    suite_verdict(&[suite("wheel"), suite("recursion")], |_| true, None)
}

fn criterion_6() -> Verdict {
    suite_verdict(&[suite("appendixB")], |_| true, None)
}

fn criterion_7() -> Verdict {
    let reports = [suite("bazin"), suite("minexp")];
    let bazin = suite_verdict(&reports[..1], |_| true, Some(100));
    let minexp = suite_verdict(&reports[1..], |id| id.starts_with("sum/"), Some(9));
    let corollary = suite_verdict(&reports[1..], |id| id.starts_with("divisibility/"), Some(3));
    Verdict {
        ok: bazin.ok && minexp.ok && corollary.ok,
        detail: format!("bazin {}; minor expansion {} x100; corollary {}", bazin.detail, minexp.detail, corollary.detail),
    }
}

fn criterion_8() -> Verdict {
    let r = suite("asm");
    let groups = [("combinatorial-point/", 4), ("schur-count/", 5), ("double-refined/", 3), ("vander-substitution/", 3)];
    let verdicts: Vec<Verdict> =
        groups.iter().map(|(p, k)| suite_verdict(std::slice::from_ref(&r), |id| id.starts_with(p), Some(*k))).collect();
    Verdict {
        ok: verdicts.iter().all(|v| v.ok),
        detail: verdicts.iter().map(|v| v.detail.clone()).collect::<Vec<_>>().join("; "),
    }
}

fn criterion_9() -> Verdict {
    suite_verdict(&[suite("schur")], |id| id.starts_with("splitting/"), Some(13))
}

fn criterion_10() -> Verdict {
    suite_verdict(&[suite("schur")], |id| id.starts_with("two-path/"), None)
}

fn main() -> ExitCode {
    schurdet::par::configure_threads_from_env();
    let criteria: [(&str, Duration, fn() -> Verdict); 10] = [
        ("ASM counts n=1..6", Duration::from_secs(30), criterion_1),
        ("golden refined tables", Duration::from_secs(5), criterion_2),
        ("ASM determinant n=2..6", Duration::from_secs(60), criterion_3),
        ("coefficient-matrix identity", Duration::from_secs(300), criterion_4),
        ("wheel and recursion", Duration::from_secs(120), criterion_5),
        ("m-staircase checks", Duration::from_secs(180), criterion_6),
        ("compound determinants", Duration::from_secs(60), criterion_7),
        ("combinatorial point and refinements", Duration::from_secs(120), criterion_8),
        ("splitting formula", Duration::from_secs(30), criterion_9),
        ("two-path Schur oracle", Duration::from_secs(60), criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let ok = v.ok && elapsed <= *limit;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name} ({:.2}s, limit {}s) {}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            v.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
