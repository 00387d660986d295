use std::path::PathBuf;
use std::process::{Command, Output};

use superjordan_cli::eval::{eval_in, table_of};
use superjordan_cli::{run_suite, Check, Construction, Suite, SuiteConfig, Verdict};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superjordan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("superjordan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

const SMALL_CK: [&str; 11] = [
    "verify", "--construction", "ck", "--suite", "jordan", "--trials", "1", "--max-deg", "0", "--seed", "1",
];

#[test]
fn repeated_runs_write_identical_json() {
    let (a, b) = (scratch("a.json"), scratch("b.json"));
    for path in [&a, &b] {
        let mut args = SMALL_CK.to_vec();
        args.extend(["--json", path.to_str().unwrap()]);
        assert_eq!(code(&bin(&args)), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn report_matches_golden_file() {
    let path = scratch("golden.json");
    let mut args = SMALL_CK.to_vec();
    args.extend(["--json", path.to_str().unwrap()]);
    assert_eq!(code(&bin(&args)), 0);
    let got = std::fs::read_to_string(&path).unwrap();
    let want = std::fs::read_to_string(golden("ck_jordan_seed1.json")).unwrap();
    assert_eq!(got, want);
}

#[test]
fn witnesses_are_reproducible() {
    let cfg = SuiteConfig {
        construction: Construction::Jadelta,
        suite: Suite::All,
        trials: 5,
        max_deg: 3,
        ..SuiteConfig::default()
    };
    let (a, b) = (run_suite(&cfg).unwrap(), run_suite(&cfg).unwrap());
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.overall, Verdict::Pass);
    let other = run_suite(&SuiteConfig { seed: 7, ..cfg }).unwrap();
    assert_ne!(a.to_json(), other.to_json());
}

#[test]
fn exit_codes_follow_the_verdict() {
    let pass = bin(&["verify", "--construction", "jadelta", "--suite", "noncyclic", "--trials", "10"]);
    assert_eq!(code(&pass), 0, "{}", stdout(&pass));
    assert!(stdout(&pass).contains("overall: pass"));

    let inconclusive = bin(&[
        "verify", "--construction", "jadelta", "--suite", "simplicity", "--trials", "2", "--window", "4",
        "--max-window", "4",
    ]);
    assert_eq!(code(&inconclusive), 2);
    assert!(stdout(&inconclusive).contains("overall: inconclusive"));

    let no_cert = bin(&["verify", "--construction", "gck", "--suite", "certificates", "--deg-bound", "0"]);
    assert_eq!(code(&no_cert), 2);
}

#[test]
fn usage_errors_exit_with_three() {
    for args in [
        vec!["verify", "--construction", "nope"],
        vec!["verify", "--construction", "ck", "--suite", "everything"],
        vec!["verify", "--construction", "ck", "--suite", "embedding"],
        vec!["verify", "--construction", "jvec", "--trials", "0"],
        vec!["verify", "--construction", "jvec", "--window", "50", "--max-window", "48"],
        vec!["eval", "--construction", "jadelta", "bar(1)"],
        vec!["eval", "--construction", "jvec", "bar(x) *"],
        vec!["frobnicate"],
        vec![],
    ] {
        assert_eq!(code(&bin(&args)), 3, "{args:?}");
    }
    assert_eq!(code(&bin(&["--help"])), 0);
}

#[test]
fn fail_verdict_maps_to_one() {
    assert_eq!(Verdict::Fail.exit_code(), 1);
    assert_eq!(Verdict::combine([Verdict::Pass, Verdict::Inconclusive, Verdict::Fail]), Verdict::Fail);
    assert_eq!(Verdict::combine([Verdict::Pass, Verdict::Inconclusive]), Verdict::Inconclusive);
    assert_eq!(Verdict::combine([]), Verdict::Pass);
}

#[test]
fn eval_examples() {
    let out = bin(&["eval", "--construction", "jvec", "bar(x) * bar(y)"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "1 + y^4\n"));
    let out = bin(&["eval", "--construction", "ck", "w3(1) * w3(1)"]);
    assert_eq!(stdout(&out), "-1\n");
    assert_eq!(eval_in(Construction::Jvec, "bar(x) * bar(x)").unwrap(), "0");
    assert_eq!(eval_in(Construction::Double, "X(x) * X(y)").unwrap(), "1 + y^4");
    let err = bin(&["eval", "--construction", "jvec", "bar(x) *"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("at 8"));
}

#[test]
fn tables_cover_all_generator_pairs() {
    for (c, n) in [
        (Construction::Jvec, 6),
        (Construction::Jadelta, 5),
        (Construction::Double, 6),
        (Construction::Ck, 10),
        (Construction::Gck, 11),
    ] {
        assert_eq!(table_of(c).unwrap().len(), n * n, "{c}");
    }
    let out = stdout(&bin(&["table", "--construction", "jadelta"]));
    assert!(out.contains("bar(x) * bar(y) = 1 + y^4\n"));
    assert!(out.contains("bar(y) * bar(x) = -1 - y^4\n"));
}

#[test]
fn all_expands_to_applicable_suites() {
    let cfg = SuiteConfig {
        construction: Construction::Double,
        suite: Suite::All,
        trials: 2,
        max_deg: 2,
        ..SuiteConfig::default()
    };
    let rep = run_suite(&cfg).unwrap();
    let suites: Vec<Suite> = rep.checks.iter().map(|c| c.suite).collect();
    for s in [Suite::Jordan, Suite::Bracket, Suite::Simplicity] {
        assert!(suites.contains(&s), "{s}");
    }
    assert!(rep.checks.iter().any(|c| matches!(c.check, Check::Saturation { .. })));
    assert_eq!(rep.overall, Verdict::Pass);
}
