use std::process::Command;

use binomlab_cli::Report;

fn binomlab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_binomlab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn report(args: &[&str]) -> (i32, Report) {
    let (code, stdout, stderr) = binomlab(args);
    let r = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stderr}"));
    (code, r)
}

#[test]
fn seq_r_csv() {
    let (code, out, _) = binomlab(&["seq", "R", "--max", "16", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 18);
    assert_eq!(lines[0], "n,value");
    assert_eq!(lines[1], "0,-1");
    assert_eq!(lines[17], "16,11996748255");
}

#[test]
fn seq_names_are_case_sensitive() {
    let (_, upper, _) = binomlab(&["seq", "T", "--max", "3"]);
    let (_, lower, _) = binomlab(&["seq", "t", "--max", "3"]);
    assert_ne!(upper, lower);
    assert_eq!(upper.lines().count(), 4);
}

#[test]
fn poly_sm_needs_m() {
    let (code, _, err) = binomlab(&["poly", "Sm", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("--m"));
    let (code, out, _) = binomlab(&["poly", "S", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[1,24,30]");
}

#[test]
fn verify_thm13_single() {
    let (code, r) = report(&["verify", "thm13", "--p", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(r.results.len(), 1);
    assert_eq!(r.summary.pass, 1);
    assert_eq!(r.config.params["p"], "3");
}

#[test]
fn scan_conj54_json() {
    let (code, r) = report(&["scan", "conj54", "--max-n", "50", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(r.results.len(), 50);
    assert_eq!(r.summary.pass, 50);
    let ns: Vec<u64> = r
        .results
        .iter()
        .map(|x| x.params["n"].parse().unwrap())
        .collect();
    assert_eq!(ns, (1..=50).collect::<Vec<_>>());
}

#[test]
fn list_families_output() {
    let (code, out, _) = binomlab(&["list"]);
    assert_eq!(code, 0);
    assert!(out.contains("thm12"));
    assert!(out.contains("conj57"));
    assert!(out.lines().count() >= 25);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(binomlab(&["verify", "thm99"]).0, 2);
    assert_eq!(binomlab(&["verify"]).0, 2);
    assert_eq!(binomlab(&["seq", "R"]).0, 2);
    assert_eq!(binomlab(&["verify", "thm13", "--jobs", "0"]).0, 2);
    // A kernel-framework instance without a kernel.
    assert_eq!(binomlab(&["verify", "thm42", "--n", "5", "--a", "1"]).0, 2);
}

#[test]
fn ill_posed_exits_1() {
    let (code, r) = report(&["verify", "thm13", "--p", "9", "--format", "json"]);
    assert_eq!(code, 1);
    assert_eq!(r.summary.ill_posed, 1);
}

#[test]
fn kernel_from_text_and_negative_lists() {
    let (code, r) = report(&[
        "verify",
        "thm41",
        "--n",
        "6",
        "--a",
        "-2,4",
        "--b",
        "0,2",
        "--kernel",
        "k:0,0,1/1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0, "{:?}", r.results);
    assert_eq!(r.results[0].params["a"], "[-2,4]");
    assert_eq!(r.results[0].params["d"], "2");
}

#[test]
fn kernel_violation_is_ill_posed() {
    // f1 = k/(2k-1) is not integer-valued.
    let (code, r) = report(&[
        "verify", "thm41", "--n", "4", "--a", "1", "--b", "0", "--kernel", "f1", "--format", "json",
    ]);
    assert_eq!(code, 1);
    assert_eq!(r.summary.ill_posed, 1);
}

#[test]
fn qverify_families() {
    let (code, r) = report(&["qverify", "thm31", "--n", "6", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(r.results.len(), 6);
    let (code, r) = report(&[
        "qverify", "conj58", "--max-m", "2", "--max-n", "6", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.results.len(), 12);
    assert!(r.results.iter().all(|x| x.family == "conj58ii"));
}

#[test]
fn parallelism_does_not_change_output() {
    let args = |jobs: &'static str| {
        [
            "scan", "thm15_ii", "--max-n", "12", "--format", "json", "--jobs", jobs,
        ]
    };
    let (_, one, _) = binomlab(&args("1"));
    let (_, four, _) = binomlab(&args("4"));
    assert_eq!(one, four);
}

#[test]
fn json_round_trips() {
    let (_, text, _) = binomlab(&["scan", "lemma23", "--max-n", "6", "--format", "json"]);
    let r: Report = serde_json::from_str(&text).unwrap();
    let again = binomlab_cli::emit_report(&r, binomlab_cli::Format::Json);
    assert_eq!(String::from_utf8(again).unwrap(), text);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("binomlab-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let (code, stdout, _) = binomlab(&[
        "verify",
        "lemma22",
        "--max-n",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timestamp_only_on_request() {
    let (_, r) = report(&["verify", "thm13", "--p", "5", "--format", "json"]);
    assert!(r.timestamp.is_none());
    let (_, r) = report(&[
        "verify",
        "thm13",
        "--p",
        "5",
        "--format",
        "json",
        "--timestamp",
    ]);
    assert!(r.timestamp.is_some());
}
