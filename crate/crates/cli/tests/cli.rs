use std::process::{Command, Output};

fn strfact(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strfact"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn factorize_machine_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = strfact(
        &[
            "factorize",
            "--word",
            "aababa",
            "--solver",
            "max-dp",
            "--lines",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "dim=4 width=2 opt=yes\naa\nb\nab\na\n");

    let out = strfact(
        &[
            "factorize",
            "--word",
            "abac",
            "--solver",
            "min-greedy",
            "--lines",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&out), "dim=3 width=1 opt=unknown\na\nb\na\nc\n");
}

#[test]
fn min_greedy_needs_width_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = strfact(
        &[
            "factorize",
            "--word",
            "abac",
            "--k",
            "3",
            "--solver",
            "min-greedy",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn brute_refusal_is_a_budget_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = strfact(
        &[
            "factorize",
            "--word",
            "abababababab",
            "--k",
            "3",
            "--solver",
            "max-brute",
            "--budget-nodes",
            "100",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bb_overrun_prints_incumbent() {
    let dir = tempfile::tempdir().unwrap();
    let out = strfact(
        &[
            "factorize",
            "--word",
            "aababaabbbabaabab",
            "--k",
            "3",
            "--solver",
            "max-bb",
            "--budget-nodes",
            "3",
            "--lines",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("opt=no"));
}

#[test]
fn malformed_instances_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("dup.txt", "1 2\nx\ny\nz\nx y z\nx y z\n"),
        ("reserved.txt", "1 1\nt1_1\ny\nz\nt1_1 y z\n"),
        ("unequal.txt", "2 1\nx1 x2\ny1\nz1 z2\nx1 y1 z1\n"),
    ];
    for (name, text) in cases {
        std::fs::write(dir.path().join(name), text).unwrap();
        let out = strfact(&["reduce-3dm", "--input", name], dir.path());
        assert_eq!(out.status.code(), Some(2), "{name}");
    }
}

#[test]
fn reduce_prints_metadata() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("i.txt"), "1 1\nx\ny\nz\nx y z\n").unwrap();
    let out = strfact(&["reduce-3dm", "--input", "i.txt"], dir.path());
    let text = stdout(&out);
    assert!(
        text.contains("d = 18\n") && text.contains("n = 22\n") && text.contains("sigma = 14\n")
    );
}

#[test]
fn solve_reports_absent_matching() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("i.txt"),
        "2 2\nx1 x2\ny1 y2\nz1 z2\nx1 y1 z1\nx2 y1 z2\n",
    )
    .unwrap();
    let out = strfact(&["solve-3dm", "--input", "i.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "matching=no\n");
}

#[test]
fn verify_rejects_wide_factor() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("w.txt"), "aababa\n").unwrap();
    std::fs::write(dir.path().join("ok.txt"), "aa\nb\nab\na\n").unwrap();
    std::fs::write(dir.path().join("wide.txt"), "aab\naba\n").unwrap();
    std::fs::write(dir.path().join("wrong.txt"), "ab\nab\nab\n").unwrap();
    let ok = strfact(
        &[
            "verify",
            "--word",
            "w.txt",
            "--factors",
            "ok.txt",
            "--k",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(
        (ok.status.code(), stdout(&ok).as_str()),
        (Some(0), "ok dim=4 width=2\n")
    );
    for bad in ["wide.txt", "wrong.txt"] {
        let out = strfact(
            &["verify", "--word", "w.txt", "--factors", bad, "--k", "2"],
            dir.path(),
        );
        assert_eq!(out.status.code(), Some(1), "{bad}");
    }
}

#[test]
fn experiment_csv_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = strfact(&["experiment", "--trials", "5", "--lines"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("trial,seed,n,sigma,k,d_greedy,d_opt,ratio\n"));
    assert_eq!(text.lines().count(), 6);
}
