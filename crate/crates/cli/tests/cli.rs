use std::process::Command;

use immerse_cli::run;

struct Output {
    code: u8,
    out: String,
    err: String,
}

fn immerse(args: &[&str], stdin: &str) -> Output {
    let mut argv = vec!["immerse"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

// complement of C7
const C7_BAR: &str = "FUzro";

#[test]
fn analyze_c5() {
    let r = immerse(&["analyze", "-g", "Dhc"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    for line in ["alpha 2", "chi 3", "min_degree 2", "diameter 2"] {
        assert!(
            r.out.lines().any(|l| l == line),
            "missing {line} in\n{}",
            r.out
        );
    }
    let j = immerse(&["analyze", "-g", "Dhc", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&j.out).unwrap();
    assert_eq!(v["chi"], 3);
    assert_eq!(v["diameter"], 2);
}

#[test]
fn complement_fixture_is_right() {
    let r = immerse(&["convert", "-g", C7_BAR, "--to", "edgelist"], "");
    assert!(r.out.starts_with("7 14\n"), "{}", r.out);
    let a = immerse(&["analyze", "-g", C7_BAR], "");
    assert!(
        a.out.contains("\nchi 4\n")
            && a.out.contains("\nalpha 2\n")
            && a.out.contains("\nomega 3\n")
    );
}

#[test]
fn construct_third_then_verify() {
    let c = immerse(&["construct", "third", "-g", C7_BAR], "");
    assert_eq!(c.code, 0, "{}", c.err);
    let v = immerse(&["verify"], &c.out);
    assert_eq!(v.code, 0);
    assert_eq!(v.out, "valid strong immersion of K_3\n");
}

#[test]
fn every_construction_verifies() {
    let cases: [(&[&str], &str); 4] = [
        (&["construct", "multipartite", "--sizes", "2,2,2"], ""),
        (&["construct", "dense56", "-g", "E]~o"], ""),
        (&["construct", "c4free", "-g", "Dhc"], ""),
        (&["construct", "third", "--seed", "5", "-g", C7_BAR], ""),
    ];
    for (args, stdin) in cases {
        let c = immerse(args, stdin);
        assert_eq!(c.code, 0, "{args:?}: {}", c.err);
        assert!(
            c.err.starts_with("valid strong immersion of K_"),
            "{}",
            c.err
        );
        assert_eq!(immerse(&["verify"], &c.out).code, 0);
    }
}

#[test]
fn shared_edge_is_named() {
    // K3 in C5 with two paths routed over edge 2-3
    let cert = r#"{"pattern": "Bw", "host": "Dhc", "corners": [0, 2, 4],
        "paths": [{"edge": [0, 1], "path": [0, 1, 2]},
                  {"edge": [1, 2], "path": [2, 3, 4]},
                  {"edge": [0, 2], "path": [0, 4, 3, 2, 3]}]}"#;
    let r = immerse(&["verify"], cert);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("invalid certificate:"), "{}", r.out);
    let cert = r#"{"pattern": "Bw", "host": "Dhc", "corners": [0, 1, 3],
        "paths": [{"edge": [0, 1], "path": [0, 1]},
                  {"edge": [1, 2], "path": [1, 2, 3]},
                  {"edge": [0, 2], "path": [0, 1, 2, 3]}]}"#;
    let r = immerse(&["verify"], cert);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("host edge {0, 1} is shared"), "{}", r.out);
}

#[test]
fn error_prefixes_and_codes() {
    let r = immerse(&["frobnicate"], "");
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("usage error:"));
    assert_eq!(r.err.lines().count(), 1);

    let r = immerse(&["analyze", "-i", "/nonexistent/graph.g6"], "");
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("input error:"));

    let r = immerse(&["verify"], "{not json");
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("certificate error:"));

    let r = immerse(&["construct", "c4free", "-g", "C`"], "");
    assert_eq!(r.code, 1, "{}", r.err);
    assert!(r.err.starts_with("construction error:"), "{}", r.err);

    let r = immerse(
        &[
            "oracle", "paths", "--clique", "5", "--budget", "3", "-g", "E]~o",
        ],
        "",
    );
    assert_eq!(r.code, 2, "{}", r.err);
    assert!(r.err.starts_with("budget exceeded:"));

    let r = immerse(&["analyze", "--budget", "0", "-g", "Dhc"], "");
    assert_eq!(r.code, 1);
}

#[test]
fn oracles() {
    let r = immerse(&["oracle", "lifts", "--clique", "3", "-g", "Dhc"], "");
    assert_eq!(r.out, "true\n");
    let r = immerse(&["oracle", "paths", "--clique", "4", "-g", "Dhc"], "");
    assert_eq!(r.out, "none\n");
    let r = immerse(&["oracle", "paths", "--pattern", "Bw", "-g", "Dhc"], "");
    assert_eq!(
        immerse(&["verify"], &r.out).out,
        "valid strong immersion of K_3\n"
    );
    let r = immerse(&["oracle", "maxclique", "-g", C7_BAR], "");
    assert!(r.out.starts_with("t 5\ndefinitive true\n"), "{}", r.out);
}

#[test]
fn convert_round_trip_and_detection() {
    let r = immerse(&["convert", "-g", "Dhc", "--to", "edgelist"], "");
    assert_eq!(r.out, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    assert_eq!(immerse(&["convert"], &r.out).out, "Dhc\n");
    assert_eq!(
        immerse(&["convert", "--format", "edgelist"], "3 1\n0 2\n").out,
        "BO\n"
    );
}

#[test]
fn hunt_outputs() {
    let r = immerse(&["hunt", "-n", "5"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("survivors              0"), "{}", r.out);
    let j = immerse(
        &[
            "hunt", "--source", "random", "-n", "10", "--count", "8", "--seed", "3", "--json",
        ],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&j.out).unwrap();
    assert_eq!(v["examined"], 8);
    assert_eq!(v["config"]["seed"], 3);
    let s = immerse(&["hunt", "--source", "stream"], "Dhc\nEhEG\n");
    assert!(s.out.contains("rejected (alpha >= 3)  1"), "{}", s.out);
    assert_eq!(immerse(&["hunt", "-n", "9"], "").code, 1);
}

#[test]
fn deterministic_output() {
    let args = [
        "hunt",
        "--source",
        "random",
        "-n",
        "11",
        "--count",
        "6",
        "--seed",
        "9",
        "--json",
        "--workers",
        "3",
    ];
    assert_eq!(immerse(&args, "").out, immerse(&args, "").out);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_immerse"))
        .args(["analyze", "-g", "Dhc"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("chi 3"));
    let out = Command::new(env!("CARGO_BIN_EXE_immerse"))
        .args(["verify", "-i", "/nonexistent"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
