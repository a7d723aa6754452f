//! End-to-end tests of the command-line dispatch: exit codes, golden text
//! output, JSON schemas, and round-trips of everything that gets printed.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let exe = env!("CARGO_BIN_EXE_rtmaps");
    let out = Command::new(exe).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn one_vertex_tree_on_yx_is_the_euler_combination() {
    let (code, stdout, _) = run(&["rtm", "[]", "yx"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "-yxx + yyx");
}

#[test]
fn corollary_sweep_exits_zero() {
    let (code, stdout, _) = run(&["check", "cor", "--max-forest-degree", "4"]);
    assert_eq!(code, 0, "{}", stdout);
    assert!(stdout.contains("cor: pass"));
}

#[test]
fn euler_relation_is_generated_and_verified() {
    let (code, stdout, _) = run(&["relations", "--forest-degree", "1", "--seed", "yx", "--numeric"]);
    assert_eq!(code, 0, "{}", stdout);
    assert!(stdout.contains("-z(3) + z(1,2) = 0"), "{}", stdout);

    let (code, stdout, _) = run(&[
        "--json", "relations", "--forest-degree", "1", "--seed", "yx", "--numeric",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let rel = &v.as_array().unwrap()[0];
    assert_eq!(rel["provenance"]["kind"], "rtm");
    assert_eq!(rel["provenance"]["seed"], "yx");
    let residual = rel["numeric_residual"].as_f64().unwrap();
    assert!(residual.abs() < 1e-8);
    let terms = rel["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["index"], serde_json::json!([3]));
    assert_eq!(terms[1]["index"], serde_json::json!([1, 2]));
}

#[test]
fn forests_listing_matches_known_counts() {
    for (degree, count) in [(0usize, 1usize), (1, 1), (2, 2), (3, 4), (4, 9), (5, 20)] {
        let (code, stdout, _) = run(&["forests", "--degree", &degree.to_string()]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = stdout.lines().collect();
        // degree 0 prints the empty forest as an empty line
        assert_eq!(lines.len(), count, "degree {}", degree);
        let (code, stdout, _) = run(&["--json", "forests", "--degree", &degree.to_string()]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(v["count"], count);
    }
}

#[test]
fn printed_polynomials_reparse_to_equal_values() {
    for args in [
        ["fpoly", "[][]"].as_slice(),
        &["gpoly", "[[]]"],
        &["product", "--op", "star", "y", "yx"],
        &["product", "--op", "harub", "y", "y"],
        &["product", "--op", "diamond", "x", "y"],
        &["rtm", "[[]]", "x"],
    ] {
        let (code, stdout, _) = run(args);
        assert_eq!(code, 0, "{:?}", args);
        let printed = stdout.trim();
        let reparsed = rtmaps::word::parse_word(printed).unwrap();
        assert_eq!(reparsed.render(), printed, "{:?}", args);
    }
}

#[test]
fn printed_forest_sums_reparse() {
    let (code, stdout, _) = run(&["--json", "antipode", "[[]]"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    for t in v.as_array().unwrap() {
        let f = rtmaps::Forest::parse(t["forest"].as_str().unwrap()).unwrap();
        assert_eq!(f.render(), t["forest"].as_str().unwrap());
        assert!(rtmaps::rational::parse_q(t["coeff"].as_str().unwrap()).is_some());
    }
}

#[test]
fn coproduct_json_schema() {
    let (code, stdout, _) = run(&["--json", "coproduct", "[[]]"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let terms = v.as_array().unwrap();
    assert_eq!(terms.len(), 3);
    for t in terms {
        for key in ["coeff", "left", "right"] {
            assert!(t.get(key).is_some());
        }
    }
}

#[test]
fn check_report_json_is_stable_modulo_timing() {
    let norm = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["millis"] = serde_json::json!(0);
        v
    };
    let (c1, s1, _) = run(&["--json", "check", "thm3", "--max-forest-degree", "2"]);
    let (c2, s2, _) = run(&["--json", "check", "thm3", "--max-forest-degree", "2"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(norm(&s1), norm(&s2));
    let v = norm(&s1);
    assert_eq!(v["identity"], "thm3");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["counterexample"], serde_json::Value::Null);
}

#[test]
fn exit_codes() {
    // usage / parse errors
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["rtm", "[unclosed", "yx"]).0, 2);
    assert_eq!(run(&["rtm", "[]", "q"]).0, 2);
    assert_eq!(run(&["check", "not-an-identity"]).0, 2);
    assert_eq!(run(&["zeta", "0,2"]).0, 2);
    // divergent index
    assert_eq!(run(&["zeta", "2,1"]).0, 2);
    // resource caps
    assert_eq!(run(&["forests", "--degree", "9"]).0, 3);
    assert_eq!(run(&["rank", "--degree", "100"]).0, 3);
    assert_eq!(run(&["check", "cor", "--max-forest-degree", "12"]).0, 3);
    // happy paths
    assert_eq!(run(&["zeta", "2"]).0, 0);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn env_var_overrides_degree_cap() {
    let exe = env!("CARGO_BIN_EXE_rtmaps");
    let out = Command::new(exe)
        .args(["forests", "--degree", "4"])
        .env("RTMAPS_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(exe)
        .args(["forests", "--degree", "4"])
        .env("RTMAPS_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn zeta_values_match_known_constants() {
    let (code, stdout, _) = run(&["zeta", "2"]);
    assert_eq!(code, 0);
    let value: f64 = stdout.trim().parse().unwrap();
    assert!((value - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);

    let (_, s12, _) = run(&["zeta", "1,2"]);
    let (_, s3, _) = run(&["zeta", "3"]);
    let (v12, v3): (f64, f64) = (s12.trim().parse().unwrap(), s3.trim().parse().unwrap());
    assert!((v12 - v3).abs() < 1e-12);
}

#[test]
fn rank_command_reports_full_rank() {
    let (code, stdout, _) = run(&["--json", "rank", "--degree", "4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["rank"], 8);
    assert_eq!(v["dimension"], 8);
}

#[test]
fn failing_numeric_tolerance_exits_one() {
    // tolerance zero cannot be met by the strict comparison
    let (code, _, _) = run(&[
        "relations", "--forest-degree", "1", "--seed", "yx", "--numeric", "--tol", "0",
    ]);
    assert_eq!(code, 1);
}
