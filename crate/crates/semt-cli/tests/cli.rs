//! End-to-end tests against the compiled binary: exit codes, stream
//! discipline, pipe composition, and byte-determinism of outputs.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn semt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semt"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    semt().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = semt()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|err| {
        panic!(
            "stdout is not JSON ({err}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

#[test]
fn label_emits_document_with_expected_constant() {
    let output = run(&["label", "g-plus", "--n", "5", "--k", "2", "--c", "3"]);
    assert!(output.status.success());
    let doc = stdout_json(&output);
    assert_eq!(doc["magic_constant"], 40);
    assert_eq!(doc["family"], "5;2,2,2,2,5");
}

#[test]
fn label_pipes_into_verify() {
    let labeled = run(&["label", "g-sym", "--n", "5", "--k", "2", "--r", "1"]);
    assert!(labeled.status.success());
    let verified = run_with_stdin(&["verify"], &String::from_utf8_lossy(&labeled.stdout));
    assert!(verified.status.success());
    let report = stdout_json(&verified);
    assert_eq!(report["valid"], true);
    assert_eq!(report["magic_constant"], 38);
}

#[test]
fn verify_rejects_corruption_with_exit_one_and_report() {
    let output = run(&[
        "verify",
        "--input",
        fixture("corrupted_fig1.json").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let report = stdout_json(&output);
    assert_eq!(report["valid"], false);
    assert!(!report["violations"].as_array().unwrap().is_empty());
    assert!(!output.stderr.is_empty(), "diagnostics belong on stderr");
}

#[test]
fn verify_accepts_all_figure_fixtures() {
    for (name, constant) in [
        ("fig1_g_plus_5_2_3.json", 40),
        ("fig2_g_plus_9_3_4.json", 86),
        ("fig3_g_minus_5_4_2.json", 50),
        ("fig4_g_minus_5_8_6.json", 82),
        ("fig5_g_sym_5_2_1.json", 38),
        ("fig6_g_sym_5_2_3.json", 38),
    ] {
        let output = run(&["verify", "--input", fixture(name).to_str().unwrap()]);
        assert!(output.status.success(), "{name}");
        let report = stdout_json(&output);
        assert_eq!(report["magic_constant"], constant, "{name}");
    }
}

#[test]
fn bounds_reports_exact_rational() {
    let output = run(&["bounds", "--family", "5;2,2,2,2,5"]);
    assert!(output.status.success());
    let view = stdout_json(&output);
    assert_eq!(view["degsum_lower"], 40);
    assert_eq!(view["degsum_lower_exact"], "119/3");
    assert_eq!(view["family_lower"], 40);
    assert_eq!(view["conjecture_value"], 40);
}

#[test]
fn search_returns_exact_strength() {
    let output = run(&["search", "--family", "3;1,1,1"]);
    assert!(output.status.success());
    let view = stdout_json(&output);
    assert_eq!(view["status"], "Exact");
    assert_eq!(view["sm"], 15);
    assert_eq!(view["witness"]["magic_constant"], 15);
}

#[test]
fn search_with_tiny_budget_exits_one() {
    let output = run(&["search", "--family", "5;2,1,0,3,1", "--budget", "3"]);
    assert_eq!(output.status.code(), Some(1));
    let view = stdout_json(&output);
    assert_eq!(view["status"], "BudgetExhausted");
}

#[test]
fn config_file_sets_defaults_and_flags_win() {
    let dir = std::env::temp_dir().join(format!("semt-cli-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("semt.conf");
    std::fs::write(&config, "# sweep defaults\nbudget = 3\nworkers = 2\n").unwrap();

    // Config default budget of 3 nodes starves the search.
    let starved = run(&[
        "--config",
        config.to_str().unwrap(),
        "search",
        "--family",
        "5;2,1,0,3,1",
    ]);
    assert_eq!(starved.status.code(), Some(1));

    // An explicit flag overrides the config default.
    let unstarved = run(&[
        "--config",
        config.to_str().unwrap(),
        "search",
        "--family",
        "5;2,1,0,3,1",
        "--budget",
        "50000000",
    ]);
    assert!(unstarved.status.success());

    let bad = dir.join("bad.conf");
    std::fs::write(&bad, "no_such_key = 1\n").unwrap();
    let rejected = run(&[
        "--config",
        bad.to_str().unwrap(),
        "search",
        "--family",
        "3;0,0,0",
    ]);
    assert_eq!(rejected.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_writes_jsonl_and_csv() {
    let dir = std::env::temp_dir().join(format!("semt-cli-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let prefix = dir.join("report");
    let output = run(&[
        "sweep",
        "--n-max",
        "3",
        "--pendant-sum-max",
        "2",
        "--output",
        prefix.to_str().unwrap(),
    ]);
    assert!(output.status.success());

    let jsonl = std::fs::read_to_string(dir.join("report.jsonl")).unwrap();
    let lines: Vec<&str> = jsonl.lines().collect();
    assert_eq!(lines.len(), 4); // canonical families of C3 with <= 2 pendants
    for line in &lines {
        let instance: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(instance["outcome"]["status"], "matches-conjecture");
    }

    let csv = std::fs::read_to_string(dir.join("report.csv")).unwrap();
    assert!(csv.starts_with("family,n,p,q,"));
    assert_eq!(csv.lines().count(), 5); // header + 4 instances

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn export_dot_round_trips_figure_one() {
    let output = run(&[
        "export-dot",
        "--input",
        fixture("fig1_g_plus_5_2_3.json").to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let dot = String::from_utf8(output.stdout).unwrap();
    assert!(dot.starts_with("graph semt {"));
    // Numbers as drawn: vertex 18 exists, cycle edge 35 exists.
    assert!(dot.contains("a5_5 [label=\"18\"]"));
    assert!(dot.contains("a1 -- a2 [label=\"35\"]"));

    let invalid = run(&[
        "export-dot",
        "--input",
        fixture("corrupted_fig1.json").to_str().unwrap(),
    ]);
    assert_eq!(invalid.status.code(), Some(1));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["label", "g-minus", "--n", "5", "--k", "4", "--c", "2"],
        vec!["bounds", "--family", "7;1,1,1,1,1,1,1"],
        vec!["search", "--family", "5;1,1,1,1,2"],
        vec![
            "export-dot",
            "--input",
            fixture("fig5_g_sym_5_2_1.json").to_str().unwrap(),
        ],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn worker_count_does_not_change_search_output() {
    let sequential = run(&["search", "--family", "5;1,1,1,1,2"]);
    let parallel = run(&["search", "--family", "5;1,1,1,1,2", "--workers", "4"]);
    assert!(sequential.status.success());
    assert!(parallel.status.success());
    assert_eq!(sequential.stdout, parallel.stdout);
}

#[test]
fn domain_and_usage_errors_use_distinct_exit_codes() {
    // Even cycle: well-formed descriptor, unsatisfiable constraint.
    assert_eq!(
        run(&["bounds", "--family", "4;0,0,0,0"]).status.code(),
        Some(1)
    );
    // Malformed descriptor.
    assert_eq!(
        run(&["bounds", "--family", "nonsense"]).status.code(),
        Some(2)
    );
    // Constraint violation in a labeler.
    assert_eq!(
        run(&["label", "g-minus", "--n", "5", "--k", "2", "--c", "3"])
            .status
            .code(),
        Some(1)
    );
    // Unknown flag is clap's usage error.
    assert_eq!(run(&["bounds", "--no-such-flag"]).status.code(), Some(2));
    // k = 0 twin-pendant family is rejected as a domain error.
    assert_eq!(
        run(&["label", "g-sym", "--n", "5", "--k", "0", "--r", "1"])
            .status
            .code(),
        Some(1)
    );
}
