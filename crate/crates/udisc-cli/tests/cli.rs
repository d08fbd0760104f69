//! End-to-end checks of the command-line interface: output shape,
//! determinism, exit codes.

use std::process::{Command, Output};

fn udisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_udisc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn psp_json_matches_known_point() {
    let output = udisc(&["psp", "--na", "1", "--nb", "1", "--nc", "1", "--eta1", "0.5", "--s", "0"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["command"], "psp");
    let total = value["total"].as_f64().unwrap();
    assert!((total - 1.0 / 3.0).abs() < 1e-11);
    assert_eq!(value["per_block"].as_array().unwrap().len(), 3);
}

#[test]
fn psp_at_unit_overlap_is_zero() {
    let output = udisc(&["psp", "--na", "2", "--nb", "3", "--nc", "2", "--s", "1"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["total"].as_f64().unwrap(), 0.0);
}

#[test]
fn swapped_registers_canonicalize_with_notice() {
    let output = udisc(&["psp", "--na", "2", "--nb", "1", "--nc", "3", "--s", "0.5"]);
    assert!(output.status.success());
    let stderr = String::from_utf8(output.stderr.clone()).unwrap();
    assert!(stderr.contains("swapped"));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["config"]["n_a"], 3);
    assert_eq!(value["config"]["n_c"], 2);
    assert_eq!(value["config"]["swapped"], true);
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = [
        "sweep", "--na", "2", "--nb", "1", "--nc", "2", "--s-grid", "0:1:7", "--eta-grid",
        "0.2:0.8:5", "--format", "csv",
    ];
    let first = udisc(&args);
    let second = udisc(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let seeded = ["asp", "--na", "1", "--nb", "2", "--nc", "1", "--samples", "500", "--seed", "9"];
    let first = udisc(&seeded);
    let second = udisc(&seeded);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_output_round_trips() {
    for args in [
        vec!["psp", "--na", "1", "--nb", "2", "--nc", "1", "--beta", "1.2"],
        vec!["sweep", "--na", "1", "--nb", "1", "--nc", "1", "--s-grid", "0:1:3", "--eta-grid", "0.3:0.7:3"],
        vec!["limits", "--m", "2", "--n", "1", "--eta1", "0.4", "--s", "0.6"],
        vec!["asp", "--na", "1", "--nb", "1", "--nc", "1", "--samples", "100", "--seed", "3"],
        vec!["verify", "--na", "1", "--nb", "1", "--nc", "1"],
    ] {
        let output = udisc(&args);
        assert!(output.status.success(), "{args:?}");
        let text = stdout(&output);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let reprinted = serde_json::to_string_pretty(&value).unwrap();
        let reparsed: serde_json::Value = serde_json::from_str(&reprinted).unwrap();
        assert_eq!(value, reparsed, "{args:?}");
    }
}

#[test]
fn sweep_grid_shape_and_ordering() {
    let output = udisc(&[
        "sweep", "--na", "1", "--nb", "1", "--nc", "1", "--s-grid", "0:1:5", "--eta-grid",
        "0.25:0.75:3", "--format", "csv",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "s,beta,eta1,a,b,c,total");
    assert_eq!(lines.len(), 1 + 5 * 3);
    // s-major ordering: first three rows share s = 0, eta ascending
    assert!(lines[1].starts_with("0,") && lines[1].contains(",0.25,"));
    assert!(lines[3].starts_with("0,") && lines[3].contains(",0.75,"));
    assert!(lines[4].starts_with("0.25,"));
    // endpoints: s = 0 row carries the maximal total, s = 1 row zero
    let last_total: f64 = lines[15].rsplit(',').next().unwrap().parse().unwrap();
    assert_eq!(last_total, 0.0);
    // totals never increase along s for fixed eta1
    for eta_index in 0..3 {
        let mut previous = f64::INFINITY;
        for s_index in 0..5 {
            let row = lines[1 + s_index * 3 + eta_index];
            let total: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
            assert!(total <= previous + 1e-12);
            previous = total;
        }
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    // usage: missing overlap
    let output = udisc(&["psp", "--na", "1", "--nb", "1", "--nc", "1"]);
    assert_eq!(output.status.code(), Some(2));
    // usage: both overlap forms
    let output = udisc(&["psp", "--na", "1", "--nb", "1", "--nc", "1", "--s", "0.5", "--beta", "1"]);
    assert_eq!(output.status.code(), Some(2));
    // usage: malformed grid
    let output = udisc(&["sweep", "--na", "1", "--nb", "1", "--nc", "1", "--s-grid", "nope"]);
    assert_eq!(output.status.code(), Some(2));
    // degenerate priors
    let output = udisc(&["psp", "--na", "1", "--nb", "1", "--nc", "1", "--eta1", "0", "--s", "0.5"]);
    assert_eq!(output.status.code(), Some(3));
    // resource cap
    let output = udisc(&["verify", "--na", "8", "--nb", "4", "--nc", "8"]);
    assert_eq!(output.status.code(), Some(4));
    // oracle needs qubits
    let output = udisc(&["verify", "--na", "1", "--nb", "1", "--nc", "1", "-d", "3"]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn verify_reports_every_check_with_residuals() {
    let output = udisc(&["verify", "--na", "2", "--nb", "1", "--nc", "1"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["passed"], true);
    let checks = value["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    for check in checks {
        assert!(check["residual"].is_number(), "{check}");
        assert_eq!(check["passed"], true);
    }
    // the lopsided configuration carries the reconstruction note
    assert!(checks
        .iter()
        .any(|c| c["name"] == "psp-equivalence" && c["note"].is_string()));
    // pass/fail lines are printed for humans
    let stderr = String::from_utf8(output.stderr.clone()).unwrap();
    assert!(stderr.contains("PASS"));
}

#[test]
fn env_var_overrides_oracle_cap() {
    let output = Command::new(env!("CARGO_BIN_EXE_udisc"))
        .args(["verify", "--na", "5", "--nb", "4", "--nc", "5"])
        .env("UDISC_MAX_DIM", "64")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(4));
    let output = Command::new(env!("CARGO_BIN_EXE_udisc"))
        .args(["psp", "--na", "1", "--nb", "1", "--nc", "1", "--s", "0.3"])
        .env("UDISC_MAX_DIM", "64")
        .output()
        .expect("binary runs");
    assert!(output.status.success());
}

#[test]
fn verify_sweeps_all_small_configs() {
    let output = udisc(&["verify", "--max-copies", "4", "--format", "csv"]);
    assert!(output.status.success());
    let text = stdout(&output);
    // configs with N <= 4: (1,1,1), (1,2,1), (2,1,1)
    for prefix in ["1,1,1,2,", "1,2,1,2,", "2,1,1,2,"] {
        assert!(text.lines().any(|l| l.starts_with(prefix)), "missing {prefix}");
    }
}
