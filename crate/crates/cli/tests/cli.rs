//! Behavior of the command line: formats, filters, configuration files,
//! exit codes and determinism.

mod common;

use common::{run, stdout};

#[test]
fn roots_counts_by_type() {
    let g2 = stdout(&["roots", "--type", "G2", "--format", "csv"]);
    assert_eq!(g2.lines().count(), 1 + 6);
    let a1 = stdout(&["roots", "--type", "A1", "--format", "csv"]);
    assert_eq!(a1.lines().count(), 1 + 1);
    let e6: serde_json::Value = serde_json::from_str(&stdout(&["roots", "--type", "E6", "--format", "json"])).unwrap();
    assert_eq!(e6["positive_roots"].as_array().unwrap().len(), 36);
    assert_eq!(e6["num_positive"], 36);
}

#[test]
fn weyl_lists_small_groups_only() {
    let g2: serde_json::Value = serde_json::from_str(&stdout(&["weyl", "--format", "json"])).unwrap();
    assert_eq!(g2["order"], "12");
    assert_eq!(g2["elements"].as_array().unwrap().len(), 12);
    let e6: serde_json::Value = serde_json::from_str(&stdout(&["weyl", "--type", "E6", "--format", "json"])).unwrap();
    assert_eq!(e6["order"], "51840");
    assert!(e6["elements"].as_array().unwrap().is_empty());
}

#[test]
fn ideal_counts_follow_catalan_numbers() {
    for (t, n) in [("G2", 8), ("F4", 105), ("E6", 833)] {
        let v: serde_json::Value = serde_json::from_str(&stdout(&["ideals", "--type", t, "--format", "json"])).unwrap();
        assert_eq!(v["count"], n, "{t}");
    }
}

#[test]
fn orbits_of_g2_in_increasing_dimension() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["orbits", "--format", "json"])).unwrap();
    let dims: Vec<u64> = v["orbits"].as_array().unwrap().iter().map(|o| o["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![0, 6, 8, 10, 12]);
}

#[test]
fn fibers_filter_by_ideal() {
    let text = stdout(&["fibers", "--type", "G2", "--ideal", "I_emptyset", "--format", "csv"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows[0].contains("G/B"));
}

#[test]
fn betti_of_the_w_torsor() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["betti", "--ideal", "I_alphabeta", "--levi", "", "--format", "json"])).unwrap();
    assert_eq!(v["tables"][0]["betti"], serde_json::json!([12]));
}

#[test]
fn dot_action_single_row_is_regular_representation() {
    let text = stdout(&["dot-action", "--ideal", "I_alphabeta"]);
    assert!(text.contains("1+ε₁+2χ₂+2χ₁+ε₂+ε"), "{text}");
}

#[test]
fn dot_action_csv_sums_to_group_order() {
    let text = stdout(&["dot-action", "--format", "csv"]);
    let dims = [1, 1, 1, 1, 2, 2];
    let mut totals = std::collections::BTreeMap::<String, i64>::new();
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let dim: i64 = cells[2..].iter().zip(dims).map(|(c, d)| c.parse::<i64>().unwrap() * d).sum();
        *totals.entry(cells[0].to_string()).or_default() += dim;
    }
    assert_eq!(totals.len(), 8);
    assert!(totals.values().all(|&t| t == 12));
}

#[test]
fn unknown_names_are_configuration_errors() {
    for args in [
        vec!["fibers", "--orbit", "E1"],
        vec!["roots", "--type", "Q7"],
        vec!["betti", "--ideal", "I_gamma"],
        vec!["betti", "--levi", "delta"],
        vec!["dot-action", "--type", "F4"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unsupported_computation_exits_with_three() {
    let out = run(&["fibers", "--type", "G2", "--orbit", "G2a1", "--quintuples"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# dot action of one ideal\ntype = G2\nideal = I_beta\nformat = csv\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = stdout(&["dot-action", "--config", cfg]);
    assert!(from_file.starts_with("ideal,degree,"));
    assert_eq!(from_file.lines().count(), 3);
    let overridden = stdout(&["dot-action", "--config", cfg, "--ideal", "I_alpha", "--format", "text"]);
    assert!(overridden.contains("(1+χ₂+χ₁+ε₂)(1+q)"), "{overridden}");
}

#[test]
fn bad_config_files_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(run(&["roots", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("missing.cfg");
    assert_eq!(run(&["roots", "--config", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("roots.json");
    let out = run(&["roots", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["type"], "G2");
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        vec!["fibers", "--format", "json"],
        vec!["dot-action", "--format", "json"],
        vec!["quintuples", "--type", "E6", "--orbit", "E6a3", "--format", "json"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}
