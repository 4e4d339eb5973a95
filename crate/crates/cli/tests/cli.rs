//! End-to-end tests against the built binary: output formats, exit
//! codes, the checked-in golden dossier, and config-file handling.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cohsys"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name);
    std::fs::read_to_string(path).expect("fixture present")
}

fn tmp_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn report_matches_golden_fixture_across_parallelism() {
    let args = [
        "report", "-g", "2", "-n", "3", "-d", "5", "-k", "2", "--petri",
    ];
    let want = fixture("dossier_g2_n3_d5_k2_petri.txt");
    for threads in ["1", "4"] {
        let out = bin()
            .args(args)
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        assert_eq!(stdout(&out), want, "threads={threads}");
    }
    let json = bin()
        .args([
            "report", "-g", "2", "-n", "3", "-d", "5", "-k", "2", "--petri", "--format", "json",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout(&json), fixture("dossier_g2_n3_d5_k2_petri.json"));
}

#[test]
fn report_json_has_versioned_schema() {
    let out = run(&[
        "report", "-g", "2", "-n", "2", "-d", "5", "-k", "1", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["schema"], "cohsys.dossier/1");
    assert_eq!(value["beta"], 7);
    assert_eq!(
        value["walls"]["walls"][0],
        serde_json::json!({"num": "1", "den": "1"})
    );
}

#[test]
fn report_known_instances() {
    let out = run(&["report", "-g", "2", "-n", "2", "-d", "5", "-k", "1"]);
    let text = stdout(&out);
    assert!(text.contains("beta(2,5,1) = 7"));
    assert!(text.contains("2 wall(s): 1, 3"));
    assert!(text.contains("flip proved good"));

    let out = run(&["report", "-g", "2", "-n", "1", "-d", "0", "-k", "1"]);
    let text = stdout(&out);
    assert!(text.contains("exception: (1,0,1)"));

    let out = run(&["report", "-g", "0", "-n", "3", "-d", "4", "-k", "2"]);
    let text = stdout(&out);
    assert!(text.contains("isomorphic to Gr(2,3)"));
}

#[test]
fn report_negative_degree_flag() {
    let out = run(&["report", "-g", "2", "-n", "2", "-d", "-1", "-k", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("require d >= 0: violated"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["report", "-g", "2", "-n", "2"]); // missing degree/sections
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["report", "-g", "2", "-n", "0", "-d", "1", "-k", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["scan", "--identity", "no-such-thing"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["sweep", "-g", "2..3"]); // missing other ranges
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["sweep", "-g", "5..2", "-n", "2", "-d", "1..3", "-k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_csv_flips_nonempty_at_three() {
    let out = run(&["sweep", "-g", "2", "-n", "2", "-d", "1..6", "-k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 7, "header + six rows");
    assert_eq!(
        lines[0],
        "g,n,d,k,petri,beta,walls,g0_nonempty,g0_dimension,terminal_nonempty,bn_nonempty,bn_equals_full"
    );
    for (i, line) in lines[1..].iter().enumerate() {
        let d = i as i64 + 1;
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[2], d.to_string());
        let expect = if d >= 3 { "yes" } else { "no" };
        assert_eq!(cols[10], expect, "bn_nonempty at d={d}");
    }
}

#[test]
fn sweep_json_rows_parse() {
    let out = run(&[
        "sweep", "-g", "2..3", "-n", "2", "-d", "1..4", "-k", "1..2", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("row parses"))
        .collect();
    assert_eq!(rows.len(), 2 * 4 * 2);
    // lexicographic (g, n, d, k)
    let keys: Vec<(i64, i64, i64, i64)> = rows
        .iter()
        .map(|r| {
            (
                r["genus"].as_i64().unwrap(),
                r["rank"].as_i64().unwrap(),
                r["degree"].as_i64().unwrap(),
                r["sections"].as_i64().unwrap(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn sweep_empty_range_is_ok() {
    // a degenerate single-point range yields exactly one row
    let out = run(&["sweep", "-g", "3", "-n", "2", "-d", "4", "-k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end().lines().count(), 2);
}

#[test]
fn scan_clean_identities_exit_zero() {
    let out = run(&[
        "scan",
        "--identity",
        "euler",
        "-g",
        "0..3",
        "-n",
        "1..3",
        "-d",
        "-5..5",
        "-k",
        "0..3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no violations"));

    let out = run(&["scan", "--identity", "duality", "-d", "-8..8"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["scan", "--identity", "k1-wall-form"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["scan", "--identity", "noflips"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_list_shows_registry() {
    let out = run(&["scan", "--identity", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in [
        "euler",
        "duality",
        "k1-wall-form",
        "noflips",
        "beta-specialization",
        "equals-full",
    ] {
        assert!(text.contains(name), "registry lists {name}");
    }
}

#[test]
fn config_presets_and_flag_override() {
    let cfg = tmp_path("sweep.conf");
    std::fs::write(
        &cfg,
        "# preset ranges\ngenus=2\nrank=2\ndegree=1..6\nsections=2\npetri=true\n",
    )
    .unwrap();
    let out = run(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end().lines().count(), 7);

    // the command line wins over the file
    let out = run(&["sweep", "--config", cfg.to_str().unwrap(), "-d", "1..2"]);
    assert_eq!(stdout(&out).trim_end().lines().count(), 3);

    let bad = tmp_path("bad.conf");
    std::fs::write(&bad, "nonsense here\n").unwrap();
    let out = run(&["sweep", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = tmp_path("dossier.txt");
    let out = run(&[
        "report",
        "-g",
        "2",
        "-n",
        "2",
        "-d",
        "5",
        "-k",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.contains("beta(2,5,1) = 7"));
}
