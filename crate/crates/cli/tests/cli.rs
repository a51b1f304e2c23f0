//! End-to-end tests of the binary: exit codes, output formats, the shipped
//! JSON shape, and structure-constant table files.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn hlcy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlcy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hlcy-test-{}-{name}", std::process::id()));
    fs::write(&p, contents).expect("write temp file");
    p
}

#[test]
fn homology_row_matches_expected_class() {
    let out = hlcy(&[
        "homology",
        "--complex",
        "lie",
        "--algebra",
        "witt",
        "--weight",
        "0",
        "--max-degree",
        "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("n=3  dim=1 Z=1 B=0 H=1  reps: e-1∧e0∧e1"),
        "got:\n{text}"
    );
}

#[test]
fn json_output_matches_shipped_schema() {
    let out = hlcy(&[
        "homology",
        "--complex",
        "cyclic",
        "--algebra",
        "u-witt",
        "--weight",
        "0",
        "--length",
        "2",
        "--max-degree",
        "3",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");

    // structural validation against the shipped schema's required keys
    let schema: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../docs/schema.json"
        ))
        .expect("schema ships with the repo"),
    )
    .expect("schema is valid JSON");
    for key in schema["required"].as_array().unwrap() {
        assert!(
            !v[key.as_str().unwrap()].is_null(),
            "report is missing `{key}`"
        );
    }
    assert_eq!(v["tool"], "hlcy");
    assert!(v["version"].is_string());
    assert!(v["rows"].is_array());
    assert!(v["checks"].is_array());
    let row_required = schema["properties"]["rows"]["items"]["required"]
        .as_array()
        .unwrap();
    let row = &v["rows"][0];
    for key in row_required {
        assert!(
            !row[key.as_str().unwrap()].is_null(),
            "row is missing `{key}`"
        );
    }

    // verify reports carry named checks with pass flags
    let out = hlcy(&["verify", "gv", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    for c in checks {
        assert!(c["name"].is_string());
        assert!(c["anchor"].is_string());
        assert_eq!(c["pass"], true);
    }
}

#[test]
fn csv_has_fixed_header() {
    let out = hlcy(&[
        "homology",
        "--complex",
        "lie",
        "--algebra",
        "witt",
        "--weight",
        "0",
        "--max-degree",
        "3",
        "--format",
        "csv",
        "--no-reps",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.starts_with(
            "complex,algebra,weight,length,degree,dim,cycles,boundaries,homology,representatives"
        ),
        "got:\n{text}"
    );
    // --no-reps leaves the representative column empty
    assert!(text.lines().nth(4).unwrap().ends_with(','));
}

#[test]
fn infinite_slice_requests_exit_2() {
    let out = hlcy(&[
        "homology",
        "--complex",
        "leibniz",
        "--algebra",
        "witt",
        "--max-degree",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("weight"),
        "stderr names the missing grading: {err}"
    );

    let out = hlcy(&[
        "homology",
        "--complex",
        "hochschild",
        "--algebra",
        "u-witt",
        "--weight",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("length"));
}

#[test]
fn usage_errors_exit_2() {
    let out = hlcy(&["homology", "--complex", "lie", "--algebra", "nonesuch"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hlcy(&[
        "homology",
        "--complex",
        "nonesuch",
        "--algebra",
        "witt",
        "--weight",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = hlcy(&[
        "homology",
        "--complex",
        "lie",
        "--algebra",
        "witt",
        "--weight",
        "0",
        "--max-degree",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // hochschild needs an associative algebra
    let out = hlcy(&["homology", "--complex", "hochschild", "--algebra", "sl2"]);
    assert_eq!(out.status.code(), Some(2));

    // clap-level usage errors are exit 2 as well
    let out = hlcy(&["homology"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_exit_0() {
    for suite in ["gv", "exactness", "ladder"] {
        let out = hlcy(&["verify", suite]);
        assert!(out.status.success(), "verify {suite} failed");
    }
    let out = hlcy(&[
        "verify",
        "ladder",
        "--algebra",
        "dual-numbers",
        "--max-degree",
        "4",
    ]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn exactness_for_one_algebra_lists_positions() {
    let out = hlcy(&[
        "verify",
        "exactness",
        "--algebra",
        "dual-numbers",
        "--max-degree",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("les-cyclic/dual-numbers/H_2(mid)"),
        "got:\n{text}"
    );
    assert!(!text.contains("FAIL"));

    // a graded Lie algebra works through the relative sequence with a weight
    let out = hlcy(&[
        "verify",
        "exactness",
        "--algebra",
        "witt",
        "--weight",
        "0",
        "--max-degree",
        "3",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("les-relative/witt"));
}

#[test]
fn output_file_is_written() {
    let path = temp_file("out.json", "");
    let out = hlcy(&[
        "homology",
        "--complex",
        "lie",
        "--algebra",
        "sl2",
        "--max-degree",
        "3",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["tool"], "hlcy");
    let _ = fs::remove_file(path);
}

#[test]
fn lie_table_file_loads_and_validates() {
    // a 2-dimensional solvable algebra: [x, y] = y
    let good = temp_file(
        "lie.json",
        r#"{"basis": ["x", "y"], "brackets": [[0, 1, [[1, "1"]]], [1, 0, [[1, "-1"]]]]}"#,
    );
    let out = hlcy(&[
        "homology",
        "--complex",
        "lie",
        "--algebra",
        good.to_str().unwrap(),
        "--max-degree",
        "2",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("n=1"));
    let _ = fs::remove_file(good);

    // antisymmetry failure is rejected with the offending pair
    let bad = temp_file(
        "bad-lie.json",
        r#"{"basis": ["x", "y"], "brackets": [[0, 1, [[1, "1"]]]]}"#,
    );
    let out = hlcy(&[
        "homology",
        "--complex",
        "lie",
        "--algebra",
        bad.to_str().unwrap(),
        "--max-degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(0, 1)"));
    let _ = fs::remove_file(bad);
}

#[test]
fn product_table_file_loads() {
    // Q[x]/(x^2) written out as a table file
    let path = temp_file(
        "assoc.json",
        r#"{
            "basis": ["u", "x"],
            "unit": 0,
            "products": [
                [0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]],
                [1, 0, [[1, "1"]]], [1, 1, []]
            ]
        }"#,
    );
    let out = hlcy(&[
        "homology",
        "--complex",
        "hochschild",
        "--algebra",
        path.to_str().unwrap(),
        "--max-degree",
        "3",
        "--format",
        "csv",
        "--no-reps",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let built_in = hlcy(&[
        "homology",
        "--complex",
        "hochschild",
        "--algebra",
        "dual-numbers",
        "--max-degree",
        "3",
        "--format",
        "csv",
        "--no-reps",
    ]);
    // same homology columns as the built-in fixture
    let strip = |s: String| -> Vec<String> {
        s.lines()
            .skip(1)
            .map(|l| l.splitn(3, ',').nth(2).unwrap_or("").to_string())
            .collect()
    };
    assert_eq!(strip(stdout(&out)), strip(stdout(&built_in)));
    let _ = fs::remove_file(path);
}

#[test]
fn table_command_covers_the_grid() {
    let out = hlcy(&[
        "table",
        "--algebra",
        "witt",
        "--complex",
        "lie",
        "--complex",
        "leibniz",
        "--weight",
        "-1,0,1",
        "--max-degree",
        "3",
        "--format",
        "csv",
        "--no-reps",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // 2 complexes x 3 weights x 4 degrees + header
    assert_eq!(text.lines().count(), 1 + 2 * 3 * 4);
    let mut rows: Vec<&str> = text.lines().skip(1).collect();
    let mut sorted = rows.clone();
    sorted.sort();
    rows.sort();
    assert_eq!(rows, sorted);
}
