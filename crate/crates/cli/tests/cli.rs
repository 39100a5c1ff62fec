use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftop"))
        .args(args)
        .env_remove("SHIFTOP_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Data rows of a TSV table, skipping the header and `#` lines.
fn rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

#[test]
fn single_multiplicity() {
    let o = run(&["multiplicity", "--algebra", "A2", "--twoS", "1", "--L", "6", "--lambda", "3,2,1"]);
    assert!(o.status.success());
    assert_eq!(rows(&o), vec![vec!["(3,1)", "3,2,1", "16"]]);
}

#[test]
fn trivial_query_json() {
    let o = run(&["multiplicity", "--algebra", "A1", "--twoS", "2", "--L", "1", "--lambda", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mu"], "1");
    assert_eq!(v["witness"]["M"], serde_json::json!([0]));
}

#[test]
fn size_mismatch_is_a_usage_error() {
    let o = run(&["multiplicity", "--algebra", "A1", "--twoS", "1", "--L", "1", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spin_one_squared_table() {
    let o = run(&["multiplicity", "--algebra", "A1", "--twoS", "2", "--L", "2", "--table", "--check", "--backend", "both"]);
    assert!(o.status.success());
    let r = rows(&o);
    assert_eq!(r.len(), 3);
    assert!(r.iter().all(|row| row[2] == "1" && row[3] == "1"));
}

#[test]
fn mixed_spins_cross_check() {
    let o = run(&["multiplicity", "--algebra", "A2", "--twoS", "1,2,3", "--table", "--check", "--backend", "both"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(rows(&o).iter().all(|row| row[2] == row[3]));
}

#[test]
fn branch_reports_components_first() {
    let o = run(&[
        "branch", "--algebra", "A5", "--roots", "L1-L3,L3-L4,L5-L6", "--twoS", "1", "--L", "4", "--table",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().contains("{1,3,4}, {5,6}"));
    assert!(!rows(&o).is_empty());
}

#[test]
fn super_table_has_ten_rows() {
    let o = run(&["super", "--shape", "2,1", "--twoS", "1", "--L", "6", "--table", "--check"]);
    assert!(o.status.success());
    let r = rows(&o);
    let mus: Vec<&str> = r.iter().map(|row| row[2].as_str()).collect();
    assert_eq!(mus, ["1", "5", "9", "10", "5", "16", "10", "9", "5", "1"]);
    assert!(r.iter().all(|row| row[2] == row[3]));
}

#[test]
fn super_subalgebra_table() {
    let o = run(&["super", "--shape", "1,2", "--roots", "K1-K2", "--twoS", "1", "--L", "5", "--table"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("# even {K1-K2}"));
}

#[test]
fn symmetry_suite() {
    let o = run(&["verify", "--suite", "appendixB", "--r", "2", "--twoS", "2", "--L", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 violations"));
}

#[test]
fn verify_json_lines() {
    let o = run(&["verify", "--suite", "hooklength", "--r", "3", "--twoS", "1", "--L", "5", "--format", "json"]);
    assert!(o.status.success());
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["equal"], true);
    }
}

#[test]
fn occupancy_json_schema() {
    let o = run(&["occupancy", "--algebra", "A1", "--twoS", "1", "--L", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"r": 1, "twoS": [1, 1], "L": 2, "entries": [
            {"M": [0], "c": "1"}, {"M": [1], "c": "2"}, {"M": [2], "c": "1"}
        ]})
    );
}

#[test]
fn bench_emits_csv() {
    let o = run(&["bench", "--r", "1", "--twoS", "1", "--L", "2"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "r,twoS,L,backend,entries,seconds");
    assert_eq!(lines.len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["multiplicity", "--algebra", "B2", "--twoS", "1", "--L", "2", "--lambda", "2"][..],
        &["multiplicity", "--algebra", "A2", "--twoS", "1", "--L", "2"][..],
        &["multiplicity", "--algebra", "A2", "--twoS", "1,2", "--L", "3", "--lambda", "3"][..],
        &["branch", "--algebra", "A3", "--roots", "L2-L1", "--twoS", "1", "--L", "2", "--table"][..],
        &["super", "--shape", "2,1", "--roots", "L1-L2,L2-K1", "--twoS", "1", "--L", "2", "--table"][..],
        &["frobnicate"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["multiplicity", "--algebra", "A3", "--twoS", "2", "--L", "4", "--table", "--format", "json"];
    let a = run(&args).stdout;
    let b = run(&[&args[..], &["--jobs", "1"]].concat()).stdout;
    let c = run(&[&args[..], &["--jobs", "4"]].concat()).stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("shiftop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("occ.tsv");
    let o = run(&["occupancy", "--algebra", "A2", "--twoS", "1", "--L", "3", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("M\tc"));
    std::fs::remove_dir_all(dir).unwrap();
}
