use std::process::{Command, Output};

fn stairgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stairgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn words_lists_six_for_r4() {
    let o = stairgraph(&["words", "--r", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["permutation"], "4231");
    assert_eq!(v[0]["words"].as_array().unwrap().len(), 6);
    assert_eq!(v[0]["count"]["match"], true);
}

#[test]
fn words_below_four_is_usage_error() {
    let o = stairgraph(&["words", "--r", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn verify_all_exit_depends_on_strict() {
    let o = stairgraph(&["verify-all", "--ell", "3..5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[MISMATCH] graph ell=3 edges: observed 6; claimed 12"));
    let o = stairgraph(&["verify-all", "--ell", "3..5", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn empty_range_is_usage_error() {
    assert_eq!(stairgraph(&["verify-all", "--ell", "5..3"]).status.code(), Some(2));
}

#[test]
fn cartoon_conjecture_rows() {
    let o = stairgraph(&["conjectures", "--ell", "2..4", "--which", "c2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let got: Vec<(u64, u64, u64)> = rows
        .iter()
        .map(|r| {
            (
                r["ideal"]["generators"].as_array().unwrap().len() as u64,
                r["hilbert"]["dimension"].as_u64().unwrap(),
                r["hilbert"]["degree"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(got, vec![(1, 2, 2), (2, 2, 4), (3, 2, 8)]);
}

#[test]
fn first_conjecture_skips_short_staircases() {
    let o = stairgraph(&["conjectures", "--ell", "3", "--which", "c1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[SKIPPED] conjecture I ell=3: requires 5 <= ell <= 10\n");
}

#[test]
fn dot_export_is_deterministic_and_written_to_file() {
    let dir = std::env::temp_dir().join(format!("stairgraph-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.dot");
    let p = path.to_str().unwrap();
    let o = stairgraph(&["export", "blambda", "--ell", "4", "--format", "dot", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.starts_with("graph "));
    assert!(first.trim_end().ends_with('}'));
    stairgraph(&["export", "blambda", "--ell", "4", "--format", "dot", "--out", p]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    let g = stdout(&stairgraph(&["graph", "--ell", "3", "--format", "dot"]));
    assert_eq!(g.matches(" -- ").count(), 6);
}

#[test]
fn resource_limit_exit() {
    let o = stairgraph(&["chroma", "--ell", "6", "--cap-cyclerank", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn markdown_tables() {
    let o = stairgraph(&["chroma", "--ell", "3..4", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with('|'));
    assert!(s.contains("MATCH"));
}
