use std::process::{Command, Output};

fn rankdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn level_one_genus_two() {
    let o = rankdual(&["dim", "--rank", "2", "--level", "1", "--genus", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4");
}

#[test]
fn worked_example_table() {
    let o = rankdual(&["young", "--rank", "3", "--level", "4", "--diagram", "6,4,3", "--show", "all"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(
        lines,
        vec![
            vec!["Y", "6,4,3", "2,1", "1"],
            vec!["tY", "4,4,3,2", "0,1,1", "1"],
            vec!["Y†", "5,4,2", "1,2", "11"],
            vec!["tY†", "4,3,2,2", "1,1,0", "11"],
        ]
    );
}

#[test]
fn skew_cauchy_four_classes() {
    let o = rankdual(&["--format", "json", "verify", "skew-cauchy", "--rank", "2", "--level", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "rankdual/1");
    assert_eq!(v["suites"][0]["checks"].as_array().unwrap().len(), 4);
    assert_eq!(v["holds"], true);
}

#[test]
fn verify_all_passes() {
    let o = rankdual(&["verify", "all", "--max-rl", "8", "--genus", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 10);
}

#[test]
fn json_is_reproducible() {
    let args = ["--format", "json", "verify", "genus0", "--max-rl", "6", "--count", "20", "--seed", "7"];
    let a = rankdual(&args);
    let b = rankdual(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = rankdual(&["--format", "json", "verify", "genus0", "--max-rl", "6", "--count", "20", "--seed", "8"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn malformed_input_exits_two() {
    let o = rankdual(&["fusion", "--rank", "3", "--level", "2", "--lambda", "1,y", "--mu", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 3"));
    let o = rankdual(&["young", "--rank", "3", "--level", "4", "--diagram", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rankdual(&["dim", "--rank", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rankdual(&["dim", "--rank", "3", "--level", "2", "--label", "2,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fusion_and_oracle() {
    let o = rankdual(&["fusion", "--rank", "2", "--level", "2", "--lambda", "1", "--mu", "1", "--nu", "2"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = rankdual(&["fusion", "--rank", "2", "--level", "1", "--lambda", "1", "--mu", "1", "--nu", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rankdual(&["--format", "json", "dim", "--rank", "3", "--level", "2", "--genus", "1", "--oracle"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], "6");
    assert!((v["oracle"]["value"].as_f64().unwrap() - 6.0).abs() < 1e-9);
}

#[test]
fn out_file_and_branch() {
    let path = std::env::temp_dir().join(format!("rankdual-branch-{}.json", std::process::id()));
    let o = rankdual(&[
        "--format", "json", "--out", path.to_str().unwrap(), "branch", "--rank", "2", "--level", "2", "--size", "0",
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let summands = v["summands"].as_array().unwrap();
    assert!(!summands.is_empty());
    assert!(summands.iter().any(|s| s["gap"] == 0));
}
