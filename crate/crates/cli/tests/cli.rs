use assert_cmd::Command;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::cargo_bin("singcay").unwrap().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out) = run(&all);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn char_values() {
    assert_eq!(run(&["char", "5", "[4,1]", "(3,1,1)"]), (0, "1\n".into()));
    assert_eq!(run(&["char", "3", "[3]", "(3)"]), (0, "1\n".into()));
    assert_eq!(run(&["char", "5", "[3,2]", "(5)"]), (0, "0\n".into()));
    assert_eq!(run(&["char", "5", "[3,1,1]-", "(5)+"]), (0, "1/2-1/2*sqrt(5)\n".into()));
    assert_eq!(run(&["char", "5", "[4,1]", "(5)+"]), (0, "-1\n".into()));
    let v = json(&["char", "4", "[2,2]", "(4)"]);
    assert_eq!(v["value"]["a_num"], "0");
}

#[test]
fn char_usage_errors() {
    assert_eq!(run(&["char", "5", "[4,2]", "(5)"]).0, 2);
    assert_eq!(run(&["char", "5", "[1,4]", "(5)"]).0, 2);
    assert_eq!(run(&["char", "5", "[3,1,1]", "(5)+"]).0, 2);
}

#[test]
fn blocks_minimum_supports() {
    assert_eq!(json(&["blocks", "14", "2"])["min_defect_support"], 4);
    assert_eq!(json(&["blocks", "7", "3"])["min_defect_support"], 3);
    let v = json(&["blocks", "15", "2"]);
    assert_eq!(v["min_defect_support"], 0);
    assert_eq!(v["defect0_sym"], true);
}

#[test]
fn tables_csv() {
    let (code, out) = run(&["tables", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,t,n-t");
    assert!(lines.contains(&"23,21,2"));
    assert!(lines.contains(&"n,n-|C|,|C|"));
    assert!(lines.contains(&"48,6,42"));
    assert!(lines.contains(&"51,9,42"));
}

#[test]
fn singular_verdicts() {
    let v = json(&["singular", "S", "3", "(2,1)"]);
    assert_eq!(v["singular"], true);
    assert_eq!(v["nullity"], "4");
    assert_eq!(v["certificate"], "[2,1]");
    let v = json(&["singular", "A", "4", "(2,2)"]);
    assert_eq!(v["generates"], false);
    let v = json(&["singular", "A", "5", "(5)+"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
    let total: u64 = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["mult"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 60);
    let v = json(&["singular", "A", "7", "(7)+"]);
    assert_eq!(v["classes"], serde_json::json!(["(7)+", "(7)-"]));
    assert_eq!(v["singular"], true);
    assert_eq!(run(&["singular", "S", "3", "(1,1,1)"]).0, 2);
}

#[test]
fn vanishing_lists_and_certificates() {
    let v = json(&["vanishing", "A", "7"]);
    let list: Vec<&str> = v["nonvanishing"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert!(list.contains(&"(2,2,1,1,1)"));
    assert!(!list.contains(&"(4,2,1)"));
    let v = json(&["vanishing", "A", "11"]);
    let list: Vec<&str> = v["nonvanishing"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert!(list.contains(&"(2,2,2,2,1,1,1)"));
    assert!(list.contains(&"(3,1,1,1,1,1,1,1,1)"));
    let v = json(&["vanishing", "S", "5", "(2,2,1)"]);
    assert_eq!(v["result"]["verdict"], "vanishing");
    assert_eq!(v["result"]["certificate"]["kind"], "direct_zero");
    let v = json(&["vanishing", "S", "23", "(2,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1)"]);
    assert_eq!(v["result"]["verdict"], "unknown");
}

#[test]
fn verify_exit_codes() {
    let (code, out) = run(&["verify", "nr5", "7..14"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("nr5")).count(), 8);
    let (code, out) = run(&["verify", "mt2", "11"]);
    assert_eq!(code, 0);
    assert!(out.contains("known_exception"));
    let v = json(&["verify", "pp7_18"]);
    assert_eq!(v[0]["status"], "pass");
    let (code, _) = run(&["verify", "all", "default", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["verify", "nope"]).0, 2);
    assert_eq!(run(&["verify", "nr5", "7..x"]).0, 2);
}

#[test]
fn bounds_are_configurable() {
    assert_eq!(run(&["singular", "S", "6", "(2,1,1,1,1)", "--max-n", "5"]).0, 2);
    assert_eq!(run(&["vanishing", "A", "9", "--max-n", "8"]).0, 2);
}
