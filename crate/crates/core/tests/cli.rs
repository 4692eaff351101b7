use std::process::Command;

fn yhk(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_yhk")).args(args).env_remove("YHK_SEED").output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn relations_report_names_the_family_count() {
    let (code, out, _) = yhk(&["relations", "--r", "2", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("all 21 identity families PASS"), "{out}");
    let (code, out, _) = yhk(&["relations", "--r", "1", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("all 22 identity families PASS"), "{out}");
}

#[test]
fn mult_matches_the_exchange_formula() {
    let (code, lhs, _) = yhk(&["--json", "mult", "--r", "2", "--n", "2", "--expr", "g1 X1"]);
    assert_eq!(code, 0);
    let (_, rhs, _) = yhk(&["--json", "mult", "--r", "2", "--n", "2", "--expr", "X2 g1 - (q - q^-1) e1 X2"]);
    assert_eq!(lhs, rhs);
    let v: serde_json::Value = serde_json::from_str(&lhs).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn dims_sum_of_squares() {
    let (code, out, _) = yhk(&["--json", "dims", "--r", "2", "--n", "2", "--charge", "0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sum_of_squares"], 8);
    assert_eq!(v["simples"].as_array().unwrap().len(), 5);
}

#[test]
fn reduce_uses_the_weight_datum() {
    let (code, out, _) = yhk(&["reduce", "--r", "1", "--n", "1", "--lambda", r#"{"lambda":{"1":1}}"#, "--expr", "X1^3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(q^3)");
    let (code, _, err) = yhk(&["reduce", "--r", "1", "--n", "1", "--lambda", "{}", "--expr", "X1"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn crystal_writes_dot() {
    let dir = std::env::temp_dir().join(format!("yhk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.dot");
    let (code, out, _) = yhk(&["crystal", "--r", "2", "--e", "2", "--n-max", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph crystal {"));
    assert_eq!(dot.matches("label=").count(), 6 + 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(yhk(&["mult", "--r", "2", "--n", "2", "--expr", "g2"]).0, 2);
    assert_eq!(yhk(&["frobnicate"]).0, 2);
    assert_eq!(yhk(&["crystal", "--r", "2", "--e", "1", "--n-max", "2"]).0, 2);
    assert_eq!(yhk(&["--max-dim", "4", "blocks", "--r", "2", "--n", "2"]).0, 3);
    assert_eq!(yhk(&["--max-support", "2", "mult", "--r", "2", "--n", "3", "--expr", "g1 g2 g1 X1"]).0, 3);
    assert_eq!(yhk(&["branch", "--mu", "2,1", "--shapes", "2|1,1"]).0, 2);
    assert_eq!(yhk(&["compare", "--r", "2", "--n-max", "2"]).0, 0);
}

#[test]
fn seed_from_environment_is_deterministic() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_yhk")).args(["--json", "relations", "--r", "2", "--n", "2"]).env("YHK_SEED", seed).output().unwrap().stdout
    };
    assert_eq!(run("5"), run("5"));
    let v: serde_json::Value = serde_json::from_slice(&run("5")).unwrap();
    assert_eq!(v["seed"], 5);
}
