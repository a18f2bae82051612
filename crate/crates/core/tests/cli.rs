use std::path::PathBuf;
use std::process::{Command, Output};

fn kvquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kvquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("kvquad-cli-{}-{name}.json", std::process::id()))
}

#[test]
fn bch_prints_the_three_quadratic_and_cubic_coefficients() {
    let out = kvquad(&["bch", "--arity", "2", "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["basis"], "lyndon");
    let terms = json["terms"].as_array().unwrap();
    let coeff = |w: &str| {
        terms
            .iter()
            .find(|t| t["word"] == w)
            .map(|t| t["coeff"].as_str().unwrap().to_owned())
    };
    assert_eq!(coeff("ab").as_deref(), Some("1/2"));
    assert_eq!(coeff("aab").as_deref(), Some("1/12"));
    assert_eq!(coeff("abb").as_deref(), Some("1/12"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kvquad(&["solve-kv", "--order", "0"]).status.code(), Some(2));
    assert_eq!(kvquad(&["bch", "--order", "0"]).status.code(), Some(2));
    assert_eq!(kvquad(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(kvquad(&["solve-kv", "--order", "3", "--gauge", "x"]).status.code(), Some(2));
    assert_eq!(kvquad(&["verify", "--solution", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn stored_solution_verifies_and_corruption_fails() {
    let path = scratch("family");
    let out = kvquad(&[
        "solve-kv", "--order", "5", "--gauge", "x,y;[x,y],[x,y]", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let family: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(family.as_array().unwrap().len(), 3);

    let ok = kvquad(&["verify", "--order", "5", "--suite", "theorem", "--solution", path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));

    let mut broken = family.clone();
    broken[1]["B"]["terms"][0]["coeff"] = serde_json::json!("7/1");
    std::fs::write(&path, broken.to_string()).unwrap();
    let bad = kvquad(&["verify", "--order", "5", "--suite", "theorem", "--json", "--solution", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(bad.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&bad.stdout);
    let failing: Vec<serde_json::Value> = stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .filter(|v: &serde_json::Value| v["status"] == "fail")
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|v| !v["witness"].as_str().unwrap().is_empty()));
}

#[test]
fn json_lines_follow_the_report_schema() {
    let out = kvquad(&["verify", "--order", "4", "--suite", "homo", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    for line in String::from_utf8_lossy(&out.stdout).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["check"], "homo");
        assert!(v["degree"].is_u64());
        assert_eq!(v["status"], "pass");
        assert!(v.get("witness").is_none());
    }
}
