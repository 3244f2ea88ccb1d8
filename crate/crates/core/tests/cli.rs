use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpoly-drg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_json_is_deterministic() {
    let a = run(&["classify", "{4,3,3;1,1,2}", "--json"]);
    let b = run(&["classify", "{4,3,3;1,1,2}", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["classification"]["type"], "oddGraph");
    assert_eq!(v["classification"]["m"], 7);
}

#[test]
fn beta_family_certificate() {
    let o = run(&["classify", "{41,40,40;1,1,14}", "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classification"]["type"], "notQPolynomialCandidate");
    assert_eq!(v["classification"]["certificate"]["stage"], "betaFamilyK3");
}

#[test]
fn construct_verify_classify() {
    let dir = std::env::temp_dir().join(format!("qpoly-drg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pg23.txt");
    let p = path.to_str().unwrap();
    assert!(run(&["construct", "projective", "3", "-o", p]).status.success());
    let v = run(&["verify", p, "--full", "--json"]);
    assert!(v.status.success());
    let j: serde_json::Value = serde_json::from_slice(&v.stdout).unwrap();
    assert_eq!(j["array"], "{4,3,3;1,1,4}");
    assert_eq!(j["girth"], 6);
    let c = run(&["classify", p]);
    assert!(stdout(&c).contains("generalized hexagon of order (1, 3)"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn caughman_and_analyze() {
    let o = run(&["caughman", "2", "0", "5", "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["array"], "{31,30,28,24,16;1,3,7,15,31}");
    assert_eq!(j["roundTrip"], true);
    let o = run(&["caughman", "-2", "1/2", "4"]);
    assert!(o.status.code().is_some());
    let o = run(&["analyze", "{3,2,2;1,1,3}"]);
    assert!(stdout(&o).contains("sqrt(2)"));
}

#[test]
fn small_search() {
    let o = run(&["search", "--dmin", "3", "--dmax", "4", "--kmax", "8", "--json"]);
    assert!(o.status.success());
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["partitionHolds"], true);
    assert_eq!(j["survivors"].as_array().unwrap().len(), 8);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "{3,2;1}"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "/nonexistent/graph.txt"]).status.code(), Some(1));
    assert_eq!(run(&["search", "--dmax", "9"]).status.code(), Some(1));
    assert_eq!(run(&["construct", "odd", "6"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
