use std::process::Command;

fn ccring(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ccring")).args(args).output().unwrap()
}

const SEC5: [&str; 12] = ["--p", "3", "--m", "1", "--e", "2", "--k", "2", "--n", "10", "--omega", "1,0"];

#[test]
fn params_n10() {
    let out = ccring(&[&["params"], &SEC5[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("n'=19 q=2 n''=1"));
}

#[test]
fn distance_n10() {
    let out = ccring(&[&["distance", "--exps", "7,2,18,15"], &SEC5[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).lines().any(|l| l == "d=5"));
}

#[test]
fn verify_all_exits_zero() {
    let out = ccring(&["verify", "--p", "2", "--m", "1", "--e", "2", "--k", "1", "--n", "3", "--omega", "1,0", "--all", "--mode", "full"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn report_json_is_reproducible() {
    let args = [&["report", "--exps", "7,2,18,15", "--mode", "sampled", "--seed", "3", "--json"], &SEC5[..]].concat();
    let (a, b) = (ccring(&args), ccring(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for key in ["params", "factors", "exps", "towers", "a_matrix", "log_size", "distances", "verification"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["log_size"], 39);
}

#[test]
fn invalid_input_exits_two() {
    let out = ccring(&["params", "--p", "3", "--e", "2", "--k", "1", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(ccring(&["distance", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn threshold_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ccring"))
        .args([&["distance", "--exps", "7,2,18,15"], &SEC5[..]].concat())
        .env("CCRING_THRESHOLD", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the limit 5"));
}
