use std::process::{Command, Output};

fn tpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tpi")).args(args).env_remove("TPI_PRIME").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decide_exit_codes() {
    let yes = tpi(&["decide", "--lambda", "2,2", "--d", "2"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes), "TPI\n");

    let no = tpi(&["decide", "--lambda", "3,1", "--d", "2"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "NOT TPI; witness {3}→3, {1}→1\n");

    let power = tpi(&["decide", "--lambda", "2^4", "--d", "3"]);
    assert_eq!(power.status.code(), Some(0));

    let bad = tpi(&["decide", "--lambda", "3,x", "--d", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("cannot parse"));
}

#[test]
fn decide_json_carries_the_witness() {
    let out = tpi(&["--format", "json", "decide", "--lambda", "5,2,1,1", "--d", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["is_tpi"], false);
    assert_eq!(v["reason"], "padding_refines");
    assert!(v["witness"].is_object());
}

#[test]
fn rect_table_rows() {
    let out = tpi(&["table", "rect", "--dmax", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.ends_with(
        "d = 9 | 2^37, 3^25, 4^17, 5^14, 6^10, 7^9, 8^7, 9^6, 10^5, 11^5, 12^4, 13^4, 14^3, 15^3, 16^2, 17^2, 18^1\n"
    ));
}

#[test]
fn jdelta_table_in_both_bases() {
    let omega = stdout(&tpi(&["table", "jdelta", "--d", "4", "--basis", "omega"]));
    assert!(omega.contains("60(6ω[4] + 14ω[3,1] + 21ω[2,2] + 42ω[2,1,1] + 210ω[1,1,1,1])"), "{omega}");
    let class = stdout(&tpi(&["table", "jdelta", "--d", "3", "--basis", "class"]));
    assert!(class.contains("3(2c[3] - 3c[1,2] + 7c[1,1,1])"), "{class}");
    assert!(class.contains("sign(C_3) = +1"));

    let json = stdout(&tpi(&["--format", "json", "table", "jdelta", "--d", "4"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["row"]["prefactor"], "60");
    assert_eq!(v["row"]["terms"][0]["coeff"], "6");
    assert_eq!(v["row"]["terms"][0]["value"], "360");
    assert!(v["c_d_sign"].is_null());
}

#[test]
fn jlambda_table() {
    let out = tpi(&["table", "jlambda", "--lambda", "2,1,1", "--d", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("J = (1,2) - (1,3)"), "{text}");
    assert!(text.contains("C_d = -6"));
}

#[test]
fn jlambda_over_budget_names_the_cap() {
    let out = tpi(&["table", "jlambda", "--lambda", "1^10", "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 9"));
}

#[test]
fn hasse_dot_matches_the_reference_size() {
    let out = tpi(&["--format", "dot", "hasse", "--d", "3", "--min-part", "2", "--kmax", "8"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 15);
    assert_eq!(dot.matches(" -> ").count(), 27);

    let empty = stdout(&tpi(&["--format", "dot", "hasse", "--d", "3", "--kmax", "0"]));
    assert!(!empty.contains("->") && !empty.contains("label"));
}

#[test]
fn dot_is_only_for_hasse() {
    let out = tpi(&["--format", "dot", "decide", "--lambda", "2,2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let out = tpi(&["--format", "json", "verify", "--lambda", "2,2", "--d", "2", "--trials", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["check"], "vanishing");
    assert_eq!(v["verdict"], "certified");
    assert_eq!(v["max_residue"], 0);
    assert_eq!(v["trials"], 100);
    assert!(v.get("elapsed_ms").is_none());

    let j = tpi(&["verify", "--lambda", "3,1", "--d", "2"]);
    assert_eq!(j.status.code(), Some(0));
    assert!(stdout(&j).starts_with("CERTIFIED: ST(3,1)"));
}

#[test]
fn verify_json_is_byte_stable() {
    let args = ["--format", "json", "verify", "--lambda", "2,1,1", "--d", "2", "--trials", "5", "--seed", "7"];
    let one = stdout(&tpi(&args));
    let mut threaded = vec!["--threads", "1"];
    threaded.extend_from_slice(&args);
    assert_eq!(one, stdout(&tpi(&threaded)));
}

#[test]
fn prime_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_tpi"))
        .args(["--format", "json", "verify", "--lambda", "2,2", "--d", "2", "--trials", "3"])
        .env("TPI_PRIME", "1000003")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["p"], 1000003);

    let bad = Command::new(env!("CARGO_BIN_EXE_tpi"))
        .args(["verify", "--lambda", "2,2", "--d", "2", "--prime", "1000"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn raised_budget_needs_acknowledgment() {
    let refused = tpi(&["--budget", "14", "table", "rect", "--dmax", "2"]);
    assert_eq!(refused.status.code(), Some(2));
    let accepted = tpi(&["--budget", "14", "--accept-long-runs", "table", "rect", "--dmax", "2"]);
    assert_eq!(accepted.status.code(), Some(0));
}

#[test]
fn verify_over_budget_fails_cleanly() {
    let out = tpi(&["verify", "--lambda", "13", "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enumeration budget"));
}
