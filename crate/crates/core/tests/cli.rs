use std::process::{Command, Output};

fn revtier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revtier"))
        .args(args)
        .env_remove("REVTIER_WORKERS")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = revtier(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_outputs() {
    assert_eq!(stdout(&["tier", "2413"]), "2\n");
    assert!(stdout(&["table", "exact", "--max-n", "5", "--format", "csv"])
        .lines()
        .any(|l| l == "5,42,47,26,5"));
    assert_eq!(stdout(&["bijection", "f", "21534"]), "241653\n");
    assert_eq!(stdout(&["bijection", "finv", "241653"]), "21534\n");
    assert_eq!(stdout(&["basis", "--tier", "1"]), "2413\n2431\n23154\n");
    assert_eq!(stdout(&["av-count", "231", "--max-n", "5"]).lines().last(), Some("5: 42"));
    assert!(stdout(&["trace", "2413"]).ends_with("rev-tier 2\n"));
}

#[test]
fn json_documents() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["table", "cumulative", "--max-n", "6", "--format", "json"]))
            .unwrap();
    assert_eq!(v["schema"], "revtier.table.v1");
    assert_eq!(v["rows"][5]["counts"][1], 380);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["trace", "35241", "--format", "json"])).unwrap();
    assert_eq!(v["schema"], "revtier.trace.v1");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["series", "mu1", "--order", "8", "--format", "json"]))
            .unwrap();
    assert_eq!(v, serde_json::json!([0, 0, 0, 0, 2, 21, 148, 884, 4852]));
}

#[test]
fn exit_codes() {
    assert_eq!(revtier(&["tier", "1123"]).status.code(), Some(2));
    assert_eq!(revtier(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(revtier(&["table", "exact", "--max-n", "11"]).status.code(), Some(2));
    assert_eq!(revtier(&["bijection", "finv", "123"]).status.code(), Some(2));
    assert_eq!(revtier(&["series", "wilf", "--order", "99"]).status.code(), Some(2));
    assert_eq!(revtier(&["verify", "pairs", "--max-n", "6"]).status.code(), Some(0));
}

#[test]
fn output_independent_of_workers() {
    let args = ["basis", "--tier", "2", "--max-len", "8", "--format", "json"];
    let one = stdout(&[&args[..], &["--workers", "1"]].concat());
    let four = stdout(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one, four);
    let one = stdout(&["family", "7", "--workers", "1"]);
    let three = stdout(&["family", "7", "--workers", "3"]);
    assert_eq!(one, three);
}

#[test]
fn printed_permutations_reparse() {
    for line in stdout(&["family", "8"]).lines() {
        let p: revtier::Permutation = line.parse().unwrap();
        assert_eq!(p.to_string(), line);
        assert_eq!(revtier::pairs::rev_tier(p.values()), 6);
    }
}
