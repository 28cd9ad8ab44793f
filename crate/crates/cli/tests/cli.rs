use frankcert_cli::run_with;
use std::path::Path;
use std::process::Command;

fn cli(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("frankcert").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["frank", "--exact", "corpus:petersen", "--format", "json"][..],
        &["frank", "--pipeline", "seven", "corpus:truncated_k4", "--format", "json"],
        &["frank", "--pipeline", "esse4", "corpus:k4_pair_hub", "--format", "json"],
        &["orient", "--well-balanced", "corpus:wheel4", "--format", "json"],
        &["connectivity", "corpus:prism3", "--format", "json"],
    ] {
        let first = cli(args);
        assert_eq!(first.0, 0, "{args:?}: {}", first.2);
        assert_eq!(first, cli(args), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["bogus"]).0, 1);
    assert_eq!(cli(&["frank", "corpus:petersen"]).0, 1);
    assert_eq!(cli(&["frank", "--exact", "/no/such/file"]).0, 1);
    assert_eq!(cli(&["frank", "--exact", "corpus:nope"]).0, 1);
    assert_eq!(cli(&["--help"]).0, 0);
    let (code, _, err) = cli(&["frank", "--pipeline", "esse4", "corpus:prism3"]);
    assert_eq!(code, 1);
    assert!(err.contains("not essentially 4-edge-connected"), "{err}");
    let (code, _, err) = cli(&["frank", "--pipeline", "bf5", "corpus:petersen", "--node-budget", "0"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = cli(&["frank", "--exact", "corpus:dodecahedron"]);
    assert_eq!(code, 2);
}

#[test]
fn certificates_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cert = path(dir.path(), "cert.json");
    let (code, _, err) = cli(&["frank", "--pipeline", "seven", "corpus:petersen", "-o", &cert]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = cli(&["verify", &cert]);
    assert_eq!(code, 0);
    assert!(out.starts_with("certificate verified"), "{out}");

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    v["certificate"]["cover"]["0"] = serde_json::json!(99);
    let bad = path(dir.path(), "bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let (code, _, err) = cli(&["verify", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("verification failed"), "{err}");
}

#[test]
fn reduction_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let formula = path(dir.path(), "f.cnf3");
    std::fs::write(&formula, "# example\nx1 x2 x3\nx1 x2 x4\nx1 x3 x4\n").unwrap();
    let gadget = path(dir.path(), "g.json");
    let orient = path(dir.path(), "o.json");
    assert_eq!(cli(&["reduce", "nae3sat", &formula, "-o", &gadget]).0, 0);
    assert_eq!(cli(&["map", &gadget, "--to-orientation", "x1=1,x2=1,x3=0,x4=0", "-o", &orient]).0, 0);
    let (code, out, _) = cli(&["map", &gadget, "--to-assignment", &orient]);
    assert_eq!(code, 0);
    assert!(out.contains("x1=1 x2=1 x3=0 x4=0"), "{out}");
    let (code, _, _) = cli(&["verify", &orient, "--graph", &gadget, "--set", "S"]);
    assert_eq!(code, 0);
    let (code, _, err) = cli(&["map", &gadget, "--to-orientation", "1111"]);
    assert_eq!(code, 1);
    assert!(err.contains("not feasible"), "{err}");
    let (code, out, _) = cli(&["deletable", &gadget, "--set", "S"]);
    assert!(code == 0 || code == 2);
    if code == 0 {
        assert!(out.starts_with("deletable: yes"), "{out}");
    }
}

#[test]
fn reads_edge_lists_and_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let edges = path(dir.path(), "k4.txt");
    std::fs::write(&edges, "# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let (code, out, _) = cli(&["frank", "--exact", &edges]);
    assert_eq!(code, 0);
    assert!(out.starts_with("f = 2"), "{out}");
    let g6 = path(dir.path(), "k4.g6");
    std::fs::write(&g6, "C~\n").unwrap();
    let (code, out, _) = cli(&["connectivity", &g6]);
    assert_eq!(code, 0);
    assert!(out.contains("edge-connectivity: 3"), "{out}");
    let (code, out, _) = cli(&["deletable", &edges, "--set", "0,e5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("deletable: yes"), "{out}");
}

#[test]
fn corpus_listing() {
    let (code, out, _) = cli(&["corpus"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("petersen")));
    let (code, out, _) = cli(&["corpus", "k4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_frankcert");
    let ok = Command::new(bin).args(["frank", "--exact", "corpus:k5"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("f = 1"));
    let bad = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
