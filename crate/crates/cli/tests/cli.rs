use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pmpgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = run(&full, "");
    assert!(o.status.success(), "gen {args:?} failed: {}", stdout(&o));
    stdout(&o)
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("pmpgraph-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn cycle_spectrum_through_pipe() {
    let o = run(&["spectrum"], &gen(&["--cycle", "5"]));
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["command"], "spectrum");
    let got: Vec<f64> = r["payload"]["spectrum"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let want = [-phi, -phi, phi - 1.0, phi - 1.0, 2.0];
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() < 1e-9, "{got:?}");
    }
    assert_eq!(r["payload"]["laplacian"][0].to_string(), "0.0");
}

#[test]
fn paley_function_coloring() {
    let edges = gen(&["--paley"]);
    assert!(edges.starts_with("directed\n7 21\n"));
    let r = json(&run(&["color", "--algorithm", "function"], &edges));
    assert_eq!(r["payload"]["palette"], 7);
    assert_eq!(r["payload"]["proper"], true);
    assert_eq!(r["payload"]["generators"], 3);
}

#[test]
fn function_algorithm_needs_directed_input() {
    let o = run(&["color", "--algorithm", "function"], &gen(&["--cycle", "6"]));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["code"], "expected_directed");
}

#[test]
fn verify_passes() {
    let o = run(&["verify"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let r = json(&o);
    assert_eq!(r["payload"]["passed"], r["payload"]["total"]);
    assert!(r["input_digest"].is_null());
}

#[test]
fn reports_are_deterministic() {
    let edges = gen(&["--random-regular", "12", "3", "--seed", "4"]);
    assert_eq!(edges, gen(&["--random-regular", "12", "3", "--seed", "4"]));
    let path = temp_file("det.txt", &edges);
    let p = path.to_str().unwrap();
    for cmd in ["spectrum", "bounds", "bipartite", "tutte", "color"] {
        let a = run(&[cmd, "--input", p], "");
        let b = run(&[cmd, "--input", p], "");
        assert!(a.status.success(), "{cmd}: {}", stdout(&a));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
    let a = run(&["limit", "--up-to", "40"], "");
    assert_eq!(a.stdout, run(&["limit", "--up-to", "40"], "").stdout);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn generated_graphs_round_trip() {
    let cases: [&[&str]; 7] = [
        &["--petersen"],
        &["--complete-bipartite", "2", "3"],
        &["--petersen", "--subdivide"],
        &["--gnp", "9", "--p", "0.3", "--seed", "2"],
        &["--torus", "3", "4"],
        &["--path", "1"],
        &["--complete", "4"],
    ];
    for args in cases {
        let text = gen(args);
        let parsed = pmpgraph::io::parse(&text).unwrap();
        assert_eq!(parsed.to_text(), text, "{args:?}");

        // Loading from a file or a pipe hashes the same canonical edge list.
        let path = temp_file("rt.txt", &text);
        let from_file = json(&run(&["spectrum", "--input", path.to_str().unwrap()], ""));
        let from_pipe = json(&run(&["spectrum"], &text));
        std::fs::remove_file(path).unwrap();
        let hex: String = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(from_file["input_digest"], hex.as_str());
        assert_eq!(from_pipe["input_digest"], hex.as_str());
    }
}

#[test]
fn error_codes() {
    let o = run(&["--frobnicate"], "");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["code"], "unknown_flag");

    let o = run(&["spectrum"], "3 2\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["code"], "parse");

    let o = run(&["spectrum"], "3 1\n0 0\n");
    assert_eq!(json(&o)["error"]["code"], "self_loop");

    let o = run(&["spectrum", "--input", "/nonexistent/graph.txt"], "");
    assert_eq!(json(&o)["error"]["code"], "io");

    let o = run(&["tutte"], &gen(&["--cycle", "30"]));
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["error"]["code"], "cap_exceeded");

    let o = run(&["bounds", "--max-n", "4"], &gen(&["--cycle", "5"]));
    assert_eq!(o.status.code(), Some(3));

    let o = run(&["gen", "--star", "4", "--subdivide"], "");
    assert_eq!(json(&o)["error"]["code"], "not_regular");

    let o = run(&["bipartite"], &gen(&["--gnp", "6", "--p", "0.0"]));
    assert_eq!(json(&o)["error"]["code"], "disconnected");
}

#[test]
fn tutte_modes() {
    let edges = gen(&["--petersen"]);
    let r = json(&run(&["tutte"], &edges));
    assert_eq!(r["payload"]["classical_holds"], true);
    assert_eq!(r["payload"]["brouwer_haemers"], false);
    assert_eq!(r["payload"]["subsets_scanned"], 1023);
    assert_eq!(r["payload"]["matching"].as_array().unwrap().len(), 5);

    let star = gen(&["--star", "3"]);
    let r = json(&run(&["tutte", "--mode", "randomized", "--seed", "1", "--samples", "50"], &star));
    assert_eq!(r["payload"]["mode"], "randomized");
    assert_eq!(r["payload"]["c_star"], 3.0);
    assert_eq!(r["payload"]["classical_holds"], false);
    assert!(r["payload"]["matching"].is_null());
}

#[test]
fn rotation_and_limit() {
    let r = json(&run(&["bipartite", "--alpha", "0.6180339887498949"], ""));
    assert!(r["payload"]["defect_count"].as_u64().unwrap() <= 51);
    assert_eq!(r["payload"]["violations"].as_array().unwrap().len(), 0);

    let o = run(&["bipartite", "--alpha", "0.25", "--gamma", "0.1"], "");
    assert_eq!(json(&o)["error"]["code"], "near_rational");

    let r = json(&run(&["limit", "--up-to", "64"], ""));
    assert!(r["payload"]["max_gap"].as_f64().unwrap() < 0.06);
    assert_eq!(r["payload"]["gap_trend"], "decreasing");

    let r = json(&run(&["limit", "--family", "random-regular", "--up-to", "30", "--seed", "0"], ""));
    assert!(r["payload"]["gap_min"].as_f64().unwrap() > 0.1);
}
