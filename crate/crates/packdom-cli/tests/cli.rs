//! Exit-code contract and file-format behavior of the binary.

use std::path::{Path, PathBuf};
use std::process::Command;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_packdom"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
        code: out.status.code().unwrap_or(-1),
    }
}

fn workdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("packdom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

fn named_graph(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.col"));
    let text = run(&["catalog", "--name", name]).stdout;
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_success_and_bad_packing() {
    let dir = workdir();
    let petersen = named_graph(&dir, "petersen");
    let k33 = named_graph(&dir, "k33");
    let set0 = write(&dir, "set0.txt", "0\n");
    let set01 = write(&dir, "set01.txt", "0 1\n");

    let ok = run(&["construct", "--graph", &petersen, "--set", &set0]);
    assert_eq!(ok.code, 0, "stderr: {}", ok.stderr);
    assert!(ok.stdout.contains("size 3"));

    let ok = run(&["construct", "--graph", &k33, "--set", &set0]);
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.contains("size 3"));

    // Two K3,3 vertices are at distance at most 2: invalid packing.
    let bad = run(&["construct", "--graph", &k33, "--set", &set01]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("packing"));
}

#[test]
fn construct_greedy_writes_trace_report() {
    let dir = workdir();
    let petersen = named_graph(&dir, "petersen");
    let out_file = dir.join("construct-report.json");
    let r = run(&[
        "construct",
        "--graph",
        &petersen,
        "--greedy",
        "--seed",
        "4",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(report["command"], "construct");
    assert_eq!(report["seed"], 4);
    let results = &report["results"];
    assert!(results["size"].as_u64().unwrap() <= results["bound"].as_u64().unwrap());
    let comps = results["trace"]["components"].as_array().unwrap();
    assert!(!comps.is_empty());
    assert!(comps[0]["outcome"]["trace"]["a_history"].is_array());
}

#[test]
fn oracle_values_and_guard() {
    let dir = workdir();
    let petersen = named_graph(&dir, "petersen");
    let h1 = named_graph(&dir, "h1");
    let k33 = named_graph(&dir, "k33");

    assert!(run(&["oracle", "--graph", &petersen, "--stat", "rho"])
        .stdout
        .contains("rho = 1"));
    assert!(run(&["oracle", "--graph", &k33, "--stat", "i"])
        .stdout
        .contains("i = 3"));
    assert!(run(&["oracle", "--graph", &h1, "--stat", "gamma"])
        .stdout
        .contains("gamma = 3"));

    // Guard: a 25-vertex graph exceeds the default cap, exit 4; raising
    // the cap is allowed.
    let big = run(&["catalog", "--random-subcubic", "25", "--seed", "1"]).stdout;
    let big = write(&dir, "big.col", &big);
    let guarded = run(&["oracle", "--graph", &big, "--stat", "rho"]);
    assert_eq!(guarded.code, 4);
    let raised = run(&["oracle", "--graph", &big, "--stat", "rho", "--cap", "25"]);
    assert_eq!(raised.code, 0);
}

#[test]
fn verify_exit_codes_and_certificates() {
    let dir = workdir();
    let petersen = named_graph(&dir, "petersen");
    let k33 = named_graph(&dir, "k33");
    let c5 = named_graph(&dir, "cycle(5)");
    let set0 = write(&dir, "v-set0.txt", "0\n");
    let side = write(&dir, "v-side.txt", "0 1 2\n");
    let adjacent = write(&dir, "v-adj.txt", "0 1\n");

    assert_eq!(
        run(&[
            "verify",
            "--graph",
            &petersen,
            "--set",
            &set0,
            "--kind",
            "maximal-packing"
        ])
        .code,
        0
    );
    assert_eq!(
        run(&["verify", "--graph", &k33, "--set", &side, "--kind", "idom"]).code,
        0
    );
    assert_eq!(
        run(&["verify", "--graph", &c5, "--set", &adjacent, "--kind", "packing"]).code,
        1
    );
    // Malformed set file.
    let junk = write(&dir, "junk.txt", "zero one\n");
    assert_eq!(
        run(&["verify", "--graph", &c5, "--set", &junk, "--kind", "packing"]).code,
        2
    );

    // Round-trip through a certificate.
    let cert = dir.join("cert.json");
    let r = run(&[
        "verify",
        "--graph",
        &k33,
        "--set",
        &side,
        "--kind",
        "idom",
        "--cert-out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let again = run(&[
        "verify",
        "--graph",
        &k33,
        "--set",
        cert.to_str().unwrap(),
        "--kind",
        "idom",
    ]);
    assert_eq!(again.code, 0);
}

#[test]
fn orient_writes_arcs_and_rejects_low_degree() {
    let dir = workdir();
    let tri = write(&dir, "tri.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let r = run(&["orient", "--graph", &tri]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("p arc 3 3\n"));
    assert_eq!(r.stdout.lines().count(), 4);

    let double = write(&dir, "double.col", "p edge 2 2\ne 1 2\ne 1 2\n");
    let r = run(&["orient", "--graph", &double]);
    assert_eq!(r.code, 0);
    let mut arcs: Vec<&str> = r.stdout.lines().skip(1).collect();
    arcs.sort_unstable();
    assert_eq!(arcs, vec!["a 1 2", "a 2 1"]);

    let path = write(&dir, "path.col", "p edge 2 1\ne 1 2\n");
    assert_eq!(run(&["orient", "--graph", &path]).code, 2);

    // A generated min-degree-2 multigraph orients cleanly.
    let big = run(&["catalog", "--random-multigraph", "20", "30", "--seed", "6"]).stdout;
    let big = write(&dir, "big-mg.col", &big);
    let r = run(&["orient", "--graph", &big]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("p arc 20 30\n"));

    // Arc file destination.
    let arcs_out = dir.join("tri.arcs");
    let r = run(&[
        "orient",
        "--graph",
        &tri,
        "--arcs-out",
        arcs_out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert!(std::fs::read_to_string(&arcs_out)
        .unwrap()
        .starts_with("p arc"));
}

#[test]
fn search_guard_and_delta4() {
    let guarded = run(&["search", "--mode", "tight3", "--max-n", "12"]);
    assert_eq!(guarded.code, 4);

    let r = run(&[
        "search", "--mode", "delta4", "--max-n", "8", "--seed", "2", "--budget", "25",
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("0 counterexamples"));
}

#[test]
fn catalog_formats() {
    let g6 = run(&["catalog", "--name", "k33", "--format", "graph6"]);
    assert_eq!(g6.code, 0);
    let dir = workdir();
    // The emitted graph6 line reads back as a valid input.
    let path = write(&dir, "k33.g6", &g6.stdout);
    let r = run(&["oracle", "--graph", &path, "--stat", "gamma"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("gamma = 2"));

    assert_eq!(run(&["catalog", "--name", "nosuch"]).code, 2);

    let mg = run(&["catalog", "--random-multigraph", "4", "7", "--seed", "9"]);
    assert_eq!(mg.code, 0);
    assert!(mg.stdout.starts_with("p edge 4 7\n"));
    // Multigraphs cannot travel as graph6.
    assert_eq!(
        run(&[
            "catalog",
            "--random-multigraph",
            "4",
            "7",
            "--format",
            "graph6"
        ])
        .code,
        2
    );
}
