use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn oed(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_oed"));
    cmd.args(args).env_remove("OED_THREADS");
    if let Some(t) = threads {
        cmd.env("OED_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn delta_triangle_json() {
    let dir = TempDir::new().unwrap();
    let k3 = write(&dir, "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    let o = oed(
        &[
            "delta",
            "--input",
            s(&k3),
            "--engine",
            "naive",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["n"], 3);
    assert_eq!(v["delta"], serde_json::json!(["0", "0", "3", "-2"]));
    assert_eq!(v["O"], serde_json::json!(["0", "0", "3", "1"]));
    assert_eq!(v["E"], serde_json::json!(["0", "0", "0", "3"]));

    // Byte-identical across runs and thread counts.
    let again = oed(
        &[
            "delta",
            "--input",
            s(&k3),
            "--engine",
            "naive",
            "--format",
            "json",
        ],
        Some("4"),
    );
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn delta_single_edge_and_csv() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.txt", "2 1\n0 1\n");
    let o = oed(&["delta", "--input", s(&k2), "--engine", "gray"], None);
    assert_eq!(json(&o)["delta"], serde_json::json!(["0", "0", "1"]));
    let o = oed(
        &[
            "delta",
            "--input",
            s(&k2),
            "--engine",
            "components",
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(stdout(&o), "k,O,E,delta\n0,,,0\n1,,,0\n2,,,1\n");
}

#[test]
fn delta_over_cap_exits_three() {
    let dir = TempDir::new().unwrap();
    let pairs: Vec<String> = (0..13usize)
        .flat_map(|u| (u + 1..13).map(move |v| format!("{u} {v}")))
        .take(70)
        .collect();
    let text = format!("13 70\n{}\n", pairs.join("\n"));
    let big = write(&dir, "big.txt", &text);
    let o = oed(&["delta", "--input", s(&big), "--engine", "gray"], None);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("70 edges") && err.contains("62"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn parse_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "2 1\n0 0\n");
    let o = oed(&["delta", "--input", s(&bad)], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = oed(
        &["count", "--input", s(&dir.path().join("missing.txt"))],
        None,
    );
    assert_eq!(o.status.code(), Some(2));
    let o = oed(&["count", "--method", "magic", "--input", s(&bad)], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_thread_env_exits_two() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.txt", "2 1\n0 1\n");
    let o = oed(&["delta", "--input", s(&k2)], Some("0"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_methods() {
    let dir = TempDir::new().unwrap();
    let k3 = write(&dir, "k3.txt", "# triangle\n3 3\n0 1\n1 2\n0 2\n");
    let o = oed(&["count", "--input", s(&k3), "--method", "reduction"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["count"], "4");
    assert_eq!(
        (v["n"].as_u64(), v["m"].as_u64(), v["isolated"].as_u64()),
        (Some(3), Some(3), Some(0))
    );

    let cube = dir.path().join("cube.txt");
    assert_eq!(
        oed(&["gen", "cube_q3", "--output", s(&cube)], None)
            .status
            .code(),
        Some(0)
    );
    let o = oed(
        &["count", "--input", s(&cube), "--method", "independent"],
        None,
    );
    assert_eq!(json(&o)["count"], "35");

    let edgeless = write(&dir, "e4.txt", "4 0\n");
    let o = oed(
        &["count", "--input", s(&edgeless), "--method", "reduction"],
        None,
    );
    let v = json(&o);
    assert_eq!(v["count"], "16");
    assert_eq!(v["isolated"], 4);

    let dimacs = write(&dir, "k2.col", "c edge\np edge 3 1\ne 1 2\n");
    let o = oed(&["count", "--input", s(&dimacs), "--method", "brute"], None);
    assert_eq!(json(&o)["count"], "6");
}

#[test]
fn count_brute_over_vertex_cap_exits_three() {
    let dir = TempDir::new().unwrap();
    let wide = write(&dir, "wide.txt", "30 1\n0 1\n");
    let o = oed(&["count", "--input", s(&wide), "--method", "brute"], None);
    assert_eq!(o.status.code(), Some(3));
    let o = oed(
        &["count", "--input", s(&wide), "--method", "reduction"],
        None,
    );
    assert_eq!(json(&o)["count"], ((1u64 << 28) * 3).to_string());
}

#[test]
fn gen_families() {
    let dir = TempDir::new().unwrap();
    let prism = dir.path().join("prism6.txt");
    let o = oed(&["gen", "prism", "6", "--output", s(&prism)], None);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&prism).unwrap();
    assert!(text.starts_with("12 18\n"));
    assert_eq!(text.lines().count(), 19);

    let o = oed(&["gen", "cube_q3"], None);
    assert!(stdout(&o).starts_with("8 12\n"));

    let o = oed(&["gen", "prism", "5"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bipartite"));

    assert_eq!(oed(&["gen", "petersen", "3"], None).status.code(), Some(2));
}

#[test]
fn verify_exhaustive_four() {
    let o = oed(&["verify", "--exhaustive-n", "4", "--trials", "0"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["trials"], 1 + 1 + 2 + 8 + 64);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["passing"], true);
}

#[test]
fn verify_random_reproducible() {
    let args = [
        "verify",
        "--exhaustive-n",
        "0",
        "--n-max",
        "12",
        "--m-max",
        "20",
        "--trials",
        "200",
        "--seed",
        "7",
    ];
    let a = json(&oed(&args, None));
    let b = json(&oed(&args, Some("4")));
    assert_eq!(a["passing"], true);
    assert_eq!(a["trials"], 201);
    assert_eq!(a["failures"], b["failures"]);
    assert_eq!(a["seed"], 7);
}

#[test]
fn verify_bounds_exit_two() {
    let o = oed(&["verify", "--exhaustive-n", "6", "--trials", "0"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_records() {
    let dir = TempDir::new().unwrap();
    let cube = dir.path().join("cube.txt");
    oed(&["gen", "cube_q3", "--output", s(&cube)], None);
    let o = oed(
        &[
            "bench",
            "--input",
            s(&cube),
            "--engines",
            "naive,gray",
            "--repeats",
            "3",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 6);
    assert!(recs.iter().all(|r| r["subsets_visited"] == 4095));
    assert!(recs
        .iter()
        .all(|r| r["profile_hash"] == recs[0]["profile_hash"]));

    let two = write(&dir, "two.txt", "6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n");
    let o = oed(
        &["bench", "--input", s(&two), "--engines", "gray,components"],
        None,
    );
    let recs: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs[0]["subsets_visited"], 63);
    assert_eq!(recs[1]["subsets_visited"], 14);
}
