use std::fs;
use std::path::Path;

use mineds::cli::run;
use tempfile::TempDir;

fn mineds(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mineds").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const P4: &str = "a b\nb c\nc d\n";
const K3: &str = "a b\nb c\nc a\n";
const C4: &str = "a b\nb c\nc d\nd a\n";

#[test]
fn enumerate_path() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", P4);
    let (code, out, _) = mineds(&["enumerate", &p4]);
    assert_eq!(code, 0);
    let mut lines: Vec<&str> = out.lines().collect();
    lines.sort();
    assert_eq!(lines, vec!["a-b c-d", "b-c"]);
}

#[test]
fn enumerate_brute_and_limit() {
    let dir = TempDir::new().unwrap();
    let k3 = write(&dir, "k3.txt", K3);
    let (code, out, _) = mineds(&["enumerate", "--algo", "brute", &k3]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.split(' ').count() == 1));
    let (_, out, _) = mineds(&["enumerate", "--limit", "2", &k3]);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn stats_report_fields() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.txt", C4);
    let stats = dir.path().join("s.json");
    let (code, out, _) = mineds(&["enumerate", "--stats", stats.to_str().unwrap(), &c4]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&stats).unwrap()).unwrap();
    assert_eq!(report["solution_count"], 6);
    assert_eq!(out.lines().count(), 6);
    for key in ["max_delay_steps", "mean_delay_steps", "peak_live_sets", "wall_time_ms", "checksum"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn enumerate_errors() {
    let dir = TempDir::new().unwrap();
    assert_eq!(mineds(&["enumerate", "/nonexistent/graph.txt"]).0, 1);
    let bad = write(&dir, "bad.txt", "a b c\n");
    let (code, _, err) = mineds(&["enumerate", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("line 1"));
    let mut big = String::new();
    for u in 0..8 {
        for v in u + 1..8 {
            big.push_str(&format!("{u} {v}\n"));
        }
    }
    let big = write(&dir, "k8.txt", &big);
    assert_eq!(mineds(&["enumerate", "--algo", "brute", &big]).0, 3);
    assert_eq!(mineds(&["frobnicate"]).0, 1);
    assert_eq!(mineds(&["--help"]).0, 0);
}

#[test]
fn verify_agrees_and_detects_a_dropped_child() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", P4);
    assert_eq!(mineds(&["verify", &p4]).0, 0);
    let c4 = write(&dir, "c4.txt", C4);
    let (code, out, _) = mineds(&["verify", "--level-check", &c4]);
    assert_eq!(code, 0);
    assert!(out.contains("6 solutions"));
    let (code, out, _) = mineds(&["verify", "--drop-child", "0", &c4]);
    assert_eq!(code, 2);
    assert!(out.contains("MISMATCH"));
}

#[test]
fn verify_batch() {
    let dir = TempDir::new().unwrap();
    let graphs = dir.path().join("graphs");
    fs::create_dir(&graphs).unwrap();
    for (name, text) in [("p4", P4), ("k3", K3), ("c4", C4)] {
        fs::write(graphs.join(name), text).unwrap();
    }
    let (code, out, _) = mineds(&["verify", "--level-check", "--batch", graphs.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("ok ")).count(), 3);
    assert_eq!(mineds(&["verify"]).0, 1);
}

#[test]
fn bench_csv() {
    let (code, out, _) = mineds(&["bench", "--family", "triangles", "--sizes", "1..3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "m,solutions,max_delay,peak_live");
    let counts: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(counts, vec!["3", "9", "27"]);

    let (code, out, _) = mineds(&["bench", "--family", "crown", "--sizes", "2..4"]);
    assert_eq!(code, 0);
    let ms: Vec<usize> = out.lines().skip(1).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert!(ms.windows(2).all(|w| w[0] < w[1]));

    assert_eq!(mineds(&["bench", "--family", "triangles", "--sizes", "5..3"]).0, 1);
    assert_eq!(mineds(&["bench", "--family", "hexagons", "--sizes", "1..2"]).0, 1);
}

fn read(path: &Path) -> String {
    fs::read_to_string(path).unwrap()
}

#[test]
fn gen_from_formula() {
    let dir = TempDir::new().unwrap();
    let cnf = write(&dir, "one.cnf", "p cnf 3 1\n1 -2 3 0\n");
    let target = dir.path().join("imt.txt");
    let (code, _, _) = mineds(&["gen", "--sat", &cnf, "-o", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = read(&target);
    assert_eq!(text.lines().count(), 3 * 3 + 3 + 2 + 1);
    assert!(text.lines().any(|l| l == "x y"));
    let meta: serde_json::Value = serde_json::from_str(&read(&dir.path().join("imt.txt.meta.json"))).unwrap();
    assert_eq!(meta["matched_edge"], "x-y");
    assert_eq!(meta["anchor"], "x-w");
    assert_eq!(meta["base_transversal"].as_array().unwrap().len(), 3);

    let bad = write(&dir, "two.cnf", "p cnf 2 1\n1 2 0\n");
    assert_eq!(mineds(&["gen", "--sat", &bad, "-o", target.to_str().unwrap()]).0, 1);
}

#[test]
fn gen_random_is_repeatable() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    assert_eq!(mineds(&["gen", "--random", "4", "3", "1", "-o", a.to_str().unwrap()]).0, 0);
    assert_eq!(mineds(&["gen", "--random", "4", "3", "1", "--out", b.to_str().unwrap()]).0, 0);
    assert_eq!(read(&a), read(&b));
    assert_eq!(read(&a).lines().count(), 3);
    assert_eq!(mineds(&["gen", "--random", "3", "4", "1", "-o", a.to_str().unwrap()]).0, 1);
}

#[test]
fn dimacs_input_is_accepted() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.col", "c path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    let (code, out, _) = mineds(&["enumerate", &g]);
    assert_eq!(code, 0);
    let mut lines: Vec<&str> = out.lines().collect();
    lines.sort();
    assert_eq!(lines, vec!["1-2 3-4", "2-3"]);
}
