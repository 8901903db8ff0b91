use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use divfront::frontier::{frontier, prd_from_infinity_frontier};
use divfront::io::write_prd_csv;
use divfront::synthetic::{gaussian_samples, truncated_normal_samples};
use divfront::{Alpha, FrontierSide, GaussianParams, Histogram, SampleMatrix};
use tempfile::TempDir;

fn divfront(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divfront"))
        .current_dir(dir)
        .env("RUST_LOG", "warn")
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) {
    let out = divfront(dir, args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
}

fn write_samples(path: PathBuf, s: &SampleMatrix) {
    let text: String = s
        .rows()
        .map(|r| r.iter().map(f64::to_string).collect::<Vec<_>>().join(",") + "\n")
        .collect();
    fs::write(path, text).unwrap();
}

fn write_histogram(path: PathBuf, probs: &[f64]) {
    fs::write(path, serde_json::json!({"type": "histogram", "probs": probs}).to_string()).unwrap();
}

fn histograms(dir: &Path) -> (Histogram, Histogram) {
    let p = [0.4, 0.3, 0.2, 0.1];
    let q = [0.1, 0.1, 0.3, 0.5];
    write_histogram(dir.join("p.json"), &p);
    write_histogram(dir.join("q.json"), &q);
    (Histogram::new(p.to_vec()).unwrap(), Histogram::new(q.to_vec()).unwrap())
}

#[test]
fn infinity_frontier_and_prd_commands_agree() {
    let dir = TempDir::new().unwrap();
    let (p, q) = histograms(dir.path());
    ok(dir.path(), &["frontier", "--p", "p.json", "--q", "q.json", "--alpha", "inf", "-o", "inf.csv"]);
    ok(dir.path(), &["prd", "--p", "p.json", "--q", "q.json", "-o", "prd.csv"]);

    let rows: Vec<(f64, f64)> = fs::read_to_string(dir.path().join("inf.csv"))
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(|v| v.parse().unwrap()).collect();
            (f[1], f[2])
        })
        .collect();
    let prd: Vec<(f64, f64)> = fs::read_to_string(dir.path().join("prd.csv"))
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| {
            let (r, p) = l.split_once(',').unwrap();
            (r.parse().unwrap(), p.parse().unwrap())
        })
        .collect();
    let mut mapped: Vec<(f64, f64)> = rows.iter().map(|&(lr, lp)| ((-lr).exp(), (-lp).exp())).collect();
    mapped.sort_by(|a, b| a.0.total_cmp(&b.0));
    assert_eq!(mapped.len(), prd.len());
    for (a, b) in mapped.iter().zip(&prd) {
        assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12, "{a:?} vs {b:?}");
    }

    // The command is a thin wrapper: its output matches the library byte for byte.
    let curve = frontier(&p, &q, Alpha::Infinity, FrontierSide::Exclusive, 201).unwrap();
    let mut expected = Vec::new();
    write_prd_csv(&mut expected, &prd_from_infinity_frontier(&curve).unwrap()).unwrap();
    assert_eq!(fs::read(dir.path().join("prd.csv")).unwrap(), expected);
}

#[test]
fn endpoints_of_identical_samples_are_zero() {
    let dir = TempDir::new().unwrap();
    let g = GaussianParams::from_rows(&[0.0, 1.0], &[vec![1.0, 0.3], vec![0.3, 2.0]]).unwrap();
    write_samples(dir.path().join("s.csv"), &gaussian_samples(&g, 500, 3).unwrap());
    ok(dir.path(), &["endpoints", "--p", "s.csv", "--q", "s.csv", "-o", "e.csv"]);
    let text = fs::read_to_string(dir.path().join("e.csv")).unwrap();
    assert_eq!(text.lines().nth(1), Some("0,0"));
}

#[test]
fn pipeline_recall_loss_grows_with_truncation() {
    let dir = TempDir::new().unwrap();
    write_samples(dir.path().join("p.csv"), &gaussian_samples(&GaussianParams::standard(1).unwrap(), 800, 1).unwrap());
    let mut losses = Vec::new();
    for (i, tau) in [2.0, 1.0, 0.5].into_iter().enumerate() {
        let q = format!("q{i}.csv");
        let out = format!("r{i}.json");
        write_samples(dir.path().join(&q), &truncated_normal_samples(800, tau, 10 + i as u64).unwrap());
        ok(
            dir.path(),
            &["pipeline", "--p", "p.csv", "--q", &q, "--k-clusters", "8", "--grid-size", "21", "-o", &out],
        );
        let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join(&out)).unwrap()).unwrap();
        losses.push(report["kl_endpoints"]["recall_loss"].as_f64().unwrap());
    }
    assert!(losses.windows(2).all(|w| w[0] < w[1]), "{losses:?}");
}

#[test]
fn exit_codes_follow_error_kind() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.csv"), "1,2\n3,oops\n").unwrap();
    fs::write(dir.path().join("two.csv"), "1,2\n3,4\n5,7\n6,1\n").unwrap();
    fs::write(dir.path().join("one.csv"), "1\n2\n3\n4\n").unwrap();
    fs::write(dir.path().join("bad.json"), "{\"type\": \"histogram\",\n \"probs\": [0.5,}\n").unwrap();
    write_histogram(dir.path().join("h.json"), &[0.5, 0.5]);

    let parse = divfront(dir.path(), &["knn", "--p", "bad.csv", "--q", "two.csv", "-o", "k.csv"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 2"));

    let json = divfront(dir.path(), &["frontier", "--p", "bad.json", "--q", "h.json", "--alpha", "2", "-o", "f.csv"]);
    assert_eq!(json.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&json.stderr).contains("line 2"));

    let dims = divfront(dir.path(), &["knn", "--p", "two.csv", "--q", "one.csv", "-o", "k.csv"]);
    assert_eq!(dims.status.code(), Some(3));

    let other = divfront(dir.path(), &["frontier", "--p", "h.json", "--q", "h.json", "--alpha", "0", "-o", "f.csv"]);
    assert_eq!(other.status.code(), Some(1));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let g = GaussianParams::standard(2).unwrap();
    write_samples(dir.path().join("p.csv"), &gaussian_samples(&g, 300, 5).unwrap());
    write_samples(dir.path().join("q.csv"), &gaussian_samples(&g, 300, 6).unwrap());
    let run = |out: &str| {
        ok(
            dir.path(),
            &["pipeline", "--p", "p.csv", "--q", "q.csv", "--k-clusters", "6", "--grid-size", "11", "-o", out],
        );
        (
            fs::read(dir.path().join(out)).unwrap(),
            fs::read_to_string(dir.path().join(format!("{out}.manifest.json"))).unwrap(),
        )
    };
    let (a, ma) = run("a.json");
    let (b, mb) = run("b.json");
    assert_eq!(a, b);
    assert_eq!(ma.replace("a.json", "b.json"), mb);
}

#[test]
fn manifest_records_defaults() {
    let dir = TempDir::new().unwrap();
    histograms(dir.path());
    ok(dir.path(), &["frontier", "--p", "p.json", "--q", "q.json", "--alpha", "1,2", "--side", "inclusive", "-o", "f.csv"]);
    assert!(dir.path().join("f.alpha-1.csv").exists());
    assert!(dir.path().join("f.alpha-2.csv").exists());
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("f.csv.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["defaults_applied"], serde_json::json!(["grid_size"]));
    assert_eq!(manifest["parameters"]["side"], "inclusive");
    assert_eq!(manifest["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn thread_count_does_not_change_results() {
    let dir = TempDir::new().unwrap();
    histograms(dir.path());
    let args = |out: &'static str| ["frontier", "--p", "p.json", "--q", "q.json", "--alpha", "2", "-o", out];
    let one = Command::new(env!("CARGO_BIN_EXE_divfront"))
        .current_dir(dir.path())
        .env("FRONTIER_THREADS", "1")
        .env("RUST_LOG", "warn")
        .args(args("one.csv"))
        .status()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_divfront"))
        .current_dir(dir.path())
        .env("FRONTIER_THREADS", "4")
        .env("RUST_LOG", "warn")
        .args(args("four.csv"))
        .status()
        .unwrap();
    assert!(one.success() && four.success());
    assert_eq!(fs::read(dir.path().join("one.csv")).unwrap(), fs::read(dir.path().join("four.csv")).unwrap());
}
