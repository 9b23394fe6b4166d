use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use limelight_cli::{run_with_env, METRICS_FILE, MODEL_FILE, RUN_FILE, VOCAB_FILE};
use serde_json::Value;
use tempfile::TempDir;

fn mini_corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/mini_corpus")
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("limelight").chain(args.iter().copied());
    let code = run_with_env(argv, None, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn train_mini(dir: &Path) -> Run {
    let corpus = mini_corpus();
    let r = cli(&[
        "train",
        "--corpus",
        path(&corpus),
        "--output-dir",
        path(dir),
        "--seed",
        "3",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    r
}

fn snapshot(root: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(dir).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.insert(p.clone(), fs::read(&p).unwrap());
            }
        }
    }
    out
}

#[test]
fn train_writes_artifacts_and_leaves_corpus_alone() {
    let before = snapshot(&mini_corpus());
    let tmp = TempDir::new().unwrap();
    let r = train_mini(tmp.path());
    assert!(r.out.contains("split: train=160 test=40"), "{}", r.out);
    for f in [MODEL_FILE, VOCAB_FILE, METRICS_FILE, RUN_FILE] {
        assert!(tmp.path().join(f).is_file(), "{f}");
    }
    let metrics: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join(METRICS_FILE)).unwrap()).unwrap();
    let acc = metrics["test"]["accuracy"].as_f64().unwrap();
    assert!((0.0..=1.0).contains(&acc));
    assert_eq!(metrics["train_size"], 160);
    assert_eq!(snapshot(&mini_corpus()), before);
}

#[test]
fn training_twice_gives_identical_files() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    train_mini(a.path());
    train_mini(b.path());
    for f in [MODEL_FILE, VOCAB_FILE, METRICS_FILE, RUN_FILE] {
        assert_eq!(
            fs::read(a.path().join(f)).unwrap(),
            fs::read(b.path().join(f)).unwrap(),
            "{f}"
        );
    }
}

#[test]
fn evaluate_reports_consistent_metrics() {
    let tmp = TempDir::new().unwrap();
    train_mini(tmp.path());
    let r = cli(&["evaluate", "--model-dir", path(tmp.path()), "--split", "test"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let json: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("metrics-test.json")).unwrap()).unwrap();
    let total: u64 = json["metrics"]["confusion"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|row| row.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()))
        .sum();
    assert_eq!(total, 40);
    assert_eq!(json["documents"], 40);
}

#[test]
fn evaluate_without_model_is_input_error() {
    let tmp = TempDir::new().unwrap();
    let r = cli(&["evaluate", "--model-dir", path(&tmp.path().join("nothing"))]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("model.txt"), "{}", r.err);
}

/// Two categories of five documents with disjoint vocabularies.
fn tiny_corpus(root: &Path) {
    let words = [
        ["atheist", "evidence", "reason", "science", "logic", "skeptic"],
        ["church", "prayer", "gospel", "worship", "scripture", "heaven"],
    ];
    for (c, name) in ["first", "second"].iter().enumerate() {
        let dir = root.join(name);
        fs::create_dir_all(&dir).unwrap();
        for d in 0..5 {
            let body: Vec<&str> = (0..12).map(|i| words[c][(i * (d + 1)) % 6]).collect();
            fs::write(dir.join(format!("{d}")), body.join(" ")).unwrap();
        }
    }
}

#[test]
fn overfit_tiny_corpus_scores_perfectly_on_train_split() {
    let tmp = TempDir::new().unwrap();
    let corpus = tmp.path().join("corpus");
    tiny_corpus(&corpus);
    let conf = tmp.path().join("tiny.conf");
    fs::write(
        &conf,
        "min_df = 1\nmax_df_frac = 1.0\ntrain.learning_rate = 1.0\ntrain.batch_size = 2\ntrain.epochs = 400\n",
    )
    .unwrap();
    let model = tmp.path().join("model");
    let r = cli(&[
        "train",
        "--config",
        path(&conf),
        "--corpus",
        path(&corpus),
        "--output-dir",
        path(&model),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("split: train=8 test=2"), "{}", r.out);
    let r = cli(&[
        "evaluate",
        "--config",
        path(&conf),
        "--model-dir",
        path(&model),
        "--split",
        "train",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("accuracy         1.0000"), "{}", r.out);
}

#[test]
fn explain_feature_counts_and_determinism() {
    let tmp = TempDir::new().unwrap();
    train_mini(tmp.path());
    let dir = path(tmp.path());
    for k in ["6", "7"] {
        let r = cli(&[
            "explain",
            "--model-dir",
            dir,
            "--index",
            "20",
            "--num-features",
            k,
            "--format",
            "json",
        ]);
        assert_eq!(r.code, 0, "{}", r.err);
        let json: Value = serde_json::from_str(&r.out).unwrap();
        assert_eq!(json["features"].as_array().unwrap().len().to_string(), k);
        assert_eq!(json["class_probs"].as_array().unwrap().len(), 2);
        let again = cli(&[
            "explain",
            "--model-dir",
            dir,
            "--index",
            "20",
            "--num-features",
            k,
            "--format",
            "json",
        ]);
        assert_eq!(again.out, r.out);
    }
    let text = cli(&["explain", "--model-dir", dir, "--index", "20"]);
    assert!(text.out.contains("alt.atheism") && text.out.contains("soc.religion.christian"));
}

#[test]
fn explain_error_paths() {
    let tmp = TempDir::new().unwrap();
    train_mini(tmp.path());
    let dir = path(tmp.path());
    assert_eq!(cli(&["explain", "--model-dir", dir, "--index", "40"]).code, 2);
    assert_eq!(cli(&["explain", "--model-dir", dir, "--class", "sci.space"]).code, 64);
    let empty = tmp.path().join("empty.txt");
    fs::write(&empty, "The, and of it -- is a!\n").unwrap();
    let r = cli(&["explain", "--model-dir", dir, "--input", path(&empty)]);
    assert_eq!(r.code, 3, "{}", r.err);
    assert_eq!(
        cli(&["explain", "--model-dir", dir, "--input", path(&tmp.path().join("nope"))]).code,
        2
    );
}

#[test]
fn explain_html_goes_to_a_file() {
    let tmp = TempDir::new().unwrap();
    train_mini(tmp.path());
    let input = tmp.path().join("post.txt");
    fs::write(
        &input,
        "From: x@y\n\nGod and faith <script> church prayer, evidence and reason.\n",
    )
    .unwrap();
    let r = cli(&[
        "explain",
        "--model-dir",
        path(tmp.path()),
        "--input",
        path(&input),
        "--format",
        "html",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let html = fs::read_to_string(tmp.path().join("explanation-post.txt-0.html")).unwrap();
    assert!(html.starts_with("<!DOCTYPE html>"));
    assert!(!html.contains("<script>"));
}

#[test]
fn inspect_dict_matches_golden() {
    let tmp = TempDir::new().unwrap();
    let vocab = tmp.path().join("vocab.tsv");
    fs::write(&vocab, "church\t4\nfaith\t9\ngod\t9\n").unwrap();
    let r = cli(&["inspect-dict", "--vocab", path(&vocab), "--top", "2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/inspect-dict.txt");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&golden, &r.out).unwrap();
    }
    assert_eq!(r.out, fs::read_to_string(golden).unwrap());
    assert!(r.out.starts_with("vocabulary size: 3\n"));
    assert_eq!(
        cli(&["inspect-dict", "--vocab", path(&tmp.path().join("x.tsv"))]).code,
        2
    );
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(cli(&["train", "--bogus"]).code, 64);
    assert_eq!(cli(&[]).code, 64);
    assert_eq!(cli(&["explain", "--format", "pdf"]).code, 64);
    assert_eq!(cli(&["--help"]).code, 0);
    let tmp = TempDir::new().unwrap();
    let conf = tmp.path().join("bad.conf");
    fs::write(&conf, "not a key value line\n").unwrap();
    assert_eq!(cli(&["train", "--config", path(&conf)]).code, 64);
    fs::write(&conf, "learning_rte = 0.1\n").unwrap();
    assert_eq!(cli(&["train", "--config", path(&conf)]).code, 64);
    assert_eq!(cli(&["train"]).code, 64);
    assert_eq!(cli(&["train", "--corpus", path(&tmp.path().join("missing"))]).code, 2);
}

#[test]
fn binary_reads_config_from_environment() {
    let tmp = TempDir::new().unwrap();
    let conf = tmp.path().join("env.conf");
    let out = tmp.path().join("model");
    fs::write(
        &conf,
        format!(
            "corpus_root = {}\noutput_dir = {}\ntrain.epochs = 2\n",
            path(&mini_corpus()),
            path(&out)
        ),
    )
    .unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_limelight"))
        .arg("train")
        .env("LIMELIGHT_CONFIG", &conf)
        .output()
        .unwrap();
    assert_eq!(
        status.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    assert!(out.join(MODEL_FILE).is_file());
    let status = Command::new(env!("CARGO_BIN_EXE_limelight"))
        .args(["inspect-dict", "--top", "1"])
        .env("LIMELIGHT_CONFIG", &conf)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&status.stdout).starts_with("vocabulary size: "));
}
