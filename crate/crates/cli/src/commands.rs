use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use limelight::corpus::{
    build_vocabulary, list_categories, load_corpus, prepare_dataset, preprocess, split_dataset, strip_metadata,
    LabeledDataset, Vocabulary,
};
use limelight::kv::KeyValues;
use limelight::lime::{explain, DocumentRef};
use limelight::mlp::{evaluate, grid_search, train, MlpModel, TrainConfig};
use limelight::report::{render, ReportFormat};
use serde_json::json;

use crate::args::{EvaluateArgs, ExplainArgs, FormatArg, InspectArgs, SplitArg};
use crate::config::{self, AppConfig};
use crate::failure::Failure;

pub const MODEL_FILE: &str = "model.txt";
pub const VOCAB_FILE: &str = "vocab.tsv";
pub const METRICS_FILE: &str = "metrics.json";
pub const RUN_FILE: &str = "run.conf";

type Outcome = Result<(), Failure>;

struct Data {
    categories: Vec<String>,
    raw_count: usize,
    train: LabeledDataset,
    test: LabeledDataset,
}

impl Data {
    fn load(cfg: &AppConfig) -> Result<Self, Failure> {
        let root = cfg.corpus_root()?;
        let categories = if cfg.categories.is_empty() {
            list_categories(root)?
        } else {
            cfg.categories.clone()
        };
        if categories.len() < 2 {
            return Err(Failure::Input(format!(
                "{} holds {} categor{}, need at least 2",
                root.display(),
                categories.len(),
                if categories.len() == 1 { "y" } else { "ies" }
            )));
        }
        let raw = load_corpus(root, &categories)?;
        let dataset = prepare_dataset(&raw, &categories, &cfg.preprocess)?;
        let (train, test) = split_dataset(&dataset, cfg.train_frac, cfg.seed)?;
        Ok(Self {
            categories,
            raw_count: raw.len(),
            train,
            test,
        })
    }

    fn split(&self, which: SplitArg) -> &LabeledDataset {
        match which {
            SplitArg::Train => &self.train,
            SplitArg::Test => &self.test,
        }
    }
}

fn describe(c: &TrainConfig) -> String {
    format!(
        "lr={} batch={} epochs={} hidden={}",
        c.learning_rate, c.batch_size, c.epochs, c.hidden_dim
    )
}

fn write_file(path: &Path, body: &str) -> Outcome {
    fs::write(path, body).map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))
}

fn to_json_pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn cmd_train(cfg: &AppConfig, out: &mut dyn Write) -> Outcome {
    let data = Data::load(cfg)?;
    writeln!(
        out,
        "corpus: {} of {} documents kept, {} categories",
        data.train.len() + data.test.len(),
        data.raw_count,
        data.categories.len()
    )?;
    writeln!(out, "split: train={} test={}", data.train.len(), data.test.len())?;

    let vocab = build_vocabulary(&data.train.documents, cfg.preprocess.min_df, cfg.preprocess.max_df_frac)?;
    writeln!(out, "vocabulary: {} words", vocab.len())?;

    let (chosen, trials) = match &cfg.grid {
        Some(grid) => {
            let search = grid_search(&data.train, &vocab, grid, cfg.seed)?;
            (search.best, search.trials)
        }
        None => (cfg.train.clone(), Vec::new()),
    };
    for (c, acc) in &trials {
        writeln!(out, "grid: {}  validation accuracy {acc:.4}", describe(c))?;
    }
    let (model, history) = train(&data.train, &vocab, &chosen)?;
    writeln!(
        out,
        "trained: {}  final loss {:.4}",
        describe(&chosen),
        history.last().copied().unwrap_or(0.0)
    )?;
    let metrics = evaluate(&model, &data.test, &vocab)?;
    write!(out, "test metrics\n{}", metrics.to_text(&model.categories))?;

    let dir = &cfg.output_dir;
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("creating {}: {e}", dir.display())))?;
    model.save(&dir.join(MODEL_FILE))?;
    vocab.save(&dir.join(VOCAB_FILE))?;
    let report = json!({
        "train_size": data.train.len(),
        "test_size": data.test.len(),
        "vocabulary_size": vocab.len(),
        "selected": chosen,
        "grid": trials.iter().map(|(c, a)| json!({"config": c, "validation_accuracy": a})).collect::<Vec<_>>(),
        "loss_history": history,
        "test": metrics,
    });
    write_file(&dir.join(METRICS_FILE), &to_json_pretty(&report))?;
    write_file(&dir.join(RUN_FILE), &cfg.data_settings(&data.categories).render())?;
    writeln!(out, "wrote {}", dir.display())?;
    Ok(())
}

/// A trained model directory and the settings it was trained with.
struct Trained {
    model: MlpModel,
    vocab: Vocabulary,
    run: KeyValues,
}

impl Trained {
    fn open(dir: &Path) -> Result<Self, Failure> {
        let need = |name: &str| -> Result<PathBuf, Failure> {
            let path = dir.join(name);
            if path.is_file() {
                Ok(path)
            } else {
                Err(Failure::Input(format!(
                    "missing {}; run `limelight train` first",
                    path.display()
                )))
            }
        };
        let model = MlpModel::load(&need(MODEL_FILE)?)?;
        let vocab = Vocabulary::load(&need(VOCAB_FILE)?)?;
        let run = KeyValues::read(&need(RUN_FILE)?)?;
        if model.input_dim != vocab.len() {
            return Err(Failure::Input(format!(
                "model in {} expects {} inputs but the vocabulary has {} words",
                dir.display(),
                model.input_dim,
                vocab.len()
            )));
        }
        Ok(Self { model, vocab, run })
    }

    /// Config with the training-time data settings layered over `base`.
    fn config(&self, base: &KeyValues, corpus: Option<&Path>) -> Result<AppConfig, Failure> {
        let mut kv = base.clone();
        for key in self.run.keys() {
            kv.set(key, self.run.get(key).unwrap_or_default());
        }
        if let Some(root) = corpus {
            kv.set("corpus_root", root.display().to_string());
        }
        AppConfig::from_kv(&kv)
    }
}

fn model_dir(flag: &Option<PathBuf>, base: &KeyValues) -> Result<PathBuf, Failure> {
    Ok(match flag {
        Some(dir) => dir.clone(),
        None => AppConfig::from_kv(base)?.output_dir,
    })
}

pub fn cmd_evaluate(args: &EvaluateArgs, base: &KeyValues, out: &mut dyn Write) -> Outcome {
    let dir = model_dir(&args.model_dir, base)?;
    let trained = Trained::open(&dir)?;
    let cfg = trained.config(base, args.corpus.as_deref())?;
    let data = Data::load(&cfg)?;
    let split = data.split(args.split);
    let metrics = evaluate(&trained.model, split, &trained.vocab)?;
    write!(
        out,
        "{} split\n{}",
        args.split.as_str(),
        metrics.to_text(&trained.model.categories)
    )?;
    let path = args
        .output
        .clone()
        .unwrap_or_else(|| dir.join(format!("metrics-{}.json", args.split.as_str())));
    let report = json!({ "split": args.split.as_str(), "documents": split.len(), "metrics": metrics });
    write_file(&path, &to_json_pretty(&report))?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(())
}

pub fn cmd_explain(args: &ExplainArgs, base: &KeyValues, out: &mut dyn Write) -> Outcome {
    let dir = model_dir(&args.model_dir, base)?;
    let trained = Trained::open(&dir)?;
    let mut cfg = trained.config(base, args.corpus.as_deref())?;
    cfg.explain.class_to_explain = args.class.clone();

    let (tokens, document_ref) = match &args.input {
        Some(path) => {
            let text = fs::read(path).map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?;
            let tokens = preprocess(&strip_metadata(&String::from_utf8_lossy(&text)), &cfg.preprocess);
            let name = path
                .file_name()
                .map_or_else(|| "input".into(), |n| n.to_string_lossy().into_owned());
            (tokens, DocumentRef { split: name, index: 0 })
        }
        None => {
            let data = Data::load(&cfg)?;
            let split = data.split(args.split);
            let doc = split.documents.get(args.index).ok_or_else(|| {
                Failure::Input(format!(
                    "index {} is out of range for the {} split ({} documents)",
                    args.index,
                    args.split.as_str(),
                    split.len()
                ))
            })?;
            let document_ref = DocumentRef {
                split: args.split.as_str().into(),
                index: args.index,
            };
            (doc.tokens.clone(), document_ref)
        }
    };
    if tokens.is_empty() {
        return Err(Failure::Degenerate(
            "the document has no tokens left after preprocessing; nothing to explain".into(),
        ));
    }
    let file_stem = format!("explanation-{}-{}", document_ref.split, document_ref.index);
    let explanation = explain(&trained.model, &trained.vocab, &tokens, document_ref, &cfg.explain)?;
    let format = match args.format {
        FormatArg::Text => ReportFormat::Text,
        FormatArg::Json => ReportFormat::Json,
        FormatArg::Html => ReportFormat::Html,
    };
    let mut body = render(&explanation, &tokens, format)?.body;
    if format == ReportFormat::Json {
        body.push('\n');
    }
    let target = match (&args.output, format) {
        (Some(path), _) => Some(path.clone()),
        (None, ReportFormat::Html) => Some(dir.join(format!("{file_stem}.html"))),
        (None, _) => None,
    };
    match target {
        Some(path) => {
            write_file(&path, &body)?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

pub fn cmd_inspect_dict(args: &InspectArgs, base: &KeyValues, out: &mut dyn Write) -> Outcome {
    let path = match &args.vocab {
        Some(p) => p.clone(),
        None => model_dir(&args.model_dir, base)?.join(VOCAB_FILE),
    };
    if !path.is_file() {
        return Err(Failure::Input(format!("vocabulary not found: {}", path.display())));
    }
    let vocab = Vocabulary::load(&path)?;
    writeln!(out, "vocabulary size: {}", vocab.len())?;
    let top = vocab.top_by_doc_freq(args.top);
    let width = top.iter().map(|(w, _)| w.len()).max().unwrap_or(0);
    for (rank, (word, df)) in top.iter().enumerate() {
        writeln!(out, "{:>4}  {word:<width$}  {df}", rank + 1)?;
    }
    Ok(())
}

/// Config file plus per-subcommand flag overrides.
pub fn base_config(file: Option<&Path>, overrides: &[(String, String)]) -> Result<KeyValues, Failure> {
    config::load(file, overrides)
}
