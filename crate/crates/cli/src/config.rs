//! Settings resolved from defaults, then a config file, then flags.

use std::path::{Path, PathBuf};

use limelight::corpus::PreprocessConfig;
use limelight::kv::KeyValues;
use limelight::lime::ExplainConfig;
use limelight::mlp::{Grid, TrainConfig};

use crate::failure::Failure;

const TOP_LEVEL: &[&str] = &["corpus_root", "categories", "output_dir", "seed", "train_frac", "grid"];
const TRAIN: &[&str] = &["learning_rate", "batch_size", "epochs", "hidden_dim", "seed"];
const GRID: &[&str] = &["learning_rates", "batch_sizes", "epochs", "hidden_dims"];
const EXPLAIN: &[&str] = &[
    "num_samples",
    "kernel_width",
    "alpha",
    "num_features",
    "auto_num_features",
    "seed",
];

fn is_known(key: &str) -> bool {
    let in_section = |prefix: &str, names: &[&str]| key.strip_prefix(prefix).is_some_and(|k| names.contains(&k));
    TOP_LEVEL.contains(&key)
        || PreprocessConfig::KEYS.contains(&key)
        || in_section("train.", TRAIN)
        || in_section("grid.", GRID)
        || in_section("explain.", EXPLAIN)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AppConfig {
    pub corpus_root: Option<PathBuf>,
    /// Empty means every subdirectory of the corpus root.
    pub categories: Vec<String>,
    pub output_dir: PathBuf,
    /// Seeds the train/test split and grid search.
    pub seed: u64,
    pub train_frac: f64,
    pub preprocess: PreprocessConfig,
    pub train: TrainConfig,
    pub grid: Option<Grid>,
    pub explain: ExplainConfig,
}

fn usage(e: limelight::Error) -> Failure {
    Failure::Usage(e.to_string())
}

impl AppConfig {
    pub fn from_kv(kv: &KeyValues) -> Result<Self, Failure> {
        if let Some(bad) = kv.keys().find(|k| !is_known(k)) {
            return Err(Failure::Usage(format!("unknown config key `{bad}`")));
        }
        let seed = kv.parsed("seed").map_err(usage)?.unwrap_or(0);
        let mut preprocess = PreprocessConfig::default();
        preprocess.apply(kv).map_err(usage)?;
        preprocess.validate().map_err(usage)?;

        let mut train = TrainConfig::read_from(kv, "train.").map_err(usage)?.unwrap_or_default();
        if kv.get("train.seed").is_none() {
            train.seed = seed;
        }
        train.validate().map_err(usage)?;

        let use_grid = kv.parsed::<bool>("grid").map_err(usage)?;
        let has_lists = kv.keys().any(|k| k.starts_with("grid."));
        let grid = if use_grid.unwrap_or(has_lists) {
            let d = Grid::default();
            Some(Grid {
                learning_rates: kv
                    .list("grid.learning_rates")
                    .map_err(usage)?
                    .unwrap_or(d.learning_rates),
                batch_sizes: kv.list("grid.batch_sizes").map_err(usage)?.unwrap_or(d.batch_sizes),
                epochs: kv.list("grid.epochs").map_err(usage)?.unwrap_or(d.epochs),
                hidden_dims: kv.list("grid.hidden_dims").map_err(usage)?.unwrap_or(d.hidden_dims),
            })
        } else {
            None
        };

        let mut explain = ExplainConfig::default();
        let p = |k: &str| format!("explain.{k}");
        if let Some(v) = kv.parsed(&p("num_samples")).map_err(usage)? {
            explain.num_samples = v;
        }
        if let Some(v) = kv.parsed(&p("kernel_width")).map_err(usage)? {
            explain.kernel_width = v;
        }
        if let Some(v) = kv.parsed(&p("alpha")).map_err(usage)? {
            explain.alpha = v;
        }
        if let Some(v) = kv.parsed(&p("num_features")).map_err(usage)? {
            explain.num_features = v;
        }
        if let Some(v) = kv.parsed(&p("auto_num_features")).map_err(usage)? {
            explain.auto_num_features = v;
        }
        explain.seed = kv.parsed(&p("seed")).map_err(usage)?.unwrap_or(seed);
        explain.validate().map_err(usage)?;

        let train_frac = kv.parsed("train_frac").map_err(usage)?.unwrap_or(0.8);
        if !(train_frac > 0.0 && train_frac < 1.0) {
            return Err(Failure::Usage(format!(
                "train_frac {train_frac} must lie strictly between 0 and 1"
            )));
        }
        Ok(Self {
            corpus_root: kv.get("corpus_root").filter(|v| !v.is_empty()).map(PathBuf::from),
            categories: kv.list("categories").map_err(usage)?.unwrap_or_default(),
            output_dir: kv
                .get("output_dir")
                .map_or_else(|| PathBuf::from("model"), PathBuf::from),
            seed,
            train_frac,
            preprocess,
            train,
            grid,
            explain,
        })
    }

    pub fn corpus_root(&self) -> Result<&Path, Failure> {
        self.corpus_root
            .as_deref()
            .ok_or_else(|| Failure::Usage("no corpus given: pass --corpus or set corpus_root".into()))
    }

    /// Settings needed to rebuild the training data, written next to a model.
    pub fn data_settings(&self, categories: &[String]) -> KeyValues {
        let mut kv = KeyValues::default();
        if let Some(root) = &self.corpus_root {
            kv.set("corpus_root", root.display().to_string());
        }
        kv.set("categories", categories.join(","));
        kv.set("seed", self.seed.to_string());
        kv.set("train_frac", format!("{:?}", self.train_frac));
        self.preprocess.write_to(&mut kv);
        kv
    }
}

/// Reads the config file, if any, and layers `overrides` on top.
pub fn load(file: Option<&Path>, overrides: &[(String, String)]) -> Result<KeyValues, Failure> {
    let mut kv = match file {
        Some(path) => KeyValues::read(path).map_err(|e| match e {
            limelight::Error::Io { .. } => Failure::Input(e.to_string()),
            other => Failure::Usage(other.to_string()),
        })?,
        None => KeyValues::default(),
    };
    for (k, v) in overrides {
        kv.set(k.clone(), v.clone());
    }
    Ok(kv)
}
