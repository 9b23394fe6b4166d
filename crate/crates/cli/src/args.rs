use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Train a bag-of-words MLP text classifier and explain its predictions with
/// local surrogate models.
#[derive(Debug, Parser)]
#[command(name = "limelight", version)]
pub struct Cli {
    /// Flat `key = value` config file. Defaults to $LIMELIGHT_CONFIG.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Preprocess a corpus, split it 80/20, train and write the model.
    Train(TrainArgs),
    /// Score a trained model on its train or test split.
    Evaluate(EvaluateArgs),
    /// Explain the prediction for one document.
    Explain(ExplainArgs),
    /// Print vocabulary size and the most frequent words.
    InspectDict(InspectArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SplitArg {
    Train,
    Test,
}

impl SplitArg {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitArg::Train => "train",
            SplitArg::Test => "test",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Html,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Corpus root with one subdirectory per category.
    #[arg(long, value_name = "DIR")]
    pub corpus: Option<PathBuf>,
    /// Comma-separated category subset, in label order.
    #[arg(long, value_name = "A,B,...")]
    pub categories: Option<String>,
    #[arg(long, visible_alias = "model-dir", value_name = "DIR")]
    pub output_dir: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_name = "FRAC")]
    pub train_frac: Option<f64>,
    /// Grid-search hyperparameters (default grid unless `grid.*` keys are set).
    #[arg(long)]
    pub grid: bool,
    #[arg(long)]
    pub learning_rate: Option<f64>,
    #[arg(long)]
    pub batch_size: Option<usize>,
    #[arg(long)]
    pub epochs: Option<usize>,
    #[arg(long)]
    pub hidden_dim: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[arg(long, value_name = "DIR")]
    pub model_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "test")]
    pub split: SplitArg,
    /// Corpus root, if it moved since training.
    #[arg(long, value_name = "DIR")]
    pub corpus: Option<PathBuf>,
    /// Where to write the metrics JSON. Defaults to `<model-dir>/metrics-<split>.json`.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExplainArgs {
    #[arg(long, value_name = "DIR")]
    pub model_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "test")]
    pub split: SplitArg,
    /// Document index within the split.
    #[arg(long, default_value_t = 0)]
    pub index: usize,
    /// Explain a raw text file instead of a corpus document.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    #[arg(long, value_name = "DIR")]
    pub corpus: Option<PathBuf>,
    /// Class to explain. Defaults to the predicted class.
    #[arg(long, value_name = "NAME")]
    pub class: Option<String>,
    #[arg(long, value_name = "K")]
    pub num_features: Option<usize>,
    /// Choose K from the document length: min(10, ceil(distinct words / 5)).
    #[arg(long, conflicts_with = "num_features")]
    pub auto_features: bool,
    #[arg(long, value_name = "N")]
    pub num_samples: Option<usize>,
    #[arg(long, value_name = "W")]
    pub kernel_width: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
    /// Output file. Text and JSON default to stdout, HTML to the model directory.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InspectArgs {
    #[arg(long, value_name = "DIR", conflicts_with = "vocab")]
    pub model_dir: Option<PathBuf>,
    /// Vocabulary TSV file.
    #[arg(long, value_name = "FILE")]
    pub vocab: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    pub top: usize,
}

fn push<T: ToString>(out: &mut Vec<(String, String)>, key: &str, value: &Option<T>) {
    if let Some(v) = value {
        out.push((key.to_string(), v.to_string()));
    }
}

impl TrainArgs {
    pub fn overrides(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        push(&mut out, "corpus_root", &self.corpus.as_ref().map(|p| p.display()));
        push(&mut out, "categories", &self.categories);
        push(&mut out, "output_dir", &self.output_dir.as_ref().map(|p| p.display()));
        push(&mut out, "seed", &self.seed);
        push(&mut out, "train_frac", &self.train_frac);
        if self.grid {
            out.push(("grid".into(), "true".into()));
        }
        push(&mut out, "train.learning_rate", &self.learning_rate);
        push(&mut out, "train.batch_size", &self.batch_size);
        push(&mut out, "train.epochs", &self.epochs);
        push(&mut out, "train.hidden_dim", &self.hidden_dim);
        out
    }
}

impl ExplainArgs {
    pub fn overrides(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        push(&mut out, "explain.num_features", &self.num_features);
        if self.auto_features {
            out.push(("explain.auto_num_features".into(), "true".into()));
        }
        push(&mut out, "explain.num_samples", &self.num_samples);
        push(&mut out, "explain.kernel_width", &self.kernel_width);
        push(&mut out, "explain.alpha", &self.alpha);
        push(&mut out, "explain.seed", &self.seed);
        out
    }
}
