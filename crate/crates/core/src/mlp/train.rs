use serde::{Deserialize, Serialize};

use super::grad::{self, Gradients, Sample};
use super::MlpModel;
use crate::corpus::{vectorize_sparse, FeatureMode, LabeledDataset, Vocabulary};
use crate::error::{Error, Result};
use crate::kv::KeyValues;
use crate::par;
use crate::rng::SplitMix64;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub batch_size: usize,
    pub epochs: usize,
    pub hidden_dim: usize,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            learning_rate: 0.1,
            batch_size: 32,
            epochs: 20,
            hidden_dim: 64,
            seed: 0,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate > 0.0 && self.learning_rate.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "learning_rate {} must be positive",
                self.learning_rate
            )));
        }
        if self.batch_size == 0 || self.epochs == 0 || self.hidden_dim == 0 {
            return Err(Error::InvalidConfig(
                "batch_size, epochs and hidden_dim must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn write_to(&self, kv: &mut KeyValues, prefix: &str) {
        kv.set(format!("{prefix}learning_rate"), format!("{:?}", self.learning_rate));
        kv.set(format!("{prefix}batch_size"), self.batch_size.to_string());
        kv.set(format!("{prefix}epochs"), self.epochs.to_string());
        kv.set(format!("{prefix}hidden_dim"), self.hidden_dim.to_string());
        kv.set(format!("{prefix}seed"), self.seed.to_string());
    }

    /// `None` when no `prefix`-ed key is present; missing keys take defaults.
    pub fn read_from(kv: &KeyValues, prefix: &str) -> Result<Option<Self>> {
        if !kv.keys().any(|k| k.starts_with(prefix)) {
            return Ok(None);
        }
        let mut c = Self::default();
        if let Some(v) = kv.parsed(&format!("{prefix}learning_rate"))? {
            c.learning_rate = v;
        }
        if let Some(v) = kv.parsed(&format!("{prefix}batch_size"))? {
            c.batch_size = v;
        }
        if let Some(v) = kv.parsed(&format!("{prefix}epochs"))? {
            c.epochs = v;
        }
        if let Some(v) = kv.parsed(&format!("{prefix}hidden_dim"))? {
            c.hidden_dim = v;
        }
        if let Some(v) = kv.parsed(&format!("{prefix}seed"))? {
            c.seed = v;
        }
        Ok(Some(c))
    }
}

pub(crate) fn samples(dataset: &LabeledDataset, vocab: &Vocabulary) -> Vec<Sample> {
    par::map_ordered(&dataset.documents, |d| Sample {
        x: vectorize_sparse(&d.tokens, vocab, FeatureMode::Tf),
        label: d.label,
    })
}

/// Vectorizes `dataset` in tf mode and trains with plain mini-batch SGD.
///
/// Returns the model and the mean training loss of every epoch.
pub fn train(dataset: &LabeledDataset, vocab: &Vocabulary, config: &TrainConfig) -> Result<(MlpModel, Vec<f64>)> {
    if dataset.is_empty() {
        return Err(Error::EmptyInput("training set is empty"));
    }
    let (mut model, history) = train_samples(&samples(dataset, vocab), vocab.len(), dataset.categories.len(), config)?;
    model.categories = dataset.categories.clone();
    Ok((model, history))
}

/// Training on pre-vectorized samples.
///
/// One SplitMix64 stream seeded with `config.seed` first initializes the
/// weights, then drives every epoch's shuffle.
pub fn train_samples(
    samples: &[Sample],
    input_dim: usize,
    num_classes: usize,
    config: &TrainConfig,
) -> Result<(MlpModel, Vec<f64>)> {
    config.validate()?;
    if samples.is_empty() {
        return Err(Error::EmptyInput("training set is empty"));
    }
    let mut rng = SplitMix64::new(config.seed);
    let mut model = MlpModel::init(input_dim, config.hidden_dim, num_classes, &mut rng)?;
    grad::check(&model, samples)?;

    let mut grads = Gradients::zeros(&model);
    let mut touched = Vec::new();
    let mut order: Vec<usize> = (0..samples.len()).collect();
    let mut batch = Vec::with_capacity(config.batch_size);
    let mut history = Vec::with_capacity(config.epochs);
    for _ in 0..config.epochs {
        rng.shuffle(&mut order);
        let mut epoch_loss = 0.0;
        for chunk in order.chunks(config.batch_size) {
            batch.clear();
            batch.extend(chunk.iter().map(|&i| &samples[i]));
            touched.clear();
            epoch_loss += grad::accumulate(&model, &batch, &mut grads, &mut touched);
            sgd_step(&mut model, &mut grads, &touched, config.learning_rate);
        }
        history.push(epoch_loss / samples.len() as f64);
    }
    model.trained_with = Some(config.clone());
    Ok((model, history))
}

/// `param -= lr * grad`, then zeroes the consumed gradient. Only W1 columns
/// listed in `touched` can be non-zero, so only those are visited.
fn sgd_step(model: &mut MlpModel, grads: &mut Gradients, touched: &[usize], lr: f64) {
    let i_dim = model.input_dim;
    for j in 0..model.hidden_dim {
        let row = j * i_dim;
        for &i in touched {
            model.w1[row + i] -= lr * grads.w1[row + i];
            grads.w1[row + i] = 0.0;
        }
    }
    for (p, g) in [
        (&mut model.b1, &mut grads.b1),
        (&mut model.w2, &mut grads.w2),
        (&mut model.b2, &mut grads.b2),
    ] {
        for (p, g) in p.iter_mut().zip(g.iter_mut()) {
            *p -= lr * *g;
            *g = 0.0;
        }
    }
}
