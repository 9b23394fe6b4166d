use serde::Serialize;

use super::metrics::accuracy_on;
use super::train::{samples, train_samples};
use super::TrainConfig;
use crate::corpus::{LabeledDataset, Vocabulary};
use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub learning_rates: Vec<f64>,
    pub batch_sizes: Vec<usize>,
    pub epochs: Vec<usize>,
    pub hidden_dims: Vec<usize>,
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            learning_rates: vec![0.5, 0.1, 0.05],
            batch_sizes: vec![16, 32],
            epochs: vec![20],
            hidden_dims: vec![64],
        }
    }
}

impl Grid {
    /// Every combination, learning rate outermost and hidden size innermost.
    pub fn configs(&self, seed: u64) -> Vec<TrainConfig> {
        let mut out = Vec::new();
        for &learning_rate in &self.learning_rates {
            for &batch_size in &self.batch_sizes {
                for &epochs in &self.epochs {
                    for &hidden_dim in &self.hidden_dims {
                        out.push(TrainConfig {
                            learning_rate,
                            batch_size,
                            epochs,
                            hidden_dim,
                            seed,
                        });
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridSearch {
    pub best: TrainConfig,
    /// Validation accuracy of every combination in grid order; empty when the
    /// grid had a single point and nothing was trained.
    pub trials: Vec<(TrainConfig, f64)>,
}

/// Trains every grid point on the first 90% of `train_set` and scores it on
/// the last 10%. The highest validation accuracy wins; ties keep the earliest
/// grid point.
pub fn grid_search(train_set: &LabeledDataset, vocab: &Vocabulary, grid: &Grid, seed: u64) -> Result<GridSearch> {
    let configs = grid.configs(seed);
    if configs.is_empty() {
        return Err(Error::InvalidConfig("every grid list must be non-empty".into()));
    }
    for c in &configs {
        c.validate()?;
    }
    if configs.len() == 1 {
        return Ok(GridSearch {
            best: configs[0].clone(),
            trials: Vec::new(),
        });
    }
    let n = train_set.len();
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let n_val = (n / 10).max(1);
    let all = samples(train_set, vocab);
    let (fit, val) = all.split_at(n - n_val);
    let classes = train_set.categories.len();
    let scores = par::map_ordered(&configs, |c| -> Result<f64> {
        let (model, _) = train_samples(fit, vocab.len(), classes, c)?;
        accuracy_on(&model, val)
    });
    let mut trials = Vec::with_capacity(configs.len());
    for (c, s) in configs.into_iter().zip(scores) {
        trials.push((c, s?));
    }
    let mut best = 0;
    for (i, t) in trials.iter().enumerate() {
        if t.1 > trials[best].1 {
            best = i;
        }
    }
    Ok(GridSearch {
        best: trials[best].0.clone(),
        trials,
    })
}
