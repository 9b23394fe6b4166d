use super::{LabeledDataset, SplitTag};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Uniform unstratified shuffle, then the first `floor(train_frac * N)`
/// documents go to train and the rest to test.
pub fn split_dataset(dataset: &LabeledDataset, train_frac: f64, seed: u64) -> Result<(LabeledDataset, LabeledDataset)> {
    if !(train_frac > 0.0 && train_frac < 1.0) {
        return Err(Error::InvalidConfig(format!("train_frac {train_frac} not in (0, 1)")));
    }
    let n = dataset.len();
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let mut order: Vec<usize> = (0..n).collect();
    SplitMix64::new(seed).shuffle(&mut order);
    let n_train = (train_frac * n as f64).floor() as usize;
    let take = |idx: &[usize], split| LabeledDataset {
        documents: idx.iter().map(|&i| dataset.documents[i].clone()).collect(),
        categories: dataset.categories.clone(),
        split,
    };
    Ok((
        take(&order[..n_train], SplitTag::Train),
        take(&order[n_train..], SplitTag::Test),
    ))
}
