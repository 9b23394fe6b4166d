use serde::{Deserialize, Serialize};

use super::Vocabulary;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureMode {
    /// Raw occurrence counts.
    Counts,
    /// Counts divided by the number of in-vocabulary tokens.
    Tf,
}

/// Dense bag-of-words vector of length `|vocab|`.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureVector {
    pub values: Vec<f64>,
    pub mode: FeatureMode,
}

/// Non-zero entries of a [`FeatureVector`], ascending by index.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseVector {
    pub dim: usize,
    pub entries: Vec<(usize, f64)>,
}

impl SparseVector {
    pub fn from_dense(values: &[f64]) -> Self {
        Self {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0.0)
                .map(|(i, v)| (i, *v))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for &(i, v) in &self.entries {
            out[i] = v;
        }
        out
    }
}

/// Out-of-vocabulary tokens are ignored.
pub fn vectorize_sparse<S: AsRef<str>>(tokens: &[S], vocab: &Vocabulary, mode: FeatureMode) -> SparseVector {
    let mut idx: Vec<usize> = tokens.iter().filter_map(|t| vocab.index_of(t.as_ref())).collect();
    idx.sort_unstable();
    let total = idx.len();
    let mut entries: Vec<(usize, f64)> = Vec::new();
    for i in idx {
        match entries.last_mut() {
            Some((j, c)) if *j == i => *c += 1.0,
            _ => entries.push((i, 1.0)),
        }
    }
    if mode == FeatureMode::Tf && total > 0 {
        let denom = total as f64;
        for e in &mut entries {
            e.1 /= denom;
        }
    }
    SparseVector {
        dim: vocab.len(),
        entries,
    }
}

pub fn vectorize<S: AsRef<str>>(tokens: &[S], vocab: &Vocabulary, mode: FeatureMode) -> FeatureVector {
    FeatureVector {
        values: vectorize_sparse(tokens, vocab, mode).to_dense(),
        mode,
    }
}
