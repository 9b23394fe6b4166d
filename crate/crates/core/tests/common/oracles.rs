//! Independent reference computations shared by the integration tests and
//! the acceptance suite. Nothing here calls into the code under test except
//! to read model parameters or evaluate the loss.
#![allow(dead_code)]

use std::path::PathBuf;

use limelight::corpus::{SparseVector, Vocabulary};
use limelight::mlp::{batch_loss, gradient, MlpModel, Sample};
use limelight::rng::SplitMix64;
use nalgebra::{DMatrix, DVector};

pub fn mini_corpus_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures/mini_corpus")
        .canonicalize()
        .expect("mini corpus fixture")
}

pub fn mini_categories() -> Vec<String> {
    vec!["alt.atheism".into(), "soc.religion.christian".into()]
}

/// Random dense model with non-zero biases.
pub fn random_model(input: usize, hidden: usize, classes: usize, seed: u64) -> MlpModel {
    let mut rng = SplitMix64::new(seed);
    let mut draw = |n: usize| -> Vec<f64> { (0..n).map(|_| rng.uniform(-1.0, 1.0)).collect() };
    let w1 = draw(hidden * input);
    let b1 = draw(hidden);
    let w2 = draw(classes * hidden);
    let b2 = draw(classes);
    let names = (0..classes).map(|c| format!("c{c}")).collect();
    MlpModel::from_parts(input, hidden, w1, b1, w2, b2, names).unwrap()
}

pub fn random_batch(input: usize, classes: usize, size: usize, seed: u64) -> Vec<Sample> {
    let mut rng = SplitMix64::new(seed ^ 0x5eed);
    (0..size)
        .map(|_| {
            let dense: Vec<f64> = (0..input).map(|_| rng.uniform(-1.0, 1.0)).collect();
            Sample {
                x: SparseVector::from_dense(&dense),
                label: rng.below(classes),
            }
        })
        .collect()
}

fn params_mut(model: &mut MlpModel) -> [&mut Vec<f64>; 4] {
    [&mut model.w1, &mut model.b1, &mut model.w2, &mut model.b2]
}

/// Largest elementwise relative error between the analytic gradient and
/// central finite differences of the mean loss.
pub fn gradcheck_max_rel_err(model: &MlpModel, batch: &[Sample], step: f64) -> f64 {
    let analytic = gradient(model, batch).unwrap();
    let analytic = [&analytic.w1, &analytic.b1, &analytic.w2, &analytic.b2];
    let mut worst = 0.0f64;
    for (block, grads) in analytic.iter().enumerate() {
        for (i, &a) in grads.iter().enumerate() {
            let mut plus = model.clone();
            params_mut(&mut plus)[block][i] += step;
            let mut minus = model.clone();
            params_mut(&mut minus)[block][i] -= step;
            let numeric = (batch_loss(&plus, batch).unwrap() - batch_loss(&minus, batch).unwrap()) / (2.0 * step);
            let rel = (a - numeric).abs() / (a.abs() + numeric.abs()).max(1e-7);
            worst = worst.max(rel);
        }
    }
    worst
}

/// Weighted ridge with an unpenalized intercept, solved through the normal
/// equations with nalgebra's LU. Returns `[w_0, …, w_{d-1}, b]`.
pub fn ridge_oracle(z: &[Vec<f64>], y: &[f64], weights: &[f64], alpha: f64) -> Vec<f64> {
    let n = z.len();
    let d = z[0].len();
    let x = DMatrix::from_fn(n, d + 1, |i, j| if j < d { z[i][j] } else { 1.0 });
    let w = DMatrix::from_diagonal(&DVector::from_column_slice(weights));
    let mut lhs = x.transpose() * &w * &x;
    for j in 0..d {
        lhs[(j, j)] += alpha;
    }
    let rhs = x.transpose() * &w * DVector::from_column_slice(y);
    lhs.lu()
        .solve(&rhs)
        .expect("oracle system singular")
        .as_slice()
        .to_vec()
}

/// Random binary design, targets, positive weights and ridge strength.
pub struct RidgeProblem {
    pub z: Vec<Vec<f64>>,
    pub y: Vec<f64>,
    pub weights: Vec<f64>,
    pub alpha: f64,
}

pub fn random_ridge_problem(seed: u64) -> RidgeProblem {
    let mut rng = SplitMix64::new(seed);
    let d = 1 + rng.below(20);
    let n = (d + 2 + rng.below(200)).min(200);
    let z: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..d).map(|_| if rng.next_f64() < 0.5 { 0.0 } else { 1.0 }).collect())
        .collect();
    let y = (0..n).map(|_| rng.next_f64()).collect();
    let weights = (0..n).map(|_| rng.uniform(0.01, 1.0)).collect();
    let alpha = if seed.is_multiple_of(4) {
        0.0
    } else {
        rng.uniform(0.01, 3.0)
    };
    RidgeProblem { z, y, weights, alpha }
}

pub fn rel_diff(a: &[f64], b: &[f64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
    let den: f64 = b.iter().map(|y| y * y).sum::<f64>().sqrt();
    num / den.max(f64::MIN_POSITIVE)
}

/// Two-hidden-unit model whose class-1 logit is `c` when `word` is present
/// in the document and 0 otherwise:
/// `relu(M·x_v) − relu(M·x_v − 1) = min(M·x_v, 1)`, and tf values are at
/// least `1 / len(doc)`, far above `1 / M`.
pub fn presence_model(vocab: &Vocabulary, word: &str, c: f64) -> MlpModel {
    const M: f64 = 1e7;
    let d = vocab.len();
    let v = vocab.index_of(word).expect("planted word in vocabulary");
    let mut w1 = vec![0.0; 2 * d];
    w1[v] = M;
    w1[d + v] = M;
    let b1 = vec![0.0, -1.0];
    let w2 = vec![0.0, 0.0, c, -c];
    let b2 = vec![0.0, 0.0];
    MlpModel::from_parts(d, 2, w1, b1, w2, b2, vec!["absent".into(), "present".into()]).unwrap()
}

/// Pearson χ² statistic of observed counts against equal expected counts.
pub fn chi_square_uniform(counts: &[usize]) -> f64 {
    let total: usize = counts.iter().sum();
    let expected = total as f64 / counts.len() as f64;
    counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum()
}

/// Preprocessed mini-corpus documents, in load order.
pub fn mini_corpus_docs() -> Vec<Vec<String>> {
    use limelight::corpus::{load_corpus, preprocess, strip_metadata, PreprocessConfig};
    let config = PreprocessConfig::default();
    load_corpus(&mini_corpus_root(), &mini_categories())
        .unwrap()
        .iter()
        .map(|d| preprocess(&strip_metadata(&d.text), &config))
        .collect()
}
