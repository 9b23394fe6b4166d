use super::model::softmax;
use super::MlpModel;
use crate::corpus::SparseVector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub x: SparseVector,
    pub label: usize,
}

/// Mean cross-entropy gradients, laid out like the model parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Gradients {
    pub w1: Vec<f64>,
    pub b1: Vec<f64>,
    pub w2: Vec<f64>,
    pub b2: Vec<f64>,
}

impl Gradients {
    pub(crate) fn zeros(model: &MlpModel) -> Self {
        Self {
            w1: vec![0.0; model.w1.len()],
            b1: vec![0.0; model.b1.len()],
            w2: vec![0.0; model.w2.len()],
            b2: vec![0.0; model.b2.len()],
        }
    }
}

fn check_batch(model: &MlpModel, batch: &[Sample]) -> Result<()> {
    if batch.is_empty() {
        return Err(Error::EmptyInput("gradient of an empty batch"));
    }
    for s in batch {
        if s.x.dim != model.input_dim || s.label >= model.num_classes {
            return Err(Error::InvalidDimension(format!(
                "sample of dimension {} with label {} for a {}-input {}-class model",
                s.x.dim, s.label, model.input_dim, model.num_classes
            )));
        }
    }
    Ok(())
}

/// Accumulates the batch-mean gradient into `grads` (which must start at
/// zero) and returns the summed cross-entropy loss. Columns of W1 that
/// receive a contribution are appended to `touched`, ascending, without
/// duplicates.
pub(crate) fn accumulate(model: &MlpModel, batch: &[&Sample], grads: &mut Gradients, touched: &mut Vec<usize>) -> f64 {
    let scale = 1.0 / batch.len() as f64;
    let (h_dim, i_dim) = (model.hidden_dim, model.input_dim);
    let mut loss = 0.0;
    let mut d_hidden = vec![0.0; h_dim];
    for s in batch {
        let t = model.trace(&s.x);
        let max = t.logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let log_sum = t.logits.iter().map(|l| (l - max).exp()).sum::<f64>().ln();
        loss -= t.logits[s.label] - max - log_sum;

        let mut d_logits = softmax(&t.logits);
        d_logits[s.label] -= 1.0;
        d_logits.iter_mut().for_each(|d| *d *= scale);

        d_hidden.iter_mut().for_each(|d| *d = 0.0);
        for (c, &dl) in d_logits.iter().enumerate() {
            grads.b2[c] += dl;
            let row = c * h_dim..(c + 1) * h_dim;
            for (((g, &w), &h), dh) in grads.w2[row.clone()]
                .iter_mut()
                .zip(&model.w2[row])
                .zip(&t.hidden)
                .zip(d_hidden.iter_mut())
            {
                *g += dl * h;
                *dh += w * dl;
            }
        }
        for (j, &dz) in d_hidden.iter().enumerate() {
            // relu'(0) = 0
            if t.z1[j] <= 0.0 {
                continue;
            }
            grads.b1[j] += dz;
            let row = j * i_dim;
            for &(i, v) in &s.x.entries {
                grads.w1[row + i] += dz * v;
            }
        }
        touched.extend(s.x.entries.iter().map(|&(i, _)| i));
    }
    touched.sort_unstable();
    touched.dedup();
    loss
}

/// Mean gradient of the cross-entropy loss over `batch`.
pub fn gradient(model: &MlpModel, batch: &[Sample]) -> Result<Gradients> {
    check_batch(model, batch)?;
    let mut grads = Gradients::zeros(model);
    let refs: Vec<&Sample> = batch.iter().collect();
    accumulate(model, &refs, &mut grads, &mut Vec::new());
    Ok(grads)
}

/// Mean cross-entropy loss over `batch`.
pub fn batch_loss(model: &MlpModel, batch: &[Sample]) -> Result<f64> {
    check_batch(model, batch)?;
    let mut total = 0.0;
    for s in batch {
        let p = model.forward_sparse(&s.x)?;
        total -= p[s.label].ln();
    }
    Ok(total / batch.len() as f64)
}

pub(crate) fn check(model: &MlpModel, batch: &[Sample]) -> Result<()> {
    check_batch(model, batch)
}
