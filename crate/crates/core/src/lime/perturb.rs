use super::kernel::{cosine_distance_to_origin_mask, kernel_weight};
use super::Instance;
use crate::corpus::{vectorize_sparse, FeatureMode, Vocabulary};
use crate::error::{Error, Result};
use crate::mlp::MlpModel;
use crate::par;
use crate::rng::SplitMix64;

/// `n` masks over `d` distinct words. Row 0 keeps every word. Every other
/// row removes `k` words, `k` uniform in `1..=d-1`, picked as the first `k`
/// slots of a Fisher-Yates shuffle of `0..d`. With `d = 1` nothing can be
/// removed without emptying the document, so every row keeps the word.
pub fn sample_masks(d: usize, n: usize, seed: u64) -> Vec<Vec<bool>> {
    let mut rng = SplitMix64::new(seed);
    let mut masks = Vec::with_capacity(n);
    if n == 0 {
        return masks;
    }
    masks.push(vec![true; d]);
    let mut slots: Vec<usize> = (0..d).collect();
    for _ in 1..n {
        let mut row = vec![true; d];
        if d > 1 {
            let k = 1 + rng.below(d - 1);
            slots.iter_mut().enumerate().for_each(|(i, s)| *s = i);
            rng.shuffle(&mut slots);
            for &s in &slots[..k] {
                row[s] = false;
            }
        }
        masks.push(row);
    }
    masks
}

/// Tokens of `instance` with every occurrence of each masked-off distinct
/// word deleted.
pub fn reconstruct_text(instance: &Instance, mask: &[bool]) -> Vec<String> {
    debug_assert_eq!(mask.len(), instance.distinct_words.len());
    let removed: std::collections::HashSet<&str> = instance
        .distinct_words
        .iter()
        .zip(mask)
        .filter(|(_, &keep)| !keep)
        .map(|(w, _)| w.as_str())
        .collect();
    instance
        .tokens
        .iter()
        .filter(|t| !removed.contains(t.as_str()))
        .cloned()
        .collect()
}

fn check(model: &MlpModel, vocab: &Vocabulary, instance: &Instance, masks: &[Vec<bool>]) -> Result<()> {
    if model.input_dim != vocab.len() {
        return Err(Error::InvalidDimension(format!(
            "model expects {} inputs, vocabulary has {} words",
            model.input_dim,
            vocab.len()
        )));
    }
    let d = instance.num_features();
    if let Some(m) = masks.iter().find(|m| m.len() != d) {
        return Err(Error::InvalidDimension(format!(
            "mask of length {} for {d} words",
            m.len()
        )));
    }
    Ok(())
}

fn score(model: &MlpModel, vocab: &Vocabulary, instance: &Instance, mask: &[bool]) -> Result<Vec<f64>> {
    let tokens = reconstruct_text(instance, mask);
    model.forward_sparse(&vectorize_sparse(&tokens, vocab, FeatureMode::Tf))
}

/// Class probabilities for every perturbation, one row per mask, in mask order.
pub fn predict_perturbations(
    model: &MlpModel,
    vocab: &Vocabulary,
    instance: &Instance,
    masks: &[Vec<bool>],
) -> Result<Vec<Vec<f64>>> {
    check(model, vocab, instance, masks)?;
    par::map_ordered(masks, |m| score(model, vocab, instance, m))
        .into_iter()
        .collect()
}

/// Same as [`predict_perturbations`] but never parallel.
pub fn predict_perturbations_sequential(
    model: &MlpModel,
    vocab: &Vocabulary,
    instance: &Instance,
    masks: &[Vec<bool>],
) -> Result<Vec<Vec<f64>>> {
    check(model, vocab, instance, masks)?;
    par::map_sequential(masks, |m| score(model, vocab, instance, m))
        .into_iter()
        .collect()
}

/// Sampled neighbourhood of one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct PerturbationBatch {
    pub masks: Vec<Vec<bool>>,
    pub texts: Vec<Vec<String>>,
    pub kernel_weights: Vec<f64>,
    /// Probability of `instance.label_of_interest` for each mask.
    pub probs: Vec<f64>,
    /// Full class distribution for each mask.
    pub class_probs: Vec<Vec<f64>>,
}

impl PerturbationBatch {
    pub fn generate(
        model: &MlpModel,
        vocab: &Vocabulary,
        instance: &Instance,
        num_samples: usize,
        kernel_width: f64,
        seed: u64,
    ) -> Result<Self> {
        if instance.label_of_interest >= model.num_classes {
            return Err(Error::InvalidDimension(format!(
                "class {} of a {}-class model",
                instance.label_of_interest, model.num_classes
            )));
        }
        let masks = sample_masks(instance.num_features(), num_samples, seed);
        let class_probs = predict_perturbations(model, vocab, instance, &masks)?;
        let texts = masks.iter().map(|m| reconstruct_text(instance, m)).collect();
        let kernel_weights = masks
            .iter()
            .map(|m| kernel_weight(cosine_distance_to_origin_mask(m), kernel_width))
            .collect();
        let probs = class_probs.iter().map(|p| p[instance.label_of_interest]).collect();
        Ok(Self {
            masks,
            texts,
            kernel_weights,
            probs,
            class_probs,
        })
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Masks as a 0/1 design matrix.
    pub fn design(&self) -> Vec<Vec<f64>> {
        self.masks
            .iter()
            .map(|m| m.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect())
            .collect()
    }
}
