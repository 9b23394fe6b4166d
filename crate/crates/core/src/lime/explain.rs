use serde::{Deserialize, Serialize};

use super::make_instance;
use super::perturb::PerturbationBatch;
use super::surrogate::{fit_weighted_ridge, select_features};
use crate::corpus::{vectorize_sparse, FeatureMode, Vocabulary};
use crate::error::{Error, Result};
use crate::mlp::{argmax, MlpModel};

#[derive(Clone, Debug, PartialEq)]
pub struct ExplainConfig {
    pub num_samples: usize,
    pub kernel_width: f64,
    pub alpha: f64,
    pub num_features: usize,
    /// Pick K from the document size instead of `num_features`.
    pub auto_num_features: bool,
    pub seed: u64,
    /// Class name to explain; the predicted class when `None`.
    pub class_to_explain: Option<String>,
}

impl Default for ExplainConfig {
    fn default() -> Self {
        Self {
            num_samples: 1000,
            kernel_width: 0.25,
            alpha: 1.0,
            num_features: 6,
            auto_num_features: false,
            seed: 0,
            class_to_explain: None,
        }
    }
}

impl ExplainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_samples == 0 || self.num_features == 0 {
            return Err(Error::InvalidConfig(
                "num_samples and num_features must be positive".into(),
            ));
        }
        if !(self.kernel_width > 0.0 && self.kernel_width.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "kernel_width {} must be positive",
                self.kernel_width
            )));
        }
        if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "alpha {} must be non-negative",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// `min(10, ceil(d / 5))`: more features for longer documents.
pub fn heuristic_num_features(distinct_words: usize) -> usize {
    distinct_words.div_ceil(5).clamp(1, 10)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentRef {
    pub split: String,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeatureWeight {
    pub word: String,
    pub weight: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub num_samples: usize,
    pub kernel_width: f64,
    pub alpha: f64,
    pub num_features: usize,
    pub seed: u64,
}

/// Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Explanation {
    pub document_ref: DocumentRef,
    pub categories: Vec<String>,
    pub class_probs: Vec<f64>,
    pub explained_class: String,
    pub intercept: f64,
    pub weighted_r2: f64,
    /// Sorted by `|weight|` descending, ties by first occurrence in the document.
    pub features: Vec<FeatureWeight>,
    pub config: ConfigEcho,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Explanation {
    pub fn explained_index(&self) -> Option<usize> {
        self.categories.iter().position(|c| *c == self.explained_class)
    }
}

/// Explains the classifier's probability for one preprocessed document.
pub fn explain(
    model: &MlpModel,
    vocab: &Vocabulary,
    tokens: &[String],
    document_ref: DocumentRef,
    config: &ExplainConfig,
) -> Result<Explanation> {
    config.validate()?;
    if tokens.is_empty() {
        return Err(Error::EmptyInstance);
    }
    if model.input_dim != vocab.len() {
        return Err(Error::InvalidDimension(format!(
            "model expects {} inputs, vocabulary has {} words",
            model.input_dim,
            vocab.len()
        )));
    }
    let class_probs = model.forward_sparse(&vectorize_sparse(tokens, vocab, FeatureMode::Tf))?;
    let class = match &config.class_to_explain {
        Some(name) => model
            .categories
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown class `{name}`")))?,
        None => argmax(&class_probs),
    };
    let instance = make_instance(tokens, class)?;
    let d = instance.num_features();
    let k = if config.auto_num_features {
        heuristic_num_features(d)
    } else {
        config.num_features
    };

    let mut warnings = Vec::new();
    if config.num_samples < d + 2 {
        warnings.push(format!(
            "num_samples {} is below distinct words + 2 = {}; fit relies on the ridge penalty",
            config.num_samples,
            d + 2
        ));
    }

    let batch = PerturbationBatch::generate(
        model,
        vocab,
        &instance,
        config.num_samples,
        config.kernel_width,
        config.seed,
    )?;
    let design = batch.design();
    let full = fit_weighted_ridge(&design, &batch.probs, &batch.kernel_weights, config.alpha)?;
    let selected = select_features(&full.coefficients, k);

    let restricted: Vec<Vec<f64>> = design
        .iter()
        .map(|row| selected.iter().map(|&j| row[j]).collect())
        .collect();
    let refit = fit_weighted_ridge(&restricted, &batch.probs, &batch.kernel_weights, config.alpha)?;

    let mut order: Vec<usize> = (0..selected.len()).collect();
    order.sort_by(|&a, &b| {
        refit.coefficients[b]
            .abs()
            .total_cmp(&refit.coefficients[a].abs())
            .then(selected[a].cmp(&selected[b]))
    });
    let features = order
        .into_iter()
        .map(|i| FeatureWeight {
            word: instance.distinct_words[selected[i]].clone(),
            weight: refit.coefficients[i],
        })
        .collect();

    Ok(Explanation {
        document_ref,
        categories: model.categories.clone(),
        class_probs,
        explained_class: model.categories[class].clone(),
        intercept: refit.intercept,
        weighted_r2: refit.weighted_r2,
        features,
        config: ConfigEcho {
            num_samples: config.num_samples,
            kernel_width: config.kernel_width,
            alpha: config.alpha,
            num_features: k,
            seed: config.seed,
        },
        warnings,
    })
}
