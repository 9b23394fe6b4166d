//! Local surrogate explanations over an instance's distinct words.
//!
//! An instance's interpretable representation is a binary vector over its
//! distinct words (1 = kept, 0 = every occurrence deleted). Random masks are
//! scored by the classifier, weighted by `exp(-dist² / width²)` where `dist`
//! is the cosine distance of the mask to the all-ones vector, and a weighted
//! ridge model is fit to the explained class's probability. The K largest
//! coefficients are kept and refit on their own columns.

mod explain;
mod instance;
mod kernel;
mod linalg;
mod perturb;
mod surrogate;

pub use explain::{
    explain, heuristic_num_features, ConfigEcho, DocumentRef, ExplainConfig, Explanation, FeatureWeight,
};
pub use instance::{make_instance, Instance};
pub use kernel::{cosine_distance_to_origin_mask, kernel_weight};
pub use linalg::solve;
pub use perturb::{
    predict_perturbations, predict_perturbations_sequential, reconstruct_text, sample_masks, PerturbationBatch,
};
pub use surrogate::{fit_weighted_ridge, select_features, SurrogateFit};
