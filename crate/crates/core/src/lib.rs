//! Bag-of-words text classification with local surrogate explanations.
//!
//! The pipeline has four stages, each in its own module:
//!
//! - [`corpus`]: load newsgroup-style documents, strip headers/quotes/signatures,
//!   tokenize and stem, build the vocabulary, split, vectorize.
//! - [`mlp`]: one-hidden-layer softmax classifier trained with mini-batch SGD,
//!   grid search and evaluation metrics.
//! - [`lime`]: per-document word attributions. Distinct words are masked out at
//!   random, each perturbation is scored by the classifier and weighted by an
//!   exponential kernel over cosine distance, and a weighted ridge model is fit
//!   to the scores.
//! - [`report`]: plain text, canonical JSON and self-contained HTML renderers.
//!
//! All randomness flows through [`rng::SplitMix64`], so every stage is
//! reproducible from its seed. With the default `parallel` feature, per-item
//! loops run on rayon; results are always assembled in input order, so the
//! sequential build produces byte-identical output.

pub mod corpus;
pub mod error;
pub mod kv;
pub mod lime;
pub mod mlp;
pub mod par;
pub mod report;
pub mod rng;

pub use error::{Error, Result};
