//! Corpus loading, cleaning, tokenization, vocabulary and bag-of-words features.

mod clean;
mod loader;
mod split;
pub mod stem;
mod text;
mod vectorize;
mod vocab;

use serde::{Deserialize, Serialize};

pub use clean::strip_metadata;
pub use loader::{list_categories, load_corpus};
pub use split::split_dataset;
pub use text::{preprocess, stopwords, PreprocessConfig};
pub use vectorize::{vectorize, vectorize_sparse, FeatureMode, FeatureVector, SparseVector};
pub use vocab::{build_vocabulary, Vocabulary};

use crate::error::{Error, Result};
use crate::par;

/// One file of the on-disk corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawDocument {
    /// Position within its category, in filename order.
    pub id: usize,
    pub category: String,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SourceId {
    pub category: String,
    pub id: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanDocument {
    pub tokens: Vec<String>,
    pub source: SourceId,
    pub label: usize,
}

impl AsRef<[String]> for CleanDocument {
    fn as_ref(&self) -> &[String] {
        &self.tokens
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitTag {
    Train,
    Test,
    All,
}

impl SplitTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitTag::Train => "train",
            SplitTag::Test => "test",
            SplitTag::All => "all",
        }
    }
}

impl std::fmt::Display for SplitTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SplitTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "train" => Ok(SplitTag::Train),
            "test" => Ok(SplitTag::Test),
            "all" => Ok(SplitTag::All),
            other => Err(Error::InvalidConfig(format!(
                "unknown split `{other}` (expected train, test or all)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledDataset {
    pub documents: Vec<CleanDocument>,
    pub categories: Vec<String>,
    pub split: SplitTag,
}

impl LabeledDataset {
    pub fn new(documents: Vec<CleanDocument>, categories: Vec<String>, split: SplitTag) -> Result<Self> {
        if categories.is_empty() {
            return Err(Error::InvalidConfig("no categories".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = categories.iter().find(|c| !seen.insert(c.as_str())) {
            return Err(Error::InvalidConfig(format!("duplicate category `{dup}`")));
        }
        if let Some(doc) = documents.iter().find(|d| d.label >= categories.len()) {
            return Err(Error::InvalidConfig(format!(
                "label {} out of range for {} categories",
                doc.label,
                categories.len()
            )));
        }
        Ok(Self {
            documents,
            categories,
            split,
        })
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.documents.iter().map(|d| d.label).collect()
    }
}

/// Retains documents with `min_tokens <= len <= max_tokens`, in order.
pub fn filter_by_length(docs: Vec<CleanDocument>, min_tokens: usize, max_tokens: usize) -> Vec<CleanDocument> {
    docs.into_iter()
        .filter(|d| (min_tokens..=max_tokens).contains(&d.tokens.len()))
        .collect()
}

/// Strips metadata, preprocesses and length-filters raw documents.
///
/// Labels are the index of each document's category in `categories`.
pub fn prepare_dataset(
    raw: &[RawDocument],
    categories: &[String],
    config: &PreprocessConfig,
) -> Result<LabeledDataset> {
    let labels = raw
        .iter()
        .map(|d| {
            categories
                .iter()
                .position(|c| *c == d.category)
                .ok_or_else(|| Error::InvalidConfig(format!("document category `{}` not configured", d.category)))
        })
        .collect::<Result<Vec<_>>>()?;
    let tokens = par::map_ordered(raw, |d| preprocess(&strip_metadata(&d.text), config));
    let docs = raw
        .iter()
        .zip(labels)
        .zip(tokens)
        .map(|((d, label), tokens)| CleanDocument {
            tokens,
            source: SourceId {
                category: d.category.clone(),
                id: d.id,
            },
            label,
        })
        .collect();
    let docs = filter_by_length(docs, config.min_tokens, config.max_tokens);
    LabeledDataset::new(docs, categories.to_vec(), SplitTag::All)
}
