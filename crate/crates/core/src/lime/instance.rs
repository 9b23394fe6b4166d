use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    /// Unique tokens in first-occurrence order; one interpretable feature each.
    pub distinct_words: Vec<String>,
    pub tokens: Vec<String>,
    pub label_of_interest: usize,
}

impl Instance {
    pub fn num_features(&self) -> usize {
        self.distinct_words.len()
    }
}

pub fn make_instance(tokens: &[String], class_index: usize) -> Result<Instance> {
    if tokens.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let mut seen = HashSet::new();
    let distinct_words = tokens.iter().filter(|t| seen.insert(t.as_str())).cloned().collect();
    Ok(Instance {
        distinct_words,
        tokens: tokens.to_vec(),
        label_of_interest: class_index,
    })
}
