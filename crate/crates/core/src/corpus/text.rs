use std::collections::HashSet;
use std::sync::OnceLock;

use super::stem::stem;
use crate::error::{Error, Result};
use crate::kv::KeyValues;

const STOPWORDS_FILE: &str = include_str!("../../data/stopwords.txt");

/// The bundled English stopword list.
pub fn stopwords() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| {
        STOPWORDS_FILE
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PreprocessConfig {
    pub min_token_len: usize,
    pub min_df: usize,
    pub max_df_frac: f64,
    pub min_tokens: usize,
    pub max_tokens: usize,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        Self {
            min_token_len: 2,
            min_df: 5,
            max_df_frac: 0.5,
            min_tokens: 10,
            max_tokens: 5000,
        }
    }
}

impl PreprocessConfig {
    pub const KEYS: [&'static str; 5] = ["min_token_len", "min_df", "max_df_frac", "min_tokens", "max_tokens"];

    /// Overrides fields present in `kv`; other keys are ignored.
    pub fn apply(&mut self, kv: &KeyValues) -> Result<()> {
        if let Some(v) = kv.parsed("min_token_len")? {
            self.min_token_len = v;
        }
        if let Some(v) = kv.parsed("min_df")? {
            self.min_df = v;
        }
        if let Some(v) = kv.parsed("max_df_frac")? {
            self.max_df_frac = v;
        }
        if let Some(v) = kv.parsed("min_tokens")? {
            self.min_tokens = v;
        }
        if let Some(v) = kv.parsed("max_tokens")? {
            self.max_tokens = v;
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_df < 1 {
            return Err(Error::InvalidConfig("min_df must be >= 1".into()));
        }
        if !(self.max_df_frac > 0.0 && self.max_df_frac <= 1.0) {
            return Err(Error::InvalidConfig("max_df_frac must be in (0, 1]".into()));
        }
        if self.min_tokens > self.max_tokens {
            return Err(Error::InvalidConfig("min_tokens must not exceed max_tokens".into()));
        }
        Ok(())
    }

    pub fn write_to(&self, kv: &mut KeyValues) {
        kv.set("min_token_len", self.min_token_len.to_string());
        kv.set("min_df", self.min_df.to_string());
        kv.set("max_df_frac", format!("{:?}", self.max_df_frac));
        kv.set("min_tokens", self.min_tokens.to_string());
        kv.set("max_tokens", self.max_tokens.to_string());
    }
}

/// lowercase, non-letters to spaces, split, drop stopwords, drop short
/// tokens, stem.
pub fn preprocess(text: &str, config: &PreprocessConfig) -> Vec<String> {
    let lowered = text.to_lowercase();
    let letters: String = lowered
        .chars()
        .map(|c| if c.is_ascii_lowercase() { c } else { ' ' })
        .collect();
    let stop = stopwords();
    letters
        .split_whitespace()
        .filter(|t| !stop.contains(t))
        .filter(|t| t.len() >= config.min_token_len)
        .map(stem)
        .collect()
}
