use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Retained words in ascending order with their document frequencies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vocabulary {
    words: Vec<String>,
    doc_freq: Vec<usize>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    /// Builds from `(word, df)` pairs, which must be strictly ascending by word.
    pub fn from_entries(entries: Vec<(String, usize)>) -> Result<Self> {
        if let Some(w) = entries.windows(2).find(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidConfig(format!(
                "vocabulary not strictly ascending at `{}`",
                w[1].0
            )));
        }
        let (words, doc_freq): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(Self { words, doc_freq, index })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn doc_freq(&self) -> &[usize] {
        &self.doc_freq
    }

    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Words by descending document frequency, ties in vocabulary order.
    pub fn top_by_doc_freq(&self, n: usize) -> Vec<(&str, usize)> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.doc_freq[b].cmp(&self.doc_freq[a]).then(a.cmp(&b)));
        order
            .into_iter()
            .take(n)
            .map(|i| (self.words[i].as_str(), self.doc_freq[i]))
            .collect()
    }

    /// `<word>\t<doc_freq>\n` per entry.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (w, df) in self.words.iter().zip(&self.doc_freq) {
            let _ = writeln!(out, "{w}\t{df}");
        }
        out
    }

    pub fn from_tsv(text: &str, origin: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let (w, df) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(origin, n + 1, "expected `<word>\\t<doc_freq>`"))?;
            let df = df
                .parse()
                .map_err(|e| Error::parse(origin, n + 1, format!("bad doc_freq: {e}")))?;
            entries.push((w.to_string(), df));
        }
        Self::from_entries(entries).map_err(|e| Error::parse(origin, 0, e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_tsv()).map_err(|e| Error::io(format!("writing {}", path.display()), e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
        Self::from_tsv(&text, &path.display().to_string())
    }
}

/// Keeps words with `min_df <= df <= max_df_frac * |docs|`.
pub fn build_vocabulary<D: AsRef<[String]>>(docs: &[D], min_df: usize, max_df_frac: f64) -> Result<Vocabulary> {
    if docs.is_empty() {
        return Err(Error::EmptyInput("no documents to build a vocabulary from"));
    }
    if min_df < 1 || !(max_df_frac > 0.0 && max_df_frac <= 1.0) {
        return Err(Error::InvalidConfig(format!(
            "min_df = {min_df}, max_df_frac = {max_df_frac}"
        )));
    }
    let mut df: BTreeMap<&str, usize> = BTreeMap::new();
    for doc in docs {
        let distinct: HashSet<&str> = doc.as_ref().iter().map(String::as_str).collect();
        for w in distinct {
            *df.entry(w).or_default() += 1;
        }
    }
    let max_df = max_df_frac * docs.len() as f64;
    let entries = df
        .into_iter()
        .filter(|&(_, n)| n >= min_df && n as f64 <= max_df)
        .map(|(w, n)| (w.to_string(), n))
        .collect();
    Vocabulary::from_entries(entries)
}
