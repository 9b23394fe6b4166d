//! Flat `key = value` config files.
//!
//! Blank lines and lines starting with `#` are skipped. Keys are trimmed and
//! must be unique; values are trimmed and may be empty.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KeyValues {
    entries: BTreeMap<String, String>,
}

impl KeyValues {
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::parse(origin, n + 1, "expected `key = value`"));
            };
            let key = key.trim();
            if key.is_empty() {
                return Err(Error::parse(origin, n + 1, "empty key"));
            }
            if entries.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(Error::parse(origin, n + 1, format!("duplicate key `{key}`")));
            }
        }
        Ok(Self { entries })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.insert(key.into(), value.into());
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Parses `key` with `FromStr`, `Ok(None)` when absent.
    pub fn parsed<T>(&self, key: &str) -> Result<Option<T>>
    where
        T: std::str::FromStr,
        T::Err: std::fmt::Display,
    {
        match self.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|e| Error::InvalidConfig(format!("{key} = {v}: {e}"))),
        }
    }

    /// Comma-separated list; `Ok(None)` when absent.
    pub fn list<T>(&self, key: &str) -> Result<Option<Vec<T>>>
    where
        T: std::str::FromStr,
        T::Err: std::fmt::Display,
    {
        let Some(v) = self.get(key) else {
            return Ok(None);
        };
        v.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|e| Error::InvalidConfig(format!("{key}: `{s}`: {e}")))
            })
            .collect::<Result<Vec<T>>>()
            .map(Some)
    }

    /// Renders in key order, one `key = value` per line.
    pub fn render(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
    }
}
