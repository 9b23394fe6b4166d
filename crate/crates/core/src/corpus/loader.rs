use std::fs;
use std::path::Path;

use super::RawDocument;
use crate::error::{Error, Result};

/// Loads every file of the requested categories from `root/<category>/`.
///
/// Order is the given category order, then filename ascending. Invalid UTF-8
/// is decoded with replacement characters.
pub fn load_corpus(root: &Path, categories: &[String]) -> Result<Vec<RawDocument>> {
    if !root.is_dir() {
        return Err(Error::CorpusNotFound(root.to_path_buf()));
    }
    let mut docs = Vec::new();
    for category in categories {
        let dir = root.join(category);
        if !dir.is_dir() {
            return Err(Error::CorpusNotFound(dir));
        }
        let mut files = Vec::new();
        let entries = fs::read_dir(&dir).map_err(|e| Error::io(format!("listing {}", dir.display()), e))?;
        for entry in entries {
            let entry = entry.map_err(|e| Error::io(format!("listing {}", dir.display()), e))?;
            if entry.path().is_file() {
                files.push(entry.file_name());
            }
        }
        if files.is_empty() {
            return Err(Error::EmptyCategory(dir));
        }
        files.sort();
        for (id, name) in files.iter().enumerate() {
            let path = dir.join(name);
            let bytes = fs::read(&path).map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
            docs.push(RawDocument {
                id,
                category: category.clone(),
                text: String::from_utf8_lossy(&bytes).into_owned(),
            });
        }
    }
    Ok(docs)
}

/// Subdirectory names of `root`, sorted.
pub fn list_categories(root: &Path) -> Result<Vec<String>> {
    if !root.is_dir() {
        return Err(Error::CorpusNotFound(root.to_path_buf()));
    }
    let mut names = Vec::new();
    let entries = fs::read_dir(root).map_err(|e| Error::io(format!("listing {}", root.display()), e))?;
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(format!("listing {}", root.display()), e))?;
        if entry.path().is_dir() {
            names.push(entry.file_name().to_string_lossy().into_owned());
        }
    }
    names.sort();
    Ok(names)
}
