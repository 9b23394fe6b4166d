//! Fixture explanation behind the committed renderer golden files.
#![allow(dead_code)]

use std::path::PathBuf;

use limelight::lime::{ConfigEcho, DocumentRef, Explanation, FeatureWeight};

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden")
}

pub fn golden_explanation() -> Explanation {
    let features = [
        ("christian", 0.1234567),
        ("god", 0.0871),
        ("atheist", -0.06125),
        ("church", 0.04),
        ("evid", -0.0234449),
        ("proof", -0.00005),
    ];
    Explanation {
        document_ref: DocumentRef {
            split: "test".into(),
            index: 20,
        },
        categories: vec!["alt.atheism".into(), "soc.religion.christian".into()],
        class_probs: vec![0.42, 0.58],
        explained_class: "soc.religion.christian".into(),
        intercept: 0.31,
        weighted_r2: 0.875,
        features: features
            .iter()
            .map(|&(word, weight)| FeatureWeight {
                word: word.into(),
                weight,
            })
            .collect(),
        config: ConfigEcho {
            num_samples: 1000,
            kernel_width: 0.25,
            alpha: 1.0,
            num_features: 6,
            seed: 0,
        },
        warnings: vec![],
    }
}

pub fn golden_tokens() -> Vec<String> {
    "god church christian faith <script> proof atheist evid god & church word"
        .split(' ')
        .map(String::from)
        .collect()
}
