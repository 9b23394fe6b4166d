use std::fmt::Write as _;
use std::path::Path;

use super::TrainConfig;
use crate::corpus::{FeatureVector, SparseVector};
use crate::error::{Error, Result};
use crate::kv::KeyValues;
use crate::rng::SplitMix64;

const FORMAT: &str = "limelight-mlp/1";

/// `softmax(W2 · relu(W1 · x + b1) + b2)`. Matrices are row-major with one
/// row per output unit.
#[derive(Clone, Debug, PartialEq)]
pub struct MlpModel {
    pub input_dim: usize,
    pub hidden_dim: usize,
    pub num_classes: usize,
    /// `hidden_dim × input_dim`
    pub w1: Vec<f64>,
    pub b1: Vec<f64>,
    /// `num_classes × hidden_dim`
    pub w2: Vec<f64>,
    pub b2: Vec<f64>,
    pub categories: Vec<String>,
    /// Hyperparameters the model was trained with, if any.
    pub trained_with: Option<TrainConfig>,
}

/// Glorot-uniform weights, zero biases. Draw order is W1 then W2, row-major.
pub fn init_model(input_dim: usize, hidden_dim: usize, num_classes: usize, seed: u64) -> Result<MlpModel> {
    MlpModel::init(input_dim, hidden_dim, num_classes, &mut SplitMix64::new(seed))
}

pub fn softmax(logits: &[f64]) -> Vec<f64> {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|&l| (l - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

pub(crate) struct Trace {
    /// Hidden pre-activations.
    pub z1: Vec<f64>,
    pub hidden: Vec<f64>,
    pub logits: Vec<f64>,
}

impl MlpModel {
    pub(crate) fn init(input_dim: usize, hidden_dim: usize, num_classes: usize, rng: &mut SplitMix64) -> Result<Self> {
        if input_dim == 0 || hidden_dim == 0 {
            return Err(Error::InvalidDimension(format!(
                "input_dim = {input_dim}, hidden_dim = {hidden_dim}"
            )));
        }
        if num_classes < 2 {
            return Err(Error::InvalidDimension(format!(
                "num_classes = {num_classes}, need at least 2"
            )));
        }
        let s1 = (6.0 / (input_dim + hidden_dim) as f64).sqrt();
        let s2 = (6.0 / (hidden_dim + num_classes) as f64).sqrt();
        let w1 = (0..hidden_dim * input_dim).map(|_| rng.uniform(-s1, s1)).collect();
        let w2 = (0..num_classes * hidden_dim).map(|_| rng.uniform(-s2, s2)).collect();
        Ok(Self {
            input_dim,
            hidden_dim,
            num_classes,
            w1,
            b1: vec![0.0; hidden_dim],
            w2,
            b2: vec![0.0; num_classes],
            categories: (0..num_classes).map(|c| format!("class{c}")).collect(),
            trained_with: None,
        })
    }

    /// Assembles a model from explicit parameters, checking every invariant.
    pub fn from_parts(
        input_dim: usize,
        hidden_dim: usize,
        w1: Vec<f64>,
        b1: Vec<f64>,
        w2: Vec<f64>,
        b2: Vec<f64>,
        categories: Vec<String>,
    ) -> Result<Self> {
        let model = Self {
            input_dim,
            hidden_dim,
            num_classes: categories.len(),
            w1,
            b1,
            w2,
            b2,
            categories,
            trained_with: None,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        let (i, h, c) = (self.input_dim, self.hidden_dim, self.num_classes);
        if i == 0 || h == 0 || c < 2 || self.categories.len() != c {
            return Err(Error::InvalidDimension(format!(
                "input {i}, hidden {h}, classes {c}, {} category names",
                self.categories.len()
            )));
        }
        let shapes = [
            ("w1", self.w1.len(), h * i),
            ("b1", self.b1.len(), h),
            ("w2", self.w2.len(), c * h),
            ("b2", self.b2.len(), c),
        ];
        for (name, got, want) in shapes {
            if got != want {
                return Err(Error::InvalidDimension(format!(
                    "{name} has {got} entries, expected {want}"
                )));
            }
        }
        if !self.parameters().all(f64::is_finite) {
            return Err(Error::InvalidDimension("non-finite parameter".into()));
        }
        Ok(())
    }

    /// All parameters in file order: W1, b1, W2, b2.
    pub fn parameters(&self) -> impl Iterator<Item = f64> + '_ {
        self.w1.iter().chain(&self.b1).chain(&self.w2).chain(&self.b2).copied()
    }

    pub(crate) fn trace(&self, x: &SparseVector) -> Trace {
        let mut z1 = self.b1.clone();
        for (j, z) in z1.iter_mut().enumerate() {
            let row = &self.w1[j * self.input_dim..(j + 1) * self.input_dim];
            for &(i, v) in &x.entries {
                *z += row[i] * v;
            }
        }
        let hidden: Vec<f64> = z1.iter().map(|&z| z.max(0.0)).collect();
        let logits = (0..self.num_classes)
            .map(|c| {
                let row = &self.w2[c * self.hidden_dim..(c + 1) * self.hidden_dim];
                self.b2[c] + row.iter().zip(&hidden).map(|(w, h)| w * h).sum::<f64>()
            })
            .collect();
        Trace { z1, hidden, logits }
    }

    pub fn forward_sparse(&self, x: &SparseVector) -> Result<Vec<f64>> {
        if x.dim != self.input_dim || x.entries.iter().any(|&(i, _)| i >= self.input_dim) {
            return Err(Error::InvalidDimension(format!(
                "input has dimension {}, model expects {}",
                x.dim, self.input_dim
            )));
        }
        Ok(softmax(&self.trace(x).logits))
    }

    /// Class probabilities for one feature vector.
    pub fn forward(&self, x: &FeatureVector) -> Result<Vec<f64>> {
        self.forward_sparse(&SparseVector::from_dense(&x.values))
    }

    /// Self-describing text form: `key = value` header, a `---` line, then
    /// every parameter on its own line in shortest round-trip notation.
    pub fn to_text(&self) -> Result<String> {
        if let Some(bad) = self
            .categories
            .iter()
            .find(|c| c.is_empty() || c.contains([',', '\n', '\r']))
        {
            return Err(Error::InvalidConfig(format!("category name `{bad}` cannot be stored")));
        }
        let mut kv = KeyValues::default();
        kv.set("format", FORMAT);
        kv.set("input_dim", self.input_dim.to_string());
        kv.set("hidden_dim", self.hidden_dim.to_string());
        kv.set("num_classes", self.num_classes.to_string());
        kv.set("categories", self.categories.join(","));
        kv.set("layout", "w1 b1 w2 b2, row-major");
        if let Some(cfg) = &self.trained_with {
            cfg.write_to(&mut kv, "train.");
        }
        let mut out = kv.render();
        out.push_str("---\n");
        for p in self.parameters() {
            let _ = writeln!(out, "{p:?}");
        }
        Ok(out)
    }

    pub fn from_text(text: &str, origin: &str) -> Result<Self> {
        let (header, body) = text
            .split_once("---\n")
            .ok_or_else(|| Error::parse(origin, 0, "missing `---` separator"))?;
        let kv = KeyValues::parse(header, origin)?;
        if kv.get("format") != Some(FORMAT) {
            return Err(Error::parse(origin, 1, format!("expected format = {FORMAT}")));
        }
        let dim = |key: &str| -> Result<usize> {
            kv.parsed(key)?
                .ok_or_else(|| Error::parse(origin, 0, format!("missing `{key}`")))
        };
        let (i, h, c) = (dim("input_dim")?, dim("hidden_dim")?, dim("num_classes")?);
        let categories: Vec<String> = kv.list("categories")?.unwrap_or_default();
        let header_lines = header.lines().count() + 1;
        let values = body
            .lines()
            .enumerate()
            .map(|(n, l)| {
                l.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::parse(origin, header_lines + n + 1, e.to_string()))
            })
            .collect::<Result<Vec<f64>>>()?;
        let sizes = [h * i, h, c * h, c];
        if values.len() != sizes.iter().sum::<usize>() {
            return Err(Error::parse(
                origin,
                0,
                format!(
                    "expected {} parameters, found {}",
                    sizes.iter().sum::<usize>(),
                    values.len()
                ),
            ));
        }
        let mut rest = values.as_slice();
        let mut take = |n: usize| {
            let (head, tail) = rest.split_at(n);
            rest = tail;
            head.to_vec()
        };
        let mut model = Self::from_parts(
            i,
            h,
            take(sizes[0]),
            take(sizes[1]),
            take(sizes[2]),
            take(sizes[3]),
            categories,
        )?;
        if model.num_classes != c {
            return Err(Error::parse(origin, 0, "num_classes disagrees with categories"));
        }
        model.trained_with = TrainConfig::read_from(&kv, "train.")?;
        Ok(model)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()?).map_err(|e| Error::io(format!("writing {}", path.display()), e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
        Self::from_text(&text, &path.display().to_string())
    }
}
