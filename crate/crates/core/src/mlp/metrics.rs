use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::grad::Sample;
use super::train::samples;
use super::{argmax, MlpModel};
use crate::corpus::{LabeledDataset, Vocabulary};
use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub accuracy: f64,
    pub macro_precision: f64,
    pub macro_recall: f64,
    pub macro_f1: f64,
    /// `confusion[true][predicted]`
    pub confusion: Vec<Vec<usize>>,
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

impl Metrics {
    pub fn from_predictions(labels: &[usize], predictions: &[usize], num_classes: usize) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyInput("no predictions to score"));
        }
        if labels.len() != predictions.len() {
            return Err(Error::InvalidDimension(format!(
                "{} labels, {} predictions",
                labels.len(),
                predictions.len()
            )));
        }
        let mut confusion = vec![vec![0usize; num_classes]; num_classes];
        for (&t, &p) in labels.iter().zip(predictions) {
            if t >= num_classes || p >= num_classes {
                return Err(Error::InvalidDimension(format!("class index out of range: {t} / {p}")));
            }
            confusion[t][p] += 1;
        }
        let total = labels.len();
        let correct: usize = (0..num_classes).map(|c| confusion[c][c]).sum();
        let (mut p_sum, mut r_sum, mut f_sum) = (0.0, 0.0, 0.0);
        for (c, row) in confusion.iter().enumerate() {
            let tp = row[c];
            let predicted: usize = confusion.iter().map(|r| r[c]).sum();
            let actual: usize = row.iter().sum();
            let p = ratio(tp, predicted);
            let r = ratio(tp, actual);
            let f = if p + r == 0.0 { 0.0 } else { 2.0 * p * r / (p + r) };
            p_sum += p;
            r_sum += r;
            f_sum += f;
        }
        let k = num_classes as f64;
        Ok(Self {
            accuracy: ratio(correct, total),
            macro_precision: p_sum / k,
            macro_recall: r_sum / k,
            macro_f1: f_sum / k,
            confusion,
        })
    }

    pub fn total(&self) -> usize {
        self.confusion.iter().flatten().sum()
    }

    pub fn to_text(&self, categories: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "documents        {}", self.total());
        let _ = writeln!(out, "accuracy         {:.4}", self.accuracy);
        let _ = writeln!(out, "macro precision  {:.4}", self.macro_precision);
        let _ = writeln!(out, "macro recall     {:.4}", self.macro_recall);
        let _ = writeln!(out, "macro f1         {:.4}", self.macro_f1);
        out.push_str("confusion (rows = true, columns = predicted)\n");
        for (name, row) in categories.iter().zip(&self.confusion) {
            let cells: Vec<String> = row.iter().map(|n| format!("{n:>6}")).collect();
            let _ = writeln!(out, "  {name:<28}{}", cells.join(""));
        }
        out
    }
}

pub(crate) fn predictions(model: &MlpModel, samples: &[Sample]) -> Result<Vec<usize>> {
    par::map_ordered(samples, |s| model.forward_sparse(&s.x).map(|p| argmax(&p)))
        .into_iter()
        .collect()
}

pub(crate) fn accuracy_on(model: &MlpModel, samples: &[Sample]) -> Result<f64> {
    let preds = predictions(model, samples)?;
    let labels: Vec<usize> = samples.iter().map(|s| s.label).collect();
    Ok(Metrics::from_predictions(&labels, &preds, model.num_classes)?.accuracy)
}

/// Argmax predictions (ties to the lowest class) scored against labels.
pub fn evaluate(model: &MlpModel, dataset: &LabeledDataset, vocab: &Vocabulary) -> Result<Metrics> {
    if dataset.is_empty() {
        return Err(Error::EmptyInput("evaluation set is empty"));
    }
    let samples = samples(dataset, vocab);
    let preds = predictions(model, &samples)?;
    Metrics::from_predictions(&dataset.labels(), &preds, model.num_classes)
}
