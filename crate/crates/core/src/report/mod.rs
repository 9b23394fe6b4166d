//! Text, JSON and HTML renderings of an [`Explanation`].

mod html;
pub mod palette;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lime::Explanation;

pub use html::to_html;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Html,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "html" => Ok(Self::Html),
            other => Err(Error::InvalidConfig(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderedReport {
    pub format: ReportFormat,
    pub body: String,
}

pub fn render(explanation: &Explanation, original_tokens: &[String], format: ReportFormat) -> Result<RenderedReport> {
    let body = match format {
        ReportFormat::Text => to_text(explanation),
        ReportFormat::Json => to_json(explanation)?,
        ReportFormat::Html => to_html(explanation, original_tokens),
    };
    Ok(RenderedReport { format, body })
}

/// Rounds to 4 decimals, halves away from zero.
pub(crate) fn round4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4
}

pub(crate) fn fixed4(x: f64) -> String {
    let r = round4(x);
    if r < 0.0 {
        format!("-{:.4}", -r)
    } else {
        format!("{:.4}", r.abs())
    }
}

pub(crate) fn signed4(x: f64) -> String {
    let r = round4(x);
    if r < 0.0 {
        format!("-{:.4}", -r)
    } else {
        format!("+{:.4}", r.abs())
    }
}

/// Header (document, class probabilities, fit summary) followed by one
/// `<word>  <signed weight>` line per feature.
pub fn to_text(e: &Explanation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "explanation of {}[{}]", e.document_ref.split, e.document_ref.index);
    let _ = writeln!(out, "explained class: {}", e.explained_class);
    let width = e.categories.iter().map(String::len).max().unwrap_or(0);
    for (name, p) in e.categories.iter().zip(&e.class_probs) {
        let _ = writeln!(out, "  {name:<width$}  {}", fixed4(*p));
    }
    let _ = writeln!(
        out,
        "intercept {}  weighted r2 {}",
        signed4(e.intercept),
        fixed4(e.weighted_r2)
    );
    for w in &e.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    for f in &e.features {
        let _ = writeln!(out, "{}  {}", f.word, signed4(f.weight));
    }
    out
}

/// Compact JSON with keys in struct order and shortest round-trip floats.
pub fn to_json(e: &Explanation) -> Result<String> {
    serde_json::to_string(e).map_err(|err| Error::InvalidConfig(format!("explanation not serializable: {err}")))
}

pub fn from_json(text: &str) -> Result<Explanation> {
    serde_json::from_str(text).map_err(|err| Error::parse("explanation json", err.line(), err.to_string()))
}
