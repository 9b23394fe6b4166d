use std::collections::HashMap;
use std::fmt::Write as _;

use super::palette::{NEGATIVE_HEX, NEGATIVE_RGB, POSITIVE_HEX, POSITIVE_RGB, PROBABILITY_HEX};
use super::{fixed4, signed4};
use crate::lime::Explanation;

const TOKENS_PER_LINE: usize = 16;

pub(crate) fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}

fn bar_row(out: &mut String, label: &str, width_pct: f64, color: &str, value: &str) {
    let _ = writeln!(
        out,
        "<div class=\"row\"><span class=\"label\">{}</span><span class=\"track\"><span class=\"bar\" style=\"width:{:.2}%;background:{}\"></span></span><span class=\"value\">{}</span></div>",
        escape(label),
        width_pct,
        color,
        value
    );
}

/// Standalone page: class probabilities, weight bars, and the document with
/// each explained word highlighted at opacity `|w| / max|w|`.
pub fn to_html(e: &Explanation, original_tokens: &[String]) -> String {
    let max_abs = e.features.iter().fold(0.0f64, |m, f| m.max(f.weight.abs()));
    let strength = |w: f64| if max_abs > 0.0 { w.abs() / max_abs } else { 0.0 };
    let weights: HashMap<&str, f64> = e.features.iter().map(|f| (f.word.as_str(), f.weight)).collect();
    let title = format!("{}[{}]", e.document_ref.split, e.document_ref.index);

    let mut out = String::new();
    out.push_str("<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n");
    let _ = writeln!(out, "<title>Explanation of {}</title>", escape(&title));
    out.push_str(concat!(
        "<style>\n",
        "body{font-family:sans-serif;margin:2em;max-width:60em;color:#222}\n",
        "h1{font-size:1.3em}h2{font-size:1.1em;margin-top:1.5em}\n",
        ".row{display:flex;align-items:center;margin:2px 0}\n",
        ".label{width:14em;overflow:hidden;text-overflow:ellipsis;white-space:nowrap}\n",
        ".track{width:20em;height:1em;background:#eee;margin:0 .5em}\n",
        ".bar{display:block;height:100%}\n",
        ".value{font-family:monospace}\n",
        ".doc{font-family:monospace;line-height:1.8;white-space:pre-wrap}\n",
        ".hl{padding:0 2px;border-radius:2px}\n",
        "</style>\n</head>\n<body>\n"
    ));
    let _ = writeln!(out, "<h1>Explanation of {}</h1>", escape(&title));
    let _ = writeln!(
        out,
        "<p>Explained class: <strong>{}</strong>. Intercept {}, weighted R² {}.</p>",
        escape(&e.explained_class),
        signed4(e.intercept),
        fixed4(e.weighted_r2)
    );

    out.push_str("<section class=\"probabilities\">\n<h2>Prediction probabilities</h2>\n");
    for (name, p) in e.categories.iter().zip(&e.class_probs) {
        bar_row(&mut out, name, 100.0 * p.clamp(0.0, 1.0), PROBABILITY_HEX, &fixed4(*p));
    }
    out.push_str("</section>\n");

    out.push_str("<section class=\"weights\">\n");
    let _ = writeln!(out, "<h2>Word weights toward {}</h2>", escape(&e.explained_class));
    for f in &e.features {
        let color = if f.weight < 0.0 { NEGATIVE_HEX } else { POSITIVE_HEX };
        bar_row(&mut out, &f.word, 100.0 * strength(f.weight), color, &signed4(f.weight));
    }
    out.push_str("</section>\n");

    out.push_str("<section class=\"document\">\n<h2>Document</h2>\n<p class=\"doc\">");
    for (i, token) in original_tokens.iter().enumerate() {
        if i > 0 {
            out.push(if i % TOKENS_PER_LINE == 0 { '\n' } else { ' ' });
        }
        match weights.get(token.as_str()) {
            Some(&w) => {
                let ((r, g, b), kind) = if w < 0.0 {
                    (NEGATIVE_RGB, "neg")
                } else {
                    (POSITIVE_RGB, "pos")
                };
                let _ = write!(
                    out,
                    "<span class=\"hl {kind}\" style=\"background-color:rgba({r},{g},{b},{:.3})\" title=\"{}\">{}</span>",
                    strength(w),
                    signed4(w),
                    escape(token)
                );
            }
            None => out.push_str(&escape(token)),
        }
    }
    out.push_str("</p>\n</section>\n</body>\n</html>\n");
    out
}
