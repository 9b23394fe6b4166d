//! Removal of newsgroup metadata: header block, quoted replies, signature.

fn content(line: &str) -> &str {
    line.trim_end_matches(['\n', '\r'])
}

fn is_header_field(line: &str) -> bool {
    let Some((name, _)) = content(line).split_once(':') else {
        return false;
    };
    !name.is_empty()
        && name
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_')
}

fn is_continuation(line: &str) -> bool {
    line.starts_with([' ', '\t']) && !line.trim().is_empty()
}

fn is_quote(line: &str) -> bool {
    line.starts_with('>') || line.trim().ends_with("writes:")
}

/// Length in lines of a leading `Name: value` block terminated by a blank
/// line, including the blank line itself.
fn header_len(lines: &[&str]) -> Option<usize> {
    let blank = lines.iter().position(|l| l.trim().is_empty())?;
    if blank == 0 || !is_header_field(lines[0]) {
        return None;
    }
    lines[1..blank]
        .iter()
        .all(|l| is_header_field(l) || is_continuation(l))
        .then_some(blank + 1)
}

/// Removes the signature (a `--` line and everything after it), quoted lines
/// (starting with `>` or ending in `writes:`), and any leading header blocks.
///
/// Idempotent; text without metadata comes back unchanged.
pub fn strip_metadata(raw_text: &str) -> String {
    let mut lines: Vec<&str> = raw_text.split_inclusive('\n').collect();
    if let Some(sig) = lines.iter().position(|l| content(l).trim_end() == "--") {
        lines.truncate(sig);
    }
    lines.retain(|l| !is_quote(l));
    let mut start = 0;
    while let Some(n) = header_len(&lines[start..]) {
        start += n;
    }
    lines[start..].concat()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_block() {
        assert_eq!(strip_metadata("From: a@b\nSubject: x\n\nbody"), "body");
    }

    #[test]
    fn signature() {
        assert_eq!(strip_metadata("body\n--\nsig line"), "body\n");
        assert_eq!(strip_metadata("body\n-- \nsig"), "body\n");
    }

    #[test]
    fn quoted_reply() {
        assert_eq!(strip_metadata("alice writes:\n> quoted\nreply"), "reply");
    }

    #[test]
    fn plain_text_unchanged() {
        let t = "Just a note: nothing to strip.\n\nSecond paragraph.\n";
        assert_eq!(strip_metadata(t), t);
        assert_eq!(strip_metadata(""), "");
    }

    #[test]
    fn header_needs_blank_line() {
        assert_eq!(strip_metadata("Subject: x"), "Subject: x");
    }

    #[test]
    fn folded_header_and_repeated_blocks() {
        let t = "From: a\nReferences: <1>\n  <2>\n\nX-Extra: y\n\nbody\n";
        assert_eq!(strip_metadata(t), "body\n");
    }

    #[test]
    fn header_exposed_by_quote_removal_is_stripped_once() {
        let t = "> q\nName: v\n\nbody";
        let once = strip_metadata(t);
        assert_eq!(once, "body");
        assert_eq!(strip_metadata(&once), once);
    }
}
