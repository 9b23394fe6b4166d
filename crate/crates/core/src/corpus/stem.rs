//! Porter suffix-stripping stemmer (original 1980 rule set).
//!
//! Operates on lowercase ASCII words. Words of one or two letters are returned
//! unchanged.

struct Stemmer {
    b: Vec<u8>,
    /// End of the stem under test (exclusive) after a successful `ends`.
    j: usize,
}

impl Stemmer {
    fn is_cons(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.is_cons(i - 1),
            _ => true,
        }
    }

    /// Number of VC sequences in `b[..end]`.
    fn measure(&self, end: usize) -> usize {
        let mut i = 0;
        while i < end && self.is_cons(i) {
            i += 1;
        }
        let mut m = 0;
        loop {
            while i < end && !self.is_cons(i) {
                i += 1;
            }
            if i >= end {
                return m;
            }
            while i < end && self.is_cons(i) {
                i += 1;
            }
            m += 1;
            if i >= end {
                return m;
            }
        }
    }

    fn vowel_in(&self, end: usize) -> bool {
        (0..end).any(|i| !self.is_cons(i))
    }

    /// `b[i-1] == b[i]` and both consonants.
    fn double_cons(&self, i: usize) -> bool {
        i >= 1 && self.b[i] == self.b[i - 1] && self.is_cons(i)
    }

    /// consonant-vowel-consonant ending at `i`, last letter not w, x or y.
    fn cvc(&self, i: usize) -> bool {
        if i < 2 || !self.is_cons(i) || self.is_cons(i - 1) || !self.is_cons(i - 2) {
            return false;
        }
        !matches!(self.b[i], b'w' | b'x' | b'y')
    }

    fn ends(&mut self, suffix: &str) -> bool {
        let s = suffix.as_bytes();
        if s.len() > self.b.len() || !self.b.ends_with(s) {
            return false;
        }
        self.j = self.b.len() - s.len();
        true
    }

    fn set_to(&mut self, replacement: &str) {
        self.b.truncate(self.j);
        self.b.extend_from_slice(replacement.as_bytes());
    }

    fn replace_if_measure(&mut self, rules: &[(&str, &str)], min_measure: usize) {
        for &(suffix, replacement) in rules {
            if self.ends(suffix) {
                if self.measure(self.j) > min_measure {
                    self.set_to(replacement);
                }
                return;
            }
        }
    }

    fn step1a(&mut self) {
        if self.ends("sses") {
            self.set_to("ss");
        } else if self.ends("ies") {
            self.set_to("i");
        } else if self.ends("ss") {
        } else if self.ends("s") {
            self.set_to("");
        }
    }

    fn step1b(&mut self) {
        if self.ends("eed") {
            if self.measure(self.j) > 0 {
                self.set_to("ee");
            }
            return;
        }
        let stripped = (self.ends("ed") || self.ends("ing")) && self.vowel_in(self.j);
        if !stripped {
            return;
        }
        self.set_to("");
        if self.ends("at") {
            self.set_to("ate");
        } else if self.ends("bl") {
            self.set_to("ble");
        } else if self.ends("iz") {
            self.set_to("ize");
        } else {
            let last = self.b.len() - 1;
            if self.double_cons(last) {
                if !matches!(self.b[last], b'l' | b's' | b'z') {
                    self.b.pop();
                }
            } else if self.measure(self.b.len()) == 1 && self.cvc(last) {
                self.b.push(b'e');
            }
        }
    }

    fn step1c(&mut self) {
        if self.ends("y") && self.vowel_in(self.j) {
            self.set_to("i");
        }
    }

    fn step2(&mut self) {
        const RULES: &[(&str, &str)] = &[
            ("ational", "ate"),
            ("tional", "tion"),
            ("enci", "ence"),
            ("anci", "ance"),
            ("izer", "ize"),
            ("abli", "able"),
            ("alli", "al"),
            ("entli", "ent"),
            ("eli", "e"),
            ("ousli", "ous"),
            ("ization", "ize"),
            ("ation", "ate"),
            ("ator", "ate"),
            ("alism", "al"),
            ("iveness", "ive"),
            ("fulness", "ful"),
            ("ousness", "ous"),
            ("aliti", "al"),
            ("iviti", "ive"),
            ("biliti", "ble"),
        ];
        self.replace_if_measure(RULES, 0);
    }

    fn step3(&mut self) {
        const RULES: &[(&str, &str)] = &[
            ("icate", "ic"),
            ("ative", ""),
            ("alize", "al"),
            ("iciti", "ic"),
            ("ical", "ic"),
            ("ful", ""),
            ("ness", ""),
        ];
        self.replace_if_measure(RULES, 0);
    }

    fn step4(&mut self) {
        const SUFFIXES: &[&str] = &[
            "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment", "ent", "ion", "ou", "ism", "ate",
            "iti", "ous", "ive", "ize",
        ];
        for &suffix in SUFFIXES {
            if self.ends(suffix) {
                if suffix == "ion" && !(self.j > 0 && matches!(self.b[self.j - 1], b's' | b't')) {
                    continue;
                }
                if self.measure(self.j) > 1 {
                    self.set_to("");
                }
                return;
            }
        }
    }

    fn step5(&mut self) {
        if self.ends("e") {
            let m = self.measure(self.j);
            if m > 1 || (m == 1 && !self.cvc(self.j - 1)) {
                self.set_to("");
            }
        }
        let Some(last) = self.b.len().checked_sub(1) else {
            return;
        };
        if self.b[last] == b'l' && self.double_cons(last) && self.measure(self.b.len()) > 1 {
            self.b.pop();
        }
    }
}

/// Stems one lowercase word.
pub fn stem(word: &str) -> String {
    if word.len() <= 2 || !word.is_ascii() {
        return word.to_string();
    }
    let mut s = Stemmer {
        b: word.as_bytes().to_vec(),
        j: 0,
    };
    s.step1a();
    s.step1b();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    String::from_utf8(s.b).expect("ascii in, ascii out")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_examples() {
        for (w, want) in [
            ("caresses", "caress"),
            ("ponies", "poni"),
            ("running", "run"),
            ("runners", "runner"),
            ("ran", "ran"),
            ("hopping", "hop"),
            ("filing", "file"),
            ("relational", "relat"),
            ("generalizations", "gener"),
        ] {
            assert_eq!(stem(w), want, "{w}");
        }
    }

    #[test]
    fn short_words_untouched() {
        assert_eq!(stem("is"), "is");
        assert_eq!(stem("a"), "a");
    }
}
