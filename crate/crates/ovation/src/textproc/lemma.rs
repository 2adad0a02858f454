//! Exception-table + suffix-rule lemmatizer.
//!
//! The exception table (irregulars like "mice" -> "mouse") is consulted
//! first; otherwise suffix rules fire in order until none applies, so the
//! output is always a fixpoint and lemmatization is idempotent.

use std::collections::HashMap;

/// Lemmatizer over an irregular-form exception table.
#[derive(Debug, Clone, Default)]
pub struct Lemmatizer {
    exceptions: HashMap<String, String>,
}

impl Lemmatizer {
    pub fn new(exceptions: HashMap<String, String>) -> Self {
        Lemmatizer { exceptions }
    }

    /// Lemmatizer backed by the bundled exception table.
    pub fn bundled() -> Self {
        Lemmatizer::new(super::bundled_lemma_exceptions())
    }

    pub fn lemmatize(&self, token: &str) -> String {
        lemmatize(token, &self.exceptions)
    }

    /// Lemmatize each whitespace-separated word of a phrase.
    pub fn lemmatize_phrase(&self, phrase: &str) -> String {
        phrase
            .split_whitespace()
            .map(|w| self.lemmatize(&w.to_lowercase()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Reduce a token to its lemma: exception lookup first, then suffix rules
/// applied to a fixpoint. Exception values are themselves lemmas and are
/// never rule-stripped, which keeps lemmatization idempotent.
pub fn lemmatize(token: &str, exceptions: &HashMap<String, String>) -> String {
    let mut current = token.to_string();
    loop {
        if exceptions.values().any(|v| *v == current) {
            return current;
        }
        if let Some(lemma) = exceptions.get(&current) {
            return lemma.clone();
        }
        match strip_suffix_once(&current) {
            Some(next) => current = next,
            None => return current,
        }
    }
}

/// Apply the first matching suffix rule, or None when the token is already
/// a fixpoint. The "not ss" guard on the plural rule keeps rule outputs
/// stable under re-application.
fn strip_suffix_once(word: &str) -> Option<String> {
    if let Some(stem) = word.strip_suffix("ies") {
        if !stem.is_empty() {
            return Some(format!("{stem}y"));
        }
    }
    if let Some(stem) = word.strip_suffix("sses") {
        return Some(format!("{stem}ss"));
    }
    if word.len() > 3 && word.ends_with('s') && !word.ends_with("ss") {
        return Some(word[..word.len() - 1].to_string());
    }
    if let Some(stem) = word.strip_suffix("ing") {
        if stem.len() >= 2 {
            return Some(undo_doubled_consonant(stem));
        }
    }
    if let Some(stem) = word.strip_suffix("ed") {
        if stem.len() >= 2 {
            return Some(stem.to_string());
        }
    }
    None
}

/// "runn" -> "run"; doubled trailing consonants come from gerund spelling.
fn undo_doubled_consonant(stem: &str) -> String {
    let bytes = stem.as_bytes();
    let n = bytes.len();
    if n >= 2 && bytes[n - 1] == bytes[n - 2] && is_consonant(bytes[n - 1]) {
        stem[..n - 1].to_string()
    } else {
        stem.to_string()
    }
}

fn is_consonant(b: u8) -> bool {
    b.is_ascii_alphabetic() && !matches!(b.to_ascii_lowercase(), b'a' | b'e' | b'i' | b'o' | b'u')
}
