//! Corpus vocabulary with token frequencies.

use std::collections::HashMap;

/// Tokens below this corpus frequency are excluded from the vocabulary.
pub const DEFAULT_MIN_FREQUENCY: u64 = 2;

/// A frequency map over corpus tokens, pruned at construction time.
///
/// The vocabulary drives spelling correction (candidate lookup) and word
/// segmentation (split scoring).
#[derive(Debug, Clone, Default)]
pub struct Vocabulary {
    counts: HashMap<String, u64>,
}

impl Vocabulary {
    /// Count tokens and keep those with frequency >= `min_frequency`.
    pub fn from_tokens<I, S>(tokens: I, min_frequency: u64) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut counts: HashMap<String, u64> = HashMap::new();
        for token in tokens {
            *counts.entry(token.as_ref().to_string()).or_insert(0) += 1;
        }
        counts.retain(|_, c| *c >= min_frequency);
        Vocabulary { counts }
    }

    /// Build directly from known counts (fixtures, tests).
    pub fn from_counts<I, S>(counts: I) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        Vocabulary {
            counts: counts.into_iter().map(|(w, c)| (w.into(), c)).collect(),
        }
    }

    pub fn contains(&self, token: &str) -> bool {
        self.counts.contains_key(token)
    }

    pub fn frequency(&self, token: &str) -> Option<u64> {
        self.counts.get(token).copied()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}
