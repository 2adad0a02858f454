//! Edit-distance spelling correction against the corpus vocabulary.
//!
//! Follows the classic candidate-generation scheme: in-vocabulary tokens are
//! kept, otherwise the best vocabulary word within edit distance 1 wins, then
//! distance 2, else the token is returned unchanged.

use std::collections::HashSet;

use super::vocab::Vocabulary;

const ALPHABET: &[u8] = b"abcdefghijklmnopqrstuvwxyz";

/// Correct a token against the vocabulary. "Best" means highest corpus
/// frequency; frequency ties go to the lexicographically smaller word.
pub fn correct_token(token: &str, vocabulary: &Vocabulary) -> String {
    if token.is_empty() || vocabulary.contains(token) {
        return token.to_string();
    }
    let distance_one = edits1(token);
    if let Some(best) = best_known(distance_one.iter(), vocabulary) {
        return best;
    }
    let mut distance_two = HashSet::new();
    for edit in &distance_one {
        for second in edits1(edit) {
            if vocabulary.contains(&second) {
                distance_two.insert(second);
            }
        }
    }
    best_known(distance_two.iter(), vocabulary).unwrap_or_else(|| token.to_string())
}

fn best_known<'a, I>(candidates: I, vocabulary: &Vocabulary) -> Option<String>
where
    I: Iterator<Item = &'a String>,
{
    candidates
        .filter_map(|w| vocabulary.frequency(w).map(|f| (w, f)))
        .min_by(|(wa, fa), (wb, fb)| fb.cmp(fa).then_with(|| wa.cmp(wb)))
        .map(|(w, _)| w.clone())
}

/// All strings one edit (delete, transpose, replace, insert) away.
fn edits1(word: &str) -> HashSet<String> {
    let bytes = word.as_bytes();
    let n = bytes.len();
    let mut edits = HashSet::new();

    for i in 0..=n {
        let (left, right) = (&word[..i], &word[i..]);
        if !right.is_empty() {
            // delete
            edits.insert(format!("{left}{}", &right[1..]));
        }
        if right.len() > 1 {
            // transpose
            edits.insert(format!("{left}{}{}{}", &right[1..2], &right[..1], &right[2..]));
        }
        for &c in ALPHABET {
            let c = c as char;
            if !right.is_empty() {
                // replace
                edits.insert(format!("{left}{c}{}", &right[1..]));
            }
            // insert
            edits.insert(format!("{left}{c}{right}"));
        }
    }
    edits
}
