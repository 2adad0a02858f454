//! Splitting run-together words ("haveto" -> "have to") against the
//! corpus vocabulary.

use super::vocab::Vocabulary;

/// Maximum number of parts a token may be split into.
const MAX_PARTS: usize = 3;

/// Segment an out-of-vocabulary token into at most three vocabulary words.
///
/// The best split maximizes the sum of log frequencies. Ties prefer fewer
/// parts, then the leftmost-longest part lengths. In-vocabulary tokens and
/// unsplittable tokens come back as a singleton.
pub fn segment_word(token: &str, vocabulary: &Vocabulary) -> Vec<String> {
    if token.is_empty() || vocabulary.contains(token) {
        return vec![token.to_string()];
    }

    let mut best: Option<(f64, Vec<&str>)> = None;
    let mut consider = |parts: Vec<&str>| {
        let score: f64 = parts
            .iter()
            .map(|p| (vocabulary.frequency(p).unwrap() as f64).ln())
            .sum();
        let replace = match &best {
            None => true,
            Some((best_score, best_parts)) => {
                score > *best_score
                    || (score == *best_score && preferred(&parts, best_parts))
            }
        };
        if replace {
            best = Some((score, parts));
        }
    };

    let n = token.len();
    for i in char_boundaries(token) {
        let (a, rest) = token.split_at(i);
        if !vocabulary.contains(a) {
            continue;
        }
        if vocabulary.contains(rest) {
            consider(vec![a, rest]);
        }
        if MAX_PARTS >= 3 {
            for j in char_boundaries(rest) {
                let (b, c) = rest.split_at(j);
                if i + j < n && vocabulary.contains(b) && vocabulary.contains(c) {
                    consider(vec![a, b, c]);
                }
            }
        }
    }

    match best {
        Some((_, parts)) => parts.into_iter().map(str::to_string).collect(),
        None => vec![token.to_string()],
    }
}

/// Interior split points (1..len, on char boundaries).
fn char_boundaries(s: &str) -> Vec<usize> {
    (1..s.len()).filter(|&i| s.is_char_boundary(i)).collect()
}

/// Tie-break: fewer parts first, then leftmost-longest.
fn preferred(candidate: &[&str], incumbent: &[&str]) -> bool {
    if candidate.len() != incumbent.len() {
        return candidate.len() < incumbent.len();
    }
    for (c, i) in candidate.iter().zip(incumbent) {
        if c.len() != i.len() {
            return c.len() > i.len();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vocab(entries: &[(&str, u64)]) -> Vocabulary {
        Vocabulary::from_counts(entries.iter().map(|(w, f)| (w.to_string(), *f)))
    }

    #[test]
    fn splits_haveto() {
        let v = vocab(&[("have", 50), ("to", 90)]);
        assert_eq!(segment_word("haveto", &v), ["have", "to"]);
    }

    #[test]
    fn splits_whynot() {
        let v = vocab(&[("why", 20), ("not", 60)]);
        assert_eq!(segment_word("whynot", &v), ["why", "not"]);
    }

    #[test]
    fn in_vocabulary_token_stays_whole() {
        let v = vocab(&[("hello", 5), ("hell", 9), ("o", 9)]);
        assert_eq!(segment_word("hello", &v), ["hello"]);
    }

    #[test]
    fn unsplittable_token_stays_whole() {
        let v = vocab(&[("have", 50)]);
        assert_eq!(segment_word("xqzt", &v), ["xqzt"]);
    }

    #[test]
    fn three_way_split() {
        let v = vocab(&[("can", 10), ("not", 10), ("do", 10)]);
        assert_eq!(segment_word("cannotdo", &v), ["can", "not", "do"]);
    }

    #[test]
    fn higher_scoring_split_wins() {
        // "aresting": "a"+"resting" vs "are"+"sting"; frequencies decide.
        let v = vocab(&[("a", 2), ("resting", 2), ("are", 100), ("sting", 100)]);
        assert_eq!(segment_word("aresting", &v), ["are", "sting"]);
    }

    #[test]
    fn tie_prefers_fewer_parts() {
        // Equal log-frequency sums: e^0 = 1 for all, so any split scores 0.
        let v = vocab(&[("ab", 1), ("cd", 1), ("a", 1), ("b", 1)]);
        assert_eq!(segment_word("abcd", &v), ["ab", "cd"]);
    }

    #[test]
    fn tie_prefers_leftmost_longest() {
        let v = vocab(&[("aa", 1), ("a", 1)]);
        // "aaa": splits are ["a","aa"], ["aa","a"], ["a","a","a"]; all score 0.
        assert_eq!(segment_word("aaa", &v), ["aa", "a"]);
    }
}
