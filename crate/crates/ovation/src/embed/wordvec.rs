//! Pretrained word-vector files and document-vector averaging.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

/// A parsed word-vector table in the standard text format: one line per
/// word, token followed by space-separated decimal floats.
#[derive(Debug, Clone)]
pub struct WordVectorFile {
    pub dims: usize,
    pub vectors: BTreeMap<String, Vec<f64>>,
}

pub fn load_word_vectors(path: impl AsRef<Path>) -> Result<WordVectorFile> {
    let path = path.as_ref();
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::FileNotFound(path.display().to_string()))
        }
        Err(e) => return Err(Error::io(path.display().to_string(), e)),
    };
    parse_word_vectors(&content)
}

/// Parse the text format; dims are inferred from the first row and every
/// later row must match.
pub fn parse_word_vectors(content: &str) -> Result<WordVectorFile> {
    let mut dims = None;
    let mut vectors = BTreeMap::new();
    let mut row = 0usize;
    for line in content.lines() {
        if line.trim().is_empty() {
            continue;
        }
        row += 1;
        let mut parts = line.split_whitespace();
        let token = parts.next().expect("non-empty line has a token");
        let values: Vec<f64> = parts
            .map(|p| p.parse::<f64>().map_err(|_| Error::RaggedRow(row)))
            .collect::<Result<_>>()?;
        match dims {
            None => {
                if values.is_empty() {
                    return Err(Error::RaggedRow(row));
                }
                dims = Some(values.len());
            }
            Some(d) if d != values.len() => return Err(Error::RaggedRow(row)),
            _ => {}
        }
        vectors.insert(token.to_string(), values);
    }
    match dims {
        Some(dims) => Ok(WordVectorFile { dims, vectors }),
        None => Err(Error::EmptyFile),
    }
}

/// Unweighted mean of the vectors of in-vocabulary tokens.
pub fn average_doc_vector(wordvecs: &WordVectorFile, tokens: &[String]) -> Result<Vec<f64>> {
    let mut sum = vec![0.0; wordvecs.dims];
    let mut count = 0usize;
    for token in tokens {
        if let Some(v) = wordvecs.vectors.get(token) {
            for (s, x) in sum.iter_mut().zip(v) {
                *s += x;
            }
            count += 1;
        }
    }
    if count == 0 {
        return Err(Error::AllTokensOov);
    }
    sum.iter_mut().for_each(|s| *s /= count as f64);
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_rows() {
        let file = parse_word_vectors("hi 0.5 -0.5\nyo 1.0 0.0").unwrap();
        assert_eq!(file.dims, 2);
        assert_eq!(file.vectors.len(), 2);
        assert_eq!(file.vectors["hi"], vec![0.5, -0.5]);
    }

    #[test]
    fn empty_file_is_an_error() {
        assert!(matches!(parse_word_vectors(""), Err(Error::EmptyFile)));
        assert!(matches!(parse_word_vectors("  \n "), Err(Error::EmptyFile)));
    }

    #[test]
    fn ragged_row_reports_its_number() {
        match parse_word_vectors("a 1.0 2.0\nb 1.0 2.0 3.0") {
            Err(Error::RaggedRow(2)) => {}
            other => panic!("expected RaggedRow(2), got {other:?}"),
        }
    }

    #[test]
    fn missing_file_is_file_not_found() {
        assert!(matches!(
            load_word_vectors("/nonexistent/vectors.txt"),
            Err(Error::FileNotFound(_))
        ));
    }

    fn fixture() -> WordVectorFile {
        parse_word_vectors("a 1.0 0.0\nb 0.0 1.0").unwrap()
    }

    #[test]
    fn single_token_average_is_its_vector() {
        let avg = average_doc_vector(&fixture(), &["a".to_string()]).unwrap();
        assert_eq!(avg, vec![1.0, 0.0]);
    }

    #[test]
    fn two_token_average() {
        let tokens = vec!["a".to_string(), "b".to_string()];
        assert_eq!(average_doc_vector(&fixture(), &tokens).unwrap(), vec![0.5, 0.5]);
    }

    #[test]
    fn oov_tokens_are_skipped_and_all_oov_errors() {
        let tokens = vec!["a".to_string(), "zzz".to_string()];
        assert_eq!(average_doc_vector(&fixture(), &tokens).unwrap(), vec![1.0, 0.0]);
        assert!(matches!(
            average_doc_vector(&fixture(), &["zzz".to_string()]),
            Err(Error::AllTokensOov)
        ));
    }
}
