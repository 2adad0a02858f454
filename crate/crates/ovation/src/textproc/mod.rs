//! Text normalization pipeline.
//!
//! Every document yields two token streams: `norm_tokens`, aggressively
//! normalized for embedding training (lowercase, punctuation and stopwords
//! gone, digits spelled out, lemmatized), and `kp_tokens`, lightly cleaned
//! with original word order and positions preserved for keyphrase candidate
//! extraction.

mod lemma;
mod numbers;
mod segment;
mod spell;
mod vocab;

pub use lemma::{lemmatize, Lemmatizer};
pub use numbers::number_to_words;
pub use segment::segment_word;
pub use spell::correct_token;
pub use vocab::{Vocabulary, DEFAULT_MIN_FREQUENCY};

use std::collections::{HashMap, HashSet};
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::corpus::Article;
use crate::error::{Error, Result};

const STOPWORDS_TXT: &str = include_str!("../../data/stopwords.txt");
const CONTRACTIONS_TSV: &str = include_str!("../../data/contractions.tsv");
const LEMMA_EXCEPTIONS_TSV: &str = include_str!("../../data/lemma_exceptions.tsv");

static BUNDLED_STOPWORDS: LazyLock<HashSet<String>> =
    LazyLock::new(|| parse_word_list(STOPWORDS_TXT));
static BUNDLED_CONTRACTIONS: LazyLock<HashMap<String, String>> =
    LazyLock::new(|| parse_table(CONTRACTIONS_TSV));
static BUNDLED_LEMMA_EXCEPTIONS: LazyLock<HashMap<String, String>> =
    LazyLock::new(|| parse_table(LEMMA_EXCEPTIONS_TSV));

/// One word per line; blank lines and `#` comments ignored.
pub fn parse_word_list(content: &str) -> HashSet<String> {
    content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

/// Tab-separated `key<TAB>value` pairs, one per line.
pub fn parse_table(content: &str) -> HashMap<String, String> {
    content
        .lines()
        .filter_map(|l| l.split_once('\t'))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

pub fn bundled_stopwords() -> HashSet<String> {
    BUNDLED_STOPWORDS.clone()
}

pub fn bundled_contractions() -> HashMap<String, String> {
    BUNDLED_CONTRACTIONS.clone()
}

pub fn bundled_lemma_exceptions() -> HashMap<String, String> {
    BUNDLED_LEMMA_EXCEPTIONS.clone()
}

/// A token of the keyphrase stream: surface form plus token offset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpToken {
    pub surface: String,
    pub position: usize,
}

/// The two token views of one document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TokenizedDoc {
    pub id: String,
    /// Fully normalized tokens for embedding training.
    pub norm_tokens: Vec<String>,
    /// Lightly cleaned tokens with positions, stopwords retained.
    pub kp_tokens: Vec<KpToken>,
}

/// Pipeline switches and resources.
#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub spell_correction: bool,
    pub word_segmentation: bool,
    /// Applies to numeric feature vectors, not text; carried here so one
    /// config describes the whole ablation surface.
    pub scaling: bool,
    pub stopword_list: HashSet<String>,
    pub abbreviation_table: HashMap<String, String>,
    pub lemma_exceptions: HashMap<String, String>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            spell_correction: true,
            word_segmentation: true,
            scaling: false,
            stopword_list: bundled_stopwords(),
            abbreviation_table: bundled_contractions(),
            lemma_exceptions: bundled_lemma_exceptions(),
        }
    }
}

impl PipelineConfig {
    /// The stopword list must cover at least the common copulas, or the
    /// normalized stream degenerates.
    pub fn validate(&self) -> Result<()> {
        for required in ["the", "are", "is"] {
            if !self.stopword_list.contains(required) {
                return Err(Error::ConfigInvalid {
                    field: "stopword_list".to_string(),
                    message: format!("must contain \"{required}\""),
                });
            }
        }
        Ok(())
    }
}

/// Normalize raw text: drop non-ASCII, lowercase, expand contractions,
/// replace punctuation with spaces, collapse whitespace runs, trim.
pub fn clean_text(raw: &str, abbreviations: &HashMap<String, String>) -> String {
    let ascii_lower: String = raw
        .chars()
        .filter(char::is_ascii)
        .map(|c| c.to_ascii_lowercase())
        .collect();

    // Expand contractions before punctuation removal so the apostrophe is
    // still there for the table to match on.
    let mut expanded = String::with_capacity(ascii_lower.len());
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        if !word.is_empty() {
            match abbreviations.get(word.as_str()) {
                Some(expansion) => out.push_str(expansion),
                None => out.push_str(word),
            }
            word.clear();
        }
    };
    for c in ascii_lower.chars() {
        if c.is_ascii_alphanumeric() || c == '\'' {
            word.push(c);
        } else {
            flush(&mut word, &mut expanded);
            expanded.push(c);
        }
    }
    flush(&mut word, &mut expanded);

    let punct_removed: String = expanded
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c.is_whitespace() {
                c
            } else {
                ' '
            }
        })
        .collect();

    punct_removed.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Split on whitespace; no empty tokens.
pub fn tokenize(cleaned: &str) -> Vec<String> {
    cleaned.split_whitespace().map(str::to_string).collect()
}

/// Order-preserving stopword filter.
pub fn remove_stopwords(tokens: Vec<String>, stopwords: &HashSet<String>) -> Vec<String> {
    tokens.into_iter().filter(|t| !stopwords.contains(t)).collect()
}

/// Build the corpus vocabulary over cleaned, tokenized article text.
pub fn build_vocabulary(articles: &[Article], config: &PipelineConfig) -> Vocabulary {
    let tokens = articles.iter().flat_map(|a| {
        let text = format!("{} {}", a.title, a.txt);
        tokenize(&clean_text(&text, &config.abbreviation_table))
    });
    Vocabulary::from_tokens(tokens, DEFAULT_MIN_FREQUENCY)
}

/// Run the full pipeline over one article, producing both token streams.
pub fn preprocess_article(
    article: &Article,
    config: &PipelineConfig,
    vocabulary: &Vocabulary,
) -> Result<TokenizedDoc> {
    let text = format!("{} {}", article.title, article.txt);
    let cleaned = clean_text(&text, &config.abbreviation_table);
    let base_tokens = tokenize(&cleaned);

    let kp_tokens = base_tokens
        .iter()
        .enumerate()
        .map(|(position, surface)| KpToken {
            surface: surface.clone(),
            position,
        })
        .collect();

    let lemmatizer = Lemmatizer::new(config.lemma_exceptions.clone());
    let mut tokens = base_tokens;
    if config.word_segmentation {
        tokens = tokens
            .iter()
            .flat_map(|t| segment_word(t, vocabulary))
            .collect();
    }
    tokens = tokens.iter().flat_map(|t| number_to_words(t)).collect();
    if config.spell_correction {
        tokens = tokens.iter().map(|t| correct_token(t, vocabulary)).collect();
    }
    tokens = tokens.iter().map(|t| lemmatizer.lemmatize(t)).collect();
    tokens = remove_stopwords(tokens, &config.stopword_list);
    // Numeric tokens beyond the spell-out range survive number conversion;
    // the normalized stream admits lowercase letters only.
    tokens.retain(|t| !t.is_empty() && t.bytes().all(|b| b.is_ascii_lowercase()));

    if tokens.is_empty() {
        return Err(Error::EmptyAfterProcessing(article.id.clone()));
    }

    Ok(TokenizedDoc {
        id: article.id.clone(),
        norm_tokens: tokens,
        kp_tokens,
    })
}
