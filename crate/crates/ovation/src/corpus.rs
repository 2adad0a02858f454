//! Corpus loading, filtering, and splitting.
//!
//! A corpus is a JSON array or JSONL file of article records. Loading keeps
//! every well-formed record; cleanup rules (zero-clap removal, dedup) live in
//! [`filter_corpus`] so the raw corpus stays inspectable.

use std::collections::HashSet;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// One article record.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Article {
    pub id: String,
    pub author: String,
    pub publish_date: String,
    /// Reading time in minutes. Accepted as integer or string digits on load.
    pub reading_time: u64,
    pub tags: Vec<String>,
    pub title: String,
    pub txt: String,
    /// Clap count; the regression target.
    pub applause: u64,
}

/// A deterministic train/test partition of a corpus.
#[derive(Debug, Clone)]
pub struct CorpusSplit {
    pub train: Vec<Article>,
    pub test: Vec<Article>,
    pub seed: u64,
    pub ratio: f64,
}

/// Load articles from a JSON array or JSONL file. Format is auto-detected
/// from the first non-whitespace byte.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Article>> {
    let path = path.as_ref();
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::FileNotFound(path.display().to_string()))
        }
        Err(e) => return Err(Error::io(path.display().to_string(), e)),
    };
    parse_corpus(&content)
}

/// Parse a corpus from an in-memory string (JSON array or JSONL).
pub fn parse_corpus(content: &str) -> Result<Vec<Article>> {
    let first = content.chars().find(|c| !c.is_whitespace());
    match first {
        Some('[') => parse_array(content),
        Some(_) => parse_jsonl(content),
        None => Ok(Vec::new()),
    }
}

fn parse_array(content: &str) -> Result<Vec<Article>> {
    let values: Vec<Value> = serde_json::from_str(content).map_err(json_err)?;
    values
        .iter()
        .enumerate()
        .map(|(i, v)| article_from_value(v, i))
        .collect()
}

fn parse_jsonl(content: &str) -> Result<Vec<Article>> {
    let mut articles = Vec::new();
    for (lineno, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(line).map_err(|e| Error::MalformedJson {
            line: lineno + 1,
            column: e.column(),
            message: e.to_string(),
        })?;
        articles.push(article_from_value(&value, lineno)?);
    }
    Ok(articles)
}

fn json_err(e: serde_json::Error) -> Error {
    Error::MalformedJson {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Convert one parsed record. Unknown fields are ignored; `reading_time`
/// may be an integer or a string of digits.
fn article_from_value(value: &Value, index: usize) -> Result<Article> {
    let obj = value.as_object().ok_or_else(|| Error::MalformedJson {
        line: index + 1,
        column: 0,
        message: format!("record {index} is not a JSON object"),
    })?;

    let record_name = || {
        obj.get("id")
            .and_then(Value::as_str)
            .map(str::to_owned)
            .unwrap_or_else(|| format!("#{index}"))
    };
    let missing = |field: &str| Error::MissingField {
        record: record_name(),
        field: field.to_string(),
    };

    let string_field = |field: &str| -> Result<String> {
        obj.get(field)
            .and_then(Value::as_str)
            .map(str::to_owned)
            .ok_or_else(|| missing(field))
    };

    let reading_time = match obj.get("reading_time") {
        Some(Value::Number(n)) => n.as_u64().ok_or_else(|| missing("reading_time"))?,
        Some(Value::String(s)) => s.trim().parse().map_err(|_| missing("reading_time"))?,
        _ => return Err(missing("reading_time")),
    };

    let tags = obj
        .get("tags")
        .and_then(Value::as_array)
        .ok_or_else(|| missing("tags"))?
        .iter()
        .map(|t| t.as_str().map(str::to_owned).ok_or_else(|| missing("tags")))
        .collect::<Result<Vec<_>>>()?;

    let applause = obj
        .get("applause")
        .and_then(Value::as_u64)
        .ok_or_else(|| missing("applause"))?;

    let id = string_field("id")?;
    if id.is_empty() {
        return Err(missing("id"));
    }

    Ok(Article {
        id,
        author: string_field("author")?,
        publish_date: string_field("publish_date")?,
        reading_time,
        tags,
        title: string_field("title")?,
        txt: string_field("txt")?,
        applause,
    })
}

/// Drop zero-clap articles, duplicate ids (first occurrence wins), and
/// articles whose body is empty or whitespace. Order is otherwise preserved.
pub fn filter_corpus(articles: Vec<Article>) -> Vec<Article> {
    let mut seen = HashSet::new();
    articles
        .into_iter()
        .filter(|a| a.applause > 0 && !a.txt.trim().is_empty() && seen.insert(a.id.clone()))
        .collect()
}

/// Shuffle deterministically by seed, then cut at `round(ratio * N)`.
pub fn split_corpus(articles: &[Article], ratio: f64, seed: u64) -> Result<CorpusSplit> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(Error::BadRatio(ratio));
    }
    if articles.len() < 2 {
        return Err(Error::TooFewArticles(articles.len()));
    }

    let mut shuffled: Vec<Article> = articles.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    shuffled.shuffle(&mut rng);

    let cut = (ratio * articles.len() as f64).round() as usize;
    let test = shuffled.split_off(cut);
    Ok(CorpusSplit {
        train: shuffled,
        test,
        seed,
        ratio,
    })
}

/// Serialize articles as JSONL, one record per line.
pub fn to_jsonl(articles: &[Article]) -> String {
    let mut out = String::new();
    for article in articles {
        out.push_str(&serde_json::to_string(article).expect("article serializes"));
        out.push('\n');
    }
    out
}
