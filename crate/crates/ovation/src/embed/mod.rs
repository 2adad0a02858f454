//! Document embeddings: a from-scratch paragraph-vector trainer (PV-DM with
//! negative sampling) and a pretrained word-vector loader with averaging.

mod doc2vec;
mod wordvec;

pub use doc2vec::{infer_vector, train_doc2vec, Doc2VecParams, TrainingRun};
pub use wordvec::{average_doc_vector, load_word_vectors, parse_word_vectors, WordVectorFile};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the document vectors in an [`EmbeddingModel`] were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingKind {
    /// Trained paragraph vectors; supports gradient inference.
    PvDm,
    /// Unweighted means of pretrained word vectors.
    Averaged,
}

/// Word vectors plus per-document vectors, with the training setup echoed.
///
/// Maps are ordered so serialization is byte-deterministic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingModel {
    pub dims: usize,
    pub kind: EmbeddingKind,
    pub word_vectors: BTreeMap<String, Vec<f64>>,
    /// Output-side vectors of the negative-sampling objective; required for
    /// inference on unseen documents. Empty for averaged models.
    pub context_vectors: BTreeMap<String, Vec<f64>>,
    pub doc_vectors: BTreeMap<String, Vec<f64>>,
    pub hyperparams: Option<Doc2VecParams>,
}

impl EmbeddingModel {
    /// Document vector for one trained/averaged document id.
    pub fn doc_vector(&self, id: &str) -> Option<&[f64]> {
        self.doc_vectors.get(id).map(Vec::as_slice)
    }
}

/// Standard cosine similarity in [-1, 1].
pub fn cosine_similarity(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(dot / (na * nb))
}
