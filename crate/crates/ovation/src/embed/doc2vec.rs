//! Distributed-memory paragraph vectors (PV-DM) trained with negative
//! sampling.
//!
//! Each center word is predicted from the mean of its document vector and
//! the word vectors inside the context window. The positive target and a
//! handful of noise words (drawn from the unigram distribution raised to
//! 0.75) receive logistic updates. Training is single-threaded with a fixed
//! traversal order and a seeded sampler, so a given seed always reproduces
//! the same model.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::textproc::TokenizedDoc;

use super::{EmbeddingKind, EmbeddingModel};

/// Training hyperparameters. Defaults are conventional doc2vec settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Doc2VecParams {
    pub dims: usize,
    pub window: usize,
    pub negative_samples: usize,
    pub epochs: usize,
    pub initial_lr: f64,
    pub min_count: u64,
    pub seed: u64,
}

impl Default for Doc2VecParams {
    fn default() -> Self {
        Doc2VecParams {
            dims: 100,
            window: 5,
            negative_samples: 5,
            epochs: 20,
            initial_lr: 0.025,
            min_count: 2,
            seed: 42,
        }
    }
}

/// A trained model together with its per-epoch mean loss curve.
#[derive(Debug, Clone)]
pub struct TrainingRun {
    pub model: EmbeddingModel,
    pub epoch_losses: Vec<f64>,
}

struct Trainer {
    dims: usize,
    /// Vocabulary tokens in lexicographic order; index = row.
    vocab: Vec<String>,
    /// Documents as vocabulary indices, OOV dropped.
    docs: Vec<Vec<usize>>,
    word_in: Vec<Vec<f64>>,
    word_out: Vec<Vec<f64>>,
    doc_vecs: Vec<Vec<f64>>,
    /// Cumulative unigram^0.75 table for noise sampling.
    noise_cdf: Vec<f64>,
}

pub fn train_doc2vec(docs: &[TokenizedDoc], params: &Doc2VecParams) -> Result<TrainingRun> {
    if docs.len() < 2 {
        return Err(Error::TooFewDocs(docs.len()));
    }
    if params.dims < 2 {
        return Err(Error::DegenerateDims(params.dims));
    }

    let mut trainer = Trainer::new(docs, params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let total_positions: usize = trainer.docs.iter().map(Vec::len).sum();
    let total_steps = (params.epochs * total_positions).max(1) as f64;
    let lr_floor = params.initial_lr / 100.0;

    let mut step = 0usize;
    let mut epoch_losses = Vec::with_capacity(params.epochs);
    for _ in 0..params.epochs {
        let mut loss_sum = 0.0;
        let mut loss_count = 0usize;
        for d in 0..trainer.docs.len() {
            let words = trainer.docs[d].clone();
            for center_pos in 0..words.len() {
                let lr = params.initial_lr
                    + (lr_floor - params.initial_lr) * (step as f64 / total_steps);
                step += 1;
                loss_sum += trainer.train_position(d, &words, center_pos, params, lr, &mut rng);
                loss_count += 1;
            }
        }
        epoch_losses.push(if loss_count > 0 {
            loss_sum / loss_count as f64
        } else {
            0.0
        });
    }

    let model = trainer.into_model(docs, params);
    Ok(TrainingRun {
        model,
        epoch_losses,
    })
}

/// Embed unseen tokens: gradient steps on a fresh document vector with all
/// word vectors frozen. Deterministic given the seed; OOV tokens skipped.
pub fn infer_vector(
    model: &EmbeddingModel,
    tokens: &[String],
    steps: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    if model.kind != EmbeddingKind::PvDm {
        return Err(Error::WrongModelKind);
    }
    let params = model.hyperparams.clone().unwrap_or_default();
    let dims = model.dims;

    let vocab: Vec<&String> = model.word_vectors.keys().collect();
    let index: HashMap<&str, usize> = vocab
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_str(), i))
        .collect();
    let word_in: Vec<&[f64]> = vocab.iter().map(|w| model.word_vectors[*w].as_slice()).collect();
    let word_out: Vec<&[f64]> = vocab
        .iter()
        .map(|w| model.context_vectors[*w].as_slice())
        .collect();

    let words: Vec<usize> = tokens
        .iter()
        .filter_map(|t| index.get(t.as_str()).copied())
        .collect();
    if words.is_empty() {
        return Err(Error::AllTokensOov);
    }

    // The model does not carry corpus counts, so negatives are drawn
    // uniformly over the vocabulary at inference time.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut doc_vec: Vec<f64> = (0..dims)
        .map(|_| (rng.gen::<f64>() - 0.5) / dims as f64)
        .collect();

    let lr_floor = params.initial_lr / 100.0;
    for s in 0..steps.max(1) {
        let lr = params.initial_lr
            + (lr_floor - params.initial_lr) * (s as f64 / steps.max(1) as f64);
        for center_pos in 0..words.len() {
            let center = words[center_pos];
            let lo = center_pos.saturating_sub(params.window);
            let hi = (center_pos + params.window).min(words.len() - 1);
            let context: Vec<usize> = (lo..=hi)
                .filter(|&j| j != center_pos)
                .map(|j| words[j])
                .collect();

            let mut hidden = doc_vec.clone();
            for &c in &context {
                for (h, w) in hidden.iter_mut().zip(word_in[c]) {
                    *h += w;
                }
            }
            let scale = 1.0 / (1.0 + context.len() as f64);
            hidden.iter_mut().for_each(|h| *h *= scale);

            let mut delta = vec![0.0; dims];
            let mut update = |target: usize, label: f64, delta: &mut [f64]| {
                let x: f64 = hidden.iter().zip(word_out[target]).map(|(h, o)| h * o).sum();
                let g = (label - sigmoid(x)) * lr;
                for (d, o) in delta.iter_mut().zip(word_out[target]) {
                    *d += g * o;
                }
            };
            update(center, 1.0, &mut delta);
            for _ in 0..params.negative_samples {
                if vocab.len() < 2 {
                    break;
                }
                let mut noise = rng.gen_range(0..vocab.len());
                while noise == center {
                    noise = rng.gen_range(0..vocab.len());
                }
                update(noise, 0.0, &mut delta);
            }
            for (v, d) in doc_vec.iter_mut().zip(&delta) {
                *v += d;
            }
        }
    }
    Ok(doc_vec)
}

impl Trainer {
    fn new(docs: &[TokenizedDoc], params: &Doc2VecParams) -> Result<Self> {
        let mut counts: HashMap<&str, u64> = HashMap::new();
        for doc in docs {
            for token in &doc.norm_tokens {
                *counts.entry(token).or_insert(0) += 1;
            }
        }
        let mut vocab: Vec<String> = counts
            .iter()
            .filter(|(_, &c)| c >= params.min_count)
            .map(|(w, _)| w.to_string())
            .collect();
        vocab.sort();
        if vocab.is_empty() {
            return Err(Error::EmptyVocabulary {
                min_count: params.min_count,
            });
        }

        let index: HashMap<&str, usize> = vocab
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_str(), i))
            .collect();
        let docs_idx: Vec<Vec<usize>> = docs
            .iter()
            .map(|d| {
                d.norm_tokens
                    .iter()
                    .filter_map(|t| index.get(t.as_str()).copied())
                    .collect()
            })
            .collect();

        // unigram^0.75 cumulative table in vocabulary order
        let mut cdf = Vec::with_capacity(vocab.len());
        let mut acc = 0.0;
        for w in &vocab {
            acc += (counts[w.as_str()] as f64).powf(0.75);
            cdf.push(acc);
        }

        let dims = params.dims;
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        let mut uniform_row =
            |rng: &mut ChaCha8Rng| -> Vec<f64> {
                (0..dims).map(|_| (rng.gen::<f64>() - 0.5) / dims as f64).collect()
            };
        let word_in: Vec<Vec<f64>> = (0..vocab.len()).map(|_| uniform_row(&mut rng)).collect();
        let doc_vecs: Vec<Vec<f64>> = (0..docs.len()).map(|_| uniform_row(&mut rng)).collect();
        let word_out = vec![vec![0.0; dims]; vocab.len()];

        Ok(Trainer {
            dims,
            vocab,
            docs: docs_idx,
            word_in,
            word_out,
            doc_vecs,
            noise_cdf: cdf,
        })
    }

    /// One negative-sampling update at `center_pos`; returns the loss.
    fn train_position(
        &mut self,
        doc: usize,
        words: &[usize],
        center_pos: usize,
        params: &Doc2VecParams,
        lr: f64,
        rng: &mut ChaCha8Rng,
    ) -> f64 {
        let center = words[center_pos];
        let lo = center_pos.saturating_sub(params.window);
        let hi = (center_pos + params.window).min(words.len() - 1);
        let context: Vec<usize> = (lo..=hi).filter(|&j| j != center_pos).map(|j| words[j]).collect();

        // hidden = mean(doc vector, context word vectors)
        let mut hidden = self.doc_vecs[doc].clone();
        for &c in &context {
            for (h, w) in hidden.iter_mut().zip(&self.word_in[c]) {
                *h += w;
            }
        }
        let scale = 1.0 / (1.0 + context.len() as f64);
        hidden.iter_mut().for_each(|h| *h *= scale);

        let mut delta = vec![0.0; self.dims];
        let mut loss = 0.0;

        loss += self.update_output(center, 1.0, &hidden, &mut delta, lr);
        for _ in 0..params.negative_samples {
            if self.vocab.len() < 2 {
                break;
            }
            let mut noise = self.sample_noise(rng);
            while noise == center {
                noise = self.sample_noise(rng);
            }
            loss += self.update_output(noise, 0.0, &hidden, &mut delta, lr);
        }

        for (v, d) in self.doc_vecs[doc].iter_mut().zip(&delta) {
            *v += d;
        }
        for &c in &context {
            for (v, d) in self.word_in[c].iter_mut().zip(&delta) {
                *v += d;
            }
        }
        loss
    }

    /// Logistic update of one output vector; accumulates the hidden-layer
    /// gradient into `delta` and returns the log loss of this prediction.
    fn update_output(
        &mut self,
        target: usize,
        label: f64,
        hidden: &[f64],
        delta: &mut [f64],
        lr: f64,
    ) -> f64 {
        let x: f64 = hidden.iter().zip(&self.word_out[target]).map(|(h, o)| h * o).sum();
        let g = (label - sigmoid(x)) * lr;
        for (d, o) in delta.iter_mut().zip(&self.word_out[target]) {
            *d += g * o;
        }
        for (o, h) in self.word_out[target].iter_mut().zip(hidden) {
            *o += g * h;
        }
        if label > 0.5 {
            softplus(-x)
        } else {
            softplus(x)
        }
    }

    fn sample_noise(&self, rng: &mut ChaCha8Rng) -> usize {
        let total = *self.noise_cdf.last().expect("non-empty vocabulary");
        let r = rng.gen::<f64>() * total;
        self.noise_cdf.partition_point(|&c| c <= r).min(self.vocab.len() - 1)
    }

    fn into_model(self, docs: &[TokenizedDoc], params: &Doc2VecParams) -> EmbeddingModel {
        let mut word_vectors = BTreeMap::new();
        let mut context_vectors = BTreeMap::new();
        for (i, w) in self.vocab.iter().enumerate() {
            word_vectors.insert(w.clone(), self.word_in[i].clone());
            context_vectors.insert(w.clone(), self.word_out[i].clone());
        }
        let doc_vectors = docs
            .iter()
            .zip(self.doc_vecs)
            .map(|(d, v)| (d.id.clone(), v))
            .collect();
        EmbeddingModel {
            dims: self.dims,
            kind: EmbeddingKind::PvDm,
            word_vectors,
            context_vectors,
            doc_vectors,
            hyperparams: Some(params.clone()),
        }
    }
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Numerically stable ln(1 + e^x).
fn softplus(x: f64) -> f64 {
    if x > 30.0 {
        x
    } else if x < -30.0 {
        0.0
    } else {
        x.exp().ln_1p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::cosine_similarity;

    fn doc(id: &str, tokens: &[&str]) -> TokenizedDoc {
        TokenizedDoc {
            id: id.to_string(),
            norm_tokens: tokens.iter().map(|t| t.to_string()).collect(),
            kp_tokens: vec![],
        }
    }

    fn small_params(dims: usize, epochs: usize, seed: u64) -> Doc2VecParams {
        Doc2VecParams {
            dims,
            epochs,
            seed,
            ..Doc2VecParams::default()
        }
    }

    fn four_docs() -> Vec<TokenizedDoc> {
        vec![
            doc("a", &["cat", "dog", "cat", "dog", "bird"]),
            doc("b", &["dog", "cat", "bird", "cat", "dog"]),
            doc("c", &["fish", "shark", "fish", "shark", "whale"]),
            doc("d", &["shark", "whale", "fish", "whale", "shark"]),
        ]
    }

    #[test]
    fn model_has_expected_shape() {
        let run = train_doc2vec(&four_docs(), &small_params(8, 3, 42)).unwrap();
        let model = run.model;
        assert_eq!(model.dims, 8);
        assert_eq!(model.doc_vectors.len(), 4);
        for v in model.doc_vectors.values() {
            assert_eq!(v.len(), 8);
            assert!(v.iter().all(|x| x.is_finite()));
        }
        for v in model.word_vectors.values() {
            assert_eq!(v.len(), 8);
            assert!(v.iter().all(|x| x.is_finite()));
        }
    }

    #[test]
    fn same_seed_reproduces_vectors_exactly() {
        let a = train_doc2vec(&four_docs(), &small_params(8, 5, 7)).unwrap();
        let b = train_doc2vec(&four_docs(), &small_params(8, 5, 7)).unwrap();
        assert_eq!(a.model.doc_vectors, b.model.doc_vectors);
        assert_eq!(a.model.word_vectors, b.model.word_vectors);
        assert_eq!(a.epoch_losses, b.epoch_losses);
    }

    #[test]
    fn vocabulary_respects_min_count() {
        let docs = vec![
            doc("a", &["common", "common", "rare"]),
            doc("b", &["common", "common"]),
        ];
        let run = train_doc2vec(&docs, &small_params(4, 2, 1)).unwrap();
        assert!(run.model.word_vectors.contains_key("common"));
        assert!(!run.model.word_vectors.contains_key("rare"));
    }

    #[test]
    fn all_rare_vocabulary_is_an_error() {
        let docs = vec![doc("a", &["x", "y"]), doc("b", &["z", "w"])];
        assert!(matches!(
            train_doc2vec(&docs, &small_params(4, 1, 1)),
            Err(Error::EmptyVocabulary { .. })
        ));
    }

    #[test]
    fn degenerate_dims_is_an_error() {
        assert!(matches!(
            train_doc2vec(&four_docs(), &small_params(1, 1, 1)),
            Err(Error::DegenerateDims(1))
        ));
    }

    #[test]
    fn too_few_docs_is_an_error() {
        let docs = vec![doc("a", &["x", "x"])];
        assert!(matches!(
            train_doc2vec(&docs, &small_params(4, 1, 1)),
            Err(Error::TooFewDocs(1))
        ));
    }

    #[test]
    fn inference_is_deterministic() {
        let run = train_doc2vec(&four_docs(), &small_params(8, 5, 42)).unwrap();
        let tokens: Vec<String> = ["cat", "dog", "bird"].iter().map(|s| s.to_string()).collect();
        let a = infer_vector(&run.model, &tokens, 10, 3).unwrap();
        let b = infer_vector(&run.model, &tokens, 10, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn inference_of_oov_tokens_is_an_error() {
        let run = train_doc2vec(&four_docs(), &small_params(8, 2, 42)).unwrap();
        assert!(matches!(
            infer_vector(&run.model, &[], 5, 1),
            Err(Error::AllTokensOov)
        ));
        let oov = vec!["zebra".to_string()];
        assert!(matches!(
            infer_vector(&run.model, &oov, 5, 1),
            Err(Error::AllTokensOov)
        ));
    }

    #[test]
    fn inferred_vector_lands_near_trained_one() {
        let run = train_doc2vec(&four_docs(), &small_params(16, 30, 42)).unwrap();
        let model = &run.model;
        let tokens = four_docs()[0].norm_tokens.clone();
        let inferred = infer_vector(model, &tokens, 50, 9).unwrap();
        let own = cosine_similarity(&inferred, model.doc_vector("a").unwrap()).unwrap();
        let other = cosine_similarity(&inferred, model.doc_vector("c").unwrap()).unwrap();
        assert!(
            own > other,
            "inferred should be closer to its own doc ({own} vs {other})"
        );
    }
}
