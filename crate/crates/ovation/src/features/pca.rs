//! Principal component analysis via power iteration with deflation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const CONVERGENCE_TOL: f64 = 1e-10;
const MAX_ITERATIONS: usize = 1000;
/// Eigenvalues at or below this are treated as numerically zero.
const RANK_EPS: f64 = 1e-12;

/// A fitted PCA basis: column means, orthonormal components in descending
/// eigenvalue order, and the eigenvalues themselves.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PcaModel {
    pub mean: Vec<f64>,
    pub components: Vec<Vec<f64>>,
    pub eigenvalues: Vec<f64>,
}

impl PcaModel {
    pub fn dims(&self) -> usize {
        self.mean.len()
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }
}

/// Fit the top-k principal components of the sample covariance.
///
/// Each component is found by power iteration (tolerance 1e-10, at most
/// 1000 iterations) and removed from the covariance by deflation. The sign
/// convention makes each component's largest-magnitude entry positive.
pub fn fit_pca(matrix: &[Vec<f64>], k: usize) -> Result<PcaModel> {
    let n = matrix.len();
    let d = matrix.first().map(Vec::len).unwrap_or(0);
    if n < 2 || k < 1 || k > (n - 1).min(d) {
        return Err(Error::BadK { k, n, d });
    }

    let mut mean = vec![0.0; d];
    for row in matrix {
        for (m, x) in mean.iter_mut().zip(row) {
            *m += x;
        }
    }
    mean.iter_mut().for_each(|m| *m /= n as f64);

    // sample covariance (divides by N-1)
    let mut cov = vec![vec![0.0; d]; d];
    for row in matrix {
        let centered: Vec<f64> = row.iter().zip(&mean).map(|(x, m)| x - m).collect();
        for i in 0..d {
            if centered[i] == 0.0 {
                continue;
            }
            for j in i..d {
                cov[i][j] += centered[i] * centered[j];
            }
        }
    }
    for i in 0..d {
        for j in i..d {
            cov[i][j] /= (n - 1) as f64;
            cov[j][i] = cov[i][j];
        }
    }

    let mut components = Vec::with_capacity(k);
    let mut eigenvalues = Vec::with_capacity(k);
    for c in 0..k {
        let (vector, value) = dominant_eigenpair(&cov, c);
        if value <= RANK_EPS {
            return Err(Error::RankDeficient {
                requested: k,
                available: c,
            });
        }
        deflate(&mut cov, &vector, value);
        components.push(orient(vector));
        eigenvalues.push(value);
    }

    Ok(PcaModel {
        mean,
        components,
        eigenvalues,
    })
}

/// Project rows onto the fitted components.
pub fn pca_transform(model: &PcaModel, vecs: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let d = model.dims();
    vecs.iter()
        .map(|row| {
            if row.len() != d {
                return Err(Error::DimMismatch {
                    expected: d,
                    got: row.len(),
                });
            }
            let centered: Vec<f64> = row.iter().zip(&model.mean).map(|(x, m)| x - m).collect();
            Ok(model
                .components
                .iter()
                .map(|c| c.iter().zip(&centered).map(|(ci, xi)| ci * xi).sum())
                .collect())
        })
        .collect()
}

/// Map component coordinates back into the original space.
pub fn pca_inverse_transform(model: &PcaModel, coords: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let k = model.k();
    coords
        .iter()
        .map(|row| {
            if row.len() != k {
                return Err(Error::DimMismatch {
                    expected: k,
                    got: row.len(),
                });
            }
            let mut out = model.mean.clone();
            for (coord, component) in row.iter().zip(&model.components) {
                for (o, c) in out.iter_mut().zip(component) {
                    *o += coord * c;
                }
            }
            Ok(out)
        })
        .collect()
}

/// Power iteration for the dominant eigenpair of a symmetric matrix. The
/// start vector is a deterministic pseudo-random direction keyed by the
/// component index so repeated fits are identical.
fn dominant_eigenpair(matrix: &[Vec<f64>], component: usize) -> (Vec<f64>, f64) {
    let d = matrix.len();
    let mut v = seeded_direction(d, component as u64);
    normalize(&mut v);
    for _ in 0..MAX_ITERATIONS {
        let mut next = mat_vec(matrix, &v);
        let norm = normalize(&mut next);
        if norm <= RANK_EPS {
            // matrix annihilates the start direction; treat as rank deficient
            return (v, 0.0);
        }
        let delta: f64 = next
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        // eigenvectors are defined up to sign; compare against both
        let delta_neg: f64 = next
            .iter()
            .zip(&v)
            .map(|(a, b)| (a + b).abs())
            .fold(0.0, f64::max);
        v = next;
        if delta.min(delta_neg) < CONVERGENCE_TOL {
            break;
        }
    }
    let mv = mat_vec(matrix, &v);
    let value: f64 = v.iter().zip(&mv).map(|(a, b)| a * b).sum();
    (v, value)
}

/// Remove lambda * v v^T from the matrix.
fn deflate(matrix: &mut [Vec<f64>], v: &[f64], value: f64) {
    let d = matrix.len();
    for i in 0..d {
        for j in 0..d {
            matrix[i][j] -= value * v[i] * v[j];
        }
    }
}

/// Flip so the largest-magnitude entry is positive.
fn orient(mut v: Vec<f64>) -> Vec<f64> {
    let dominant = v
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.abs().partial_cmp(&b.abs()).expect("finite"))
        .map(|(i, _)| i)
        .unwrap_or(0);
    if v[dominant] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

fn mat_vec(matrix: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    matrix
        .iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

/// Splitmix64-based deterministic direction.
fn seeded_direction(d: usize, seed: u64) -> Vec<f64> {
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(0x243F6A8885A308D3);
    let mut next = || {
        state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    };
    (0..d)
        .map(|_| (next() >> 11) as f64 / (1u64 << 53) as f64 - 0.5)
        .collect()
}
