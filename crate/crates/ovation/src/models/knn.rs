//! k-nearest-neighbour clap regression by exhaustive scan.
//!
//! At a few thousand documents brute force is exact and fast; no index
//! structure is needed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance metric for neighbour search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Cosine,
    Euclidean,
}

impl std::str::FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_lowercase().as_str() {
            "cosine" => Ok(Metric::Cosine),
            "euclidean" => Ok(Metric::Euclidean),
            other => Err(format!("unknown metric '{other}', expected cosine or euclidean")),
        }
    }
}

/// Training vectors with their clap counts and document ids.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KnnIndex {
    pub vectors: Vec<Vec<f64>>,
    pub claps: Vec<u64>,
    pub ids: Vec<String>,
    pub metric: Metric,
}

impl KnnIndex {
    pub fn new(
        vectors: Vec<Vec<f64>>,
        claps: Vec<u64>,
        ids: Vec<String>,
        metric: Metric,
    ) -> Result<Self> {
        if vectors.len() != claps.len() || vectors.len() != ids.len() {
            return Err(Error::LengthMismatch {
                left: vectors.len(),
                right: claps.len().max(ids.len()),
            });
        }
        if vectors.is_empty() {
            return Err(Error::Empty);
        }
        Ok(KnnIndex {
            vectors,
            claps,
            ids,
            metric,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Distance under the index metric. Cosine distance is 1 - cosine
/// similarity; a stored all-zero vector is treated as maximally distant.
pub fn distance(metric: Metric, query: &[f64], stored: &[f64]) -> f64 {
    match metric {
        Metric::Euclidean => query
            .iter()
            .zip(stored)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt(),
        Metric::Cosine => {
            let dot: f64 = query.iter().zip(stored).map(|(a, b)| a * b).sum();
            let nq: f64 = query.iter().map(|x| x * x).sum::<f64>().sqrt();
            let ns: f64 = stored.iter().map(|x| x * x).sum::<f64>().sqrt();
            if ns == 0.0 {
                1.0
            } else {
                1.0 - dot / (nq * ns)
            }
        }
    }
}

/// Mean clap count of the k nearest neighbours. Distance ties break by id.
pub fn knn_predict(index: &KnnIndex, query: &[f64], k: usize) -> Result<f64> {
    let n = index.len();
    if k < 1 || k > n {
        return Err(Error::BadNeighbourCount { k, n });
    }
    if index.metric == Metric::Cosine && query.iter().all(|&x| x == 0.0) {
        return Err(Error::ZeroVector);
    }
    if let Some(row) = index.vectors.iter().find(|v| v.len() != query.len()) {
        return Err(Error::DimMismatch {
            expected: row.len(),
            got: query.len(),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let dists: Vec<f64> = index
        .vectors
        .iter()
        .map(|v| distance(index.metric, query, v))
        .collect();
    order.sort_by(|&a, &b| {
        dists[a]
            .partial_cmp(&dists[b])
            .expect("finite distance")
            .then_with(|| index.ids[a].cmp(&index.ids[b]))
    });

    let sum: f64 = order[..k].iter().map(|&i| index.claps[i] as f64).sum();
    Ok(sum / k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn index(points: &[(&str, [f64; 2], u64)], metric: Metric) -> KnnIndex {
        KnnIndex::new(
            points.iter().map(|(_, v, _)| v.to_vec()).collect(),
            points.iter().map(|(_, _, c)| *c).collect(),
            points.iter().map(|(id, _, _)| id.to_string()).collect(),
            metric,
        )
        .unwrap()
    }

    #[test]
    fn k1_returns_nearest_claps() {
        let idx = index(
            &[("a", [1.0, 0.0], 10), ("b", [0.0, 1.0], 99)],
            Metric::Euclidean,
        );
        assert_eq!(knn_predict(&idx, &[0.9, 0.1], 1).unwrap(), 10.0);
    }

    #[test]
    fn k_equal_n_is_global_mean() {
        let idx = index(
            &[("a", [1.0, 0.0], 10), ("b", [0.0, 1.0], 20), ("c", [1.0, 1.0], 30)],
            Metric::Euclidean,
        );
        assert_eq!(knn_predict(&idx, &[5.0, 5.0], 3).unwrap(), 20.0);
    }

    // Oracle: full sort of all distances. Three points cluster near the
    // query direction; two are far; k=3 under cosine averages the cluster.
    #[test]
    fn planted_cluster_average() {
        let idx = index(
            &[
                ("a", [1.0, 0.01], 10),
                ("b", [1.0, 0.02], 20),
                ("c", [1.0, 0.03], 30),
                ("d", [-1.0, 0.5], 1000),
                ("e", [0.0, 1.0], 2000),
            ],
            Metric::Cosine,
        );
        assert_eq!(knn_predict(&idx, &[1.0, 0.0], 3).unwrap(), 20.0);
    }

    #[test]
    fn ties_break_by_id_order() {
        // two points equidistant from the query; smaller id wins
        let idx = index(
            &[("z", [1.0, 0.0], 100), ("a", [-1.0, 0.0], 4)],
            Metric::Euclidean,
        );
        assert_eq!(knn_predict(&idx, &[0.0, 0.0], 1).unwrap(), 4.0);
    }

    #[test]
    fn bad_k_is_rejected() {
        let idx = index(&[("a", [1.0, 0.0], 1)], Metric::Euclidean);
        assert!(matches!(
            knn_predict(&idx, &[1.0, 0.0], 0),
            Err(Error::BadNeighbourCount { .. })
        ));
        assert!(matches!(
            knn_predict(&idx, &[1.0, 0.0], 2),
            Err(Error::BadNeighbourCount { .. })
        ));
    }

    #[test]
    fn zero_query_under_cosine_is_rejected() {
        let idx = index(&[("a", [1.0, 0.0], 1)], Metric::Cosine);
        assert!(matches!(
            knn_predict(&idx, &[0.0, 0.0], 1),
            Err(Error::ZeroVector)
        ));
        // euclidean accepts the origin
        let idx = index(&[("a", [1.0, 0.0], 1)], Metric::Euclidean);
        assert_eq!(knn_predict(&idx, &[0.0, 0.0], 1).unwrap(), 1.0);
    }

    #[test]
    fn prediction_stays_within_clap_range() {
        let idx = index(
            &[("a", [0.0, 1.0], 5), ("b", [1.0, 0.0], 50), ("c", [1.0, 1.0], 500)],
            Metric::Euclidean,
        );
        for k in 1..=3 {
            let p = knn_predict(&idx, &[0.3, 0.7], k).unwrap();
            assert!((5.0..=500.0).contains(&p));
        }
    }

    #[test]
    fn mismatched_parallel_arrays_are_rejected() {
        assert!(matches!(
            KnnIndex::new(vec![vec![1.0]], vec![1, 2], vec!["a".to_string()], Metric::Cosine),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            KnnIndex::new(vec![], vec![], vec![], Metric::Cosine),
            Err(Error::Empty)
        ));
    }
}
