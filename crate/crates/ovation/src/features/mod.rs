//! Feature extraction: PCA dimensionality reduction, decimal scaling, and
//! Zipf rank-frequency statistics.

mod pca;
mod scale;
mod zipf;

pub use pca::{fit_pca, pca_inverse_transform, pca_transform, PcaModel};
pub use scale::decimal_scale;
pub use zipf::{zipf_csv, zipf_stats, ZipfEntry};

/// Default number of retained components for the regression pipeline.
pub const DEFAULT_PCA_K: usize = 23;

/// Clamp a requested component count to what the data can support:
/// k <= min(N-1, d). Returns the feasible k.
pub fn feasible_k(requested: usize, n: usize, d: usize) -> usize {
    requested.min(n.saturating_sub(1)).min(d).max(1)
}
