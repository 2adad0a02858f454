//! Ordinary least squares / ridge regression via the normal equations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A fitted linear model. Predictions are clamped at zero because the
/// target (clap counts) cannot be negative.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinearModel {
    pub weights: Vec<f64>,
    pub intercept: f64,
    pub ridge_lambda: f64,
}

/// Solve (X^T X + lambda I) w = X^T y with an unregularized intercept
/// column, by Gaussian elimination with partial pivoting.
pub fn fit_linear(x: &[Vec<f64>], y: &[f64], ridge_lambda: f64) -> Result<LinearModel> {
    let n = x.len();
    let k = x.first().map(Vec::len).unwrap_or(0);
    if n != y.len() {
        return Err(Error::LengthMismatch {
            left: n,
            right: y.len(),
        });
    }
    if n == 0 || (ridge_lambda == 0.0 && n < k + 1) {
        return Err(Error::SingularSystem);
    }

    // design matrix gets an implicit leading 1 column for the intercept
    let dim = k + 1;
    let mut ata = vec![vec![0.0; dim]; dim];
    let mut aty = vec![0.0; dim];
    for (row, &target) in x.iter().zip(y) {
        if row.len() != k {
            return Err(Error::DimMismatch {
                expected: k,
                got: row.len(),
            });
        }
        let design = |j: usize| if j == 0 { 1.0 } else { row[j - 1] };
        for i in 0..dim {
            for j in i..dim {
                ata[i][j] += design(i) * design(j);
            }
            aty[i] += design(i) * target;
        }
    }
    for i in 0..dim {
        for j in 0..i {
            ata[i][j] = ata[j][i];
        }
    }
    // the intercept (index 0) is not regularized
    for (i, row) in ata.iter_mut().enumerate().skip(1) {
        row[i] += ridge_lambda;
    }

    let solution = solve_gaussian(ata, aty)?;
    Ok(LinearModel {
        intercept: solution[0],
        weights: solution[1..].to_vec(),
        ridge_lambda,
    })
}

/// <w, x> + intercept, clamped below at zero.
pub fn predict_linear(model: &LinearModel, x: &[f64]) -> Result<f64> {
    if x.len() != model.weights.len() {
        return Err(Error::DimMismatch {
            expected: model.weights.len(),
            got: x.len(),
        });
    }
    let raw: f64 = model.intercept + model.weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>();
    Ok(raw.max(0.0))
}

/// Raw affine prediction without the non-negativity clamp.
pub fn predict_linear_unclamped(model: &LinearModel, x: &[f64]) -> Result<f64> {
    if x.len() != model.weights.len() {
        return Err(Error::DimMismatch {
            expected: model.weights.len(),
            got: x.len(),
        });
    }
    Ok(model.intercept + model.weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>())
}

/// Gaussian elimination with partial pivoting.
fn solve_gaussian(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = a.len();
    // relative pivot threshold based on the matrix scale
    let scale = a
        .iter()
        .flat_map(|row| row.iter().map(|v| v.abs()))
        .fold(0.0, f64::max)
        .max(1.0);
    let eps = scale * 1e-12;

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| {
                a[r1][col]
                    .abs()
                    .partial_cmp(&a[r2][col].abs())
                    .expect("finite")
            })
            .expect("non-empty range");
        if a[pivot_row][col].abs() <= eps {
            return Err(Error::SingularSystem);
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);

        for row in (col + 1)..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                a[row][j] -= factor * a[col][j];
            }
            b[row] -= factor * b[col];
        }
    }

    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for j in (row + 1)..n {
            acc -= a[row][j] * x[j];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_fit_recovers_slope() {
        let x = vec![vec![1.0], vec![2.0], vec![3.0]];
        let y = vec![2.0, 4.0, 6.0];
        let model = fit_linear(&x, &y, 0.0).unwrap();
        assert!((model.weights[0] - 2.0).abs() < 1e-10);
        assert!(model.intercept.abs() < 1e-10);
    }

    #[test]
    fn duplicated_column_is_singular_until_ridged() {
        let x: Vec<Vec<f64>> = (0..6).map(|i| vec![i as f64, i as f64]).collect();
        let y: Vec<f64> = (0..6).map(|i| 3.0 * i as f64 + 1.0).collect();
        assert!(matches!(fit_linear(&x, &y, 0.0), Err(Error::SingularSystem)));
        let ridged = fit_linear(&x, &y, 0.1).unwrap();
        assert!(ridged.weights.iter().all(|w| w.is_finite()));
        assert!(ridged.intercept.is_finite());
    }

    #[test]
    fn predictions_are_clamped_at_zero() {
        let constant = LinearModel {
            weights: vec![0.0],
            intercept: 7.0,
            ridge_lambda: 0.0,
        };
        assert_eq!(predict_linear(&constant, &[123.0]).unwrap(), 7.0);

        let doubling = LinearModel {
            weights: vec![2.0],
            intercept: 0.0,
            ridge_lambda: 0.0,
        };
        assert_eq!(predict_linear(&doubling, &[3.0]).unwrap(), 6.0);

        let negative = LinearModel {
            weights: vec![-5.0],
            intercept: 0.0,
            ridge_lambda: 0.0,
        };
        assert_eq!(predict_linear(&negative, &[1.0]).unwrap(), 0.0);
        assert_eq!(predict_linear_unclamped(&negative, &[1.0]).unwrap(), -5.0);
    }

    #[test]
    fn dim_mismatch_is_rejected() {
        let model = LinearModel {
            weights: vec![1.0, 2.0],
            intercept: 0.0,
            ridge_lambda: 0.0,
        };
        assert!(matches!(
            predict_linear(&model, &[1.0]),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn underdetermined_unregularized_fit_is_rejected() {
        let x = vec![vec![1.0, 2.0]];
        let y = vec![1.0];
        assert!(matches!(fit_linear(&x, &y, 0.0), Err(Error::SingularSystem)));
        // but ridge makes it solvable
        assert!(fit_linear(&x, &y, 0.5).is_ok());
    }

    #[test]
    fn unclamped_prediction_is_affine() {
        let x = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0], vec![2.0, 1.0]];
        let y = vec![1.0, 2.0, 4.0, 5.0];
        let model = fit_linear(&x, &y, 0.0).unwrap();
        let a = [0.5, 1.5];
        let b = [2.5, -0.5];
        let mid: Vec<f64> = a.iter().zip(&b).map(|(p, q)| (p + q) / 2.0).collect();
        let pa = predict_linear_unclamped(&model, &a).unwrap();
        let pb = predict_linear_unclamped(&model, &b).unwrap();
        let pm = predict_linear_unclamped(&model, &mid).unwrap();
        assert!((pm - (pa + pb) / 2.0).abs() < 1e-10);
    }
}
