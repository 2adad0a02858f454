//! Mean squared error and the evaluation report.

use crate::error::{Error, Result};

/// Mean of squared differences.
pub fn mse(pred: &[f64], actual: &[f64]) -> Result<f64> {
    if pred.len() != actual.len() {
        return Err(Error::LengthMismatch {
            left: pred.len(),
            right: actual.len(),
        });
    }
    if pred.is_empty() {
        return Err(Error::Empty);
    }
    let sum: f64 = pred.iter().zip(actual).map(|(p, a)| (p - a) * (p - a)).sum();
    Ok(sum / pred.len() as f64)
}

/// One evaluated model configuration, reported on both splits.
#[derive(Debug, Clone)]
pub struct EvalRow {
    /// Row label in the published table style, e.g.
    /// "KNN + Doc2Vec(Embedding 200, k=19)".
    pub label: String,
    /// Comma-free fields for the CSV rendering.
    pub model: String,
    pub embedding: String,
    pub params: String,
    pub train_mse: f64,
    pub test_mse: f64,
    /// The published baseline MSE for this row, where one exists.
    pub reference_mse: Option<f64>,
}

/// Table-style evaluation report.
#[derive(Debug, Clone, Default)]
pub struct EvalReport {
    pub rows: Vec<EvalRow>,
}

impl EvalReport {
    /// Render as an aligned text table.
    pub fn to_text(&self) -> String {
        let mut width = "Model".len();
        for row in &self.rows {
            width = width.max(row.label.len());
        }
        let mut out = format!(
            "{:<width$}  {:>12}  {:>12}  {:>12}\n",
            "Model", "Train MSE", "Test MSE", "Reference"
        );
        for row in &self.rows {
            let reference = row
                .reference_mse
                .map(|r| format!("{r}"))
                .unwrap_or_else(|| "-".to_string());
            out.push_str(&format!(
                "{:<width$}  {:>12.2}  {:>12.2}  {:>12}\n",
                row.label, row.train_mse, row.test_mse, reference
            ));
        }
        out
    }

    /// Render as CSV with the `model,embedding,params,mse` header; each
    /// configuration contributes one row per split, labeled in `params`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("model,embedding,params,mse\n");
        for row in &self.rows {
            let params = |split: &str| {
                if row.params.is_empty() {
                    format!("split={split}")
                } else {
                    format!("{};split={split}", row.params)
                }
            };
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.model,
                row.embedding,
                params("train"),
                row.train_mse
            ));
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.model,
                row.embedding,
                params("test"),
                row.test_mse
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_lists_have_zero_mse() {
        assert_eq!(mse(&[1.0, 2.0], &[1.0, 2.0]).unwrap(), 0.0);
    }

    #[test]
    fn hand_computed_mse() {
        // (1 + 9) / 2
        assert_eq!(mse(&[0.0, 0.0], &[1.0, 3.0]).unwrap(), 5.0);
    }

    #[test]
    fn errors_on_bad_shapes() {
        assert!(matches!(mse(&[1.0], &[1.0, 2.0]), Err(Error::LengthMismatch { .. })));
        assert!(matches!(mse(&[], &[]), Err(Error::Empty)));
    }

    #[test]
    fn report_renders_published_row_label() {
        let report = EvalReport {
            rows: vec![EvalRow {
                label: "KNN + Doc2Vec(Embedding 200, k=19)".to_string(),
                model: "KNN".to_string(),
                embedding: "Doc2Vec(Embedding 200)".to_string(),
                params: "k=19".to_string(),
                train_mse: 100.0,
                test_mse: 200.0,
                reference_mse: Some(3054.0),
            }],
        };
        let text = report.to_text();
        assert!(text.contains("KNN + Doc2Vec(Embedding 200, k=19)"));
        assert!(text.contains("3054"));
        let csv = report.to_csv();
        assert!(csv.starts_with("model,embedding,params,mse\n"));
        assert!(csv.contains("KNN,Doc2Vec(Embedding 200),k=19;split=test,200"));
        // every data row parses into exactly four comma-separated fields
        for line in csv.lines().skip(1) {
            assert_eq!(line.split(',').count(), 4, "line {line}");
        }
    }
}
