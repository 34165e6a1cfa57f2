//! Ranking and regression metrics for predictor evaluation.

use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Standard predictor quality report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalMetrics {
    pub acc_at_20: f64,
    pub acc_at_10: f64,
    pub acc_at_5: f64,
    pub rmse_mj: f64,
}

/// Fraction of the true k lowest-energy kernels recovered in the
/// predicted top-k. Ties are broken by id ascending so the metric is
/// deterministic across platforms.
pub fn acc_at_k(predicted: &[(String, f64)], truth: &[(String, f64)], k: usize) -> Result<f64> {
    if k == 0 {
        return Err(CoreError::invalid("k must be >= 1"));
    }
    if k > predicted.len() {
        return Err(CoreError::invalid(format!(
            "k={} exceeds list length {}",
            k,
            predicted.len()
        )));
    }
    let pred_ids: BTreeSet<&str> = predicted.iter().map(|(id, _)| id.as_str()).collect();
    let truth_ids: BTreeSet<&str> = truth.iter().map(|(id, _)| id.as_str()).collect();
    if predicted.len() != truth.len() || pred_ids != truth_ids {
        return Err(CoreError::invalid(
            "predicted and truth id sets must be identical",
        ));
    }

    let top = |list: &[(String, f64)]| -> BTreeSet<String> {
        let mut sorted: Vec<&(String, f64)> = list.iter().collect();
        sorted.sort_by(|a, b| {
            a.1.partial_cmp(&b.1)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.0.cmp(&b.0))
        });
        sorted.iter().take(k).map(|(id, _)| id.clone()).collect()
    };

    let hits = top(predicted).intersection(&top(truth)).count();
    Ok(hits as f64 / k as f64)
}

/// Root mean squared error, in the units of the inputs.
pub fn rmse(predicted: &[f64], truth: &[f64]) -> Result<f64> {
    if predicted.len() != truth.len() {
        return Err(CoreError::invalid(format!(
            "length mismatch: {} vs {}",
            predicted.len(),
            truth.len()
        )));
    }
    if predicted.is_empty() {
        return Err(CoreError::invalid("rmse needs at least one element"));
    }
    let sum_sq: f64 = predicted
        .iter()
        .zip(truth)
        .map(|(p, t)| (p - t) * (p - t))
        .sum();
    Ok((sum_sq / predicted.len() as f64).sqrt())
}

/// Full metric set over matched (id, predicted) / (id, truth) lists.
pub fn evaluate_predictions(
    predicted: &[(String, f64)],
    truth: &[(String, f64)],
) -> Result<EvalMetrics> {
    let pred_vals: Vec<f64> = predicted.iter().map(|(_, v)| *v).collect();
    // Align truth values to predicted id order for RMSE.
    let truth_by_id: std::collections::BTreeMap<&str, f64> =
        truth.iter().map(|(id, v)| (id.as_str(), *v)).collect();
    let mut truth_vals = Vec::with_capacity(predicted.len());
    for (id, _) in predicted {
        match truth_by_id.get(id.as_str()) {
            Some(v) => truth_vals.push(*v),
            None => return Err(CoreError::invalid(format!("id {id} missing from truth"))),
        }
    }
    Ok(EvalMetrics {
        acc_at_20: acc_at_k(predicted, truth, 20.min(predicted.len()))?,
        acc_at_10: acc_at_k(predicted, truth, 10.min(predicted.len()))?,
        acc_at_5: acc_at_k(predicted, truth, 5.min(predicted.len()))?,
        rmse_mj: rmse(&pred_vals, &truth_vals)?,
    })
}
