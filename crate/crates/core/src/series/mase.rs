use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::series::timeseries::TimeSeries;

/// Default seasonal period: one day of 15-minute values.
pub const DEFAULT_SEASON: usize = 96;

/// Mean absolute scaled error of `forecast` against `actual`, scaled by the
/// in-sample seasonal-naive error of `training` at the given `season`.
///
/// Only periods observed in both `actual` and `forecast` enter the numerator;
/// only training pairs `(t, t-season)` observed at both ends enter the
/// denominator. A value of 1.0 means parity with the seasonal-naive baseline.
pub fn mase(
    actual: &TimeSeries,
    forecast: &TimeSeries,
    training: &TimeSeries,
    season: usize,
) -> Result<f64> {
    if season == 0 {
        return Err(CoreError::Config("MASE season must be >= 1".into()));
    }
    if actual.calendar() != forecast.calendar() {
        return Err(CoreError::Shape(
            "actual and forecast must share a calendar".into(),
        ));
    }

    let mut abs_err = 0.0;
    let mut n_err = 0usize;
    for p in 0..actual.len() {
        if let (Some(a), Some(f)) = (actual.observed(p), forecast.observed(p)) {
            abs_err += (a - f).abs();
            n_err += 1;
        }
    }
    if n_err == 0 {
        return Err(CoreError::UndefinedMetric(
            "no jointly observed periods between actual and forecast".into(),
        ));
    }
    let numerator = abs_err / n_err as f64;

    let mut abs_naive = 0.0;
    let mut n_naive = 0usize;
    for t in season..training.len() {
        if let (Some(curr), Some(prev)) = (training.observed(t), training.observed(t - season)) {
            abs_naive += (curr - prev).abs();
            n_naive += 1;
        }
    }
    if n_naive == 0 {
        return Err(CoreError::UndefinedMetric(format!(
            "training series has no observed pairs at season {season}"
        )));
    }
    let denominator = abs_naive / n_naive as f64;
    if denominator == 0.0 {
        return Err(CoreError::UndefinedMetric(
            "seasonal-naive denominator is zero (constant training series)".into(),
        ));
    }

    Ok(numerator / denominator)
}

/// MASE per series plus the arithmetic mean used to score a configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaseReport {
    pub per_series: Vec<(String, f64)>,
    pub mean: f64,
}

impl MaseReport {
    pub fn new(per_series: Vec<(String, f64)>) -> Self {
        let mean = if per_series.is_empty() {
            f64::NAN
        } else {
            per_series.iter().map(|(_, m)| m).sum::<f64>() / per_series.len() as f64
        };
        MaseReport { per_series, mean }
    }
}
