use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::series::calendar::PeriodCalendar;

/// A 15-minute numeric trace bound to a calendar, with an observed/missing
/// mask. Missing periods carry no sentinel value; every statistic skips them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    calendar: PeriodCalendar,
    values: Vec<f64>,
    mask: Vec<bool>,
}

impl TimeSeries {
    pub fn new(calendar: PeriodCalendar, values: Vec<f64>, mask: Vec<bool>) -> Result<Self> {
        if values.len() != calendar.n_periods() || mask.len() != calendar.n_periods() {
            return Err(CoreError::Shape(format!(
                "series length {} / mask length {} does not match calendar periods {}",
                values.len(),
                mask.len(),
                calendar.n_periods()
            )));
        }
        Ok(Self {
            calendar,
            values,
            mask,
        })
    }

    /// Fully observed series from raw values.
    pub fn from_values(calendar: PeriodCalendar, values: Vec<f64>) -> Result<Self> {
        let mask = vec![true; values.len()];
        Self::new(calendar, values, mask)
    }

    /// Constant fully observed series at `level`.
    pub fn constant(calendar: PeriodCalendar, level: f64) -> Self {
        let n = calendar.n_periods();
        Self {
            calendar,
            values: vec![level; n],
            mask: vec![true; n],
        }
    }

    pub fn calendar(&self) -> &PeriodCalendar {
        &self.calendar
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at `period` if observed.
    pub fn observed(&self, period: usize) -> Option<f64> {
        if self.mask[period] {
            Some(self.values[period])
        } else {
            None
        }
    }

    /// Value at `period`, masked periods read as 0.0.
    pub fn value_or_zero(&self, period: usize) -> f64 {
        if self.mask[period] {
            self.values[period]
        } else {
            0.0
        }
    }

    pub fn is_observed(&self, period: usize) -> bool {
        self.mask[period]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn n_observed(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    /// Iterator over (period, value) for observed periods.
    pub fn iter_observed(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|&(p, _)| self.mask[p])
            .map(|(p, &v)| (p, v))
    }

    /// Mean over observed periods, `None` when everything is masked.
    pub fn mean(&self) -> Option<f64> {
        let n = self.n_observed();
        if n == 0 {
            return None;
        }
        Some(self.iter_observed().map(|(_, v)| v).sum::<f64>() / n as f64)
    }

    /// Median over observed periods (lower median for even counts).
    pub fn median(&self) -> Option<f64> {
        let mut vals: Vec<f64> = self.iter_observed().map(|(_, v)| v).collect();
        if vals.is_empty() {
            return None;
        }
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Some(vals[(vals.len() - 1) / 2])
    }

    /// Pointwise sum; masked wherever either input is masked.
    pub fn add(&self, other: &TimeSeries) -> Result<TimeSeries> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Pointwise difference; masked wherever either input is masked.
    pub fn sub(&self, other: &TimeSeries) -> Result<TimeSeries> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &TimeSeries, f: impl Fn(f64, f64) -> f64) -> Result<TimeSeries> {
        if self.calendar != other.calendar {
            return Err(CoreError::Shape(
                "series calendars differ; cannot combine".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && b)
            .collect();
        Ok(TimeSeries {
            calendar: self.calendar.clone(),
            values,
            mask,
        })
    }

    /// Mask out observed periods with value < `min_value`; everything else
    /// is unchanged. Idempotent.
    pub fn threshold_clean(&self, min_value: f64) -> TimeSeries {
        let mut out = self.clone();
        for p in 0..out.values.len() {
            if out.mask[p] && out.values[p] < min_value {
                out.mask[p] = false;
            }
        }
        out
    }

    /// Mask out observed periods with value > `max_value`. Idempotent.
    pub fn clip_outliers(&self, max_value: f64) -> TimeSeries {
        let mut out = self.clone();
        for p in 0..out.values.len() {
            if out.mask[p] && out.values[p] > max_value {
                out.mask[p] = false;
            }
        }
        out
    }

    /// Detect a blockwise repetition factor: the largest `k <= max_factor`
    /// such that the series is constant within every aligned block of length
    /// `k` and the per-block downsample is non-constant. Returns 1 when no
    /// such factor exists (strictly varying or fully constant series), so a
    /// constant series reports 1.
    ///
    /// Masked periods are ignored when testing block constancy.
    pub fn detect_repeat_factor(&self, max_factor: usize) -> usize {
        let n = self.values.len();
        let max_factor = max_factor.max(1).min(n.max(1));
        let mut best = 1;
        for k in 1..=max_factor {
            if let Some(base) = self.blockwise_base(k) {
                let non_constant = base.windows(2).any(|w| w[0] != w[1]);
                if non_constant {
                    best = k;
                }
            }
        }
        best
    }

    /// One value per aligned `k`-block if every block is internally constant
    /// over its observed periods; `None` otherwise. Blocks with no observed
    /// value repeat the previous block's value.
    fn blockwise_base(&self, k: usize) -> Option<Vec<f64>> {
        let n = self.values.len();
        let mut base = Vec::with_capacity(n.div_ceil(k));
        let mut last = 0.0;
        for start in (0..n).step_by(k) {
            let end = (start + k).min(n);
            let mut block_value: Option<f64> = None;
            for p in start..end {
                if !self.mask[p] {
                    continue;
                }
                match block_value {
                    None => block_value = Some(self.values[p]),
                    Some(v) if v == self.values[p] => {}
                    Some(_) => return None,
                }
            }
            last = block_value.unwrap_or(last);
            base.push(last);
        }
        Some(base)
    }

    /// Expand a base series blockwise: each value repeated `k` times.
    /// Test support for the repeat-factor reconstruction property.
    pub fn repeat_blockwise(
        calendar: PeriodCalendar,
        base: &[f64],
        k: usize,
    ) -> Result<TimeSeries> {
        let values: Vec<f64> = base.iter().flat_map(|&v| std::iter::repeat(v).take(k)).collect();
        TimeSeries::from_values(calendar, values)
    }
}

/// Fully observed series holding `level` in every period.
pub fn constant_forecast(calendar: &PeriodCalendar, level: f64) -> TimeSeries {
    TimeSeries::constant(calendar.clone(), level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::calendar::build_calendar;
    use chrono::NaiveDate;

    fn cal(days: usize) -> PeriodCalendar {
        build_calendar(NaiveDate::from_ymd_opt(2020, 10, 1).unwrap(), days, vec![]).unwrap()
    }

    fn series(values: Vec<f64>) -> TimeSeries {
        let c = cal(values.len().div_ceil(96).max(1));
        let mut padded = values;
        let n = c.n_periods();
        let pad = n - padded.len();
        padded.extend(std::iter::repeat(0.0).take(pad));
        let mut mask = vec![true; n];
        for m in mask.iter_mut().skip(n - pad) {
            *m = false;
        }
        TimeSeries::new(c, padded, mask).unwrap()
    }

    #[test]
    fn threshold_masks_small_values() {
        let s = series(vec![0.01, 0.2, 0.04, 1.0]);
        let t = s.threshold_clean(0.05);
        assert_eq!(
            &t.mask()[..4],
            &[false, true, false, true],
            "values below 0.05 kW must be masked"
        );
        assert_eq!(&t.values()[..4], &[0.01, 0.2, 0.04, 1.0]);
    }

    #[test]
    fn threshold_is_identity_when_all_pass() {
        let s = series(vec![1.0, 2.0, 3.0]);
        assert_eq!(s.threshold_clean(0.5), s);
    }

    #[test]
    fn threshold_can_mask_everything() {
        let s = series(vec![0.01, 0.02]);
        let t = s.threshold_clean(0.05);
        assert_eq!(t.n_observed(), 0);
    }

    #[test]
    fn threshold_and_clip_idempotent() {
        let s = series(vec![0.01, 0.2, 1744.1, 1.0, 900.0]);
        let once = s.threshold_clean(0.05).clip_outliers(1000.0);
        let twice = once.threshold_clean(0.05).clip_outliers(1000.0);
        assert_eq!(once, twice);
    }

    #[test]
    fn clip_masks_repeated_outlier_run() {
        // Four consecutive repeated 1744.1 readings masked by a 1000 kW cap.
        let mut vals = vec![120.0; 10];
        for v in vals.iter_mut().skip(4).take(4) {
            *v = 1744.1;
        }
        let s = series(vals);
        let t = s.clip_outliers(1000.0);
        for p in 0..10 {
            assert_eq!(t.is_observed(p), !(4..8).contains(&p), "period {p}");
        }
    }

    #[test]
    fn clip_with_infinite_max_is_identity() {
        let s = series(vec![10.0, 2000.0, 12.0]);
        assert_eq!(s.clip_outliers(f64::INFINITY), s);
    }

    #[test]
    fn clip_masks_middle_spike() {
        let s = series(vec![10.0, 2000.0, 12.0]);
        let t = s.clip_outliers(1500.0);
        assert_eq!(&t.mask()[..3], &[true, false, true]);
    }

    #[test]
    fn repeat_factor_four() {
        let s = series(vec![5.0, 5.0, 5.0, 5.0, 7.0, 7.0, 7.0, 7.0]);
        assert_eq!(s.detect_repeat_factor(8), 4);
    }

    #[test]
    fn repeat_factor_strictly_increasing_is_one() {
        let s = series((0..16).map(f64::from).collect());
        assert_eq!(s.detect_repeat_factor(8), 1);
    }

    #[test]
    fn repeat_factor_constant_is_one() {
        let s = series(vec![3.0; 16]);
        assert_eq!(s.detect_repeat_factor(8), 1);
    }

    #[test]
    fn constant_forecast_october() {
        let c = build_calendar(NaiveDate::from_ymd_opt(2020, 10, 1).unwrap(), 31, vec![]).unwrap();
        let s = constant_forecast(&c, 1.0);
        assert_eq!(s.len(), 2976);
        assert!(s.values().iter().all(|&v| v == 1.0));
        assert_eq!(s.n_observed(), 2976);
    }

    #[test]
    fn constant_forecast_zero() {
        let c = cal(1);
        let s = constant_forecast(&c, 0.0);
        assert!(s.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn constant_forecast_from_median() {
        let training = series(vec![3.0, 1.0, 9.0]);
        let level = training.median().unwrap();
        assert_eq!(level, 3.0);
        let s = constant_forecast(training.calendar(), level);
        assert!(s.values().iter().all(|&v| v == 3.0));
    }

    #[test]
    fn statistics_skip_masked_periods() {
        let c = cal(1);
        let mut values = vec![0.0; 96];
        let mut mask = vec![false; 96];
        values[0] = 10.0;
        values[1] = 20.0;
        mask[0] = true;
        mask[1] = true;
        let s = TimeSeries::new(c, values, mask).unwrap();
        assert_eq!(s.mean(), Some(15.0));
        assert_eq!(s.n_observed(), 2);
    }

    #[test]
    fn length_mismatch_rejected() {
        let c = cal(1);
        assert!(TimeSeries::from_values(c, vec![1.0; 95]).is_err());
    }
}
