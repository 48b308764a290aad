use chrono::{Datelike, Days, NaiveDate};
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Number of 15-minute periods in one day.
pub const PERIODS_PER_DAY: usize = 96;

/// Number of 15-minute periods in one week.
pub const PERIODS_PER_WEEK: usize = 7 * PERIODS_PER_DAY;

/// A tariff window: the hours of day, on the given weekdays, that count as
/// peak. Hours are fractional local hours, window is half-open
/// `[start_hour, end_hour)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeakWindow {
    /// Active weekdays, Monday = index 0 .. Sunday = index 6.
    pub weekdays: [bool; 7],
    pub start_hour: f64,
    pub end_hour: f64,
}

impl PeakWindow {
    pub fn new(weekdays: [bool; 7], start_hour: f64, end_hour: f64) -> Result<Self> {
        if !(start_hour < end_hour) {
            return Err(CoreError::Config(format!(
                "peak window start hour {start_hour} must be < end hour {end_hour}"
            )));
        }
        if !(0.0..=24.0).contains(&start_hour) || !(0.0..=24.0).contains(&end_hour) {
            return Err(CoreError::Config(format!(
                "peak window hours must lie in [0, 24], got [{start_hour}, {end_hour})"
            )));
        }
        Ok(Self {
            weekdays,
            start_hour,
            end_hour,
        })
    }

    /// Weekdays 09:00-17:00, the documented default peak definition.
    pub fn default_business_hours() -> Self {
        PeakWindow {
            weekdays: [true, true, true, true, true, false, false],
            start_hour: 9.0,
            end_hour: 17.0,
        }
    }
}

/// Calendar arithmetic for a horizon of whole days at 15-minute resolution.
///
/// Periods are indexed `0..n_periods` from `start_date` 00:00 local, 96 per
/// day. Peak membership is derived from the configured windows; dates in
/// `holidays` are treated as weekends when testing windows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodCalendar {
    start_date: NaiveDate,
    n_days: usize,
    peak_windows: Vec<PeakWindow>,
    holidays: Vec<NaiveDate>,
}

impl PeriodCalendar {
    pub fn start_date(&self) -> NaiveDate {
        self.start_date
    }

    pub fn n_days(&self) -> usize {
        self.n_days
    }

    pub fn n_periods(&self) -> usize {
        self.n_days * PERIODS_PER_DAY
    }

    pub fn peak_windows(&self) -> &[PeakWindow] {
        &self.peak_windows
    }

    pub fn holidays(&self) -> &[NaiveDate] {
        &self.holidays
    }

    /// Civil date containing period `p`.
    pub fn date_of(&self, period: usize) -> NaiveDate {
        debug_assert!(period < self.n_periods());
        self.start_date
            .checked_add_days(Days::new((period / PERIODS_PER_DAY) as u64))
            .expect("date arithmetic overflow")
    }

    /// Weekday of period `p`, Monday = 0 .. Sunday = 6.
    pub fn weekday_of(&self, period: usize) -> u8 {
        self.date_of(period).weekday().num_days_from_monday() as u8
    }

    /// Fractional local hour of day of period `p` (0.0, 0.25, ... 23.75).
    pub fn hour_of(&self, period: usize) -> f64 {
        (period % PERIODS_PER_DAY) as f64 * 0.25
    }

    /// Day of year of period `p` (1-based, as in the civil calendar).
    pub fn day_of_year(&self, period: usize) -> u32 {
        self.date_of(period).ordinal()
    }

    /// Whether period `p` falls inside a configured peak window. Holidays are
    /// treated as Saturdays, so windows that only name weekdays never match
    /// them.
    pub fn is_peak(&self, period: usize) -> bool {
        let date = self.date_of(period);
        let weekday = if self.holidays.binary_search(&date).is_ok() {
            5 // Saturday
        } else {
            date.weekday().num_days_from_monday() as usize
        };
        let hour = self.hour_of(period);
        self.peak_windows
            .iter()
            .any(|w| w.weekdays[weekday] && w.start_hour <= hour && hour < w.end_hour)
    }

    /// Indices of all peak periods, in order.
    pub fn peak_periods(&self) -> Vec<usize> {
        (0..self.n_periods()).filter(|&p| self.is_peak(p)).collect()
    }

    /// Replace the holiday list (kept sorted for lookup).
    pub fn with_holidays(mut self, mut holidays: Vec<NaiveDate>) -> Self {
        holidays.sort_unstable();
        holidays.dedup();
        self.holidays = holidays;
        self
    }
}

/// Build a calendar of `n_days` whole days starting at `start_date`.
pub fn build_calendar(
    start_date: NaiveDate,
    n_days: usize,
    peak_windows: Vec<PeakWindow>,
) -> Result<PeriodCalendar> {
    if n_days == 0 {
        return Err(CoreError::Config("calendar must span at least 1 day".into()));
    }
    for w in &peak_windows {
        // Re-run the window checks so hand-built windows are caught too.
        PeakWindow::new(w.weekdays, w.start_hour, w.end_hour)?;
    }
    Ok(PeriodCalendar {
        start_date,
        n_days,
        peak_windows,
        holidays: Vec::new(),
    })
}
