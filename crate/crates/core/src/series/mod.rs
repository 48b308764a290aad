//! Calendar arithmetic for 15-minute horizons, time-series containers,
//! cleaning operations, and the MASE metric.

mod calendar;
pub mod csv_io;
mod mase;
mod timeseries;

pub use calendar::{build_calendar, PeakWindow, PeriodCalendar, PERIODS_PER_DAY, PERIODS_PER_WEEK};
pub use mase::{mase, MaseReport, DEFAULT_SEASON};
pub use timeseries::{constant_forecast, TimeSeries};
