//! Time-series CSV format: header `timestamp,value`, ISO-8601 local
//! timestamps at 15-minute spacing, missing values as an empty field.

use std::io::{Read, Write};

use chrono::NaiveDateTime;

use crate::error::{CoreError, Result};
use crate::series::calendar::{PeriodCalendar, PERIODS_PER_DAY};
use crate::series::timeseries::TimeSeries;

const TS_FORMAT: &str = "%Y-%m-%dT%H:%M:%S";

/// Timestamp of period `p` on the calendar.
pub fn period_timestamp(calendar: &PeriodCalendar, period: usize) -> NaiveDateTime {
    let date = calendar.date_of(period);
    let minutes = (period % PERIODS_PER_DAY) as u32 * 15;
    date.and_hms_opt(minutes / 60, minutes % 60, 0)
        .expect("in-range time of day")
}

/// Read a series whose rows must match the calendar's periods one-for-one,
/// in order. Empty value fields become masked periods.
pub fn read_timeseries<R: Read>(reader: R, calendar: &PeriodCalendar) -> Result<TimeSeries> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    {
        let headers = rdr.headers().map_err(|e| CoreError::Parse(e.to_string()))?;
        if headers.len() < 2 || &headers[0] != "timestamp" || &headers[1] != "value" {
            return Err(CoreError::Parse(format!(
                "expected header `timestamp,value`, got {headers:?}"
            )));
        }
    }

    let n = calendar.n_periods();
    let mut values = vec![0.0; n];
    let mut mask = vec![false; n];
    let mut period = 0usize;
    for record in rdr.records() {
        let record = record.map_err(|e| CoreError::Parse(e.to_string()))?;
        if period >= n {
            return Err(CoreError::Shape(format!(
                "series has more rows than the calendar's {n} periods"
            )));
        }
        let ts = NaiveDateTime::parse_from_str(&record[0], TS_FORMAT)
            .map_err(|e| CoreError::Parse(format!("bad timestamp {:?}: {e}", &record[0])))?;
        let expected = period_timestamp(calendar, period);
        if ts != expected {
            return Err(CoreError::Parse(format!(
                "row {} timestamp {} does not match expected {}",
                period + 1,
                ts.format(TS_FORMAT),
                expected.format(TS_FORMAT)
            )));
        }
        let field = record[1].trim();
        if !field.is_empty() {
            values[period] = field
                .parse::<f64>()
                .map_err(|e| CoreError::Parse(format!("bad value {field:?}: {e}")))?;
            mask[period] = true;
        }
        period += 1;
    }
    if period != n {
        return Err(CoreError::Shape(format!(
            "series has {period} rows but the calendar expects {n}"
        )));
    }
    TimeSeries::new(calendar.clone(), values, mask)
}

/// Write a series in the canonical format. Floats use Rust's shortest
/// round-trip formatting so rewritten files are byte-stable.
pub fn write_timeseries<W: Write>(mut writer: W, series: &TimeSeries) -> Result<()> {
    writeln!(writer, "timestamp,value")?;
    for p in 0..series.len() {
        let ts = period_timestamp(series.calendar(), p);
        match series.observed(p) {
            Some(v) => writeln!(writer, "{},{}", ts.format(TS_FORMAT), v)?,
            None => writeln!(writer, "{},", ts.format(TS_FORMAT))?,
        }
    }
    Ok(())
}

/// Read a series from a file path.
pub fn read_timeseries_path(
    path: &std::path::Path,
    calendar: &PeriodCalendar,
) -> Result<TimeSeries> {
    let file = std::fs::File::open(path).map_err(|e| {
        CoreError::Parse(format!("cannot open series file {}: {e}", path.display()))
    })?;
    read_timeseries(std::io::BufReader::new(file), calendar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::calendar::build_calendar;
    use chrono::NaiveDate;

    fn cal() -> PeriodCalendar {
        build_calendar(NaiveDate::from_ymd_opt(2020, 10, 1).unwrap(), 1, vec![]).unwrap()
    }

    #[test]
    fn round_trip_with_missing_values() {
        let c = cal();
        let mut values: Vec<f64> = (0..96).map(|i| i as f64 * 0.25 + 0.1).collect();
        let mut mask = vec![true; 96];
        mask[10] = false;
        values[10] = 0.0;
        let s = TimeSeries::new(c.clone(), values, mask).unwrap();

        let mut buf = Vec::new();
        write_timeseries(&mut buf, &s).unwrap();
        let back = read_timeseries(buf.as_slice(), &c).unwrap();
        assert_eq!(back, s);

        let mut buf2 = Vec::new();
        write_timeseries(&mut buf2, &back).unwrap();
        assert_eq!(buf, buf2, "rewrite must be byte-identical");
    }

    #[test]
    fn first_rows_have_expected_timestamps() {
        let s = TimeSeries::from_values(cal(), vec![1.0; 96]).unwrap();
        let mut buf = Vec::new();
        write_timeseries(&mut buf, &s).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("timestamp,value"));
        assert_eq!(lines.next(), Some("2020-10-01T00:00:00,1"));
        assert_eq!(lines.next(), Some("2020-10-01T00:15:00,1"));
    }

    #[test]
    fn timestamp_mismatch_rejected() {
        let text = "timestamp,value\n2020-10-01T00:05:00,1.0\n";
        assert!(matches!(
            read_timeseries(text.as_bytes(), &cal()),
            Err(CoreError::Parse(_))
        ));
    }

    #[test]
    fn short_file_rejected() {
        let text = "timestamp,value\n2020-10-01T00:00:00,1.0\n";
        assert!(matches!(
            read_timeseries(text.as_bytes(), &cal()),
            Err(CoreError::Shape(_))
        ));
    }
}
