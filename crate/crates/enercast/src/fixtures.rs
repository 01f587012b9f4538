//! Bundled 2012/2013 monthly-consumption reference tables.
//!
//! Each table pairs twelve months of actual consumption with the forecasts
//! of a 2-fold-validated and a k-fold-validated model. The values are stored
//! verbatim as decimal strings so they can be re-emitted byte-exactly and
//! checksummed against accidental edits; [`load_fixture_tables`] parses them
//! into [`SeriesPair`]s for the metrics layer.

use crate::error::Result;
use crate::metrics::SeriesPair;
use sha2::{Digest, Sha256};

/// One month of a fixture table, verbatim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureRow {
    pub month: &'static str,
    pub actual: &'static str,
    pub forecast_2fold: &'static str,
    pub forecast_kfold: &'static str,
}

const fn row(
    month: &'static str,
    actual: &'static str,
    forecast_2fold: &'static str,
    forecast_kfold: &'static str,
) -> FixtureRow {
    FixtureRow {
        month,
        actual,
        forecast_2fold,
        forecast_kfold,
    }
}

/// Actual vs. forecasted consumption for 2012.
pub const TABLE_2012: [FixtureRow; 12] = [
    row("January", "113.5800", "111.7538", "119.9518"),
    row("February", "110.5200", "109.7213", "109.1621"),
    row("March", "85.3500", "86.6753", "87.8927"),
    row("April", "74.9800", "75.2086", "80.8937"),
    row("May", "87.1100", "88.7946", "90.4256"),
    row("June", "86.1000", "87.5484", "88.8709"),
    row("July", "90.4600", "90.0263", "90.3327"),
    row("August", "103.1600", "102.9062", "90.3061"),
    row("September", "108.6600", "107.4464", "108.2806"),
    row("October", "99.8500", "100.7179", "90.4634"),
    row("November", "98.5000", "99.9205", "99.8268"),
    row("December", "90.8400", "93.4780", "90.8787"),
];

/// Actual vs. forecasted consumption for 2013.
pub const TABLE_2013: [FixtureRow; 12] = [
    row("January", "110.34", "109.2616", "110.0026"),
    row("February", "110.67", "109.3688", "110.1573"),
    row("March", "90.776", "92.9769", "91.2542"),
    row("April", "94.66", "97.1215", "100.4115"),
    row("May", "88.93", "90.8877", "89.2735"),
    row("June", "91.443", "93.723", "94.6202"),
    row("July", "101.82", "102.7202", "100.2111"),
    row("August", "111.741", "109.7194", "110.7063"),
    row("September", "106.772", "105.0375", "108.7167"),
    row("October", "101.92", "102.7778", "100.2537"),
    row("November", "98.43", "100.4408", "100.0337"),
    row("December", "92.53", "90.4837", "96.5896"),
];

/// The four fixture series pairs: actual vs. each forecast, per year.
#[derive(Debug, Clone)]
pub struct FixtureTables {
    pub y2012_2fold: SeriesPair,
    pub y2012_kfold: SeriesPair,
    pub y2013_2fold: SeriesPair,
    pub y2013_kfold: SeriesPair,
}

fn parse_column(table: &[FixtureRow; 12], pick: fn(&FixtureRow) -> &'static str) -> Vec<f64> {
    table
        .iter()
        .map(|r| pick(r).parse::<f64>().expect("fixture literal parses"))
        .collect()
}

fn pairs_for(table: &'static [FixtureRow; 12]) -> Result<(SeriesPair, SeriesPair)> {
    let actual = parse_column(table, |r| r.actual);
    let two_fold = parse_column(table, |r| r.forecast_2fold);
    let k_fold = parse_column(table, |r| r.forecast_kfold);
    Ok((
        SeriesPair::new(actual.clone(), two_fold)?,
        SeriesPair::new(actual, k_fold)?,
    ))
}

/// Parse the embedded tables into the four actual/forecast series pairs.
pub fn load_fixture_tables() -> FixtureTables {
    let (y2012_2fold, y2012_kfold) = pairs_for(&TABLE_2012).expect("2012 fixture is well formed");
    let (y2013_2fold, y2013_kfold) = pairs_for(&TABLE_2013).expect("2013 fixture is well formed");
    FixtureTables {
        y2012_2fold,
        y2012_kfold,
        y2013_2fold,
        y2013_kfold,
    }
}

/// The fixture table for `year` (2012 or 2013), if bundled.
pub fn table_for_year(year: u16) -> Option<&'static [FixtureRow; 12]> {
    match year {
        2012 => Some(&TABLE_2012),
        2013 => Some(&TABLE_2013),
        _ => None,
    }
}

/// Emit a fixture table as CSV, values byte-for-byte as stored.
pub fn fixture_csv(table: &[FixtureRow; 12]) -> String {
    let mut out = String::from("month,actual,forecast_2fold,forecast_kfold\n");
    for r in table {
        out.push_str(r.month);
        out.push(',');
        out.push_str(r.actual);
        out.push(',');
        out.push_str(r.forecast_2fold);
        out.push(',');
        out.push_str(r.forecast_kfold);
        out.push('\n');
    }
    out
}

/// SHA-256 over the canonical rendering of both tables.
///
/// Guards fixture integrity: any edit to an embedded value changes this hex
/// digest and fails the recorded-checksum test.
pub fn fixture_checksum() -> String {
    let mut hasher = Sha256::new();
    hasher.update(fixture_csv(&TABLE_2012).as_bytes());
    hasher.update(fixture_csv(&TABLE_2013).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
