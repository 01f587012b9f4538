//! Forecast error criteria: MSE, two RMSE variants, MAE and MAPE.
//!
//! The default RMSE reported here (`rmse_paper`) places the 1/n factor
//! outside the radical, `√(Σ(yᵢ−ŷᵢ)²)/n`, and therefore equals `√(mse/n)`.
//! The conventional `√mse` is exposed alongside it as [`rmse_standard`].

use crate::error::{Error, Result};

/// Aligned actual/forecast sequences on which all metrics operate.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPair {
    actual: Vec<f64>,
    forecast: Vec<f64>,
}

impl SeriesPair {
    /// Pair two equal-length, non-empty sequences.
    pub fn new(actual: Vec<f64>, forecast: Vec<f64>) -> Result<Self> {
        if actual.len() != forecast.len() {
            return Err(Error::Pairing {
                actual: actual.len(),
                forecast: forecast.len(),
            });
        }
        if actual.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(SeriesPair { actual, forecast })
    }

    pub fn n(&self) -> usize {
        self.actual.len()
    }

    pub fn actual(&self) -> &[f64] {
        &self.actual
    }

    pub fn forecast(&self) -> &[f64] {
        &self.forecast
    }

    /// Residuals yᵢ − ŷᵢ in sequence order.
    fn residuals(&self) -> impl Iterator<Item = f64> + '_ {
        self.actual
            .iter()
            .zip(&self.forecast)
            .map(|(y, y_hat)| y - y_hat)
    }
}

/// Mean squared error: `(1/n)·Σ(yᵢ−ŷᵢ)²`.
pub fn mse(s: &SeriesPair) -> f64 {
    s.residuals().map(|r| r * r).sum::<f64>() / s.n() as f64
}

/// Root mean squared error with 1/n outside the radical: `√(Σ(yᵢ−ŷᵢ)²)/n`.
pub fn rmse_paper(s: &SeriesPair) -> f64 {
    s.residuals().map(|r| r * r).sum::<f64>().sqrt() / s.n() as f64
}

/// Conventional root mean squared error: `√mse`.
pub fn rmse_standard(s: &SeriesPair) -> f64 {
    mse(s).sqrt()
}

/// Mean absolute error: `(1/n)·Σ|yᵢ−ŷᵢ|`.
pub fn mae(s: &SeriesPair) -> f64 {
    s.residuals().map(f64::abs).sum::<f64>() / s.n() as f64
}

/// Mean absolute percentage error: `(1/n)·Σ|(yᵢ−ŷᵢ)/yᵢ|·100`.
///
/// Undefined when any actual value is zero; such series are refused rather
/// than silently skipped, since skipping would misstate n.
pub fn mape(s: &SeriesPair) -> Result<f64> {
    if let Some(index) = s.actual.iter().position(|&y| y == 0.0) {
        return Err(Error::ZeroActual { index });
    }
    let sum: f64 = s
        .actual
        .iter()
        .zip(&s.forecast)
        .map(|(y, y_hat)| ((y - y_hat) / y).abs())
        .sum();
    Ok(sum / s.n() as f64 * 100.0)
}

/// All five criteria for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport {
    pub mse: f64,
    pub rmse_paper: f64,
    pub rmse_standard: f64,
    pub mae: f64,
    pub mape_pct: f64,
}

impl MetricsReport {
    /// CSV emitter: header `metric,value`, six decimal places.
    pub fn to_csv(&self) -> String {
        format!(
            "metric,value\nmse,{:.6}\nrmse_paper,{:.6}\nrmse_standard,{:.6}\nmae,{:.6}\nmape_pct,{:.6}\n",
            self.mse, self.rmse_paper, self.rmse_standard, self.mae, self.mape_pct
        )
    }
}

/// Assemble all five criteria from one series pair.
pub fn compute_report(s: &SeriesPair) -> Result<MetricsReport> {
    Ok(MetricsReport {
        mse: mse(s),
        rmse_paper: rmse_paper(s),
        rmse_standard: rmse_standard(s),
        mae: mae(s),
        mape_pct: mape(s)?,
    })
}
