//! Monthly electric energy consumption forecasting.
//!
//! `enercast` ingests historical monthly consumption records together with
//! exogenous factors (mean atmospheric temperature, mean relative humidity,
//! population, GDP per capita), trains a small feedforward neural network by
//! seeded stochastic gradient descent, validates it with 2-fold and k-fold
//! cross validation, scores forecasts with four error criteria (MSE, RMSE,
//! MAE, MAPE), and emits 12-month-and-beyond forecasts plus plot-ready CSV.
//!
//! Everything is deterministic: identical inputs and seeds produce
//! byte-identical output files.

pub mod ann;
pub mod dataset;
pub mod error;
pub mod fixtures;
pub mod metrics;
pub mod model_io;
pub mod pipeline;
pub mod validation;

pub use error::{Error, Result};
