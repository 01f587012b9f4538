//! Shared test helpers, chiefly the exact-rational metrics oracle.
//!
//! The oracle computes each error criterion by straight summation over
//! `BigRational` values parsed losslessly from decimal strings, independent
//! of the `f64` code paths under test. Square roots (irrational) are taken
//! once at the end in `f64`.

#![allow(dead_code)]

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};

/// Parse a plain decimal literal like `-113.5800` into an exact rational.
pub fn decimal_to_rational(text: &str) -> BigRational {
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    let numerator: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .expect("decimal literal");
    BigRational::new(BigInt::from(sign) * numerator, scale)
}

fn rationals(values: &[&str]) -> Vec<BigRational> {
    values.iter().map(|v| decimal_to_rational(v)).collect()
}

/// Exact residual sum of squares and n, from decimal strings.
fn sum_of_squares(actual: &[&str], forecast: &[&str]) -> (BigRational, usize) {
    assert_eq!(actual.len(), forecast.len());
    let (a, f) = (rationals(actual), rationals(forecast));
    let mut sum = BigRational::zero();
    for (y, y_hat) in a.iter().zip(&f) {
        let d = y - y_hat;
        sum += &d * &d;
    }
    (sum, actual.len())
}

/// Oracle MSE: exact `Σd²/n`, converted to f64 at the end.
pub fn oracle_mse(actual: &[&str], forecast: &[&str]) -> f64 {
    let (sum, n) = sum_of_squares(actual, forecast);
    (sum / BigRational::from(BigInt::from(n))).to_f64().unwrap()
}

/// Oracle RMSE with 1/n outside the radical: `√(Σd²)/n`.
pub fn oracle_rmse_paper(actual: &[&str], forecast: &[&str]) -> f64 {
    let (sum, n) = sum_of_squares(actual, forecast);
    sum.to_f64().unwrap().sqrt() / n as f64
}

/// Oracle conventional RMSE: `√(Σd²/n)`.
pub fn oracle_rmse_standard(actual: &[&str], forecast: &[&str]) -> f64 {
    oracle_mse(actual, forecast).sqrt()
}

/// Oracle MAE: exact `Σ|d|/n`.
pub fn oracle_mae(actual: &[&str], forecast: &[&str]) -> f64 {
    let (a, f) = (rationals(actual), rationals(forecast));
    assert_eq!(a.len(), f.len());
    let mut sum = BigRational::zero();
    for (y, y_hat) in a.iter().zip(&f) {
        sum += (y - y_hat).abs();
    }
    (sum / BigRational::from(BigInt::from(a.len())))
        .to_f64()
        .unwrap()
}

/// Oracle MAPE (%): exact `Σ|d/y|·100/n`.
pub fn oracle_mape(actual: &[&str], forecast: &[&str]) -> f64 {
    let (a, f) = (rationals(actual), rationals(forecast));
    assert_eq!(a.len(), f.len());
    let mut sum = BigRational::zero();
    for (y, y_hat) in a.iter().zip(&f) {
        assert!(!y.is_zero(), "oracle MAPE needs nonzero actuals");
        sum += ((y - y_hat) / y).abs();
    }
    (sum * BigRational::from(BigInt::from(100)) / BigRational::from(BigInt::from(a.len())))
        .to_f64()
        .unwrap()
}

/// Relative difference with the gradient-check denominator convention.
pub fn relative_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-8)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn decimal_parsing_is_exact() {
        let r = decimal_to_rational("113.5800");
        assert_eq!(r, BigRational::new(BigInt::from(1135800), BigInt::from(10000)));
        assert_eq!(decimal_to_rational("-2.5"), BigRational::new(BigInt::from(-5), BigInt::from(2)));
        assert_eq!(decimal_to_rational("7"), BigRational::from(BigInt::from(7)));
    }

    #[test]
    fn oracle_agrees_with_hand_arithmetic() {
        // actual [2,4], forecast [1,3]: unit errors everywhere.
        let a = ["2", "4"];
        let f = ["1", "3"];
        assert_eq!(oracle_mse(&a, &f), 1.0);
        assert_eq!(oracle_mae(&a, &f), 1.0);
        assert_eq!(oracle_rmse_standard(&a, &f), 1.0);
        // √2/2 from Σd²=2, n=2
        assert!((oracle_rmse_paper(&a, &f) - 2.0_f64.sqrt() / 2.0).abs() < 1e-15);
        // |1/2| + |1/4| over 2, in percent
        assert!((oracle_mape(&a, &f) - 37.5).abs() < 1e-15);
    }
}
