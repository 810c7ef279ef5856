//! Exact coefficients against their leading-order singularity-analysis
//! predictions at the dominant singularity `z = 1/3`:
//!
//! * closed paths: `[zⁿ] ~ (3√3/8) · 3ⁿ / (√π · n^{3/2})`
//! * single up-runs, summed over closed paths: `[zⁿ] ~ (√3/36) · 3ⁿ / √(πn)`
//! * their quotient, the mean: `~ 2n/27`
//!
//! Predictions are evaluated in log space; `3ⁿ` leaves the `f64` range
//! near `n = 640`.

use std::f64::consts::PI;

use crate::closedforms::{self, ClosedFormError};
use crate::fps::{Coefficient, Rational, Series};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AsymptoticError {
    #[error("series computed to order {order}, coefficient {n} requested")]
    OrderTooSmall { n: usize, order: usize },
    #[error("mean is undefined for n = {0}: need n >= 2")]
    TooShort(usize),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}

/// Radicand `1 − 2z − 3z² = (1 − 3z)(1 + z)`.
pub fn radicand(z: &Rational) -> Rational {
    let one = Rational::one();
    let two = Rational::from(2);
    let three = Rational::from(3);
    &(&one - &(&two * z)) - &(&three * &(z * z))
}

pub fn dominant_singularity() -> Rational {
    Rational::new(1, 3)
}

/// Closed-path totals and single-up-run totals, exact to a fixed order.
#[derive(Clone, Debug)]
pub struct SeriesCache {
    pub total: Series<Rational>,
    pub weighted: Series<Rational>,
}

impl SeriesCache {
    pub fn new(order: usize) -> Result<Self, ClosedFormError> {
        Ok(SeriesCache {
            total: closedforms::phi0(order)?,
            weighted: closedforms::mean_numerator(order)?,
        })
    }

    pub fn order(&self) -> usize {
        self.total.order().min(self.weighted.order())
    }
}

pub fn ln_total_prediction(n: usize) -> f64 {
    let n = n as f64;
    (3.0 * 3f64.sqrt() / 8.0).ln() + n * 3f64.ln() - 0.5 * PI.ln() - 1.5 * n.ln()
}

pub fn ln_weighted_prediction(n: usize) -> f64 {
    let n = n as f64;
    (3f64.sqrt() / 36.0).ln() + n * 3f64.ln() - 0.5 * (PI * n).ln()
}

pub fn predicted_mean(n: usize) -> f64 {
    2.0 * n as f64 / 27.0
}

fn relative_error(exact: &Rational, ln_prediction: f64) -> f64 {
    if exact.is_zero() {
        return -1.0;
    }
    (exact.ln() - ln_prediction).exp_m1()
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    pub n: usize,
    pub exact_total: Rational,
    pub exact_weighted: Rational,
    /// `exact_weighted / exact_total`.
    pub mean: Rational,
    pub mean_decimal: String,
    pub predicted_mean: f64,
    pub ln_total_prediction: f64,
    pub ln_weighted_prediction: f64,
    /// Infinite once `3ⁿ` overflows; the log fields stay finite.
    pub total_prediction: f64,
    pub weighted_prediction: f64,
    pub mean_relative_error: f64,
    pub total_relative_error: f64,
    pub weighted_relative_error: f64,
}

pub fn report(n: usize, cache: &SeriesCache) -> Result<AsymptoticReport, AsymptoticError> {
    if n < 2 {
        return Err(AsymptoticError::TooShort(n));
    }
    if n > cache.order() {
        return Err(AsymptoticError::OrderTooSmall { n, order: cache.order() });
    }
    let exact_total = cache.total.coeff(n).clone();
    let exact_weighted = cache.weighted.coeff(n).clone();
    let mean = &exact_weighted / &exact_total;
    let predicted = predicted_mean(n);
    let ln_total = ln_total_prediction(n);
    let ln_weighted = ln_weighted_prediction(n);
    Ok(AsymptoticReport {
        n,
        mean_decimal: mean.to_decimal(12),
        mean_relative_error: mean.to_f64() / predicted - 1.0,
        total_relative_error: relative_error(&exact_total, ln_total),
        weighted_relative_error: relative_error(&exact_weighted, ln_weighted),
        exact_total,
        exact_weighted,
        mean,
        predicted_mean: predicted,
        ln_total_prediction: ln_total,
        ln_weighted_prediction: ln_weighted,
        total_prediction: ln_total.exp(),
        weighted_prediction: ln_weighted.exp(),
    })
}

pub fn trend(ns: &[usize], cache: &SeriesCache) -> Result<Vec<AsymptoticReport>, AsymptoticError> {
    ns.iter().map(|&n| report(n, cache)).collect()
}

/// Whether `|error|` strictly decreases along the reports.
pub fn errors_shrink(reports: &[AsymptoticReport], error: impl Fn(&AsymptoticReport) -> f64) -> bool {
    reports.windows(2).all(|w| error(&w[1]).abs() < error(&w[0]).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_point() {
        assert!(radicand(&dominant_singularity()).is_zero());
        assert!(radicand(&Rational::from(-1)).is_zero());
        assert_eq!(radicand(&Rational::zero()), Rational::one());
    }

    #[test]
    fn small_means() {
        let cache = SeriesCache::new(12).unwrap();
        assert_eq!(report(2, &cache).unwrap().mean, Rational::one());
        let r7 = report(7, &cache).unwrap();
        assert_eq!(r7.mean, Rational::new(25, 36));
        assert_eq!(r7.mean_decimal, "0.694444444444");
        assert_eq!(r7.exact_total, Rational::from(36));
    }

    #[test]
    fn bounds_are_checked() {
        let cache = SeriesCache::new(10).unwrap();
        assert_eq!(report(1, &cache).unwrap_err(), AsymptoticError::TooShort(1));
        assert_eq!(
            report(11, &cache).unwrap_err(),
            AsymptoticError::OrderTooSmall { n: 11, order: 10 }
        );
        assert!(trend(&[4, 11], &cache).is_err());
    }

    #[test]
    fn totals_vanish_only_at_length_one() {
        let cache = SeriesCache::new(60).unwrap();
        assert!(cache.total.coeff(1).is_zero());
        assert!((2..=60).all(|n| !cache.total.coeff(n).is_zero()));
    }

    #[test]
    fn log_space_matches_direct_evaluation() {
        let n = 50;
        let direct = 3.0 * 3f64.sqrt() / 8.0 * 3f64.powi(n as i32) / (PI.sqrt() * (n as f64).powf(1.5));
        assert!((ln_total_prediction(n).exp() / direct - 1.0).abs() < 1e-12);
        assert!(ln_total_prediction(700).is_finite());
    }
}
