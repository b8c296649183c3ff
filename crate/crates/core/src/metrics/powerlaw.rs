use serde::{Deserialize, Serialize};

use crate::error::MetricsError;
use crate::metrics::DegreeHistogram;

/// What the fitted line describes on the logarithmic y axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FitMode {
    /// Number of vertices with degree exactly `d`.
    #[serde(rename = "raw")]
    RawCounts,
    /// Fraction of vertices with degree at least `d`.
    #[serde(rename = "ccdf")]
    Ccdf,
}

impl std::fmt::Display for FitMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FitMode::RawCounts => "raw",
            FitMode::Ccdf => "ccdf",
        })
    }
}

/// Least-squares line through `(log10 degree, log10 value)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub alpha: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub mode: FitMode,
    pub points_used: usize,
}

/// Fits `value ≈ 10^intercept · degree^alpha` over every positive degree
/// present in `h`. Degree 0 is skipped.
pub fn fit_power_law(h: &DegreeHistogram, mode: FitMode) -> Result<PowerLawFit, MetricsError> {
    let positive: Vec<(u32, u64)> = h.iter().filter(|&(d, c)| d > 0 && c > 0).collect();
    if positive.len() < 3 {
        return Err(MetricsError::TooFewPoints(positive.len()));
    }

    let points: Vec<(f64, f64)> = match mode {
        FitMode::RawCounts => positive
            .iter()
            .map(|&(d, c)| (f64::from(d).log10(), (c as f64).log10()))
            .collect(),
        FitMode::Ccdf => {
            let total = h.n_total() as f64;
            let mut at_least: u64 = positive.iter().map(|&(_, c)| c).sum();
            positive
                .iter()
                .map(|&(d, c)| {
                    let p = at_least as f64 / total;
                    at_least -= c;
                    (f64::from(d).log10(), p.log10())
                })
                .collect()
        }
    };

    let (alpha, intercept, r_squared) = least_squares(&points);
    Ok(PowerLawFit {
        alpha,
        intercept,
        r_squared,
        mode,
        points_used: points.len(),
    })
}

/// Slope, intercept and coefficient of determination. Requires at least two
/// distinct x values.
fn least_squares(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();

    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 {
        // Flat data lies exactly on the fitted horizontal line.
        1.0
    } else {
        (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0)
    };
    (slope, intercept, r_squared)
}
