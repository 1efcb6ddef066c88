use super::grid::DiscreteField;
use crate::error::{Error, Result};

/// Fewest samples accepted by the log-log fit.
pub const MIN_FIT_SAMPLES: usize = 10;

/// Samples with `|u|` below this fraction of the window maximum count as zeros.
pub const NEAR_ZERO_FRACTION: f64 = 1e-10;

/// Least-squares line `log|u| ≈ α̂ log r + c`.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub alpha: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the line in `log|u|`.
    pub rms_residual: f64,
    pub samples: usize,
}

/// Fits the homogeneity degree along the ray `θ` (a grid node) on the
/// nodes with `r ∈ [r_lo, r_hi]`.
pub fn fit_exponent(field: &DiscreteField, theta: f64, window: (f64, f64)) -> Result<FitReport> {
    let grid = field.grid();
    let j = grid
        .theta_index(theta)
        .ok_or_else(|| Error::DegenerateFit(format!("θ = {theta} is not a grid ray")))?;
    let (lo, hi) = window;
    let pts: Vec<(f64, f64)> = grid
        .r()
        .iter()
        .enumerate()
        .filter(|(_, &r)| r >= lo && r <= hi)
        .map(|(i, &r)| (r, field.get(i, j)))
        .collect();
    fit_points(&pts)
}

/// Fits the degree of `f` from `n` log-spaced radii in `[r_lo, r_hi]`.
pub fn fit_exponent_fn<F>(mut f: F, window: (f64, f64), n: usize) -> Result<FitReport>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (lo, hi) = window;
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::DegenerateFit(format!("window ({lo}, {hi}) is empty")));
    }
    let step = (hi / lo).ln() / (n.max(2) - 1) as f64;
    let pts = (0..n)
        .map(|k| {
            let r = lo * (step * k as f64).exp();
            Ok((r, f(r)?))
        })
        .collect::<Result<Vec<_>>>()?;
    fit_points(&pts)
}

fn fit_points(pts: &[(f64, f64)]) -> Result<FitReport> {
    if pts.len() < MIN_FIT_SAMPLES {
        return Err(Error::DegenerateFit(format!(
            "{} samples in the window, need {MIN_FIT_SAMPLES}",
            pts.len()
        )));
    }
    let scale = pts.iter().fold(0.0_f64, |m, p| m.max(p.1.abs()));
    if pts.iter().any(|p| !(p.1.abs() > NEAR_ZERO_FRACTION * scale)) {
        return Err(Error::DegenerateFit("field vanishes in the window".into()));
    }
    if pts.iter().any(|p| p.1.signum() != pts[0].1.signum()) {
        return Err(Error::DegenerateFit("field changes sign in the window".into()));
    }
    let n = pts.len() as f64;
    let xs: Vec<f64> = pts.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.1.abs().ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if !(sxx > 0.0) {
        return Err(Error::DegenerateFit("all samples at one radius".into()));
    }
    let alpha = sxy / sxx;
    let intercept = my - alpha * mx;
    let ss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - alpha * x).powi(2))
        .sum();
    Ok(FitReport {
        alpha,
        intercept,
        rms_residual: (ss / n).sqrt(),
        samples: pts.len(),
    })
}
