//! Bracketing root finders used by the exponent and barrier modules.

use crate::error::{Error, Result};

/// Bisection on `[lo, hi]`, which must bracket a sign change.
///
/// Stops once the bracket is narrower than `xtol` or the midpoint no longer
/// moves in floating point. Returns the midpoint of the final bracket, or an
/// endpoint if `f` vanishes there exactly.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket(format!(
            "f({lo}) = {f_lo:e} and f({hi}) = {f_hi:e} have the same sign"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= xtol || mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Result of a uniform sign scan.
#[derive(Debug, Clone, PartialEq)]
pub struct SignScan {
    /// Brackets `(a, b)` of consecutive grid points across which `f` changes
    /// sign, in increasing order. An exact zero at a grid point `x` is
    /// reported as `(x, x)`.
    pub brackets: Vec<(f64, f64)>,
}

impl SignScan {
    pub fn first(&self) -> Option<(f64, f64)> {
        self.brackets.first().copied()
    }

    pub fn count(&self) -> usize {
        self.brackets.len()
    }
}

/// Evaluates `f` on `count` uniformly spaced points of `[lo, hi]` (both
/// endpoints included) and records every sign change.
pub fn sign_scan<F>(mut f: F, lo: f64, hi: f64, count: usize) -> Result<SignScan>
where
    F: FnMut(f64) -> Result<f64>,
{
    assert!(count >= 2, "sign scan needs at least two points");
    let step = (hi - lo) / (count - 1) as f64;
    let mut brackets = Vec::new();
    let mut prev_x = lo;
    let mut prev_f = f(lo)?;
    if prev_f == 0.0 {
        brackets.push((lo, lo));
    }
    for i in 1..count {
        let x = if i == count - 1 { hi } else { lo + step * i as f64 };
        let fx = f(x)?;
        if fx == 0.0 {
            brackets.push((x, x));
        } else if prev_f != 0.0 && fx.signum() != prev_f.signum() {
            brackets.push((prev_x, x));
        }
        prev_x = x;
        prev_f = fx;
    }
    Ok(SignScan { brackets })
}
