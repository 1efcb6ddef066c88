//! Legendre functions of real degree on the cut (-1, 1].
//!
//! `P_α(z)` is evaluated from the Gauss hypergeometric representation
//! `₂F₁(-α, α+1; 1; (1-z)/2)` on `z ≥ 0`. For `z < 0` that series converges
//! like `x^k / k` with `x → 1`, so the kernel switches to the logarithmic
//! connection series in `w = (1+z)/2`, which converges at least like `2^-k`.
//! Order-one functions and derivatives are derived from `P_α` through the
//! standard identities, so there is a single evaluation path.

use statrs::function::gamma::digamma;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Distance from `z = -1` below which arguments are rejected.
pub const Z_CUTOFF: f64 = 1e-3;

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 20_000;

/// Default step for finite-difference degree derivatives.
pub const DEFAULT_DEGREE_STEP: f64 = 1e-5;

const SERIES_REL_TOL: f64 = 1e-16;

/// A validated `(α, z, m)` triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreQuery {
    pub degree: f64,
    pub argument: f64,
    pub order: u32,
}

impl LegendreQuery {
    pub fn new(degree: f64, argument: f64, order: u32) -> Result<Self> {
        check_degree(degree)?;
        check_argument(argument)?;
        if order > 1 {
            return Err(Error::Domain(format!("order m = {order} not in {{0, 1}}")));
        }
        Ok(Self {
            degree,
            argument,
            order,
        })
    }

    pub fn evaluate(&self) -> Result<f64> {
        match self.order {
            0 => legendre_p(self.degree, self.argument),
            _ => legendre_p1(self.degree, self.argument),
        }
    }
}

fn check_degree(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha < -1.0 {
        return Err(Error::Domain(format!("degree {alpha} must be finite and ≥ -1")));
    }
    Ok(())
}

fn check_argument(z: f64) -> Result<()> {
    if !z.is_finite() || z <= -1.0 + Z_CUTOFF || z > 1.0 {
        return Err(Error::Domain(format!(
            "argument {z} outside (-1 + {Z_CUTOFF}, 1]"
        )));
    }
    Ok(())
}

/// `sin(πx)` with the argument reduced to `[-1/2, 1/2]` first, so that the
/// result keeps full relative accuracy near integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let f = x - n;
    let s = (PI * f).sin();
    if n.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

pub(crate) fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let f = x - n;
    let c = (PI * f).cos();
    if n.rem_euclid(2.0) == 0.0 {
        c
    } else {
        -c
    }
}

/// Legendre function `P_α(z)` of real degree `α ≥ -1`.
pub fn legendre_p(alpha: f64, z: f64) -> Result<f64> {
    check_degree(alpha)?;
    check_argument(z)?;
    // P_{-α-1} = P_α keeps every digamma argument below at or above 1/2.
    let a = if alpha < -0.5 { -alpha - 1.0 } else { alpha };
    if z >= 0.0 {
        series_about_one(a, z)
    } else {
        series_about_minus_one(a, z)
    }
}

/// `₂F₁(-a, a+1; 1; (1-z)/2)`.
fn series_about_one(a: f64, z: f64) -> Result<f64> {
    let x = 0.5 * (1.0 - z);
    if x == 0.0 {
        return Ok(1.0);
    }
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut scale = 1.0_f64;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (kf - a) * (kf + a + 1.0) / ((kf + 1.0) * (kf + 1.0)) * x;
        sum += term;
        scale = scale.max(term.abs());
        // Early terms may grow while k < a; only test once the ratio is below x.
        if kf + 1.0 > a && term.abs() <= SERIES_REL_TOL * sum.abs().max(scale * 1e-3) {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_TERMS,
        last_term: term,
    })
}

/// Logarithmic connection series about `z = -1`:
///
/// ```text
/// P_a(z) = Σ_k c_k w^k T_k,   w = (1+z)/2,   c_k = (-a)_k (a+1)_k / (k!)²
/// T_k    = -(sin πa / π) [2ψ(k+1) - ψ(k-a) - ψ(k+a+1) - ln w]
/// ```
///
/// For `k - a ≤ 1/2` the reflection `ψ(k-a) = ψ(1+a-k) + π cot πa` is applied
/// analytically, which turns the pole of `ψ` into the finite `cos πa` term.
fn series_about_minus_one(a: f64, z: f64) -> Result<f64> {
    let w = 0.5 * (1.0 + z);
    let ln_w = w.ln();
    let sin_a = sin_pi(a) / PI;
    let cos_a = cos_pi(a);

    let mut coeff = 1.0_f64; // c_k w^k
    let mut sum = 0.0_f64;
    let mut scale = 0.0_f64;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let bracket_common = 2.0 * digamma(kf + 1.0) - digamma(kf + a + 1.0) - ln_w;
        let t = if kf - a <= 0.5 {
            -sin_a * (bracket_common - digamma(1.0 + a - kf)) + cos_a
        } else if coeff == 0.0 {
            0.0
        } else {
            -sin_a * (bracket_common - digamma(kf - a))
        };
        let term = coeff * t;
        sum += term;
        scale = scale.max(term.abs());
        if kf > a + 1.0
            && (coeff == 0.0 || term.abs() <= SERIES_REL_TOL * sum.abs().max(scale * 1e-3))
        {
            return Ok(sum);
        }
        coeff *= (kf - a) * (kf + a + 1.0) / ((kf + 1.0) * (kf + 1.0)) * w;
    }
    Err(Error::NonConvergence {
        terms: MAX_TERMS,
        last_term: coeff,
    })
}

/// `dP_α/dz` from `P'_α(z) = (α+1)(z P_α(z) - P_{α+1}(z)) / (1 - z²)`.
pub fn legendre_dp_dz(alpha: f64, z: f64) -> Result<f64> {
    check_degree(alpha)?;
    check_argument(z)?;
    if z == 1.0 {
        return Err(Error::Domain("dP/dz identity is singular at z = 1".into()));
    }
    let p = legendre_p(alpha, z)?;
    let p_next = legendre_p(alpha + 1.0, z)?;
    Ok((alpha + 1.0) * (z * p - p_next) / (1.0 - z * z))
}

/// Associated Legendre function of order one, `P¹_α(z) = -(1-z²)^{1/2} P'_α(z)`.
///
/// Returns 0 on the axis `z = 1`, the continuous extension.
pub fn legendre_p1(alpha: f64, z: f64) -> Result<f64> {
    check_degree(alpha)?;
    check_argument(z)?;
    if z == 1.0 {
        return Ok(0.0);
    }
    Ok(-(1.0 - z * z).sqrt() * legendre_dp_dz(alpha, z)?)
}

/// `dP¹_α/dz` from `(1-z²) P¹'_α(z) = -α P¹_{α+1}(z) + (α+1) z P¹_α(z)`.
pub fn legendre_dp1_dz(alpha: f64, z: f64) -> Result<f64> {
    check_degree(alpha)?;
    check_argument(z)?;
    if z == 1.0 {
        return Err(Error::Domain("dP¹/dz is unbounded at z = 1".into()));
    }
    let p1 = legendre_p1(alpha, z)?;
    let p1_next = legendre_p1(alpha + 1.0, z)?;
    Ok((-alpha * p1_next + (alpha + 1.0) * z * p1) / (1.0 - z * z))
}

/// Central difference `(P_{α+h}(z) - P_{α-h}(z)) / 2h` in the degree.
pub fn legendre_dp_dalpha(alpha: f64, z: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain(format!("degree step {h} must be positive")));
    }
    if alpha - h < -1.0 {
        return Err(Error::Domain(format!(
            "degree step leaves the domain: α - h = {} < -1",
            alpha - h
        )));
    }
    let plus = legendre_p(alpha + h, z)?;
    let minus = legendre_p(alpha - h, z)?;
    Ok((plus - minus) / (2.0 * h))
}
