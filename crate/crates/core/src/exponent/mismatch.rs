use crate::error::{Error, Result};
use crate::roots::{bisect, sign_scan};
use crate::special::{legendre_p, legendre_p1};

use super::geometry::{ConeGeometry, ObliqueBC, THETA0_MAX};

/// Lower end of the root window; excludes the trivial root at `α = 0`.
pub const ALPHA_MIN: f64 = 1e-3;

/// Number of uniformly spaced degrees in the sign scan.
pub const SCAN_POINTS: usize = 2000;

/// Bisection tolerance in the degree.
pub const ROOT_XTOL: f64 = 1e-12;

/// Accepted `|W(θ₀, 1)|` when `α = 1` itself is reported as the Neumann root.
pub const ENDPOINT_ZERO_TOL: f64 = 1e-12;

fn check_angle(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta <= THETA0_MAX) {
        return Err(Error::Domain(format!("polar angle {theta} outside (0, π - 0.045]")));
    }
    Ok(())
}

fn check_alpha(alpha: f64, hi: f64) -> Result<()> {
    if !(alpha >= 0.0 && alpha <= hi) {
        return Err(Error::Domain(format!("degree {alpha} outside [0, {hi}]")));
    }
    Ok(())
}

/// `r^{1-α} ∂u_α/∂y₁` for `u_α = r^α P_α(cos θ)`.
pub fn u1(theta: f64, alpha: f64) -> Result<f64> {
    check_angle(theta)?;
    check_alpha(alpha, 2.0)?;
    let c = theta.cos();
    let p = legendre_p(alpha, c)?;
    let p_next = legendre_p(alpha + 1.0, c)?;
    Ok((2.0 * alpha + 1.0) * c * p - (alpha + 1.0) * p_next)
}

/// `r^{1-α} ∂u_α/∂y₂` for `u_α = r^α P_α(cos θ)`.
pub fn u2(theta: f64, alpha: f64) -> Result<f64> {
    check_angle(theta)?;
    check_alpha(alpha, 2.0)?;
    let (s, c) = theta.sin_cos();
    let cot = c / s;
    let p = legendre_p(alpha, c)?;
    let p_next = legendre_p(alpha + 1.0, c)?;
    Ok(s * (alpha - (alpha + 1.0) * cot * cot) * p + (alpha + 1.0) * cot * p_next)
}

/// `B(θ₀, α, s) = cos s U₁(θ₀, α) + sin s U₂(θ₀, α)`.
pub fn boundary_mismatch(geom: &ConeGeometry, alpha: f64, s: f64) -> Result<f64> {
    let bc = ObliqueBC::new(geom, s)?;
    mismatch_for(geom, &bc, alpha)
}

fn mismatch_for(geom: &ConeGeometry, bc: &ObliqueBC, alpha: f64) -> Result<f64> {
    check_alpha(alpha, 1.0)?;
    let beta = bc.beta();
    let t = geom.theta0();
    Ok(beta.x * u1(t, alpha)? + beta.y * u2(t, alpha)?)
}

/// `V(θ₀, s) = ∂B/∂α` at `α = 0`.
pub fn slope_at_zero(geom: &ConeGeometry, s: f64) -> Result<f64> {
    let (lo, hi) = geom.admissible_s_range();
    // closed endpoints are allowed: V is analytic there and the endpoint values are used as checks
    if !(s >= lo && s <= hi) {
        return Err(Error::InadmissibleBc(format!("s = {s} outside [{lo}, {hi}]")));
    }
    Ok(slope(geom.theta0(), s))
}

fn slope(theta0: f64, s: f64) -> f64 {
    let (st, ct) = theta0.sin_cos();
    s.cos() + s.sin() * (1.0 - ct) / st
}

/// Root `s₀(θ₀)` of `V(θ₀, ·)` on the admissible window.
pub fn critical_angle_s0(geom: &ConeGeometry) -> Result<f64> {
    let (lo, _) = geom.admissible_s_range();
    // V(-π + θ₀) = -1 and V(0) = 1
    let t = geom.theta0();
    bisect(|s| Ok(slope(t, s)), lo, 0.0, 1e-14)
}

/// Outcome of the sign scan of `α ↦ B(θ₀, α, s)` on `[α_min, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentSearch {
    /// Smallest certified root, if any.
    pub alpha: Option<f64>,
    /// `B` at the reported root.
    pub residual: Option<f64>,
    /// Number of sign changes seen by the scan.
    pub sign_changes: usize,
}

pub fn scan_critical_exponent(geom: &ConeGeometry, bc: &ObliqueBC) -> Result<ExponentSearch> {
    let f = |a: f64| mismatch_for(geom, bc, a);
    let scan = sign_scan(f, ALPHA_MIN, 1.0, SCAN_POINTS)?;
    let Some((a, b)) = scan.first() else {
        return Ok(ExponentSearch {
            alpha: None,
            residual: None,
            sign_changes: 0,
        });
    };
    let root = if a == b { a } else { bisect(f, a, b, ROOT_XTOL)? };
    Ok(ExponentSearch {
        alpha: Some(root),
        residual: Some(f(root)?),
        sign_changes: scan.count(),
    })
}

/// Smallest `α ∈ (α_min, 1)` with `B(θ₀, α, s) = 0`, or `None` when the scan
/// sees no sign change.
pub fn critical_exponent(geom: &ConeGeometry, bc: &ObliqueBC) -> Result<Option<f64>> {
    Ok(scan_critical_exponent(geom, bc)?.alpha)
}

/// `W(θ₀, α) = (P¹_α)'(cos θ₀)`, which vanishes exactly when
/// `r^α P¹_α(cos θ) cos φ` has zero normal derivative on the lateral boundary.
pub fn neumann_mismatch(geom: &ConeGeometry, alpha: f64) -> Result<f64> {
    check_alpha(alpha, 1.0)?;
    let (st, z) = geom.theta0().sin_cos();
    let p1 = legendre_p1(alpha, z)?;
    let p1_next = legendre_p1(alpha + 1.0, z)?;
    Ok((-alpha * p1_next + (alpha + 1.0) * z * p1) / (st * st))
}

/// Smallest root of `W(θ₀, ·)` on `(α_min, 1]`.
pub fn neumann_exponent(geom: &ConeGeometry) -> Result<f64> {
    let f = |a: f64| neumann_mismatch(geom, a);
    let scan = sign_scan(f, ALPHA_MIN, 1.0, SCAN_POINTS)?;
    match scan.first() {
        Some((a, b)) if a == b => Ok(a),
        Some((a, b)) => bisect(f, a, b, ROOT_XTOL),
        None => {
            let w1 = f(1.0)?;
            if w1.abs() <= ENDPOINT_ZERO_TOL {
                Ok(1.0)
            } else {
                Err(Error::Bracket(format!(
                    "W(θ₀ = {}, ·) keeps one sign on [{ALPHA_MIN}, 1], W(1) = {w1:e}",
                    geom.theta0()
                )))
            }
        }
    }
}
