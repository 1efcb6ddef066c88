//! Isotropic Miller barrier `v_α = r^α P_α(cos θ)` and the boundary operators
//! `M₁`, `M₂` evaluated on it.
//!
//! On the lateral boundary `Dv_α = r^{α-1}(α F e_r + F' e_θ)` with `e_θ = -ν`
//! and `τ = -e_r`, so every operator below reduces to a coefficient times
//! `r^{α-1}`. The functions return that coefficient.

use nalgebra::{Matrix2, SymmetricEigen};

use crate::error::{Error, Result};
use crate::exponent::{AxisymmetricReduction, ConeGeometry, Ellipticity, ObliqueBC};
use crate::roots::{bisect, sign_scan};
use crate::special::{legendre_p, legendre_p1};

/// Points used to certify the barrier invariants on `[0, θ₀]`.
pub const BARRIER_CHECK_POINTS: usize = 500;

/// Step of the one-sided difference for `F'(0)`.
pub const AXIS_FD_STEP: f64 = 1e-3;

/// Tolerance on the one-sided difference `F'(0)`.
pub const AXIS_SLOPE_TOL: f64 = 1e-8;

/// Smallest tilt tried by [`max_admissible_tilt`].
pub const TILT_FLOOR: f64 = 1e-6;

const ALPHA0_SCAN_POINTS: usize = 200;
const ALPHA0_XTOL: f64 = 1e-10;

/// Smallest `α ∈ (0, 1]` with `P_α(cos θ₀) = 0`, or 1 when there is none.
pub fn alpha0(geom: &ConeGeometry) -> Result<f64> {
    let z = geom.theta0().cos();
    let f = |a: f64| legendre_p(a, z);
    let scan = sign_scan(f, 0.0, 1.0, ALPHA0_SCAN_POINTS)?;
    match scan.first() {
        Some((a, b)) if a == b => Ok(a),
        Some((a, b)) => bisect(f, a, b, ALPHA0_XTOL),
        None => Ok(1.0),
    }
}

/// Barrier `v_α = r^α F_α(θ)` with `F_α = P_α(cos θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MillerBarrier {
    alpha: f64,
    theta0: f64,
    alpha0: f64,
    cstar: f64,
}

impl MillerBarrier {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    /// `c* = F_α(θ₀)`.
    pub fn cstar(&self) -> f64 {
        self.cstar
    }

    pub fn profile(&self, theta: f64) -> Result<f64> {
        legendre_p(self.alpha, theta.cos())
    }

    /// `F'_α(θ) = P¹_α(cos θ)`.
    pub fn profile_derivative(&self, theta: f64) -> Result<f64> {
        legendre_p1(self.alpha, theta.cos())
    }

    pub fn value(&self, r: f64, theta: f64) -> Result<f64> {
        Ok(r.powf(self.alpha) * self.profile(theta)?)
    }

    /// Value at `(y₁, y₂)`; the angle is measured from the `y₁` axis.
    pub fn value_at(&self, y: [f64; 2]) -> Result<f64> {
        self.value(y[0].hypot(y[1]), y[1].atan2(y[0]))
    }

    /// `(∂_{y₁}v, ∂_{y₂}v)` at `(r, θ)`.
    pub fn gradient(&self, r: f64, theta: f64) -> Result<[f64; 2]> {
        let (st, ct) = theta.sin_cos();
        let f = self.profile(theta)?;
        let df = self.profile_derivative(theta)?;
        let k = r.powf(self.alpha - 1.0);
        Ok([
            k * (self.alpha * f * ct - df * st),
            k * (self.alpha * f * st + df * ct),
        ])
    }
}

/// Builds the barrier and certifies `c* ≤ F ≤ 1`, `F' < 0` on `(0, θ₀]`,
/// `F(0) = 1` and `F'(0) = 0` on a uniform grid.
pub fn build_barrier(geom: &ConeGeometry, alpha: f64) -> Result<MillerBarrier> {
    let a0 = alpha0(geom)?;
    if !(alpha > 0.0 && alpha < a0) {
        return Err(Error::InvalidAlpha(format!("α = {alpha} outside (0, α₀ = {a0})")));
    }
    let theta0 = geom.theta0();
    let cstar = legendre_p(alpha, theta0.cos())?;
    let barrier = MillerBarrier {
        alpha,
        theta0,
        alpha0: a0,
        cstar,
    };
    if !(cstar > 0.0 && cstar < 1.0) {
        return Err(Error::InvalidAlpha(format!("c* = {cstar} not in (0, 1)")));
    }
    if barrier.profile(0.0)? != 1.0 {
        return Err(Error::InvalidAlpha("F(0) ≠ 1".into()));
    }
    let h = AXIS_FD_STEP;
    let slope0 = (-3.0 * barrier.profile(0.0)? + 4.0 * barrier.profile(h)? - barrier.profile(2.0 * h)?)
        / (2.0 * h);
    if slope0.abs() > AXIS_SLOPE_TOL {
        return Err(Error::InvalidAlpha(format!("F'(0) ≈ {slope0:e} is not zero")));
    }
    let n = BARRIER_CHECK_POINTS;
    let mut prev = 1.0;
    for i in 1..n {
        let theta = theta0 * i as f64 / (n - 1) as f64;
        let f = barrier.profile(theta)?;
        let df = barrier.profile_derivative(theta)?;
        if !(df < 0.0) {
            return Err(Error::InvalidAlpha(format!("F'({theta}) = {df:e} is not negative")));
        }
        if !(f < prev && f >= cstar && f <= 1.0) {
            return Err(Error::InvalidAlpha(format!(
                "F({theta}) = {f} breaks monotonicity or the bounds [c*, 1]"
            )));
        }
        prev = f;
    }
    Ok(barrier)
}

/// Coefficients after the change of variables `z = J y`,
/// `J = [[β₁, β₂], [ν₂, -ν₁]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedCoefficients {
    pub atilde: Matrix2<f64>,
    pub obliqueness: f64,
    pub b021: f64,
}

/// `ã = J a₀ Jᵀ`, with the ellipticity bracket `λ ≤ ã¹¹, ã²² ≤ Λ` asserted.
pub fn rotate_coefficients(
    a0: &Matrix2<f64>,
    b021: f64,
    bounds: Ellipticity,
    bc: &ObliqueBC,
) -> Result<RotatedCoefficients> {
    if (a0[(0, 1)] - a0[(1, 0)]).abs() > 1e-12 * a0.amax().max(1.0) {
        return Err(Error::InvalidOperator("a₀ is not symmetric".into()));
    }
    let slack = 1e-12 * bounds.cap;
    let eig = SymmetricEigen::new(*a0).eigenvalues;
    if eig.min() < bounds.lambda - slack || eig.max() > bounds.cap + slack {
        return Err(Error::InvalidOperator(format!(
            "spectrum of a₀ [{}, {}] outside [{}, {}]",
            eig.min(),
            eig.max(),
            bounds.lambda,
            bounds.cap
        )));
    }
    if !(b021.is_finite() && b021 > 0.0) {
        return Err(Error::InvalidOperator(format!("b^{{2,1}} = {b021} must be positive")));
    }
    let (beta, nu) = (bc.beta(), bc.nu());
    let j = Matrix2::new(beta.x, beta.y, nu.y, -nu.x);
    let atilde = j * a0 * j.transpose();
    for (name, v) in [("ã¹¹", atilde[(0, 0)]), ("ã²²", atilde[(1, 1)])] {
        if v < bounds.lambda - slack || v > bounds.cap + slack {
            return Err(Error::InvalidOperator(format!(
                "{name} = {v} outside [{}, {}]",
                bounds.lambda, bounds.cap
            )));
        }
    }
    Ok(RotatedCoefficients {
        atilde,
        obliqueness: bc.obliqueness(),
        b021,
    })
}

impl RotatedCoefficients {
    /// Rotated coefficients of a reduced operator.
    pub fn from_reduction(
        red: &AxisymmetricReduction,
        bounds: Ellipticity,
        bc: &ObliqueBC,
    ) -> Result<Self> {
        rotate_coefficients(&red.a0, red.b021, bounds, bc)
    }

    /// The Laplacian in `ℝ³`: `a₀ = I`, `b₀^{2,1} = 1`.
    pub fn laplacian(bc: &ObliqueBC) -> Result<Self> {
        rotate_coefficients(&Matrix2::identity(), 1.0, Ellipticity::new(1.0, 1.0)?, bc)
    }
}

fn check_frame(barrier: &MillerBarrier, bc: &ObliqueBC) -> Result<()> {
    let nu = bc.nu();
    let (st, ct) = barrier.theta0.sin_cos();
    if (nu.x - st).abs() > 1e-14 || (nu.y + ct).abs() > 1e-14 {
        return Err(Error::InvalidGeometry(
            "barrier and boundary condition refer to different cones".into(),
        ));
    }
    Ok(())
}

/// `r^{1-α} M₁v_α` on the lateral boundary.
pub fn m1_coefficient(barrier: &MillerBarrier, bc: &ObliqueBC, rc: &RotatedCoefficients) -> Result<f64> {
    tilted_coefficient(barrier, bc, rc, 0.0)
}

/// `r^{1-α} M₂v_α` on the lateral boundary for the given tilt.
pub fn m2_coefficient(
    barrier: &MillerBarrier,
    bc: &ObliqueBC,
    rc: &RotatedCoefficients,
    tilt: f64,
) -> Result<f64> {
    let (beta, nu) = (bc.beta(), bc.nu());
    if !(tilt >= 0.0 && tilt.is_finite()) {
        return Err(Error::InvalidTilt(format!("tilt {tilt} must be finite and ≥ 0")));
    }
    if !(nu.x + tilt * nu.y > 0.0) {
        return Err(Error::InvalidTilt(format!("ν₁ + tilt·ν₂ ≤ 0 at tilt {tilt}")));
    }
    if beta.y != 0.0 && (beta.y - tilt * beta.x).signum() != beta.y.signum() {
        return Err(Error::InvalidTilt(format!("β₂ - tilt·β₁ changes sign at tilt {tilt}")));
    }
    tilted_coefficient(barrier, bc, rc, tilt)
}

fn tilted_coefficient(
    barrier: &MillerBarrier,
    bc: &ObliqueBC,
    rc: &RotatedCoefficients,
    tilt: f64,
) -> Result<f64> {
    check_frame(barrier, bc)?;
    let (beta, nu, tau) = (bc.beta(), bc.nu(), bc.tau());
    if beta.y == 0.0 {
        return Err(Error::DegenerateBc("β₂ = 0".into()));
    }
    let eps = bc.obliqueness();
    let alpha = barrier.alpha;
    let f = barrier.cstar;
    let df = barrier.profile_derivative(barrier.theta0)?;
    let num = nu.x + tilt * nu.y;
    let den = beta.y - tilt * beta.x;
    let (a11, a22) = (rc.atilde[(0, 0)], rc.atilde[(1, 1)]);
    // y₂ = r ν₁ on the boundary, so the singular term is r^{α-1}(…)/ν₁
    Ok(f * (-alpha * beta.dot(&tau) - alpha * (num / den) * a22 / a11)
        - eps * df
        - (num / nu.x) * (beta.x / den) * (rc.b021 / a11) * f / eps)
}

/// Largest tilt `2^{-k}`, `k = 0..19`, then `10⁻⁶`, for which the tilt
/// preconditions hold and `M₂v_α < 0`.
pub fn max_admissible_tilt(
    bc: &ObliqueBC,
    barrier: &MillerBarrier,
    rc: &RotatedCoefficients,
) -> Result<f64> {
    if !(m1_coefficient(barrier, bc, rc)? < 0.0) {
        return Err(Error::NoAdmissibleTilt { floor: TILT_FLOOR });
    }
    let candidates = (0..20).map(|k| 0.5f64.powi(k)).chain(std::iter::once(TILT_FLOOR));
    for t in candidates {
        match m2_coefficient(barrier, bc, rc, t) {
            Ok(c) if c < 0.0 => return Ok(t),
            Ok(_) | Err(Error::InvalidTilt(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoAdmissibleTilt { floor: TILT_FLOOR })
}
