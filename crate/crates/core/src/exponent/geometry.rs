use nalgebra::Vector2;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::Z_CUTOFF;

/// Largest admissible opening angle, `π - 0.045`.
pub const THETA0_MAX: f64 = PI - 0.045;

/// Circular cone `{0 < r < R, 0 ≤ θ < θ₀}` in `ℝⁿ`, axis along `x_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeGeometry {
    theta0: f64,
    radius: f64,
    dim: usize,
}

impl ConeGeometry {
    pub fn new(theta0: f64, radius: f64, dim: usize) -> Result<Self> {
        if !(theta0 > 0.0 && theta0 < THETA0_MAX) {
            return Err(Error::InvalidGeometry(format!(
                "opening angle {theta0} outside (0, π - 0.045)"
            )));
        }
        if theta0.cos() < -1.0 + Z_CUTOFF {
            return Err(Error::InvalidGeometry(format!(
                "cos θ₀ = {} below the Legendre cutoff",
                theta0.cos()
            )));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidGeometry(format!("radius {radius} must be positive")));
        }
        if dim < 3 {
            return Err(Error::InvalidGeometry(format!("dimension {dim} must be ≥ 3")));
        }
        Ok(Self {
            theta0,
            radius,
            dim,
        })
    }

    /// Unit cone in `ℝ³`.
    pub fn with_opening(theta0: f64) -> Result<Self> {
        Self::new(theta0, 1.0, 3)
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Open interval of inward-pointing oblique angles, `(-π + θ₀, θ₀)`.
    pub fn admissible_s_range(&self) -> (f64, f64) {
        (-PI + self.theta0, self.theta0)
    }

    /// Inward unit normal to the lateral boundary in `(y₁, y₂)`.
    pub fn inward_normal(&self) -> Vector2<f64> {
        Vector2::new(self.theta0.sin(), -self.theta0.cos())
    }

    /// Unit tangent `(ν₂, -ν₁)` to the lateral boundary, pointing at the vertex.
    pub fn tangent(&self) -> Vector2<f64> {
        let nu = self.inward_normal();
        Vector2::new(nu.y, -nu.x)
    }

    /// Point of the lateral boundary at distance `r` from the vertex.
    pub fn boundary_point(&self, r: f64) -> Vector2<f64> {
        Vector2::new(r * self.theta0.cos(), r * self.theta0.sin())
    }
}

/// Constant oblique vector `β₀ = (cos s, sin s)` on the lateral boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObliqueBC {
    s: f64,
    beta: Vector2<f64>,
    nu: Vector2<f64>,
    tau: Vector2<f64>,
    obliqueness: f64,
}

impl ObliqueBC {
    pub fn new(geom: &ConeGeometry, s: f64) -> Result<Self> {
        let (lo, hi) = geom.admissible_s_range();
        if !(s > lo && s < hi) {
            return Err(Error::InadmissibleBc(format!(
                "s = {s} outside ({lo}, {hi}) for θ₀ = {}",
                geom.theta0()
            )));
        }
        let beta = Vector2::new(s.cos(), s.sin());
        let nu = geom.inward_normal();
        let obliqueness = beta.dot(&nu);
        if !(obliqueness > 0.0) {
            return Err(Error::InadmissibleBc(format!(
                "β₀·ν = {obliqueness} is not positive"
            )));
        }
        Ok(Self {
            s,
            beta,
            nu,
            tau: geom.tangent(),
            obliqueness,
        })
    }

    /// Angle at fraction `t ∈ (0, 1)` of the admissible interval.
    pub fn from_fraction(geom: &ConeGeometry, t: f64) -> Result<Self> {
        let (lo, hi) = geom.admissible_s_range();
        Self::new(geom, lo + t * (hi - lo))
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn beta(&self) -> Vector2<f64> {
        self.beta
    }

    pub fn nu(&self) -> Vector2<f64> {
        self.nu
    }

    pub fn tau(&self) -> Vector2<f64> {
        self.tau
    }

    /// `ε = β₀·ν > 0`.
    pub fn obliqueness(&self) -> f64 {
        self.obliqueness
    }

    /// `cos s · sin s`, positive exactly in the barrier regime.
    pub fn quadrant_product(&self) -> f64 {
        self.beta.x * self.beta.y
    }
}
