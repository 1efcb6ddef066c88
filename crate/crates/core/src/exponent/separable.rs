use crate::error::{Error, Result};
use crate::special::{legendre_dp1_dz, legendre_p, legendre_p1};

use super::mismatch::{u1, u2};

/// Azimuthal dependence of a separable solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AzimuthalMode {
    /// `m = 0`, no dependence on `φ`.
    Axisymmetric,
    /// `m = 1` with factor `C sin φ + D cos φ`.
    FirstHarmonic { c: f64, d: f64 },
}

/// Harmonic function `r^α P^m_α(cos θ) Φ_m(φ)` in `ℝ³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableSolution {
    alpha: f64,
    mode: AzimuthalMode,
}

/// Spherical point `(r, θ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SphericalPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Self {
        Self { r, theta, phi }
    }

    /// Cartesian coordinates with the symmetry axis along the third component.
    pub fn to_cartesian(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [self.r * st * cp, self.r * st * sp, self.r * ct]
    }

    pub fn from_cartesian(x: [f64; 3]) -> Self {
        let rho = x[0].hypot(x[1]);
        Self {
            r: rho.hypot(x[2]),
            theta: rho.atan2(x[2]),
            phi: x[1].atan2(x[0]),
        }
    }
}

/// Value and in-plane gradient `(∂_{y₁}u, ∂_{y₂}u)` at fixed `φ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableValue {
    pub value: f64,
    pub gradient: [f64; 2],
}

impl SeparableSolution {
    pub fn axisymmetric(alpha: f64) -> Result<Self> {
        Self::new(alpha, AzimuthalMode::Axisymmetric)
    }

    pub fn first_harmonic(alpha: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(alpha, AzimuthalMode::FirstHarmonic { c, d })
    }

    pub fn new(alpha: f64, mode: AzimuthalMode) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!("degree {alpha} outside (0, 1]")));
        }
        if let AzimuthalMode::FirstHarmonic { c, d } = mode {
            if !(c.is_finite() && d.is_finite()) || (c == 0.0 && d == 0.0) {
                return Err(Error::Domain("azimuthal coefficients must be finite and not both zero".into()));
            }
        }
        Ok(Self { alpha, mode })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mode(&self) -> AzimuthalMode {
        self.mode
    }

    pub fn order(&self) -> u32 {
        match self.mode {
            AzimuthalMode::Axisymmetric => 0,
            AzimuthalMode::FirstHarmonic { .. } => 1,
        }
    }

    fn azimuthal(&self, phi: f64) -> f64 {
        match self.mode {
            AzimuthalMode::Axisymmetric => 1.0,
            AzimuthalMode::FirstHarmonic { c, d } => c * phi.sin() + d * phi.cos(),
        }
    }

    /// Angular profile `P^m_α(cos θ)`.
    pub fn profile(&self, theta: f64) -> Result<f64> {
        let z = theta.cos();
        match self.mode {
            AzimuthalMode::Axisymmetric => legendre_p(self.alpha, z),
            AzimuthalMode::FirstHarmonic { .. } => legendre_p1(self.alpha, z),
        }
    }

    /// `d/dθ P^m_α(cos θ)`, with the axis limit at `θ = 0`.
    pub fn profile_derivative(&self, theta: f64) -> Result<f64> {
        let (st, z) = theta.sin_cos();
        match self.mode {
            AzimuthalMode::Axisymmetric => {
                if theta == 0.0 {
                    Ok(0.0)
                } else {
                    // d/dθ P_α(cos θ) = -sin θ P'_α = P¹_α(cos θ)
                    legendre_p1(self.alpha, z)
                }
            }
            AzimuthalMode::FirstHarmonic { .. } => {
                if theta == 0.0 {
                    Ok(-0.5 * self.alpha * (self.alpha + 1.0))
                } else {
                    Ok(-st * legendre_dp1_dz(self.alpha, z)?)
                }
            }
        }
    }

    pub fn value(&self, p: SphericalPoint) -> Result<f64> {
        check_point(p)?;
        Ok(p.r.powf(self.alpha) * self.profile(p.theta)? * self.azimuthal(p.phi))
    }

    pub fn value_cartesian(&self, x: [f64; 3]) -> Result<f64> {
        self.value(SphericalPoint::from_cartesian(x))
    }

    /// Value of the meridian trace at `(y₁, y₂) = (r cos θ, r sin θ)`, `φ = 0`.
    pub fn value_meridian(&self, y: [f64; 2]) -> Result<f64> {
        let r = y[0].hypot(y[1]);
        self.value(SphericalPoint::new(r, y[1].atan2(y[0]), 0.0))
    }

    pub fn eval(&self, p: SphericalPoint) -> Result<SeparableValue> {
        check_point(p)?;
        let a = self.alpha;
        let rpow = p.r.powf(a - 1.0);
        let phi_factor = self.azimuthal(p.phi);
        let g = self.profile(p.theta)?;
        let gradient = match self.mode {
            AzimuthalMode::Axisymmetric if p.theta > 0.0 => {
                [rpow * u1(p.theta, a)?, rpow * u2(p.theta, a)?]
            }
            _ => {
                let (st, ct) = p.theta.sin_cos();
                let dg = self.profile_derivative(p.theta)?;
                [
                    rpow * (a * ct * g - st * dg) * phi_factor,
                    rpow * (a * st * g + ct * dg) * phi_factor,
                ]
            }
        };
        Ok(SeparableValue {
            value: p.r * rpow * g * phi_factor,
            gradient,
        })
    }
}

fn check_point(p: SphericalPoint) -> Result<()> {
    if !(p.r > 0.0 && p.r.is_finite()) {
        return Err(Error::Domain(format!("radius {} must be positive", p.r)));
    }
    if !(p.theta >= 0.0 && p.theta < std::f64::consts::PI) || !p.phi.is_finite() {
        return Err(Error::Domain(format!("angles ({}, {}) out of range", p.theta, p.phi)));
    }
    Ok(())
}

/// Value and `(y₁, y₂)` gradient of `sol` at `point`.
pub fn separable_eval(sol: &SeparableSolution, point: SphericalPoint) -> Result<SeparableValue> {
    sol.eval(point)
}
