//! Boundary-mismatch functions, critical exponents and angles, separable
//! solutions and regime classification.

mod classify;
mod geometry;
mod mismatch;
mod reduce;
mod separable;

pub use classify::{classify_regime, RegimeLabel, RegimeReport, Witness, ROOT_RESIDUAL_TOL};
pub use geometry::{ConeGeometry, ObliqueBC, THETA0_MAX};
pub use mismatch::{
    boundary_mismatch, critical_angle_s0, critical_exponent, neumann_exponent, neumann_mismatch,
    scan_critical_exponent, slope_at_zero, u1, u2, ExponentSearch, ALPHA_MIN, ENDPOINT_ZERO_TOL,
    ROOT_XTOL, SCAN_POINTS,
};
pub use reduce::{reduce_to_axisymmetric, AxisymmetricReduction, Ellipticity};
pub use separable::{
    separable_eval, AzimuthalMode, SeparableSolution, SeparableValue, SphericalPoint,
};
