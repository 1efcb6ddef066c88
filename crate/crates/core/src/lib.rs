//! Boundary-regularity toolkit for axisymmetric oblique-derivative problems
//! on circular cones.
//!
//! * [`special`]: Legendre functions of real degree.
//! * [`exponent`]: boundary-mismatch functions, critical exponents and angles,
//!   separable solutions and regime classification.
//! * [`barrier`]: isotropic Miller barrier and the boundary operators `M₁`, `M₂`.
//! * [`solver`]: finite-difference verification on annular sectors.
//! * [`verify`]: invariant suites shared by the command line front end.

pub mod barrier;
pub mod error;
pub mod exponent;
pub mod roots;
pub mod solver;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
