//! Finite-difference checks on the annular sector `r_min ≤ r ≤ r_max`,
//! `0 ≤ θ ≤ θ₀` of the meridian half-plane.

mod fit;
mod grid;
mod holder;
mod residual;
mod stencil;
mod study;
mod system;

pub use fit::{fit_exponent, fit_exponent_fn, FitReport, MIN_FIT_SAMPLES, NEAR_ZERO_FRACTION};
pub use grid::{
    DiscreteField, SectorGrid, DEFAULT_GRADING, DEFAULT_NR, DEFAULT_NTHETA, DEFAULT_RMIN_FRACTION,
};
pub use holder::{
    holder_inequality_checks, holder_norm, holder_seminorm, interpolation_constant, product_inequality,
    weighted_sup_norm, HolderInequalityReport, HolderSpec, InterpolationCheck, InterpolationSpec,
    ProductCheck, ProductSplit, Sample,
};
pub use residual::{
    directional_boundary_residual, laplacian_residual, neumann_boundary_residual,
    oblique_boundary_residual, profile_field, restrict_to, BoundaryResidual, ResidualReport,
};
pub use study::{observed_order, refinement_sequence, residual_study, solve_error, solve_study, RefinementStudy};
pub use system::{
    check_m_matrix, solve_dirichlet, BoundaryData, EdgeKind, MMatrixDefect, MMatrixReport,
    MMatrixViolation, SOLVE_ATOL, SOLVE_RTOL,
};
