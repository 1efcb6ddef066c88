use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("series did not converge within {terms} terms (last term {last_term:e})")]
    NonConvergence { terms: usize, last_term: f64 },
    #[error("no sign change found: {0}")]
    Bracket(String),
    #[error("invalid cone geometry: {0}")]
    InvalidGeometry(String),
    #[error("inadmissible oblique angle: {0}")]
    InadmissibleBc(String),
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("invalid barrier degree: {0}")]
    InvalidAlpha(String),
    #[error("degenerate boundary vector: {0}")]
    DegenerateBc(String),
    #[error("invalid tilt: {0}")]
    InvalidTilt(String),
    #[error("no admissible tilt down to {floor:e}")]
    NoAdmissibleTilt { floor: f64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("discrete system is singular: {0}")]
    SingularSystem(String),
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
    #[error("Hölder exponent bookkeeping invalid: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
