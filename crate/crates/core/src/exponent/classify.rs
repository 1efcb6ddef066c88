use serde::Serialize;

use super::geometry::{ConeGeometry, ObliqueBC};
use super::mismatch::{boundary_mismatch, critical_angle_s0, scan_critical_exponent, slope_at_zero};

/// Tolerance attached to the mismatch at a reported root.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegimeLabel {
    RegularBarrier,
    Irregular,
    AxisContinuous,
    Unknown,
}

impl RegimeLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::RegularBarrier => "REGULAR_BARRIER",
            Self::Irregular => "IRREGULAR",
            Self::AxisContinuous => "AXIS_CONTINUOUS",
            Self::Unknown => "UNKNOWN",
        }
    }
}

impl std::fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named numeric evidence behind a label.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub name: String,
    pub value: f64,
    pub tolerance: Option<f64>,
}

impl Witness {
    fn new(name: &str, value: f64, tolerance: Option<f64>) -> Self {
        Self {
            name: name.to_string(),
            value,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeReport {
    pub theta0: f64,
    pub s: f64,
    pub label: RegimeLabel,
    pub critical_exponent: Option<f64>,
    pub s0: f64,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl RegimeReport {
    pub fn witness(&self, name: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.name == name)
    }
}

/// Classifies `(θ₀, s)`. Never fails: evaluation errors yield `UNKNOWN` with
/// the error recorded in `notes`.
pub fn classify_regime(geom: &ConeGeometry, bc: &ObliqueBC) -> RegimeReport {
    let s = bc.s();
    let mut notes = Vec::new();
    let mut witnesses = Vec::new();

    let s0 = match critical_angle_s0(geom) {
        Ok(v) => v,
        Err(e) => {
            notes.push(format!("critical angle: {e}"));
            f64::NAN
        }
    };
    match slope_at_zero(geom, s) {
        Ok(v) => witnesses.push(Witness::new("V", v, None)),
        Err(e) => notes.push(format!("slope at zero: {e}")),
    }
    let product = bc.quadrant_product();
    witnesses.push(Witness::new("cos_s_sin_s", product, None));
    match boundary_mismatch(geom, 1.0, s) {
        Ok(v) => witnesses.push(Witness::new("B_at_1", v, None)),
        Err(e) => notes.push(format!("mismatch at 1: {e}")),
    }

    let search = match scan_critical_exponent(geom, bc) {
        Ok(v) => v,
        Err(e) => {
            notes.push(format!("exponent search: {e}"));
            return RegimeReport {
                theta0: geom.theta0(),
                s,
                label: RegimeLabel::Unknown,
                critical_exponent: None,
                s0,
                witnesses,
                notes,
            };
        }
    };
    witnesses.push(Witness::new("sign_changes", search.sign_changes as f64, None));
    if let Some(res) = search.residual {
        witnesses.push(Witness::new("B_at_root", res, Some(ROOT_RESIDUAL_TOL)));
    }

    let label = match search.alpha {
        Some(_) if product > 0.0 => {
            notes.push("root found although cos s·sin s > 0".into());
            RegimeLabel::Unknown
        }
        Some(_) if search.residual.is_none_or(|r| r.abs() > ROOT_RESIDUAL_TOL) => {
            notes.push("mismatch at the bracketed root exceeds tolerance".into());
            RegimeLabel::Unknown
        }
        Some(_) => RegimeLabel::Irregular,
        None if product > 0.0 => RegimeLabel::RegularBarrier,
        None if s == 0.0 => RegimeLabel::AxisContinuous,
        None => {
            notes.push("outside the barrier regime with no root on the scan window".into());
            RegimeLabel::Unknown
        }
    };
    RegimeReport {
        theta0: geom.theta0(),
        s,
        label,
        critical_exponent: search.alpha,
        s0,
        witnesses,
        notes,
    }
}
