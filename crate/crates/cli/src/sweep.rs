//! Phase-map sweeps over `(θ₀, s)`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use conereg::exponent::{classify_regime, ConeGeometry, ObliqueBC, RegimeLabel, RegimeReport};
use conereg::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Relative margin kept from the open ends of the admissible `s` interval
/// when absolute bounds are clamped.
pub const CLAMP_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SRange {
    /// Fractions `t ∈ (0, 1)` of `(-π + θ₀, θ₀)`.
    Fractions { lo: f64, hi: f64, count: usize },
    /// Absolute angles, clamped into the admissible interval of each `θ₀`.
    Absolute { lo: f64, hi: f64, count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub theta0: (f64, f64, usize),
    pub s: SRange,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi, n) = self.theta0;
        if n < 2 {
            return Err(Error::Domain(format!("θ₀ count {n} must be at least 2")));
        }
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::Domain(format!("θ₀ range [{lo}, {hi}] is empty")));
        }
        // Geometry validation covers the θ₀ bounds themselves.
        ConeGeometry::with_opening(lo)?;
        ConeGeometry::with_opening(hi)?;
        match self.s {
            SRange::Fractions { lo, hi, count } => {
                if count < 2 {
                    return Err(Error::Domain(format!("s count {count} must be at least 2")));
                }
                if !(lo > 0.0 && hi < 1.0 && lo <= hi) {
                    return Err(Error::Domain(format!("s fractions [{lo}, {hi}] must lie in (0, 1)")));
                }
            }
            SRange::Absolute { lo, hi, count } => {
                if count < 2 {
                    return Err(Error::Domain(format!("s count {count} must be at least 2")));
                }
                if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                    return Err(Error::Domain(format!("s range [{lo}, {hi}] is empty")));
                }
            }
        }
        Ok(())
    }

    /// Cells in output order: `θ₀` outer, `s` inner.
    pub fn cells(&self) -> Vec<(f64, f64, bool)> {
        let (lo, hi, n) = self.theta0;
        let mut out = Vec::new();
        for i in 0..n {
            let th = lerp(lo, hi, i, n);
            let (a, b) = (th - PI, th);
            match self.s {
                SRange::Fractions { lo, hi, count } => {
                    for j in 0..count {
                        out.push((th, a + lerp(lo, hi, j, count) * (b - a), false));
                    }
                }
                SRange::Absolute { lo, hi, count } => {
                    let margin = CLAMP_MARGIN * (b - a);
                    for j in 0..count {
                        let s = lerp(lo, hi, j, count);
                        let c = s.clamp(a + margin, b - margin);
                        out.push((th, c, c != s));
                    }
                }
            }
        }
        out
    }
}

fn lerp(lo: f64, hi: f64, k: usize, n: usize) -> f64 {
    if k + 1 == n {
        hi
    } else {
        lo + (hi - lo) * k as f64 / (n - 1) as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseMapRow {
    pub theta0: f64,
    pub s: f64,
    pub label: RegimeLabel,
    pub critical_exponent: Option<f64>,
    pub s0: f64,
    pub b_at_1: f64,
    pub witnesses_digest: String,
    pub clamped: bool,
}

impl PhaseMapRow {
    fn from_report(rep: &RegimeReport, clamped: bool) -> Self {
        let mut digest = String::new();
        for w in &rep.witnesses {
            if !digest.is_empty() {
                digest.push(';');
            }
            let _ = write!(digest, "{}={}", w.name, float(w.value));
        }
        Self {
            theta0: rep.theta0,
            s: rep.s,
            label: rep.label,
            critical_exponent: rep.critical_exponent,
            s0: rep.s0,
            b_at_1: rep.witness("B_at_1").map_or(f64::NAN, |w| w.value),
            witnesses_digest: digest,
            clamped,
        }
    }
}

/// Classifies every cell, in parallel, keeping the order of [`SweepConfig::cells`].
pub fn run(config: &SweepConfig) -> Result<Vec<PhaseMapRow>> {
    config.validate()?;
    config
        .cells()
        .par_iter()
        .map(|&(th, s, clamped)| {
            let g = ConeGeometry::with_opening(th)?;
            let bc = ObliqueBC::new(&g, s)?;
            Ok(PhaseMapRow::from_report(&classify_regime(&g, &bc), clamped))
        })
        .collect()
}

/// Fixed 17-significant-digit formatting.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

pub const CSV_HEADER: &str = "theta0,s,label,critical_exponent,s0,b_at_1,witnesses_digest,clamped";

pub fn to_csv(rows: &[PhaseMapRow]) -> String {
    let mut out = format!("# conereg {}\n{CSV_HEADER}\n", env!("CARGO_PKG_VERSION"));
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            float(r.theta0),
            float(r.s),
            r.label,
            r.critical_exponent.map(float).unwrap_or_default(),
            float(r.s0),
            float(r.b_at_1),
            r.witnesses_digest,
            r.clamped
        );
    }
    out
}

#[derive(Serialize)]
struct PhaseMapDocument<'a> {
    schema_version: u32,
    tool_version: &'static str,
    rows: &'a [PhaseMapRow],
}

pub fn to_json(rows: &[PhaseMapRow]) -> String {
    let doc = PhaseMapDocument {
        schema_version: 1,
        tool_version: env!("CARGO_PKG_VERSION"),
        rows,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("rows serialize");
    s.push('\n');
    s
}
