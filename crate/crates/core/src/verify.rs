//! Invariant suites run by `conereg verify`.
//!
//! Each check returns a pass flag and a one-line detail. A failing evaluation
//! (an `Err` from the library) counts as a failed check.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use serde::Serialize;

use crate::barrier::{build_barrier, m1_coefficient, m2_coefficient, max_admissible_tilt, RotatedCoefficients};
use crate::error::{Error, Result};
use crate::exponent::{
    boundary_mismatch, critical_angle_s0, critical_exponent, neumann_exponent, neumann_mismatch,
    reduce_to_axisymmetric, separable_eval, slope_at_zero, ConeGeometry, Ellipticity, ObliqueBC,
    SeparableSolution, SphericalPoint,
};
use crate::solver::{
    check_m_matrix, fit_exponent, residual_study, solve_dirichlet, solve_study, BoundaryData,
    DiscreteField, EdgeKind, SectorGrid,
};
use crate::special::{legendre_dp_dalpha, legendre_dp_dz, legendre_p, legendre_p1};

/// Amount added to a reference value by a poisoned run.
pub const POISON: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Special,
    Exponent,
    Barrier,
    Solver,
    All,
}

impl Suite {
    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Special => "special",
            Suite::Exponent => "exponent",
            Suite::Barrier => "barrier",
            Suite::Solver => "solver",
            Suite::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Special, Suite::Exponent, Suite::Barrier, Suite::Solver],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "special" => Ok(Suite::Special),
            "exponent" => Ok(Suite::Exponent),
            "barrier" => Ok(Suite::Barrier),
            "solver" => Ok(Suite::Solver),
            "all" => Ok(Suite::All),
            other => Err(Error::Domain(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Perturb one reference constant so that the run must fail.
    pub poison: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

type Check = fn(&VerifyOptions) -> Result<(bool, String)>;

/// Runs every check of `suite` in a fixed order.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for member in suite.members() {
        for &(name, check) in checks(member) {
            let start = Instant::now();
            let (passed, detail) = match check(opts) {
                Ok(v) => v,
                Err(e) => (false, format!("error: {e}")),
            };
            out.push(CheckOutcome {
                suite: member,
                name,
                passed,
                detail,
                elapsed: start.elapsed(),
            });
        }
    }
    out
}

fn checks(suite: Suite) -> &'static [(&'static str, Check)] {
    match suite {
        Suite::Special => &[
            ("p_at_one", special_p_at_one),
            ("integer_degree", special_integer_degree),
            ("recurrence", special_recurrence),
            ("derivative_vs_richardson", special_derivative),
            ("order_one_closed_forms", special_order_one),
            ("degree_derivative_identity", special_degree_derivative),
        ],
        Suite::Exponent => &[
            ("endpoint_identities", exponent_endpoints),
            ("slope_at_zero", exponent_slope),
            ("critical_angle", exponent_s0),
            ("counterexample_roots", exponent_roots),
            ("regular_regime_has_no_root", exponent_regular),
            ("neumann_analogue", exponent_neumann),
            ("gradient_consistency", exponent_gradient),
            ("reduction", exponent_reduction),
        ],
        Suite::Barrier => &[
            ("construction", barrier_construction),
            ("m1_sign_and_difference", barrier_m1),
            ("tilt", barrier_tilt),
        ],
        Suite::Solver => &[
            ("residual_order_m0", solver_residual_m0),
            ("residual_order_m1", solver_residual_m1),
            ("solve_order", solver_solve_order),
            ("m_matrix_default_grids", solver_m_matrix),
            ("discrete_comparison", solver_comparison),
            ("exponent_fit", solver_fit),
        ],
        Suite::All => &[],
    }
}

fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
}

fn verdict(worst: f64, tol: f64, what: &str) -> (bool, String) {
    (worst <= tol, format!("max {what} {worst:.3e} (tol {tol:.0e})"))
}

fn admissible_pairs(n: usize) -> Result<Vec<(ConeGeometry, f64)>> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let th = 0.2 + (2.9 - 0.2) * (i as f64 + 0.5) / n as f64;
        let g = ConeGeometry::with_opening(th)?;
        for j in 0..n {
            let t = (j as f64 + 0.5) / n as f64;
            out.push((g, ObliqueBC::from_fraction(&g, t)?.s()));
        }
    }
    Ok(out)
}

fn special_p_at_one(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    for a in grid(0.0, 3.0, 50) {
        worst = worst.max((legendre_p(a, 1.0)? - 1.0).abs());
    }
    Ok(verdict(worst, 1e-12, "|P(1) - 1|"))
}

fn special_integer_degree(opts: &VerifyOptions) -> Result<(bool, String)> {
    let shift = if opts.poison { POISON } else { 0.0 };
    let polys: [fn(f64) -> f64; 4] = [
        |_| 1.0,
        |z| z,
        |z| 0.5 * (3.0 * z * z - 1.0),
        |z| 0.5 * (5.0 * z * z * z - 3.0 * z),
    ];
    let mut worst = 0.0_f64;
    for (n, p) in polys.iter().enumerate() {
        for z in grid(-0.9, 1.0, 39) {
            worst = worst.max((legendre_p(n as f64, z)? - p(z) - shift).abs());
        }
    }
    Ok(verdict(worst, 1e-12, "deviation"))
}

fn special_recurrence(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    for a in grid(0.1, 2.0, 20) {
        for z in grid(-0.9, 1.0, 20) {
            let r = (a + 1.0) * legendre_p(a + 1.0, z)? - (2.0 * a + 1.0) * z * legendre_p(a, z)?
                + a * legendre_p(a - 1.0, z)?;
            worst = worst.max(r.abs());
        }
    }
    Ok(verdict(worst, 1e-10, "residual"))
}

fn special_derivative(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    for a in [0.3, 0.5, 1.7] {
        for z in grid(-0.8, 0.8, 17) {
            let h = 1e-3;
            let d = |h: f64| -> Result<f64> { Ok((legendre_p(a, z + h)? - legendre_p(a, z - h)?) / (2.0 * h)) };
            let fd = (4.0 * d(h / 2.0)? - d(h)?) / 3.0;
            let exact = legendre_dp_dz(a, z)?;
            worst = worst.max((fd - exact).abs() / exact.abs().max(1.0));
        }
    }
    Ok(verdict(worst, 1e-8, "relative deviation"))
}

fn special_order_one(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    for z in grid(-0.9, 0.99, 20) {
        let w = (1.0 - z * z).sqrt();
        worst = worst
            .max(legendre_p1(0.0, z)?.abs())
            .max((legendre_p1(1.0, z)? + w).abs())
            .max((legendre_p1(2.0, z)? + 3.0 * z * w).abs());
    }
    Ok(verdict(worst, 1e-12, "deviation"))
}

fn special_degree_derivative(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    for z in grid(-0.9, 0.9, 19) {
        let lhs = legendre_dp_dalpha(1.0, z, 1e-5)? - z * legendre_dp_dalpha(0.0, z, 1e-5)?;
        // -P_1 + 2z P_0 - P_{-1} with P_{-1} = 1.
        worst = worst.max((lhs - (z - 1.0)).abs());
    }
    Ok(verdict(worst, 1e-5, "deviation"))
}

fn exponent_endpoints(_: &VerifyOptions) -> Result<(bool, String)> {
    let (mut w0, mut w1) = (0.0_f64, 0.0_f64);
    for (g, s) in admissible_pairs(20)? {
        w0 = w0.max(boundary_mismatch(&g, 0.0, s)?.abs());
        w1 = w1.max((boundary_mismatch(&g, 1.0, s)? - s.cos()).abs());
    }
    Ok((
        w0 <= 1e-12 && w1 <= 1e-10,
        format!("max |B(0)| {w0:.3e}, max |B(1) - cos s| {w1:.3e}"),
    ))
}

fn exponent_slope(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    let h = 1e-5;
    for (g, s) in admissible_pairs(20)? {
        let fd = (boundary_mismatch(&g, h, s)? - boundary_mismatch(&g, 0.0, s)?) / h;
        worst = worst.max((fd - slope_at_zero(&g, s)?).abs());
    }
    Ok(verdict(worst, 1e-4, "deviation"))
}

fn exponent_s0(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst = 0.0_f64;
    for th in grid(0.1, 3.0, 100) {
        let g = ConeGeometry::with_opening(th)?;
        worst = worst.max((critical_angle_s0(&g)? - 0.5 * (th - PI)).abs());
    }
    Ok(verdict(worst, 1e-10, "deviation"))
}

/// Five interior points of every branch that must carry a root.
pub fn counterexample_cases() -> Vec<(f64, f64)> {
    let frac = |lo: f64, hi: f64| (1..6).map(move |k| lo + (hi - lo) * k as f64 / 6.0);
    let mut out = Vec::new();
    for th in [2.0 * PI / 3.0, 3.0 * PI / 4.0] {
        let s0 = 0.5 * (th - PI);
        out.extend(frac(PI / 2.0, th).map(|s| (th, s)));
        out.extend(frac(th - PI, s0).map(|s| (th, s)));
    }
    for th in [PI / 3.0, PI / 4.0] {
        let s0 = 0.5 * (th - PI);
        out.extend(frac(-PI / 2.0, s0).map(|s| (th, s)));
    }
    out
}

fn exponent_roots(_: &VerifyOptions) -> Result<(bool, String)> {
    let cases = counterexample_cases();
    let mut worst = 0.0_f64;
    let mut missing = 0;
    for &(th, s) in &cases {
        let g = ConeGeometry::with_opening(th)?;
        match critical_exponent(&g, &ObliqueBC::new(&g, s)?)? {
            Some(a) if a > 0.0 && a < 1.0 => worst = worst.max(boundary_mismatch(&g, a, s)?.abs()),
            _ => missing += 1,
        }
    }
    Ok((
        missing == 0 && worst <= 1e-10,
        format!("{} cases, {missing} without a root, max |B| {worst:.3e}", cases.len()),
    ))
}

fn exponent_regular(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut found = 0;
    let mut n = 0;
    for th in [PI / 4.0, PI / 3.0, 2.0 * PI / 3.0, 3.0 * PI / 4.0, 2.5] {
        let g = ConeGeometry::with_opening(th)?;
        for s in barrier_regime_s(th) {
            let bc = ObliqueBC::new(&g, s)?;
            n += 1;
            if critical_exponent(&g, &bc)?.is_some() {
                found += 1;
            }
        }
    }
    Ok((found == 0 && n > 0, format!("{n} barrier-regime pairs, {found} with a root")))
}

fn exponent_neumann(_: &VerifyOptions) -> Result<(bool, String)> {
    let (mut w0, mut w1, mut ws) = (0.0_f64, 0.0_f64, 0.0_f64);
    let h = 1e-5;
    for th in grid(0.3, 2.8, 20) {
        let g = ConeGeometry::with_opening(th)?;
        let at0 = neumann_mismatch(&g, 0.0)?;
        let fd = (neumann_mismatch(&g, h)? - at0) / h;
        w0 = w0.max(at0.abs());
        w1 = w1.max((neumann_mismatch(&g, 1.0)? - 1.0 / th.tan()).abs());
        ws = ws.max((fd - (1.0 - th.cos()) / th.sin().powi(3)).abs());
    }
    let half = neumann_exponent(&ConeGeometry::with_opening(PI / 2.0)?)?;
    let mut roots = Vec::new();
    for th in [2.0 * PI / 3.0, 3.0 * PI / 4.0] {
        let g = ConeGeometry::with_opening(th)?;
        let a = neumann_exponent(&g)?;
        if !(a > 0.0 && a < 1.0 && neumann_mismatch(&g, a)?.abs() <= 1e-10) {
            return Ok((false, format!("root {a} at θ₀ = {th:.4} fails")));
        }
        roots.push(a);
    }
    let ok = w0 <= 1e-12 && w1 <= 1e-10 && ws <= 1e-4 && (half - 1.0).abs() <= 1e-8;
    Ok((
        ok,
        format!("|W(0)| {w0:.1e}, |W(1) - cot| {w1:.1e}, slope {ws:.1e}, exponent(π/2) {half:.10}, roots {roots:.6?}"),
    ))
}

fn exponent_gradient(_: &VerifyOptions) -> Result<(bool, String)> {
    let sols = [
        SeparableSolution::axisymmetric(0.4)?,
        SeparableSolution::first_harmonic(0.7, 1.0, 0.5)?,
    ];
    let mut worst = 0.0_f64;
    for sol in &sols {
        for &(r, t, p) in &[(0.5, 0.7, 0.3), (1.2, 1.9, 2.0), (0.8, 2.4, -1.0)] {
            let v = separable_eval(sol, SphericalPoint::new(r, t, p))?;
            let y = [r * t.cos(), r * t.sin()];
            let at = |y: [f64; 2]| sol.value(SphericalPoint::new(y[0].hypot(y[1]), y[1].atan2(y[0]), p));
            let scale = v.gradient.iter().fold(0.0_f64, |m, g| m.max(g.abs()));
            let h = 1e-4;
            for k in 0..2 {
                let (mut yp, mut ym) = (y, y);
                yp[k] += h;
                ym[k] -= h;
                let fd = (at(yp)? - at(ym)?) / (2.0 * h);
                worst = worst.max((fd - v.gradient[k]).abs() / scale);
            }
        }
    }
    Ok(verdict(worst, 1e-6, "relative deviation"))
}

fn exponent_reduction(_: &VerifyOptions) -> Result<(bool, String)> {
    let kappa = 1.5;
    let mut worst = 0.0_f64;
    for n in 3..=5 {
        let a = DMatrix::identity(n, n) * kappa;
        let red = reduce_to_axisymmetric(&a, Ellipticity::new(1.0, 2.0)?)?;
        worst = worst.max((red.b021 - (n as f64 - 2.0) * kappa).abs());
    }
    Ok((worst == 0.0, format!("max |b - (n-2)κ| {worst:.3e}")))
}

const BARRIER_OPENINGS: [f64; 3] = [PI / 3.0, 2.0 * PI / 3.0, 3.0 * PI / 4.0];
const BARRIER_ALPHA: f64 = 0.05;

/// `s` at fractions `k/6` of each barrier-regime sub-interval of `(-π+θ₀, θ₀)`.
pub fn barrier_regime_s(theta0: f64) -> Vec<f64> {
    let mut out: Vec<f64> = (1..6).map(|k| theta0.min(PI / 2.0) * k as f64 / 6.0).collect();
    let lo = theta0 - PI;
    if lo < -PI / 2.0 {
        out.extend((1..6).map(|k| lo + (-PI / 2.0 - lo) * k as f64 / 6.0));
    }
    out
}

fn barrier_construction(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut details = Vec::new();
    for th in BARRIER_OPENINGS {
        let b = build_barrier(&ConeGeometry::with_opening(th)?, BARRIER_ALPHA)?;
        details.push(format!("c*={:.4}", b.cstar()));
    }
    Ok((true, details.join(", ")))
}

/// `M₁ v` at `r = 1` from differences of `v` along `β` and `τ`.
pub fn m1_by_differences(th: f64, s: f64, alpha: f64) -> Result<f64> {
    let g = ConeGeometry::with_opening(th)?;
    let bc = ObliqueBC::new(&g, s)?;
    let b = build_barrier(&g, alpha)?;
    let rc = RotatedCoefficients::laplacian(&bc)?;
    let y = g.boundary_point(1.0);
    let deriv = |d: nalgebra::Vector2<f64>| -> Result<f64> {
        let at = |h: f64| b.value_at([y[0] + h * d[0], y[1] + h * d[1]]);
        let c = |h: f64| -> Result<f64> { Ok((at(h)? - at(-h)?) / (2.0 * h)) };
        let h = 1e-3;
        Ok((4.0 * c(h / 2.0)? - c(h)?) / 3.0)
    };
    let (beta, nu, tau) = (bc.beta(), bc.nu(), bc.tau());
    let eps = bc.obliqueness();
    let v = b.value_at([y[0], y[1]])?;
    let (a11, a22) = (rc.atilde[(0, 0)], rc.atilde[(1, 1)]);
    Ok(deriv(beta)? + (nu[0] / beta[1]) * (a22 / a11) * deriv(tau)?
        - (nu[0] / a11) * (beta[0] / beta[1]) * (rc.b021 / y[1]) * v / eps)
}

fn barrier_m1(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut worst_rel = 0.0_f64;
    let mut max_m1 = f64::NEG_INFINITY;
    let mut n = 0;
    for th in BARRIER_OPENINGS {
        let g = ConeGeometry::with_opening(th)?;
        let b = build_barrier(&g, BARRIER_ALPHA)?;
        for s in barrier_regime_s(th) {
            let bc = ObliqueBC::new(&g, s)?;
            let m1 = m1_coefficient(&b, &bc, &RotatedCoefficients::laplacian(&bc)?)?;
            let fd = m1_by_differences(th, s, BARRIER_ALPHA)?;
            worst_rel = worst_rel.max((m1 - fd).abs() / m1.abs());
            max_m1 = max_m1.max(m1);
            n += 1;
        }
    }
    Ok((
        max_m1 < 0.0 && worst_rel <= 1e-8,
        format!("{n} points, max m1 {max_m1:.4e}, max relative FD deviation {worst_rel:.3e}"),
    ))
}

fn barrier_tilt(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut min_tilt = f64::INFINITY;
    let mut max_m2 = f64::NEG_INFINITY;
    let mut collapse = 0.0_f64;
    for th in BARRIER_OPENINGS {
        let g = ConeGeometry::with_opening(th)?;
        let b = build_barrier(&g, BARRIER_ALPHA)?;
        for s in barrier_regime_s(th) {
            let bc = ObliqueBC::new(&g, s)?;
            let rc = RotatedCoefficients::laplacian(&bc)?;
            let tilt = max_admissible_tilt(&bc, &b, &rc)?;
            min_tilt = min_tilt.min(tilt);
            max_m2 = max_m2.max(m2_coefficient(&b, &bc, &rc, tilt)?);
            collapse = collapse.max((m2_coefficient(&b, &bc, &rc, 0.0)? - m1_coefficient(&b, &bc, &rc)?).abs());
        }
    }
    Ok((
        min_tilt >= 1e-6 && max_m2 < 0.0 && collapse == 0.0,
        format!("min tilt {min_tilt:.3e}, max m2 {max_m2:.4e}, |m2(0) - m1| {collapse:.1e}"),
    ))
}

fn order_detail(orders: &[f64]) -> String {
    let v: Vec<String> = orders.iter().map(|p| format!("{p:.3}")).collect();
    format!("orders [{}]", v.join(", "))
}

fn solver_residual_m0(_: &VerifyOptions) -> Result<(bool, String)> {
    let sol = SeparableSolution::axisymmetric(0.6)?;
    let base = SectorGrid::new(1e-2, 1.0, 21, 9, 1.15, 2.0, 0)?;
    let st = residual_study(&sol, &base, 3)?;
    Ok((st.orders_within(1.7, 2.3), order_detail(&st.orders)))
}

fn solver_residual_m1(_: &VerifyOptions) -> Result<(bool, String)> {
    let g = ConeGeometry::with_opening(2.0 * PI / 3.0)?;
    let sol = SeparableSolution::first_harmonic(neumann_exponent(&g)?, 0.0, 1.0)?;
    let base = SectorGrid::new(1e-2, 1.0, 21, 9, 1.15, g.theta0(), 1)?;
    let st = residual_study(&sol, &base, 3)?;
    Ok((st.orders_within(1.7, 2.3), order_detail(&st.orders)))
}

fn solver_solve_order(_: &VerifyOptions) -> Result<(bool, String)> {
    let th = 2.0 * PI / 3.0;
    let g = ConeGeometry::with_opening(th)?;
    let bc = ObliqueBC::new(&g, 1.8)?;
    let a = critical_exponent(&g, &bc)?.ok_or_else(|| Error::Bracket("no root at s = 1.8".into()))?;
    let sol = SeparableSolution::axisymmetric(a)?;
    let base = SectorGrid::new(1e-2, 1.0, 21, 9, 1.15, th, 0)?;
    let dir = solve_study(&sol, &base, EdgeKind::Dirichlet, 2)?;
    let obl = solve_study(&sol, &base, EdgeKind::Oblique(bc), 2)?;
    let last = |st: &crate::solver::RefinementStudy| *st.orders.last().unwrap_or(&f64::NAN);
    let ok = (1.7..=2.3).contains(&last(&dir)) && (1.7..=2.3).contains(&last(&obl));
    Ok((
        ok,
        format!("Dirichlet {}, oblique {}", order_detail(&dir.orders), order_detail(&obl.orders)),
    ))
}

fn default_grids() -> Result<Vec<(SectorGrid, EdgeKind)>> {
    let mut out = Vec::new();
    for th in [PI / 3.0, 2.0 * PI / 3.0] {
        let g = ConeGeometry::with_opening(th)?;
        let bc = ObliqueBC::new(&g, if th < PI / 2.0 { 0.5 } else { 1.8 })?;
        for mode in [0, 1] {
            let grid = SectorGrid::default_for(&g, mode)?;
            out.push((grid.clone(), EdgeKind::Dirichlet));
            out.push((grid, EdgeKind::MonotoneOblique(bc)));
        }
    }
    Ok(out)
}

fn solver_m_matrix(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut rows = 0;
    let mut bad = 0;
    for (grid, kind) in default_grids()? {
        let rep = check_m_matrix(&grid, &kind);
        rows += rep.rows_checked;
        bad += rep.violations.len();
    }
    Ok((bad == 0, format!("{rows} rows checked, {bad} violations")))
}

fn solver_comparison(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut min = f64::INFINITY;
    for (grid, kind) in default_grids()? {
        let (r0, r1) = (grid.r_min(), grid.r_max());
        let data = BoundaryData::from_fn(&grid, kind, |r, t| {
            Ok((1.0 + (7.0 * t).sin()).max(0.0) * if r == r0 || r == r1 { 1.0 } else { (3.0 * r).cos().abs() })
        })?;
        let u: DiscreteField = solve_dirichlet(&grid, &data, None)?;
        min = min.min(u.min());
    }
    Ok((min >= -1e-12, format!("min of solutions {min:.3e}")))
}

fn solver_fit(_: &VerifyOptions) -> Result<(bool, String)> {
    let th = 2.0 * PI / 3.0;
    let g = ConeGeometry::with_opening(th)?;
    let bc = ObliqueBC::new(&g, 1.8)?;
    let a = critical_exponent(&g, &bc)?.ok_or_else(|| Error::Bracket("no root at s = 1.8".into()))?;
    let sol = SeparableSolution::axisymmetric(a)?;
    let grid = SectorGrid::default_for(&g, 0)?.refined();
    let data = BoundaryData::from_fn(&grid, EdgeKind::Oblique(bc), |r, t| Ok(r.powf(a) * sol.profile(t)?))?;
    let u = solve_dirichlet(&grid, &data, None)?;
    let fit = fit_exponent(&u, th / 2.0, (1e-3, 1e-1))?;
    let err = (fit.alpha - a).abs();
    Ok((err <= 1e-2, format!("α = {a:.8}, fitted {:.8}, |error| {err:.3e}", fit.alpha)))
}
