//! Acceptance criteria 1 to 12, each at its stated tolerance.
//!
//! Prints one `[PASS]`/`[FAIL] criterion N` line per criterion and exits
//! non-zero when any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use conereg::barrier::{
    build_barrier, m1_coefficient, m2_coefficient, max_admissible_tilt, MillerBarrier, RotatedCoefficients,
};
use conereg::exponent::{
    boundary_mismatch, critical_angle_s0, critical_exponent, neumann_exponent, neumann_mismatch,
    reduce_to_axisymmetric, slope_at_zero, ConeGeometry, Ellipticity, ObliqueBC, SeparableSolution,
    SphericalPoint, THETA0_MAX,
};
use conereg::solver::{
    check_m_matrix, fit_exponent, fit_exponent_fn, holder_seminorm, residual_study, solve_dirichlet,
    BoundaryData, EdgeKind, HolderSpec, Sample, SectorGrid,
};
use conereg::special::legendre_p;
use nalgebra::DMatrix;
use rayon::prelude::*;

mod common;
use common::{legendre_by_quadrature, richardson_directional};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

/// Cell-centred `n × n` grid over `θ₀ ∈ (0, THETA0_MAX)`, `s ∈ (-π+θ₀, θ₀)`.
fn admissible_grid(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 0..n {
        let th = THETA0_MAX * (i as f64 + 0.5) / n as f64;
        for j in 0..n {
            out.push((th, th - PI + PI * (j as f64 + 0.5) / n as f64));
        }
    }
    out
}

fn geom(th: f64) -> Result<ConeGeometry, String> {
    ConeGeometry::with_opening(th).map_err(err)
}

fn bc(g: &ConeGeometry, s: f64) -> Result<ObliqueBC, String> {
    ObliqueBC::new(g, s).map_err(err)
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let (mut w0, mut w1) = (0.0_f64, 0.0_f64);
    for (th, s) in admissible_grid(20) {
        let g = geom(th)?;
        w0 = w0.max(boundary_mismatch(&g, 0.0, s).map_err(err)?.abs());
        w1 = w1.max((boundary_mismatch(&g, 1.0, s).map_err(err)? - s.cos()).abs());
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(
        w0 <= 1e-12 && w1 <= 1e-10 && secs < 10.0,
        format!("max |B(0)| = {w0:.2e}, max |B(1) - cos s| = {w1:.2e}, {secs:.2} s"),
    )
}

fn criterion_2() -> Outcome {
    let h = 1e-5;
    let (mut worst, mut lib) = (0.0_f64, 0.0_f64);
    for (th, s) in admissible_grid(20) {
        let g = geom(th)?;
        let fd = (boundary_mismatch(&g, h, s).map_err(err)? - boundary_mismatch(&g, 0.0, s).map_err(err)?) / h;
        let v = s.cos() + s.sin() * (1.0 - th.cos()) / th.sin();
        worst = worst.max((fd - v).abs());
        lib = lib.max((slope_at_zero(&g, s).map_err(err)? - v).abs());
    }
    ensure(
        worst <= 1e-4 && lib <= 1e-12,
        format!("max |FD slope - V| = {worst:.2e}, library V deviation {lib:.2e}"),
    )
}

fn criterion_3() -> Outcome {
    let mut worst = 0.0_f64;
    for k in 0..100 {
        let th = THETA0_MAX * (k as f64 + 0.5) / 100.0;
        worst = worst.max((critical_angle_s0(&geom(th)?).map_err(err)? - 0.5 * (th - PI)).abs());
    }
    ensure(worst <= 1e-10, format!("max deviation {worst:.2e} over 100 openings"))
}

/// Five interior points, at fractions k/6, of each branch that must carry a root.
fn counterexample_cases() -> Vec<(f64, f64)> {
    let frac = |lo: f64, hi: f64| (1..6).map(move |k| lo + (hi - lo) * k as f64 / 6.0);
    let mut out = Vec::new();
    for th in [2.0 * PI / 3.0, 3.0 * PI / 4.0] {
        let s0 = 0.5 * (th - PI);
        out.extend(frac(PI / 2.0, th).map(|s| (th, s)));
        out.extend(frac(th - PI, s0).map(|s| (th, s)));
    }
    for th in [PI / 3.0, PI / 4.0] {
        out.extend(frac(-PI / 2.0, 0.5 * (th - PI)).map(|s| (th, s)));
    }
    out
}

struct Certified {
    theta0: f64,
    s: f64,
    alpha: f64,
}

fn criterion_4(found: &mut Vec<Certified>) -> Outcome {
    let t = Instant::now();
    let mut worst = 0.0_f64;
    for (th, s) in counterexample_cases() {
        let g = geom(th)?;
        let a = critical_exponent(&g, &bc(&g, s)?)
            .map_err(err)?
            .ok_or_else(|| format!("no root at θ₀ = {th:.4}, s = {s:.4}"))?;
        if !(a > 0.0 && a < 1.0) {
            return Err(format!("root {a} outside (0, 1) at θ₀ = {th:.4}, s = {s:.4}"));
        }
        worst = worst.max(boundary_mismatch(&g, a, s).map_err(err)?.abs());
        found.push(Certified { theta0: th, s, alpha: a });
    }
    let secs = t.elapsed().as_secs_f64();
    let (lo, hi) = found.iter().fold((1.0_f64, 0.0_f64), |(l, h), c| (l.min(c.alpha), h.max(c.alpha)));
    ensure(
        worst <= 1e-10 && secs < 30.0,
        format!("{} roots in [{lo:.4}, {hi:.4}], max |B| = {worst:.2e}, {secs:.2} s", found.len()),
    )
}

struct Certificate {
    orders: Vec<f64>,
    boundary: f64,
    fit_exact: f64,
    fit_solve: f64,
}

fn certify(c: &Certified) -> Result<Certificate, String> {
    let g = geom(c.theta0)?;
    let b = bc(&g, c.s)?;
    let sol = SeparableSolution::axisymmetric(c.alpha).map_err(err)?;
    let a = c.alpha;

    let base = SectorGrid::new(1e-2, 1.0, 21, 9, 1.15, c.theta0, 0).map_err(err)?;
    let orders = residual_study(&sol, &base, 3).map_err(err)?.orders;

    // β₀·Du by differences of the exact field, scaled by r^{α-1}
    let beta = [c.s.cos(), c.s.sin()];
    let u = |y: [f64; 2]| sol.value_meridian(y).unwrap();
    let mut boundary = 0.0_f64;
    for r in linspace(0.1, 1.0, 20) {
        let y = [r * c.theta0.cos(), r * c.theta0.sin()];
        let d = richardson_directional(u, y, beta, 1e-3 * r);
        boundary = boundary.max(d.abs() / r.powf(a - 1.0));
    }

    let ray = 0.5 * c.theta0;
    let fit_exact = (fit_exponent_fn(|r| Ok(r.powf(a) * legendre_p(a, ray.cos())?), (1e-3, 1e-1), 40)
        .map_err(err)?
        .alpha
        - a)
        .abs();

    let grid = SectorGrid::default_for(&g, 0).map_err(err)?.refined();
    let data = BoundaryData::from_fn(&grid, EdgeKind::Oblique(b), |r, t| Ok(r.powf(a) * sol.profile(t)?))
        .map_err(err)?;
    let field = solve_dirichlet(&grid, &data, None).map_err(err)?;
    let fit_solve = (fit_exponent(&field, ray, (1e-3, 1e-1)).map_err(err)?.alpha - a).abs();

    Ok(Certificate {
        orders,
        boundary,
        fit_exact,
        fit_solve,
    })
}

fn criterion_5(found: &[Certified]) -> Outcome {
    if found.is_empty() {
        return Err("no exponents from criterion 4".into());
    }
    let certs = found.par_iter().map(certify).collect::<Result<Vec<_>, _>>()?;
    let mut failures = Vec::new();
    let (mut omin, mut omax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut bmax, mut emax, mut smax) = (0.0_f64, 0.0_f64, 0.0_f64);
    for (c, cert) in found.iter().zip(&certs) {
        for &p in &cert.orders {
            omin = omin.min(p);
            omax = omax.max(p);
        }
        bmax = bmax.max(cert.boundary);
        emax = emax.max(cert.fit_exact);
        smax = smax.max(cert.fit_solve);
        let ok = cert.orders.iter().all(|p| (1.7..=2.3).contains(p))
            && cert.boundary <= 1e-6
            && cert.fit_exact <= 1e-3
            && cert.fit_solve <= 1e-2;
        if !ok {
            failures.push(format!("(θ₀ = {:.4}, s = {:.4})", c.theta0, c.s));
        }
    }
    ensure(
        failures.is_empty(),
        format!(
            "{} exponents: orders in [{omin:.3}, {omax:.3}], max |β₀·Du|/r^(α-1) = {bmax:.2e}, \
             fit error exact {emax:.2e}, solve {smax:.2e}{}",
            found.len(),
            if failures.is_empty() { String::new() } else { format!("; failing {}", failures.join(" ")) }
        ),
    )
}

fn criterion_6() -> Outcome {
    let pairs = [
        (PI / 4.0, 0.3),
        (PI / 3.0, 0.6),
        (PI / 3.0, -2.0),
        (PI / 4.0, -2.2),
        (1.2, -1.8),
        (2.0 * PI / 3.0, 0.4),
        (2.0 * PI / 3.0, 1.3),
        (3.0 * PI / 4.0, 1.0),
        (2.6, 0.8),
        (2.9, 1.5),
    ];
    let mut scan_changes = 0;
    for (th, s) in pairs {
        let g = geom(th)?;
        let b = bc(&g, s)?;
        if b.quadrant_product() <= 0.0 {
            return Err(format!("(θ₀ = {th}, s = {s}) is not in the barrier regime"));
        }
        if let Some(a) = critical_exponent(&g, &b).map_err(err)? {
            return Err(format!("root {a} at θ₀ = {th:.4}, s = {s:.4}"));
        }
        // independent scan of B on (10⁻³, 1)
        let vals: Vec<f64> = linspace(1e-3, 1.0, 400)
            .into_iter()
            .map(|a| boundary_mismatch(&g, a, s))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        scan_changes += vals.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
    }
    ensure(
        scan_changes == 0,
        format!("10 barrier-regime pairs without a root, {scan_changes} sign changes on the check scan"),
    )
}

/// Samples of `r^α P_α(cos θ)` on 8 radii per octave in `[r_min, 1]` and 9 rays.
///
/// The discrete `[u]_α` approaches its supremum like `r_min^α`, so the
/// halvings start at `r_min = 2⁻¹⁴`.
fn vertex_samples(c: &Certified, octaves: usize) -> Result<Vec<Sample>, String> {
    let mut out = Vec::new();
    for k in 0..=8 * octaves {
        let r = 2f64.powf(-(k as f64) / 8.0);
        for j in 0..9 {
            let t = c.theta0 * j as f64 / 8.0;
            let v = r.powf(c.alpha) * legendre_p(c.alpha, t.cos()).map_err(err)?;
            out.push(Sample::new(vec![r * t.cos(), r * t.sin()], v));
        }
    }
    Ok(out)
}

fn criterion_7(found: &[Certified]) -> Outcome {
    let cases: Vec<&Certified> = found.iter().filter(|c| c.alpha + 0.1 <= 1.0).collect();
    if cases.is_empty() {
        return Err("no exponent with α + 0.1 ≤ 1".into());
    }
    let results = cases
        .par_iter()
        .map(|c| -> Result<(f64, f64), String> {
            // unweighted seminorms: weight exponent max(0 + α' + β, 0) with β = -α'
            let at = |a: f64| HolderSpec::new(0, a, -a).map_err(err);
            let (sharp, over) = (at(c.alpha)?, at(c.alpha + 0.1)?);
            let mut prev: Option<(f64, f64)> = None;
            let (mut max_ratio, mut min_growth) = (0.0_f64, f64::INFINITY);
            for octaves in 14..=17 {
                let s = vertex_samples(c, octaves)?;
                let cur = (holder_seminorm(&s, sharp).map_err(err)?, holder_seminorm(&s, over).map_err(err)?);
                if let Some(p) = prev {
                    max_ratio = max_ratio.max(cur.0 / p.0);
                    min_growth = min_growth.min(cur.1 / p.1);
                }
                prev = Some(cur);
            }
            Ok((max_ratio, min_growth))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let ratio = results.iter().fold(0.0_f64, |m, r| m.max(r.0));
    let growth = results.iter().fold(f64::INFINITY, |m, r| m.min(r.1));
    ensure(
        ratio <= 1.05 && growth >= 2f64.powf(0.05),
        format!(
            "{} exponents, three halvings of r_min: max [u]_α ratio {ratio:.4}, min [u]_(α+0.1) growth {growth:.4} (need ≥ {:.4})",
            cases.len(),
            2f64.powf(0.05)
        ),
    )
}

/// Barrier-regime `s` at fractions k/6 of `(0, min(θ₀, π/2))` and of `(-π+θ₀, -π/2)`.
fn barrier_regime_s(th: f64) -> Vec<f64> {
    let mut out: Vec<f64> = (1..6).map(|k| th.min(PI / 2.0) * k as f64 / 6.0).collect();
    let lo = th - PI;
    if lo < -PI / 2.0 {
        out.extend((1..6).map(|k| lo + (-PI / 2.0 - lo) * k as f64 / 6.0));
    }
    out
}

/// `M₁v` at `r = 1` by Richardson differences of `v = r^α P_α(cos θ)` along `β₀` and `τ`.
fn m1_by_differences(b: &MillerBarrier, th: f64, s: f64, rc: &RotatedCoefficients) -> f64 {
    let a = b.alpha();
    let v = |y: [f64; 2]| y[0].hypot(y[1]).powf(a) * legendre_p(a, y[1].atan2(y[0]).cos()).unwrap();
    let y = [th.cos(), th.sin()];
    let beta = [s.cos(), s.sin()];
    let nu = [th.sin(), -th.cos()];
    let tau = [nu[1], -nu[0]];
    let eps = beta[0] * nu[0] + beta[1] * nu[1];
    let (a11, a22) = (rc.atilde[(0, 0)], rc.atilde[(1, 1)]);
    richardson_directional(v, y, beta, 1e-3) + (nu[0] / beta[1]) * (a22 / a11) * richardson_directional(v, y, tau, 1e-3)
        - (nu[0] / a11) * (beta[0] / beta[1]) * (rc.b021 / y[1]) * v(y) / eps
}

fn criterion_8() -> Outcome {
    let alpha = 0.05;
    let mut notes = Vec::new();
    let (mut m1_max, mut rel, mut tilt_min, mut m2_max) = (f64::NEG_INFINITY, 0.0_f64, f64::INFINITY, f64::NEG_INFINITY);
    let mut ok = true;
    for th in [PI / 3.0, 2.0 * PI / 3.0, 3.0 * PI / 4.0] {
        let g = geom(th)?;
        let b = build_barrier(&g, alpha).map_err(err)?;
        let cstar = b.cstar();
        let f = |t: f64| legendre_p(alpha, t.cos()).unwrap();
        // decreasing profile on 500 points of (0, θ₀]
        let pts = linspace(0.0, th, 501);
        let decreasing = pts.windows(2).all(|w| f(w[1]) < f(w[0]));
        let h = 1e-4;
        let slope0 = (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
        ok &= cstar > 0.0 && cstar < 1.0 && decreasing && slope0.abs() <= 1e-8;
        notes.push(format!("c*({th:.3}) = {cstar:.4}"));
        for s in barrier_regime_s(th) {
            let bcv = bc(&g, s)?;
            if bcv.quadrant_product() <= 0.0 {
                return Err(format!("s = {s} not in the barrier regime"));
            }
            let rc = RotatedCoefficients::laplacian(&bcv).map_err(err)?;
            let m1 = m1_coefficient(&b, &bcv, &rc).map_err(err)?;
            let fd = m1_by_differences(&b, th, s, &rc);
            m1_max = m1_max.max(m1);
            rel = rel.max((m1 - fd).abs() / m1.abs());
            let tilt = max_admissible_tilt(&bcv, &b, &rc).map_err(err)?;
            tilt_min = tilt_min.min(tilt);
            m2_max = m2_max.max(m2_coefficient(&b, &bcv, &rc, tilt).map_err(err)?);
        }
    }
    ok &= m1_max < 0.0 && rel <= 1e-8 && tilt_min >= 1e-6 && m2_max < 0.0;
    ensure(
        ok,
        format!(
            "{}; max m1 = {m1_max:.3e}, closed form vs differences {rel:.2e} relative, min tilt {tilt_min:.3e}, max m2 = {m2_max:.3e}",
            notes.join(", ")
        ),
    )
}

fn criterion_9() -> Outcome {
    let h = 1e-5;
    let (mut w0, mut w1, mut ws) = (0.0_f64, 0.0_f64, 0.0_f64);
    for th in linspace(0.1, 3.0, 59) {
        let g = geom(th)?;
        let at0 = neumann_mismatch(&g, 0.0).map_err(err)?;
        w0 = w0.max(at0.abs());
        w1 = w1.max((neumann_mismatch(&g, 1.0).map_err(err)? - 1.0 / th.tan()).abs());
        // one-sided, with the O(h) term removed by a second step
        let d = |h: f64| -> Result<f64, String> { Ok((neumann_mismatch(&g, h).map_err(err)? - at0) / h) };
        let fd = 2.0 * d(0.5 * h)? - d(h)?;
        ws = ws.max((fd - (1.0 - th.cos()) / th.sin().powi(3)).abs());
    }
    let half = neumann_exponent(&geom(PI / 2.0)?).map_err(err)?;
    let mut ok = w0 <= 1e-12 && w1 <= 1e-10 && ws <= 1e-4 && (half - 1.0).abs() <= 1e-8;
    let mut roots = Vec::new();
    for th in [2.0 * PI / 3.0, 3.0 * PI / 4.0] {
        let g = geom(th)?;
        let a = neumann_exponent(&g).map_err(err)?;
        let sol = SeparableSolution::first_harmonic(a, 0.0, 1.0).map_err(err)?;
        // normal derivative of r^α P¹_α(cos θ) cos φ at φ = 0 on the lateral boundary
        let u = |y: [f64; 2]| sol.value(SphericalPoint::new(y[0].hypot(y[1]), y[1].atan2(y[0]), 0.0)).unwrap();
        let nu = [th.sin(), -th.cos()];
        let mut res = 0.0_f64;
        for r in linspace(0.1, 1.0, 20) {
            let y = [r * th.cos(), r * th.sin()];
            res = res.max(richardson_directional(u, y, nu, 1e-3 * r).abs());
        }
        let base = SectorGrid::new(1e-2, 1.0, 21, 9, 1.15, th, 1).map_err(err)?;
        let orders = residual_study(&sol, &base, 3).map_err(err)?.orders;
        ok &= a > 0.0 && a < 1.0 && res <= 1e-6 && orders.iter().all(|p| (1.7..=2.3).contains(p));
        roots.push(format!("α({th:.3}) = {a:.6}, residual {res:.1e}, orders {orders:.3?}"));
    }
    ensure(
        ok,
        format!(
            "|W(0)| {w0:.1e}, |W(1) - cot θ₀| {w1:.1e}, slope {ws:.1e}, exponent(π/2) - 1 = {:.1e}; {}",
            half - 1.0,
            roots.join("; ")
        ),
    )
}

fn criterion_10() -> Outcome {
    let zs = linspace(-0.9, 1.0, 39);
    let polys: [fn(f64) -> f64; 4] = [
        |_| 1.0,
        |z| z,
        |z| 0.5 * (3.0 * z * z - 1.0),
        |z| 0.5 * (5.0 * z * z * z - 3.0 * z),
    ];
    let p = |a: f64, z: f64| legendre_p(a, z).map_err(err);
    let mut int_dev = 0.0_f64;
    for (n, poly) in polys.iter().enumerate() {
        for &z in &zs {
            int_dev = int_dev.max((p(n as f64, z)? - poly(z)).abs());
        }
    }
    let mut rec = 0.0_f64;
    for a in linspace(0.1, 2.0, 39) {
        for &z in &zs {
            let r = (a + 1.0) * p(a + 1.0, z)? - (2.0 * a + 1.0) * z * p(a, z)? + a * p(a - 1.0, z)?;
            rec = rec.max(r.abs());
        }
    }
    let mut quad = 0.0_f64;
    for a in [0.25, 0.5, 0.75] {
        for &z in &zs {
            quad = quad.max((p(a, z)? - legendre_by_quadrature(a, z)).abs());
        }
    }
    ensure(
        int_dev <= 1e-12 && rec <= 1e-10 && quad <= 1e-9,
        format!("integer degrees {int_dev:.1e}, recurrence {rec:.1e}, quadrature {quad:.1e}"),
    )
}

fn criterion_11() -> Outcome {
    let mut rows = 0;
    let mut violations = 0;
    let mut min = f64::INFINITY;
    let mut one_sided_edge_failures = 0;
    for (th, s) in [(PI / 3.0, 0.5), (2.0 * PI / 3.0, 1.8), (3.0 * PI / 4.0, -0.3)] {
        let g = geom(th)?;
        let b = bc(&g, s)?;
        for mode in [0, 1] {
            let grid = SectorGrid::default_for(&g, mode).map_err(err)?;
            for kind in [EdgeKind::Dirichlet, EdgeKind::MonotoneOblique(b)] {
                let rep = check_m_matrix(&grid, &kind);
                rows += rep.rows_checked;
                violations += rep.violations.len();
                let (r0, r1) = (grid.r_min(), grid.r_max());
                // rough nonnegative data: an outer spike, a checkerboard on the cone edge
                let data = BoundaryData::from_fn(&grid, kind, |r, t| {
                    Ok(if r == r1 {
                        if (t - 0.5 * th).abs() < 0.05 { 5.0 } else { 0.0 }
                    } else if r == r0 {
                        1.0
                    } else {
                        ((r.ln() * 40.0).sin()).max(0.0)
                    })
                })
                .map_err(err)?;
                let u = solve_dirichlet(&grid, &data, None).map_err(err)?;
                min = min.min(u.min());
            }
            if !check_m_matrix(&grid, &EdgeKind::Oblique(b)).passed() {
                one_sided_edge_failures += 1;
            }
        }
    }
    ensure(
        violations == 0 && min >= -1e-12,
        format!(
            "{rows} rows on default grids (Dirichlet and monotone oblique edges), {violations} violations, \
             min of nonnegative-data solutions {min:.2e}; second-order one-sided edge rows fail the check on {one_sided_edge_failures} of 6 grids"
        ),
    )
}

fn criterion_12() -> Outcome {
    let mut out = Vec::new();
    for kappa in [1.0, 0.75, 2.5] {
        for n in 3..=5 {
            let a = DMatrix::<f64>::identity(n, n) * kappa;
            let red = reduce_to_axisymmetric(&a, Ellipticity::new(0.5, 3.0).map_err(err)?).map_err(err)?;
            let expect = (n as f64 - 2.0) * kappa;
            if red.b021 != expect {
                return Err(format!("n = {n}, κ = {kappa}: b = {} vs {expect}", red.b021));
            }
            out.push(format!("{}", red.b021));
        }
    }
    Ok(format!("b for κ ∈ {{1, 0.75, 2.5}}, n = 3, 4, 5: {}", out.join(", ")))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut found = Vec::new();
    let mut results: Vec<(usize, Outcome, f64)> = Vec::new();
    let mut run = |n: usize, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match &r {
            Ok(m) => println!("[PASS] criterion {n}: {m} ({secs:.2} s)"),
            Err(m) => println!("[FAIL] criterion {n}: {m} ({secs:.2} s)"),
        }
        results.push((n, r, secs));
    };
    run(1, &mut criterion_1);
    run(2, &mut criterion_2);
    run(3, &mut criterion_3);
    run(4, &mut || criterion_4(&mut found));
    run(5, &mut || criterion_5(&found));
    run(6, &mut criterion_6);
    run(7, &mut || criterion_7(&found));
    run(8, &mut criterion_8);
    run(9, &mut criterion_9);
    run(10, &mut criterion_10);
    run(11, &mut criterion_11);
    run(12, &mut criterion_12);
    let failed = results.iter().filter(|r| r.1.is_err()).count();
    println!(
        "{} of {} criteria passed in {:.1} s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
