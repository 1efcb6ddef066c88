//! Finite-difference weights for the axisymmetric spherical Laplacian
//!
//! ```text
//! Δu = u_rr + (2/r) u_r + (u_θθ + cot θ u_θ)/r² - m² u/(r² sin²θ)
//! ```
//!
//! Radial differences are the standard three-point formulas on a
//! nonuniform grid. Polar differences are trigonometrically fitted so that
//! `1`, `cos θ` and `sin θ` are differentiated exactly, which makes every
//! linear function of `(y₁, y₂)` an exact discrete solution. For `m = 1` the
//! first polar difference is instead fitted on `1, sin θ, sin 2θ`; the
//! profile is odd about the axis and the plain fitted difference loses an
//! order next to it through the `cot θ` factor.

use nalgebra::{Matrix3, Vector3};

use super::grid::SectorGrid;
use crate::exponent::ObliqueBC;

/// Sparse row as `(flat index, coefficient)` pairs.
pub(crate) type Row = Vec<(usize, f64)>;

/// Weights of `u_rr + (2/r) u_r` at radial node `i` on `(i-1, i, i+1)`.
fn radial_weights(grid: &SectorGrid, i: usize) -> [f64; 3] {
    let r = grid.r();
    let (hm, hp) = (r[i] - r[i - 1], r[i + 1] - r[i]);
    let d1 = radial_first(grid, i);
    let s = hm + hp;
    let d2 = [2.0 / (hm * s), -2.0 / (hm * hp), 2.0 / (hp * s)];
    let k = 2.0 / r[i];
    [d2[0] + k * d1[0], d2[1] + k * d1[1], d2[2] + k * d1[2]]
}

/// Weights of `u_r` at radial node `i` on `(i-1, i, i+1)`.
pub(crate) fn radial_first(grid: &SectorGrid, i: usize) -> [f64; 3] {
    let r = grid.r();
    let (hm, hp) = (r[i] - r[i - 1], r[i + 1] - r[i]);
    let s = hm + hp;
    [-hp / (hm * s), (hp - hm) / (hm * hp), hm / (hp * s)]
}

/// Fitted second polar difference, `(1, -2, 1)/(4 sin²(h/2))`.
fn polar_second(h: f64) -> [f64; 3] {
    let d = 4.0 * (0.5 * h).sin().powi(2);
    [1.0 / d, -2.0 / d, 1.0 / d]
}

/// First polar difference at `θ` on `(θ-h, θ, θ+h)`.
fn polar_first(theta: f64, h: f64, mode: u32) -> [f64; 3] {
    if mode == 0 {
        let d = 2.0 * h.sin();
        return [-1.0 / d, 0.0, 1.0 / d];
    }
    let nodes = [theta - h, theta, theta + h];
    let m = Matrix3::from_fn(|row, col| match row {
        0 => 1.0,
        1 => nodes[col].sin(),
        _ => (2.0 * nodes[col]).sin(),
    });
    let rhs = Vector3::new(0.0, theta.cos(), 2.0 * (2.0 * theta).cos());
    // the Wronskian of {1, sin θ, sin 2θ} is -2 sin θ (2cos²θ + 1) ≠ 0 on (0, π)
    let w = m.lu().solve(&rhs).expect("fitted polar stencil is nonsingular on (0, π)");
    [w[0], w[1], w[2]]
}

/// One-sided first polar difference at the last node, on `(N, N-1, N-2)`.
pub(crate) fn polar_one_sided(h: f64) -> [f64; 3] {
    let cot_half = 1.0 / (0.5 * h).tan();
    let c = 1.0 / (2.0 * h.sin());
    [cot_half - c, -cot_half, c]
}

/// Row of the discrete Laplacian at node `(i, j)`, `1 ≤ i ≤ n_r - 2`,
/// `0 ≤ j ≤ n_θ - 2` (`j = 0` only for `m = 0`).
pub(crate) fn laplacian_row(grid: &SectorGrid, i: usize, j: usize) -> Row {
    let r = grid.r()[i];
    let h = grid.dtheta();
    let inv_r2 = 1.0 / (r * r);
    let mut row: Row = Vec::with_capacity(5);
    let wr = radial_weights(grid, i);
    row.push((grid.index(i - 1, j), wr[0]));
    row.push((grid.index(i + 1, j), wr[2]));
    let mut diag = wr[1];
    if j == 0 {
        debug_assert_eq!(grid.mode(), 0);
        // u_θθ + cot θ u_θ → 2u_θθ on the axis, with the ghost value u_{-1} = u_1
        let d = 4.0 * (0.5 * h).sin().powi(2);
        row.push((grid.index(i, 1), 4.0 / d * inv_r2));
        diag -= 4.0 / d * inv_r2;
    } else {
        let theta = grid.theta()[j];
        let (st, ct) = theta.sin_cos();
        let cot = ct / st;
        let a2 = polar_second(h);
        let a1 = polar_first(theta, h, grid.mode());
        row.push((grid.index(i, j - 1), (a2[0] + cot * a1[0]) * inv_r2));
        row.push((grid.index(i, j + 1), (a2[2] + cot * a1[2]) * inv_r2));
        diag += (a2[1] + cot * a1[1]) * inv_r2;
        let m2 = (grid.mode() * grid.mode()) as f64;
        diag -= m2 * inv_r2 / (st * st);
    }
    row.push((grid.index(i, j), diag));
    row
}

/// Row of `β₀·Du` at the cone-edge node `(i, n_θ - 1)`, `1 ≤ i ≤ n_r - 2`.
///
/// `β₀·Du = cos(s - θ₀) u_r - (ε/r) u_θ` with `ε = β₀·ν`.
pub(crate) fn oblique_row(grid: &SectorGrid, bc: &ObliqueBC, i: usize) -> Row {
    let n = grid.ntheta() - 1;
    let r = grid.r()[i];
    let along = (bc.s() - grid.theta0()).cos();
    let eps = bc.obliqueness();
    let d1 = radial_first(grid, i);
    let w = polar_one_sided(grid.dtheta());
    vec![
        (grid.index(i - 1, n), along * d1[0]),
        (grid.index(i + 1, n), along * d1[2]),
        (grid.index(i, n - 1), -eps / r * w[1]),
        (grid.index(i, n - 2), -eps / r * w[2]),
        (grid.index(i, n), along * d1[1] - eps / r * w[0]),
    ]
}

/// Row of the discrete Laplacian at the cone-edge node `(i, n_θ - 1)` with
/// the oblique condition folded in through a reflected ghost node.
///
/// The ghost value is `u_{N+1} = u_{N-1} + 2 sin h · u_θ` with
/// `u_θ = r cos(s - θ₀) u_r / ε` from `β₀·Du = 0`. The resulting radial
/// drift is centred when that keeps the row monotone and upwinded otherwise.
pub(crate) fn oblique_ghost_row(grid: &SectorGrid, bc: &ObliqueBC, i: usize) -> Row {
    let n = grid.ntheta() - 1;
    let r = grid.r()[i];
    let h = grid.dtheta();
    let inv_r2 = 1.0 / (r * r);
    let theta = grid.theta0();
    let (st, ct) = theta.sin_cos();
    let cot = ct / st;
    let a2 = polar_second(h);
    let a1 = polar_first(theta, h, grid.mode());
    let c_minus = (a2[0] + cot * a1[0]) * inv_r2;
    let c_zero = (a2[1] + cot * a1[1]) * inv_r2;
    let c_plus = (a2[2] + cot * a1[2]) * inv_r2;
    let drift = c_plus * 2.0 * h.sin() * r * (bc.s() - theta).cos() / bc.obliqueness();

    let rr = grid.r();
    let (hm, hp) = (r - rr[i - 1], rr[i + 1] - r);
    let d1 = radial_first(grid, i);
    let w = radial_weights(grid, i);
    let centred = [w[0] + drift * d1[0], w[1] + drift * d1[1], w[2] + drift * d1[2]];
    let wr = if centred[0] >= 0.0 && centred[2] >= 0.0 {
        centred
    } else if drift > 0.0 {
        [w[0], w[1] - drift / hp, w[2] + drift / hp]
    } else {
        [w[0] - drift / hm, w[1] + drift / hm, w[2]]
    };
    let m2 = (grid.mode() * grid.mode()) as f64;
    vec![
        (grid.index(i - 1, n), wr[0]),
        (grid.index(i + 1, n), wr[2]),
        (grid.index(i, n - 1), c_minus + c_plus),
        (grid.index(i, n), wr[1] + c_zero - m2 * inv_r2 / (st * st)),
    ]
}

pub(crate) fn apply(row: &Row, values: &[f64]) -> f64 {
    row.iter().map(|&(k, c)| c * values[k]).sum()
}
