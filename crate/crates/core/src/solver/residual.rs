use nalgebra::Vector2;

use super::grid::{DiscreteField, SectorGrid};
use super::stencil::{apply, laplacian_row};
use super::system::{row_kind, EdgeKind, RowKind};
use crate::error::{Error, Result};
use crate::exponent::{ConeGeometry, ObliqueBC, SeparableSolution};

/// Nodal values of the meridian profile `r^α P^m_α(cos θ)` of `sol`.
///
/// The azimuthal factor is dropped; the grid mode must match the order of
/// the solution.
pub fn profile_field(sol: &SeparableSolution, grid: &SectorGrid) -> Result<DiscreteField> {
    if sol.order() != grid.mode() {
        return Err(Error::InvalidGrid(format!(
            "solution of order {} on a grid for mode {}",
            sol.order(),
            grid.mode()
        )));
    }
    let profile = grid
        .theta()
        .iter()
        .map(|&t| sol.profile(t))
        .collect::<Result<Vec<_>>>()?;
    let a = sol.alpha();
    let mut values = Vec::with_capacity(grid.len());
    for &r in grid.r() {
        let ra = r.powf(a);
        values.extend(profile.iter().map(|p| ra * p));
    }
    DiscreteField::new(grid.clone(), values)
}

/// Discrete Laplacian applied to exact nodal values.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// Residual per node; zero on nodes that carry no Laplacian row.
    pub field: DiscreteField,
    /// Max over nodes with a Laplacian row.
    pub max: f64,
}

impl ResidualReport {
    /// Max over the Laplacian rows of `coarse`, a grid from which this
    /// report's grid arises by repeated [`SectorGrid::refined`].
    pub fn max_on(&self, coarse: &SectorGrid) -> Result<f64> {
        let restricted = restrict_to(&self.field, coarse)?;
        let kind = EdgeKind::Dirichlet;
        let mut m = 0.0_f64;
        for i in 0..coarse.nr() {
            for j in 0..coarse.ntheta() {
                if row_kind(coarse, &kind, i, j) != RowKind::Fixed {
                    m = m.max(restricted.get(i, j).abs());
                }
            }
        }
        Ok(m)
    }
}

/// Restricts `field` through as many nested levels as it takes to reach `coarse`.
pub fn restrict_to(field: &DiscreteField, coarse: &SectorGrid) -> Result<DiscreteField> {
    let mut f = field.clone();
    while f.grid().nr() > coarse.nr() {
        let mut g = coarse.clone();
        while g.refined().nr() < f.grid().nr() {
            g = g.refined();
        }
        f = f.restrict(&g)?;
    }
    if f.grid() != coarse {
        return Err(Error::InvalidGrid("grids are not nested".into()));
    }
    Ok(f)
}

pub fn laplacian_residual(sol: &SeparableSolution, grid: &SectorGrid) -> Result<ResidualReport> {
    let u = profile_field(sol, grid)?;
    let kind = EdgeKind::Dirichlet;
    let mut values = vec![0.0; grid.len()];
    let mut max = 0.0_f64;
    for i in 0..grid.nr() {
        for j in 0..grid.ntheta() {
            if row_kind(grid, &kind, i, j) == RowKind::Fixed {
                continue;
            }
            let v = apply(&laplacian_row(grid, i, j), u.values());
            values[grid.index(i, j)] = v;
            max = max.max(v.abs());
        }
    }
    Ok(ResidualReport {
        field: DiscreteField::new(grid.clone(), values)?,
        max,
    })
}

/// Directional derivative on the lateral boundary, compared with `r^{α-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryResidual {
    pub r: f64,
    /// `d·Du` at the boundary point.
    pub value: f64,
    /// `|d·Du| / r^{α-1}`.
    pub scaled: f64,
}

/// `d·Du` of the meridian trace (`φ = 0`) at the boundary points
/// `r (cos θ₀, sin θ₀)` by Richardson-extrapolated central differences.
pub fn directional_boundary_residual(
    sol: &SeparableSolution,
    geom: &ConeGeometry,
    direction: Vector2<f64>,
    radii: &[f64],
) -> Result<Vec<BoundaryResidual>> {
    let d = direction.normalize();
    radii
        .iter()
        .map(|&r| {
            let y = geom.boundary_point(r);
            let f = |t: f64| sol.value_meridian([y.x + t * d.x, y.y + t * d.y]);
            let h = 1e-3 * r;
            let central = |h: f64| -> Result<f64> { Ok((f(h)? - f(-h)?) / (2.0 * h)) };
            let value = (4.0 * central(0.5 * h)? - central(h)?) / 3.0;
            Ok(BoundaryResidual {
                r,
                value,
                scaled: value.abs() / r.powf(sol.alpha() - 1.0),
            })
        })
        .collect()
}

/// `β₀·Du` on the lateral boundary.
pub fn oblique_boundary_residual(
    sol: &SeparableSolution,
    geom: &ConeGeometry,
    bc: &ObliqueBC,
    radii: &[f64],
) -> Result<Vec<BoundaryResidual>> {
    directional_boundary_residual(sol, geom, bc.beta(), radii)
}

/// `ν·Du` on the lateral boundary.
pub fn neumann_boundary_residual(
    sol: &SeparableSolution,
    geom: &ConeGeometry,
    radii: &[f64],
) -> Result<Vec<BoundaryResidual>> {
    directional_boundary_residual(sol, geom, geom.inward_normal(), radii)
}
