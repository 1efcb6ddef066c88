use faer::prelude::*;
use faer::sparse::{SparseColMat, Triplet};

use super::grid::{DiscreteField, SectorGrid};
use super::stencil::{apply, laplacian_row, oblique_ghost_row, oblique_row, Row};
use crate::error::{Error, Result};
use crate::exponent::ObliqueBC;

/// Relative and absolute parts of the accepted solve residual.
pub const SOLVE_RTOL: f64 = 1e-12;
pub const SOLVE_ATOL: f64 = 1e-12;

/// Condition imposed on the lateral edge `θ = θ₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeKind {
    Dirichlet,
    /// Homogeneous `β₀·Du = 0` by second-order one-sided differences.
    Oblique(ObliqueBC),
    /// Homogeneous `β₀·Du = 0` through a reflected ghost node, with the
    /// radial drift upwinded wherever centring would break monotonicity.
    /// Always yields M-matrix rows on the edge; first order where upwinded.
    MonotoneOblique(ObliqueBC),
}

impl EdgeKind {
    pub fn oblique(&self) -> Option<&ObliqueBC> {
        match self {
            EdgeKind::Dirichlet => None,
            EdgeKind::Oblique(bc) | EdgeKind::MonotoneOblique(bc) => Some(bc),
        }
    }
}

/// Data on the three non-axis edges. `inner`, `outer` and a Dirichlet cone
/// edge hold one value per node along the edge.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryData {
    pub inner: Vec<f64>,
    pub outer: Vec<f64>,
    pub cone: Option<Vec<f64>>,
    pub kind: EdgeKind,
}

impl BoundaryData {
    /// Samples `f(r, θ)` on the Dirichlet edges.
    pub fn from_fn<F>(grid: &SectorGrid, kind: EdgeKind, mut f: F) -> Result<Self>
    where
        F: FnMut(f64, f64) -> Result<f64>,
    {
        let (r_min, r_max) = (grid.r_min(), grid.r_max());
        let inner = grid.theta().iter().map(|&t| f(r_min, t)).collect::<Result<_>>()?;
        let outer = grid.theta().iter().map(|&t| f(r_max, t)).collect::<Result<_>>()?;
        let cone = match kind {
            EdgeKind::Dirichlet => Some(
                grid.r()
                    .iter()
                    .map(|&r| f(r, grid.theta0()))
                    .collect::<Result<_>>()?,
            ),
            _ => None,
        };
        Ok(Self {
            inner,
            outer,
            cone,
            kind,
        })
    }

    fn check(&self, grid: &SectorGrid) -> Result<()> {
        let bad = |what: &str, got: usize, want: usize| {
            Error::InvalidGrid(format!("{what} edge has {got} values, grid needs {want}"))
        };
        if self.inner.len() != grid.ntheta() {
            return Err(bad("inner", self.inner.len(), grid.ntheta()));
        }
        if self.outer.len() != grid.ntheta() {
            return Err(bad("outer", self.outer.len(), grid.ntheta()));
        }
        match (&self.kind, &self.cone) {
            (EdgeKind::Dirichlet, Some(c)) if c.len() != grid.nr() => Err(bad("cone", c.len(), grid.nr())),
            (EdgeKind::Dirichlet, None) => Err(Error::InvalidGrid("Dirichlet cone edge without data".into())),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RowKind {
    Fixed,
    Interior,
    Axis,
    Oblique,
}

pub(crate) fn row_kind(grid: &SectorGrid, kind: &EdgeKind, i: usize, j: usize) -> RowKind {
    let last_j = grid.ntheta() - 1;
    if i == 0 || i == grid.nr() - 1 {
        RowKind::Fixed
    } else if j == last_j {
        match kind {
            EdgeKind::Dirichlet => RowKind::Fixed,
            _ => RowKind::Oblique,
        }
    } else if j == 0 {
        if grid.mode() == 0 {
            RowKind::Axis
        } else {
            RowKind::Fixed
        }
    } else {
        RowKind::Interior
    }
}

/// Row of `M = -L_h`, or of `-β₀·D_h` on a one-sided oblique edge.
pub(crate) fn operator_row(grid: &SectorGrid, kind: &EdgeKind, i: usize, j: usize) -> Option<Row> {
    let mut row = match (row_kind(grid, kind, i, j), kind) {
        (RowKind::Fixed, _) => return None,
        (RowKind::Oblique, EdgeKind::Oblique(bc)) => oblique_row(grid, bc, i),
        (RowKind::Oblique, EdgeKind::MonotoneOblique(bc)) => oblique_ghost_row(grid, bc, i),
        _ => laplacian_row(grid, i, j),
    };
    for e in &mut row {
        e.1 = -e.1;
    }
    Some(row)
}

fn diagonal(row: &Row, k: usize) -> f64 {
    row.iter().filter(|e| e.0 == k).map(|e| e.1).sum()
}

/// Solves `Δ_h u = rhs` with the given edge data. The axis carries the
/// reflection condition for `m = 0` and `u = 0` for `m = 1`.
pub fn solve_dirichlet(
    grid: &SectorGrid,
    data: &BoundaryData,
    rhs: Option<&DiscreteField>,
) -> Result<DiscreteField> {
    data.check(grid)?;
    if let Some(f) = rhs {
        if f.grid() != grid {
            return Err(Error::InvalidGrid("right-hand side lives on another grid".into()));
        }
    }
    let n = grid.len();
    let last_j = grid.ntheta() - 1;
    let mut triplets = Vec::with_capacity(5 * n);
    let mut rows: Vec<Option<Row>> = Vec::with_capacity(n);
    let mut b = vec![0.0; n];
    for i in 0..grid.nr() {
        for j in 0..grid.ntheta() {
            let k = grid.index(i, j);
            match operator_row(grid, &data.kind, i, j) {
                None => {
                    b[k] = if i == 0 {
                        data.inner[j]
                    } else if i == grid.nr() - 1 {
                        data.outer[j]
                    } else if j == last_j {
                        data.cone.as_ref().map_or(0.0, |c| c[i])
                    } else {
                        0.0
                    };
                    triplets.push(Triplet::new(k, k, 1.0));
                    rows.push(None);
                }
                Some(mut row) => {
                    let d = diagonal(&row, k);
                    if !(d.abs() > 0.0) {
                        return Err(Error::SingularSystem(format!("zero diagonal at node ({i}, {j})")));
                    }
                    for e in &mut row {
                        e.1 /= d;
                        triplets.push(Triplet::new(k, e.0, e.1));
                    }
                    let boundary_row = matches!(data.kind, EdgeKind::Oblique(_)) && j == last_j;
                    let f = if boundary_row { 0.0 } else { rhs.map_or(0.0, |f| f.get(i, j)) };
                    b[k] = -f / d;
                    rows.push(Some(row));
                }
            }
        }
    }
    let m = SparseColMat::<usize, f64>::try_new_from_triplets(n, n, &triplets)
        .map_err(|e| Error::SingularSystem(format!("assembly failed: {e:?}")))?;
    let lu = m
        .sp_lu()
        .map_err(|e| Error::SingularSystem(format!("sparse LU failed: {e:?}")))?;
    let rhs_col = Col::<f64>::from_fn(n, |k| b[k]);
    let x = lu.solve(&rhs_col);
    let u: Vec<f64> = (0..n).map(|k| x[k]).collect();

    let bnorm = b.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let mut res = 0.0_f64;
    for (k, row) in rows.iter().enumerate() {
        let lhs = match row {
            None => u[k],
            Some(row) => apply(row, &u),
        };
        res = res.max((lhs - b[k]).abs());
    }
    if !(res <= SOLVE_RTOL * bnorm + SOLVE_ATOL) {
        return Err(Error::SingularSystem(format!(
            "solve residual {res:e} above {:e}",
            SOLVE_RTOL * bnorm + SOLVE_ATOL
        )));
    }
    DiscreteField::new(grid.clone(), u).map_err(|_| Error::SingularSystem("non-finite solution".into()))
}

/// Sign defect found by [`check_m_matrix`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MMatrixDefect {
    /// Off-diagonal entry above `10⁻¹²·|diag|`, with the offending column.
    PositiveOffDiagonal { column: usize, value: f64 },
    /// Row sum below `-10⁻¹²·|diag|`.
    NegativeRowSum { sum: f64 },
    NonPositiveDiagonal { value: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MMatrixViolation {
    pub i: usize,
    pub j: usize,
    /// Whether the row is an oblique cone-edge row.
    pub edge: bool,
    pub defect: MMatrixDefect,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MMatrixReport {
    pub rows_checked: usize,
    pub edge_rows_checked: usize,
    pub violations: Vec<MMatrixViolation>,
}

impl MMatrixReport {
    /// Every equation row, oblique edge rows included, has the M-matrix
    /// sign pattern. Together with the Dirichlet rows this gives the
    /// discrete maximum principle.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Interior and axis rows have the M-matrix sign pattern.
    pub fn interior_passed(&self) -> bool {
        self.violations.iter().all(|v| v.edge)
    }
}

fn row_defects(row: &Row, k: usize) -> Vec<MMatrixDefect> {
    let d = diagonal(row, k);
    let tol = 1e-12 * d.abs();
    let mut out = Vec::new();
    if !(d > 0.0) {
        out.push(MMatrixDefect::NonPositiveDiagonal { value: d });
    }
    for &(c, v) in row {
        if c != k && v > tol {
            out.push(MMatrixDefect::PositiveOffDiagonal { column: c, value: v });
        }
    }
    let sum: f64 = row.iter().map(|e| e.1).sum();
    if sum < -tol {
        out.push(MMatrixDefect::NegativeRowSum { sum });
    }
    out
}

/// Checks the sign pattern of every equation row of the assembled system.
pub fn check_m_matrix(grid: &SectorGrid, kind: &EdgeKind) -> MMatrixReport {
    let mut violations = Vec::new();
    let (mut rows_checked, mut edge_rows_checked) = (0, 0);
    for i in 0..grid.nr() {
        for j in 0..grid.ntheta() {
            let k = grid.index(i, j);
            let Some(row) = operator_row(grid, kind, i, j) else { continue };
            let edge = row_kind(grid, kind, i, j) == RowKind::Oblique;
            rows_checked += 1;
            edge_rows_checked += usize::from(edge);
            violations.extend(
                row_defects(&row, k)
                    .into_iter()
                    .map(|defect| MMatrixViolation { i, j, edge, defect }),
            );
        }
    }
    MMatrixReport {
        rows_checked,
        edge_rows_checked,
        violations,
    }
}
