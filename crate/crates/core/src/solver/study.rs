use rayon::prelude::*;

use super::grid::SectorGrid;
use super::residual::{laplacian_residual, profile_field, restrict_to};
use super::system::{solve_dirichlet, BoundaryData, EdgeKind};
use crate::error::Result;
use crate::exponent::SeparableSolution;

/// `log₂(e_coarse / e_fine)` for one halving of the mesh size.
pub fn observed_order(e_coarse: f64, e_fine: f64) -> f64 {
    (e_coarse / e_fine).log2()
}

/// `levels + 1` grids, each the refinement of the previous one.
pub fn refinement_sequence(base: &SectorGrid, levels: usize) -> Vec<SectorGrid> {
    let mut out = vec![base.clone()];
    for _ in 0..levels {
        let next = out.last().unwrap().refined();
        out.push(next);
    }
    out
}

/// Errors on a refinement sequence, all measured at the nodes of the base grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinementStudy {
    pub grids: Vec<(usize, usize)>,
    pub errors: Vec<f64>,
    pub orders: Vec<f64>,
}

impl RefinementStudy {
    fn from_errors(grids: &[SectorGrid], errors: Vec<f64>) -> Self {
        let orders = errors.windows(2).map(|w| observed_order(w[0], w[1])).collect();
        Self {
            grids: grids.iter().map(|g| (g.nr(), g.ntheta())).collect(),
            errors,
            orders,
        }
    }

    /// Whether every observed order lies in `[lo, hi]`.
    pub fn orders_within(&self, lo: f64, hi: f64) -> bool {
        !self.orders.is_empty() && self.orders.iter().all(|p| (lo..=hi).contains(p))
    }
}

/// Truncation error of the discrete Laplacian on `sol` under refinement.
pub fn residual_study(sol: &SeparableSolution, base: &SectorGrid, levels: usize) -> Result<RefinementStudy> {
    let grids = refinement_sequence(base, levels);
    let errors = grids
        .par_iter()
        .map(|g| laplacian_residual(sol, g)?.max_on(base))
        .collect::<Result<Vec<_>>>()?;
    Ok(RefinementStudy::from_errors(&grids, errors))
}

/// Max nodal error of the discrete solution with exact edge data from `sol`.
pub fn solve_error(sol: &SeparableSolution, grid: &SectorGrid, kind: EdgeKind, base: &SectorGrid) -> Result<f64> {
    let exact = profile_field(sol, grid)?;
    let a = sol.alpha();
    let data = BoundaryData::from_fn(grid, kind, |r, t| Ok(r.powf(a) * sol.profile(t)?))?;
    let u = solve_dirichlet(grid, &data, None)?;
    Ok(restrict_to(&u.sub(&exact)?, base)?.max_abs())
}

/// Solve error against `sol` under refinement.
pub fn solve_study(
    sol: &SeparableSolution,
    base: &SectorGrid,
    kind: EdgeKind,
    levels: usize,
) -> Result<RefinementStudy> {
    let grids = refinement_sequence(base, levels);
    let errors = grids
        .par_iter()
        .map(|g| solve_error(sol, g, kind, base))
        .collect::<Result<Vec<_>>>()?;
    Ok(RefinementStudy::from_errors(&grids, errors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_from_errors() {
        assert!((observed_order(4.0, 1.0) - 2.0).abs() < 1e-15);
        let g = SectorGrid::new(0.01, 1.0, 11, 5, 1.2, 1.0, 0).unwrap();
        let seq = refinement_sequence(&g, 2);
        assert_eq!(seq.len(), 3);
        assert_eq!(seq[2].nr(), 41);
        assert!(seq[1].nests(&seq[0]));
    }

    #[test]
    fn axisymmetric_solve_converges() {
        let sol = SeparableSolution::axisymmetric(0.6).unwrap();
        let g = SectorGrid::new(0.01, 1.0, 21, 9, 1.15, 2.0, 0).unwrap();
        let st = solve_study(&sol, &g, EdgeKind::Dirichlet, 2).unwrap();
        assert!(st.orders_within(1.7, 2.3), "{:?}", st.orders);
    }
}
