use std::io::Write;

use crate::error::{Error, Result};
use crate::exponent::{ConeGeometry, THETA0_MAX};

/// Default inner radius as a fraction of the outer radius.
pub const DEFAULT_RMIN_FRACTION: f64 = 1e-3;
/// Default geometric ratio of consecutive radial steps.
pub const DEFAULT_GRADING: f64 = 1.05;
/// Default number of radial nodes.
pub const DEFAULT_NR: usize = 143;
/// Default number of polar nodes.
pub const DEFAULT_NTHETA: usize = 33;

/// Tensor grid on the annular sector `[r_min, r_max] × [0, θ₀]`.
///
/// Radial steps grow geometrically away from `r_min`; polar nodes are
/// uniform. Node `(i, j)` has flat index `i·n_θ + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorGrid {
    r: Vec<f64>,
    theta: Vec<f64>,
    theta0: f64,
    grading: f64,
    mode: u32,
}

impl SectorGrid {
    pub fn new(
        r_min: f64,
        r_max: f64,
        nr: usize,
        ntheta: usize,
        grading: f64,
        theta0: f64,
        mode: u32,
    ) -> Result<Self> {
        if !(r_min > 0.0 && r_max > r_min && r_max.is_finite()) {
            return Err(Error::InvalidGrid(format!("need 0 < r_min < r_max, got {r_min}, {r_max}")));
        }
        if nr < 3 || ntheta < 3 {
            return Err(Error::InvalidGrid(format!("need at least 3×3 nodes, got {nr}×{ntheta}")));
        }
        if !(grading >= 1.0 && grading.is_finite()) {
            return Err(Error::InvalidGrid(format!("grading {grading} must be ≥ 1")));
        }
        let intervals = nr - 1;
        let h0 = if grading == 1.0 {
            (r_max - r_min) / intervals as f64
        } else {
            (r_max - r_min) * (grading - 1.0) / (grading.powi(intervals as i32) - 1.0)
        };
        let mut r = Vec::with_capacity(nr);
        r.push(r_min);
        let mut h = h0;
        for _ in 1..intervals {
            r.push(r.last().unwrap() + h);
            h *= grading;
        }
        r.push(r_max);
        Self::from_nodes(r, ntheta, grading, theta0, mode)
    }

    /// Radial nodes `r_min·g^i` with `g = (r_max/r_min)^{1/(n_r-1)}`.
    pub fn log_uniform(
        r_min: f64,
        r_max: f64,
        nr: usize,
        ntheta: usize,
        theta0: f64,
        mode: u32,
    ) -> Result<Self> {
        if !(r_min > 0.0 && r_max > r_min) || nr < 3 {
            return Err(Error::InvalidGrid(format!("bad log-uniform grid {r_min}..{r_max} with {nr} nodes")));
        }
        let g = (r_max / r_min).powf(1.0 / (nr - 1) as f64);
        let mut r: Vec<f64> = (0..nr).map(|i| r_min * g.powi(i as i32)).collect();
        r[nr - 1] = r_max;
        Self::from_nodes(r, ntheta, g, theta0, mode)
    }

    /// Default grid on the cone: `r_min = 10⁻³R`, grading 1.05.
    pub fn default_for(geom: &ConeGeometry, mode: u32) -> Result<Self> {
        let r_max = geom.radius();
        Self::new(
            DEFAULT_RMIN_FRACTION * r_max,
            r_max,
            DEFAULT_NR,
            DEFAULT_NTHETA,
            DEFAULT_GRADING,
            geom.theta0(),
            mode,
        )
    }

    fn from_nodes(r: Vec<f64>, ntheta: usize, grading: f64, theta0: f64, mode: u32) -> Result<Self> {
        if !(theta0 > 0.0 && theta0 < THETA0_MAX) {
            return Err(Error::InvalidGrid(format!("opening angle {theta0} outside (0, π - 0.045)")));
        }
        if mode > 1 {
            return Err(Error::InvalidGrid(format!("azimuthal mode {mode} not in {{0, 1}}")));
        }
        if r.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidGrid("radial nodes are not strictly increasing".into()));
        }
        let n = (ntheta - 1) as f64;
        let theta = (0..ntheta).map(|j| theta0 * j as f64 / n).collect();
        Ok(Self {
            r,
            theta,
            theta0,
            grading,
            mode,
        })
    }

    /// Halves every radial and polar interval. The radial split keeps the
    /// grading geometric (ratio `√g`), and every coarse node is a fine node.
    pub fn refined(&self) -> Self {
        let q = self.grading.sqrt();
        let mut r = Vec::with_capacity(2 * self.r.len() - 1);
        for w in self.r.windows(2) {
            r.push(w[0]);
            r.push(w[0] + (w[1] - w[0]) / (1.0 + q));
        }
        r.push(*self.r.last().unwrap());
        let ntheta = 2 * self.theta.len() - 1;
        let n = (ntheta - 1) as f64;
        Self {
            r,
            theta: (0..ntheta).map(|j| self.theta0 * j as f64 / n).collect(),
            theta0: self.theta0,
            grading: q,
            mode: self.mode,
        }
    }

    /// Whether `coarse` is this grid with every other node removed.
    pub fn nests(&self, coarse: &SectorGrid) -> bool {
        self.nr() == 2 * coarse.nr() - 1
            && self.ntheta() == 2 * coarse.ntheta() - 1
            && self.theta0 == coarse.theta0
            && self.mode == coarse.mode
            && coarse.r.iter().enumerate().all(|(i, &r)| self.r[2 * i] == r)
    }

    pub fn r(&self) -> &[f64] {
        &self.r
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn nr(&self) -> usize {
        self.r.len()
    }

    pub fn ntheta(&self) -> usize {
        self.theta.len()
    }

    pub fn len(&self) -> usize {
        self.nr() * self.ntheta()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.ntheta() + j
    }

    pub fn r_min(&self) -> f64 {
        self.r[0]
    }

    pub fn r_max(&self) -> f64 {
        *self.r.last().unwrap()
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn grading(&self) -> f64 {
        self.grading
    }

    pub fn mode(&self) -> u32 {
        self.mode
    }

    /// Uniform polar step.
    pub fn dtheta(&self) -> f64 {
        self.theta0 / (self.ntheta() - 1) as f64
    }

    /// Index of the polar node at `theta`, if there is one.
    pub fn theta_index(&self, theta: f64) -> Option<usize> {
        let j = (theta / self.dtheta()).round();
        if j < 0.0 || j as usize >= self.ntheta() {
            return None;
        }
        let j = j as usize;
        ((self.theta[j] - theta).abs() <= 1e-12 * self.theta0.max(1.0)).then_some(j)
    }
}

/// Nodal values on a [`SectorGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteField {
    grid: SectorGrid,
    values: Vec<f64>,
}

impl DiscreteField {
    pub fn new(grid: SectorGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "{} values for {} nodes",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid("field has non-finite values".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: SectorGrid) -> Self {
        let n = grid.len();
        Self {
            grid,
            values: vec![0.0; n],
        }
    }

    pub fn from_fn<F>(grid: SectorGrid, mut f: F) -> Result<Self>
    where
        F: FnMut(f64, f64) -> Result<f64>,
    {
        let mut values = Vec::with_capacity(grid.len());
        for &r in grid.r() {
            for &t in grid.theta() {
                values.push(f(r, t)?);
            }
        }
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &SectorGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[self.grid.index(i, j)]
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Values at the nodes of a coarser grid nested in this one.
    pub fn restrict(&self, coarse: &SectorGrid) -> Result<DiscreteField> {
        if !self.grid.nests(coarse) {
            return Err(Error::InvalidGrid("grids are not nested".into()));
        }
        let mut values = Vec::with_capacity(coarse.len());
        for i in 0..coarse.nr() {
            for j in 0..coarse.ntheta() {
                values.push(self.get(2 * i, 2 * j));
            }
        }
        Ok(DiscreteField {
            grid: coarse.clone(),
            values,
        })
    }

    /// Pointwise difference `self - other` on the same grid.
    pub fn sub(&self, other: &DiscreteField) -> Result<DiscreteField> {
        if self.grid != other.grid {
            return Err(Error::InvalidGrid("fields live on different grids".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(DiscreteField {
            grid: self.grid.clone(),
            values,
        })
    }

    /// Writes `r,theta,value` rows with 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "r,theta,value")?;
        for (i, &r) in self.grid.r().iter().enumerate() {
            for (j, &t) in self.grid.theta().iter().enumerate() {
                writeln!(w, "{:.16e},{:.16e},{:.16e}", r, t, self.get(i, j))?;
            }
        }
        Ok(())
    }
}
