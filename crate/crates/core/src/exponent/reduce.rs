use nalgebra::{DMatrix, Matrix2, SymmetricEigen};

use crate::error::{Error, Result};

/// Ellipticity bounds `λ|ξ|² ≤ Aξ·ξ ≤ Λ|ξ|²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipticity {
    pub lambda: f64,
    pub cap: f64,
}

impl Ellipticity {
    pub fn new(lambda: f64, cap: f64) -> Result<Self> {
        if !(lambda > 0.0 && cap >= lambda && cap.is_finite()) {
            return Err(Error::InvalidOperator(format!(
                "need 0 < λ ≤ Λ < ∞, got λ = {lambda}, Λ = {cap}"
            )));
        }
        Ok(Self { lambda, cap })
    }

    pub fn ratio(&self) -> f64 {
        self.cap / self.lambda
    }
}

/// Coefficients of the meridian problem in `(y₁, y₂)` at the vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisymmetricReduction {
    /// `a₀^{ij}`, indices over `(y₁, y₂)`.
    pub a0: Matrix2<f64>,
    /// Coefficient of the singular first-order term `b^{2,1}/y₂`.
    pub b021: f64,
    pub dim: usize,
}

fn tol(a: &DMatrix<f64>) -> f64 {
    1e-12 * a.amax().max(1.0)
}

/// Reduces constant coefficients `A^{ij}(0)` on `ℝⁿ`, axis `x_n`, to the
/// meridian half-plane. The frame point is `x' = y₂ e₁`.
pub fn reduce_to_axisymmetric(a: &DMatrix<f64>, bounds: Ellipticity) -> Result<AxisymmetricReduction> {
    let n = a.nrows();
    if a.ncols() != n || n < 3 {
        return Err(Error::InvalidOperator(format!(
            "expected a square matrix of size ≥ 3, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidOperator("non-finite coefficient".into()));
    }
    let eps = tol(a);
    if (a - a.transpose()).amax() > eps {
        return Err(Error::InvalidOperator("coefficients are not symmetric".into()));
    }
    let m = n - 1;
    let c = a[(0, 0)];
    for i in 0..m {
        if a[(i, m)].abs() > eps {
            return Err(Error::InvalidOperator(format!(
                "A^{{{}{}}} = {} breaks rotational invariance about the axis",
                i + 1,
                n,
                a[(i, m)]
            )));
        }
        for j in 0..m {
            let expect = if i == j { c } else { 0.0 };
            if (a[(i, j)] - expect).abs() > eps {
                return Err(Error::InvalidOperator(
                    "transverse block is not a multiple of the identity".into(),
                ));
            }
        }
    }
    let eig = SymmetricEigen::new(a.clone());
    let lo = eig.eigenvalues.min();
    let hi = eig.eigenvalues.max();
    let slack = 1e-12 * bounds.cap;
    if lo < bounds.lambda - slack || hi > bounds.cap + slack {
        return Err(Error::InvalidOperator(format!(
            "spectrum [{lo}, {hi}] outside [{}, {}]",
            bounds.lambda, bounds.cap
        )));
    }

    let a0 = Matrix2::new(a[(m, m)], a[(0, m)], a[(0, m)], a[(0, 0)]);
    let b021 = (0..m).map(|i| a[(i, i)]).sum::<f64>() - a[(0, 0)];
    let k = (n - 2) as f64;
    if b021 < k * bounds.lambda - k * slack || b021 > k * bounds.cap + k * slack {
        return Err(Error::InvalidOperator(format!(
            "b^{{2,1}} = {b021} outside [{}, {}]",
            k * bounds.lambda,
            k * bounds.cap
        )));
    }
    Ok(AxisymmetricReduction { a0, b021, dim: n })
}
