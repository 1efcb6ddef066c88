//! Distance-weighted Hölder quantities over finite point samples.
//!
//! With `d_x = |x|` and `d_{x,y} = min(d_x, d_y)`,
//!
//! ```text
//! ‖u‖_{k,0}^{(β)} = Σ_{j≤k} sup_x d_x^{max(j+β,0)} |D^j u(x)|
//! [u]_{k,α}^{(β)} = sup_{x≠y} d_{x,y}^{max(k+α+β,0)} |D^k u(x) - D^k u(y)| / |x-y|^α
//! ‖u‖_{k,α}^{(β)} = ‖u‖_{k,0}^{(β)} + [u]_{k,α}^{(β)}
//! ```
//!
//! Suprema run over the samples only, so every value is a lower bound for
//! the continuum quantity. `α = 0` denotes the plain `C^k` norm.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Point sample of a function with optional first and second derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub x: Vec<f64>,
    pub value: f64,
    pub gradient: Option<Vec<f64>>,
    /// Row-major second derivatives.
    pub hessian: Option<Vec<f64>>,
}

impl Sample {
    pub fn new(x: Vec<f64>, value: f64) -> Self {
        Self {
            x,
            value,
            gradient: None,
            hessian: None,
        }
    }

    pub fn with_gradient(mut self, g: Vec<f64>) -> Self {
        self.gradient = Some(g);
        self
    }

    pub fn with_hessian(mut self, h: Vec<f64>) -> Self {
        self.hessian = Some(h);
        self
    }

    fn derivative(&self, k: u32) -> Result<&[f64]> {
        let d = match k {
            0 => Some(std::slice::from_ref(&self.value)),
            1 => self.gradient.as_deref(),
            _ => self.hessian.as_deref(),
        };
        d.ok_or_else(|| Error::Domain(format!("sample at {:?} has no order-{k} derivative", self.x)))
    }

    fn dist(&self) -> f64 {
        self.x.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// `(k, α, β)` of a weighted Hölder quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderSpec {
    pub k: u32,
    pub alpha: f64,
    pub beta: f64,
}

impl HolderSpec {
    pub fn new(k: u32, alpha: f64, beta: f64) -> Result<Self> {
        if k > 2 {
            return Err(Error::Domain(format!("derivative order {k} above 2")));
        }
        if !(0.0..=1.0).contains(&alpha) || !beta.is_finite() {
            return Err(Error::Domain(format!("need α ∈ [0, 1] and finite β, got ({alpha}, {beta})")));
        }
        Ok(Self { k, alpha, beta })
    }

    /// Total order `k + α`.
    pub fn order(&self) -> f64 {
        self.k as f64 + self.alpha
    }
}

fn norm_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q).powi(2)).sum::<f64>().sqrt()
}

fn norm(a: &[f64]) -> f64 {
    a.iter().map(|p| p * p).sum::<f64>().sqrt()
}

fn check_dims(samples: &[Sample]) -> Result<()> {
    if let Some(first) = samples.first() {
        let n = first.x.len();
        if samples.iter().any(|s| s.x.len() != n) {
            return Err(Error::Domain("samples have mixed dimensions".into()));
        }
    }
    Ok(())
}

/// `[u]_{k,α}^{(β)}` over all sample pairs. Coincident points are skipped.
pub fn holder_seminorm(samples: &[Sample], spec: HolderSpec) -> Result<f64> {
    check_dims(samples)?;
    let w = (spec.order() + spec.beta).max(0.0);
    let data: Vec<(f64, &[f64], &[f64])> = samples
        .iter()
        .map(|s| Ok((s.dist(), s.x.as_slice(), s.derivative(spec.k)?)))
        .collect::<Result<_>>()?;
    let sup = data
        .par_iter()
        .enumerate()
        .map(|(a, &(da, xa, ua))| {
            let mut m = 0.0_f64;
            for &(db, xb, ub) in &data[a + 1..] {
                let dx = norm_diff(xa, xb);
                if dx == 0.0 {
                    continue;
                }
                let q = da.min(db).powf(w) * norm_diff(ua, ub) / dx.powf(spec.alpha);
                m = m.max(q);
            }
            m
        })
        .reduce(|| 0.0, f64::max);
    Ok(sup)
}

/// `‖u‖_{k,0}^{(β)}`.
pub fn weighted_sup_norm(samples: &[Sample], k: u32, beta: f64) -> Result<f64> {
    let mut total = 0.0;
    for j in 0..=k {
        let w = (j as f64 + beta).max(0.0);
        let mut m = 0.0_f64;
        for s in samples {
            m = m.max(s.dist().powf(w) * norm(s.derivative(j)?));
        }
        total += m;
    }
    Ok(total)
}

/// `‖u‖_{k,α}^{(β)}`; for `α = 0` this is the weighted `C^k` norm alone.
pub fn holder_norm(samples: &[Sample], spec: HolderSpec) -> Result<f64> {
    let sup = weighted_sup_norm(samples, spec.k, spec.beta)?;
    if spec.alpha == 0.0 {
        return Ok(sup);
    }
    Ok(sup + holder_seminorm(samples, spec)?)
}

/// Weight split of the product inequality
/// `[uv]_{0,α}^{(β)} ≤ [u]_{0,α}^{(β₁)} ‖v‖_0^{(β₂)} + ‖u‖_0^{(β₁')} [v]_{0,α}^{(β₂')}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductSplit {
    pub alpha: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub beta1p: f64,
    pub beta2p: f64,
}

impl ProductSplit {
    /// Checks `α ∈ (0, 1]`, `β ≥ -α`, `β₁ + β₂ = β₁' + β₂'`, `β₁, β₂' ≥ -α`,
    /// `β₂, β₁' ≥ 0` and returns `β`.
    pub fn validate(&self) -> Result<f64> {
        let a = self.alpha;
        let beta = self.beta1 + self.beta2;
        let fail = |m: String| Err(Error::Hypothesis(m));
        if !(a > 0.0 && a <= 1.0) {
            return fail(format!("α = {a} outside (0, 1]"));
        }
        if (beta - (self.beta1p + self.beta2p)).abs() > 1e-12 * beta.abs().max(1.0) {
            return fail(format!(
                "β₁ + β₂ = {beta} differs from β₁' + β₂' = {}",
                self.beta1p + self.beta2p
            ));
        }
        if beta < -a {
            return fail(format!("β = {beta} below -α"));
        }
        if self.beta1 < -a || self.beta2p < -a {
            return fail("β₁ and β₂' must be ≥ -α".into());
        }
        if self.beta2 < 0.0 || self.beta1p < 0.0 {
            return fail("β₂ and β₁' must be ≥ 0".into());
        }
        Ok(beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluates both sides of the product inequality on common sample points.
pub fn product_inequality(u: &[Sample], v: &[Sample], split: &ProductSplit) -> Result<ProductCheck> {
    let beta = split.validate()?;
    if u.len() != v.len() || u.iter().zip(v).any(|(p, q)| p.x != q.x) {
        return Err(Error::Domain("u and v must be sampled at the same points".into()));
    }
    let a = split.alpha;
    let uv: Vec<Sample> = u
        .iter()
        .zip(v)
        .map(|(p, q)| Sample::new(p.x.clone(), p.value * q.value))
        .collect();
    let spec = |b: f64| HolderSpec::new(0, a, b);
    let lhs = holder_seminorm(&uv, spec(beta)?)?;
    let rhs = holder_seminorm(u, spec(split.beta1)?)? * weighted_sup_norm(v, 0, split.beta2)?
        + weighted_sup_norm(u, 0, split.beta1p)? * holder_seminorm(v, spec(split.beta2p)?)?;
    // pairwise exact; the slack absorbs rounding in the products
    let holds = lhs <= rhs * (1.0 + 1e-12) + 1e-300;
    Ok(ProductCheck { lhs, rhs, holds })
}

/// Exponents of the interpolation inequality
/// `‖u‖_{k,α}^{(β)} ≤ C (‖u‖_{k₁,α₁}^{(β₁)})^θ (‖u‖_{k₂,α₂}^{(β₂)})^{1-θ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationSpec {
    pub high: HolderSpec,
    pub low: HolderSpec,
    pub theta: f64,
}

impl InterpolationSpec {
    /// Target `(k, α, β)` with `k + α = θ(k₁+α₁) + (1-θ)(k₂+α₂)`, `α ∈ (0, 1]`
    /// and `β = θβ₁ + (1-θ)β₂`.
    pub fn target(&self) -> Result<HolderSpec> {
        let t = self.theta;
        if !(t > 0.0 && t < 1.0) {
            return Err(Error::Hypothesis(format!("θ = {t} outside (0, 1)")));
        }
        let total = |s: &HolderSpec| s.order() + s.beta;
        let (t1, t2) = (total(&self.high), total(&self.low));
        if t1 < 0.0 || t2 < 0.0 || t1.max(t2) <= 0.0 {
            return Err(Error::Hypothesis(format!(
                "need k_j + α_j + β_j ≥ 0 with a positive maximum, got {t1}, {t2}"
            )));
        }
        let x = t * self.high.order() + (1.0 - t) * self.low.order();
        // k + α with α ∈ (0, 1]
        let k = (x - 1e-12).ceil().max(1.0) - 1.0;
        let beta = t * self.high.beta + (1.0 - t) * self.low.beta;
        HolderSpec::new(k as u32, x - k, beta).map_err(|e| Error::Hypothesis(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationCheck {
    pub target: HolderSpec,
    pub lhs: f64,
    pub high_norm: f64,
    pub low_norm: f64,
    /// `lhs / (high^θ low^{1-θ})`.
    pub constant: f64,
}

pub fn interpolation_constant(u: &[Sample], spec: &InterpolationSpec) -> Result<InterpolationCheck> {
    let target = spec.target()?;
    let lhs = holder_norm(u, target)?;
    let high_norm = holder_norm(u, spec.high)?;
    let low_norm = holder_norm(u, spec.low)?;
    let denom = high_norm.powf(spec.theta) * low_norm.powf(1.0 - spec.theta);
    let constant = if denom > 0.0 { lhs / denom } else { f64::INFINITY };
    Ok(InterpolationCheck {
        target,
        lhs,
        high_norm,
        low_norm,
        constant,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderInequalityReport {
    pub product: ProductCheck,
    pub interpolation: InterpolationCheck,
}

/// Product inequality on `(u, v)` and interpolation constant for `u`.
pub fn holder_inequality_checks(
    u: &[Sample],
    v: &[Sample],
    split: &ProductSplit,
    interp: &InterpolationSpec,
) -> Result<HolderInequalityReport> {
    Ok(HolderInequalityReport {
        product: product_inequality(u, v, split)?,
        interpolation: interpolation_constant(u, interp)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn radial(p: f64, n: usize) -> Vec<Sample> {
        (0..n)
            .map(|i| {
                let r = 0.5_f64.powf(i as f64 / 4.0);
                let t = 0.3 * (i % 5) as f64;
                Sample::new(vec![r * t.cos(), r * t.sin()], r.powf(p))
            })
            .collect()
    }

    #[test]
    fn constants_have_zero_seminorm() {
        let s: Vec<Sample> = radial(0.0, 30);
        for (a, b) in [(0.5, 0.0), (1.0, -1.0), (0.2, 3.0)] {
            assert_eq!(holder_seminorm(&s, HolderSpec::new(0, a, b).unwrap()).unwrap(), 0.0);
        }
    }

    #[test]
    fn lipschitz_constant_of_a_linear_map() {
        let s: Vec<Sample> = (0..20)
            .map(|i| {
                let t = i as f64 * 0.1;
                let x = vec![2.0 * t + 0.5, -t];
                let v = 2.0 * x[0] - x[1];
                Sample::new(x, v)
            })
            .collect();
        let q = holder_seminorm(&s, HolderSpec::new(0, 1.0, -1.0).unwrap()).unwrap();
        // the samples lie on a line along the gradient (2, -1)
        assert!((q - 5.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn missing_gradient_is_an_error() {
        let s = radial(0.5, 5);
        assert!(holder_seminorm(&s, HolderSpec::new(1, 0.5, 0.0).unwrap()).is_err());
    }

    #[test]
    fn product_bookkeeping() {
        let split = ProductSplit {
            alpha: 0.5,
            beta1: -0.5,
            beta2: 0.5,
            beta1p: 0.0,
            beta2p: 0.1,
        };
        assert!(matches!(split.validate(), Err(Error::Hypothesis(_))));
        let ok = ProductSplit { beta2p: 0.0, ..split };
        assert_eq!(ok.validate().unwrap(), 0.0);
        let u = radial(0.3, 40);
        let v = radial(0.4, 40);
        assert!(product_inequality(&u, &v, &ok).unwrap().holds);
    }

    #[test]
    fn interpolation_target_orders() {
        let a: f64 = 0.4;
        let spec = InterpolationSpec {
            high: HolderSpec::new(2, a, -1.0 - a).unwrap(),
            low: HolderSpec::new(0, 0.0, 0.0).unwrap(),
            theta: 1.0 / (1.0 + a),
        };
        let t = spec.target().unwrap();
        assert_eq!(t.k, 1);
        assert!((t.alpha - 1.0 / (1.0 + a)).abs() < 1e-12);
        assert!((t.beta + 1.0).abs() < 1e-12);
    }
}
