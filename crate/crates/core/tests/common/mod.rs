//! Reference computations shared by the integration targets.

#![allow(dead_code)]

use std::f64::consts::PI;

use quadrature::double_exponential;

/// Laplace's first integral for `z ≥ 0`, Mehler–Dirichlet below.
pub fn legendre_by_quadrature(alpha: f64, z: f64) -> f64 {
    if z >= 0.0 {
        let y = (1.0 - z * z).sqrt();
        let f = |t: f64| {
            let (re, im) = (z, y * t.cos());
            re.hypot(im).powf(alpha) * (alpha * im.atan2(re)).cos()
        };
        // split at π/2, where the integrand has a cusp when z = 0
        let a = double_exponential::integrate(f, 0.0, PI / 2.0, 1e-14).integral;
        let b = double_exponential::integrate(f, PI / 2.0, PI, 1e-14).integral;
        (a + b) / PI
    } else {
        let theta = z.acos();
        // φ = θ - t² removes the inverse square root at φ = θ
        let f = |t: f64| {
            let u = t * t;
            let half_sinc = if u > 0.0 { (0.5 * u).sin() / u } else { 0.5 };
            2.0 * ((alpha + 0.5) * (theta - u)).cos() / (2.0 * (theta - 0.5 * u).sin() * half_sinc).sqrt()
        };
        2.0_f64.sqrt() / PI * double_exponential::integrate(f, 0.0, theta.sqrt(), 1e-14).integral
    }
}

/// `(4 D(h/2) - D(h)) / 3` for the central difference `D` of `f` at `x` along `d`.
pub fn richardson_directional(f: impl Fn([f64; 2]) -> f64, x: [f64; 2], d: [f64; 2], h: f64) -> f64 {
    let c = |h: f64| {
        let p = [x[0] + h * d[0], x[1] + h * d[1]];
        let m = [x[0] - h * d[0], x[1] - h * d[1]];
        (f(p) - f(m)) / (2.0 * h)
    };
    (4.0 * c(0.5 * h) - c(h)) / 3.0
}
