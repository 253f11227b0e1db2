//! Reference integrators.
//!
//! Tensor Gauss–Legendre rules on the square, collapsed onto the triangle,
//! with order escalation until two successive values agree.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::cheb::Alpha;
use crate::error::{Error, Result};
use crate::lattice::{GroupElement, HPoint};
use crate::sum::Pairwise;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub order: usize,
    pub refinement_factor: usize,
    pub tolerance: f64,
    pub max_refinements: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            order: 16,
            refinement_factor: 2,
            tolerance: 1e-12,
            max_refinements: 4,
        }
    }
}

impl OracleConfig {
    fn validate(&self) -> Result<()> {
        if self.order < 4 {
            return Err(Error::InvalidArgument("oracle order must be at least 4".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidArgument("oracle tolerance must be positive".into()));
        }
        if self.refinement_factor < 2 {
            return Err(Error::InvalidArgument("refinement factor must be at least 2".into()));
        }
        Ok(())
    }
}

/// Gauss–Legendre nodes and weights on `[0, 1]`.
pub fn gauss_legendre(q: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; q];
    let mut w = vec![0.0; q];
    for i in 0..q.div_ceil(2) {
        let mut r = (PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, r);
            for k in 2..=q {
                let p2 = ((2 * k - 1) as f64 * r * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let p = if q == 0 { 1.0 } else { p1 };
            dp = q as f64 * (r * p - p0) / (r * r - 1.0);
            let step = p / dp;
            r -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let wi = 2.0 / ((1.0 - r * r) * dp * dp);
        x[i] = (1.0 - r) / 2.0;
        x[q - 1 - i] = (1.0 + r) / 2.0;
        w[i] = wi / 2.0;
        w[q - 1 - i] = wi / 2.0;
    }
    (x, w)
}

/// `2 ∫_Δ f` with a fixed order, `Δ = {t1, t2 >= 0, t1 + t2 <= 1}`.
fn triangle_rule<F: Fn(f64, f64) -> Complex64>(f: &F, q: usize) -> Complex64 {
    let (x, w) = gauss_legendre(q);
    let mut acc = Pairwise::<Complex64>::new();
    for (u, wu) in x.iter().zip(&w) {
        for (v, wv) in x.iter().zip(&w) {
            let jac = 1.0 - u;
            acc.push(f(*u, jac * v) * (2.0 * wu * wv * jac));
        }
    }
    acc.total()
}

/// Normalized integral over the triangle: the average of `f(t1, t2)`.
pub fn integrate_triangle<F>(f: F, cfg: &OracleConfig) -> Result<Complex64>
where
    F: Fn(f64, f64) -> Complex64,
{
    cfg.validate()?;
    let mut q = cfg.order;
    let mut prev = triangle_rule(&f, q);
    let mut last_change = f64::INFINITY;
    for _ in 0..cfg.max_refinements {
        q *= cfg.refinement_factor;
        let cur = triangle_rule(&f, q);
        last_change = (cur - prev).norm();
        if last_change < cfg.tolerance {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NoConvergence {
        refinements: cfg.max_refinements,
        last_change,
    })
}

/// Normalized integral over the hexagon `-1 <= t1, t2, -t3 <= 1` as the
/// average of six triangle integrals.
pub fn integrate_hexagon<F>(f: F, cfg: &OracleConfig) -> Result<Complex64>
where
    F: Fn(HPoint) -> Complex64,
{
    let mut acc = Complex64::default();
    for g in GroupElement::ALL {
        acc += integrate_triangle(|a, b| f(g.act(HPoint::new(a, b))), cfg)?;
    }
    Ok(acc / 6.0)
}

/// The deltoid coordinate `x + iy` of `(t1, t2)` from the product formulas.
fn deltoid_map(t1: f64, t2: f64) -> Complex64 {
    let t3 = -t1 - t2;
    let a = PI / 3.0 * (t2 - t1);
    let b = PI / 3.0 * (t3 - t2);
    let c = PI / 3.0 * (t1 - t3);
    let x = 4.0 / 3.0 * a.cos() * b.cos() * c.cos() - 1.0 / 3.0;
    let y = 4.0 / 3.0 * a.sin() * b.sin() * c.sin();
    Complex64::new(x, y)
}

/// Normalized integral of `f(z)` over the deltoid against `w_α`, computed as
/// a triangle integral of `f(z(t)) |J(t)|^{2α+1}`.
pub fn integrate_deltoid<F>(f: F, alpha: Alpha, cfg: &OracleConfig) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    match alpha {
        Alpha::MinusHalf => integrate_triangle(|a, b| f(deltoid_map(a, b)), cfg),
        Alpha::PlusHalf => {
            let s2 = |a: f64, b: f64| ((PI * a).sin() * (PI * b).sin() * (PI * (a + b)).sin()).powi(2);
            let mass = integrate_triangle(|a, b| Complex64::new(s2(a, b), 0.0), cfg)?;
            let v = integrate_triangle(|a, b| f(deltoid_map(a, b)) * s2(a, b), cfg)?;
            Ok(v / mass.re)
        }
    }
}
