//! Generalized cosine and sine functions on the equilateral triangle, their
//! interpolation operators, and trigonometric cubature.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hex::{phi_star_kernel, theta, triangle_grid};
use crate::lattice::{classify, enumerate, phi, FreqIndex, GroupElement, HPoint, IndexSet, Shape};
use crate::rule::{CubatureRule, RuleDomain, WeightFunction};
use crate::samples::TriSamples;
use crate::sum::Pairwise;

/// Generalized cosine `TC_k`, the symmetric orbit average of `φ_k`.
pub fn tc(k: FreqIndex, t: HPoint) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for g in GroupElement::ALL {
        acc += phi(k, g.act(t));
    }
    acc / 6.0
}

/// Generalized sine `TS_k`, `-i` times the antisymmetric orbit average of `φ_k`.
pub fn ts(k: FreqIndex, t: HPoint) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for g in GroupElement::ALL {
        acc += phi(k, g.act(t)) * g.sign() as f64;
    }
    Complex64::new(acc.im, -acc.re) / 6.0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriVariant {
    /// Weighted sum over `Λ_n`.
    Full,
    /// Unweighted sum over `Λ_n°`.
    Interior,
}

/// Discrete triangle inner product of two sample sets.
pub fn inner_triangle(f: &TriSamples, g: &TriSamples, variant: TriVariant) -> Result<Complex64> {
    let n = f.n();
    let set = match variant {
        TriVariant::Full => IndexSet::Triangle,
        TriVariant::Interior => IndexSet::TriangleInterior,
    };
    f.expect_set(set)?;
    g.expect(set, n)?;
    let mut acc = Pairwise::<Complex64>::new();
    for ((j, a), b) in f.iter().zip(g.values()) {
        let w = match variant {
            TriVariant::Full => classify(j, n, Shape::Triangle)?.weight_lambda,
            TriVariant::Interior => 1.0,
        };
        acc.push(a * b.conj() * w);
    }
    let nn = (n * n) as f64;
    Ok(match variant {
        TriVariant::Full => acc.total() / (3.0 * nn),
        TriVariant::Interior => acc.total() * (2.0 / nn),
    })
}

fn orbit_sum<F: Fn(HPoint) -> f64>(t: HPoint, odd: bool, f: F) -> f64 {
    let mut acc = 0.0;
    for g in GroupElement::ALL {
        let v = f(g.act(t));
        if odd && g.sign() < 0 {
            acc -= v;
        } else {
            acc += v;
        }
    }
    acc / 6.0
}

/// Fundamental function of the sine interpolant for node `j ∈ Λ_n°`:
/// `(2/n²) P⁻_t [Θ_{n−1} − Θ_{n−2}](t − j/n)`.
pub fn sine_kernel(j: FreqIndex, n: usize, t: HPoint) -> f64 {
    let s = j.scaled(n);
    let m = n as i64;
    let v = orbit_sum(t, true, |u| {
        let d = u - s;
        theta(m - 1, d) - theta(m - 2, d)
    });
    v * (2.0 / (n * n) as f64)
}

/// The same function as [`sine_kernel`], written as a sum over `TS_k`:
/// `(12/n²) Σ_{k∈Λ_n°} TS_k(t) conj TS_k(j/n)`. The factor is the inverse of
/// the discrete Gram value `1/6` times the node weight `2/n²`.
pub fn sine_kernel_series(j: FreqIndex, n: usize, t: HPoint) -> Complex64 {
    let s = j.scaled(n);
    let mut acc = Pairwise::<Complex64>::new();
    for k in enumerate(IndexSet::TriangleInterior, n) {
        acc.push(ts(k, t) * ts(k, s).conj());
    }
    acc.total() * (12.0 / (n * n) as f64)
}

/// Fundamental function of the cosine interpolant for node `j ∈ Λ_n`,
/// closed form.
pub fn cosine_kernel(j: FreqIndex, n: usize, t: HPoint) -> f64 {
    let lambda = classify(j, n, Shape::Triangle)
        .expect("node of Λ_n")
        .weight_lambda;
    let s = j.scaled(n);
    let m = n as i64;
    let vertex = FreqIndex::new(m, 0);
    cosine_kernel_with(lambda, s, n, t, tc(vertex, t), tc(vertex, s))
}

fn cosine_kernel_with(lambda: f64, s: HPoint, n: usize, t: HPoint, tc_t: Complex64, tc_s: Complex64) -> f64 {
    let m = n as i64;
    let main = orbit_sum(t, false, |u| {
        let d = u - s;
        theta(m, d) - theta(m - 2, d)
    });
    let corr = (tc_t * tc_s.conj()).re;
    lambda / (3 * n * n) as f64 * (0.5 * main - corr)
}

/// Fundamental function of the cosine interpolant from its definition as
/// the symmetrized hexagon kernel.
pub fn cosine_kernel_definitional(j: FreqIndex, n: usize, t: HPoint) -> f64 {
    let lambda = classify(j, n, Shape::Triangle)
        .expect("node of Λ_n")
        .weight_lambda;
    let s = j.scaled(n);
    lambda * orbit_sum(t, false, |u| phi_star_kernel(n, u - s))
}

/// Interpolant in the span of `TS_k`, `k ∈ Λ_n°`, from samples on `Λ_n°`.
pub fn interp_triangle_sine(samples: &TriSamples, t: HPoint) -> Result<Complex64> {
    samples.expect_set(IndexSet::TriangleInterior)?;
    let n = samples.n();
    if n < 3 {
        return Err(Error::InvalidArgument("sine interpolation needs n >= 3".into()));
    }
    let mut acc = Pairwise::<Complex64>::new();
    for (j, f) in samples.iter() {
        acc.push(f * sine_kernel(j, n, t));
    }
    Ok(acc.total())
}

/// Interpolant in the span of `TC_k`, `k ∈ Λ_n`, from samples on `Λ_n`.
pub fn interp_triangle_cosine(samples: &TriSamples, t: HPoint) -> Result<Complex64> {
    samples.expect_set(IndexSet::Triangle)?;
    let n = samples.n();
    if n < 1 {
        return Err(Error::InvalidArgument("cosine interpolation needs n >= 1".into()));
    }
    let vertex = FreqIndex::new(n as i64, 0);
    let tc_t = tc(vertex, t);
    let mut acc = Pairwise::<Complex64>::new();
    for (j, f) in samples.iter() {
        let lambda = classify(j, n, Shape::Triangle)?.weight_lambda;
        let s = j.scaled(n);
        acc.push(f * cosine_kernel_with(lambda, s, n, t, tc_t, tc(vertex, s)));
    }
    Ok(acc.total())
}

/// Nodes `Λ_n / n` with weights `λ_j / 3n²`, exact on `TC_k`, `k ∈ Λ_{2n−1}`.
pub fn triangle_cubature(n: usize) -> CubatureRule {
    assert!(n >= 1, "triangle cubature needs n >= 1");
    let nodes = enumerate(IndexSet::Triangle, n);
    let scale = (3 * n * n) as f64;
    CubatureRule {
        weights: nodes
            .iter()
            .map(|j| classify(*j, n, Shape::Triangle).expect("node of Λ_n").weight_lambda / scale)
            .collect(),
        nodes: nodes.iter().map(|j| j.scaled(n)).collect(),
        degree: 2 * n - 1,
        domain: RuleDomain::Triangle,
        weight_function: WeightFunction::Unit,
        normalization: 1.0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriInterp {
    Sine,
    Cosine,
}

/// Maximum of `Σ_j |ℓ_j(t)|` over a uniform grid of the closed triangle
/// with `grid_per_edge` steps per edge plus all nodes.
pub fn lebesgue_constant_triangle(n: usize, variant: TriInterp, grid_per_edge: usize) -> Result<f64> {
    if grid_per_edge < 8 {
        return Err(Error::InvalidArgument("grid_per_edge must be at least 8".into()));
    }
    let min_n = match variant {
        TriInterp::Sine => 3,
        TriInterp::Cosine => 2,
    };
    if n < min_n {
        return Err(Error::InvalidArgument(format!("lebesgue constant needs n >= {min_n}")));
    }
    let grid = triangle_grid(grid_per_edge, n);
    let value = match variant {
        TriInterp::Sine => {
            let nodes = enumerate(IndexSet::TriangleInterior, n);
            grid.into_iter()
                .map(|t| {
                    let mut acc = Pairwise::<f64>::new();
                    for j in &nodes {
                        acc.push(sine_kernel(*j, n, t).abs());
                    }
                    acc.total()
                })
                .fold(0.0, f64::max)
        }
        TriInterp::Cosine => {
            let vertex = FreqIndex::new(n as i64, 0);
            let nodes: Vec<(f64, HPoint, Complex64)> = enumerate(IndexSet::Triangle, n)
                .into_iter()
                .map(|j| {
                    let s = j.scaled(n);
                    let lambda = classify(j, n, Shape::Triangle).expect("node of Λ_n").weight_lambda;
                    (lambda, s, tc(vertex, s))
                })
                .collect();
            grid.into_iter()
                .map(|t| {
                    let tc_t = tc(vertex, t);
                    let mut acc = Pairwise::<f64>::new();
                    for (lambda, s, tc_s) in &nodes {
                        acc.push(cosine_kernel_with(*lambda, *s, n, t, tc_t, *tc_s).abs());
                    }
                    acc.total()
                })
                .fold(0.0, f64::max)
        }
    };
    Ok(value)
}
