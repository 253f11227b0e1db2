//! Fourier analysis on the regular hexagon.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{classify, enumerate, FreqIndex, HPoint, IndexSet, Shape};
use crate::samples::HexSamples;
use crate::sum::{pairwise, Pairwise};

pub use crate::lattice::phi;

/// Below this magnitude a sine denominator is treated as singular.
pub const SINGULAR_TOL: f64 = 1e-8;

/// Which hexagonal space an expansion lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HexBasis {
    /// `span{φ_j : j ∈ H_n}`.
    Plain,
    /// `span{φ_j : j ∈ H_n*}`.
    Star,
}

impl HexBasis {
    pub fn index_set(self) -> IndexSet {
        match self {
            HexBasis::Plain => IndexSet::Hex,
            HexBasis::Star => IndexSet::HexStar,
        }
    }
}

/// A finite exponential sum `Σ c_k φ_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigExpansion {
    n: usize,
    basis: HexBasis,
    coeffs: BTreeMap<FreqIndex, Complex64>,
}

impl TrigExpansion {
    pub fn new(n: usize, basis: HexBasis, coeffs: BTreeMap<FreqIndex, Complex64>) -> Result<Self> {
        let set = basis.index_set();
        if let Some(k) = coeffs.keys().find(|k| !set.contains(n, **k)) {
            return Err(Error::NotInIndexSet { index: *k, set, n });
        }
        Ok(Self { n, basis, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn basis(&self) -> HexBasis {
        self.basis
    }
    pub fn coeffs(&self) -> &BTreeMap<FreqIndex, Complex64> {
        &self.coeffs
    }

    pub fn eval(&self, t: HPoint) -> Complex64 {
        pairwise(self.coeffs.iter().map(|(k, c)| c * phi(*k, t)))
    }
}

fn weighted_inner<W: Fn(FreqIndex) -> f64>(f: &HexSamples, g: &HexSamples, w: W) -> Complex64 {
    let n = f.n();
    let mut acc = Pairwise::<Complex64>::new();
    for ((j, a), b) in f.iter().zip(g.values()) {
        acc.push(a * b.conj() * w(j));
    }
    acc.total() / (3 * n * n) as f64
}

/// `(1/3n²) Σ_{j∈H_n} f(j/n) conj g(j/n)`.
pub fn inner_n(f: &HexSamples, g: &HexSamples) -> Result<Complex64> {
    f.expect_set(IndexSet::Hex)?;
    g.expect(IndexSet::Hex, f.n())?;
    Ok(weighted_inner(f, g, |_| 1.0))
}

/// `(1/3n²) Σ_{j∈H_n*} c_j f(j/n) conj g(j/n)`.
pub fn inner_n_star(f: &HexSamples, g: &HexSamples) -> Result<Complex64> {
    f.expect_set(IndexSet::HexStar)?;
    g.expect(IndexSet::HexStar, f.n())?;
    let n = f.n();
    Ok(weighted_inner(f, g, |j| {
        classify(j, n, Shape::Hexagon).expect("node of H_n*").weight_c
    }))
}

/// `D_n(t) = Σ_{j∈H_n*} φ_j(t)` by direct summation.
pub fn dirichlet(n: usize, t: HPoint) -> Complex64 {
    pairwise(enumerate(IndexSet::HexStar, n).into_iter().map(|j| phi(j, t)))
}

/// `sin((n+1)πs) / sin(πs)`, stable near integer `s`.
pub fn dirichlet_ratio(n: i64, s: f64) -> f64 {
    if n < 0 {
        return 0.0;
    }
    let m = s.round();
    let delta = PI * (s - m);
    let sign = if (n as i128 * m as i128).rem_euclid(2) == 1 {
        -1.0
    } else {
        1.0
    };
    let d = delta.sin();
    let v = if d.abs() < SINGULAR_TOL {
        pairwise((0..=n).map(|k| ((n - 2 * k) as f64 * delta).cos()))
    } else {
        ((n + 1) as f64 * delta).sin() / d
    };
    sign * v
}

/// `Θ_n(t)`: the product of the three one-dimensional ratios in the
/// differences `(t_i - t_j)/3`. `Θ_{-1} ≡ 0`.
pub fn theta(n: i64, t: HPoint) -> f64 {
    if n < 0 {
        return 0.0;
    }
    let [t1, t2, t3] = t.coords();
    dirichlet_ratio(n, (t1 - t2) / 3.0) * dirichlet_ratio(n, (t2 - t3) / 3.0) * dirichlet_ratio(n, (t3 - t1) / 3.0)
}

/// `D_n = Θ_n − Θ_{n−1}`.
pub fn dirichlet_compact(n: usize, t: HPoint) -> f64 {
    theta(n as i64, t) - theta(n as i64 - 1, t)
}

fn cos_correction(n: usize, t: HPoint) -> f64 {
    let [t1, t2, t3] = t.coords();
    let w = 2.0 * n as f64 / 3.0;
    let c = |d: f64| {
        let a = w * d;
        (PI * (a - 2.0 * (a / 2.0).round())).cos()
    };
    (c(t1 - t2) + c(t2 - t3) + c(t3 - t1)) / 3.0
}

/// The compact kernel `Φ_n*` in closed form.
pub fn phi_star_kernel(n: usize, t: HPoint) -> f64 {
    let m = n as i64;
    let v = 0.5 * (theta(m, t) - theta(m - 2, t)) - cos_correction(n, t);
    v / (3 * n * n) as f64
}

/// `Φ_n* = (1/3n²) Σ_{j∈H_n*} c_j φ_j` by direct summation.
pub fn phi_star_direct(n: usize, t: HPoint) -> Complex64 {
    let s = pairwise(enumerate(IndexSet::HexStar, n).into_iter().map(|j| {
        let c = classify(j, n, Shape::Hexagon).expect("node of H_n*").weight_c;
        phi(j, t) * c
    }));
    s / (3 * n * n) as f64
}

/// `Φ_n = (1/3n²) Σ_{j∈H_n} φ_j` by direct summation.
pub fn phi_plain(n: usize, t: HPoint) -> Complex64 {
    pairwise(enumerate(IndexSet::Hex, n).into_iter().map(|j| phi(j, t))) / (3 * n * n) as f64
}

/// Interpolant at `t`. `Plain` expects samples on `H_n`, `Star` on `H_n*`.
pub fn interp_hex(samples: &HexSamples, variant: HexBasis, t: HPoint) -> Result<Complex64> {
    samples.expect_set(variant.index_set())?;
    let n = samples.n();
    let mut acc = Pairwise::<Complex64>::new();
    for (j, f) in samples.iter() {
        let d = t - j.scaled(n);
        let k = match variant {
            HexBasis::Plain => phi_plain(n, d),
            HexBasis::Star => Complex64::new(phi_star_kernel(n, d), 0.0),
        };
        acc.push(f * k);
    }
    Ok(acc.total())
}

/// `Σ_{j∈H_n*} |Φ_n*(t − j/n)|`.
pub fn lebesgue_function(n: usize, nodes: &[FreqIndex], t: HPoint) -> f64 {
    let mut acc = Pairwise::<f64>::new();
    for j in nodes {
        acc.push(phi_star_kernel(n, t - j.scaled(n)).abs());
    }
    acc.total()
}

/// Points `(a/g, b/g)` with `a, b >= 0`, `a + b <= g`, followed by the
/// nodes of `Λ_n` not already on that grid.
pub(crate) fn triangle_grid(g: usize, n: usize) -> Vec<HPoint> {
    let mut pts = Vec::with_capacity((g + 1) * (g + 2) / 2 + (n + 1) * (n + 2) / 2);
    for a in 0..=g {
        for b in 0..=(g - a) {
            pts.push(HPoint::new(a as f64 / g as f64, b as f64 / g as f64));
        }
    }
    for j in enumerate(IndexSet::Triangle, n) {
        let (a, b) = (j.k1() as usize * g, j.k2() as usize * g);
        if a % n != 0 || b % n != 0 {
            pts.push(j.scaled(n));
        }
    }
    pts
}

/// Maximum of the Lebesgue function of `Φ_n*` over a uniform grid of the
/// closed hexagon with `grid_per_edge` steps per edge plus all nodes.
///
/// The Lebesgue function is invariant under the reflection group, as is
/// the grid, so only the part of the grid in the fundamental triangle is
/// visited.
pub fn lebesgue_constant(n: usize, grid_per_edge: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument("lebesgue_constant needs n >= 2".into()));
    }
    if grid_per_edge < 8 {
        return Err(Error::InvalidArgument("grid_per_edge must be at least 8".into()));
    }
    let nodes = enumerate(IndexSet::HexStar, n);
    Ok(triangle_grid(grid_per_edge, n)
        .into_iter()
        .map(|t| lebesgue_function(n, &nodes, t))
        .fold(0.0, f64::max))
}
