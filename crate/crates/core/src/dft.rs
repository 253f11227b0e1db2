//! Discrete Fourier analysis on a general pair of planar lattices.
//!
//! A plan is built from two nonsingular matrices `A`, `B` with `N = Bᵀ A`
//! integral and half-open fundamental domains `Ω_A`, `Ω_B`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::to_homogeneous;
use crate::sum::Pairwise;

/// Tolerance for rounding `Bᵀ A` to an integer matrix.
pub const INTEGRALITY_TOL: f64 = 1e-9;
/// Slack applied to domain inequalities, relative to the domain scale.
pub const DOMAIN_TOL: f64 = 1e-9;

/// A half-open fundamental domain given by a membership predicate and a
/// bounding box of its closure.
pub trait FundamentalDomain: Send + Sync {
    fn contains(&self, x: [f64; 2]) -> bool;
    fn bounds(&self) -> ([f64; 2], [f64; 2]);
}

/// `lo <= x < hi` componentwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfOpenBox {
    pub lo: [f64; 2],
    pub hi: [f64; 2],
}

impl HalfOpenBox {
    pub fn new(lo: [f64; 2], hi: [f64; 2]) -> Self {
        Self { lo, hi }
    }

    /// `[-a/2, a/2) x [-b/2, b/2)`.
    pub fn centered(a: f64, b: f64) -> Self {
        Self::new([-a / 2.0, -b / 2.0], [a / 2.0, b / 2.0])
    }
}

fn half_open(v: f64, lo: f64, hi: f64, tol: f64) -> bool {
    v >= lo - tol && v < hi - tol
}

impl FundamentalDomain for HalfOpenBox {
    fn contains(&self, x: [f64; 2]) -> bool {
        (0..2).all(|i| {
            let tol = DOMAIN_TOL * (self.hi[i] - self.lo[i]).abs().max(1.0);
            half_open(x[i], self.lo[i], self.hi[i], tol)
        })
    }

    fn bounds(&self) -> ([f64; 2], [f64; 2]) {
        (self.lo, self.hi)
    }
}

/// The hexagon `-s <= t1, t2, -t3 < s` in Cartesian coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HexagonDomain {
    pub scale: f64,
}

impl HexagonDomain {
    pub fn new(scale: f64) -> Self {
        Self { scale }
    }
}

impl FundamentalDomain for HexagonDomain {
    fn contains(&self, x: [f64; 2]) -> bool {
        let t = to_homogeneous(x[0], x[1]);
        let s = self.scale;
        let tol = DOMAIN_TOL * s.abs().max(1.0);
        half_open(t.t1(), -s, s, tol) && half_open(t.t2(), -s, s, tol) && half_open(-t.t3(), -s, s, tol)
    }

    fn bounds(&self) -> ([f64; 2], [f64; 2]) {
        let s = self.scale;
        let w = 2.0 * s / 3f64.sqrt();
        ([-w, -s], [w, s])
    }
}

/// A lattice pair together with its enumerated index sets.
#[derive(Clone)]
pub struct DftPlan {
    a: Matrix2<f64>,
    b: Matrix2<f64>,
    n: Matrix2<i64>,
    det: i64,
    lambda_n: Vec<[i64; 2]>,
    lambda_ntr: Vec<[i64; 2]>,
    omega_a: Arc<dyn FundamentalDomain>,
    omega_b: Arc<dyn FundamentalDomain>,
}

impl fmt::Debug for DftPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DftPlan")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("n", &self.n)
            .field("lambda_n", &self.lambda_n.len())
            .field("lambda_ntr", &self.lambda_ntr.len())
            .finish()
    }
}

fn transformed_box(m: &Matrix2<f64>, dom: &dyn FundamentalDomain) -> ([i64; 2], [i64; 2]) {
    let (lo, hi) = dom.bounds();
    let mut min = [f64::INFINITY; 2];
    let mut max = [f64::NEG_INFINITY; 2];
    for cx in [lo[0], hi[0]] {
        for cy in [lo[1], hi[1]] {
            let v = m * Vector2::new(cx, cy);
            for i in 0..2 {
                min[i] = min[i].min(v[i]);
                max[i] = max[i].max(v[i]);
            }
        }
    }
    (
        [min[0].floor() as i64 - 1, min[1].floor() as i64 - 1],
        [max[0].ceil() as i64 + 1, max[1].ceil() as i64 + 1],
    )
}

/// All integer `k` in the bounding box of `fwd(Ω)` with `inv k ∈ Ω`,
/// lexicographically ordered.
fn scan(fwd: &Matrix2<f64>, inv: &Matrix2<f64>, dom: &dyn FundamentalDomain) -> Vec<[i64; 2]> {
    let (lo, hi) = transformed_box(fwd, dom);
    let mut out = Vec::new();
    for k1 in lo[0]..=hi[0] {
        for k2 in lo[1]..=hi[1] {
            let x = inv * Vector2::new(k1 as f64, k2 as f64);
            if dom.contains([x[0], x[1]]) {
                out.push([k1, k2]);
            }
        }
    }
    out
}

impl DftPlan {
    pub fn new(
        a: Matrix2<f64>,
        b: Matrix2<f64>,
        omega_a: Arc<dyn FundamentalDomain>,
        omega_b: Arc<dyn FundamentalDomain>,
    ) -> Result<Self> {
        let a_inv = a.try_inverse().ok_or(Error::Singular)?;
        let b_inv = b.try_inverse().ok_or(Error::Singular)?;
        let nf = b.transpose() * a;
        let mut n = Matrix2::<i64>::zeros();
        for r in 0..2 {
            for c in 0..2 {
                let v = nf[(r, c)];
                if (v - v.round()).abs() > INTEGRALITY_TOL {
                    return Err(Error::NonIntegralLattice {
                        row: r,
                        col: c,
                        value: v,
                    });
                }
                n[(r, c)] = v.round() as i64;
            }
        }
        let det = n[(0, 0)] * n[(1, 1)] - n[(0, 1)] * n[(1, 0)];
        if det == 0 {
            return Err(Error::Singular);
        }
        let expected = det.unsigned_abs() as usize;

        let lambda_n = scan(&b.transpose(), &b_inv.transpose(), omega_a.as_ref());
        if lambda_n.len() != expected {
            return Err(Error::CardinalityMismatch {
                set: "Λ_N",
                found: lambda_n.len(),
                expected,
            });
        }
        let lambda_ntr = scan(&a.transpose(), &a_inv.transpose(), omega_b.as_ref());
        if lambda_ntr.len() != expected {
            return Err(Error::CardinalityMismatch {
                set: "Λ_Nᵀ",
                found: lambda_ntr.len(),
                expected,
            });
        }
        Ok(Self {
            a,
            b,
            n,
            det,
            lambda_n,
            lambda_ntr,
            omega_a,
            omega_b,
        })
    }

    /// `A = H`, `B = (n/2) H` with hexagonal fundamental domains. Both index
    /// sets are `H_n` written as `(j1, j2)`, and node `j` is the point `j/n`.
    pub fn hexagon(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("hexagon plan needs n >= 1".into()));
        }
        let h = hexagon_matrix();
        let s = n as f64 / 2.0;
        Self::new(
            h,
            h * s,
            Arc::new(HexagonDomain::new(1.0)),
            Arc::new(HexagonDomain::new(s)),
        )
    }

    /// Diagonal `A`, `B` with centered box domains.
    pub fn diagonal(a: [f64; 2], b: [f64; 2]) -> Result<Self> {
        Self::new(
            Matrix2::new(a[0], 0.0, 0.0, a[1]),
            Matrix2::new(b[0], 0.0, 0.0, b[1]),
            Arc::new(HalfOpenBox::centered(a[0].abs(), a[1].abs())),
            Arc::new(HalfOpenBox::centered(b[0].abs(), b[1].abs())),
        )
    }

    pub fn a(&self) -> &Matrix2<f64> {
        &self.a
    }
    pub fn b(&self) -> &Matrix2<f64> {
        &self.b
    }
    pub fn n(&self) -> &Matrix2<i64> {
        &self.n
    }
    pub fn det(&self) -> i64 {
        self.det
    }
    pub fn lambda_n(&self) -> &[[i64; 2]] {
        &self.lambda_n
    }
    pub fn lambda_ntr(&self) -> &[[i64; 2]] {
        &self.lambda_ntr
    }
    pub fn omega_a(&self) -> &dyn FundamentalDomain {
        self.omega_a.as_ref()
    }
    pub fn omega_b(&self) -> &dyn FundamentalDomain {
        self.omega_b.as_ref()
    }

    fn adj(&self) -> Matrix2<i64> {
        Matrix2::new(self.n[(1, 1)], -self.n[(0, 1)], -self.n[(1, 0)], self.n[(0, 0)])
    }

    /// `true` iff `N^{-T} k` is an integer vector.
    pub fn is_zero_mod_ntr(&self, k: [i64; 2]) -> bool {
        let adj_t = self.adj().transpose();
        let v = adj_t * Vector2::new(k[0], k[1]);
        v[0] % self.det == 0 && v[1] % self.det == 0
    }

    /// `|(1/|det N|) Σ_{j∈Λ_N} e^{2πi kᵀN⁻¹j} − [k ≡ 0 mod Nᵀ]|`.
    ///
    /// The phase `kᵀ adj(N) j / det N` is reduced exactly in integers.
    pub fn orthogonality_defect(&self, k: [i64; 2]) -> f64 {
        let row = Vector2::new(k[0], k[1]).transpose() * self.adj();
        let d = self.det.abs();
        let sgn = self.det.signum();
        let mut acc = Pairwise::<Complex64>::new();
        for j in &self.lambda_n {
            let p = (row[0] as i128 * j[0] as i128 + row[1] as i128 * j[1] as i128) * sgn as i128;
            let r = p.rem_euclid(d as i128) as f64;
            acc.push(Complex64::from_polar(1.0, 2.0 * PI * r / d as f64));
        }
        let s = acc.total() / d as f64;
        let bracket = if self.is_zero_mod_ntr(k) { 1.0 } else { 0.0 };
        (s - bracket).norm()
    }

    /// Interpolation nodes `B^{-T} j`, `j ∈ Λ_N`, in the order of [`Self::lambda_n`].
    pub fn nodes(&self) -> Vec<[f64; 2]> {
        let bt_inv = self.b.transpose().try_inverse().expect("checked at construction");
        self.lambda_n
            .iter()
            .map(|j| {
                let x = bt_inv * Vector2::new(j[0] as f64, j[1] as f64);
                [x[0], x[1]]
            })
            .collect()
    }

    /// `e^{2πi kᵀ A⁻¹ x}`.
    pub fn basis(&self, k: [i64; 2], x: [f64; 2]) -> Complex64 {
        let a_inv = self.a.try_inverse().expect("checked at construction");
        let y = a_inv * Vector2::new(x[0], x[1]);
        let ph = k[0] as f64 * y[0] + k[1] as f64 * y[1];
        Complex64::from_polar(1.0, 2.0 * PI * (ph - ph.round()))
    }

    /// The fundamental function `Ψ(x) = (1/|det N|) Σ_{j∈Λ_{Nᵀ}} e^{2πi jᵀA⁻¹x}`.
    pub fn psi(&self, x: [f64; 2]) -> Complex64 {
        let mut acc = Pairwise::<Complex64>::new();
        for j in &self.lambda_ntr {
            acc.push(self.basis(*j, x));
        }
        acc.total() / self.det.abs() as f64
    }

    /// Interpolates samples given at [`Self::nodes`] and evaluates at `x`.
    pub fn interpolate(&self, samples: &[Complex64], x: [f64; 2]) -> Result<Complex64> {
        if samples.len() != self.lambda_n.len() {
            return Err(Error::SampleCount {
                expected: self.lambda_n.len(),
                found: samples.len(),
            });
        }
        let mut acc = Pairwise::<Complex64>::new();
        for (f, node) in samples.iter().zip(self.nodes()) {
            acc.push(f * self.psi([x[0] - node[0], x[1] - node[1]]));
        }
        Ok(acc.total())
    }
}

/// The generator matrix of the hexagonal lattice.
pub fn hexagon_matrix() -> Matrix2<f64> {
    Matrix2::new(3f64.sqrt(), 0.0, -1.0, 2.0)
}

/// Builds a plan from caller-supplied matrices and domains.
pub fn build_dft_plan(
    a: Matrix2<f64>,
    b: Matrix2<f64>,
    omega_a: Arc<dyn FundamentalDomain>,
    omega_b: Arc<dyn FundamentalDomain>,
) -> Result<DftPlan> {
    DftPlan::new(a, b, omega_a, omega_b)
}

pub fn plan_orthogonality_defect(plan: &DftPlan, k: [i64; 2]) -> f64 {
    plan.orthogonality_defect(k)
}

pub fn plan_interpolate(plan: &DftPlan, samples: &[Complex64], x: [f64; 2]) -> Result<Complex64> {
    plan.interpolate(samples, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate, FreqIndex, IndexSet};

    #[test]
    fn identity_plan() {
        let p = DftPlan::diagonal([1.0, 1.0], [1.0, 1.0]).unwrap();
        assert_eq!(*p.n(), Matrix2::identity());
        assert_eq!(p.lambda_n(), &[[0, 0]]);
    }

    #[test]
    fn diagonal_plan_cardinality() {
        let p = DftPlan::diagonal([1.0, 1.0], [3.0, 2.0]).unwrap();
        assert_eq!(p.det(), 6);
        assert_eq!(p.lambda_n().len(), 6);
        assert_eq!(p.lambda_ntr().len(), 6);
    }

    #[test]
    fn hexagon_plan_matches_index_set() {
        for n in 1..=8 {
            let p = DftPlan::hexagon(n).unwrap();
            let m = n as i64;
            assert_eq!(*p.n(), Matrix2::new(2 * m, -m, -m, 2 * m));
            assert_eq!(p.det() as usize, 3 * n * n);
            let h: Vec<[i64; 2]> = enumerate(IndexSet::Hex, n).iter().map(|k| [k.k1(), k.k2()]).collect();
            assert_eq!(p.lambda_n(), h.as_slice());
            for (node, j) in p.nodes().iter().zip(p.lambda_n()) {
                let t = to_homogeneous(node[0], node[1]);
                let e = FreqIndex::new(j[0], j[1]).scaled(n);
                assert!((t.t1() - e.t1()).abs() < 1e-13 && (t.t2() - e.t2()).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn rejects_non_integral_and_bad_domains() {
        let e = DftPlan::diagonal([1.0, 1.0], [1.5, 1.0]).unwrap_err();
        assert!(matches!(e, Error::NonIntegralLattice { .. }));
        // a closed box contains one extra row of points
        struct Closed;
        impl FundamentalDomain for Closed {
            fn contains(&self, x: [f64; 2]) -> bool {
                x.iter().all(|v| (-0.5..=0.5).contains(v))
            }
            fn bounds(&self) -> ([f64; 2], [f64; 2]) {
                ([-0.5, -0.5], [0.5, 0.5])
            }
        }
        let e = DftPlan::new(
            Matrix2::identity(),
            Matrix2::new(2.0, 0.0, 0.0, 2.0),
            Arc::new(Closed),
            Arc::new(HalfOpenBox::centered(2.0, 2.0)),
        )
        .unwrap_err();
        assert!(matches!(e, Error::CardinalityMismatch { .. }));
    }

    #[test]
    fn defect_at_congruent_frequency() {
        let p = DftPlan::hexagon(3).unwrap();
        let nt = p.n().transpose();
        let k = nt * Vector2::new(1, 0);
        assert!(p.is_zero_mod_ntr([k[0], k[1]]));
        assert!(p.orthogonality_defect([k[0], k[1]]) < 1e-12);
        assert!(p.orthogonality_defect([0, 0]) < 1e-15);
    }

    #[test]
    fn interpolation_errors_on_length() {
        let p = DftPlan::hexagon(2).unwrap();
        assert!(matches!(
            p.interpolate(&[Complex64::new(1.0, 0.0)], [0.0, 0.0]),
            Err(Error::SampleCount { .. })
        ));
    }
}
