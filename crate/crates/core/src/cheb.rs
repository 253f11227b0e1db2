//! Generalized Chebyshev polynomials on the deltoid.
//!
//! The deltoid is the image of the triangle under `z(t) = TC_{0,1,-1}(t)`.
//! Polynomials are evaluated at a pair `(z, z̄)`; for points of the real
//! domain `z̄ = conj z`, but the recursions accept any pair, which is how
//! conjugated factors `conj P(w)` are formed.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{classify, enumerate, FreqIndex, HPoint, IndexSet, Shape};
use crate::rule::{CubatureRule, RuleDomain, WeightFunction};
use crate::samples::TriSamples;
use crate::sum::Pairwise;
use crate::tri::{tc, ts};

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Mass of the `α = 1/2` measure under the constant `81/(8π⁴)`,
/// relative to the probability normalization used everywhere else.
pub const SECOND_KIND_RAW_MASS: f64 = 1.0 / 6.0;

/// A point `(z, z̄)` of the complexified deltoid plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltoidPoint {
    pub z: Complex64,
    pub zbar: Complex64,
}

impl DeltoidPoint {
    pub fn new(z: Complex64) -> Self {
        Self { z, zbar: z.conj() }
    }

    pub fn from_xy(x: f64, y: f64) -> Self {
        Self::new(Complex64::new(x, y))
    }

    /// An arbitrary pair, not necessarily conjugate.
    pub fn pair(z: Complex64, zbar: Complex64) -> Self {
        Self { z, zbar }
    }

    /// The pair `(z̄, z)`; evaluating at it conjugates real polynomials.
    pub fn swapped(self) -> Self {
        Self {
            z: self.zbar,
            zbar: self.z,
        }
    }

    pub fn x(&self) -> f64 {
        self.z.re
    }

    pub fn y(&self) -> f64 {
        self.z.im
    }
}

/// The image of `t` in the deltoid.
pub fn z_of(t: HPoint) -> DeltoidPoint {
    DeltoidPoint::new(tc(FreqIndex::new(0, 1), t))
}

/// `-3(x²+y²+1)² + 8(x³-3xy²) + 4`; positive inside the deltoid, zero on
/// its boundary.
pub fn boundary_polynomial(x: f64, y: f64) -> f64 {
    let r = x * x + y * y + 1.0;
    -3.0 * r * r + 8.0 * (x * x * x - 3.0 * x * y * y) + 4.0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    /// `T_k^m`, orthogonal for `w_{-1/2}`.
    First,
    /// `U_k^m`, orthogonal for `w_{1/2}`.
    Second,
}

/// One degree of polynomials `P_0^m, …, P_m^m` evaluated at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisVector {
    pub m: usize,
    pub kind: ChebKind,
    pub orthonormal: bool,
    pub values: Vec<Complex64>,
}

/// Raw `T` or `U` polynomials of degrees `0..=m`, one row per degree.
pub fn cheb_rows(kind: ChebKind, m: usize, p: DeltoidPoint) -> Vec<Vec<Complex64>> {
    let (z, zb) = (p.z, p.zbar);
    let one = Complex64::new(1.0, 0.0);
    let mut rows = vec![vec![one]];
    if m == 0 {
        return rows;
    }
    rows.push(match kind {
        ChebKind::First => vec![z, zb],
        ChebKind::Second => vec![z * 3.0, zb * 3.0],
    });
    for d in 1..m {
        let prev = &rows[d - 1];
        let cur = &rows[d];
        let mut next = vec![Complex64::default(); d + 2];
        match kind {
            ChebKind::First => {
                next[0] = z * cur[0] * 3.0 - cur[1] * 2.0;
                for k in 1..d {
                    next[k] = z * cur[k] * 3.0 - cur[k + 1] - prev[k - 1];
                }
                next[d] = (z * cur[d] * 3.0 - prev[d - 1]) / 2.0;
                next[d + 1] = zb * cur[d] * 3.0 - cur[d - 1] * 2.0;
            }
            ChebKind::Second => {
                for k in 0..=d {
                    let mut v = z * cur[k] * 3.0;
                    if k < d {
                        v -= cur[k + 1];
                    }
                    if k >= 1 {
                        v -= prev[k - 1];
                    }
                    next[k] = v;
                }
                next[d + 1] = zb * cur[d] * 3.0 - cur[d - 1];
            }
        }
        rows.push(next);
    }
    rows
}

/// Raw polynomials of degree `m` at `(z, zbar)`.
pub fn cheb_eval(kind: ChebKind, m: usize, z: Complex64, zbar: Complex64) -> BasisVector {
    let mut rows = cheb_rows(kind, m, DeltoidPoint::pair(z, zbar));
    BasisVector {
        m,
        kind,
        orthonormal: false,
        values: rows.pop().expect("at least one row"),
    }
}

/// `U_k^m(t)` as a ratio of generalized sines.
pub fn cheb_u_via_trig(k: usize, m: usize, t: HPoint) -> Result<Complex64> {
    let den = ts(FreqIndex::new(1, 1), t);
    if den.norm() < 1e-10 {
        return Err(Error::NearZeroDenominator(den.norm()));
    }
    let (k, m) = (k as i64, m as i64);
    Ok(ts(FreqIndex::new(k + 1, m - k + 1), t) / den)
}

/// Factor turning `T_k^m` or `U_k^m` into an orthonormal polynomial.
///
/// For the second kind the measure is the `α = 1/2` measure of
/// mass [`SECOND_KIND_RAW_MASS`].
pub fn orthonormal_scale(kind: ChebKind, m: usize, k: usize) -> f64 {
    match kind {
        ChebKind::First if m == 0 => 1.0,
        ChebKind::First if k == 0 || k == m => 3f64.sqrt(),
        ChebKind::First => 6f64.sqrt(),
        ChebKind::Second => 6f64.sqrt(),
    }
}

/// Orthonormal polynomials `ℙ_0, …, ℙ_m`.
pub fn orthonormal_rows(kind: ChebKind, m: usize, p: DeltoidPoint) -> Vec<Vec<Complex64>> {
    let mut rows = cheb_rows(kind, m, p);
    for (d, row) in rows.iter_mut().enumerate() {
        for (k, v) in row.iter_mut().enumerate() {
            *v *= orthonormal_scale(kind, d, k);
        }
    }
    rows
}

/// Real polynomials spanning the same space as a row `P_0^m, …, P_m^m`:
/// for even `m` first `P_{m/2}^m`, then `√2 Re P_k` and `√2 Im P_k` for
/// `k < m/2`. Written through `P_{m-k}` so it also applies to
/// non-conjugate pairs.
pub fn real_combinations(row: &[Complex64]) -> Vec<Complex64> {
    let m = row.len() - 1;
    let mut out = Vec::with_capacity(m + 1);
    if m.is_multiple_of(2) {
        out.push(row[m / 2]);
    }
    for k in 0..m.div_ceil(2) {
        let (a, b) = (row[k], row[m - k]);
        out.push((a + b) / SQRT2);
        out.push((a - b) / Complex64::new(0.0, SQRT2));
    }
    out
}

/// Orthonormal row of degree `m` and the matching real basis.
pub fn orthonormal_and_real_basis(kind: ChebKind, m: usize, p: DeltoidPoint) -> (BasisVector, Vec<Complex64>) {
    let values = orthonormal_rows(kind, m, p).pop().expect("at least one row");
    let real = real_combinations(&values);
    (
        BasisVector {
            m,
            kind,
            orthonormal: true,
            values,
        },
        real,
    )
}

/// Real orthonormal basis of all polynomials of degree `<= m` at `(x, y)`,
/// degree by degree.
pub fn real_basis_upto(kind: ChebKind, m: usize, x: f64, y: f64) -> Vec<f64> {
    orthonormal_rows(kind, m, DeltoidPoint::from_xy(x, y))
        .iter()
        .flat_map(|row| real_combinations(row).into_iter().map(|v| v.re))
        .collect()
}

/// `J`: ones on the anti-diagonal.
pub fn anti_identity(size: usize) -> DMatrix<f64> {
    DMatrix::from_fn(size, size, |i, j| if i + j + 1 == size { 1.0 } else { 0.0 })
}

/// Matrices of `z ℙ_m = A_m ℙ_{m+1} + B_m ℙ_m + C_m ℙ_{m-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceMatrices {
    pub m: usize,
    pub kind: ChebKind,
    /// `(m+1) × (m+2)`.
    pub a: DMatrix<f64>,
    /// `(m+1) × (m+1)`.
    pub b: DMatrix<f64>,
    /// `(m+1) × m`.
    pub c: DMatrix<f64>,
    /// Anti-diagonal identity acting on `ℙ_m`, size `m+1`.
    pub j: DMatrix<f64>,
}

impl RecurrenceMatrices {
    pub fn new(kind: ChebKind, m: usize) -> Self {
        let mut a = DMatrix::zeros(m + 1, m + 2);
        let mut b = DMatrix::zeros(m + 1, m + 1);
        let mut c = DMatrix::zeros(m + 1, m);
        let s = |d: usize, k: usize| orthonormal_scale(kind, d, k);
        for k in 0..=m {
            // raw coefficients of z P_k^m on P_k^{m+1}, P_{k+1}^m, P_{k-1}^{m-1}
            let (ca, cb, cc) = match kind {
                ChebKind::First if m == 0 => (1.0, 0.0, 0.0),
                ChebKind::First => (
                    if k == m { 2.0 } else { 1.0 } / 3.0,
                    if k == m {
                        0.0
                    } else if k == 0 {
                        2.0 / 3.0
                    } else {
                        1.0 / 3.0
                    },
                    if k == 0 { 0.0 } else { 1.0 / 3.0 },
                ),
                ChebKind::Second => (
                    1.0 / 3.0,
                    if k == m { 0.0 } else { 1.0 / 3.0 },
                    if k == 0 { 0.0 } else { 1.0 / 3.0 },
                ),
            };
            a[(k, k)] = ca * s(m, k) / s(m + 1, k);
            if k < m {
                b[(k, k + 1)] = cb * s(m, k) / s(m, k + 1);
            }
            if k >= 1 {
                c[(k, k - 1)] = cc * s(m, k) / s(m - 1, k - 1);
            }
        }
        Self {
            m,
            kind,
            a,
            b,
            c,
            j: anti_identity(m + 1),
        }
    }
}

fn matvec(m: &DMatrix<f64>, v: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(m.ncols(), v.len());
    (0..m.nrows())
        .map(|i| {
            let mut acc = Complex64::default();
            for (j, x) in v.iter().enumerate() {
                acc += x * m[(i, j)];
            }
            acc
        })
        .collect()
}

fn dot(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn max_abs_diff(u: &[Complex64], v: &[Complex64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// Largest residual of the two three-term relations at degree `m`.
pub fn three_term_residual(kind: ChebKind, m: usize, p: DeltoidPoint) -> f64 {
    let rows = orthonormal_rows(kind, m + 1, p);
    let rm = RecurrenceMatrices::new(kind, m);
    let rn = RecurrenceMatrices::new(kind, m + 1);
    let pm = &rows[m];
    let pn = &rows[m + 1];

    let mut rhs = matvec(&rm.a, pn);
    for (r, v) in rhs.iter_mut().zip(matvec(&rm.b, pm)) {
        *r += v;
    }
    if m > 0 {
        for (r, v) in rhs.iter_mut().zip(matvec(&rm.c, &rows[m - 1])) {
            *r += v;
        }
    }
    let lhs: Vec<Complex64> = pm.iter().map(|v| v * p.z).collect();
    let r1 = max_abs_diff(&lhs, &rhs);

    let mut rhs = matvec(&rn.c.transpose(), pn);
    for (r, v) in rhs.iter_mut().zip(matvec(&rm.b.transpose(), pm)) {
        *r += v;
    }
    if m > 0 {
        let rp = RecurrenceMatrices::new(kind, m - 1);
        for (r, v) in rhs.iter_mut().zip(matvec(&rp.a.transpose(), &rows[m - 1])) {
            *r += v;
        }
    }
    let lhs: Vec<Complex64> = pm.iter().map(|v| v * p.zbar).collect();
    r1.max(max_abs_diff(&lhs, &rhs))
}

/// `K_n(p, q) = Σ_{k≤n} ℙ_kᵀ(p) conj ℙ_k(q)` for orthonormal polynomials of
/// the given kind.
pub fn repro_kernel_of(kind: ChebKind, n: usize, p: DeltoidPoint, q: DeltoidPoint) -> Complex64 {
    let rp = orthonormal_rows(kind, n, p);
    let rq = orthonormal_rows(kind, n, q.swapped());
    let mut acc = Pairwise::<Complex64>::new();
    for (a, b) in rp.iter().zip(&rq) {
        for (x, y) in a.iter().zip(b) {
            acc.push(x * y);
        }
    }
    acc.total()
}

/// First-kind reproducing kernel of polynomials of degree `<= n`.
pub fn repro_kernel(n: usize, p: DeltoidPoint, q: DeltoidPoint) -> Complex64 {
    repro_kernel_of(ChebKind::First, n, p, q)
}

/// Residual of the Christoffel–Darboux formula for the first kind.
pub fn christoffel_darboux_residual(n: usize, p: DeltoidPoint, q: DeltoidPoint) -> f64 {
    let kind = ChebKind::First;
    let rp = orthonormal_rows(kind, n + 1, p);
    let rq = orthonormal_rows(kind, n + 1, q.swapped());
    let an = RecurrenceMatrices::new(kind, n).a;
    let cn1 = RecurrenceMatrices::new(kind, n + 1).c;
    let lhs = (p.z - q.z) * repro_kernel(n, p, q);
    let rhs = dot(&rp[n + 1], &matvec(&an.transpose(), &rq[n])) - dot(&rp[n], &matvec(&cn1.transpose(), &rq[n + 1]));
    (lhs - rhs).norm()
}

/// The `n + 2` generators of the ideal whose variety is the Lobatto node set.
pub fn ideal_generators(n: usize, p: DeltoidPoint) -> Vec<Complex64> {
    assert!(n >= 1, "ideal generators need n >= 1");
    let t = cheb_rows(ChebKind::First, n + 1, p);
    let mut g = Vec::with_capacity(n + 2);
    g.push(t[n + 1][0] - t[n][1]);
    for k in 1..=n {
        g.push(t[n + 1][k] - t[n - 1][k - 1]);
    }
    g.push(t[n + 1][n + 1] - t[n][n - 1]);
    g
}

/// Largest generator magnitude at the image of node `j / n`.
pub fn ideal_residual(n: usize, j: FreqIndex) -> f64 {
    ideal_generators(n, z_of(j.scaled(n)))
        .iter()
        .map(|v| v.norm())
        .fold(0.0, f64::max)
}

/// `ℚ_{n+1} = ℙ_{n+1} − Γ0 ℙ_n − Γ1 ℙ_{n−1}`, an orthonormal-scaled basis of
/// the ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis {
    pub n: usize,
    /// `(n+2) × (n+1)`.
    pub gamma0: DMatrix<f64>,
    /// `(n+2) × n`.
    pub gamma1: DMatrix<f64>,
}

impl IdealBasis {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "ideal basis needs n >= 1");
        let s = |d: usize, k: usize| orthonormal_scale(ChebKind::First, d, k);
        let mut gamma0 = DMatrix::zeros(n + 2, n + 1);
        let mut gamma1 = DMatrix::zeros(n + 2, n);
        gamma0[(0, 1)] = s(n + 1, 0) / s(n, 1);
        gamma0[(n + 1, n - 1)] = s(n + 1, n + 1) / s(n, n - 1);
        for k in 1..=n {
            gamma1[(k, k - 1)] = s(n + 1, k) / s(n - 1, k - 1);
        }
        Self { n, gamma0, gamma1 }
    }

    pub fn eval(&self, p: DeltoidPoint) -> Vec<Complex64> {
        let n = self.n;
        let rows = orthonormal_rows(ChebKind::First, n + 1, p);
        let g0 = matvec(&self.gamma0, &rows[n]);
        let g1 = matvec(&self.gamma1, &rows[n - 1]);
        rows[n + 1]
            .iter()
            .zip(g0.iter().zip(&g1))
            .map(|(a, (b, c))| a - b - c)
            .collect()
    }
}

/// The diagonal matrix `M_n` of size `n + 1`.
pub fn m_matrix(n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i != j {
            0.0
        } else if i == 0 || i == n {
            M_CORNER
        } else {
            0.5
        }
    })
}

/// Corner entry of `M_n`.
pub const M_CORNER: f64 = 1.0 / 3.0;

/// `Φ_n(p, q) = ½(K_n + K_{n−1}) − ½[T_0^n(p) conj T_0^n(q) + conj T_0^n(p) T_0^n(q)]`.
pub fn kernel_phi(n: usize, p: DeltoidPoint, q: DeltoidPoint) -> Complex64 {
    assert!(n >= 1, "kernel_phi needs n >= 1");
    let rp = orthonormal_rows(ChebKind::First, n, p);
    let rq = orthonormal_rows(ChebKind::First, n, q.swapped());
    let mut k_prev = Pairwise::<Complex64>::new();
    for (a, b) in rp[..n].iter().zip(&rq[..n]) {
        for (x, y) in a.iter().zip(b) {
            k_prev.push(x * y);
        }
    }
    let k_prev = k_prev.total();
    let top = dot(&rp[n], &rq[n]);
    let kn = k_prev + top;
    let s = orthonormal_scale(ChebKind::First, n, 0);
    // raw T_0^n and its conjugate partner at each point
    let (tp, tp_c) = (rp[n][0] / s, rp[n][n] / s);
    let (tq_c, tq) = (rq[n][0] / s, rq[n][n] / s);
    0.5 * (kn + k_prev) - 0.5 * (tp * tq_c + tp_c * tq)
}

/// Residual of `(z−w)Φ_n = ℚᵀ(z) A_nᵀ M_n conj ℙ_n(w) − ℙ_nᵀ(z) M_n C_{n+1}ᵀ conj ℚ(w)`.
pub fn phi_qq_residual(n: usize, p: DeltoidPoint, q: DeltoidPoint) -> f64 {
    let ib = IdealBasis::new(n);
    let mm = m_matrix(n);
    let an = RecurrenceMatrices::new(ChebKind::First, n).a;
    let cn1 = RecurrenceMatrices::new(ChebKind::First, n + 1).c;
    let qp = ib.eval(p);
    let qq = ib.eval(q.swapped());
    let pp = orthonormal_rows(ChebKind::First, n, p).pop().expect("row n");
    let pq = orthonormal_rows(ChebKind::First, n, q.swapped()).pop().expect("row n");
    let left = dot(&qp, &matvec(&(an.transpose() * &mm), &pq));
    let right = dot(&pp, &matvec(&(&mm * cn1.transpose()), &qq));
    ((p.z - q.z) * kernel_phi(n, p, q) - (left - right)).norm()
}

/// Largest `|Φ_n(j/n, k/n)|` over distinct Lobatto nodes.
pub fn kernel_phi_offdiag_residual(n: usize) -> f64 {
    let pts: Vec<DeltoidPoint> = enumerate(IndexSet::Triangle, n)
        .into_iter()
        .map(|j| z_of(j.scaled(n)))
        .collect();
    let mut worst: f64 = 0.0;
    for (a, p) in pts.iter().enumerate() {
        for (b, q) in pts.iter().enumerate() {
            if a != b {
                worst = worst.max(kernel_phi(n, *p, *q).norm());
            }
        }
    }
    worst
}

/// Exponent of the Jacobian weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alpha {
    MinusHalf,
    PlusHalf,
}

impl Alpha {
    pub fn value(self) -> f64 {
        match self {
            Alpha::MinusHalf => -0.5,
            Alpha::PlusHalf => 0.5,
        }
    }
}

/// `w_α(x, y) = |∂(x,y)/∂(t1,t2)|^{2α}` written through the boundary polynomial.
pub fn weight_w(alpha: Alpha, x: f64, y: f64) -> Result<f64> {
    let bp = boundary_polynomial(x, y);
    let a = alpha.value();
    match alpha {
        Alpha::MinusHalf if bp <= 1e-14 => Err(Error::OutsideDeltoid { x, y }),
        Alpha::PlusHalf if bp < -1e-12 => Err(Error::OutsideDeltoid { x, y }),
        _ => Ok((4.0 / 27.0 * PI.powi(4) * bp.max(0.0)).powf(a)),
    }
}

/// `|∂(x,y)/∂(t1,t2)|` at `t`.
pub fn jacobian(t: HPoint) -> f64 {
    16.0 / 27.0 * PI * PI * ((PI * t.t1()).sin() * (PI * t.t2()).sin() * (PI * (t.t1() + t.t2())).sin()).abs()
}

/// `w_α` at the image of `t`, from the Jacobian.
pub fn weight_trig(alpha: Alpha, t: HPoint) -> f64 {
    jacobian(t).powf(2.0 * alpha.value())
}

/// Closed-form Gaussian weight for node `j ∈ Λ_{n+2}°`.
pub fn gauss_mu(j: FreqIndex, n: usize) -> f64 {
    let m = (n + 2) as f64;
    let s = |v: i64| (PI * v as f64 / m).sin().powi(2);
    32.0 / (9.0 * m * m) * s(j.k1()) * s(j.k2()) * s(j.k1() + j.k2())
}

/// Gaussian rule for `w_{1/2}` with nodes at the images of `Λ_{n+2}° / (n+2)`.
///
/// Weights are `(2/(n+2)²) TS_{1,1,-2}(t_j)²`, which integrate `f · TS²` over
/// the triangle exactly for `f` of degree `<= 2n − 1`. They sum to the mass
/// of `TS²`; `normalization` rescales them to a probability rule.
pub fn gauss_cubature_deltoid(n: usize) -> CubatureRule {
    assert!(n >= 1, "gauss rule needs n >= 1");
    let m = n + 2;
    let nodes = enumerate(IndexSet::TriangleInterior, m);
    let c = 2.0 / (m * m) as f64;
    let weights: Vec<f64> = nodes
        .iter()
        .map(|j| c * ts(FreqIndex::new(1, 1), j.scaled(m)).norm_sqr())
        .collect();
    let sum: f64 = {
        let mut acc = Pairwise::<f64>::new();
        for w in &weights {
            acc.push(*w);
        }
        acc.total()
    };
    CubatureRule {
        nodes: nodes.iter().map(|j| j.scaled(m)).collect(),
        weights,
        degree: 2 * n - 1,
        domain: RuleDomain::Deltoid,
        weight_function: WeightFunction::SineSquared,
        normalization: 1.0 / sum,
    }
}

/// Gauss–Lobatto type rule for `w_{-1/2}` with nodes at the images of `Λ_n / n`.
pub fn lobatto_cubature_deltoid(n: usize) -> CubatureRule {
    assert!(n >= 1, "lobatto rule needs n >= 1");
    let nodes = enumerate(IndexSet::Triangle, n);
    let scale = (3 * n * n) as f64;
    CubatureRule {
        weights: nodes
            .iter()
            .map(|j| classify(*j, n, Shape::Triangle).expect("node of Λ_n").weight_lambda / scale)
            .collect(),
        nodes: nodes.iter().map(|j| j.scaled(n)).collect(),
        degree: 2 * n - 1,
        domain: RuleDomain::Deltoid,
        weight_function: WeightFunction::ChebyshevFirst,
        normalization: 1.0,
    }
}

/// Interpolation node family on the deltoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeFamily {
    /// Gaussian nodes, samples on `Λ_{n+2}°` at `j/(n+2)`; degree `n − 1`.
    Xn,
    /// Lobatto nodes, samples on `Λ_n` at `j/n`; degree `n`.
    Yn,
}

/// Polynomial interpolant at `p` from samples at the images of the nodes.
pub fn interp_poly(family: NodeFamily, n: usize, samples: &TriSamples, p: DeltoidPoint) -> Result<Complex64> {
    if n < 1 {
        return Err(Error::InvalidArgument("polynomial interpolation needs n >= 1".into()));
    }
    let mut acc = Pairwise::<Complex64>::new();
    match family {
        NodeFamily::Xn => {
            samples.expect(IndexSet::TriangleInterior, n + 2)?;
            for (j, f) in samples.iter() {
                let q = z_of(j.scaled(n + 2));
                let k = repro_kernel_of(ChebKind::Second, n - 1, p, q);
                acc.push(f * k * gauss_mu(j, n));
            }
        }
        NodeFamily::Yn => {
            samples.expect(IndexSet::Triangle, n)?;
            for (j, f) in samples.iter() {
                let q = z_of(j.scaled(n));
                let d = kernel_phi(n, q, q);
                if d.norm() < 1e-12 {
                    return Err(Error::NearZeroDenominator(d.norm()));
                }
                acc.push(f * kernel_phi(n, p, q) / d);
            }
        }
    }
    Ok(acc.total())
}
