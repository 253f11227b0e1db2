//! Homogeneous coordinates, index sets, and the reflection group of the
//! hexagonal lattice.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Tolerance on `t1 + t2 + t3` for real points.
pub const SUM_TOL: f64 = 1e-12;
/// Tolerance used when deciding congruence modulo 3.
pub const CONGRUENCE_TOL: f64 = 1e-9;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// A point of the plane `t1 + t2 + t3 = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HPoint {
    t: [f64; 3],
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint { t: [0.0; 3] };

    /// Builds the point `(t1, t2, -t1 - t2)`.
    #[inline]
    pub fn new(t1: f64, t2: f64) -> Self {
        Self {
            t: [t1, t2, -(t1 + t2)],
        }
    }

    pub fn from_triple(t1: f64, t2: f64, t3: f64) -> Result<Self> {
        let s = t1 + t2 + t3;
        if s.abs() > SUM_TOL {
            return Err(Error::NotHomogeneous(s));
        }
        Ok(Self { t: [t1, t2, t3] })
    }

    #[inline]
    pub fn t1(&self) -> f64 {
        self.t[0]
    }
    #[inline]
    pub fn t2(&self) -> f64 {
        self.t[1]
    }
    #[inline]
    pub fn t3(&self) -> f64 {
        self.t[2]
    }
    #[inline]
    pub fn coords(&self) -> [f64; 3] {
        self.t
    }

    pub fn coordinate_sum(&self) -> f64 {
        self.t[0] + self.t[1] + self.t[2]
    }

    /// Uniform random point of the closed hexagon `-1 <= t1, t2, -t3 <= 1`.
    pub fn random_in_hexagon<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let t1: f64 = rng.gen_range(-1.0..=1.0);
            let t2: f64 = rng.gen_range(-1.0..=1.0);
            if (t1 + t2).abs() <= 1.0 {
                return Self::new(t1, t2);
            }
        }
    }

    /// Uniform random point of the closed triangle `t1, t2 >= 0, t1 + t2 <= 1`.
    pub fn random_in_triangle<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut a: f64 = rng.gen_range(0.0..=1.0);
        let mut b: f64 = rng.gen_range(0.0..=1.0);
        if a + b > 1.0 {
            a = 1.0 - a;
            b = 1.0 - b;
        }
        Self::new(a, b)
    }
}

impl Add for HPoint {
    type Output = HPoint;
    fn add(self, o: HPoint) -> HPoint {
        HPoint::new(self.t[0] + o.t[0], self.t[1] + o.t[1])
    }
}

impl Sub for HPoint {
    type Output = HPoint;
    fn sub(self, o: HPoint) -> HPoint {
        HPoint::new(self.t[0] - o.t[0], self.t[1] - o.t[1])
    }
}

impl Neg for HPoint {
    type Output = HPoint;
    fn neg(self) -> HPoint {
        HPoint {
            t: [-self.t[0], -self.t[1], -self.t[2]],
        }
    }
}

impl Mul<f64> for HPoint {
    type Output = HPoint;
    fn mul(self, s: f64) -> HPoint {
        HPoint::new(self.t[0] * s, self.t[1] * s)
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t[0], self.t[1], self.t[2])
    }
}

/// Cartesian to homogeneous coordinates.
pub fn to_homogeneous(x1: f64, x2: f64) -> HPoint {
    HPoint::new(-x2 / 2.0 + SQRT3 / 2.0 * x1, x2)
}

/// Homogeneous to Cartesian coordinates.
pub fn from_homogeneous(p: HPoint) -> (f64, f64) {
    ((p.t1() - p.t3()) / SQRT3, p.t2())
}

/// An integer frequency triple with `k1 + k2 + k3 = 0`.
///
/// Ordering is lexicographic in `(k1, k2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreqIndex {
    k: [i64; 3],
}

impl FreqIndex {
    pub const ZERO: FreqIndex = FreqIndex { k: [0; 3] };

    #[inline]
    pub fn new(k1: i64, k2: i64) -> Self {
        Self {
            k: [k1, k2, -k1 - k2],
        }
    }

    pub fn from_triple(k1: i64, k2: i64, k3: i64) -> Result<Self> {
        if k1 + k2 + k3 != 0 {
            return Err(Error::InvalidArgument(format!(
                "frequency ({k1}, {k2}, {k3}) does not sum to zero"
            )));
        }
        Ok(Self { k: [k1, k2, k3] })
    }

    #[inline]
    pub fn k1(&self) -> i64 {
        self.k[0]
    }
    #[inline]
    pub fn k2(&self) -> i64 {
        self.k[1]
    }
    #[inline]
    pub fn k3(&self) -> i64 {
        self.k[2]
    }
    #[inline]
    pub fn coords(&self) -> [i64; 3] {
        self.k
    }

    /// The point `k / n`.
    #[inline]
    pub fn scaled(&self, n: usize) -> HPoint {
        let n = n as f64;
        HPoint::new(self.k[0] as f64 / n, self.k[1] as f64 / n)
    }

    #[inline]
    pub fn dot(&self, t: &HPoint) -> f64 {
        self.k[0] as f64 * t.t1() + self.k[1] as f64 * t.t2() + self.k[2] as f64 * t.t3()
    }

    pub fn has_zero_component(&self) -> bool {
        self.k.contains(&0)
    }
}

impl Add for FreqIndex {
    type Output = FreqIndex;
    fn add(self, o: FreqIndex) -> FreqIndex {
        FreqIndex::new(self.k[0] + o.k[0], self.k[1] + o.k[1])
    }
}

impl Sub for FreqIndex {
    type Output = FreqIndex;
    fn sub(self, o: FreqIndex) -> FreqIndex {
        FreqIndex::new(self.k[0] - o.k[0], self.k[1] - o.k[1])
    }
}

impl Neg for FreqIndex {
    type Output = FreqIndex;
    fn neg(self) -> FreqIndex {
        FreqIndex::new(-self.k[0], -self.k[1])
    }
}

impl Mul<i64> for FreqIndex {
    type Output = FreqIndex;
    fn mul(self, s: i64) -> FreqIndex {
        FreqIndex::new(self.k[0] * s, self.k[1] * s)
    }
}

impl fmt::Display for FreqIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.k[0], self.k[1], self.k[2])
    }
}

/// `true` when `t - s` has all three coordinates congruent modulo 3.
pub fn congruent_mod3(s: HPoint, t: HPoint) -> bool {
    let d = [t.t1() - s.t1(), t.t2() - s.t2(), t.t3() - s.t3()];
    let near_multiple_of_3 = |x: f64| (x - 3.0 * (x / 3.0).round()).abs() <= CONGRUENCE_TOL;
    near_multiple_of_3(d[0] - d[1]) && near_multiple_of_3(d[1] - d[2])
}

/// The three translation periods of H-periodic functions.
pub const PERIODS: [HPoint; 3] = [
    HPoint { t: [2.0, -1.0, -1.0] },
    HPoint { t: [-1.0, 2.0, -1.0] },
    HPoint { t: [-1.0, -1.0, 2.0] },
];

/// Random test of H-periodicity at `samples` points of the hexagon.
pub fn is_h_periodic_probe<F, R>(f: F, samples: usize, rng: &mut R) -> bool
where
    F: Fn(HPoint) -> Complex64,
    R: Rng + ?Sized,
{
    (0..samples).all(|_| {
        let t = HPoint::random_in_hexagon(rng);
        let ft = f(t);
        PERIODS.iter().all(|&e| (f(t + e) - ft).norm() < 1e-9)
    })
}

/// The six elements of the reflection group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Identity,
    Sigma1,
    Sigma2,
    Sigma3,
    Sigma1Sigma2,
    Sigma2Sigma1,
}

impl GroupElement {
    pub const ALL: [GroupElement; 6] = [
        GroupElement::Identity,
        GroupElement::Sigma1Sigma2,
        GroupElement::Sigma2Sigma1,
        GroupElement::Sigma1,
        GroupElement::Sigma2,
        GroupElement::Sigma3,
    ];

    /// `(t g)_i = sign * t[perm[i]]`.
    #[inline]
    pub fn perm(self) -> [usize; 3] {
        match self {
            GroupElement::Identity => [0, 1, 2],
            GroupElement::Sigma1 => [0, 2, 1],
            GroupElement::Sigma2 => [1, 0, 2],
            GroupElement::Sigma3 => [2, 1, 0],
            GroupElement::Sigma1Sigma2 => [2, 0, 1],
            GroupElement::Sigma2Sigma1 => [1, 2, 0],
        }
    }

    /// The sign character: -1 on reflections, +1 on rotations.
    #[inline]
    pub fn sign(self) -> i64 {
        match self {
            GroupElement::Sigma1 | GroupElement::Sigma2 | GroupElement::Sigma3 => -1,
            _ => 1,
        }
    }

    fn from_parts(perm: [usize; 3]) -> GroupElement {
        Self::ALL
            .into_iter()
            .find(|g| g.perm() == perm)
            .expect("every permutation of three symbols is in the group")
    }

    /// The element "first `self`, then `other`".
    pub fn then(self, other: GroupElement) -> GroupElement {
        let (pa, pb) = (self.perm(), other.perm());
        let g = Self::from_parts([pa[pb[0]], pa[pb[1]], pa[pb[2]]]);
        debug_assert_eq!(g.sign(), self.sign() * other.sign());
        g
    }

    pub fn inverse(self) -> GroupElement {
        match self {
            GroupElement::Sigma1Sigma2 => GroupElement::Sigma2Sigma1,
            GroupElement::Sigma2Sigma1 => GroupElement::Sigma1Sigma2,
            g => g,
        }
    }

    #[inline]
    pub fn act(self, t: HPoint) -> HPoint {
        let p = self.perm();
        let s = self.sign() as f64;
        let c = t.coords();
        HPoint {
            t: [s * c[p[0]], s * c[p[1]], s * c[p[2]]],
        }
    }

    #[inline]
    pub fn act_index(self, k: FreqIndex) -> FreqIndex {
        let p = self.perm();
        let s = self.sign();
        let c = k.coords();
        FreqIndex {
            k: [s * c[p[0]], s * c[p[1]], s * c[p[2]]],
        }
    }
}

/// Applies `g` to `t`.
pub fn act(g: GroupElement, t: HPoint) -> HPoint {
    g.act(t)
}

/// Selects the symmetric or antisymmetric projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Plus,
    Minus,
}

/// Orbit average of `f` at `t`, weighted by the sign character for
/// [`Parity::Minus`].
pub fn project<F>(parity: Parity, f: F, t: HPoint) -> Complex64
where
    F: Fn(HPoint) -> Complex64,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for g in GroupElement::ALL {
        let v = f(g.act(t));
        if parity == Parity::Minus && g.sign() < 0 {
            acc -= v;
        } else {
            acc += v;
        }
    }
    acc / 6.0
}

/// Named index sets of frequencies or nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexSet {
    /// `-n <= j1, j2, -j3 < n`.
    Hex,
    /// `|j1|, |j2|, |j3| <= n`.
    HexStar,
    /// `|j1|, |j2|, |j3| < n`.
    HexInterior,
    /// `j1, j2 >= 0`, `j1 + j2 <= n`.
    Triangle,
    /// `j1, j2 > 0`, `j1 + j2 < n`.
    TriangleInterior,
}

impl IndexSet {
    pub const ALL: [IndexSet; 5] = [
        IndexSet::Hex,
        IndexSet::HexStar,
        IndexSet::HexInterior,
        IndexSet::Triangle,
        IndexSet::TriangleInterior,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexSet::Hex => "H_n",
            IndexSet::HexStar => "H_n_star",
            IndexSet::HexInterior => "H_n_circ",
            IndexSet::Triangle => "Lambda_n",
            IndexSet::TriangleInterior => "Lambda_n_circ",
        }
    }

    pub fn contains(self, n: usize, k: FreqIndex) -> bool {
        let n = n as i64;
        let [k1, k2, k3] = k.coords();
        match self {
            IndexSet::Hex => (-n..n).contains(&k1) && (-n..n).contains(&k2) && (-n..n).contains(&-k3),
            IndexSet::HexStar => k1.abs() <= n && k2.abs() <= n && k3.abs() <= n,
            IndexSet::HexInterior => k1.abs() < n && k2.abs() < n && k3.abs() < n,
            IndexSet::Triangle => k1 >= 0 && k2 >= 0 && k1 + k2 <= n,
            IndexSet::TriangleInterior => k1 > 0 && k2 > 0 && k1 + k2 < n,
        }
    }

    /// Closed-form cardinality.
    pub fn cardinality(self, n: usize) -> usize {
        match self {
            IndexSet::Hex => 3 * n * n,
            IndexSet::HexStar => 3 * n * n + 3 * n + 1,
            IndexSet::HexInterior => {
                if n == 0 {
                    0
                } else {
                    3 * (n - 1) * (n - 1) + 3 * (n - 1) + 1
                }
            }
            IndexSet::Triangle => (n + 1) * (n + 2) / 2,
            IndexSet::TriangleInterior => {
                if n < 2 {
                    0
                } else {
                    (n - 1) * (n - 2) / 2
                }
            }
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownIndexSet(s.to_owned()))
    }
}

/// Elements of `kind` for parameter `n`, ordered lexicographically by `(k1, k2)`.
pub fn enumerate(kind: IndexSet, n: usize) -> Vec<FreqIndex> {
    let m = n as i64;
    let mut out = Vec::with_capacity(kind.cardinality(n));
    for k1 in -m..=m {
        for k2 in -m..=m {
            let k = FreqIndex::new(k1, k2);
            if kind.contains(n, k) {
                out.push(k);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Hexagon,
    Triangle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    Interior,
    Edge,
    Vertex,
}

/// Boundary class of a node together with its hexagon weight `c` and
/// triangle weight `lambda`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointClass {
    pub class: Position,
    pub weight_c: f64,
    pub weight_lambda: f64,
}

impl PointClass {
    pub fn of(class: Position) -> Self {
        let (weight_c, weight_lambda) = match class {
            Position::Interior => (1.0, 6.0),
            Position::Edge => (0.5, 3.0),
            Position::Vertex => (1.0 / 3.0, 1.0),
        };
        Self {
            class,
            weight_c,
            weight_lambda,
        }
    }
}

/// Classifies a node of the closed hexagon (`j` in `H_n*`) or of the closed
/// triangle (`j` in `Lambda_n`).
pub fn classify(j: FreqIndex, n: usize, shape: Shape) -> Result<PointClass> {
    let (set, interior) = match shape {
        Shape::Hexagon => (IndexSet::HexStar, IndexSet::HexInterior),
        Shape::Triangle => (IndexSet::Triangle, IndexSet::TriangleInterior),
    };
    if !set.contains(n, j) {
        return Err(Error::NotInIndexSet { index: j, set, n });
    }
    let class = if interior.contains(n, j) {
        Position::Interior
    } else {
        match shape {
            Shape::Hexagon => {
                if j.has_zero_component() {
                    Position::Vertex
                } else {
                    Position::Edge
                }
            }
            Shape::Triangle => {
                let m = n as i64;
                let vertices = [FreqIndex::ZERO, FreqIndex::new(m, 0), FreqIndex::new(0, m)];
                if vertices.contains(&j) {
                    Position::Vertex
                } else {
                    Position::Edge
                }
            }
        }
    };
    Ok(PointClass::of(class))
}

/// `exp(2 pi i / 3 * k . t)` with the phase reduced modulo 3 first.
#[inline]
pub fn phi(k: FreqIndex, t: HPoint) -> Complex64 {
    let a = k.dot(&t);
    let r = a - 3.0 * (a / 3.0).round();
    Complex64::from_polar(1.0, 2.0 * PI / 3.0 * r)
}
