use num_complex::Complex64;

use crate::lattice::HPoint;
use crate::sum::Pairwise;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleDomain {
    Triangle,
    Deltoid,
}

/// The measure a rule approximates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightFunction {
    /// Normalized Lebesgue measure on the triangle.
    Unit,
    /// `TS_{1,1,-2}(t)² dt` on the triangle, i.e. the `α = 1/2` deltoid weight
    /// pulled back to the triangle.
    SineSquared,
    /// Normalized `α = -1/2` deltoid weight.
    ChebyshevFirst,
}

/// Nodes and weights of a cubature rule.
///
/// Nodes are stored in the triangle parameter `t`; deltoid rules place the
/// actual node at `z(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubatureRule {
    pub nodes: Vec<HPoint>,
    pub weights: Vec<f64>,
    pub degree: usize,
    pub domain: RuleDomain,
    pub weight_function: WeightFunction,
    /// Factor that makes `normalization * Σ weights = 1`.
    pub normalization: f64,
}

impl CubatureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn weight_sum(&self) -> f64 {
        let mut acc = Pairwise::<f64>::new();
        for w in &self.weights {
            acc.push(*w);
        }
        acc.total()
    }

    /// `Σ w_j f(t_j)`.
    pub fn apply<F: Fn(HPoint) -> Complex64>(&self, f: F) -> Complex64 {
        let mut acc = Pairwise::<Complex64>::new();
        for (t, w) in self.nodes.iter().zip(&self.weights) {
            acc.push(f(*t) * *w);
        }
        acc.total()
    }
}
