//! Discrete Fourier analysis on the hexagonal lattice, trigonometric
//! interpolation and cubature on the equilateral triangle, and generalized
//! Chebyshev polynomials on the deltoid.
//!
//! Points live in homogeneous coordinates ([`HPoint`]) and frequencies are
//! integer triples summing to zero ([`FreqIndex`]).

pub mod cheb;
pub mod dft;
pub mod error;
pub mod hex;
pub mod lattice;
pub mod quad;
pub mod rule;
pub mod samples;
pub mod sum;
pub mod tri;

pub use error::{Error, Result};
pub use lattice::{
    classify, congruent_mod3, enumerate, from_homogeneous, is_h_periodic_probe, project,
    to_homogeneous, FreqIndex, GroupElement, HPoint, IndexSet, Parity, PointClass, Position,
    Shape,
};
pub use rule::{CubatureRule, RuleDomain, WeightFunction};
pub use samples::{HexSamples, NodeSamples, TriSamples};

pub use num_complex::Complex64;
