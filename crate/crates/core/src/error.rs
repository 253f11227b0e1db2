use thiserror::Error;

use crate::lattice::{FreqIndex, IndexSet};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown index set `{0}`")]
    UnknownIndexSet(String),

    #[error("{index} is not an element of {set} for n = {n}")]
    NotInIndexSet {
        index: FreqIndex,
        set: IndexSet,
        n: usize,
    },

    #[error("homogeneous coordinates must sum to zero (sum = {0:e})")]
    NotHomogeneous(f64),

    #[error("matrix is singular")]
    Singular,

    #[error("N = B^T A is not integral: entry ({row}, {col}) = {value}")]
    NonIntegralLattice { row: usize, col: usize, value: f64 },

    #[error("{set} has {found} points but |det N| = {expected}; the fundamental domain is not half-open")]
    CardinalityMismatch {
        set: &'static str,
        found: usize,
        expected: usize,
    },

    #[error("expected {expected} samples, found {found}")]
    SampleCount { expected: usize, found: usize },

    #[error("samples are taken over {found} (n = {found_n}), expected {expected} (n = {expected_n})")]
    WrongSampleSet {
        expected: IndexSet,
        expected_n: usize,
        found: IndexSet,
        found_n: usize,
    },

    #[error("no sample for node {0}")]
    MissingSample(FreqIndex),

    #[error("denominator {0:e} is too close to zero")]
    NearZeroDenominator(f64),

    #[error("point ({x}, {y}) is not inside the open deltoid")]
    OutsideDeltoid { x: f64, y: f64 },

    #[error("integration did not converge after {refinements} refinements (last change {last_change:e})")]
    NoConvergence { refinements: usize, last_change: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
