use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{enumerate, FreqIndex, HPoint, IndexSet};

/// Function values at the nodes `j/n` of an index set, stored in
/// enumeration order.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSamples {
    set: IndexSet,
    n: usize,
    nodes: Vec<FreqIndex>,
    values: Vec<Complex64>,
}

/// Samples on `H_n` or `H_n*`.
pub type HexSamples = NodeSamples;
/// Samples on `Λ_n` or `Λ_n°`.
pub type TriSamples = NodeSamples;

impl NodeSamples {
    pub fn from_fn<F: Fn(HPoint) -> Complex64>(set: IndexSet, n: usize, f: F) -> Self {
        let nodes = enumerate(set, n);
        let values = nodes.iter().map(|j| f(j.scaled(n))).collect();
        Self {
            set,
            n,
            nodes,
            values,
        }
    }

    /// Values listed in the order of [`enumerate`].
    pub fn from_values(set: IndexSet, n: usize, values: Vec<Complex64>) -> Result<Self> {
        let nodes = enumerate(set, n);
        if nodes.len() != values.len() {
            return Err(Error::SampleCount {
                expected: nodes.len(),
                found: values.len(),
            });
        }
        Ok(Self {
            set,
            n,
            nodes,
            values,
        })
    }

    pub fn from_map(set: IndexSet, n: usize, map: &BTreeMap<FreqIndex, Complex64>) -> Result<Self> {
        let nodes = enumerate(set, n);
        let values = nodes
            .iter()
            .map(|j| map.get(j).copied().ok_or(Error::MissingSample(*j)))
            .collect::<Result<Vec<_>>>()?;
        if map.len() != nodes.len() {
            let extra = map.keys().find(|k| !set.contains(n, **k)).copied().unwrap_or_default();
            return Err(Error::NotInIndexSet { index: extra, set, n });
        }
        Ok(Self {
            set,
            n,
            nodes,
            values,
        })
    }

    pub fn set(&self) -> IndexSet {
        self.set
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn nodes(&self) -> &[FreqIndex] {
        &self.nodes
    }
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (FreqIndex, Complex64)> + '_ {
        self.nodes.iter().copied().zip(self.values.iter().copied())
    }

    pub fn get(&self, j: FreqIndex) -> Option<Complex64> {
        self.nodes.binary_search(&j).ok().map(|i| self.values[i])
    }

    pub(crate) fn expect(&self, set: IndexSet, n: usize) -> Result<()> {
        if self.set != set || self.n != n {
            return Err(Error::WrongSampleSet {
                expected: set,
                expected_n: n,
                found: self.set,
                found_n: self.n,
            });
        }
        Ok(())
    }

    pub(crate) fn expect_set(&self, set: IndexSet) -> Result<()> {
        self.expect(set, self.n)
    }
}
