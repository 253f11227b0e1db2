//! Pairwise (cascade) summation with a fixed, length-determined order.

use std::ops::Add;

const BLOCK: usize = 16;
const LEVELS: usize = 64;

/// Streaming pairwise accumulator.
///
/// Values are summed naively in blocks of 16; block sums are merged like a
/// binary counter. The association order depends only on the number of
/// values pushed, so equal inputs always produce bit-identical totals.
#[derive(Clone, Debug)]
pub struct Pairwise<T> {
    levels: [T; LEVELS],
    occupied: u64,
    block: T,
    in_block: usize,
}

impl<T: Copy + Default + Add<Output = T>> Default for Pairwise<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Copy + Default + Add<Output = T>> Pairwise<T> {
    pub fn new() -> Self {
        Self {
            levels: [T::default(); LEVELS],
            occupied: 0,
            block: T::default(),
            in_block: 0,
        }
    }

    #[inline]
    pub fn push(&mut self, x: T) {
        self.block = self.block + x;
        self.in_block += 1;
        if self.in_block == BLOCK {
            let mut carry = self.block;
            let mut level = 0;
            while self.occupied & (1 << level) != 0 {
                carry = self.levels[level] + carry;
                self.occupied &= !(1 << level);
                level += 1;
            }
            self.levels[level] = carry;
            self.occupied |= 1 << level;
            self.block = T::default();
            self.in_block = 0;
        }
    }

    pub fn total(&self) -> T {
        let mut acc = self.block;
        for level in 0..LEVELS {
            if self.occupied & (1 << level) != 0 {
                acc = self.levels[level] + acc;
            }
        }
        acc
    }
}

/// Pairwise sum of an iterator.
pub fn pairwise<T, I>(values: I) -> T
where
    T: Copy + Default + Add<Output = T>,
    I: IntoIterator<Item = T>,
{
    let mut acc = Pairwise::new();
    for v in values {
        acc.push(v);
    }
    acc.total()
}
