//! Fixed-size bit table used for bounded membership sets.

use alloc::vec;
use alloc::vec::Vec;

const BITS: usize = u64::BITS as usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    len: usize,
    blocks: Vec<u64>,
}

impl BitSet {
    pub fn with_len(len: usize) -> Self {
        BitSet {
            len,
            blocks: vec![0; len.div_ceil(BITS)],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] & (1 << (i % BITS)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}
