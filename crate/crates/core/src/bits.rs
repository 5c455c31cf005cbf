//! Square bit matrices backing the graph types.

use alloc::vec;
use alloc::vec::Vec;

/// Square bit matrix, one row of `u64` words per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRows {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitRows {
    pub(crate) fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        BitRows {
            n,
            stride,
            words: vec![0; stride * n],
        }
    }

    #[inline]
    pub(crate) fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.words[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn get(&self, u: usize, v: usize) -> bool {
        self.words[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.words[u * self.stride + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }

    pub(crate) fn row_count(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn row_iter(&self, u: usize) -> BitIter<'_> {
        BitIter::new(self.row(u))
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Complement off the diagonal.
    pub(crate) fn complement(&self) -> Self {
        let mut out = BitRows::new(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.get(u, v) {
                    out.set(u, v, true);
                }
            }
        }
        out
    }

    pub(crate) fn transpose(&self) -> Self {
        let mut out = BitRows::new(self.n);
        for u in 0..self.n {
            for v in self.row_iter(u) {
                out.set(v, u, true);
            }
        }
        out
    }

    pub(crate) fn relabel(&self, perm: &[usize]) -> Self {
        let mut out = BitRows::new(self.n);
        for u in 0..self.n {
            for v in self.row_iter(u) {
                out.set(perm[u], perm[v], true);
            }
        }
        out
    }

    pub(crate) fn without(&self, x: usize) -> Self {
        let mut out = BitRows::new(self.n - 1);
        let shift = |v: usize| if v > x { v - 1 } else { v };
        for u in (0..self.n).filter(|&u| u != x) {
            for v in self.row_iter(u).filter(|&v| v != x) {
                out.set(shift(u), shift(v), true);
            }
        }
        out
    }
}

/// Iterator over the set bits of a word slice, lowest index first.
pub struct BitIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
