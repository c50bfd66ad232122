//! Partitions of `[1..n]` into contiguous intervals: one that only splits,
//! one that only merges neighbours.

use crate::Error;

/// Set of positions with successor/predecessor queries, stored as a 64-ary
/// tree of bitmaps. Every operation touches one word per layer, so at most
/// four words for `n < 2^24`.
#[derive(Clone, Debug)]
struct BitTree {
    layers: Vec<Vec<u64>>,
}

impl BitTree {
    fn new(universe: usize) -> Self {
        let mut layers = Vec::new();
        let mut len = universe.max(1);
        loop {
            let words = len.div_ceil(64);
            layers.push(vec![0u64; words]);
            if words == 1 {
                break;
            }
            len = words;
        }
        BitTree { layers }
    }

    fn contains(&self, x: usize) -> bool {
        self.layers[0][x >> 6] >> (x & 63) & 1 == 1
    }

    /// Returns whether `x` was newly inserted.
    fn insert(&mut self, x: usize) -> bool {
        if self.contains(x) {
            return false;
        }
        let mut x = x;
        for layer in &mut self.layers {
            let word = &mut layer[x >> 6];
            let was_empty = *word == 0;
            *word |= 1 << (x & 63);
            if !was_empty {
                break;
            }
            x >>= 6;
        }
        true
    }

    /// Smallest member `>= x`.
    fn succ(&self, x: usize) -> Option<usize> {
        let mut x = x;
        let mut depth = 0;
        // climb until a word holds a member at or after the cursor
        loop {
            let layer = &self.layers[depth];
            let idx = x >> 6;
            if idx >= layer.len() {
                return None;
            }
            let bits = layer[idx] & (!0u64 << (x & 63));
            if bits != 0 {
                x = (idx << 6) | bits.trailing_zeros() as usize;
                break;
            }
            depth += 1;
            if depth == self.layers.len() {
                return None;
            }
            x = idx + 1;
        }
        while depth > 0 {
            depth -= 1;
            x = (x << 6) | self.layers[depth][x].trailing_zeros() as usize;
        }
        Some(x)
    }

    /// Largest member `<= x`.
    fn pred(&self, x: usize) -> Option<usize> {
        let mut x = x;
        let mut depth = 0;
        loop {
            let layer = &self.layers[depth];
            let idx = x >> 6;
            let bits = layer[idx] & (!0u64 >> (63 - (x & 63)));
            if bits != 0 {
                x = (idx << 6) | (63 - bits.leading_zeros() as usize);
                break;
            }
            depth += 1;
            if depth == self.layers.len() || idx == 0 {
                return None;
            }
            x = idx - 1;
        }
        while depth > 0 {
            depth -= 1;
            x = (x << 6) | (63 - self.layers[depth][x].leading_zeros() as usize);
        }
        Some(x)
    }
}

/// Partition of `[1..n]` refined by [`split`](Self::split). A border `u`
/// ends the interval containing it.
#[derive(Clone, Debug)]
pub struct IntervalSplitFind {
    n: u32,
    borders: BitTree,
}

impl IntervalSplitFind {
    /// The single interval `[1..n]`.
    pub fn new(n: u32) -> Self {
        IntervalSplitFind {
            n,
            borders: BitTree::new(n as usize + 1),
        }
    }

    pub fn len(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn check(&self, u: u32) -> Result<(), Error> {
        if u == 0 || u > self.n {
            return Err(Error::PositionOutOfRange { pos: u, n: self.n });
        }
        Ok(())
    }

    /// Bounds of the interval containing `u`.
    pub fn find(&self, u: u32) -> Result<(u32, u32), Error> {
        self.check(u)?;
        Ok(self.find_unchecked(u))
    }

    #[inline]
    pub(crate) fn find_unchecked(&self, u: u32) -> (u32, u32) {
        let hi = self.borders.succ(u as usize).map_or(self.n, |b| b as u32);
        let lo = self
            .borders
            .pred(u as usize - 1)
            .map_or(1, |b| b as u32 + 1);
        (lo, hi)
    }

    /// Makes `u` the last position of its interval. Splitting at an existing
    /// border (or at `n`) changes nothing.
    pub fn split(&mut self, u: u32) -> Result<(), Error> {
        self.check(u)?;
        self.split_unchecked(u);
        Ok(())
    }

    #[inline]
    pub(crate) fn split_unchecked(&mut self, u: u32) {
        if u < self.n {
            self.borders.insert(u as usize);
        }
    }

    pub fn is_border(&self, u: u32) -> bool {
        u == self.n || (u < self.n && self.borders.contains(u as usize))
    }
}

/// Partition of `[1..n]`, initially all singletons, coarsened by merging an
/// interval with its right neighbour.
#[derive(Clone, Debug)]
pub struct IntervalUnionFind {
    parent: Vec<u32>,
    lo: Vec<u32>,
    hi: Vec<u32>,
}

impl IntervalUnionFind {
    pub fn new(n: u32) -> Self {
        let ids: Vec<u32> = (0..=n).collect();
        IntervalUnionFind {
            parent: ids.clone(),
            lo: ids.clone(),
            hi: ids,
        }
    }

    pub fn len(&self) -> u32 {
        self.parent.len() as u32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check(&self, u: u32) -> Result<(), Error> {
        if u == 0 || u > self.len() {
            return Err(Error::PositionOutOfRange {
                pos: u,
                n: self.len(),
            });
        }
        Ok(())
    }

    #[inline]
    fn root(&mut self, mut u: u32) -> u32 {
        // path halving
        while self.parent[u as usize] != u {
            let p = self.parent[u as usize];
            let gp = self.parent[p as usize];
            self.parent[u as usize] = gp;
            u = gp;
        }
        u
    }

    /// Bounds of the interval containing `u`.
    pub fn find(&mut self, u: u32) -> Result<(u32, u32), Error> {
        self.check(u)?;
        Ok(self.find_unchecked(u))
    }

    #[inline]
    pub(crate) fn find_unchecked(&mut self, u: u32) -> (u32, u32) {
        let r = self.root(u) as usize;
        (self.lo[r], self.hi[r])
    }

    /// Merges the interval ending at `u` with the one starting at `u + 1`.
    pub fn union(&mut self, u: u32) -> Result<(), Error> {
        self.check(u)?;
        let r = self.root(u) as usize;
        if self.hi[r] != u || u == self.len() {
            return Err(Error::NotABorder(u));
        }
        self.union_unchecked(u);
        Ok(())
    }

    #[inline]
    pub(crate) fn union_unchecked(&mut self, u: u32) {
        let a = self.root(u) as usize;
        let b = self.root(u + 1) as usize;
        debug_assert!(a != b && self.hi[a] == u);
        let (lo, hi) = (self.lo[a], self.hi[b]);
        // union by size: interval width is the size
        let (big, small) = if self.hi[a] - self.lo[a] >= self.hi[b] - self.lo[b] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small] = big as u32;
        self.lo[big] = lo;
        self.hi[big] = hi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn split_find_examples() {
        let mut sf = IntervalSplitFind::new(10);
        assert_eq!(sf.find(5).unwrap(), (1, 10));
        sf.split(3).unwrap();
        assert_eq!(sf.find(3).unwrap(), (1, 3));
        sf.split(7).unwrap();
        assert_eq!(sf.find(5).unwrap(), (4, 7));
        sf.split(7).unwrap();
        assert_eq!(sf.find(8).unwrap(), (8, 10));
        assert!(sf.find(0).is_err());
        assert!(sf.find(11).is_err());
    }

    #[test]
    fn union_find_examples() {
        let mut uf = IntervalUnionFind::new(5);
        assert_eq!(uf.find(3).unwrap(), (3, 3));
        uf.union(3).unwrap();
        assert_eq!(uf.find(3).unwrap(), (3, 4));
        uf.union(2).unwrap();
        assert_eq!(uf.find(4).unwrap(), (2, 4));
        assert!(matches!(uf.union(3), Err(Error::NotABorder(3))));
        assert!(uf.union(5).is_err());
    }

    #[test]
    fn bit_tree_crosses_layers() {
        let n = 300_000;
        let mut bt = BitTree::new(n);
        assert_eq!(bt.succ(0), None);
        assert_eq!(bt.pred(n - 1), None);
        for x in [5, 4096, 262_144, 299_999] {
            bt.insert(x);
        }
        assert_eq!(bt.succ(6), Some(4096));
        assert_eq!(bt.succ(4097), Some(262_144));
        assert_eq!(bt.pred(262_143), Some(4096));
        assert_eq!(bt.pred(4095), Some(5));
        assert_eq!(bt.pred(4), None);
    }

    proptest! {
        #[test]
        fn split_find_matches_border_set(n in 1u32..300, ops in prop::collection::vec((any::<bool>(), 1u32..300), 0..600)) {
            let mut sf = IntervalSplitFind::new(n);
            let mut borders = BTreeSet::new();
            for (is_split, u) in ops {
                let u = (u - 1) % n + 1;
                if is_split {
                    sf.split(u).unwrap();
                    borders.insert(u);
                } else {
                    let hi = borders.range(u..).next().copied().unwrap_or(n);
                    let lo = borders.range(..u).next_back().map_or(1, |b| b + 1);
                    prop_assert_eq!(sf.find(u).unwrap(), (lo, hi));
                }
            }
        }

        #[test]
        fn union_widths_never_shrink(n in 2u32..100, ops in prop::collection::vec(1u32..100, 0..200)) {
            let mut uf = IntervalUnionFind::new(n);
            for u in ops {
                let u = (u - 1) % n + 1;
                let before = uf.find(u).unwrap();
                if before.1 < n {
                    uf.union(before.1).unwrap();
                }
                let after = uf.find(u).unwrap();
                prop_assert!(after.0 <= before.0 && after.1 >= before.1);
            }
        }
    }
}
