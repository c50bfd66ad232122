//! Brute force over explicit subsequence sets, for words of length at most
//! [`GUARD`].
//!
//! Every distinct subsequence has a unique leftmost embedding, so extending
//! each length-`L` subsequence by each letter at that letter's next
//! occurrence after the embedding's end enumerates length `L + 1` without
//! duplicates.

use crate::maxsimk::MaxK;
use crate::tree::Block;
use crate::word::Word;
use crate::Error;

pub const GUARD: usize = 16;

fn guard(w: &Word) -> Result<(), Error> {
    if w.len() > GUARD {
        return Err(Error::OracleGuard {
            len: w.len(),
            limit: GUARD,
        });
    }
    Ok(())
}

/// Produces the sorted layers of distinct subsequences of one word, one
/// length at a time.
pub struct LayerIter {
    w: Vec<u32>,
    sigma: usize,
    // next[p * (sigma + 1) + x]: first 0-based position >= p holding x, or n
    next: Vec<usize>,
    frontier: Vec<(Vec<u32>, usize)>,
}

impl LayerIter {
    pub fn new(w: &[u32]) -> Self {
        let sigma = w.iter().copied().max().unwrap_or(0) as usize;
        let n = w.len();
        let width = sigma + 1;
        let mut next = vec![n; (n + 1) * width];
        for p in (0..n).rev() {
            let (head, tail) = next.split_at_mut((p + 1) * width);
            head[p * width..].copy_from_slice(&tail[..width]);
            head[p * width + w[p] as usize] = p;
        }
        LayerIter {
            w: w.to_vec(),
            sigma,
            next,
            frontier: vec![(Vec::new(), 0)],
        }
    }
}

impl Iterator for LayerIter {
    type Item = Vec<Vec<u32>>;

    /// The next length's subsequences (lengths 1, 2, ...); empty once the
    /// word is exhausted.
    fn next(&mut self) -> Option<Self::Item> {
        let n = self.w.len();
        let width = self.sigma + 1;
        let mut grown = Vec::new();
        for (u, end) in &self.frontier {
            for x in 1..=self.sigma {
                let q = self.next[end * width + x];
                if q < n {
                    let mut v = Vec::with_capacity(u.len() + 1);
                    v.extend_from_slice(u);
                    v.push(x as u32);
                    grown.push((v, q + 1));
                }
            }
        }
        let mut layer: Vec<Vec<u32>> = grown.iter().map(|(u, _)| u.clone()).collect();
        layer.sort_unstable();
        self.frontier = grown;
        Some(layer)
    }
}

/// Distinct subsequences grouped by length; `layers[L]` is sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layers {
    layers: Vec<Vec<Vec<u32>>>,
}

impl Layers {
    /// Layers `0..=max_len` of `w` (given 0-based).
    pub fn of(w: &[u32], max_len: usize) -> Self {
        let mut layers = vec![vec![Vec::new()]];
        layers.extend(LayerIter::new(w).take(max_len.min(w.len())));
        Layers { layers }
    }

    /// Subsequences of length exactly `len` (empty beyond the word length).
    pub fn layer(&self, len: usize) -> &[Vec<u32>] {
        self.layers.get(len).map_or(&[], Vec::as_slice)
    }

    pub fn max_len(&self) -> usize {
        self.layers.len() - 1
    }

    /// Largest `k` such that the layers `1..=k` agree.
    pub fn agreement(&self, other: &Layers) -> MaxK {
        let top = self.max_len().max(other.max_len());
        match (1..=top).find(|&l| self.layer(l) != other.layer(l)) {
            Some(l) => MaxK::Finite(l as u32 - 1),
            None => MaxK::Equal,
        }
    }
}

/// The set of subsequences of length at most `k`, sorted by length, then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumSet {
    words: Vec<Vec<u32>>,
}

impl SpectrumSet {
    pub fn contains(&self, u: &[u32]) -> bool {
        self.words
            .binary_search_by(|v| (v.len(), v.as_slice()).cmp(&(u.len(), u)))
            .is_ok()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.words.iter().map(Vec::as_slice)
    }

    pub fn is_subset(&self, other: &SpectrumSet) -> bool {
        self.iter().all(|u| other.contains(u))
    }
}

pub fn spectra(w: &Word, k: u32) -> Result<SpectrumSet, Error> {
    guard(w)?;
    let layers = Layers::of(w.symbols(), k as usize);
    Ok(SpectrumSet {
        words: layers.layers.into_iter().flatten().collect(),
    })
}

pub fn oracle_max_k(s: &Word, t: &Word) -> Result<MaxK, Error> {
    Ok(first_difference(s, t)?.map_or(MaxK::Equal, |(k, _, _)| MaxK::Finite(k)))
}

type Difference = (u32, Vec<Vec<u32>>, Vec<Vec<u32>>);

/// Compares layer by layer and stops at the first length that differs:
/// returns `(length - 1, layer of s, layer of t)` for it.
fn first_difference(s: &Word, t: &Word) -> Result<Option<Difference>, Error> {
    guard(s)?;
    guard(t)?;
    let top = s.len().max(t.len());
    let mut a = LayerIter::new(s.symbols());
    let mut b = LayerIter::new(t.symbols());
    for len in 1..=top {
        let (x, y) = (a.next().unwrap(), b.next().unwrap());
        if x != y {
            return Ok(Some((len as u32 - 1, x, y)));
        }
    }
    Ok(None)
}

/// A shortest word in exactly one full spectrum (the smallest such in
/// lexicographic order); `None` for equal words.
pub fn oracle_min_distinguisher(s: &Word, t: &Word) -> Result<Option<Vec<u32>>, Error> {
    let Some((_, a, b)) = first_difference(s, t)? else {
        return Ok(None);
    };
    let only =
        |x: &[Vec<u32>], y: &[Vec<u32>]| x.iter().find(|u| y.binary_search(u).is_err()).cloned();
    let found = match (only(&a, &b), only(&b, &a)) {
        (Some(u), Some(v)) => u.min(v),
        (u, v) => u.or(v).expect("layers differ"),
    };
    Ok(Some(found))
}

/// Classes of positions `i` grouped by the length-`<= k` spectra of the
/// suffixes `w[i:]`, left to right.
pub fn oracle_k_blocks(w: &Word, k: u32) -> Result<Vec<Block>, Error> {
    guard(w)?;
    let n = w.len();
    let suffix: Vec<Layers> = (0..n)
        .map(|i| Layers::of(&w.symbols()[i..], k as usize))
        .collect();
    let same = |a: &Layers, b: &Layers| (1..=k as usize).all(|l| a.layer(l) == b.layer(l));
    let mut blocks: Vec<Block> = Vec::new();
    for i in 0..n {
        match blocks.last_mut() {
            Some(b) if same(&suffix[b.start as usize - 1], &suffix[i]) => b.end = i as u32 + 1,
            _ => blocks.push(Block::new(i as u32 + 1, i as u32 + 1)),
        }
    }
    // classes are intervals: no later block may match an earlier one
    debug_assert!(blocks.windows(2).all(|p| !same(
        &suffix[p[0].start as usize - 1],
        &suffix[p[1].start as usize - 1]
    )));
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize_str;

    fn w(s: &str) -> Word {
        normalize_str(s, "").0
    }

    #[test]
    fn small_spectra() {
        let sp = spectra(&w("ab"), 1).unwrap();
        assert_eq!(sp.iter().collect::<Vec<_>>(), vec![&[][..], &[1], &[2]]);
        let sp = spectra(&w("aa"), 2).unwrap();
        assert_eq!(sp.len(), 3);
        assert!(sp.contains(&[1, 1]));
    }

    #[test]
    fn acab_vs_acabba() {
        let (s, t, _) = normalize_str("acab", "acabba");
        assert_eq!(spectra(&s, 1).unwrap(), spectra(&t, 1).unwrap());
        assert_ne!(spectra(&s, 2).unwrap(), spectra(&t, 2).unwrap());
        assert_eq!(oracle_max_k(&s, &t).unwrap(), MaxK::Finite(1));
        assert_eq!(oracle_min_distinguisher(&s, &t).unwrap().unwrap().len(), 2);
        assert_eq!(oracle_max_k(&s, &s).unwrap(), MaxK::Equal);
        assert_eq!(oracle_min_distinguisher(&s, &s).unwrap(), None);
    }

    #[test]
    fn guard_refuses_long_words() {
        let long = Word::from_symbols(vec![1; GUARD + 1]).unwrap();
        assert!(matches!(spectra(&long, 1), Err(Error::OracleGuard { .. })));
        assert!(oracle_max_k(&long, &long).is_err());
    }

    #[test]
    fn block_extremes() {
        let x = w("bacbaabada");
        assert_eq!(oracle_k_blocks(&x, 0).unwrap(), vec![Block::new(1, 10)]);
        assert_eq!(oracle_k_blocks(&x, 10).unwrap().len(), 10);
        assert_eq!(oracle_k_blocks(&x, 1).unwrap().len(), 4);
    }

    #[test]
    fn layered_counts_match_naive_enumeration() {
        let x = w("abacbcab");
        let mut all = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << x.len()) {
            let u: Vec<u32> = (0..x.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| x.symbols()[i])
                .collect();
            all.insert(u);
        }
        let sp = spectra(&x, x.len() as u32).unwrap();
        assert_eq!(sp.len(), all.len());
        assert!(all.iter().all(|u| sp.contains(u)));
    }
}
