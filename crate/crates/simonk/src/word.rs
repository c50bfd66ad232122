//! Words over a dense integer alphabet, joint normalization and the
//! next-occurrence array.

use std::collections::BTreeMap;

use crate::Error;

/// A word over the alphabet `1..=sigma`. Positions are 1-based in every
/// public API; `symbols()[i - 1]` is the letter at position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u32>,
    sigma: u32,
}

impl Word {
    /// Builds a word over `1..=sigma`, rejecting ids outside that range.
    pub fn new(symbols: Vec<u32>, sigma: u32) -> Result<Self, Error> {
        if let Some(&bad) = symbols.iter().find(|&&x| x == 0 || x > sigma) {
            return Err(Error::SymbolOutOfRange { symbol: bad, sigma });
        }
        Ok(Word { symbols, sigma })
    }

    /// Uses the largest id present as alphabet size.
    pub fn from_symbols(symbols: Vec<u32>) -> Result<Self, Error> {
        let sigma = symbols.iter().copied().max().unwrap_or(0);
        Word::new(symbols, sigma)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: u32) -> u32 {
        self.symbols[i as usize - 1]
    }

    /// The suffix starting at 1-based position `i` (empty for `i = n + 1`).
    pub fn suffix(&self, i: u32) -> Word {
        Word {
            symbols: self.symbols[i as usize - 1..].to_vec(),
            sigma: self.sigma,
        }
    }

    /// Whether `u` embeds into this word as a subsequence.
    pub fn contains_subsequence(&self, u: &[u32]) -> bool {
        let mut it = self.symbols.iter();
        u.iter().all(|x| it.any(|y| y == x))
    }
}

/// How raw text is cut into tokens.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Tokenization {
    /// Every non-whitespace character is one letter.
    #[default]
    Chars,
    /// Whitespace-separated tokens are letters.
    Tokens,
}

pub fn tokenize(text: &str, mode: Tokenization) -> Vec<String> {
    match mode {
        Tokenization::Chars => text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(String::from)
            .collect(),
        Tokenization::Tokens => text.split_whitespace().map(String::from).collect(),
    }
}

/// Bijection between observed tokens and ids `1..=sigma`, ids assigned in
/// ascending token order.
#[derive(Clone, Debug)]
pub struct AlphabetMap<T> {
    tokens: Vec<T>,
    ids: BTreeMap<T, u32>,
}

impl<T: Ord + Clone> AlphabetMap<T> {
    pub fn sigma(&self) -> u32 {
        self.tokens.len() as u32
    }

    pub fn id(&self, token: &T) -> Option<u32> {
        self.ids.get(token).copied()
    }

    pub fn token(&self, id: u32) -> Option<&T> {
        id.checked_sub(1).and_then(|i| self.tokens.get(i as usize))
    }

    pub fn decode(&self, symbols: &[u32]) -> Vec<T> {
        symbols
            .iter()
            .map(|&x| self.tokens[x as usize - 1].clone())
            .collect()
    }
}

/// Renames the tokens of both inputs jointly so that equal tokens get equal
/// ids and ids follow sorted token order.
pub fn normalize<T: Ord + Clone>(raw_s: &[T], raw_t: &[T]) -> (Word, Word, AlphabetMap<T>) {
    let mut tokens: Vec<T> = raw_s.iter().chain(raw_t).cloned().collect();
    tokens.sort_unstable();
    tokens.dedup();
    let ids: BTreeMap<T, u32> = tokens.iter().cloned().zip(1..).collect();
    let sigma = tokens.len() as u32;
    let encode = |raw: &[T]| Word {
        symbols: raw.iter().map(|x| ids[x]).collect(),
        sigma,
    };
    let (s, t) = (encode(raw_s), encode(raw_t));
    (s, t, AlphabetMap { tokens, ids })
}

/// Character-mode shorthand: `normalize_str("acab", "acabba")`.
pub fn normalize_str(s: &str, t: &str) -> (Word, Word, AlphabetMap<char>) {
    let s: Vec<char> = s.chars().collect();
    let t: Vec<char> = t.chars().collect();
    normalize(&s, &t)
}

/// `X[i]` = next position after `i` holding the same letter, or [`inf`](Self::inf)
/// (`n + 2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NextArray {
    next: Vec<u32>,
}

impl NextArray {
    pub fn inf(&self) -> u32 {
        self.next.len() as u32 + 2
    }

    /// `X[i]` for 1-based `i`.
    pub fn get(&self, i: u32) -> u32 {
        self.next[i as usize - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.next
    }

    pub fn len(&self) -> usize {
        self.next.len()
    }

    pub fn is_empty(&self) -> bool {
        self.next.is_empty()
    }
}

pub fn next_occurrence_array(w: &Word) -> NextArray {
    NextArray {
        next: next_occurrences(w.symbols(), w.sigma()),
    }
}

/// 0-based slice in, 1-based positions out; missing successors get `n + 2`.
pub(crate) fn next_occurrences(symbols: &[u32], sigma: u32) -> Vec<u32> {
    let n = symbols.len() as u32;
    let mut last = vec![n + 2; sigma as usize + 2];
    let mut next = vec![0; symbols.len()];
    for i in (0..symbols.len()).rev() {
        let x = symbols[i] as usize;
        next[i] = last[x];
        last[x] = i as u32 + 1;
    }
    next
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_uses_sorted_ids() {
        let (s, t, map) = normalize_str("acab", "acabba");
        assert_eq!(s.symbols(), &[1, 3, 1, 2]);
        assert_eq!(t.symbols(), &[1, 3, 1, 2, 2, 1]);
        assert_eq!(map.sigma(), 3);
        assert_eq!(map.decode(t.symbols()).iter().collect::<String>(), "acabba");
    }

    #[test]
    fn normalize_edge_cases() {
        let (s, t, map) = normalize_str("", "");
        assert!(s.is_empty() && t.is_empty());
        assert_eq!(map.sigma(), 0);
        let (s, t, _) = normalize_str("zz", "zz");
        assert_eq!((s.symbols(), t.symbols()), (&[1, 1][..], &[1, 1][..]));
    }

    #[test]
    fn tokens_mode_handles_multi_char_symbols() {
        let s = tokenize("10 2 10", Tokenization::Tokens);
        let t = tokenize("2 33", Tokenization::Tokens);
        let (s, t, map) = normalize(&s, &t);
        // string order: "10" < "2" < "33"
        assert_eq!(s.symbols(), &[1, 2, 1]);
        assert_eq!(t.symbols(), &[2, 3]);
        assert_eq!(map.token(3).map(String::as_str), Some("33"));
    }

    #[test]
    fn next_array_examples() {
        let (w, _, _) = normalize_str("bacbaabada", "");
        let x = next_occurrence_array(&w);
        let inf = x.inf();
        assert_eq!(inf, 12);
        assert_eq!(x.as_slice(), &[4, 5, inf, 7, 6, 8, inf, 10, inf, inf]);
        let (w, _, _) = normalize_str("aaa", "");
        assert_eq!(next_occurrence_array(&w).as_slice(), &[2, 3, 5]);
        let (w, _, _) = normalize_str("abc", "");
        assert_eq!(next_occurrence_array(&w).as_slice(), &[5, 5, 5]);
    }

    #[test]
    fn word_rejects_bad_ids() {
        assert!(Word::new(vec![1, 0], 2).is_err());
        assert!(Word::new(vec![3], 2).is_err());
        assert!(Word::from_symbols(vec![2, 1]).is_ok());
    }

    #[test]
    fn subsequence_check() {
        let (w, _, _) = normalize_str("acabba", "");
        assert!(w.contains_subsequence(&[2, 2]));
        assert!(!w.contains_subsequence(&[3, 3]));
        assert!(w.contains_subsequence(&[]));
    }
}
