//! The largest `k` with `s ~k t`, the decision for a fixed `k`, and a
//! shortest word that is a subsequence of exactly one input.

use std::fmt;

use crate::connection::Connection;
use crate::word::Word;

/// Largest level of congruence; `Equal` when the words coincide (and are
/// therefore congruent on every level).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaxK {
    Finite(u32),
    Equal,
}

impl fmt::Display for MaxK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxK::Finite(k) => write!(f, "{k}"),
            MaxK::Equal => f.write_str("inf"),
        }
    }
}

/// Which input a distinguishing word embeds into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    S,
    T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinguisher {
    pub word: Vec<u32>,
    /// The input containing `word` as a subsequence; the other one does not.
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxKResult {
    pub k: MaxK,
    pub distinguisher: Option<Distinguisher>,
}

pub fn max_sim_k(s: &Word, t: &Word) -> MaxK {
    solve_impl(s, t, false).k
}

/// `s ~k t`.
pub fn sim_k(s: &Word, t: &Word, k: u32) -> bool {
    match max_sim_k(s, t) {
        MaxK::Equal => true,
        MaxK::Finite(m) => k <= m,
    }
}

/// A word of length `max_sim_k + 1` in exactly one spectrum; `None` iff
/// `s = t`.
pub fn distinguishing_word(s: &Word, t: &Word) -> Option<Distinguisher> {
    solve_impl(s, t, true).distinguisher
}

/// Max `k` together with a shortest distinguishing word.
pub fn solve(s: &Word, t: &Word) -> MaxKResult {
    solve_impl(s, t, true)
}

fn solve_impl(s: &Word, t: &Word, want_word: bool) -> MaxKResult {
    // the longer word plays `s`
    let swapped = s.len() < t.len();
    let (s, t) = if swapped { (t, s) } else { (s, t) };
    let (k, word) = if t.is_empty() {
        if s.is_empty() {
            (MaxK::Equal, None)
        } else {
            (MaxK::Finite(0), Some(vec![s.symbols()[0]]))
        }
    } else {
        let c = Connection::new(s, t).expect("both words are non-empty");
        let k = max_k_of(&c);
        let word = match k {
            MaxK::Finite(k) if want_word => Some(distinguish(&c, k)),
            _ => None,
        };
        (k, word)
    };
    let distinguisher = word.map(|word| {
        let in_s = s.contains_subsequence(&word);
        debug_assert_ne!(in_s, t.contains_subsequence(&word));
        let side = match (in_s, swapped) {
            (true, false) | (false, true) => Side::S,
            _ => Side::T,
        };
        Distinguisher { word, side }
    });
    MaxKResult { k, distinguisher }
}

/// Last level on which the blocks of position 1 are paired and unsplit.
pub(crate) fn max_k_of(c: &Connection) -> MaxK {
    let split = c.raw_level_s(1);
    let bound = c.tree_s().depth().max(c.tree_t().depth()) + 2;
    for k in 1..split.min(bound) {
        if !c.is_p_connected(k, 1, 1) {
            return MaxK::Finite(k - 1);
        }
    }
    if split == c.levels().inf() {
        MaxK::Equal
    } else {
        MaxK::Finite(split - 1)
    }
}

/// Walks down from level `k + 1`, keeping `s[i:] ≁_l t[j:]` and
/// `s[i:] ~_{l-1} t[j:]`, choosing each letter so the invariant survives
/// one level lower at the suffixes after its next occurrences.
fn distinguish(c: &Connection, k: u32) -> Vec<u32> {
    let (s, t) = c.marked();
    let (n, nt) = (c.len_s() as usize, c.len_t() as usize);
    let sigma = s.iter().chain(t).copied().max().unwrap_or(0) as usize + 1;
    let mut seen = vec![0u8; sigma];
    let mut word = Vec::with_capacity(k as usize + 1);
    let (mut i, mut j) = (1usize, 1usize);
    let mut level = k + 1;
    while level >= 2 {
        let x = if c.is_p_connected(level, i as u32, j as u32) {
            debug_assert_eq!(c.raw_level_s(i as u32), level);
            c.raw_witness(i as u32)
        } else {
            child_letter_difference(c, level - 1, i as u32, j as u32, &mut seen)
        };
        debug_assert!(x != 0);
        i += s[i..=n]
            .iter()
            .position(|&y| y == x)
            .expect("letter ahead in s")
            + 1;
        j += t[j..=nt]
            .iter()
            .position(|&y| y == x)
            .expect("letter ahead in t")
            + 1;
        word.push(x);
        level -= 1;
    }
    // level 1: differing suffix alphabets
    for &x in &s[i..=n] {
        seen[x as usize] |= 1;
    }
    for &y in &t[j..=nt] {
        seen[y as usize] |= 2;
    }
    let x = seen
        .iter()
        .position(|&m| m == 1 || m == 2)
        .expect("suffix alphabets differ");
    word.push(x as u32);
    word
}

/// A letter in exactly one of `alph(s[i : n_A - 1])` and
/// `alph(t[j : n_B - 1])`, where `A`, `B` are the level-`k` blocks of `i`
/// and `j`; those alphabets are the end letters of the children right of
/// the positions (the rightmost child excluded).
fn child_letter_difference(c: &Connection, k: u32, i: u32, j: u32, mark: &mut [u8]) -> u32 {
    let (s, t) = c.marked();
    let letters =
        |tree: &crate::SimonTree, w: &[u32], node: Option<crate::NodeId>, pos: u32| -> Vec<u32> {
            let Some(a) = node else { return Vec::new() };
            let kids = tree.children(a);
            (kids.start..kids.end.saturating_sub(1))
                .rev()
                .map(|ch| tree.block(crate::NodeId(ch)).end)
                .take_while(|&e| e >= pos)
                .map(|e| w[e as usize])
                .collect()
        };
    let ls = letters(c.tree_s(), s, c.block_s(k, i).1, i);
    let lt = letters(c.tree_t(), t, c.block_t(k, j).1, j);
    for &x in &ls {
        mark[x as usize] = 1;
    }
    let mut found = None;
    for &y in &lt {
        if mark[y as usize] == 0 {
            found = Some(y);
        }
        mark[y as usize] = 2;
    }
    if found.is_none() {
        found = ls.iter().copied().find(|&x| mark[x as usize] == 1);
    }
    for &x in ls.iter().chain(&lt) {
        mark[x as usize] = 0;
    }
    found.expect("unpaired children differ in their letters")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize_str;

    fn k(s: &str, t: &str) -> MaxK {
        let (s, t, _) = normalize_str(s, t);
        max_sim_k(&s, &t)
    }

    #[test]
    fn known_values() {
        assert_eq!(k("acab", "acabba"), MaxK::Finite(1));
        assert_eq!(k("bacbaabada", "bacbaabada"), MaxK::Equal);
        assert_eq!(k("ab", "ba"), MaxK::Finite(1));
        assert_eq!(k("a", "b"), MaxK::Finite(0));
        assert_eq!(k("", ""), MaxK::Equal);
        assert_eq!(k("", "ab"), MaxK::Finite(0));
        assert_eq!(k("aa", "aaa"), MaxK::Finite(2));
    }

    #[test]
    fn decision() {
        let (s, t, _) = normalize_str("acab", "acabba");
        assert!(sim_k(&s, &t, 0));
        assert!(sim_k(&s, &t, 1));
        assert!(!sim_k(&s, &t, 2));
    }

    #[test]
    fn distinguisher_is_one_sided() {
        for (a, b) in [
            ("acab", "acabba"),
            ("a", "b"),
            ("", "ba"),
            ("abcabc", "acbacb"),
            ("aaaa", "aaa"),
        ] {
            let (s, t, _) = normalize_str(a, b);
            let r = solve(&s, &t);
            let d = r.distinguisher.unwrap();
            let MaxK::Finite(k) = r.k else { panic!() };
            assert_eq!(d.word.len() as u32, k + 1);
            let (inside, outside) = if d.side == Side::S {
                (&s, &t)
            } else {
                (&t, &s)
            };
            assert!(inside.contains_subsequence(&d.word));
            assert!(!outside.contains_subsequence(&d.word));
        }
    }

    #[test]
    fn empty_against_word() {
        let (s, t, _) = normalize_str("", "ba");
        let d = distinguishing_word(&s, &t).unwrap();
        assert_eq!((d.word, d.side), (vec![2], Side::T));
        assert_eq!(distinguishing_word(&t, &t), None);
    }

    #[test]
    fn display() {
        assert_eq!(MaxK::Equal.to_string(), "inf");
        assert_eq!(MaxK::Finite(3).to_string(), "3");
    }
}
