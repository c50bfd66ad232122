#![allow(dead_code)]

use std::collections::HashMap;

use simonk::oracle::Layers;
use simonk::workload::all_words;
use simonk::{Connection, MaxK, Word};

/// Cached subsequence layers of every word of a closed-under-suffix corpus
/// (including the empty word), so the oracle answer for any pair of
/// suffixes is a lookup plus a comparison.
pub struct OracleTable {
    pub words: Vec<Word>,
    layers: HashMap<Vec<u32>, Layers>,
}

impl OracleTable {
    pub fn new(sigma: u32, max_len: usize) -> Self {
        let words = all_words(sigma, max_len);
        let mut layers: HashMap<Vec<u32>, Layers> = words
            .iter()
            .map(|w| (w.symbols().to_vec(), Layers::of(w.symbols(), max_len)))
            .collect();
        layers.insert(Vec::new(), Layers::of(&[], 0));
        OracleTable { words, layers }
    }

    pub fn max_k(&self, u: &[u32], v: &[u32]) -> MaxK {
        self.layers[u].agreement(&self.layers[v])
    }
}

pub fn congruent(m: MaxK, k: u32) -> bool {
    match m {
        MaxK::Equal => true,
        MaxK::Finite(x) => k <= x,
    }
}

/// Compares every position pair (the empty suffixes included) and every
/// level against the oracle; returns a description of the first mismatch.
pub fn check_s_connection(table: &OracleTable, s: &Word, t: &Word) -> Result<(), String> {
    let c = Connection::new(s, t).map_err(|e| e.to_string())?;
    let (n, m) = (s.len() as u32, t.len() as u32);
    let top = n.max(m) + 2;
    for i in 1..=n + 1 {
        for j in 1..=m + 1 {
            let truth = table.max_k(
                &s.symbols()[i as usize - 1..],
                &t.symbols()[j as usize - 1..],
            );
            for k in 0..=top {
                if c.is_s_connected(k, i, j) != congruent(truth, k) {
                    return Err(format!(
                        "s={:?} t={:?} i={i} j={j} k={k}: structure says {}, oracle max k {truth}",
                        s.symbols(),
                        t.symbols(),
                        c.is_s_connected(k, i, j)
                    ));
                }
            }
        }
    }
    Ok(())
}
