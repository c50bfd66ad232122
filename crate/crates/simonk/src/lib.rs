//! Simon's congruence in linear time.
//!
//! Two words are `k`-congruent when they have the same subsequences of
//! length at most `k`. This crate computes the largest such `k`
//! ([`max_sim_k`]), decides the relation for a given `k` ([`sim_k`]) and
//! extracts a shortest word that is a subsequence of exactly one input
//! ([`distinguishing_word`]). The machinery behind it — Simon-Trees, the
//! pairing of their nodes, interval split/union structures — is public too,
//! as is a brute-force [`oracle`] for small inputs.
//!
//! Start with the programs in `examples/`:
//!
//! | example        | shows                                          |
//! |----------------|------------------------------------------------|
//! | `maxk`         | max `k`, the decision problem, empty words     |
//! | `distinguish`  | shortest distinguishing words                  |
//! | `simon_tree`   | tree construction, k-blocks, DOT rendering     |
//! | `connection`   | block pairing and split levels of two words    |
//! | `tokens`       | integer / multi-character alphabets            |
//! | `intervals`    | split-find and union-find                      |
//! | `oracle`       | cross-checking against brute force             |
//! | `scaling`      | timing on large generated inputs               |
//!
//! ```
//! use simonk::{max_sim_k, normalize_str, MaxK};
//!
//! let (s, t, _) = normalize_str("acab", "acabba");
//! assert_eq!(max_sim_k(&s, &t), MaxK::Finite(1));
//! ```

mod error;

pub mod connection;
pub mod interval;
pub mod invariants;
pub mod maxsimk;
pub mod oracle;
pub mod tree;
pub mod word;
pub mod workload;

pub use connection::{Connection, LevelArrays, PConnection, Partner};
pub use error::Error;
pub use interval::{IntervalSplitFind, IntervalUnionFind};
pub use maxsimk::{
    distinguishing_word, max_sim_k, sim_k, solve, Distinguisher, MaxK, MaxKResult, Side,
};
pub use tree::{Block, NodeId, SimonTree};
pub use word::{
    next_occurrence_array, normalize, normalize_str, tokenize, AlphabetMap, NextArray,
    Tokenization, Word,
};
