//! Pairing the Simon-Trees of two words and refining the pairing until
//! paired blocks are exactly the congruent ones.
//!
//! Both trees are built for the words with an end marker appended (so the
//! empty suffix is a block too) and transformed. The connection first pairs
//! blocks by shape ([`PConnection`]), then [`Connection::new`] splits pairs
//! level by level and records, per position, the first level at which its
//! block has no congruent partner ([`LevelArrays`]).

mod pcon;
mod prevright;
mod refine;

pub use pcon::{PConnection, Partner};
pub use prevright::{
    interval_pair_lists, IntervalPair, IntervalPairLists, PrevRightEntry, PrevRightTable,
};

use crate::tree::{Block, NodeId, SimonTree};
use crate::word::{next_occurrences, Word};
use crate::Error;

/// Visiting order of nodes inside a level; the result does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Order {
    #[default]
    Forward,
    Reversed,
}

/// Work counters of one refinement.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RefineStats {
    pub interval_pairs: u64,
    pub walk_steps: u64,
    pub pairs_split: u64,
    pub unpaired: u64,
}

/// Per position of `s` and `t`: the smallest level on which the position's
/// block is not congruent to its partner, or [`inf`](Self::inf).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelArrays {
    level_s: Vec<u32>,
    level_t: Vec<u32>,
    witness: Vec<u32>,
    n: u32,
    n_t: u32,
    inf: u32,
}

impl LevelArrays {
    /// `|s| + |t| + 1`.
    pub fn inf(&self) -> u32 {
        self.inf
    }

    /// Levels of positions `1..=|s|` (index 0 is position 1).
    pub fn level_s(&self) -> &[u32] {
        &self.level_s[1..=self.n as usize]
    }

    pub fn level_t(&self) -> &[u32] {
        &self.level_t[1..=self.n_t as usize]
    }

    /// Whether a recorded level means "still unsplit on level `k`".
    pub fn unsplit_at(&self, level: u32, k: u32) -> bool {
        level == self.inf || level > k
    }

    /// Letter that caused the split of position `i` of `s`, if one was
    /// recorded (not for level-1 splits or unpaired blocks).
    pub fn witness_s(&self, i: u32) -> Option<u32> {
        Some(self.witness[i as usize]).filter(|&x| x != 0)
    }
}

/// Everything derived from a pair of non-empty words.
#[derive(Clone, Debug)]
pub struct Connection {
    s: Vec<u32>,
    t: Vec<u32>,
    ts: SimonTree,
    tt: SimonTree,
    p: PConnection,
    levels: LevelArrays,
    stats: RefineStats,
}

impl Connection {
    pub fn new(s: &Word, t: &Word) -> Result<Self, Error> {
        Self::with_order(s, t, Order::Forward)
    }

    pub fn with_order(s: &Word, t: &Word, order: Order) -> Result<Self, Error> {
        if s.is_empty() || t.is_empty() {
            return Err(Error::EmptyWord);
        }
        let marker = s.sigma().max(t.sigma()) + 1;
        let with_marker = |w: &Word| {
            let mut v = Vec::with_capacity(w.len() + 2);
            v.push(0);
            v.extend_from_slice(w.symbols());
            v.push(marker);
            v
        };
        let (sm, tm) = (with_marker(s), with_marker(t));
        let ts = SimonTree::build_with_end_marker(s)?.transform();
        let tt = SimonTree::build_with_end_marker(t)?.transform();
        let p = PConnection::compute(&ts, &tt)?;
        let table = {
            let next_s = next_occurrences(s.symbols(), s.sigma());
            PrevRightTable::compute(&sm, &tm, &next_s, &ts, &tt, &p)
        };
        let inf = (s.len() + t.len() + 1) as u32;
        let out = refine::Refiner::new(&sm, &tm, &ts, &tt, &p, &table, inf).run(order);
        drop(table);
        let levels = LevelArrays {
            level_s: out.level_s,
            level_t: out.level_t,
            witness: out.witness,
            n: s.len() as u32,
            n_t: t.len() as u32,
            inf,
        };
        Ok(Connection {
            s: sm,
            t: tm,
            ts,
            tt,
            p,
            levels,
            stats: out.stats,
        })
    }

    /// Transformed tree of `s$`.
    pub fn tree_s(&self) -> &SimonTree {
        &self.ts
    }

    pub fn tree_t(&self) -> &SimonTree {
        &self.tt
    }

    pub fn p_connection(&self) -> &PConnection {
        &self.p
    }

    pub fn levels(&self) -> &LevelArrays {
        &self.levels
    }

    pub fn stats(&self) -> RefineStats {
        self.stats
    }

    pub fn len_s(&self) -> u32 {
        self.s.len() as u32 - 2
    }

    pub fn len_t(&self) -> u32 {
        self.t.len() as u32 - 2
    }

    /// Level of position `i` of `s`; `i = |s| + 1` is the empty suffix.
    pub(crate) fn raw_level_s(&self, i: u32) -> u32 {
        self.levels.level_s[i as usize]
    }

    pub(crate) fn raw_witness(&self, i: u32) -> u32 {
        self.levels.witness[i as usize]
    }

    /// `s$` and `t$`, 1-based with an unused index 0.
    pub(crate) fn marked(&self) -> (&[u32], &[u32]) {
        (&self.s, &self.t)
    }

    /// Whether the `k`-blocks of `i` (in `s`) and `j` (in `t`) are paired.
    /// Positions may include the marker position.
    pub fn is_p_connected(&self, k: u32, i: u32, j: u32) -> bool {
        self.p.is_connected(&self.ts, &self.tt, k, i, j)
    }

    /// Whether the `k`-blocks of `i` and `j` are paired and congruent,
    /// i.e. `s[i:] ~k t[j:]`.
    pub fn is_s_connected(&self, k: u32, i: u32, j: u32) -> bool {
        k == 0 || (self.levels.unsplit_at(self.raw_level_s(i), k) && self.is_p_connected(k, i, j))
    }

    /// Congruent pairs of `k`-blocks, ordered by the `s` block.
    pub fn s_connected_pairs(&self, k: u32) -> Vec<(Block, Block)> {
        self.p
            .pairs_at_level(&self.ts, &self.tt, k)
            .into_iter()
            .filter(|(a, _)| k == 0 || self.levels.unsplit_at(self.raw_level_s(a.start), k))
            .collect()
    }

    /// The `k`-block of `s$` containing `i`, with its node if explicit.
    pub fn block_s(&self, k: u32, i: u32) -> (Block, Option<NodeId>) {
        self.ts.block_at(k, i)
    }

    pub fn block_t(&self, k: u32, j: u32) -> (Block, Option<NodeId>) {
        self.tt.block_at(k, j)
    }
}
