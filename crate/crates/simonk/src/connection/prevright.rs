use super::pcon::{partner_block, PConnection};
use crate::tree::{Block, NodeId, SimonTree};

/// For a node `a` of the `s` tree and a letter `x` of `s[m_a-1 : n_a-1]`:
/// the rightmost `x` in `s[1 : m_a-2]` and in `s[1 : n_a-1]`, plus the same
/// two values for the partner block `b` in `t`. Missing occurrences are 0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PrevRightEntry {
    pub letter: u32,
    pub prev_a: u32,
    pub right_a: u32,
    pub prev_b: u32,
    pub right_b: u32,
}

/// A range of `s` block ends paired with a range of `t` block ends: every
/// alive pair of `(k+1)`-blocks ending inside both ranges gets split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalPair {
    pub letter: u32,
    pub s_ends: (u32, u32),
    pub t_ends: (u32, u32),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalPairLists {
    /// `b'` ends left of the partner's part of the parent.
    pub first: Vec<IntervalPair>,
    /// `b'` ends right of the last `x` of `b`, inside `b`.
    pub second: Vec<IntervalPair>,
    /// Both end at an `x` inside their block; only for split `(a, b)`.
    pub third: Vec<IntervalPair>,
}

impl PrevRightEntry {
    pub fn first(&self, a: Block) -> IntervalPair {
        IntervalPair {
            letter: self.letter,
            s_ends: (self.prev_a + 1, a.start - 1),
            t_ends: (1, self.prev_b),
        }
    }

    pub fn second(&self, b: Block) -> IntervalPair {
        IntervalPair {
            letter: self.letter,
            s_ends: (self.prev_a + 1, self.right_a),
            t_ends: (self.right_b + 1, b.end),
        }
    }

    pub fn third(&self) -> IntervalPair {
        IntervalPair {
            letter: self.letter,
            s_ends: (self.prev_a + 1, self.right_a),
            t_ends: (self.prev_b + 1, self.right_b),
        }
    }

    /// For a block without partner: any `t` block end qualifies.
    pub fn unpaired(&self, t_len: u32) -> IntervalPair {
        IntervalPair {
            letter: self.letter,
            s_ends: (self.prev_a + 1, self.right_a),
            t_ends: (1, t_len),
        }
    }
}

/// The lists for a paired `(a, b)`; `split` says whether `a` and `b`
/// themselves are separated on their level.
pub fn interval_pair_lists(
    a: Block,
    b: Block,
    entries: &[PrevRightEntry],
    split: bool,
) -> IntervalPairLists {
    IntervalPairLists {
        first: entries.iter().map(|e| e.first(a)).collect(),
        second: entries.iter().map(|e| e.second(b)).collect(),
        third: if split {
            entries.iter().map(|e| e.third()).collect()
        } else {
            Vec::new()
        },
    }
}

/// Entries for every non-root node of the `s` tree, grouped by node.
#[derive(Clone, Debug)]
pub struct PrevRightTable {
    offsets: Vec<u32>,
    entries: Vec<PrevRightEntry>,
}

impl PrevRightTable {
    /// `s` and `t` are 1-based (index 0 unused) and include the end marker;
    /// `next_s` is the next-occurrence array of `s` without the marker.
    pub(crate) fn compute(
        s: &[u32],
        t: &[u32],
        next_s: &[u32],
        ts: &SimonTree,
        tt: &SimonTree,
        p: &PConnection,
    ) -> Self {
        let nodes = ts.node_count();
        let mut offsets = Vec::with_capacity(nodes + 1);
        let mut entries = Vec::with_capacity(nodes);
        offsets.push(0);
        offsets.push(0); // root
        for a in 1..nodes as u32 {
            let id = NodeId(a);
            let blk = ts.block(id);
            let kids = ts.children(id);
            // every child but the rightmost ends at a first-from-right letter
            for c in kids.start..kids.end.saturating_sub(1) {
                let e = ts.end_of(c);
                entries.push(PrevRightEntry {
                    letter: s[e as usize],
                    right_a: e,
                    ..Default::default()
                });
            }
            if blk.start >= 2 {
                let m1 = blk.start - 1;
                if kids.len() <= 1 || next_s[m1 as usize - 1] >= blk.end {
                    entries.push(PrevRightEntry {
                        letter: s[m1 as usize],
                        right_a: m1,
                        ..Default::default()
                    });
                }
            }
            offsets.push(entries.len() as u32);
        }
        let mut table = PrevRightTable { offsets, entries };
        let sigma = s.iter().chain(t).copied().max().unwrap_or(0) as usize + 1;
        table.sweep(
            s,
            sigma,
            |a| Some(ts.start_of(a).saturating_sub(2)),
            |e, v| e.prev_a = v,
        );
        let partner = |a: u32| partner_block(tt, p.raw_partner_s(a));
        table.sweep(
            t,
            sigma,
            |a| partner(a).map(|b| b.start.saturating_sub(2)),
            |e, v| e.prev_b = v,
        );
        table.sweep(
            t,
            sigma,
            |a| partner(a).map(|b| b.end - 1),
            |e, v| e.right_b = v,
        );
        table
    }

    /// Answers "rightmost occurrence of the entry's letter in `w[1:key]`"
    /// for all entries at once: bucket by key, then one left-to-right pass.
    fn sweep(
        &mut self,
        w: &[u32],
        sigma: usize,
        key: impl Fn(u32) -> Option<u32>,
        mut set: impl FnMut(&mut PrevRightEntry, u32),
    ) {
        let nodes = self.offsets.len() - 1;
        let mut start = vec![0u32; w.len() + 1];
        for a in 1..nodes as u32 {
            if let Some(k) = key(a) {
                start[k as usize + 1] += self.offsets[a as usize + 1] - self.offsets[a as usize];
            }
        }
        for i in 1..start.len() {
            start[i] += start[i - 1];
        }
        let total = *start.last().unwrap() as usize;
        let mut order = vec![0u32; total];
        let mut fill = start.clone();
        for a in 1..nodes as u32 {
            if let Some(k) = key(a) {
                for e in self.offsets[a as usize]..self.offsets[a as usize + 1] {
                    order[fill[k as usize] as usize] = e;
                    fill[k as usize] += 1;
                }
            }
        }
        drop(fill);
        let mut last = vec![0u32; sigma];
        for pos in 0..w.len() {
            if pos > 0 {
                last[w[pos] as usize] = pos as u32;
            }
            for &e in &order[start[pos] as usize..start[pos + 1] as usize] {
                let entry = &mut self.entries[e as usize];
                set(entry, last[entry.letter as usize]);
            }
        }
    }

    pub fn entries(&self, a: NodeId) -> &[PrevRightEntry] {
        let a = a.0 as usize;
        &self.entries[self.offsets[a] as usize..self.offsets[a + 1] as usize]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
