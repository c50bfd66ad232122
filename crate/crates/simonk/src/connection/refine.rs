//! Level-by-level splitting of paired blocks.
//!
//! Positions of both words carry the level at which their block lost its
//! partner. A pair of `(k+1)`-blocks is split when some letter `x` sends
//! both block ends to suffixes already separated at level `k`; the pairs to
//! split form, per node and letter, contiguous runs of block ends, which are
//! walked with split-find (current blocks) and union-find (runs of dead
//! positions, skipped in one step).

use super::pcon::{PConnection, Partner};
use super::prevright::{IntervalPair, PrevRightTable};
use super::{Order, RefineStats};
use crate::interval::{IntervalSplitFind, IntervalUnionFind};
use crate::tree::{NodeId, SimonTree};

const NO_NODE: u32 = u32::MAX;

/// Per-word mutable state.
struct Side<'a> {
    w: &'a [u32],
    tree: &'a SimonTree,
    len: u32,
    level: Vec<u32>,
    blocks: IntervalSplitFind,
    dead_runs: IntervalUnionFind,
    // explicit node starting at a position on the newest level it had one
    cur: Vec<u32>,
}

impl<'a> Side<'a> {
    fn new(w: &'a [u32], tree: &'a SimonTree, inf: u32) -> Self {
        let len = w.len() as u32 - 1;
        Side {
            w,
            tree,
            len,
            level: vec![inf; len as usize + 1],
            blocks: IntervalSplitFind::new(len),
            dead_runs: IntervalUnionFind::new(len),
            cur: vec![NO_NODE; len as usize + 1],
        }
    }

    /// Splits the block partition down to level `k` and indexes its nodes.
    fn enter_level(&mut self, k: u32) {
        for a in self.tree.level(k) {
            self.blocks.split_unchecked(self.tree.end_of(a));
            self.cur[self.tree.start_of(a) as usize] = a;
        }
    }

    /// Explicit node of level `k` starting at `p`, if any.
    #[inline]
    fn node_at(&self, k: u32, p: u32) -> Option<u32> {
        let a = self.cur[p as usize];
        let r = self.tree.level(k);
        (a != NO_NODE && r.contains(&a)).then_some(a)
    }

    #[inline]
    fn alive(&self, p: u32, inf: u32) -> bool {
        self.level[p as usize] == inf
    }

    fn kill(&mut self, p: u32, q: u32, k: u32, inf: u32) {
        for i in p..=q {
            debug_assert_eq!(self.level[i as usize], inf, "position split twice");
            self.level[i as usize] = k;
        }
        for i in p..q {
            self.dead_runs.union_unchecked(i);
        }
        if p > 1 && self.level[p as usize - 1] != inf {
            self.dead_runs.union_unchecked(p - 1);
        }
        if q < self.len && self.level[q as usize + 1] != inf {
            self.dead_runs.union_unchecked(q);
        }
    }

    /// First alive block ending at or after `e`.
    #[inline]
    fn first_alive_from(&mut self, e: u32, inf: u32) -> Option<(u32, u32)> {
        if e > self.len {
            return None;
        }
        let (p, q) = self.blocks.find_unchecked(e);
        if self.alive(p, inf) {
            return Some((p, q));
        }
        let (_, d) = self.dead_runs.find_unchecked(p);
        (d < self.len).then(|| self.blocks.find_unchecked(d + 1))
    }
}

pub(super) struct Refiner<'a> {
    s: Side<'a>,
    t: Side<'a>,
    p: &'a PConnection,
    table: &'a PrevRightTable,
    prev_s: Vec<u32>,
    prev_t: Vec<u32>,
    witness: Vec<u32>,
    inf: u32,
    pub(super) stats: RefineStats,
}

pub(super) struct Output {
    pub level_s: Vec<u32>,
    pub level_t: Vec<u32>,
    pub witness: Vec<u32>,
    pub stats: RefineStats,
}

fn previous_occurrences(w: &[u32]) -> Vec<u32> {
    let sigma = w.iter().copied().max().unwrap_or(0) as usize + 1;
    let mut last = vec![0u32; sigma];
    let mut prev = vec![0u32; w.len()];
    for i in 1..w.len() {
        prev[i] = last[w[i] as usize];
        last[w[i] as usize] = i as u32;
    }
    prev
}

impl<'a> Refiner<'a> {
    pub(super) fn new(
        s: &'a [u32],
        t: &'a [u32],
        ts: &'a SimonTree,
        tt: &'a SimonTree,
        p: &'a PConnection,
        table: &'a PrevRightTable,
        inf: u32,
    ) -> Self {
        Refiner {
            s: Side::new(s, ts, inf),
            t: Side::new(t, tt, inf),
            p,
            table,
            prev_s: previous_occurrences(s),
            prev_t: previous_occurrences(t),
            witness: vec![0; s.len()],
            inf,
            stats: RefineStats::default(),
        }
    }

    pub(super) fn run(mut self, order: Order) -> Output {
        let inf = self.inf;
        self.enter_level(1);
        self.level1_split();
        let max_depth = self.s.tree.depth().max(self.t.tree.depth());
        let mut singles: Vec<u32> = Vec::new();
        let mut k = 1;
        while k <= max_depth || !singles.is_empty() {
            self.enter_level(k + 1);
            let mut next_singles = Vec::new();
            let nodes = self.s.tree.level(k);
            let mut visit = |this: &mut Self, a: u32| this.process_node(a, k, &mut next_singles);
            match order {
                Order::Forward => nodes.for_each(|a| visit(&mut self, a)),
                Order::Reversed => nodes.rev().for_each(|a| visit(&mut self, a)),
            }
            if order == Order::Reversed {
                singles.reverse();
            }
            for &i in &singles {
                self.process_singleton(i, k, &mut next_singles);
            }
            singles = next_singles;
            k += 1;
        }
        debug_assert!(self.s.level[1..].iter().all(|&l| l == inf || l <= k + 1));
        Output {
            level_s: self.s.level,
            level_t: self.t.level,
            witness: self.witness,
            stats: self.stats,
        }
    }

    /// Indexes level `k` and kills its unpaired blocks whose parents live.
    fn enter_level(&mut self, k: u32) {
        let inf = self.inf;
        self.s.enter_level(k);
        self.t.enter_level(k);
        for a in self.s.tree.level(k) {
            let (m, n) = (self.s.tree.start_of(a), self.s.tree.end_of(a));
            if self.p.raw_partner_s(a) == Partner::None && self.s.alive(m, inf) {
                self.s.kill(m, n, k, inf);
                self.stats.unpaired += 1;
            }
        }
        for b in self.t.tree.level(k) {
            let (m, n) = (self.t.tree.start_of(b), self.t.tree.end_of(b));
            if self.p.raw_partner_t(b) == Partner::None && self.t.alive(m, inf) {
                self.t.kill(m, n, k, inf);
                self.stats.unpaired += 1;
            }
        }
    }

    /// Level 1: paired blocks split iff the alphabets of the suffixes from
    /// their ends differ. `h[x]`: 0 unseen, 1 only in `s`, 3 only in `t`,
    /// 2 both; `odd` counts letters in state 1 or 3.
    fn level1_split(&mut self) {
        let inf = self.inf;
        let rs = self.s.tree.children(NodeId(0));
        let rt = self.t.tree.children(NodeId(0));
        let sigma = self.s.w.iter().chain(self.t.w).copied().max().unwrap_or(0) as usize + 1;
        let mut h = vec![0u8; sigma];
        let mut odd = 0i64;
        for i in 1..=rs.len().min(rt.len()) as u32 {
            let (a, b) = (rs.end - i, rt.end - i);
            let x = self.s.w[self.s.tree.end_of(a) as usize] as usize;
            match h[x] {
                0 => (h[x], odd) = (1, odd + 1),
                3 => (h[x], odd) = (2, odd - 1),
                _ => {}
            }
            let y = self.t.w[self.t.tree.end_of(b) as usize] as usize;
            match h[y] {
                0 => (h[y], odd) = (3, odd + 1),
                1 => (h[y], odd) = (2, odd - 1),
                _ => {}
            }
            if odd != 0 {
                let (m, n) = (self.s.tree.start_of(a), self.s.tree.end_of(a));
                self.s.kill(m, n, 1, inf);
                let (m, n) = (self.t.tree.start_of(b), self.t.tree.end_of(b));
                self.t.kill(m, n, 1, inf);
                self.stats.pairs_split += 1;
            }
        }
    }

    fn process_node(&mut self, a: u32, k: u32, singles: &mut Vec<u32>) {
        let ma = self.s.tree.start_of(a);
        let la = self.s.level[ma as usize];
        if la < k {
            return;
        }
        let blk = self.s.tree.block(NodeId(a));
        let entries = self.table.entries(NodeId(a));
        match self.p.raw_partner_s(a) {
            Partner::None => {
                for e in entries {
                    self.walk(e.unpaired(self.t.len), k + 1, singles);
                }
            }
            partner => {
                let b = super::pcon::partner_block(self.t.tree, partner).unwrap();
                for e in entries {
                    self.walk(e.first(blk), k + 1, singles);
                    self.walk(e.second(b), k + 1, singles);
                    if la == k {
                        self.walk(e.third(), k + 1, singles);
                    }
                }
            }
        }
    }

    /// A pair of implicit singletons `[i:i]`, `[j:j]` split on level `k`:
    /// only the letter before them can propagate the split.
    fn process_singleton(&mut self, i: u32, k: u32, singles: &mut Vec<u32>) {
        let j = self.p.raw_single_s(i);
        if i < 2 || j < 2 {
            return;
        }
        let x = self.s.w[i as usize - 1];
        if self.t.w[j as usize - 1] != x {
            return;
        }
        let pair = IntervalPair {
            letter: x,
            s_ends: (self.prev_s[i as usize - 1] + 1, i - 1),
            t_ends: (self.prev_t[j as usize - 1] + 1, j - 1),
        };
        self.walk(pair, k + 1, singles);
    }

    #[inline]
    fn partner_of_s(&self, k: u32, p: u32) -> (u32, u32) {
        match self.s.node_at(k, p) {
            Some(a) => match self.p.raw_partner_s(a) {
                Partner::Node(b) => (self.t.tree.start_of(b.0), self.t.tree.end_of(b.0)),
                Partner::Singleton(j) => (j, j),
                Partner::None => unreachable!("alive block without partner"),
            },
            None => {
                let j = self.p.raw_single_s(p);
                (j, j)
            }
        }
    }

    #[inline]
    fn partner_of_t(&self, k: u32, p: u32) -> (u32, u32) {
        match self.t.node_at(k, p) {
            Some(b) => match self.p.raw_partner_t(b) {
                Partner::Node(a) => (self.s.tree.start_of(a.0), self.s.tree.end_of(a.0)),
                Partner::Singleton(i) => (i, i),
                Partner::None => unreachable!("alive block without partner"),
            },
            None => {
                let i = self.p.raw_single_t(p);
                (i, i)
            }
        }
    }

    /// Splits, on level `k`, every alive pair whose `s` block ends in
    /// `pair.s_ends` and whose `t` block ends in `pair.t_ends`. Alive pairs
    /// are order-preserving, so these pairs are consecutive.
    fn walk(&mut self, pair: IntervalPair, k: u32, singles: &mut Vec<u32>) {
        self.stats.interval_pairs += 1;
        let inf = self.inf;
        let (e1, e2) = (pair.s_ends.0.max(1), pair.s_ends.1.min(self.s.len));
        let (f1, f2) = (pair.t_ends.0.max(1), pair.t_ends.1.min(self.t.len));
        if e1 > e2 || f1 > f2 {
            return;
        }
        let Some(mut cur) = self.s.first_alive_from(e1, inf) else {
            return;
        };
        let Some((p2, _)) = self.t.first_alive_from(f1, inf) else {
            return;
        };
        let (r, o) = self.partner_of_t(k, p2);
        if r > cur.0 {
            cur = (r, o);
        }
        loop {
            let (p, q) = cur;
            if q > e2 {
                break;
            }
            let (pp, qq) = self.partner_of_s(k, p);
            if qq > f2 {
                break;
            }
            self.s.kill(p, q, k, inf);
            self.t.kill(pp, qq, k, inf);
            for i in p..=q {
                self.witness[i as usize] = pair.letter;
            }
            if p == q && self.s.node_at(k, p).is_none() {
                singles.push(p);
            }
            self.stats.pairs_split += 1;
            self.stats.walk_steps += 1;
            match self.s.first_alive_from(q + 1, inf) {
                Some(next) => cur = next,
                None => break,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::connection::{Connection, Order};
    use crate::normalize_str;
    use crate::workload::{near_identical_pair, rng};

    #[test]
    fn visiting_order_does_not_matter() {
        let mut r = rng(5);
        for n in [10, 50, 300] {
            let (s, t) = near_identical_pair(&mut r, n, 3, 2);
            let a = Connection::with_order(&s, &t, Order::Forward).unwrap();
            let b = Connection::with_order(&s, &t, Order::Reversed).unwrap();
            assert_eq!(a.levels().level_s(), b.levels().level_s());
            assert_eq!(a.levels().level_t(), b.levels().level_t());
        }
    }

    #[test]
    fn counters_track_work() {
        let (s, t, _) = normalize_str("acab", "acabba");
        let st = Connection::new(&s, &t).unwrap().stats();
        assert!(st.pairs_split > 0 && st.interval_pairs > 0);
        let st = Connection::new(&s, &s).unwrap().stats();
        assert_eq!((st.pairs_split, st.unpaired), (0, 0));
    }
}
