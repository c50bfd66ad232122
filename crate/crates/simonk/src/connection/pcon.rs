use crate::tree::{Block, NodeId, SimonTree};
use crate::Error;

/// Counterpart of an explicit node in the other tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Partner {
    None,
    Node(NodeId),
    /// An implicit singleton block of the other word.
    Singleton(u32),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Handle {
    Node(u32),
    Pos(u32),
}

/// Pairing of two transformed Simon-Trees: the roots are paired, and the
/// `i`-th children (from the right) of paired nodes are paired.
#[derive(Clone, Debug)]
pub struct PConnection {
    partner_s: Vec<Partner>,
    partner_t: Vec<Partner>,
    // paired singleton positions, 0 = none
    single_s: Vec<u32>,
    single_t: Vec<u32>,
}

impl PConnection {
    pub fn compute(ts: &SimonTree, tt: &SimonTree) -> Result<Self, Error> {
        if !ts.is_transformed() || !tt.is_transformed() {
            return Err(Error::NotTransformed);
        }
        let mut p = PConnection {
            partner_s: vec![Partner::None; ts.node_count()],
            partner_t: vec![Partner::None; tt.node_count()],
            single_s: vec![0; ts.len() as usize + 1],
            single_t: vec![0; tt.len() as usize + 1],
        };
        let mut cur = vec![(Handle::Node(0), Handle::Node(0))];
        p.partner_s[0] = Partner::Node(NodeId(0));
        p.partner_t[0] = Partner::Node(NodeId(0));
        let mut next = Vec::new();
        while !cur.is_empty() {
            for &(hs, ht) in &cur {
                let cs = children(ts, hs);
                let ct = children(tt, ht);
                for i in 1..=cs.len().min(ct.len()) {
                    p.pair(
                        ts,
                        tt,
                        cs.nth_from_right(i),
                        ct.nth_from_right(i),
                        &mut next,
                    );
                }
            }
            std::mem::swap(&mut cur, &mut next);
            next.clear();
        }
        Ok(p)
    }

    fn pair(
        &mut self,
        ts: &SimonTree,
        tt: &SimonTree,
        x: Handle,
        y: Handle,
        next: &mut Vec<(Handle, Handle)>,
    ) {
        if let (Handle::Pos(_), Handle::Pos(_)) = (x, y) {
            return;
        }
        let bx = bounds(ts, x);
        let by = bounds(tt, y);
        if let Handle::Node(a) = x {
            self.partner_s[a as usize] = to_partner(y);
        }
        if let Handle::Node(b) = y {
            self.partner_t[b as usize] = to_partner(x);
        }
        if bx.0 == bx.1 && by.0 == by.1 {
            self.single_s[bx.0 as usize] = by.0;
            self.single_t[by.0 as usize] = bx.0;
        }
        next.push((x, y));
    }

    pub fn partner_s(&self, a: NodeId) -> Partner {
        self.partner_s[a.0 as usize]
    }

    pub fn partner_t(&self, b: NodeId) -> Partner {
        self.partner_t[b.0 as usize]
    }

    /// Position of `t` whose singleton is paired with the singleton `[i:i]`
    /// of `s` (on every level from the one where both became singletons).
    pub fn singleton_partner_s(&self, i: u32) -> Option<u32> {
        Some(self.single_s[i as usize]).filter(|&j| j != 0)
    }

    pub fn singleton_partner_t(&self, j: u32) -> Option<u32> {
        Some(self.single_t[j as usize]).filter(|&i| i != 0)
    }

    /// Partner of the `k`-block of `s` containing `i` (explicit or not).
    pub fn partner_block_s(&self, ts: &SimonTree, tt: &SimonTree, k: u32, i: u32) -> Option<Block> {
        match ts.block_at(k, i) {
            (_, Some(a)) => partner_block(tt, self.partner_s(a)),
            (b, None) => self.singleton_partner_s(b.start).map(|j| Block::new(j, j)),
        }
    }

    pub fn partner_block_t(&self, ts: &SimonTree, tt: &SimonTree, k: u32, j: u32) -> Option<Block> {
        match tt.block_at(k, j) {
            (_, Some(b)) => partner_block(ts, self.partner_t(b)),
            (b, None) => self.singleton_partner_t(b.start).map(|i| Block::new(i, i)),
        }
    }

    /// Whether the `k`-blocks containing `i` in `s` and `j` in `t` are paired.
    pub fn is_connected(&self, ts: &SimonTree, tt: &SimonTree, k: u32, i: u32, j: u32) -> bool {
        self.partner_block_s(ts, tt, k, i) == Some(tt.block_at(k, j).0)
    }

    /// All paired blocks on level `k`, ordered by their `s` block.
    pub fn pairs_at_level(&self, ts: &SimonTree, tt: &SimonTree, k: u32) -> Vec<(Block, Block)> {
        ts.k_blocks(k)
            .into_iter()
            .filter_map(|a| self.partner_block_s(ts, tt, k, a.start).map(|b| (a, b)))
            .collect()
    }

    #[inline]
    pub(crate) fn raw_partner_s(&self, a: u32) -> Partner {
        self.partner_s[a as usize]
    }

    #[inline]
    pub(crate) fn raw_partner_t(&self, b: u32) -> Partner {
        self.partner_t[b as usize]
    }

    #[inline]
    pub(crate) fn raw_single_s(&self, i: u32) -> u32 {
        self.single_s[i as usize]
    }

    #[inline]
    pub(crate) fn raw_single_t(&self, j: u32) -> u32 {
        self.single_t[j as usize]
    }
}

pub(crate) fn partner_block(other: &SimonTree, p: Partner) -> Option<Block> {
    match p {
        Partner::None => None,
        Partner::Node(b) => Some(other.block(b)),
        Partner::Singleton(j) => Some(Block::new(j, j)),
    }
}

fn to_partner(h: Handle) -> Partner {
    match h {
        Handle::Node(a) => Partner::Node(NodeId(a)),
        Handle::Pos(p) => Partner::Singleton(p),
    }
}

fn bounds(tree: &SimonTree, h: Handle) -> (u32, u32) {
    match h {
        Handle::Node(a) => (tree.start_of(a), tree.end_of(a)),
        Handle::Pos(p) => (p, p),
    }
}

enum Kids {
    Range(u32, u32),
    Implicit(u32),
}

impl Kids {
    fn len(&self) -> usize {
        match self {
            Kids::Range(lo, hi) => (hi - lo) as usize,
            Kids::Implicit(_) => 1,
        }
    }

    fn nth_from_right(&self, i: usize) -> Handle {
        match *self {
            Kids::Range(_, hi) => Handle::Node(hi - i as u32),
            Kids::Implicit(p) => Handle::Pos(p),
        }
    }
}

/// A childless explicit node (a duplicated singleton) continues as the
/// implicit singleton on the next level.
fn children(tree: &SimonTree, h: Handle) -> Kids {
    match h {
        Handle::Node(a) => {
            let r = tree.children(NodeId(a));
            if r.is_empty() {
                Kids::Implicit(tree.start_of(a))
            } else {
                Kids::Range(r.start, r.end)
            }
        }
        Handle::Pos(p) => Kids::Implicit(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize_str;

    fn marked(s: &str, t: &str) -> (SimonTree, SimonTree) {
        let (s, t, _) = normalize_str(s, t);
        (
            SimonTree::build_with_end_marker(&s).unwrap().transform(),
            SimonTree::build_with_end_marker(&t).unwrap().transform(),
        )
    }

    #[test]
    fn requires_transformed_trees() {
        let (s, _, _) = normalize_str("ab", "");
        let t = SimonTree::build(&s).unwrap();
        assert_eq!(
            PConnection::compute(&t, &t).unwrap_err(),
            Error::NotTransformed
        );
    }

    #[test]
    fn acab_acabba_pairs() {
        let (ts, tt) = marked("acab", "acabba");
        let p = PConnection::compute(&ts, &tt).unwrap();
        let b = |x, y| Block::new(x, y);
        assert_eq!(
            p.pairs_at_level(&ts, &tt, 1),
            vec![
                (b(1, 2), b(1, 2)),
                (b(3, 3), b(3, 5)),
                (b(4, 4), b(6, 6)),
                (b(5, 5), b(7, 7))
            ]
        );
        // the duplicated singleton [3:3] meets the first child of [3:5]
        assert_eq!(p.partner_block_s(&ts, &tt, 2, 3), Some(b(5, 5)));
        assert_eq!(p.singleton_partner_s(3), Some(5));
    }

    #[test]
    fn identical_words_pair_identically() {
        let (ts, tt) = marked("bacbaabada", "bacbaabada");
        let p = PConnection::compute(&ts, &tt).unwrap();
        for a in 0..ts.node_count() as u32 {
            assert_eq!(p.partner_s(NodeId(a)), Partner::Node(NodeId(a)));
        }
    }

    #[test]
    fn extra_child_is_unpaired() {
        let (ts, tt) = marked("a", "ab");
        let p = PConnection::compute(&ts, &tt).unwrap();
        // level 1: s has [2:2],[1:1]; t has [3:3],[2:2],[1:1]
        let lvl = tt.level(1);
        assert_eq!(lvl.len(), 3);
        assert_eq!(p.partner_t(NodeId(lvl.start)), Partner::None);
        assert_eq!(p.partner_block_t(&ts, &tt, 1, 1), None);
        assert_eq!(p.partner_block_t(&ts, &tt, 1, 2), Some(Block::new(1, 1)));
    }
}
