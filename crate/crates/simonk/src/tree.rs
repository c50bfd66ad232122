//! Simon-Trees: the nested partitions of a word's suffix positions into
//! k-blocks, built right to left in linear time.
//!
//! Nodes are stored breadth first, so the explicit nodes of one depth form a
//! contiguous id range ordered left to right, and so do the children of a
//! node. Children are *numbered* right to left: child 1 is the rightmost.

use std::fmt::{Display, Write as _};
use std::ops::Range;

use crate::word::{next_occurrences, AlphabetMap, Word};
use crate::Error;

const NONE: u32 = u32::MAX;

/// Index of an explicit node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

/// Closed interval `[start:end]` of 1-based suffix positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub start: u32,
    pub end: u32,
}

impl Block {
    pub fn new(start: u32, end: u32) -> Self {
        Block { start, end }
    }

    pub fn is_singleton(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, pos: u32) -> bool {
        self.start <= pos && pos <= self.end
    }

    pub fn len(&self) -> u32 {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl Display for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}:{}]", self.start, self.end)
    }
}

#[derive(Clone, Debug)]
pub struct SimonTree {
    n: u32,
    marked: bool,
    transformed: bool,
    start: Vec<u32>,
    end: Vec<u32>,
    parent: Vec<u32>,
    first_child: Vec<u32>,
    child_count: Vec<u32>,
    duplicate: Vec<bool>,
    // level k = ids level_offsets[k]..level_offsets[k + 1]
    level_offsets: Vec<u32>,
}

/// Right-to-left construction state. Only the leftmost branch is open; an
/// open node has start 0.
pub struct TreeBuilder<'w> {
    symbols: &'w [u32],
    next: Vec<u32>,
    start: Vec<u32>,
    end: Vec<u32>,
    parent: Vec<u32>,
    leftmost_child: Vec<u32>,
    right_sibling: Vec<u32>,
    leaf: u32,
    /// Node ascents plus node creations, for linearity checks.
    pub work: u64,
}

impl<'w> TreeBuilder<'w> {
    /// Prepares `w$`: the root is the open block ending at the marker `n + 1`.
    pub fn new(w: &'w Word) -> Result<Self, Error> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = w.len();
        let cap = 2 * n + 2;
        let mut b = TreeBuilder {
            symbols: w.symbols(),
            next: next_occurrences(w.symbols(), w.sigma()),
            start: Vec::with_capacity(cap),
            end: Vec::with_capacity(cap),
            parent: Vec::with_capacity(cap),
            leftmost_child: Vec::with_capacity(cap),
            right_sibling: Vec::with_capacity(cap),
            leaf: 0,
            work: 0,
        };
        b.new_node(0, n as u32 + 1, NONE);
        Ok(b)
    }

    fn new_node(&mut self, start: u32, end: u32, parent: u32) -> u32 {
        let id = self.start.len() as u32;
        self.start.push(start);
        self.end.push(end);
        self.parent.push(parent);
        self.leftmost_child.push(NONE);
        self.right_sibling.push(NONE);
        if parent != NONE {
            let p = parent as usize;
            self.right_sibling[id as usize] = self.leftmost_child[p];
            self.leftmost_child[p] = id;
        }
        self.work += 1;
        id
    }

    /// Climbs from the leftmost leaf to the node below which position `i`
    /// opens a new child, closing every node passed with start `i + 1`.
    pub fn find_node(&mut self, i: u32) -> u32 {
        let x = self.next[i as usize - 1];
        let mut a = self.leaf;
        while self.parent[a as usize] != NONE {
            let p = self.parent[a as usize];
            if x >= self.end[a as usize] && x < self.end[p as usize] {
                break;
            }
            self.start[a as usize] = i + 1;
            a = p;
            self.work += 1;
        }
        a
    }

    /// Adds the open block `[?:i]` as leftmost child of `a` (after giving a
    /// leaf its singleton `[i+1:i+1]`); returns the new leftmost leaf.
    pub fn split_node(&mut self, i: u32, a: u32) -> u32 {
        if a == self.leaf {
            self.new_node(i + 1, i + 1, a);
        }
        let b = self.new_node(0, i, a);
        self.leaf = b;
        b
    }

    pub fn finish(self, keep_marker: bool) -> SimonTree {
        let n = self.symbols.len() as u32;
        let mut start = self.start;
        let mut a = 0;
        while a != NONE {
            if start[a as usize] == 0 {
                start[a as usize] = 1;
            }
            a = self.leftmost_child[a as usize];
        }
        let total = if keep_marker { n + 1 } else { n };
        let mut tree = SimonTree::with_capacity(total, keep_marker, start.len());
        // breadth-first relabelling, children visited left to right
        let mut order: Vec<u32> = vec![0];
        tree.push(1, total, NONE, false);
        tree.level_offsets.push(0);
        let mut head = 0;
        while head < order.len() {
            let level_end = order.len();
            tree.level_offsets.push(level_end as u32);
            while head < level_end {
                let old = order[head];
                tree.first_child[head] = order.len() as u32;
                let mut c = self.leftmost_child[old as usize];
                while c != NONE {
                    let cs = start[c as usize];
                    if keep_marker || cs <= n {
                        order.push(c);
                        tree.push(cs, self.end[c as usize], head as u32, false);
                    }
                    c = self.right_sibling[c as usize];
                }
                tree.child_count[head] = order.len() as u32 - tree.first_child[head];
                head += 1;
            }
        }
        tree.level_offsets.pop();
        tree
    }
}

impl SimonTree {
    fn with_capacity(n: u32, marked: bool, cap: usize) -> Self {
        SimonTree {
            n,
            marked,
            transformed: false,
            start: Vec::with_capacity(cap),
            end: Vec::with_capacity(cap),
            parent: Vec::with_capacity(cap),
            first_child: Vec::with_capacity(cap),
            child_count: Vec::with_capacity(cap),
            duplicate: Vec::with_capacity(cap),
            level_offsets: Vec::new(),
        }
    }

    fn push(&mut self, start: u32, end: u32, parent: u32, duplicate: bool) {
        self.start.push(start);
        self.end.push(end);
        self.parent.push(parent);
        self.first_child.push(0);
        self.child_count.push(0);
        self.duplicate.push(duplicate);
    }

    /// The Simon-Tree of `w`; the root is `[1:|w|]`.
    pub fn build(w: &Word) -> Result<Self, Error> {
        Self::build_impl(w, false)
    }

    /// The Simon-Tree of `w$` for an end marker `$` at position `|w| + 1`.
    pub fn build_with_end_marker(w: &Word) -> Result<Self, Error> {
        Self::build_impl(w, true)
    }

    fn build_impl(w: &Word, keep_marker: bool) -> Result<Self, Error> {
        let mut b = TreeBuilder::new(w)?;
        for i in (1..=w.len() as u32).rev() {
            let a = b.find_node(i);
            b.split_node(i, a);
        }
        Ok(b.finish(keep_marker))
    }

    /// Gives every singleton leaf one child carrying the same block. A
    /// transformed tree is returned unchanged.
    pub fn transform(&self) -> SimonTree {
        if self.transformed {
            return self.clone();
        }
        let leaves = (0..self.node_count())
            .filter(|&a| self.child_count[a] == 0)
            .count();
        let mut out = SimonTree::with_capacity(self.n, self.marked, self.node_count() + leaves);
        out.transformed = true;
        // (old id, is duplicate) per new node
        let mut order: Vec<(u32, bool)> = vec![(0, false)];
        out.push(self.start[0], self.end[0], NONE, false);
        out.level_offsets.push(0);
        let mut head = 0;
        while head < order.len() {
            let level_end = order.len();
            out.level_offsets.push(level_end as u32);
            while head < level_end {
                let (old, dup) = order[head];
                out.first_child[head] = order.len() as u32;
                if !dup {
                    let o = old as usize;
                    if self.child_count[o] == 0 {
                        order.push((old, true));
                        out.push(self.start[o], self.end[o], head as u32, true);
                    } else {
                        for c in self.first_child[o]..self.first_child[o] + self.child_count[o] {
                            order.push((c, false));
                            out.push(
                                self.start[c as usize],
                                self.end[c as usize],
                                head as u32,
                                false,
                            );
                        }
                    }
                }
                out.child_count[head] = order.len() as u32 - out.first_child[head];
                head += 1;
            }
        }
        out.level_offsets.pop();
        out
    }

    pub fn is_transformed(&self) -> bool {
        self.transformed
    }

    /// Whether the tree includes the end-marker position.
    pub fn has_end_marker(&self) -> bool {
        self.marked
    }

    /// Number of positions covered (including the marker, if any).
    pub fn len(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn node_count(&self) -> usize {
        self.start.len()
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    /// Greatest depth holding an explicit node.
    pub fn depth(&self) -> u32 {
        self.level_offsets.len() as u32 - 1
    }

    /// Ids of the explicit nodes at depth `k`, left to right.
    pub fn level(&self, k: u32) -> Range<u32> {
        let k = k as usize;
        if k + 1 > self.level_offsets.len() {
            let total = self.node_count() as u32;
            return total..total;
        }
        let hi = self
            .level_offsets
            .get(k + 1)
            .copied()
            .unwrap_or(self.node_count() as u32);
        self.level_offsets[k]..hi
    }

    pub fn depth_of(&self, a: NodeId) -> u32 {
        self.level_offsets.partition_point(|&o| o <= a.0) as u32 - 1
    }

    pub fn block(&self, a: NodeId) -> Block {
        Block {
            start: self.start[a.0 as usize],
            end: self.end[a.0 as usize],
        }
    }

    #[inline]
    pub(crate) fn start_of(&self, a: u32) -> u32 {
        self.start[a as usize]
    }

    #[inline]
    pub(crate) fn end_of(&self, a: u32) -> u32 {
        self.end[a as usize]
    }

    pub fn parent(&self, a: NodeId) -> Option<NodeId> {
        let p = self.parent[a.0 as usize];
        (p != NONE).then_some(NodeId(p))
    }

    pub fn child_count(&self, a: NodeId) -> u32 {
        self.child_count[a.0 as usize]
    }

    /// Children as a left-to-right id range.
    pub fn children(&self, a: NodeId) -> Range<u32> {
        let f = self.first_child[a.0 as usize];
        f..f + self.child_count[a.0 as usize]
    }

    /// The `i`-th child counted from the right, `i >= 1`.
    pub fn child_from_right(&self, a: NodeId, i: u32) -> Option<NodeId> {
        let c = self.children(a);
        (i >= 1 && i <= c.len() as u32).then(|| NodeId(c.end - i))
    }

    /// Whether the node is a copy added by [`transform`](Self::transform).
    pub fn is_duplicate(&self, a: NodeId) -> bool {
        self.duplicate[a.0 as usize]
    }

    /// The `k`-block containing `pos`, with its node if it is explicit.
    pub fn block_at(&self, k: u32, pos: u32) -> (Block, Option<NodeId>) {
        let ids = self.level(k);
        let slice = &self.start[ids.start as usize..ids.end as usize];
        let idx = slice.partition_point(|&s| s <= pos);
        if idx > 0 {
            let a = ids.start + idx as u32 - 1;
            if self.end[a as usize] >= pos {
                return (self.block(NodeId(a)), Some(NodeId(a)));
            }
        }
        (Block::new(pos, pos), None)
    }

    /// All `k`-blocks left to right: explicit nodes of depth `k` plus the
    /// singletons inherited from shallower levels.
    pub fn k_blocks(&self, k: u32) -> Vec<Block> {
        let mut out = Vec::new();
        let mut next = 1;
        for a in self.level(k) {
            let b = self.block(NodeId(a));
            out.extend((next..b.start).map(|p| Block::new(p, p)));
            out.push(b);
            next = b.end + 1;
        }
        out.extend((next..=self.n).map(|p| Block::new(p, p)));
        out
    }

    /// Graphviz rendering; `label` supplies the text of each block.
    pub fn to_dot(&self, label: impl Fn(Block) -> String) -> String {
        let mut out =
            String::from("digraph simon_tree {\n  node [shape=box, fontname=\"monospace\"];\n");
        for a in 0..self.node_count() as u32 {
            let style = if self.duplicate[a as usize] {
                ", style=dashed"
            } else {
                ""
            };
            let text = label(self.block(NodeId(a)))
                .replace('\\', "\\\\")
                .replace('"', "\\\"");
            let _ = writeln!(out, "  n{a} [label=\"{text}\"{style}];");
        }
        for a in 1..self.node_count() as u32 {
            let _ = writeln!(out, "  n{} -> n{a};", self.parent[a as usize]);
        }
        out.push_str("}\n");
        out
    }
}

/// DOT text with labels `[m:n] w[m:n]`; a marker position renders as `$`.
/// Single-character tokens are concatenated, longer ones space-separated.
pub fn export_dot<T: Display + Ord + Clone>(
    tree: &SimonTree,
    w: &Word,
    map: &AlphabetMap<T>,
) -> String {
    let tokens: Vec<String> = (1..=map.sigma())
        .map(|x| map.token(x).unwrap().to_string())
        .collect();
    let sep = if tokens.iter().all(|t| t.chars().count() == 1) {
        ""
    } else {
        " "
    };
    let n = w.len() as u32;
    tree.to_dot(|b| {
        let text: Vec<&str> = (b.start..=b.end)
            .map(|p| {
                if p > n {
                    "$"
                } else {
                    tokens[w.at(p) as usize - 1].as_str()
                }
            })
            .collect();
        format!("{b} {}", text.join(sep))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize_str;

    fn tree(w: &str) -> SimonTree {
        SimonTree::build(&normalize_str(w, "").0).unwrap()
    }

    fn blocks(v: &[(u32, u32)]) -> Vec<Block> {
        v.iter().map(|&(a, b)| Block::new(a, b)).collect()
    }

    #[test]
    fn two_letters() {
        let t = tree("ab");
        assert_eq!(t.block(t.root()), Block::new(1, 2));
        let r = t.root();
        assert_eq!(t.block(t.child_from_right(r, 1).unwrap()), Block::new(2, 2));
        assert_eq!(t.block(t.child_from_right(r, 2).unwrap()), Block::new(1, 1));
        assert_eq!(t.child_from_right(r, 3), None);
    }

    #[test]
    fn repeated_letter_separates_at_level_two() {
        let t = tree("aa");
        assert_eq!(t.k_blocks(1), blocks(&[(1, 2)]));
        assert_eq!(t.k_blocks(2), blocks(&[(1, 1), (2, 2)]));
    }

    #[test]
    fn single_letter_root_has_one_child() {
        let t = tree("a");
        assert_eq!(t.node_count(), 2);
        assert_eq!(t.depth(), 1);
        let tt = t.transform();
        assert_eq!(tt.node_count(), 3);
        assert!(tt.is_duplicate(NodeId(2)));
        assert_eq!(tt.depth_of(NodeId(2)), 2);
    }

    #[test]
    fn level_one_of_bacbaabada() {
        let t = tree("bacbaabada");
        assert_eq!(t.k_blocks(0), blocks(&[(1, 10)]));
        // last occurrences: a@10, d@9, b@7, c@3
        assert_eq!(t.k_blocks(1), blocks(&[(1, 3), (4, 7), (8, 9), (10, 10)]));
        assert_eq!(t.k_blocks(10).len(), 10);
    }

    #[test]
    fn transform_duplicates_each_singleton_leaf_once() {
        let t = tree("bacbaabada");
        let leaves = (0..t.node_count() as u32)
            .filter(|&a| t.child_count(NodeId(a)) == 0)
            .count();
        let tt = t.transform();
        assert_eq!(tt.node_count(), t.node_count() + leaves);
        for a in 0..tt.node_count() as u32 {
            let a = NodeId(a);
            if tt.is_duplicate(a) {
                let p = tt.parent(a).unwrap();
                assert_eq!(tt.block(p), tt.block(a));
                assert_eq!(tt.child_count(p), 1);
                assert_eq!(tt.child_count(a), 0);
            }
        }
        for k in 0..=t.depth() + 1 {
            assert_eq!(t.k_blocks(k), tt.k_blocks(k));
        }
        assert!(tt.transform().node_count() == tt.node_count());
    }

    #[test]
    fn children_cover_parent() {
        for w in ["bacbaabada", "abcabcab", "aabbaabb", "abacabadabacaba"] {
            let t = tree(w).transform();
            for a in 0..t.node_count() as u32 {
                let a = NodeId(a);
                let kids = t.children(a);
                if kids.is_empty() {
                    continue;
                }
                let b = t.block(a);
                assert_eq!(t.block(NodeId(kids.start)).start, b.start);
                assert_eq!(t.block(NodeId(kids.end - 1)).end, b.end);
                for c in kids.start + 1..kids.end {
                    assert_eq!(t.block(NodeId(c - 1)).end + 1, t.block(NodeId(c)).start);
                    assert_eq!(t.depth_of(NodeId(c)), t.depth_of(a) + 1);
                }
            }
        }
    }

    #[test]
    fn marked_tree_keeps_marker_block() {
        let w = normalize_str("acab", "").0;
        let t = SimonTree::build_with_end_marker(&w).unwrap();
        assert_eq!(t.block(t.root()), Block::new(1, 5));
        assert_eq!(t.k_blocks(1), blocks(&[(1, 2), (3, 3), (4, 4), (5, 5)]));
    }

    #[test]
    fn block_lookup() {
        let t = tree("bacbaabada").transform();
        for k in 0..=t.depth() + 1 {
            for b in t.k_blocks(k) {
                for p in b.start..=b.end {
                    let (found, id) = t.block_at(k, p);
                    assert_eq!(found, b);
                    if let Some(id) = id {
                        assert_eq!(t.depth_of(id), k);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_word_is_rejected() {
        assert_eq!(
            SimonTree::build(&Word::from_symbols(vec![]).unwrap()).unwrap_err(),
            Error::EmptyWord
        );
    }

    #[test]
    fn construction_work_is_linear() {
        let w =
            Word::from_symbols((0..5000u32).map(|i| (i * 7 + i / 13) % 5 + 1).collect()).unwrap();
        let mut b = TreeBuilder::new(&w).unwrap();
        for i in (1..=w.len() as u32).rev() {
            let a = b.find_node(i);
            b.split_node(i, a);
        }
        assert!(b.work <= 4 * w.len() as u64 + 4, "work {}", b.work);
    }
}
