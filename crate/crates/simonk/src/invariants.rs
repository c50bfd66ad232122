//! Structural checks, usable on any input; each returns the first
//! violation found.

use std::fmt;

use crate::connection::Connection;
use crate::oracle;
use crate::tree::{NodeId, SimonTree};
use crate::word::Word;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(Violation(format!($($arg)*)));
        }
    };
}

fn levels(c: &Connection) -> u32 {
    c.tree_s().depth().max(c.tree_t().depth()) + 2
}

/// Congruent block pairs never cross: ordered by their `s` block, their
/// `t` blocks are strictly increasing, on every level.
pub fn non_crossing(c: &Connection) -> Result<(), Violation> {
    for k in 0..=levels(c) {
        let pairs = c.s_connected_pairs(k);
        for w in pairs.windows(2) {
            ensure!(
                w[0].0.end < w[1].0.start && w[0].1.end < w[1].1.start,
                "crossing pairs on level {k}: {w:?}"
            );
        }
    }
    Ok(())
}

/// Congruent pairs are a sub-pairing of the shape pairing, and both sides
/// of a pair agree on when it was split.
pub fn s_within_p(c: &Connection) -> Result<(), Violation> {
    let inf = c.levels().inf();
    let (ls, lt) = (c.levels().level_s(), c.levels().level_t());
    let lvl = |v: &[u32], i: u32| v.get(i as usize - 1).copied().unwrap_or(inf);
    for k in 1..=levels(c) {
        for (a, b) in c.p_connection().pairs_at_level(c.tree_s(), c.tree_t(), k) {
            ensure!(
                c.is_p_connected(k, a.start, b.start),
                "pair {a}/{b} on level {k} not found again"
            );
            let (x, y) = (lvl(ls, a.start), lvl(lt, b.start));
            let alive = c.levels().unsplit_at(x, k);
            ensure!(
                alive == c.levels().unsplit_at(y, k),
                "pair {a}/{b} on level {k}: split levels {x} vs {y}"
            );
            if alive {
                ensure!(
                    c.is_s_connected(k, a.start, b.start),
                    "alive pair {a}/{b} on level {k} not congruent"
                );
            }
        }
    }
    Ok(())
}

/// Every `(k+1)`-block lies inside one `k`-block, explicit nodes sit inside
/// their parents, and children tile their parent.
pub fn refinement_containment(tree: &SimonTree) -> Result<(), Violation> {
    for k in 0..=tree.depth() {
        let upper = tree.k_blocks(k);
        let lower = tree.k_blocks(k + 1);
        let mut u = upper.iter().peekable();
        for b in &lower {
            while u.peek().is_some_and(|a| a.end < b.start) {
                u.next();
            }
            let a = u.peek();
            ensure!(
                a.is_some_and(|a| a.start <= b.start && b.end <= a.end),
                "{b} on level {} escapes level {k}",
                k + 1
            );
        }
    }
    for a in 0..tree.node_count() as u32 {
        let id = NodeId(a);
        let kids = tree.children(id);
        if kids.is_empty() {
            continue;
        }
        let blk = tree.block(id);
        let mut next = blk.start;
        for c in kids {
            let cb = tree.block(NodeId(c));
            ensure!(cb.start == next, "children of {blk} do not tile it");
            next = cb.end + 1;
        }
        ensure!(
            next == blk.end + 1,
            "children of {blk} do not reach its end"
        );
    }
    Ok(())
}

/// Split levels are final, and on every level `k` the positions of one
/// `k`-block are either all split by level `k` or none is.
pub fn level_monotonicity(c: &Connection) -> Result<(), Violation> {
    let inf = c.levels().inf();
    for (name, lv, tree) in [
        ("s", c.levels().level_s(), c.tree_s()),
        ("t", c.levels().level_t(), c.tree_t()),
    ] {
        ensure!(
            lv.iter().all(|&l| l >= 1 && (l == inf || l <= levels(c))),
            "{name}: level out of range"
        );
        for k in 0..=levels(c) {
            for b in tree.k_blocks(k) {
                if b.end as usize > lv.len() {
                    continue;
                }
                let dead = |i: u32| !c.levels().unsplit_at(lv[i as usize - 1], k);
                let first = dead(b.start);
                ensure!(
                    (b.start..=b.end).all(|i| dead(i) == first),
                    "{name}: block {b} mixed on level {k}"
                );
            }
        }
    }
    Ok(())
}

/// Spectra grow with `k`, and shrink from a suffix to a shorter suffix.
pub fn spectra_monotonicity(w: &Word) -> Result<(), Violation> {
    let n = w.len() as u32;
    let err = |e: Error| Violation(e.to_string());
    for k in 0..n {
        let a = oracle::spectra(w, k).map_err(err)?;
        let b = oracle::spectra(w, k + 1).map_err(err)?;
        ensure!(
            a.is_subset(&b),
            "spectrum {k} not inside spectrum {}",
            k + 1
        );
        let mut prev = a;
        for i in 2..=n {
            let sfx = w.suffix(i);
            let cur = oracle::spectra(&sfx, k.min(sfx.len() as u32)).map_err(err)?;
            ensure!(
                cur.is_subset(&prev),
                "suffix {i} not inside suffix {} at k={k}",
                i - 1
            );
            prev = cur;
        }
    }
    Ok(())
}

/// All connection checks.
pub fn check_connection(c: &Connection) -> Result<(), Violation> {
    non_crossing(c)?;
    s_within_p(c)?;
    level_monotonicity(c)?;
    refinement_containment(c.tree_s())?;
    refinement_containment(c.tree_t())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize_str;

    #[test]
    fn examples_are_clean() {
        for (s, t) in [
            ("acab", "acabba"),
            ("bacbaabada", "bacbaabada"),
            ("ab", "ba"),
            ("aabaa", "aaba"),
        ] {
            let (s, t, _) = normalize_str(s, t);
            check_connection(&Connection::new(&s, &t).unwrap()).unwrap();
            spectra_monotonicity(&s).unwrap();
        }
    }

    #[test]
    fn guard_surfaces_as_violation() {
        let long = Word::from_symbols(vec![1; oracle::GUARD + 1]).unwrap();
        assert!(spectra_monotonicity(&long).is_err());
    }
}
