//! Simon-Tree of a word: its k-blocks level by level, and DOT output.
//!
//! cargo run --example simon_tree -- bacbaabada > tree.dot

use simonk::tree::export_dot;
use simonk::{normalize_str, SimonTree};

fn main() {
    let w = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "bacbaabada".into());
    let (word, _, map) = normalize_str(&w, "");
    let tree = SimonTree::build(&word).expect("non-empty word");
    for k in 0..=tree.depth() {
        let blocks: Vec<String> = tree
            .k_blocks(k)
            .iter()
            .map(|b| {
                w.chars()
                    .skip(b.start as usize - 1)
                    .take(b.len() as usize)
                    .collect()
            })
            .collect();
        eprintln!("level {k}: {}", blocks.join(" | "));
    }
    let t = tree.transform();
    eprintln!(
        "{} nodes, {} after duplicating leaves",
        tree.node_count(),
        t.node_count()
    );
    print!("{}", export_dot(&tree, &word, &map));
}
