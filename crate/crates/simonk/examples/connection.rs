//! How the blocks of two words pair up, and at which level each position
//! loses its congruent partner.
//!
//! cargo run --example connection -- acab acabba

use simonk::{normalize_str, Connection};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (s, t) = match args.as_slice() {
        [s, t] => (s.as_str(), t.as_str()),
        _ => ("acab", "acabba"),
    };
    let (ws, wt, _) = normalize_str(s, t);
    let c = Connection::new(&ws, &wt).expect("non-empty words");
    let lv = c.levels();
    let show = |levels: &[u32]| -> Vec<String> {
        levels
            .iter()
            .map(|&l| {
                if l == lv.inf() {
                    "-".into()
                } else {
                    l.to_string()
                }
            })
            .collect()
    };
    // position i of s: first level at which s[i:] has no congruent partner
    println!("split level s: {}", show(lv.level_s()).join(" "));
    println!("split level t: {}", show(lv.level_t()).join(" "));
    // blocks cover the end marker too: position |w| + 1 is the empty suffix
    let depth = c.tree_s().depth().max(c.tree_t().depth());
    for k in 1..=depth {
        let pairs: Vec<String> = c
            .s_connected_pairs(k)
            .iter()
            .map(|(a, b)| format!("{a}~{b}"))
            .collect();
        println!("level {k}: {}", pairs.join(" "));
    }
    println!("{:?}", c.stats());
}
