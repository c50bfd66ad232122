//! A shortest word that is a subsequence of one input but not the other.
//!
//! cargo run --example distinguish -- abcabc acbacb

use simonk::{normalize_str, solve, Side};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (s, t) = match args.as_slice() {
        [s, t] => (s.as_str(), t.as_str()),
        _ => ("abcabc", "acbacb"),
    };
    let (ws, wt, map) = normalize_str(s, t);
    let res = solve(&ws, &wt);
    println!("max k = {}", res.k);
    match res.distinguisher {
        None => println!("the words are equal; nothing distinguishes them"),
        Some(d) => {
            let word: String = map.decode(&d.word).into_iter().collect();
            let (inside, outside) = if d.side == Side::S { (s, t) } else { (t, s) };
            println!(
                "{word:?} (length {}) embeds in {inside:?} but not in {outside:?}",
                word.len()
            );
        }
    }
}
