//! Largest congruence level of two words, and the decision for fixed k.
//!
//! cargo run --example maxk -- acab acabba

use simonk::{max_sim_k, normalize_str, sim_k, MaxK};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [s, t] => vec![(s.clone(), t.clone())],
        _ => [
            ("acab", "acabba"),
            ("abcabc", "acbacb"),
            ("aab", "aab"),
            ("", "b"),
        ]
        .iter()
        .map(|&(s, t)| (s.to_string(), t.to_string()))
        .collect(),
    };
    for (s, t) in pairs {
        let (ws, wt, _) = normalize_str(&s, &t);
        let k = max_sim_k(&ws, &wt);
        print!("{s:?} vs {t:?}: max k = {k}");
        if let MaxK::Finite(m) = k {
            // the answer is a threshold: congruent up to m, never above
            assert!(sim_k(&ws, &wt, m) && !sim_k(&ws, &wt, m + 1));
            print!(" (~{m} holds, ~{} fails)", m + 1);
        }
        println!();
    }
}
