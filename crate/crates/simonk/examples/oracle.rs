//! Brute-force cross-check on every pair of short binary words.

use simonk::oracle::{oracle_max_k, oracle_min_distinguisher, spectra};
use simonk::workload::all_words;
use simonk::{normalize_str, solve};

fn main() {
    let (s, t, _) = normalize_str("acab", "acabba");
    for k in 1..=2 {
        let (a, b) = (spectra(&s, k).unwrap(), spectra(&t, k).unwrap());
        println!(
            "k={k}: {} vs {} subsequences, equal: {}",
            a.len(),
            b.len(),
            a == b
        );
    }

    let words = all_words(2, 6);
    let mut checked = 0;
    for s in &words {
        for t in &words {
            let fast = solve(s, t);
            assert_eq!(fast.k, oracle_max_k(s, t).unwrap());
            let shortest = oracle_min_distinguisher(s, t).unwrap().map(|u| u.len());
            assert_eq!(fast.distinguisher.map(|d| d.word.len()), shortest);
            checked += 1;
        }
    }
    println!("{checked} pairs of binary words up to length 6 agree with brute force");
}
