//! Times the full pipeline on near-identical random pairs of growing size.
//!
//! cargo run --release --example scaling -- 100000 1000000 10000000

use std::time::Instant;

use simonk::workload::{near_identical_pair, rng};
use simonk::{max_sim_k, MaxK};

fn main() {
    let sizes: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let sizes = if sizes.is_empty() {
        vec![100_000, 1_000_000]
    } else {
        sizes
    };
    println!("{:>10} {:>10} {:>12} {:>8}", "n", "ms", "ns/symbol", "k");
    for n in sizes {
        let (s, t) = near_identical_pair(&mut rng(n as u64), n, 26, 8);
        let start = Instant::now();
        let k: MaxK = max_sim_k(&s, &t);
        let secs = start.elapsed().as_secs_f64();
        println!(
            "{n:>10} {:>10.1} {:>12.1} {k:>8}",
            secs * 1e3,
            secs * 1e9 / n as f64
        );
    }
}
