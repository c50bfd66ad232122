mod common;

use common::{check_s_connection, OracleTable};
use simonk::{max_sim_k, oracle, solve, MaxK, Side, SimonTree};

#[test]
fn max_k_small_ternary() {
    let table = OracleTable::new(3, 4);
    for s in &table.words {
        for t in &table.words {
            assert_eq!(
                max_sim_k(s, t),
                table.max_k(s.symbols(), t.symbols()),
                "s={:?} t={:?}",
                s.symbols(),
                t.symbols()
            );
        }
    }
}

#[test]
fn s_connection_small_binary() {
    let table = OracleTable::new(2, 5);
    for s in &table.words {
        for t in &table.words {
            check_s_connection(&table, s, t).unwrap();
        }
    }
}

#[test]
fn distinguishers_small_ternary() {
    let table = OracleTable::new(3, 4);
    for s in &table.words {
        for t in &table.words {
            let r = solve(s, t);
            let Some(d) = r.distinguisher else {
                assert_eq!(r.k, MaxK::Equal);
                continue;
            };
            let best = oracle::oracle_min_distinguisher(s, t).unwrap().unwrap();
            assert_eq!(d.word.len(), best.len());
            let (inside, outside) = if d.side == Side::S { (s, t) } else { (t, s) };
            assert!(inside.contains_subsequence(&d.word) && !outside.contains_subsequence(&d.word));
        }
    }
}

#[test]
fn tree_blocks_small() {
    for w in simonk::workload::all_words(3, 5) {
        let tree = SimonTree::build(&w).unwrap();
        for k in 0..=w.len() as u32 {
            assert_eq!(
                tree.k_blocks(k),
                oracle::oracle_k_blocks(&w, k).unwrap(),
                "w={:?} k={k}",
                w.symbols()
            );
        }
    }
}
