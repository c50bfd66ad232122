use proptest::prelude::*;
use simonk::invariants::check_connection;
use simonk::oracle::{oracle_max_k, oracle_min_distinguisher};
use simonk::{max_sim_k, sim_k, solve, Connection, MaxK, Side, Word};

fn word(sigma: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=sigma, 0..=max_len).prop_map(move |v| Word::new(v, sigma).unwrap())
}

fn pair(max_len: usize) -> impl Strategy<Value = (Word, Word)> {
    (1u32..=4).prop_flat_map(move |sigma| (word(sigma, max_len), word(sigma, max_len)))
}

fn cat(a: &Word, b: &[u32]) -> Word {
    Word::from_symbols(a.symbols().iter().chain(b).copied().collect()).unwrap()
}

/// A subsequence of `w`: positions whose mask bit is set are dropped.
fn thin(w: &Word, mask: &[bool]) -> Word {
    let kept = w
        .symbols()
        .iter()
        .zip(mask.iter().chain(std::iter::repeat(&false)))
        .filter(|p| !p.1)
        .map(|p| *p.0);
    Word::new(kept.collect(), w.sigma()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn symmetric((s, t) in pair(60)) {
        prop_assert_eq!(max_sim_k(&s, &t), max_sim_k(&t, &s));
    }

    #[test]
    fn equal_iff_same_word((s, t) in pair(30)) {
        prop_assert_eq!(max_sim_k(&s, &t) == MaxK::Equal, s == t);
    }

    #[test]
    fn bounded_by_shorter_length((s, t) in pair(60)) {
        if let MaxK::Finite(k) = max_sim_k(&s, &t) {
            prop_assert!(k as usize <= s.len().min(t.len()));
        }
    }

    #[test]
    fn decision_agrees_with_max((s, t) in pair(40), k in 0u32..12) {
        let want = match max_sim_k(&s, &t) {
            MaxK::Equal => true,
            MaxK::Finite(m) => k <= m,
        };
        prop_assert_eq!(sim_k(&s, &t, k), want);
    }

    #[test]
    fn distinguisher_has_length_k_plus_one((s, t) in pair(80)) {
        let r = solve(&s, &t);
        match (r.k, r.distinguisher) {
            (MaxK::Equal, None) => {}
            (MaxK::Finite(k), Some(d)) => {
                prop_assert_eq!(d.word.len() as u32, k + 1);
                let (inside, outside) = if d.side == Side::S { (&s, &t) } else { (&t, &s) };
                prop_assert!(inside.contains_subsequence(&d.word));
                prop_assert!(!outside.contains_subsequence(&d.word));
            }
            other => prop_assert!(false, "inconsistent result {:?}", other),
        }
    }

    /// `u ≤ v ≤ w` as subsequences and `u ~k w` force `v` into the class.
    #[test]
    fn sandwich(w in word(3, 40), m1 in prop::collection::vec(any::<bool>(), 40), m2 in prop::collection::vec(prop::bool::weighted(0.2), 40)) {
        let v = thin(&w, &m2);
        let u = thin(&v, &m1);
        let outer = max_sim_k(&u, &w);
        prop_assert!(max_sim_k(&u, &v) >= outer);
        prop_assert!(max_sim_k(&v, &w) >= outer);
    }

    /// The congruence is compatible with concatenation on both sides.
    #[test]
    fn congruence_survives_extension((s, t) in pair(40), x in prop::collection::vec(1u32..=4, 1..4)) {
        let base = max_sim_k(&s, &t);
        prop_assert!(max_sim_k(&cat(&s, &x), &cat(&t, &x)) >= base);
        let pre = Word::from_symbols(x.clone()).unwrap();
        prop_assert!(max_sim_k(&cat(&pre, s.symbols()), &cat(&pre, t.symbols())) >= base);
    }

    #[test]
    fn matches_oracle((s, t) in pair(12)) {
        prop_assert_eq!(max_sim_k(&s, &t), oracle_max_k(&s, &t).unwrap());
        let len = solve(&s, &t).distinguisher.map(|d| d.word.len());
        prop_assert_eq!(len, oracle_min_distinguisher(&s, &t).unwrap().map(|u| u.len()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn invariants_hold_on_longer_words((s, t) in pair(120)) {
        prop_assume!(!s.is_empty() && !t.is_empty());
        let c = Connection::new(&s, &t).unwrap();
        if let Err(v) = check_connection(&c) {
            prop_assert!(false, "{}", v);
        }
    }
}
