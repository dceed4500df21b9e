//! Cross-route and oracle-equivalence invariants: the enumeration oracle is
//! the ground truth the counting paths are held to.

use dcomplexity::census::frequency_table;
use dcomplexity::constructor::{labelings, search, SearchMode, SearchRequest};
use dcomplexity::dsubstring::{
    a_profile, complexity_automaton, complexity_substrings, enumerate_d_substrings,
};
use dcomplexity::sequences::{n_kd, saturation};
use dcomplexity::word::{canonicalize, BigCount, Gap, PatternWord, Word};
use proptest::prelude::*;

fn gap(d: usize) -> Gap {
    Gap::new(d).unwrap()
}

/// All restricted-growth patterns of length `k` with at most `max_blocks`
/// distinct symbols.
fn all_patterns(k: usize, max_blocks: usize) -> Vec<PatternWord> {
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<u8>, used: usize, k: usize, max_blocks: usize, out: &mut Vec<PatternWord>) {
        if prefix.len() == k {
            out.push(PatternWord::from_rgs(prefix.clone()).unwrap());
            return;
        }
        for next in 0..=(used.min(max_blocks - 1)) as u8 {
            prefix.push(next);
            rec(prefix, used.max(next as usize + 1), k, max_blocks, out);
            prefix.pop();
        }
    }
    let mut prefix = vec![0u8];
    rec(&mut prefix, 1, k, max_blocks, &mut out);
    out
}

#[test]
fn automaton_equals_oracle_exhaustively() {
    for k in 1..=10usize {
        for p in all_patterns(k, 3) {
            let w = p.to_word();
            for d in [1, 2, 3, k.max(2) - 1] {
                let set = enumerate_d_substrings(&w, gap(d), None).unwrap();
                assert_eq!(
                    complexity_automaton(&w, gap(d)),
                    BigCount::from(set.len()),
                    "k={k}, d={d}, pattern={:?}",
                    p.symbols()
                );
            }
        }
    }
}

#[test]
fn suffix_path_equals_automaton_exhaustively() {
    for k in 1..=10usize {
        for p in all_patterns(k, 3) {
            let w = p.to_word();
            assert_eq!(complexity_substrings(&w), complexity_automaton(&w, gap(1)));
        }
    }
}

#[test]
fn complexity_bounds_hold_exhaustively() {
    for k in 1..=8usize {
        let lo = BigCount::from(k);
        let hi = BigCount::from(k * (k + 1) / 2);
        let cap = saturation(k);
        for p in all_patterns(k, 3) {
            let w = p.to_word();
            let k1 = complexity_substrings(&w);
            assert!(k1 >= lo && k1 <= hi, "K_1 out of bounds for {:?}", p.symbols());
            for d in [2, 3, k.max(2) - 1] {
                let kd = complexity_automaton(&w, gap(d));
                assert!(kd <= cap, "K_d above 2^k - 1 for {:?}", p.symbols());
            }
        }
    }
}

#[test]
fn all_distinct_words_saturate_from_d_k_minus_1() {
    for k in 2..=10usize {
        let w = Word::new((0..k as u8).collect(), k).unwrap();
        let sat = saturation(k);
        for d in k - 1..=k + 2 {
            assert_eq!(complexity_automaton(&w, gap(d)), sat);
        }
        assert_eq!(n_kd(k, gap(k - 1)).unwrap(), sat);
    }
}

#[test]
fn a_profile_sum_is_n_kd() {
    for k in 1..=16usize {
        let w = Word::new((0..k as u8).collect(), k).unwrap();
        for d in 1..=8 {
            let sum: BigCount = a_profile(&w, gap(d)).unwrap().iter().sum();
            assert_eq!(sum, n_kd(k, gap(d)).unwrap(), "k={k}, d={d}");
        }
    }
}

#[test]
fn search_times_labelings_matches_census() {
    for k in 2..=7usize {
        let table = frequency_table(k).unwrap();
        for c in k..=k * (k + 1) / 2 {
            let req = SearchRequest {
                target: BigCount::from(c),
                length: Some(k),
                alphabet_size: k,
                mode: SearchMode::AllCanonical,
            };
            let total: BigCount = search(&req)
                .unwrap()
                .iter()
                .map(|p| labelings(p, k))
                .sum();
            assert_eq!(total, table.frequency(c), "k={k}, C={c}");
        }
    }
}

proptest! {
    #[test]
    fn complexity_is_pattern_invariant(
        symbols in proptest::collection::vec(0u8..4, 1..=10),
        d in 1usize..=4,
    ) {
        let w = Word::new(symbols, 4).unwrap();
        let p = canonicalize(&w).to_word();
        prop_assert_eq!(
            complexity_automaton(&w, gap(d)),
            complexity_automaton(&p, gap(d))
        );
    }

    #[test]
    fn monotone_in_d(symbols in proptest::collection::vec(0u8..3, 1..=9)) {
        let w = Word::new(symbols, 3).unwrap();
        let mut prev = complexity_automaton(&w, gap(1));
        for d in 2..=w.len() + 1 {
            let next = complexity_automaton(&w, gap(d));
            prop_assert!(prev <= next, "K_d decreased at d={}", d);
            if d - 1 >= w.len() - 1 {
                prop_assert_eq!(&prev, &next, "K_d changed past d = k-1");
            }
            prev = next;
        }
    }

    #[test]
    fn right_extension_never_decreases_complexity(
        symbols in proptest::collection::vec(0u8..4, 1..=10),
        extension in proptest::collection::vec(0u8..4, 1..=4),
    ) {
        let w = Word::new(symbols.clone(), 4).unwrap();
        let mut extended = symbols;
        let mut prev = complexity_substrings(&w);
        for s in extension {
            extended.push(s);
            let next = complexity_substrings(&Word::new(extended.clone(), 4).unwrap());
            prop_assert!(next > prev, "append must add at least one substring");
            prev = next;
        }
    }

    #[test]
    fn oracle_equivalence_random(
        symbols in proptest::collection::vec(0u8..4, 1..=12),
        d in 1usize..=5,
    ) {
        let w = Word::new(symbols, 4).unwrap();
        let set = enumerate_d_substrings(&w, gap(d), None).unwrap();
        prop_assert_eq!(complexity_automaton(&w, gap(d)), BigCount::from(set.len()));
    }
}
