//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Expected values are the published reference tables, cross-checked against
//! brute-force enumeration. One widely reprinted value, the k=9 d=4 grid
//! entry, is 464 in the reference table but every independent route (both
//! recurrence routes, the generating-function coefficient, the high-d closed
//! form and its proof-step identity, and brute-force enumeration over nine
//! distinct symbols) gives 462; this suite pins 462.

use dcomplexity::census::{frequency_table, proposition4_check, proposition5_check, threshold_bk};
use dcomplexity::constructor::{
    construct_with_complexity, identity_check, search, Construction, IdentitySpec, SearchMode,
    SearchRequest,
};
use dcomplexity::dsubstring::{
    complexity_automaton, complexity_substrings, enumerate_d_substrings,
};
use dcomplexity::sequences::{n_k2_closed, n_kd, n_kd_high_d, n_kd_via_b, saturation, table1};
use dcomplexity::series::series_n;
use dcomplexity::word::{canonicalize, BigCount, Gap, PatternWord, Word};
use std::time::Instant;

const TABLE1: [[u64; 10]; 10] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [3, 3, 3, 3, 3, 3, 3, 3, 3, 3],
    [6, 7, 7, 7, 7, 7, 7, 7, 7, 7],
    [10, 14, 15, 15, 15, 15, 15, 15, 15, 15],
    [15, 26, 30, 31, 31, 31, 31, 31, 31, 31],
    [21, 46, 58, 62, 63, 63, 63, 63, 63, 63],
    [28, 79, 110, 122, 126, 127, 127, 127, 127, 127],
    [36, 133, 206, 238, 250, 254, 255, 255, 255, 255],
    [45, 221, 383, 462, 494, 506, 510, 511, 511, 511],
    [55, 364, 709, 894, 974, 1006, 1018, 1022, 1023, 1023],
];

const TABLE2: [(usize, &[(usize, u64)]); 5] = [
    (2, &[(2, 2), (3, 2)]),
    (3, &[(3, 3), (4, 0), (5, 18), (6, 6)]),
    (4, &[(4, 4), (5, 0), (6, 0), (7, 36), (8, 48), (9, 144), (10, 24)]),
    (
        5,
        &[
            (5, 5),
            (6, 0),
            (7, 0),
            (8, 0),
            (9, 60),
            (10, 0),
            (11, 200),
            (12, 400),
            (13, 1140),
            (14, 1200),
            (15, 120),
        ],
    ),
    (
        6,
        &[
            (6, 6),
            (7, 0),
            (8, 0),
            (9, 0),
            (10, 0),
            (11, 90),
            (12, 0),
            (13, 0),
            (14, 300),
            (15, 990),
            (16, 270),
            (17, 5400),
            (18, 8280),
            (19, 19800),
            (20, 10800),
            (21, 720),
        ],
    ),
];

fn gap(d: usize) -> Gap {
    Gap::new(d).unwrap()
}

#[test]
fn criterion_01_reference_grid_reproduction() {
    let start = Instant::now();
    let grid = table1(10, 10).unwrap();
    for (k, row) in TABLE1.iter().enumerate() {
        for (d, &expected) in row.iter().enumerate() {
            assert_eq!(
                grid[k][d],
                BigCount::from(expected),
                "grid entry k={}, d={}",
                k + 1,
                d + 1
            );
        }
    }
    assert_eq!(grid[6][2], BigCount::from(110u64));
    assert_eq!(grid[9][3], BigCount::from(894u64));
    assert!(start.elapsed().as_secs() < 1, "grid must render in under 1s");
    println!("criterion 1 (N(k,d) grid, 100 entries): PASS");
}

#[test]
fn criterion_02_frequency_table_reproduction() {
    let start = Instant::now();
    for (k, entries) in TABLE2 {
        let table = frequency_table(k).unwrap();
        for &(c, expected) in entries {
            assert_eq!(
                table.frequency(c),
                BigCount::from(expected),
                "f_{k}({c})"
            );
        }
        // nothing outside the listed support
        assert_eq!(
            table.counts().values().sum::<BigCount>(),
            *table.total(),
        );
    }
    assert!(start.elapsed().as_secs() < 10);
    println!("criterion 2 (frequency tables k=2..6): PASS");
}

#[test]
fn criterion_03_isis_example() {
    let w = Word::from_text("ISIS").unwrap();
    let oracle = enumerate_d_substrings(&w, gap(2), None).unwrap().len();
    assert_eq!(oracle, 11);
    assert_eq!(complexity_automaton(&w, gap(2)), BigCount::from(11u32));
    println!("criterion 3 (ISIS has 2-complexity 11 by both methods): PASS");
}

#[test]
fn criterion_04_multi_route_agreement() {
    let start = Instant::now();
    for d in 1..=12usize {
        let series = series_n(gap(d), 24).unwrap();
        for k in 1..=24usize {
            let reference = n_kd(k, gap(d)).unwrap();
            assert_eq!(n_kd_via_b(k, gap(d)).unwrap(), reference, "b-route k={k} d={d}");
            assert_eq!(
                series.coefficient(k).to_biguint().unwrap(),
                reference,
                "series k={k} d={d}"
            );
            if d == 2 {
                assert_eq!(n_k2_closed(k).unwrap(), reference, "closed form k={k}");
            }
            if k > d && k + 2 >= 2 * (k - d) {
                let offset = k - d;
                assert_eq!(n_kd_high_d(k, offset).unwrap(), reference, "high-d k={k} d={d}");
            }
        }
    }
    assert!(start.elapsed().as_secs() < 5);
    println!("criterion 4 (four routes agree for k<=24, d<=12): PASS");
}

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
fn criterion_05_saturation_and_bounds() {
    for k in 1..=24usize {
        let sat = saturation(k);
        for d in k.max(2) - 1..=k + 1 {
            assert_eq!(n_kd(k, gap(d)).unwrap(), sat, "saturation k={k} d={d}");
        }
    }
    for k in 1..=8usize {
        let lo = BigCount::from(k);
        let hi = BigCount::from(k * (k + 1) / 2);
        let cap = saturation(k);
        for p in all_patterns(k, 3) {
            let w = p.to_word();
            let k1 = complexity_substrings(&w);
            assert!(k1 >= lo && k1 <= hi);
            for d in [2, 3, k.max(2) - 1] {
                assert!(complexity_automaton(&w, gap(d)) <= cap);
            }
        }
    }
    println!("criterion 5 (saturation at 2^k - 1 and complexity bounds): PASS");
}

#[test]
fn criterion_06_oracle_equivalence_random() {
    use rand::{Rng, SeedableRng};
    let start = Instant::now();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xD5);
    for round in 0..500 {
        let k = rng.gen_range(1..=12usize);
        let n = rng.gen_range(1..=4usize);
        let symbols: Vec<u8> = (0..k).map(|_| rng.gen_range(0..n) as u8).collect();
        let w = Word::new(symbols, n).unwrap();
        let d_choices = [1, 2, 3, 5, k.max(2) - 1];
        let d = d_choices[rng.gen_range(0..d_choices.len())];
        let oracle = enumerate_d_substrings(&w, gap(d), None).unwrap().len();
        assert_eq!(
            complexity_automaton(&w, gap(d)),
            BigCount::from(oracle),
            "round {round}"
        );
        assert_eq!(complexity_substrings(&w), complexity_automaton(&w, gap(1)));
    }
    assert!(start.elapsed().as_secs() < 30);
    println!("criterion 6 (500 random words: automaton = oracle, suffix = automaton): PASS");
}

#[test]
fn criterion_07_constructions_and_impossibility() {
    let mut general_impossible = Vec::new();
    let mut binary_impossible = Vec::new();
    for target in 1..=200u64 {
        let t = BigCount::from(target);
        match construct_with_complexity(&t, false).unwrap() {
            Construction::Recipe(r) => {
                assert_eq!(complexity_substrings(r.word()), t, "general C={target}");
                assert!(r.word().distinct_symbols() >= 2);
            }
            Construction::Impossible => general_impossible.push(target),
        }
        match construct_with_complexity(&t, true).unwrap() {
            Construction::Recipe(r) => {
                assert_eq!(complexity_substrings(r.word()), t, "binary C={target}");
                assert_eq!(r.word().distinct_symbols(), 2);
            }
            Construction::Impossible => binary_impossible.push(target),
        }
    }
    assert_eq!(general_impossible, vec![1, 2, 4]);
    assert_eq!(binary_impossible, vec![1, 2, 4, 6, 10, 18, 22]);

    // bounded exhaustive search confirms the exceptional sets
    for (targets, blocks) in [(&[1u64, 2, 4][..], None), (&[6, 10, 18, 22][..], Some(2))] {
        for &target in targets {
            let c = target as usize;
            for k in 2..=c {
                if k * (k + 1) / 2 < c {
                    continue;
                }
                let req = SearchRequest {
                    target: BigCount::from(target),
                    length: Some(k),
                    alphabet_size: blocks.unwrap_or(k),
                    mode: SearchMode::AllCanonical,
                };
                let witnesses = search(&req)
                    .unwrap()
                    .into_iter()
                    .filter(|p| match blocks {
                        Some(b) => p.num_blocks() == b,
                        None => p.num_blocks() >= 2,
                    })
                    .count();
                assert_eq!(witnesses, 0, "C={target}, k={k}");
            }
        }
    }
    println!("criterion 7 (constructions for C<=200, exceptional sets exact): PASS");
}

#[test]
fn criterion_08_frequency_closed_forms_to_k8() {
    let start = Instant::now();
    for k in 2..=8 {
        assert!(proposition4_check(k).unwrap(), "closed forms at k={k}");
        assert!(proposition5_check(k).unwrap(), "zero ranges at k={k}");
    }
    assert!(start.elapsed().as_secs() < 60);
    println!("criterion 8 (frequency closed forms and zero ranges, k=2..8): PASS");
}

#[test]
fn criterion_09_thresholds_and_conjecture() {
    for (k, expected) in [(3usize, 5usize), (4, 7), (5, 11), (6, 14)] {
        let r = threshold_bk(k).unwrap();
        assert_eq!(r.b_k, expected, "b_{k}");
    }
    for k in 5..=10usize {
        let r = threshold_bk(k).unwrap();
        let predicted = r.conjecture_value.expect("decomposition exists for k >= 5");
        if k <= 6 {
            assert!(r.matches, "prediction {predicted} vs computed {}", r.b_k);
        } else if !r.matches {
            // beyond the certified data a mismatch is a finding, not a failure
            println!(
                "criterion 9 finding: predicted b_{k}={predicted}, computed {}",
                r.b_k
            );
        }
        assert_eq!(r.witness_matches, Some(true), "witness word at k={k}");
    }
    println!("criterion 9 (thresholds b_3..b_6 and conjecture report to k=10): PASS");
}

#[test]
fn criterion_10_identity_suite() {
    for k in 2..=12usize {
        let mut specs: Vec<IdentitySpec> = vec![IdentitySpec::Trivial { k }];
        for i in 1..=k / 2 {
            specs.push(IdentitySpec::SingleIntruder { i, k });
        }
        for l in 1..=k {
            specs.push(IdentitySpec::ManyLetters { l, k });
        }
        for n in 1..=k.min(8) {
            specs.push(IdentitySpec::WrapAround { k: k.min(10), n: n.min(k.min(10)) });
        }
        specs.push(IdentitySpec::DistinctFamily { k: k.min(9), n: 3 });
        let p = Word::new((0..k.min(10) as u8).collect(), k.min(10)).unwrap();
        let q = Word::new(vec![0, 1, 1, 0, 2], 3).unwrap();
        specs.push(IdentitySpec::DisjointConcat { p: p.clone(), q });
        specs.push(IdentitySpec::BoundsAny { word: p.clone() });
        specs.push(IdentitySpec::BoundsNontrivial { word: p.clone() });
        specs.push(IdentitySpec::FreshLastLetter { word: p });
        for spec in &specs {
            for check in identity_check(spec).unwrap() {
                assert!(
                    check.holds,
                    "identity {} at k={k}: expected {:?}, measured {}",
                    check.label, check.expected, check.measured
                );
            }
        }
    }
    // pattern invariance sanity alongside the identities
    let w = Word::from_text("cacbc").unwrap();
    assert_eq!(
        complexity_substrings(&w),
        complexity_substrings(&canonicalize(&w).to_word())
    );
    println!("criterion 10 (identity suite a)-i) for k<=12): PASS");
}
