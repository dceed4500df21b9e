//! Counting distinct d-substrings: a brute-force enumeration oracle, a
//! determinized position-automaton counter for arbitrary words, and a
//! suffix-automaton fast path for d = 1.

use crate::error::{Error, Result};
use crate::word::{BigCount, Gap, Word};
use num_traits::One;
use std::collections::{BTreeSet, HashMap};

/// Enumerates the exact set of distinct non-empty d-substrings by depth-first
/// traversal of index chains with gaps in `[1, d]`.
///
/// Exponential in the word length; `max_count` bounds the set size and
/// signals the caller to switch to the counting path when exceeded.
pub fn enumerate_d_substrings(
    w: &Word,
    d: Gap,
    max_count: Option<usize>,
) -> Result<BTreeSet<Vec<u8>>> {
    let syms = w.symbols();
    let mut out: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut current: Vec<u8> = Vec::with_capacity(syms.len());

    fn dfs(
        syms: &[u8],
        d: usize,
        start: usize,
        current: &mut Vec<u8>,
        out: &mut BTreeSet<Vec<u8>>,
        max_count: Option<usize>,
    ) -> Result<()> {
        current.push(syms[start]);
        out.insert(current.clone());
        if let Some(cap) = max_count {
            if out.len() > cap {
                return Err(Error::CapacityExceeded(format!(
                    "more than {cap} distinct d-substrings"
                )));
            }
        }
        for next in start + 1..(start + d + 1).min(syms.len()) {
            dfs(syms, d, next, current, out, max_count)?;
        }
        current.pop();
        Ok(())
    }

    for start in 0..syms.len() {
        dfs(syms, d.get(), start, &mut current, &mut out, max_count)?;
    }
    Ok(out)
}

/// Exact `K_d(w)` by subset construction over the position automaton.
///
/// The nondeterministic automaton has one state per word position; the first
/// chosen index is unconstrained and from position `i` one may step to any
/// `j` with `1 <= j - i <= d`. Determinizing by (symbol, position-set) yields
/// an acyclic graph because the minimum position strictly increases along any
/// transition, so `K_d` is the number of non-empty paths from the start,
/// computed by memoized summation.
pub fn complexity_automaton(w: &Word, d: Gap) -> BigCount {
    let syms = w.symbols();
    let d = d.get();
    let mut memo: HashMap<Vec<u32>, BigCount> = HashMap::new();

    // paths(state) = sum over symbols of (1 + paths(successor))
    fn paths(
        state: &[u32],
        syms: &[u8],
        d: usize,
        memo: &mut HashMap<Vec<u32>, BigCount>,
    ) -> BigCount {
        if let Some(v) = memo.get(state) {
            return v.clone();
        }
        let mut successors: HashMap<u8, BTreeSet<u32>> = HashMap::new();
        for &i in state {
            let i = i as usize;
            for j in i + 1..(i + d + 1).min(syms.len()) {
                successors.entry(syms[j]).or_default().insert(j as u32);
            }
        }
        let mut total = BigCount::default();
        for (_, next) in successors {
            let next: Vec<u32> = next.into_iter().collect();
            total += BigCount::one() + paths(&next, syms, d, memo);
        }
        memo.insert(state.to_vec(), total.clone());
        total
    }

    let mut start_sets: HashMap<u8, BTreeSet<u32>> = HashMap::new();
    for (i, &s) in syms.iter().enumerate() {
        start_sets.entry(s).or_default().insert(i as u32);
    }
    let mut total = BigCount::default();
    for (_, set) in start_sets {
        let set: Vec<u32> = set.into_iter().collect();
        total += BigCount::one() + paths(&set, syms, d, &mut memo);
    }
    total
}

/// Suffix automaton over small symbol alphabets, used to count distinct
/// contiguous substrings in near-linear time.
struct SuffixAutomaton {
    // (len, link, transitions)
    len: Vec<usize>,
    link: Vec<isize>,
    next: Vec<HashMap<u8, usize>>,
    last: usize,
}

impl SuffixAutomaton {
    fn new() -> Self {
        SuffixAutomaton {
            len: vec![0],
            link: vec![-1],
            next: vec![HashMap::new()],
            last: 0,
        }
    }

    fn add_state(&mut self, len: usize, link: isize, next: HashMap<u8, usize>) -> usize {
        self.len.push(len);
        self.link.push(link);
        self.next.push(next);
        self.len.len() - 1
    }

    fn extend(&mut self, c: u8) {
        let cur = self.add_state(self.len[self.last] + 1, -1, HashMap::new());
        let mut p = self.last as isize;
        while p >= 0 && !self.next[p as usize].contains_key(&c) {
            self.next[p as usize].insert(c, cur);
            p = self.link[p as usize];
        }
        if p < 0 {
            self.link[cur] = 0;
        } else {
            let q = self.next[p as usize][&c];
            if self.len[p as usize] + 1 == self.len[q] {
                self.link[cur] = q as isize;
            } else {
                let clone = self.add_state(
                    self.len[p as usize] + 1,
                    self.link[q],
                    self.next[q].clone(),
                );
                while p >= 0 && self.next[p as usize].get(&c) == Some(&q) {
                    self.next[p as usize].insert(c, clone);
                    p = self.link[p as usize];
                }
                self.link[q] = clone as isize;
                self.link[cur] = clone as isize;
            }
        }
        self.last = cur;
    }

    /// Distinct non-empty substrings = sum over non-root states of
    /// len(v) - len(link(v)).
    fn distinct_substrings(&self) -> u128 {
        (1..self.len.len())
            .map(|v| (self.len[v] - self.len[self.link[v] as usize]) as u128)
            .sum()
    }
}

/// `K_1(w)`: the number of distinct non-empty contiguous substrings,
/// computed via a suffix automaton rather than enumeration.
pub fn complexity_substrings(w: &Word) -> BigCount {
    let mut sa = SuffixAutomaton::new();
    for &c in w.symbols() {
        sa.extend(c);
    }
    BigCount::from(sa.distinct_substrings())
}

/// The vector `a_1..a_k` of d-substring counts terminating at each position,
/// for words of pairwise-distinct symbols. Each entry is one plus the sum of
/// the previous `d` entries; the total is `N(k, d)`.
pub fn a_profile(w: &Word, d: Gap) -> Result<Vec<BigCount>> {
    if !w.has_all_distinct_symbols() {
        return Err(Error::NotAllDistinct);
    }
    let d = d.get();
    let k = w.len();
    let mut a: Vec<BigCount> = Vec::with_capacity(k);
    for i in 0..k {
        let mut v = BigCount::one();
        for j in i.saturating_sub(d)..i {
            v += a[j].clone();
        }
        a.push(v);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::canonicalize;

    fn word(text: &str) -> Word {
        Word::from_text(text).unwrap()
    }

    fn gap(d: usize) -> Gap {
        Gap::new(d).unwrap()
    }

    #[test]
    fn isis_enumeration_matches_paper_example() {
        let set = enumerate_d_substrings(&word("ISIS"), gap(2), None).unwrap();
        assert_eq!(set.len(), 11);
        // I S IS II SI SS ISI ISS IIS SIS ISIS, as symbol ids with I=0, S=1
        let expected: BTreeSet<Vec<u8>> = [
            vec![0],
            vec![1],
            vec![0, 1],
            vec![0, 0],
            vec![1, 0],
            vec![1, 1],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![0, 1, 0, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(
            enumerate_d_substrings(&word("aa"), gap(1), None).unwrap().len(),
            2
        );
        assert_eq!(
            enumerate_d_substrings(&word("abc"), gap(2), None).unwrap().len(),
            7
        );
    }

    #[test]
    fn enumeration_capacity_bound() {
        let err = enumerate_d_substrings(&word("abcdefgh"), gap(7), Some(10));
        assert!(matches!(err, Err(Error::CapacityExceeded(_))));
    }

    #[test]
    fn automaton_matches_paper_values() {
        assert_eq!(complexity_automaton(&word("ISIS"), gap(2)), BigCount::from(11u32));
        // k distinct symbols with d = k-1 gives 2^k - 1
        assert_eq!(
            complexity_automaton(&word("abcde"), gap(4)),
            BigCount::from(31u32)
        );
    }

    #[test]
    fn automaton_agrees_with_oracle_on_random_words() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        for _ in 0..200 {
            let k = rng.gen_range(1..=12);
            let n = rng.gen_range(1..=4);
            let symbols: Vec<u8> = (0..k).map(|_| rng.gen_range(0..n) as u8).collect();
            let w = canonicalize(&Word::new(symbols, n).unwrap()).to_word();
            let d = gap(rng.gen_range(1..=5));
            let oracle = enumerate_d_substrings(&w, d, None).unwrap().len();
            assert_eq!(complexity_automaton(&w, d), BigCount::from(oracle));
        }
    }

    #[test]
    fn substring_complexity_identities() {
        // trivial string a^k has complexity k
        assert_eq!(complexity_substrings(&word("aaaaaaa")), BigCount::from(7u32));
        // a^{i-1} b a^{k-i} with i=1, k=4 has complexity (i+1)k - i^2 = 7
        assert_eq!(complexity_substrings(&word("baaa")), BigCount::from(7u32));
        // all-distinct symbols: k(k+1)/2
        assert_eq!(complexity_substrings(&word("abcdef")), BigCount::from(21u32));
    }

    #[test]
    fn suffix_path_equals_automaton_at_d_one() {
        for text in ["a", "ab", "aab", "abab", "mississippi", "banana"] {
            let w = word(text);
            assert_eq!(complexity_substrings(&w), complexity_automaton(&w, gap(1)));
        }
    }

    #[test]
    fn a_profile_matches_recurrence() {
        let to_u32 = |v: Vec<BigCount>| -> Vec<u32> {
            v.into_iter().map(|x| u32::try_from(x).unwrap()).collect()
        };
        let p = a_profile(&word("abcd"), gap(2)).unwrap();
        assert_eq!(to_u32(p), vec![1, 2, 4, 7]);

        let p = a_profile(&word("abc"), gap(1)).unwrap();
        assert_eq!(to_u32(p), vec![1, 2, 3]);

        let p = a_profile(&word("abcde"), gap(4)).unwrap();
        assert_eq!(to_u32(p), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn a_profile_rejects_repeats() {
        assert_eq!(a_profile(&word("aba"), gap(2)), Err(Error::NotAllDistinct));
    }
}
