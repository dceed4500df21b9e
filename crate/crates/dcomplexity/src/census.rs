//! Frequency analysis of 1-complexity over all k-length words on a k-letter
//! alphabet. The census enumerates restricted-growth patterns (complexity
//! depends only on the equality pattern) and weights each pattern with m
//! blocks by the `k!/(k-m)!` injective labelings, which is what makes k up
//! to 12 tractable: Bell-number growth vastly undercuts `k^k`.

use crate::dsubstring::complexity_substrings;
use crate::error::{Error, Result};
use crate::word::{BigCount, Word};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Practical ceiling for the census; Bell(12) is about 4.2 million patterns.
pub const MAX_CENSUS_K: usize = 12;

const CACHE_FORMAT_VERSION: u32 = 1;

/// Exact complexity frequencies `f_k(C)` for all k-length words over a
/// k-letter alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    k: usize,
    counts: BTreeMap<usize, BigCount>,
    total: BigCount,
}

impl FrequencyTable {
    pub fn k(&self) -> usize {
        self.k
    }

    /// `f_k(C)`; zero for any complexity not attained.
    pub fn frequency(&self, c: usize) -> BigCount {
        self.counts.get(&c).cloned().unwrap_or_else(BigCount::zero)
    }

    /// Nonzero entries, ascending by complexity.
    pub fn counts(&self) -> &BTreeMap<usize, BigCount> {
        &self.counts
    }

    /// Sum over all complexities; always `k^k`.
    pub fn total(&self) -> &BigCount {
        &self.total
    }

    pub fn max_possible(&self) -> usize {
        self.k * (self.k + 1) / 2
    }
}

fn falling_factorial(n: usize, m: usize) -> BigCount {
    let mut v = BigCount::one();
    for j in 0..m {
        v *= BigCount::from(n - j);
    }
    v
}

/// Extends a restricted-growth prefix to all patterns of length `k`,
/// accumulating pattern complexities weighted by labeling counts.
fn census_subtree(
    prefix: &mut Vec<u8>,
    used: usize,
    k: usize,
    acc: &mut BTreeMap<usize, BigCount>,
) {
    if prefix.len() == k {
        let w = Word::new(prefix.clone(), used).expect("RGS prefix is a valid word");
        let c = complexity_substrings(&w).to_usize().expect("K <= k(k+1)/2");
        *acc.entry(c).or_default() += falling_factorial(k, used);
        return;
    }
    for next in 0..=(used as u8).min(k as u8 - 1) {
        prefix.push(next);
        census_subtree(prefix, used.max(next as usize + 1), k, acc);
        prefix.pop();
    }
}

/// All restricted-growth prefixes of the given length, with their block
/// counts; used to partition the census across workers.
fn rgs_prefixes(len: usize, k: usize) -> Vec<(Vec<u8>, usize)> {
    let mut out = Vec::new();
    let mut prefix = vec![0u8];
    fn rec(prefix: &mut Vec<u8>, used: usize, len: usize, k: usize, out: &mut Vec<(Vec<u8>, usize)>) {
        if prefix.len() == len {
            out.push((prefix.clone(), used));
            return;
        }
        for next in 0..=(used as u8).min(k as u8 - 1) {
            prefix.push(next);
            rec(prefix, used.max(next as usize + 1), len, k, out);
            prefix.pop();
        }
    }
    rec(&mut prefix, 1, len, k, &mut out);
    out
}

/// Exact `f_k(C)` for every attainable complexity.
pub fn frequency_table(k: usize) -> Result<FrequencyTable> {
    if k == 0 || k > MAX_CENSUS_K {
        return Err(Error::CapacityExceeded(format!(
            "census supports 1 <= k <= {MAX_CENSUS_K}, got {k}"
        )));
    }
    let prefix_len = k.min(5);
    let prefixes = rgs_prefixes(prefix_len, k);
    let counts = prefixes
        .into_par_iter()
        .map(|(prefix, used)| {
            let mut local = BTreeMap::new();
            let mut prefix = prefix;
            census_subtree(&mut prefix, used, k, &mut local);
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (c, v) in b {
                *a.entry(c).or_default() += v;
            }
            a
        });
    let total: BigCount = counts.values().sum();
    let expected = BigCount::from(k).pow(k as u32);
    if total != expected {
        return Err(Error::InternalInvariantBroken(format!(
            "census mass {total} differs from k^k = {expected}"
        )));
    }
    Ok(FrequencyTable { k, counts, total })
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    k: usize,
    total: String,
    counts: BTreeMap<usize, String>,
    checksum: String,
}

fn cache_checksum(k: usize, total: &str, counts: &BTreeMap<usize, String>) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("v{CACHE_FORMAT_VERSION}:{k}:{total}"));
    for (c, v) in counts {
        hasher.update(format!(":{c}={v}"));
    }
    format!("{:x}", hasher.finalize())
}

fn cache_path(dir: &Path, k: usize) -> PathBuf {
    dir.join(format!("census_v{CACHE_FORMAT_VERSION}_k{k}.json"))
}

fn load_cache(dir: &Path, k: usize) -> Option<FrequencyTable> {
    let text = std::fs::read_to_string(cache_path(dir, k)).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.format_version != CACHE_FORMAT_VERSION || file.k != k {
        return None;
    }
    if cache_checksum(file.k, &file.total, &file.counts) != file.checksum {
        return None;
    }
    let mut counts = BTreeMap::new();
    for (c, v) in file.counts {
        counts.insert(c, v.parse().ok()?);
    }
    let total: BigCount = file.total.parse().ok()?;
    Some(FrequencyTable { k, counts, total })
}

fn store_cache(dir: &Path, table: &FrequencyTable) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let counts: BTreeMap<usize, String> = table
        .counts
        .iter()
        .map(|(&c, v)| (c, v.to_string()))
        .collect();
    let total = table.total.to_string();
    let file = CacheFile {
        format_version: CACHE_FORMAT_VERSION,
        k: table.k,
        checksum: cache_checksum(table.k, &total, &counts),
        total,
        counts,
    };
    let text = serde_json::to_string_pretty(&file).map_err(|e| Error::Cache(e.to_string()))?;
    std::fs::write(cache_path(dir, table.k), text).map_err(|e| Error::Cache(e.to_string()))
}

/// Like [`frequency_table`] but backed by an on-disk cache; a corrupt or
/// stale cache file is silently recomputed.
pub fn frequency_table_cached(k: usize, cache_dir: &Path) -> Result<FrequencyTable> {
    if let Some(table) = load_cache(cache_dir, k) {
        return Ok(table);
    }
    let table = frequency_table(k)?;
    store_cache(cache_dir, &table)?;
    Ok(table)
}

/// Checks the five closed forms for `f_k` at the edges of its support:
/// `f_k(C) = 0` outside `[k, k(k+1)/2]`, `f_k(k) = k`,
/// `f_k(2k-1) = 3k(k-1)`, `f_k(max - 1) = k(k-1)k!/2` and `f_k(max) = k!`.
pub fn proposition4_check(k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::DomainError("needs k >= 2".into()));
    }
    let t = frequency_table(k)?;
    let max = t.max_possible();
    let in_support = t.counts.keys().all(|&c| c >= k && c <= max);
    let at_k = t.frequency(k) == BigCount::from(k);
    // at k = 2 the complexity 2k - 1 coincides with the maximum, where the
    // k! form applies instead (Table 2 gives f_2(3) = 2, not 3k(k-1) = 6)
    let at_2k1 = k < 3 || t.frequency(2 * k - 1) == BigCount::from(3 * k * (k - 1));
    let factorial = falling_factorial(k, k);
    let at_max = t.frequency(max) == factorial;
    let at_max_minus_1 =
        t.frequency(max - 1) == BigCount::from(k * (k - 1)) * &factorial / BigCount::from(2u32);
    Ok(in_support && at_k && at_2k1 && at_max && at_max_minus_1)
}

/// Checks the two zero ranges: `f_k(C) = 0` for `C` in `[k+1, 2k-2]` and in
/// `[2k, 3k-5]` (the second only when non-empty, i.e. k >= 5).
pub fn proposition5_check(k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::DomainError("needs k >= 2".into()));
    }
    let t = frequency_table(k)?;
    let first = (k + 1..=2 * k - 2).all(|c| t.frequency(c).is_zero());
    let second = if 3 * k >= 2 * k + 5 {
        (2 * k..=3 * k - 5).all(|c| t.frequency(c).is_zero())
    } else {
        true
    };
    Ok(first && second)
}

/// Computed `b_k` with the conjectured prediction, when one exists.
#[derive(Debug, Clone)]
pub struct ThresholdReport {
    pub k: usize,
    /// Least C with `f_k` nonzero everywhere on `[C, k(k+1)/2]`.
    pub b_k: usize,
    /// Predicted `b_k` from the `(l, i)` decomposition of k, when k >= 5.
    pub conjecture_value: Option<usize>,
    /// Whether prediction and computation agree (true when no prediction).
    pub matches: bool,
    /// Whether `K(a b^{k-l} a b^{l-2}) = b_k`, checked for k >= 5.
    pub witness_matches: Option<bool>,
}

/// Decomposes `k = l(l+1)/2 + 2 + i` with `l >= 2`, `0 <= i <= l`.
fn conjecture_decomposition(k: usize) -> Option<(usize, usize)> {
    (2..=k).find_map(|l| {
        let base = l * (l + 1) / 2 + 2;
        if k >= base && k <= base + l {
            Some((l, k - base))
        } else {
            None
        }
    })
}

/// Computes `b_k` from the census and compares it with the conjectured
/// closed form `l(l^2-1)/2 + 3l + 2 + i(l+1)`.
pub fn threshold_bk(k: usize) -> Result<ThresholdReport> {
    let t = frequency_table(k)?;
    let max = t.max_possible();
    // largest zero in [k, max]; b_k is one past it
    let b_k = (k..=max)
        .rev()
        .find(|&c| t.frequency(c).is_zero())
        .map(|z| z + 1)
        .unwrap_or(k);
    let decomposition = conjecture_decomposition(k);
    let conjecture_value =
        decomposition.map(|(l, i)| l * (l * l - 1) / 2 + 3 * l + 2 + i * (l + 1));
    let matches = conjecture_value.map_or(true, |p| p == b_k);
    let witness_matches = decomposition.filter(|_| k >= 5).map(|(l, _)| {
        let symbols: Vec<u8> = std::iter::once(0u8)
            .chain(std::iter::repeat(1).take(k - l))
            .chain(std::iter::once(0))
            .chain(std::iter::repeat(1).take(l - 2))
            .collect();
        let w = Word::new(symbols, 2).expect("witness word is valid");
        complexity_substrings(&w) == BigCount::from(b_k)
    });
    Ok(ThresholdReport {
        k,
        b_k,
        conjecture_value,
        matches,
        witness_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn freq_u64(t: &FrequencyTable) -> BTreeMap<usize, u64> {
        t.counts()
            .iter()
            .map(|(&c, v)| (c, v.to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn table2_length_4() {
        let t = frequency_table(4).unwrap();
        let expected: BTreeMap<usize, u64> =
            [(4, 4), (7, 36), (8, 48), (9, 144), (10, 24)].into_iter().collect();
        assert_eq!(freq_u64(&t), expected);
        assert_eq!(t.total(), &BigCount::from(256u32));
    }

    #[test]
    fn table2_length_6_spot_checks() {
        let t = frequency_table(6).unwrap();
        assert_eq!(t.frequency(11), BigCount::from(90u32));
        assert_eq!(t.frequency(21), BigCount::from(720u32));
        assert_eq!(t.frequency(17), BigCount::from(5400u32));
    }

    #[test]
    fn length_1_census() {
        let t = frequency_table(1).unwrap();
        assert_eq!(freq_u64(&t), [(1, 1)].into_iter().collect());
    }

    #[test]
    fn rejects_out_of_range_k() {
        assert!(matches!(frequency_table(0), Err(Error::CapacityExceeded(_))));
        assert!(matches!(
            frequency_table(MAX_CENSUS_K + 1),
            Err(Error::CapacityExceeded(_))
        ));
    }

    #[test]
    fn pattern_weighting_matches_direct_enumeration() {
        // enumerate all k^k labeled words directly for small k
        for k in 1..=5usize {
            let mut direct: BTreeMap<usize, BigCount> = BTreeMap::new();
            let total = k.pow(k as u32);
            for code in 0..total {
                let mut symbols = Vec::with_capacity(k);
                let mut c = code;
                for _ in 0..k {
                    symbols.push((c % k) as u8);
                    c /= k;
                }
                let w = Word::new(symbols, k).unwrap();
                let kc = complexity_substrings(&w).to_usize().unwrap();
                *direct.entry(kc).or_default() += BigCount::one();
            }
            let t = frequency_table(k).unwrap();
            assert_eq!(&direct, t.counts(), "k={k}");
        }
    }

    #[test]
    fn propositions_hold_small_k() {
        for k in 2..=7 {
            assert!(proposition4_check(k).unwrap(), "prop 4 at k={k}");
            assert!(proposition5_check(k).unwrap(), "prop 5 at k={k}");
        }
    }

    #[test]
    fn thresholds_match_paper() {
        for (k, expected) in [(3, 5), (4, 7), (5, 11), (6, 14)] {
            let r = threshold_bk(k).unwrap();
            assert_eq!(r.b_k, expected, "b_{k}");
            assert!(r.matches);
            if k >= 5 {
                assert_eq!(r.witness_matches, Some(true));
            }
        }
    }

    #[test]
    fn conjecture_decomposition_covers_k_from_5() {
        assert_eq!(conjecture_decomposition(5), Some((2, 0)));
        assert_eq!(conjecture_decomposition(6), Some((2, 1)));
        assert_eq!(conjecture_decomposition(8), Some((3, 0)));
        assert_eq!(conjecture_decomposition(4), None);
        for k in 5..=40 {
            assert!(conjecture_decomposition(k).is_some(), "k={k}");
        }
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let fresh = frequency_table_cached(5, dir.path()).unwrap();
        let cached = frequency_table_cached(5, dir.path()).unwrap();
        assert_eq!(fresh, cached);

        // corrupt the file; the loader must fall back to recomputation
        let path = cache_path(dir.path(), 5);
        let mut text = std::fs::read_to_string(&path).unwrap();
        text = text.replace("\"5\"", "\"6\"");
        std::fs::write(&path, text).unwrap();
        let recovered = frequency_table_cached(5, dir.path()).unwrap();
        assert_eq!(fresh, recovered);
    }
}
