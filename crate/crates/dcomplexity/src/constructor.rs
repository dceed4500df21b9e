//! Executable form of the 1-complexity results: the maximal-complexity
//! bound, the identity list a)–i), constructive recipes for a word of given
//! complexity, and the branch-and-bound search for words of given complexity
//! and (optionally) length.

use crate::dsubstring::complexity_substrings;
use crate::error::{Error, Result};
use crate::word::{BigCount, PatternWord, Word};
use num_traits::{One, Zero};

/// Maximal 1-complexity of a k-length word over an n-letter alphabet:
/// the sum over i of `min(n^i, k - i + 1)`.
pub fn max_complexity(n: usize, k: usize) -> BigCount {
    let mut total = BigCount::zero();
    let mut power: u128 = 1;
    let mut capped = false;
    for i in 1..=k {
        let remaining = (k - i + 1) as u128;
        if !capped {
            power = power.saturating_mul(n as u128);
            if power >= remaining {
                capped = true;
            }
        }
        total += BigCount::from(power.min(remaining));
    }
    total
}

/// Which of the paper-style identities to check.
#[derive(Debug, Clone)]
pub enum IdentitySpec {
    /// a) `k <= K(w) <= k(k+1)/2` for any word.
    BoundsAny { word: Word },
    /// b) the trivial word `a^k` has complexity k.
    Trivial { k: usize },
    /// c) if the last symbol is fresh, `K(w) = k + K(prefix)`.
    FreshLastLetter { word: Word },
    /// d) nontrivial words satisfy `2k - 1 <= K(w) <= k(k+1)/2`.
    BoundsNontrivial { word: Word },
    /// e) `a^{i-1} b a^{k-i}` has complexity `(i+1)k - i^2` for i <= k/2.
    SingleIntruder { i: usize, k: usize },
    /// f) a word with at least l distinct letters has
    /// `K >= kl - l(l-1)/2`; equality on the rendered witness.
    ManyLetters { l: usize, k: usize },
    /// g) disjoint alphabets: `K(pq) = K(p) + K(q) + km`.
    DisjointConcat { p: Word, q: Word },
    /// h) all-distinct p: `K(p) = k(k+1)/2`, `K(pp^R) = 2k^2`,
    /// `K(p^n) = k(k+1)/2 + (n-1)k^2`.
    DistinctFamily { k: usize, n: usize },
    /// i) `K(x_1..x_k x_1..x_n) = k(k+1)/2 + nk` for distinct symbols.
    WrapAround { k: usize, n: usize },
}

/// What an identity claims about the measured complexity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Exact(BigCount),
    Range(BigCount, BigCount),
    AtLeast(BigCount),
}

/// One verified claim: the witness word, both sides, and whether they agree.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub label: String,
    pub witness: Word,
    pub expected: Expected,
    pub measured: BigCount,
    pub holds: bool,
}

fn triangular(k: usize) -> BigCount {
    BigCount::from(k) * BigCount::from(k + 1) / BigCount::from(2u32)
}

fn check(label: impl Into<String>, witness: Word, expected: Expected) -> IdentityCheck {
    let measured = complexity_substrings(&witness);
    let holds = match &expected {
        Expected::Exact(v) => &measured == v,
        Expected::Range(lo, hi) => &measured >= lo && &measured <= hi,
        Expected::AtLeast(lo) => &measured >= lo,
    };
    IdentityCheck {
        label: label.into(),
        witness,
        expected,
        measured,
        holds,
    }
}

fn run_of(symbol: u8, count: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat(symbol).take(count)
}

/// Verifies one identity on its constructed witness(es). Identities with
/// several claims return one check per claim.
pub fn identity_check(spec: &IdentitySpec) -> Result<Vec<IdentityCheck>> {
    match spec {
        IdentitySpec::BoundsAny { word } => {
            let k = word.len();
            Ok(vec![check(
                "a: k <= K <= k(k+1)/2",
                word.clone(),
                Expected::Range(BigCount::from(k), triangular(k)),
            )])
        }
        IdentitySpec::Trivial { k } => {
            if *k == 0 {
                return Err(Error::DomainError("k must be >= 1".into()));
            }
            let w = Word::new(vec![0; *k], 1)?;
            Ok(vec![check(
                "b: K(a^k) = k",
                w,
                Expected::Exact(BigCount::from(*k)),
            )])
        }
        IdentitySpec::FreshLastLetter { word } => {
            let syms = word.symbols();
            let k = syms.len();
            if k < 2 {
                return Err(Error::DomainError("word must have length >= 2".into()));
            }
            let last = syms[k - 1];
            if syms[..k - 1].contains(&last) {
                return Err(Error::DomainError(
                    "last symbol must not occur earlier".into(),
                ));
            }
            let prefix = Word::new(syms[..k - 1].to_vec(), word.alphabet_size())?;
            let expected = BigCount::from(k) + complexity_substrings(&prefix);
            Ok(vec![check(
                "c: K(w) = k + K(prefix)",
                word.clone(),
                Expected::Exact(expected),
            )])
        }
        IdentitySpec::BoundsNontrivial { word } => {
            if word.distinct_symbols() < 2 {
                return Err(Error::DomainError("word must be nontrivial".into()));
            }
            let k = word.len();
            Ok(vec![check(
                "d: 2k-1 <= K <= k(k+1)/2",
                word.clone(),
                Expected::Range(BigCount::from(2 * k - 1), triangular(k)),
            )])
        }
        IdentitySpec::SingleIntruder { i, k } => {
            if *i < 1 || *i > k / 2 {
                return Err(Error::DomainError(format!(
                    "need 1 <= i <= floor(k/2), got i={i}, k={k}"
                )));
            }
            let symbols: Vec<u8> = run_of(0, i - 1)
                .chain(run_of(1, 1))
                .chain(run_of(0, k - i))
                .collect();
            let w = Word::new(symbols, 2)?;
            let expected = BigCount::from((i + 1) * k - i * i);
            Ok(vec![check(
                "e: K(a^{i-1} b a^{k-i}) = (i+1)k - i^2",
                w,
                Expected::Exact(expected),
            )])
        }
        IdentitySpec::ManyLetters { l, k } => {
            if *l < 1 || l > k {
                return Err(Error::DomainError(format!(
                    "need 1 <= l <= k, got l={l}, k={k}"
                )));
            }
            // witness with exactly l distinct letters: a_1 .. a_{l-1} b^{k-l+1}
            let symbols: Vec<u8> = (0..*l as u8 - 1)
                .chain(run_of(*l as u8 - 1, k - l + 1))
                .collect();
            let w = Word::new(symbols, *l)?;
            let bound = BigCount::from(k * l) - BigCount::from(l * (l - 1) / 2);
            Ok(vec![
                check("f: K >= kl - l(l-1)/2", w.clone(), Expected::AtLeast(bound.clone())),
                check(
                    "f (witness equality)",
                    w,
                    Expected::Exact(bound),
                ),
            ])
        }
        IdentitySpec::DisjointConcat { p, q } => {
            let pq = p.concat_disjoint(q)?;
            let expected = complexity_substrings(p)
                + complexity_substrings(q)
                + BigCount::from(p.len() * q.len());
            Ok(vec![check(
                "g: K(pq) = K(p) + K(q) + km",
                pq,
                Expected::Exact(expected),
            )])
        }
        IdentitySpec::DistinctFamily { k, n } => {
            if *k == 0 || *n == 0 {
                return Err(Error::DomainError("k and n must be >= 1".into()));
            }
            let p: Vec<u8> = (0..*k as u8).collect();
            let mut checks = Vec::new();
            checks.push(check(
                "h: K(p) = k(k+1)/2",
                Word::new(p.clone(), *k)?,
                Expected::Exact(triangular(*k)),
            ));
            let mut ppr = p.clone();
            ppr.extend(p.iter().rev());
            checks.push(check(
                "h: K(pp^R) = 2k^2",
                Word::new(ppr, *k)?,
                Expected::Exact(BigCount::from(2 * k * k)),
            ));
            let pn: Vec<u8> = (0..*n).flat_map(|_| p.iter().copied()).collect();
            checks.push(check(
                "h: K(p^n) = k(k+1)/2 + (n-1)k^2",
                Word::new(pn, *k)?,
                Expected::Exact(triangular(*k) + BigCount::from((n - 1) * k * k)),
            ));
            Ok(checks)
        }
        IdentitySpec::WrapAround { k, n } => {
            if *n < 1 || n > k {
                return Err(Error::DomainError(format!(
                    "need 1 <= n <= k, got n={n}, k={k}"
                )));
            }
            let mut symbols: Vec<u8> = (0..*k as u8).collect();
            symbols.extend(0..*n as u8);
            let w = Word::new(symbols, *k)?;
            Ok(vec![check(
                "i: K(x_1..x_k x_1..x_n) = k(k+1)/2 + nk",
                w,
                Expected::Exact(triangular(*k) + BigCount::from(n * k)),
            )])
        }
    }
}

/// The word templates used by the constructive proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecipeFamily {
    /// `a^{k-1} b`, complexity 2k - 1.
    PowerThenFresh,
    /// `a b^{k-3} a a`, complexity 4k - 8.
    FramedRun,
    /// `a b c d^{k-3}`, complexity 4k - 6.
    ThreeFreshThenRun,
    /// `a b^{k-7} a b b a b b`, complexity 8k - 46.
    BinaryEvenTail,
    /// `a b^{k-7} a b a b b a`, complexity 8k - 42.
    BinaryOddTail,
    /// `a b^4 a`, complexity 14.
    Ab4a,
    /// `a^4 b a b b`, complexity 26.
    A4Babb,
    /// `a b^5 a b a`, complexity 30.
    Ab5aba,
    /// the trivial `a^C`, complexity C.
    Trivial,
}

/// A template instantiated at a concrete length, carrying the complexity it
/// claims; construction measures the rendered word and rejects any mismatch.
#[derive(Debug, Clone)]
pub struct ConstructionRecipe {
    family: RecipeFamily,
    k: usize,
    claimed_complexity: BigCount,
    word: Word,
}

impl ConstructionRecipe {
    /// Renders the template and verifies the claim by actual measurement.
    pub fn new(family: RecipeFamily, k: usize, claimed: BigCount) -> Result<Self> {
        let word = render_template(family, k)?;
        let measured = complexity_substrings(&word);
        if measured != claimed {
            return Err(Error::InternalInvariantBroken(format!(
                "recipe {family:?} at k={k} claims {claimed} but measures {measured}"
            )));
        }
        Ok(ConstructionRecipe {
            family,
            k,
            claimed_complexity: claimed,
            word,
        })
    }

    pub fn family(&self) -> RecipeFamily {
        self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn claimed_complexity(&self) -> &BigCount {
        &self.claimed_complexity
    }

    pub fn word(&self) -> &Word {
        &self.word
    }
}

fn render_template(family: RecipeFamily, k: usize) -> Result<Word> {
    let need = |min: usize| -> Result<()> {
        if k < min {
            Err(Error::DomainError(format!(
                "template {family:?} needs length >= {min}, got {k}"
            )))
        } else {
            Ok(())
        }
    };
    let symbols: Vec<u8> = match family {
        RecipeFamily::PowerThenFresh => {
            need(2)?;
            run_of(0, k - 1).chain(run_of(1, 1)).collect()
        }
        RecipeFamily::FramedRun => {
            need(4)?;
            run_of(0, 1)
                .chain(run_of(1, k - 3))
                .chain(run_of(0, 2))
                .collect()
        }
        RecipeFamily::ThreeFreshThenRun => {
            need(3)?;
            [0u8, 1, 2].into_iter().chain(run_of(3, k - 3)).collect()
        }
        RecipeFamily::BinaryEvenTail => {
            need(10)?;
            run_of(0, 1)
                .chain(run_of(1, k - 7))
                .chain([0, 1, 1, 0, 1, 1])
                .collect()
        }
        RecipeFamily::BinaryOddTail => {
            need(10)?;
            run_of(0, 1)
                .chain(run_of(1, k - 7))
                .chain([0, 1, 0, 1, 1, 0])
                .collect()
        }
        RecipeFamily::Ab4a => {
            run_of(0, 1).chain(run_of(1, 4)).chain(run_of(0, 1)).collect()
        }
        RecipeFamily::A4Babb => run_of(0, 4).chain([1, 0, 1, 1]).collect(),
        RecipeFamily::Ab5aba => run_of(0, 1)
            .chain(run_of(1, 5))
            .chain([0, 1, 0])
            .collect(),
        RecipeFamily::Trivial => {
            need(1)?;
            vec![0; k]
        }
    };
    let alphabet = 1 + symbols.iter().copied().max().unwrap() as usize;
    Word::new(symbols, alphabet)
}

/// Outcome of a constructive request: either a verified recipe or the
/// (expected) impossibility answer.
#[derive(Debug, Clone)]
pub enum Construction {
    Recipe(ConstructionRecipe),
    Impossible,
}

/// Builds a nontrivial word of complexity exactly `C` by the proofs' case
/// analysis, or returns `Impossible` exactly on the exceptional sets
/// `{1, 2, 4}` (general) and `{1, 2, 4, 6, 10, 18, 22}` (binary-only).
pub fn construct_with_complexity(c: &BigCount, binary_only: bool) -> Result<Construction> {
    if c.is_zero() {
        return Err(Error::DomainError("complexity must be >= 1".into()));
    }
    let c_small = usize::try_from(c).map_err(|_| {
        Error::CapacityExceeded("target complexity does not fit in usize".into())
    })?;

    if c_small % 2 == 1 {
        // C odd: a^{k-1} b with k = (C+1)/2; C = 1 would need k = 1 (trivial)
        let k = (c_small + 1) / 2;
        if k < 2 {
            return Ok(Construction::Impossible);
        }
        return Ok(Construction::Recipe(ConstructionRecipe::new(
            RecipeFamily::PowerThenFresh,
            k,
            c.clone(),
        )?));
    }

    if c_small % 4 == 0 {
        // C = 4h: a b^{k-3} a a with k = h + 2, needs k >= 4
        let h = c_small / 4;
        let k = h + 2;
        if k < 4 {
            return Ok(Construction::Impossible);
        }
        return Ok(Construction::Recipe(ConstructionRecipe::new(
            RecipeFamily::FramedRun,
            k,
            c.clone(),
        )?));
    }

    // C = 4h + 2
    let h = (c_small - 2) / 4;
    if !binary_only {
        // a b c d^{k-3} with k = h + 2, needs k >= 3
        let k = h + 2;
        if k < 3 {
            return Ok(Construction::Impossible);
        }
        return Ok(Construction::Recipe(ConstructionRecipe::new(
            RecipeFamily::ThreeFreshThenRun,
            k,
            c.clone(),
        )?));
    }

    if c_small >= 34 {
        let (family, s) = if h % 2 == 0 {
            (RecipeFamily::BinaryEvenTail, h / 2)
        } else {
            (RecipeFamily::BinaryOddTail, (h - 1) / 2)
        };
        let k = s + 6;
        return Ok(Construction::Recipe(ConstructionRecipe::new(
            family,
            k,
            c.clone(),
        )?));
    }
    match c_small {
        14 => Ok(Construction::Recipe(ConstructionRecipe::new(
            RecipeFamily::Ab4a,
            6,
            c.clone(),
        )?)),
        26 => Ok(Construction::Recipe(ConstructionRecipe::new(
            RecipeFamily::A4Babb,
            8,
            c.clone(),
        )?)),
        30 => Ok(Construction::Recipe(ConstructionRecipe::new(
            RecipeFamily::Ab5aba,
            9,
            c.clone(),
        )?)),
        _ => Ok(Construction::Impossible),
    }
}

/// Whether the search returns the first hit or every canonical witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    AllCanonical,
}

/// A request for words of target complexity, optionally of fixed length.
#[derive(Debug, Clone)]
pub struct SearchRequest {
    pub target: BigCount,
    pub length: Option<usize>,
    pub alphabet_size: usize,
    pub mode: SearchMode,
}

/// Branch-and-bound over the prefix tree of canonical words.
///
/// A node is extended only while its complexity is below the target (append
/// always adds at least the full-length substring, so complexity strictly
/// grows along any branch). Extensions iterate over the letters already used
/// plus one fresh letter, capped at the alphabet size, so each emitted word
/// is a restricted-growth representative. With no fixed length, lengths are
/// swept upward from the smallest k with k(k+1)/2 >= C; a^C guarantees a
/// solution exists.
pub fn search(req: &SearchRequest) -> Result<Vec<PatternWord>> {
    if req.alphabet_size == 0 {
        return Err(Error::DomainError("alphabet size must be >= 1".into()));
    }
    if req.target.is_zero() {
        return Err(Error::DomainError("target complexity must be >= 1".into()));
    }
    match req.length {
        Some(k) => search_fixed_length(&req.target, k, req.alphabet_size, req.mode),
        None => {
            let c = usize::try_from(&req.target).map_err(|_| {
                Error::CapacityExceeded("target complexity too large for search".into())
            })?;
            // smallest k with k(k+1)/2 >= C
            let mut k = (1..).find(|&k| k * (k + 1) / 2 >= c).unwrap();
            loop {
                let found = search_fixed_length(&req.target, k, req.alphabet_size, req.mode)?;
                if !found.is_empty() {
                    return Ok(found);
                }
                if k >= c {
                    // a^C has complexity C, so this cannot happen
                    return Err(Error::InternalInvariantBroken(
                        "length sweep passed the trivial solution".into(),
                    ));
                }
                k += 1;
            }
        }
    }
}

fn search_fixed_length(
    target: &BigCount,
    k: usize,
    alphabet: usize,
    mode: SearchMode,
) -> Result<Vec<PatternWord>> {
    let mut out = Vec::new();
    if k == 0 {
        return Ok(out);
    }
    // vacuous bounds: K is always within [k, k(k+1)/2]
    if target < &BigCount::from(k)
        || target > &(BigCount::from(k) * BigCount::from(k + 1) / BigCount::from(2u32))
    {
        return Ok(out);
    }
    let mut prefix = vec![0u8];
    explore(&mut prefix, 1, target, k, alphabet, mode, &mut out);
    Ok(out)
}

fn explore(
    prefix: &mut Vec<u8>,
    used: usize,
    target: &BigCount,
    k: usize,
    alphabet: usize,
    mode: SearchMode,
    out: &mut Vec<PatternWord>,
) {
    if mode == SearchMode::First && !out.is_empty() {
        return;
    }
    let word = Word::new(prefix.clone(), used).expect("prefix is a valid word");
    let complexity = complexity_substrings(&word);
    if prefix.len() == k {
        if &complexity == target {
            out.push(PatternWord::from_rgs(prefix.clone()).expect("prefix is an RGS"));
        }
        return;
    }
    if &complexity >= target {
        return; // extension only increases complexity
    }
    let branch = (used + 1).min(alphabet);
    for next in 0..branch as u8 {
        prefix.push(next);
        let now_used = used.max(next as usize + 1);
        explore(prefix, now_used, target, k, alphabet, mode, out);
        prefix.pop();
    }
}

/// Number of ways to realize a canonical pattern as a labeled word over an
/// `alphabet`-letter alphabet: the falling factorial n (n-1) ... (n-m+1).
pub fn labelings(pattern: &PatternWord, alphabet: usize) -> BigCount {
    let m = pattern.num_blocks();
    if m > alphabet {
        return BigCount::zero();
    }
    let mut total = BigCount::one();
    for j in 0..m {
        total *= BigCount::from(alphabet - j);
    }
    total
}
