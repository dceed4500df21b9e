//! Core domain types: words over a finite alphabet, canonical equality
//! patterns, the gap parameter and arbitrary-precision counts.

use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Exact count; all complexity values grow like `2^k` or `k!`, so everything
/// is arbitrary precision from the start.
pub type BigCount = BigUint;

/// The gap parameter `d`: consecutive chosen indices of a d-substring may
/// differ by at most `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gap(usize);

impl Gap {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::DomainError("gap parameter d must be >= 1".into()));
        }
        Ok(Gap(d))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl std::fmt::Display for Gap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite word: a sequence of dense symbol ids over a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

impl Word {
    /// Builds a word, validating that every symbol id is below the alphabet
    /// size and that the word is non-empty.
    pub fn new(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        if alphabet_size == 0 {
            return Err(Error::InvalidWord("alphabet size must be positive".into()));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s as usize >= alphabet_size) {
            return Err(Error::InvalidWord(format!(
                "symbol id {s} out of range for alphabet size {alphabet_size}"
            )));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Parses ASCII letter text; symbol ids are assigned by first occurrence
    /// and the alphabet size is the number of distinct letters.
    pub fn from_text(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::InvalidWord("empty input".into()));
        }
        let mut mapping: Vec<char> = Vec::new();
        let mut symbols = Vec::with_capacity(text.len());
        for ch in text.chars() {
            if !ch.is_ascii_alphabetic() {
                return Err(Error::InvalidWord(format!("non-letter character {ch:?}")));
            }
            let id = match mapping.iter().position(|&c| c == ch) {
                Some(i) => i,
                None => {
                    mapping.push(ch);
                    mapping.len() - 1
                }
            };
            symbols.push(id as u8);
        }
        let alphabet_size = mapping.len();
        Word::new(symbols, alphabet_size)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty words
    }

    /// Number of distinct symbols actually occurring.
    pub fn distinct_symbols(&self) -> usize {
        let mut seen = [false; 256];
        let mut n = 0;
        for &s in &self.symbols {
            if !seen[s as usize] {
                seen[s as usize] = true;
                n += 1;
            }
        }
        n
    }

    pub fn has_all_distinct_symbols(&self) -> bool {
        self.distinct_symbols() == self.len()
    }

    /// Renders symbol ids as letters `a`, `b`, `c`, ... Fails above 26
    /// distinct ids.
    pub fn to_letters(&self) -> Result<String> {
        if self.alphabet_size > 26 {
            return Err(Error::DomainError(
                "cannot render more than 26 symbols as letters".into(),
            ));
        }
        Ok(self
            .symbols
            .iter()
            .map(|&s| (b'a' + s) as char)
            .collect())
    }

    /// Concatenation of two words over disjoint alphabets: the second word's
    /// symbols are shifted past the first word's alphabet.
    pub fn concat_disjoint(&self, other: &Word) -> Result<Word> {
        let shift = self.alphabet_size;
        if shift + other.alphabet_size > 255 {
            return Err(Error::DomainError("combined alphabet too large".into()));
        }
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols.iter().map(|&s| s + shift as u8));
        Word::new(symbols, shift + other.alphabet_size)
    }
}

/// A word in restricted-growth form: symbols relabeled by first occurrence,
/// so the first symbol is 0 and each new symbol is one past the current
/// maximum. Complexity depends only on this equality pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternWord {
    symbols: Vec<u8>,
    num_blocks: usize,
}

impl PatternWord {
    /// Canonicalizes a word by first-occurrence relabeling.
    pub fn from_word(w: &Word) -> PatternWord {
        let mut map = [u8::MAX; 256];
        let mut next = 0u8;
        let symbols = w
            .symbols
            .iter()
            .map(|&s| {
                if map[s as usize] == u8::MAX {
                    map[s as usize] = next;
                    next += 1;
                }
                map[s as usize]
            })
            .collect();
        PatternWord {
            symbols,
            num_blocks: next as usize,
        }
    }

    /// Accepts a symbol sequence already in restricted-growth form.
    pub fn from_rgs(symbols: Vec<u8>) -> Result<PatternWord> {
        if symbols.is_empty() {
            return Err(Error::InvalidWord("empty pattern".into()));
        }
        let mut max_seen: i32 = -1;
        for &s in &symbols {
            if s as i32 > max_seen + 1 {
                return Err(Error::InvalidWord(
                    "sequence violates the restricted-growth property".into(),
                ));
            }
            max_seen = max_seen.max(s as i32);
        }
        let num_blocks = (max_seen + 1) as usize;
        Ok(PatternWord {
            symbols,
            num_blocks,
        })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Views the pattern as a word over an alphabet of exactly its blocks.
    pub fn to_word(&self) -> Word {
        Word {
            symbols: self.symbols.clone(),
            alphabet_size: self.num_blocks,
        }
    }

    pub fn to_letters(&self) -> Result<String> {
        self.to_word().to_letters()
    }
}

/// Canonicalizes a word to its equality pattern.
pub fn canonicalize(w: &Word) -> PatternWord {
    PatternWord::from_word(w)
}
