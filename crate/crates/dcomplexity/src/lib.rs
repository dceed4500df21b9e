//! The d-complexity of strings: the number of distinct subsequences whose
//! consecutive chosen positions are at most `d` apart (`d = 1` gives the
//! ordinary distinct-substring count).
//!
//! The crate provides:
//!
//! - [`dsubstring`]: counting `K_d` for arbitrary words — a brute-force
//!   enumeration oracle, a determinized position-automaton counter, and a
//!   suffix-automaton fast path for `d = 1`;
//! - [`sequences`] and [`series`]: the Fibonacci-type recurrences, closed
//!   forms and generating functions behind `N(k, d)`, the d-complexity of
//!   all-distinct words, each value reachable by several independent routes;
//! - [`constructor`]: 1-complexity identities, constructive recipes for a
//!   word of prescribed complexity, and a branch-and-bound search over
//!   canonical words;
//! - [`census`]: exact frequency tables of 1-complexity over all k-length
//!   words on a k-letter alphabet, with threshold analysis.

pub mod census;
pub mod constructor;
pub mod dsubstring;
pub mod error;
pub mod sequences;
pub mod series;
pub mod word;

pub use error::{Error, Result};
pub use word::{canonicalize, BigCount, Gap, PatternWord, Word};
