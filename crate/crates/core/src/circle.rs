//! Synchronization circles from two synchronization strings over disjoint
//! alphabets.

use crate::error::{Error, Result};
use crate::seq::{Symbol, SymbolSeq, SyncString};
use crate::verifier::check_string;

/// Concatenates `s1` and `s2`, shifting `s2` past the alphabet of `s1`.
///
/// The lengths must split a total `n` as `ceil(n/2)` and `floor(n/2)`.
pub fn build_circle(s1: &SyncString, s2: &SyncString) -> Result<SyncString> {
    build_circle_with(s1, s2, false)
}

/// As [`build_circle`]; with `strict` both inputs are verified first.
pub fn build_circle_with(s1: &SyncString, s2: &SyncString, strict: bool) -> Result<SyncString> {
    let (first, second) = (s1.len(), s2.len());
    let n = first + second;
    if first != n.div_ceil(2) || second != n / 2 {
        return Err(Error::InvalidSplit { first, second });
    }
    if s1.epsilon() != s2.epsilon() {
        return Err(Error::EpsilonMismatch(
            s1.epsilon().to_string(),
            s2.epsilon().to_string(),
        ));
    }
    let eps = s1.epsilon();
    if strict {
        for (what, s) in [("first half", s1), ("second half", s2)] {
            if !check_string(s.symbols(), eps).ok() {
                return Err(Error::NotSynchronizing {
                    what,
                    epsilon: eps.to_string(),
                });
            }
        }
    }
    let shift = s1.alphabet_size();
    let alphabet = shift + s2.alphabet_size();
    if alphabet > u64::from(Symbol::MAX) + 1 {
        return Err(Error::AlphabetTooLarge(alphabet.into()));
    }
    let symbols = s1
        .symbols()
        .iter()
        .copied()
        .chain(s2.symbols().iter().map(|&s| s + shift as Symbol))
        .collect();
    SyncString::new(SymbolSeq::new(symbols, alphabet)?, eps)
}
