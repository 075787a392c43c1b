use std::collections::HashMap;

use crate::epsilon::Epsilon;
use crate::error::{Error, Result};

/// Symbols are plain integers; product alphabets are flattened by their owners.
pub type Symbol = u32;

/// A finite sequence over the alphabet `0..alphabet_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolSeq {
    symbols: Vec<Symbol>,
    alphabet_size: u64,
}

impl SymbolSeq {
    pub fn new(symbols: Vec<Symbol>, alphabet_size: u64) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if let Some((position, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| u64::from(s) >= alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                position,
                symbol,
                alphabet_size,
            });
        }
        Ok(SymbolSeq {
            symbols,
            alphabet_size,
        })
    }

    /// Uses one more than the largest symbol as the alphabet size.
    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        let alphabet_size = symbols.iter().max().map_or(1, |&m| u64::from(m) + 1);
        SymbolSeq {
            symbols,
            alphabet_size,
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> u64 {
        self.alphabet_size
    }

    /// The rotation starting at 0-based `offset`.
    pub fn rotated(&self, offset: usize) -> SymbolSeq {
        let mut symbols = self.symbols.clone();
        if !symbols.is_empty() {
            symbols.rotate_left(offset % self.symbols.len());
        }
        SymbolSeq {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// Relabels symbols `0, 1, 2, ...` in order of first appearance and shrinks
    /// the alphabet to the symbols actually used. Equality patterns, and so
    /// every edit distance, are preserved.
    pub fn compacted(&self) -> SymbolSeq {
        let mut labels: HashMap<Symbol, Symbol> = HashMap::new();
        let symbols: Vec<Symbol> = self
            .symbols
            .iter()
            .map(|s| {
                let next = labels.len() as Symbol;
                *labels.entry(*s).or_insert(next)
            })
            .collect();
        SymbolSeq {
            symbols,
            alphabet_size: labels.len().max(1) as u64,
        }
    }
}

/// A non-empty string together with the epsilon it claims to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncString {
    seq: SymbolSeq,
    epsilon: Epsilon,
}

impl SyncString {
    pub fn new(seq: SymbolSeq, epsilon: Epsilon) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::EmptyString);
        }
        Ok(SyncString { seq, epsilon })
    }

    pub fn seq(&self) -> &SymbolSeq {
        &self.seq
    }

    pub fn symbols(&self) -> &[Symbol] {
        self.seq.symbols()
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alphabet_size(&self) -> u64 {
        self.seq.alphabet_size()
    }

    pub fn into_seq(self) -> SymbolSeq {
        self.seq
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_symbols() {
        assert!(matches!(
            SymbolSeq::new(vec![0, 3], 3),
            Err(Error::SymbolOutOfRange { position: 1, .. })
        ));
        assert!(SymbolSeq::new(vec![], 1).is_ok());
        assert!(SymbolSeq::new(vec![], 0).is_err());
    }

    #[test]
    fn compaction_relabels_by_first_appearance() {
        let s = SymbolSeq::new(vec![90, 7, 90, 12], 100).unwrap();
        let c = s.compacted();
        assert_eq!(c.symbols(), &[0, 1, 0, 2]);
        assert_eq!(c.alphabet_size(), 3);
    }

    #[test]
    fn rotation() {
        let s = SymbolSeq::from_symbols(vec![1, 2, 3, 4]);
        assert_eq!(s.rotated(1).symbols(), &[2, 3, 4, 1]);
        assert_eq!(s.rotated(4).symbols(), &[1, 2, 3, 4]);
    }
}
