//! Block codes: greedy Hamming-distance search, binary extension fields,
//! Reed–Solomon encoding and code concatenation.

mod concat;
mod field;
mod greedy;
mod rs;

pub use concat::concat_code;
pub use field::{field_add, field_mul, irreducible_modulus, FieldElement, MAX_DEGREE};
pub use greedy::{
    greedy_code, greedy_code_with_budget, GreedyParams, DEFAULT_SEARCH_BUDGET,
};
pub use rs::{rs_encode, ReedSolomon};

pub(crate) use greedy::alphabet_for;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::seq::Symbol;

/// A set of distinct, equal-length codewords over `0..alphabet_size`.
///
/// `design_distance` is the minimum distance the construction guarantees; the
/// measured distance can be checked with [`crate::verifier::audit_code`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCode {
    block_length: usize,
    alphabet_size: u64,
    codewords: Vec<Vec<Symbol>>,
    design_distance: usize,
}

impl BlockCode {
    pub fn new(
        block_length: usize,
        alphabet_size: u64,
        codewords: Vec<Vec<Symbol>>,
        design_distance: usize,
    ) -> Result<Self> {
        if block_length == 0 {
            return Err(Error::InvalidCode("block length must be positive".into()));
        }
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = HashSet::with_capacity(codewords.len());
        for (idx, w) in codewords.iter().enumerate() {
            if w.len() != block_length {
                return Err(Error::InvalidCode(format!(
                    "codeword {idx} has length {}, expected {block_length}",
                    w.len()
                )));
            }
            if let Some(&s) = w.iter().find(|&&s| u64::from(s) >= alphabet_size) {
                return Err(Error::InvalidCode(format!(
                    "codeword {idx} uses symbol {s} outside alphabet of size {alphabet_size}"
                )));
            }
            if !seen.insert(w.as_slice()) {
                return Err(Error::InvalidCode(format!("codeword {idx} is repeated")));
            }
        }
        Ok(BlockCode {
            block_length,
            alphabet_size,
            codewords,
            design_distance,
        })
    }

    pub fn block_length(&self) -> usize {
        self.block_length
    }

    pub fn alphabet_size(&self) -> u64 {
        self.alphabet_size
    }

    pub fn codewords(&self) -> &[Vec<Symbol>] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn design_distance(&self) -> usize {
        self.design_distance
    }

    /// The first `count` codewords, keeping the design distance.
    pub fn truncated(&self, count: usize) -> BlockCode {
        BlockCode {
            codewords: self.codewords[..count.min(self.len())].to_vec(),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_codewords() {
        assert!(BlockCode::new(2, 3, vec![vec![0, 1], vec![2, 2]], 2).is_ok());
        assert!(BlockCode::new(2, 3, vec![vec![0, 1], vec![0]], 1).is_err());
        assert!(BlockCode::new(2, 3, vec![vec![0, 3]], 1).is_err());
        assert!(BlockCode::new(2, 3, vec![vec![0, 1], vec![0, 1]], 1).is_err());
        assert!(BlockCode::new(0, 3, vec![], 1).is_err());
    }
}
