use super::BlockCode;
use crate::error::{Error, Result};

/// Replaces each outer symbol `s` by the inner codeword with index `s`.
///
/// The result has block length `outer.n * inner.n`, the inner alphabet, and
/// design distance `outer.d * inner.d`.
pub fn concat_code(outer: &BlockCode, inner: &BlockCode) -> Result<BlockCode> {
    if (inner.len() as u64) < outer.alphabet_size() {
        return Err(Error::InnerCodeTooSmall {
            inner: inner.len(),
            outer: outer.alphabet_size(),
        });
    }
    let inner_words = inner.codewords();
    let words = outer
        .codewords()
        .iter()
        .map(|w| {
            w.iter()
                .flat_map(|&s| inner_words[s as usize].iter().copied())
                .collect()
        })
        .collect();
    BlockCode::new(
        outer.block_length() * inner.block_length(),
        inner.alphabet_size(),
        words,
        outer.design_distance() * inner.design_distance(),
    )
}
