//! Exact distance kernels over integer sequences.
//!
//! Edit distance here counts insertions and deletions only; a substitution
//! costs two. All kernels keep a single rolling row.

use crate::error::{Error, Result};

/// Minimum number of single-symbol insertions and deletions turning `a` into `b`.
pub fn edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    // row[c] = ED(long[..r], short[..c])
    let mut row: Vec<usize> = (0..=short.len()).collect();
    for (r, x) in long.iter().enumerate() {
        let mut diag = row[0];
        row[0] = r + 1;
        for c in 1..=short.len() {
            let up = row[c];
            row[c] = if *x == short[c - 1] {
                diag
            } else {
                up.min(row[c - 1]) + 1
            };
            diag = up;
        }
    }
    row[short.len()]
}

/// Length of a longest common subsequence.
pub fn lcs<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut row = Vec::new();
    lcs_all_prefixes_into(long, short, &mut row);
    row[short.len()] as usize
}

/// `out[p] = lcs(a, b[..p])` for every `p` in `0..=b.len()`.
pub fn lcs_all_prefixes<T: PartialEq>(a: &[T], b: &[T]) -> Vec<usize> {
    let mut row = Vec::new();
    lcs_all_prefixes_into(a, b, &mut row);
    row.into_iter().map(|v| v as usize).collect()
}

/// Buffer-reusing form of [`lcs_all_prefixes`] for the verifier's inner loop.
pub(crate) fn lcs_all_prefixes_into<T: PartialEq>(a: &[T], b: &[T], row: &mut Vec<u32>) {
    row.clear();
    row.resize(b.len() + 1, 0);
    for x in a {
        let mut diag = 0;
        for c in 1..=b.len() {
            let up = row[c];
            row[c] = if *x == b[c - 1] {
                diag + 1
            } else {
                up.max(row[c - 1])
            };
            diag = up;
        }
    }
}

/// Number of positions at which two equal-length sequences differ.
pub fn hamming_distance<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edit_distance_examples() {
        let empty: [u32; 0] = [];
        assert_eq!(edit_distance(&empty, &empty), 0);
        assert_eq!(edit_distance(&[1, 2], &[2, 1]), 2);
        assert_eq!(edit_distance(&[1, 2, 3], &[4, 5, 6]), 6);
        // a substitution is a deletion plus an insertion
        assert_eq!(edit_distance(&[1, 2, 3], &[1, 9, 3]), 2);
        assert_eq!(edit_distance(&[1, 2, 3], &empty), 3);
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs(&[1, 2, 3, 4, 5], &[1, 3, 5]), 3);
        assert_eq!(lcs(&[], &[1, 2, 3]), 0);
        assert_eq!(lcs(&[1, 2], &[3, 4]), 0);
        assert_eq!(lcs(&[1, 2, 3], &[1, 2, 3]), 3);
    }

    #[test]
    fn lcs_all_prefixes_examples() {
        assert_eq!(lcs_all_prefixes(&[1, 2], &[2, 1, 2]), vec![0, 1, 1, 2]);
        assert_eq!(lcs_all_prefixes::<u32>(&[], &[1, 2]), vec![0, 0, 0]);
        assert_eq!(lcs_all_prefixes(&[7], &[7]), vec![0, 1]);
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_distance(&[1, 2, 3], &[1, 2, 3]).unwrap(), 0);
        assert_eq!(hamming_distance(&[1, 2, 3], &[3, 2, 1]).unwrap(), 2);
        assert_eq!(hamming_distance(&[0], &[1]).unwrap(), 1);
        assert!(matches!(
            hamming_distance(&[0], &[1, 2]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }
}
