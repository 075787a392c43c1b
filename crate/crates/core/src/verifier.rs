//! Exact checks for synchronization strings, synchronization circles and block
//! codes.
//!
//! A string `S` of length `n` passes at `eps` when every split interval
//! `S[i..=j]`, `S[j+1..=k]` with `1 <= i <= j < k <= n` has
//! `ED > (1 - eps) * (k - i)`. For each `(i, j)` one all-prefix LCS row yields
//! the edit distance against every `k`, so a full check is `O(n^4)`.

use crate::codes::BlockCode;
use crate::epsilon::{Epsilon, Rational};
use crate::error::{Error, Result};
use crate::metrics::{hamming_distance, lcs, lcs_all_prefixes_into};
use crate::par;
use crate::seq::{Symbol, SyncString};

/// Default cap on string length for the quartic check.
pub const DEFAULT_SIZE_LIMIT: usize = 4096;

/// A violating triple, 1-based.
///
/// For circle checks `i`, `j`, `k` are positions in the original string and
/// `rotation` is the 1-based start of the failing rotation; `span` is then
/// measured along the rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub span: usize,
    pub lcs: usize,
    pub edit_distance: usize,
    pub threshold: Rational,
    pub rotation: Option<usize>,
}

impl Violation {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.i, self.j, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    witness: Option<Violation>,
}

impl VerificationReport {
    pub fn pass() -> Self {
        VerificationReport { witness: None }
    }

    pub fn fail(witness: Violation) -> Self {
        VerificationReport {
            witness: Some(witness),
        }
    }

    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Violation> {
        self.witness.as_ref()
    }

    pub fn measured_ed(&self) -> Option<usize> {
        self.witness.as_ref().map(|w| w.edit_distance)
    }

    pub fn threshold(&self) -> Option<Rational> {
        self.witness.as_ref().map(|w| w.threshold)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Refuse strings longer than this; `None` disables the guard.
    pub size_limit: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            size_limit: Some(DEFAULT_SIZE_LIMIT),
        }
    }
}

impl VerifyOptions {
    pub fn unlimited() -> Self {
        VerifyOptions { size_limit: None }
    }

    fn guard(&self, len: usize) -> Result<()> {
        match self.size_limit {
            Some(limit) if len > limit => Err(Error::TooLong { len, limit }),
            _ => Ok(()),
        }
    }
}

pub fn verify_sync_string(s: &SyncString) -> Result<VerificationReport> {
    verify_sync_string_with(s, &VerifyOptions::default())
}

pub fn verify_sync_string_with(s: &SyncString, opts: &VerifyOptions) -> Result<VerificationReport> {
    opts.guard(s.len())?;
    Ok(check_string(s.symbols(), s.epsilon()))
}

pub fn verify_sync_circle(s: &SyncString) -> Result<VerificationReport> {
    verify_sync_circle_with(s, &VerifyOptions::default())
}

pub fn verify_sync_circle_with(s: &SyncString, opts: &VerifyOptions) -> Result<VerificationReport> {
    opts.guard(s.len())?;
    Ok(check_circle(s.symbols(), s.epsilon()))
}

/// Unguarded string check. The witness is the lexicographically smallest
/// violating `(i, j, k)`.
pub fn check_string(symbols: &[Symbol], eps: Epsilon) -> VerificationReport {
    match first_violation(symbols, eps) {
        Some(v) => VerificationReport::fail(v),
        None => VerificationReport::pass(),
    }
}

/// Unguarded circle check: every rotation, in order of its starting offset.
pub fn check_circle(symbols: &[Symbol], eps: Epsilon) -> VerificationReport {
    let n = symbols.len();
    let mut rotated = symbols.to_vec();
    for offset in 0..n {
        if offset > 0 {
            rotated.rotate_left(1);
        }
        if let Some(mut v) = first_violation(&rotated, eps) {
            let absolute = |p: usize| (p - 1 + offset) % n + 1;
            v.i = absolute(v.i);
            v.j = absolute(v.j);
            v.k = absolute(v.k);
            v.rotation = Some(offset + 1);
            return VerificationReport::fail(v);
        }
    }
    VerificationReport::pass()
}

/// Lexicographically smallest violating triple, if any.
pub(crate) fn first_violation(symbols: &[Symbol], eps: Epsilon) -> Option<Violation> {
    let n = symbols.len();
    if n < 2 {
        return None;
    }
    par::find_map_first(0..n - 1, |i| first_violation_from(symbols, i, eps))
}

fn first_violation_from(s: &[Symbol], i: usize, eps: Epsilon) -> Option<Violation> {
    let n = s.len();
    let mut row = Vec::with_capacity(n + 1);
    for j in i..n - 1 {
        lcs_all_prefixes_into(&s[i..=j], &s[j + 1..], &mut row);
        for k in j + 1..n {
            let common = row[k - j] as usize;
            let ed = (k - i + 1) - 2 * common;
            let span = k - i;
            if !eps.exceeds(ed, span) {
                return Some(Violation {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    span,
                    lcs: common,
                    edit_distance: ed,
                    threshold: eps.threshold(span),
                    rotation: None,
                });
            }
        }
    }
    None
}

/// The bad interval `[i, k]` (1-based) with the smallest `i`, then the
/// smallest `k`, among intervals with `k - i >= min_span`.
pub(crate) fn first_bad_interval(
    symbols: &[Symbol],
    eps: Epsilon,
    min_span: usize,
) -> Option<(usize, usize)> {
    let n = symbols.len();
    if n < 2 {
        return None;
    }
    let min_span = min_span.max(1);
    par::find_map_first(0..n - 1, |i| {
        smallest_bad_end(symbols, i, eps, min_span).map(|k| (i + 1, k + 1))
    })
}

fn smallest_bad_end(s: &[Symbol], i: usize, eps: Epsilon, min_span: usize) -> Option<usize> {
    let n = s.len();
    // exclusive upper bound on candidate ends
    let mut best = n;
    let mut row = Vec::with_capacity(n + 1);
    let mut j = i;
    while j + 1 < best {
        let first_k = (j + 1).max(i + min_span);
        if first_k < best {
            lcs_all_prefixes_into(&s[i..=j], &s[j + 1..best], &mut row);
            for k in first_k..best {
                let ed = (k - i + 1) - 2 * row[k - j] as usize;
                if !eps.exceeds(ed, k - i) {
                    best = k;
                    break;
                }
            }
        }
        j += 1;
    }
    (best < n).then_some(best)
}

/// Measured properties of a block code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeAudit {
    pub codewords: usize,
    pub block_length: usize,
    /// Largest LCS over pairs of distinct codewords; `None` with fewer than two.
    pub max_pairwise_lcs: Option<usize>,
    /// Smallest Hamming distance over pairs; `None` with fewer than two.
    pub min_hamming_distance: Option<usize>,
    /// Whether every codeword is itself a synchronization circle, if asked.
    pub all_circles: Option<bool>,
}

pub fn audit_code(code: &BlockCode, as_circle_epsilon: Option<Epsilon>) -> CodeAudit {
    let words = code.codewords();
    let pairs: Vec<(usize, usize)> = (0..words.len())
        .flat_map(|a| (a + 1..words.len()).map(move |b| (a, b)))
        .collect();
    let measured = par::map_collect(0..pairs.len(), |p| {
        let (a, b) = pairs[p];
        let h = hamming_distance(&words[a], &words[b]).expect("codewords share a length");
        (lcs(&words[a], &words[b]), h)
    });
    let all_circles = as_circle_epsilon.map(|eps| {
        words
            .iter()
            .all(|w| w.is_empty() || check_circle(w, eps).ok())
    });
    CodeAudit {
        codewords: words.len(),
        block_length: code.block_length(),
        max_pairwise_lcs: measured.iter().map(|m| m.0).max(),
        min_hamming_distance: measured.iter().map(|m| m.1).min(),
        all_circles,
    }
}
