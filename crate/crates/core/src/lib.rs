//! Construction and exact verification of synchronization strings and
//! synchronization circles.
//!
//! A string `S` is an `eps`-synchronization string when every split interval
//! `S[i..=j]`, `S[j+1..=k]` has insertion/deletion edit distance greater than
//! `(1 - eps) * (k - i)`; it is a circle when every rotation is one.
//!
//! Three constructions are provided:
//!
//! * [`construct_lll`]: randomized sampling with local resampling.
//! * [`construct_deterministic`]: a Hamming-distance code paired with a short
//!   circle, codeword by codeword.
//! * [`construct_two_level`]: the same with a Reed–Solomon outer code and a
//!   greedy inner code, near-linear in `n`.
//!
//! All thresholds are exact rational comparisons.
//!
//! ```
//! use syncstr::{check_circle, construct_deterministic, Epsilon};
//!
//! let eps: Epsilon = "4/5".parse().unwrap();
//! let s = construct_deterministic(24, eps).unwrap();
//! assert_eq!(s.len(), 24);
//! assert!(check_circle(s.symbols(), eps).ok());
//! ```

pub mod circle;
pub mod codes;
pub mod epsilon;
pub mod error;
pub mod format;
pub mod lll;
pub mod metrics;
mod par;
pub mod seq;
pub mod synthesis;
pub mod verifier;

pub use circle::{build_circle, build_circle_with};
pub use codes::{concat_code, greedy_code, rs_encode, BlockCode, FieldElement, GreedyParams, ReedSolomon};
pub use epsilon::{Epsilon, Rational};
pub use error::{Error, Result};
pub use format::{Artifact, Kind};
pub use lll::{construct_lll, construct_lll_observed, derive_string, LllOutcome, RandomTape, SamplerConfig};
pub use metrics::{edit_distance, hamming_distance, lcs, lcs_all_prefixes};
pub use seq::{Symbol, SymbolSeq, SyncString};
pub use synthesis::{
    assemble, construct_deterministic, construct_deterministic_with, construct_two_level,
    construct_two_level_with, rho, solve_parameters, solve_two_level, DeterministicOptions,
    Synthesis, SynthesisPlan, TwoLevelOptions,
};
pub use verifier::{
    audit_code, check_circle, check_string, verify_sync_circle, verify_sync_string, CodeAudit,
    VerificationReport, Violation, VerifyOptions,
};
