//! Deterministic constructions: pair every codeword of a Hamming-distance code
//! with a short synchronization circle, position by position, and concatenate.
//!
//! The error budget is split as `circle_epsilon = eps/30` and
//! `alpha = eps/10`, with the code's relative distance
//! `rho = (1 + eps/30) / (1 - eps/30) * (1 - eps/10)`. These satisfy
//! `10 * (1 - (1 - eps/30) / (1 + eps/30) * rho) = eps` exactly.

use std::fmt::Write as _;

use num_traits::One;

use crate::circle::build_circle;
use crate::codes::{concat_code, greedy_code, BlockCode, ReedSolomon};
use crate::epsilon::{ceil_to_usize, Epsilon, Rational};
use crate::error::{Error, Result};
use crate::lll::{construct_lll, SamplerConfig};
use crate::par;
use crate::seq::{Symbol, SymbolSeq, SyncString};
use crate::verifier::{check_circle, check_string};

/// Largest circle length accepted by the exhaustive circle search.
pub const EXHAUSTIVE_CIRCLE_LIMIT: usize = 6;

/// Seeds tried, in order from 0, when sampling the small circle.
const CIRCLE_SEED_ATTEMPTS: u64 = 32;

/// Level-zero circles up to this length are re-verified in the two-level
/// pipeline.
const LEVEL_ZERO_CERTIFY_LIMIT: usize = 64;

/// `(1 + eps/30) / (1 - eps/30) * (1 - eps/10)`.
pub fn rho(target: Epsilon) -> Rational {
    let e = target.ratio();
    let c = e / 30;
    (Rational::one() + c) / (Rational::one() - c) * (Rational::one() - e / 10)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    One,
    Two,
}

/// Parameters of the outer Reed–Solomon and inner greedy codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoLevelParams {
    pub field_degree: u8,
    pub outer_length: usize,
    pub message_len: usize,
    pub inner_length: usize,
    pub inner_distance: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisPlan {
    pub n: usize,
    pub target_epsilon: Epsilon,
    pub circle_epsilon: Epsilon,
    /// Relative distance `rho` demanded of the code.
    pub code_relative_distance: Rational,
    pub alpha: Rational,
    /// Block length.
    pub m: usize,
    /// Number of codewords concatenated, `ceil(n / m)`.
    pub ell: usize,
    pub level: Level,
    pub code_alphabet: u64,
    /// Design distance of the code, at least `rho * m`.
    pub code_distance: usize,
    pub two_level: Option<TwoLevelParams>,
}

impl SynthesisPlan {
    /// A single-level plan for a fixed block length, without searching for a
    /// code. Block lengths of `n` or more collapse to one block of length `n`.
    pub fn with_block_length(n: usize, target: Epsilon, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::Infeasible("length and block length must be positive".into()));
        }
        let base = Budget::new(target)?;
        let m = m.min(n);
        Ok(SynthesisPlan {
            n,
            target_epsilon: target,
            circle_epsilon: base.circle_epsilon,
            code_relative_distance: base.rho,
            alpha: base.alpha,
            m,
            ell: n.div_ceil(m),
            level: Level::One,
            code_alphabet: base.q,
            code_distance: ceil_to_usize(base.rho * int(m)),
            two_level: None,
        })
    }

    /// `10 * (1 - (1 - c) / (1 + c) * delta)` for the plan's circle epsilon
    /// `c` and relative distance `delta`.
    pub fn guaranteed_epsilon(&self) -> Rational {
        let c = self.circle_epsilon.ratio();
        let one = Rational::one();
        (one - (one - c) / (one + c) * self.code_relative_distance) * 10
    }

    pub fn satisfies_guarantee(&self) -> bool {
        self.guaranteed_epsilon() <= self.target_epsilon.ratio()
            && self.ell * self.m >= self.n
            && int(self.code_distance) >= self.code_relative_distance * int(self.m)
    }

    /// One `key=value` pair per line.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        let level = match self.level {
            Level::One => "one",
            Level::Two => "two",
        };
        let _ = writeln!(out, "level={level}");
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "target_epsilon={}", self.target_epsilon);
        let _ = writeln!(out, "circle_epsilon={}", self.circle_epsilon);
        let _ = writeln!(out, "code_relative_distance={}", self.code_relative_distance);
        let _ = writeln!(out, "alpha={}", self.alpha);
        let _ = writeln!(out, "block_length={}", self.m);
        let _ = writeln!(out, "codewords={}", self.ell);
        let _ = writeln!(out, "code_alphabet={}", self.code_alphabet);
        let _ = writeln!(out, "code_distance={}", self.code_distance);
        if let Some(t) = &self.two_level {
            let _ = writeln!(out, "field_degree={}", t.field_degree);
            let _ = writeln!(out, "outer_length={}", t.outer_length);
            let _ = writeln!(out, "outer_message_len={}", t.message_len);
            let _ = writeln!(out, "inner_length={}", t.inner_length);
            let _ = writeln!(out, "inner_distance={}", t.inner_distance);
        }
        out
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(v as i128)
}

struct Budget {
    circle_epsilon: Epsilon,
    rho: Rational,
    alpha: Rational,
    q: u64,
}

impl Budget {
    fn new(target: Epsilon) -> Result<Self> {
        let rho = rho(target);
        if rho >= Rational::one() {
            return Err(Error::Infeasible(format!("relative distance {rho} is not below 1")));
        }
        let circle_epsilon = Epsilon::from_ratio(target.ratio() / 30)?;
        let c = circle_epsilon.ratio();
        let alpha = Rational::one() - (Rational::one() - c) / (Rational::one() + c) * rho;
        Ok(Budget {
            circle_epsilon,
            rho,
            alpha,
            q: crate::codes::alphabet_for(Rational::one() - rho),
        })
    }
}

fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Whether `count <= q^free`, the Singleton bound.
fn singleton_allows(count: usize, q: u64, free: usize) -> bool {
    let mut capacity: u128 = 1;
    for _ in 0..free {
        capacity = capacity.saturating_mul(q.into());
        if capacity >= count as u128 {
            return true;
        }
    }
    capacity >= count as u128
}

fn is_search_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::CodeSpaceExhausted { .. } | Error::SearchBudgetExceeded(_)
    )
}

/// The single-level plan with the smallest block length `m >= ceil(log2 n)`
/// for which the greedy search finds `ceil(n/m)` codewords.
pub fn solve_parameters(n: usize, target: Epsilon) -> Result<SynthesisPlan> {
    solve_single(n, target, None).map(|(plan, _)| plan)
}

fn solve_single(
    n: usize,
    target: Epsilon,
    block_length: Option<usize>,
) -> Result<(SynthesisPlan, BlockCode)> {
    if n == 0 {
        return Err(Error::Infeasible("length must be positive".into()));
    }
    if let Some(m) = block_length {
        let plan = SynthesisPlan::with_block_length(n, target, m)?;
        let code = greedy_code(plan.m, plan.code_distance, plan.code_alphabet, plan.ell)?;
        return Ok((plan, code));
    }
    let start = ceil_log2(n).max(1);
    for m in start..=n.max(start) {
        let plan = SynthesisPlan::with_block_length(n, target, m)?;
        if !singleton_allows(plan.ell, plan.code_alphabet, plan.m + 1 - plan.code_distance) {
            continue;
        }
        match greedy_code(plan.m, plan.code_distance, plan.code_alphabet, plan.ell) {
            Ok(code) => return Ok((plan, code)),
            Err(e) if is_search_failure(&e) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Infeasible(format!(
        "no block length up to {n} admits enough codewords at epsilon {target}"
    )))
}

/// The two-level plan with the smallest total block length `m * m0`, then
/// the smallest inner length `m0 >= 2`.
///
/// The outer code is Reed–Solomon over GF(2^l) with `m = 2^l` points and the
/// fewest message symbols `k` covering `ceil(n / (m * m0))` codewords. The
/// inner greedy code has `2^l` words of length `m0` and distance
/// `ceil(ceil(rho * m * m0) / (m - k + 1))`.
pub fn solve_two_level(n: usize, target: Epsilon) -> Result<SynthesisPlan> {
    solve_two(n, target).map(|(plan, _)| plan)
}

fn solve_two(n: usize, target: Epsilon) -> Result<(SynthesisPlan, BlockCode)> {
    let base = Budget::new(target)?;
    let mut candidates = Vec::new();
    for degree in 1..=crate::codes::MAX_DEGREE {
        let m = 1usize << degree;
        if 2 * m >= n {
            break;
        }
        let mut m0 = 2;
        while m * m0 < n {
            let total = m * m0;
            let ell = n.div_ceil(total);
            let mut k = 1;
            let mut reach = m as u128;
            while reach < ell as u128 {
                reach = reach.saturating_mul(m as u128);
                k += 1;
            }
            if k <= m {
                let outer_distance = m - k + 1;
                let needed = ceil_to_usize(base.rho * int(total));
                let inner_distance = needed.div_ceil(outer_distance);
                if inner_distance <= m0
                    && singleton_allows(m, base.q, m0 + 1 - inner_distance)
                {
                    candidates.push((total, m0, degree, k, inner_distance));
                }
            }
            m0 += 1;
        }
    }
    candidates.sort_unstable();
    for (total, m0, degree, k, inner_distance) in candidates {
        let m = 1usize << degree;
        let inner = match greedy_code(m0, inner_distance, base.q, m) {
            Ok(code) => code,
            Err(e) if is_search_failure(&e) => continue,
            Err(e) => return Err(e),
        };
        let plan = SynthesisPlan {
            n,
            target_epsilon: target,
            circle_epsilon: base.circle_epsilon,
            code_relative_distance: base.rho,
            alpha: base.alpha,
            m: total,
            ell: n.div_ceil(total),
            level: Level::Two,
            code_alphabet: base.q,
            code_distance: (m - k + 1) * inner_distance,
            two_level: Some(TwoLevelParams {
                field_degree: degree,
                outer_length: m,
                message_len: k,
                inner_length: m0,
                inner_distance,
            }),
        };
        return Ok((plan, inner));
    }
    Err(Error::Infeasible(format!(
        "no two-level parameters with total block length below {n} at epsilon {target}"
    )))
}

/// Pairs each of the first `plan.ell` codewords with the circle, flattens
/// each pair to `code_symbol * |circle alphabet| + circle_symbol`,
/// concatenates and truncates to `plan.n`. The circle is verified first.
pub fn assemble(plan: &SynthesisPlan, code: &BlockCode, circle: &SyncString) -> Result<SyncString> {
    assemble_with(plan, code, circle, true)
}

/// As [`assemble`]; `verify_circle = false` trusts the circle.
pub fn assemble_with(
    plan: &SynthesisPlan,
    code: &BlockCode,
    circle: &SyncString,
    verify_circle: bool,
) -> Result<SyncString> {
    let (product, _) = product_code(plan, code, circle, verify_circle)?;
    let symbols: Vec<Symbol> = product
        .codewords()
        .iter()
        .flatten()
        .copied()
        .take(plan.n)
        .collect();
    if symbols.len() != plan.n {
        return Err(Error::InvalidCode(format!(
            "{} codewords of length {} cannot cover length {}",
            product.len(),
            plan.m,
            plan.n
        )));
    }
    SyncString::new(
        SymbolSeq::new(symbols, product.alphabet_size())?,
        plan.target_epsilon,
    )
}

fn product_code(
    plan: &SynthesisPlan,
    code: &BlockCode,
    circle: &SyncString,
    verify_circle: bool,
) -> Result<(BlockCode, u64)> {
    if code.block_length() != plan.m || circle.len() != plan.m {
        return Err(Error::InvalidCode(format!(
            "block length {} and circle length {} must both equal {}",
            code.block_length(),
            circle.len(),
            plan.m
        )));
    }
    if code.len() < plan.ell {
        return Err(Error::CodeSpaceExhausted {
            found: code.len(),
            target: plan.ell,
        });
    }
    if circle.epsilon() != plan.circle_epsilon {
        return Err(Error::EpsilonMismatch(
            circle.epsilon().to_string(),
            plan.circle_epsilon.to_string(),
        ));
    }
    if verify_circle && !check_circle(circle.symbols(), plan.circle_epsilon).ok() {
        return Err(Error::NotSynchronizing {
            what: "block circle",
            epsilon: plan.circle_epsilon.to_string(),
        });
    }
    let sc = circle.seq().compacted();
    let sigma = sc.alphabet_size();
    let alphabet = code
        .alphabet_size()
        .checked_mul(sigma)
        .filter(|&a| a <= u64::from(Symbol::MAX) + 1)
        .ok_or(Error::AlphabetTooLarge(
            u128::from(code.alphabet_size()) * u128::from(sigma),
        ))?;
    let words = code.codewords();
    let sc = sc.symbols();
    let product = par::map_collect(0..plan.ell, |c| {
        words[c]
            .iter()
            .zip(sc)
            .map(|(&x, &y)| x * sigma as Symbol + y)
            .collect::<Vec<Symbol>>()
    });
    Ok((
        BlockCode::new(plan.m, alphabet, product, code.design_distance())?,
        sigma,
    ))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DeterministicOptions {
    /// Find the block circle by exhaustive search instead of seeded sampling.
    pub exhaustive_circle: bool,
    /// Use this block length instead of searching for the smallest.
    pub block_length: Option<usize>,
}

/// Everything a deterministic construction produced.
#[derive(Clone, Debug)]
pub struct Synthesis {
    pub plan: SynthesisPlan,
    /// The code whose first `plan.ell` codewords were used.
    pub code: BlockCode,
    /// The block circle as used, with compacted symbols.
    pub circle: SyncString,
    pub string: SyncString,
}

impl Synthesis {
    /// The paired codewords before concatenation.
    pub fn product_code(&self) -> Result<BlockCode> {
        product_code(&self.plan, &self.code, &self.circle, false).map(|(c, _)| c)
    }
}

pub fn construct_deterministic(n: usize, target: Epsilon) -> Result<SyncString> {
    construct_deterministic_with(n, target, &DeterministicOptions::default()).map(|s| s.string)
}

pub fn construct_deterministic_with(
    n: usize,
    target: Epsilon,
    opts: &DeterministicOptions,
) -> Result<Synthesis> {
    let (plan, code) = solve_single(n, target, opts.block_length)?;
    let circle = if opts.exhaustive_circle {
        exhaustive_circle(plan.m, plan.circle_epsilon)?
    } else {
        sampled_circle(plan.m, plan.circle_epsilon)?
    };
    let circle = SyncString::new(circle.seq().compacted(), circle.epsilon())?;
    // Both circle constructions end in a full circle check.
    let string = assemble_with(&plan, &code, &circle, false)?;
    Ok(Synthesis {
        code: code.truncated(plan.ell),
        plan,
        circle,
        string,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoLevelOptions {
    /// Re-verify the level-zero circle when it has at most 64 symbols.
    pub certify_level_zero: bool,
}

impl Default for TwoLevelOptions {
    fn default() -> Self {
        TwoLevelOptions {
            certify_level_zero: true,
        }
    }
}

pub fn construct_two_level(n: usize, target: Epsilon) -> Result<SyncString> {
    construct_two_level_with(n, target, &TwoLevelOptions::default()).map(|s| s.string)
}

pub fn construct_two_level_with(
    n: usize,
    target: Epsilon,
    opts: &TwoLevelOptions,
) -> Result<Synthesis> {
    let (plan, inner) = solve_two(n, target)?;
    let params = plan.two_level.expect("two-level plan");
    let level_zero = construct_deterministic(plan.m, plan.circle_epsilon)?;
    let circle = SyncString::new(level_zero.seq().compacted(), level_zero.epsilon())?;
    let outer = ReedSolomon::new(params.field_degree, params.outer_length, params.message_len)?
        .code(plan.ell)?;
    let code = concat_code(&outer, &inner)?;
    let certify = opts.certify_level_zero && plan.m <= LEVEL_ZERO_CERTIFY_LIMIT;
    let string = assemble_with(&plan, &code, &circle, certify)?;
    Ok(Synthesis {
        plan,
        code,
        circle,
        string,
    })
}

/// Two sampled halves joined into a circle, certified by the verifier.
/// Seeds are tried in order from 0.
fn sampled_circle(m: usize, eps: Epsilon) -> Result<SyncString> {
    if m == 1 {
        return SyncString::new(SymbolSeq::new(vec![0], 1)?, eps);
    }
    for seed in 0..CIRCLE_SEED_ATTEMPTS {
        let half = |len: usize| -> Result<Option<SyncString>> {
            match construct_lll(&SamplerConfig::new(len, eps).with_seed(seed)) {
                Ok(out) => Ok(Some(out.string)),
                Err(Error::ResampleLimit { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        };
        let (Some(s1), Some(s2)) = (half(m.div_ceil(2))?, half(m / 2)?) else {
            continue;
        };
        let circle = build_circle(&s1, &s2)?;
        if check_circle(circle.symbols(), eps).ok() {
            return Ok(circle);
        }
    }
    Err(Error::Infeasible(format!(
        "no circle of length {m} at epsilon {eps} within {CIRCLE_SEED_ATTEMPTS} seeds"
    )))
}

/// The lexicographically first circle of length `m` over the smallest
/// alphabet admitting one.
pub fn exhaustive_circle(m: usize, eps: Epsilon) -> Result<SyncString> {
    if m == 0 || m > EXHAUSTIVE_CIRCLE_LIMIT {
        return Err(Error::Infeasible(format!(
            "exhaustive circle search supports lengths 1..={EXHAUSTIVE_CIRCLE_LIMIT}, got {m}"
        )));
    }
    for alphabet in 1..=m as Symbol {
        let mut word = Vec::with_capacity(m);
        if extend(&mut word, m, alphabet, 0, eps) {
            return SyncString::new(SymbolSeq::new(word, alphabet.into())?, eps);
        }
    }
    Err(Error::Infeasible(format!("no circle of length {m} at epsilon {eps}")))
}

fn extend(word: &mut Vec<Symbol>, m: usize, alphabet: Symbol, used: Symbol, eps: Epsilon) -> bool {
    if word.len() == m {
        return check_circle(word, eps).ok();
    }
    for s in 0..alphabet.min(used + 1) {
        word.push(s);
        if check_string(word, eps).ok() && extend(word, m, alphabet, used.max(s + 1), eps) {
            return true;
        }
        word.pop();
    }
    false
}
