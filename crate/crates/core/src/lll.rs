//! Randomized construction by window-avoiding sampling and local resampling.
//!
//! Each position draws one independent tape entry `P_i`, uniform on
//! `1..=|Σ| - h_i` with `h_i = min(i - 1, t - 1)`. The symbol emitted is the
//! one of rank `h_i + P_i` in an ordering of the alphabet that puts the
//! previous `h_i` symbols first (most recent first) and keeps every other
//! symbol in its previous relative order. Any `t` consecutive symbols are
//! therefore distinct, and resampling an interval only has to redraw the tape
//! entries it depends on.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::epsilon::{ceil_to_usize, Epsilon, Rational};
use crate::error::{Error, Result};
use crate::seq::{Symbol, SymbolSeq, SyncString};
use crate::verifier::{check_string, first_bad_interval};

pub const DEFAULT_C1: i128 = 24;
pub const DEFAULT_C2: i128 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub n: usize,
    pub epsilon: Epsilon,
    /// Alphabet constant: `|Σ| = ceil(c1 / eps^2)`.
    pub c1: Rational,
    /// Window constant: `t = ceil(c2 / eps^2)`.
    pub c2: Rational,
    pub seed: u64,
    pub max_resamples: usize,
}

impl SamplerConfig {
    /// Default constants, seed 0 and a resample cap of `10 n`.
    pub fn new(n: usize, epsilon: Epsilon) -> Self {
        SamplerConfig {
            n,
            epsilon,
            c1: Rational::from_integer(DEFAULT_C1),
            c2: Rational::from_integer(DEFAULT_C2),
            seed: 0,
            max_resamples: 10 * n,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn alphabet_size(&self) -> usize {
        ceil_to_usize(self.c1 / self.eps_squared())
    }

    /// Window length `t`.
    pub fn window(&self) -> usize {
        ceil_to_usize(self.c2 / self.eps_squared())
    }

    fn eps_squared(&self) -> Rational {
        let e = self.epsilon.ratio();
        e * e
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be positive".into()));
        }
        if self.c1 <= Rational::zero() || self.c2 <= Rational::zero() {
            return Err(Error::InvalidConfig("c1 and c2 must be positive".into()));
        }
        if self.c2 >= self.c1 {
            return Err(Error::InvalidConfig(format!(
                "need c2 < c1, got c1={} c2={}",
                self.c1, self.c2
            )));
        }
        let (sigma, t) = (self.alphabet_size(), self.window());
        if sigma <= t {
            return Err(Error::InvalidConfig(format!(
                "alphabet {sigma} must exceed window {t}"
            )));
        }
        if t < 2 {
            return Err(Error::InvalidConfig(format!("window {t} must be at least 2")));
        }
        if sigma as u64 > u64::from(Symbol::MAX) + 1 {
            return Err(Error::AlphabetTooLarge(sigma as u128));
        }
        Ok(())
    }

    /// Upper end of the range of tape entry `index` (0-based).
    pub fn tape_bound(&self, index: usize) -> u64 {
        (self.alphabet_size() - index.min(self.window() - 1)) as u64
    }
}

/// The independent variables `P_1..P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomTape {
    entries: Vec<u32>,
}

impl RandomTape {
    pub fn from_entries(entries: Vec<u32>) -> Self {
        RandomTape { entries }
    }

    pub fn sample<R: Rng>(cfg: &SamplerConfig, rng: &mut R) -> Self {
        let entries = (0..cfg.n)
            .map(|i| rng.random_range(1..=cfg.tape_bound(i) as u32))
            .collect();
        RandomTape { entries }
    }

    /// Redraws the 0-based entries `start..=end`.
    pub fn redraw<R: Rng>(&mut self, cfg: &SamplerConfig, start: usize, end: usize, rng: &mut R) {
        for i in start..=end {
            self.entries[i] = rng.random_range(1..=cfg.tape_bound(i) as u32);
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Symbol ordering state: the window, then recently evicted symbols (most
/// recent first), then never-used symbols in increasing order.
struct Ordering {
    window: VecDeque<Symbol>,
    recycled: VecDeque<Symbol>,
    used: BTreeSet<Symbol>,
    limit: usize,
}

impl Ordering {
    fn new(window: usize) -> Self {
        Ordering {
            window: VecDeque::new(),
            recycled: VecDeque::new(),
            used: BTreeSet::new(),
            limit: window - 1,
        }
    }

    /// Symbol of rank `h + p` (`p` is 1-based).
    fn pick(&self, p: usize) -> Symbol {
        if p <= self.recycled.len() {
            return self.recycled[p - 1];
        }
        let mut candidate = (p - self.recycled.len() - 1) as Symbol;
        for &u in &self.used {
            if u <= candidate {
                candidate += 1;
            } else {
                break;
            }
        }
        candidate
    }

    fn push(&mut self, s: Symbol) {
        if let Some(at) = self.recycled.iter().position(|&r| r == s) {
            self.recycled.remove(at);
        }
        self.used.insert(s);
        self.window.push_front(s);
        if self.window.len() > self.limit {
            let evicted = self.window.pop_back().expect("window is non-empty");
            self.recycled.push_front(evicted);
        }
    }
}

/// Maps the tape to symbols, keeping `prefix[..from_index - 1]` and deriving
/// positions `from_index..=n` (1-based) from the tape.
pub fn derive_string(
    cfg: &SamplerConfig,
    tape: &RandomTape,
    prefix: &[Symbol],
    from_index: usize,
) -> Result<SymbolSeq> {
    cfg.validate()?;
    if tape.len() != cfg.n {
        return Err(Error::LengthMismatch {
            left: tape.len(),
            right: cfg.n,
        });
    }
    let keep = from_index.max(1) - 1;
    if keep > prefix.len() || keep > cfg.n {
        return Err(Error::InvalidConfig(format!(
            "cannot resume at position {from_index} with a prefix of length {}",
            prefix.len()
        )));
    }
    let mut order = Ordering::new(cfg.window());
    let mut out = Vec::with_capacity(cfg.n);
    for &s in &prefix[..keep] {
        order.push(s);
        out.push(s);
    }
    for (index, &p) in tape.entries().iter().enumerate().skip(keep) {
        let bound = cfg.tape_bound(index);
        if p == 0 || u64::from(p) > bound {
            return Err(Error::CorruptTape {
                index: index + 1,
                value: p.into(),
                bound,
            });
        }
        let s = order.pick(p as usize);
        order.push(s);
        out.push(s);
    }
    SymbolSeq::new(out, cfg.alphabet_size() as u64)
}

#[derive(Clone, Debug)]
pub struct LllOutcome {
    pub string: SyncString,
    pub tape: RandomTape,
    pub resamples: usize,
}

pub fn construct_lll(cfg: &SamplerConfig) -> Result<LllOutcome> {
    construct_lll_observed(cfg, |_| {})
}

/// As [`construct_lll`], calling `observe` on every derived string,
/// including the initial one and the final one.
pub fn construct_lll_observed<F>(cfg: &SamplerConfig, mut observe: F) -> Result<LllOutcome>
where
    F: FnMut(&[Symbol]),
{
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tape = RandomTape::sample(cfg, &mut rng);
    let mut seq = derive_string(cfg, &tape, &[], 1)?;
    observe(seq.symbols());
    // Intervals spanning fewer than t positions hold distinct symbols.
    let min_span = cfg.window();
    let mut resamples = 0;
    while let Some((i, k)) = first_bad_interval(seq.symbols(), cfg.epsilon, min_span) {
        if resamples >= cfg.max_resamples {
            return Err(Error::ResampleLimit {
                resamples,
                start: i,
                end: k,
            });
        }
        tape.redraw(cfg, i - 1, k - 1, &mut rng);
        seq = derive_string(cfg, &tape, seq.symbols(), i)?;
        observe(seq.symbols());
        resamples += 1;
    }
    if !check_string(seq.symbols(), cfg.epsilon).ok() {
        return Err(Error::NotSynchronizing {
            what: "sampler output",
            epsilon: cfg.epsilon.to_string(),
        });
    }
    Ok(LllOutcome {
        string: SyncString::new(seq, cfg.epsilon)?,
        tape,
        resamples,
    })
}

impl SamplerConfig {
    /// Parses a positive constant written as an integer, a fraction `a/b` or a
    /// decimal such as `2.5`, exactly.
    pub fn parse_constant(s: &str) -> Result<Rational> {
        let bad = || Error::InvalidConfig(format!("not a positive constant: {s:?}"));
        let s = s.trim();
        let value = if let Some((a, b)) = s.split_once('/') {
            let a: i128 = a.trim().parse().map_err(|_| bad())?;
            let b: i128 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Rational::new(a, b)
        } else if let Some((whole, frac)) = s.split_once('.') {
            if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let scale = 10i128.pow(frac.len() as u32);
            let whole: i128 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
            let frac: i128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
            Rational::new(whole * scale + frac, scale)
        } else {
            Rational::from_integer(s.parse().map_err(|_| bad())?)
        };
        if value <= Rational::zero() {
            return Err(bad());
        }
        Ok(value)
    }
}
