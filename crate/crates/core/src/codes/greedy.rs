//! Greedy code search in the Gilbert–Varshamov style.
//!
//! Candidate words are visited in lexicographic order starting from the
//! all-zero word; a word is kept when its Hamming distance to every word kept
//! so far is at least `d`. Instead of touching every one of the `q^n`
//! candidates, the scan is a depth-first walk in the same order that drops a
//! prefix as soon as some kept word is already too close to every completion,
//! so it keeps exactly the words the plain scan would.

use num_traits::One;

use super::BlockCode;
use crate::epsilon::{ceil_to_usize, Rational};
use crate::error::{Error, Result};
use crate::seq::Symbol;

/// Default cap on visited search nodes.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 28;

/// Parameters of the greedy code lemma for a relative parameter `eps`:
/// alphabet `ceil(2e/eps)`, distance `ceil((1-eps) n)` and `ceil(2^(eps n))`
/// codewords.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GreedyParams {
    pub block_length: usize,
    pub distance: usize,
    pub alphabet_size: u64,
    pub target_count: usize,
}

impl GreedyParams {
    pub fn from_relative(eps: Rational, block_length: usize) -> Result<Self> {
        if eps <= Rational::from_integer(0) || eps > Rational::one() {
            return Err(Error::Infeasible(format!(
                "greedy code parameter must lie in (0, 1], got {eps}"
            )));
        }
        let n = Rational::from_integer(block_length as i128);
        let exponent = eps * n;
        let target_count = if exponent.is_integer() {
            1usize
                .checked_shl(exponent.to_integer() as u32)
                .ok_or_else(|| Error::Infeasible("codeword count overflows".into()))?
        } else {
            let f = to_f64(exponent);
            2f64.powf(f).ceil() as usize
        };
        Ok(GreedyParams {
            block_length,
            distance: ceil_to_usize((Rational::one() - eps) * n),
            alphabet_size: alphabet_for(eps),
            target_count,
        })
    }

    pub fn build(&self) -> Result<BlockCode> {
        greedy_code(
            self.block_length,
            self.distance,
            self.alphabet_size,
            self.target_count,
        )
    }
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `ceil(2e / eps)`.
pub(crate) fn alphabet_for(eps: Rational) -> u64 {
    let eps = to_f64(eps);
    (2.0 * std::f64::consts::E / eps).ceil() as u64
}

pub fn greedy_code(
    block_length: usize,
    distance: usize,
    alphabet_size: u64,
    target_count: usize,
) -> Result<BlockCode> {
    greedy_code_with_budget(
        block_length,
        distance,
        alphabet_size,
        target_count,
        DEFAULT_SEARCH_BUDGET,
    )
}

pub fn greedy_code_with_budget(
    block_length: usize,
    distance: usize,
    alphabet_size: u64,
    target_count: usize,
    budget: u64,
) -> Result<BlockCode> {
    if alphabet_size < 2 {
        return Err(Error::Infeasible("greedy code needs at least two symbols".into()));
    }
    if alphabet_size > u64::from(Symbol::MAX) + 1 {
        return Err(Error::AlphabetTooLarge(alphabet_size.into()));
    }
    if block_length == 0 || distance == 0 || distance > block_length {
        return Err(Error::Infeasible(format!(
            "need 1 <= distance <= block length, got distance {distance} and length {block_length}"
        )));
    }
    let mut search = Search {
        kept: Vec::with_capacity(target_count),
        len: block_length,
        distance,
        q: alphabet_size as Symbol,
        nodes: 0,
        budget,
    };
    let mut start = vec![0; block_length];
    while search.kept.len() < target_count {
        match search.next_from(&start)? {
            Some(word) => {
                let succ = successor(&word, search.q);
                search.kept.push(word);
                match succ {
                    Some(s) => start = s,
                    None => break,
                }
            }
            None => break,
        }
    }
    if search.kept.len() < target_count {
        return Err(Error::CodeSpaceExhausted {
            found: search.kept.len(),
            target: target_count,
        });
    }
    BlockCode::new(block_length, alphabet_size, search.kept, distance)
}

fn successor(word: &[Symbol], q: Symbol) -> Option<Vec<Symbol>> {
    let mut next = word.to_vec();
    for pos in (0..next.len()).rev() {
        if next[pos] + 1 < q {
            next[pos] += 1;
            return Some(next);
        }
        next[pos] = 0;
    }
    None
}

struct Search {
    kept: Vec<Vec<Symbol>>,
    len: usize,
    distance: usize,
    q: Symbol,
    nodes: u64,
    budget: u64,
}

impl Search {
    /// Lexicographically smallest word `>= start` far enough from every kept word.
    fn next_from(&mut self, start: &[Symbol]) -> Result<Option<Vec<Symbol>>> {
        let mut word = vec![0; self.len];
        let mut mismatches = vec![0usize; self.kept.len()];
        let found = self.descend(0, true, start, &mut word, &mut mismatches)?;
        Ok(found.then_some(word))
    }

    fn descend(
        &mut self,
        pos: usize,
        tight: bool,
        start: &[Symbol],
        word: &mut [Symbol],
        mismatches: &mut [usize],
    ) -> Result<bool> {
        if pos == self.len {
            return Ok(true);
        }
        let remaining = self.len - pos - 1;
        let low = if tight { start[pos] } else { 0 };
        for sym in low..self.q {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            let mut feasible = true;
            for (c, w) in self.kept.iter().enumerate() {
                if w[pos] != sym {
                    mismatches[c] += 1;
                }
                if mismatches[c] + remaining < self.distance {
                    feasible = false;
                }
            }
            word[pos] = sym;
            if feasible
                && self.descend(pos + 1, tight && sym == low, start, word, mismatches)?
            {
                return Ok(true);
            }
            for (c, w) in self.kept.iter().enumerate() {
                if w[pos] != sym {
                    mismatches[c] -= 1;
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::hamming_distance;

    /// Plain lexicographic scan over all q^n words.
    fn naive_greedy(n: usize, d: usize, q: u32, target: usize) -> Vec<Vec<u32>> {
        let mut kept: Vec<Vec<u32>> = Vec::new();
        let total = (q as usize).pow(n as u32);
        for idx in 0..total {
            if kept.len() == target {
                break;
            }
            let mut w = vec![0; n];
            let mut x = idx;
            for pos in (0..n).rev() {
                w[pos] = (x % q as usize) as u32;
                x /= q as usize;
            }
            if kept
                .iter()
                .all(|k| hamming_distance(k, &w).unwrap() >= d)
            {
                kept.push(w);
            }
        }
        kept
    }

    #[test]
    fn examples() {
        let code = greedy_code(2, 2, 3, 3).unwrap();
        assert_eq!(code.codewords(), &[vec![0, 0], vec![1, 1], vec![2, 2]]);

        let code = greedy_code(1, 1, 5, 5).unwrap();
        assert_eq!(code.len(), 5);
        assert!(code.codewords().iter().enumerate().all(|(i, w)| w == &vec![i as u32]));
    }

    #[test]
    fn lemma_parameters_at_one_half() {
        let p = GreedyParams::from_relative(Rational::new(1, 2), 4).unwrap();
        assert_eq!(p.alphabet_size, 11);
        assert_eq!(p.distance, 2);
        assert_eq!(p.target_count, 4);
        let code = p.build().unwrap();
        assert_eq!(code.len(), 4);
    }

    #[test]
    fn exhaustion_reports_progress() {
        match greedy_code(2, 2, 3, 4) {
            Err(Error::CodeSpaceExhausted { found: 3, target: 4 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(greedy_code(2, 3, 3, 1).is_err());
        assert!(greedy_code(2, 1, 1, 1).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            greedy_code_with_budget(6, 5, 3, 1000, 50),
            Err(Error::SearchBudgetExceeded(50))
        ));
    }

    #[test]
    fn matches_plain_scan() {
        for n in 1..=4usize {
            for q in 2..=4u32 {
                for d in 1..=n {
                    let target = (q as usize).pow(n as u32);
                    let expected = naive_greedy(n, d, q, target);
                    // ask for exactly what the scan finds, then one more
                    let code = greedy_code(n, d, q.into(), expected.len()).unwrap();
                    assert_eq!(code.codewords(), expected.as_slice(), "n={n} q={q} d={d}");
                    assert!(matches!(
                        greedy_code(n, d, q.into(), expected.len() + 1),
                        Err(Error::CodeSpaceExhausted { .. })
                    ));
                }
            }
        }
    }
}
