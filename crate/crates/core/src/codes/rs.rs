use std::collections::HashSet;

use super::field::FieldElement;
use super::BlockCode;
use crate::error::{Error, Result};
use crate::seq::Symbol;

/// Evaluates the polynomial whose coefficients (low order first) are `message`
/// at every point, by Horner's rule.
pub fn rs_encode(message: &[FieldElement], points: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let degree = match message.first().or(points.first()) {
        Some(e) => e.degree(),
        None => return Ok(Vec::new()),
    };
    if let Some(e) = message.iter().chain(points).find(|e| e.degree() != degree) {
        return Err(Error::DegreeMismatch(degree, e.degree()));
    }
    if message.len() > points.len() {
        return Err(Error::TooFewEvaluationPoints {
            message: message.len(),
            points: points.len(),
        });
    }
    let mut seen = HashSet::with_capacity(points.len());
    if let Some(p) = points.iter().find(|p| !seen.insert(p.value())) {
        return Err(Error::RepeatedEvaluationPoint(p.value()));
    }
    let zero = FieldElement::zero(degree)?;
    Ok(points
        .iter()
        .map(|&x| {
            message
                .iter()
                .rev()
                .fold(zero, |acc, &c| acc.mul_raw(x).add_raw(c))
        })
        .collect())
}

/// A Reed–Solomon code over GF(2^degree) with `message_len` coefficients,
/// evaluated at the field elements `0, 1, 2, ...` in value order.
#[derive(Clone, Debug)]
pub struct ReedSolomon {
    degree: u8,
    points: Vec<FieldElement>,
    message_len: usize,
}

impl ReedSolomon {
    pub fn new(degree: u8, block_length: usize, message_len: usize) -> Result<Self> {
        super::field::irreducible_modulus(degree)?;
        if block_length as u64 > 1u64 << degree {
            return Err(Error::Infeasible(format!(
                "GF(2^{degree}) has only {} evaluation points, {block_length} requested",
                1u64 << degree
            )));
        }
        if message_len == 0 || message_len > block_length {
            return Err(Error::TooFewEvaluationPoints {
                message: message_len,
                points: block_length,
            });
        }
        let points = (0..block_length as u32)
            .map(|v| FieldElement::new(v, degree))
            .collect::<Result<_>>()?;
        Ok(ReedSolomon {
            degree,
            points,
            message_len,
        })
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn block_length(&self) -> usize {
        self.points.len()
    }

    pub fn message_len(&self) -> usize {
        self.message_len
    }

    /// `n - k + 1`.
    pub fn distance(&self) -> usize {
        self.points.len() - self.message_len + 1
    }

    /// Number of messages, saturating.
    pub fn capacity(&self) -> u128 {
        (1u128 << self.degree)
            .checked_pow(self.message_len as u32)
            .unwrap_or(u128::MAX)
    }

    /// The message whose base-2^degree digits (least significant first) are
    /// the coefficients.
    pub fn message(&self, index: u128) -> Vec<FieldElement> {
        let mask = (1u128 << self.degree) - 1;
        (0..self.message_len)
            .map(|d| {
                let digit = index.checked_shr((d * self.degree as usize) as u32).unwrap_or(0) & mask;
                FieldElement::new(digit as u32, self.degree).expect("digit fits the field")
            })
            .collect()
    }

    pub fn encode_index(&self, index: u128) -> Vec<Symbol> {
        rs_encode(&self.message(index), &self.points)
            .expect("parameters validated at construction")
            .into_iter()
            .map(FieldElement::value)
            .collect()
    }

    /// The codewords of messages `0..count`.
    pub fn code(&self, count: usize) -> Result<BlockCode> {
        if count as u128 > self.capacity() {
            return Err(Error::CodeSpaceExhausted {
                found: usize::try_from(self.capacity()).unwrap_or(usize::MAX),
                target: count,
            });
        }
        let words = (0..count as u128).map(|i| self.encode_index(i)).collect();
        BlockCode::new(self.points.len(), 1u64 << self.degree, words, self.distance())
    }
}
