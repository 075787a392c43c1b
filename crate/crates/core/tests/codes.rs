mod common;

use common::{min_pairwise_hamming, naive_greedy};
use proptest::prelude::*;
use syncstr::codes::{concat_code, greedy_code, FieldElement, GreedyParams, ReedSolomon};
use syncstr::{audit_code, rs_encode, BlockCode, Error, Rational};

#[test]
fn greedy_reference_examples() {
    let c = greedy_code(2, 2, 3, 3).unwrap();
    assert_eq!(c.codewords(), &[vec![0, 0], vec![1, 1], vec![2, 2]]);
    let q = 6;
    let c = greedy_code(1, 1, q, q as usize).unwrap();
    assert_eq!(c.codewords(), (0..q as u32).map(|s| vec![s]).collect::<Vec<_>>().as_slice());
}

#[test]
fn lemma_parameters() {
    let p = GreedyParams::from_relative(Rational::new(1, 2), 4).unwrap();
    assert_eq!((p.alphabet_size, p.distance, p.target_count), (11, 2, 4));
    let code = p.build().unwrap();
    assert!(code.len() >= 4);
    assert!(min_pairwise_hamming(code.codewords()) >= 2);
}

#[test]
fn rs_reference_examples() {
    let fe = |v| FieldElement::new(v, 3).unwrap();
    let points: Vec<_> = (0..8).map(fe).collect();
    let constant = rs_encode(&[fe(5)], &points).unwrap();
    assert!(constant.iter().all(|x| x.value() == 5));
    let identity = rs_encode(&[fe(0), fe(1)], &points).unwrap();
    assert_eq!(identity, points);
    let line = rs_encode(&[fe(1), fe(1)], &[fe(0), fe(1)]).unwrap();
    assert_eq!(line.iter().map(|x| x.value()).collect::<Vec<_>>(), vec![1, 0]);
    assert!(matches!(
        rs_encode(&[fe(1)], &[fe(2), fe(2)]),
        Err(Error::RepeatedEvaluationPoint(2))
    ));
}

#[test]
fn rs_distance_is_exhaustive() {
    let rs = ReedSolomon::new(4, 8, 2).unwrap();
    let words: Vec<Vec<u32>> = (0..256u128).map(|i| rs.encode_index(i)).collect();
    assert_eq!(min_pairwise_hamming(&words), 7);
}

#[test]
fn concatenation_examples() {
    let outer = BlockCode::new(2, 2, vec![vec![0, 1], vec![1, 0]], 2).unwrap();
    let inner = BlockCode::new(2, 2, vec![vec![0, 0], vec![1, 1]], 2).unwrap();
    let c = concat_code(&outer, &inner).unwrap();
    assert_eq!(c.codewords(), &[vec![0, 0, 1, 1], vec![1, 1, 0, 0]]);
    assert_eq!(audit_code(&c, None).min_hamming_distance, Some(4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn greedy_matches_plain_scan(n in 1usize..=5, q in 2u32..=4, d_frac in 0.0f64..1.0, extra in 0usize..3) {
        let d = 1 + (d_frac * n as f64) as usize % n;
        let full = naive_greedy(n, d, q, usize::MAX);
        let target = full.len().saturating_sub(extra).max(1);
        let code = greedy_code(n, d, q.into(), target).unwrap();
        prop_assert_eq!(code.codewords(), &full[..target]);
        if code.len() >= 2 {
            prop_assert!(min_pairwise_hamming(code.codewords()) >= d);
        }
    }

    #[test]
    fn concatenated_distance_at_least_product(
        outer_k in 1usize..=2,
        outer_count in 2usize..=6,
        inner_len in 1usize..=3,
        inner_d_frac in 0.0f64..1.0,
    ) {
        let rs = ReedSolomon::new(2, 4, outer_k).unwrap();
        let count = outer_count.min(rs.capacity() as usize);
        let outer = rs.code(count).unwrap();
        let inner_d = 1 + (inner_d_frac * inner_len as f64) as usize % inner_len;
        let inner = match greedy_code(inner_len, inner_d, 5, 4) {
            Ok(c) => c,
            Err(_) => return Ok(()),
        };
        let c = concat_code(&outer, &inner).unwrap();
        prop_assert_eq!(c.block_length(), 4 * inner_len);
        let measured = min_pairwise_hamming(c.codewords());
        prop_assert!(measured >= outer.design_distance() * inner.design_distance());
        prop_assert!(audit_code(&c, None).min_hamming_distance.unwrap() >= c.design_distance());
    }
}
