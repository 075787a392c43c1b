mod common;

use common::naive_circle_violation;
use proptest::prelude::*;
use syncstr::{build_circle, check_circle, construct_lll, Epsilon, SamplerConfig, SymbolSeq, SyncString};

fn lll(n: usize, e: Epsilon, seed: u64) -> SyncString {
    construct_lll(&SamplerConfig::new(n, e).with_seed(seed)).unwrap().string
}

#[test]
fn halves_of_thirteen_and_twelve() {
    let e = Epsilon::new(1, 2).unwrap();
    for seed in 0..3 {
        let c = build_circle(&lll(13, e, seed), &lll(12, e, seed + 100)).unwrap();
        assert_eq!(c.len(), 25);
        assert_eq!(c.alphabet_size(), 192);
        assert!(check_circle(c.symbols(), e).ok(), "seed {seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn small_circles_pass_and_agree_with_oracle(n in 2usize..=12, seed in any::<u64>(), pick in 0usize..3) {
        let (num, den) = [(1, 2), (2, 3), (3, 4)][pick];
        let e = Epsilon::new(num, den).unwrap();
        let s1 = lll(n.div_ceil(2), e, seed);
        let s2 = lll(n / 2, e, seed ^ 1);
        let c = build_circle(&s1, &s2).unwrap();
        prop_assert_eq!(c.alphabet_size(), s1.alphabet_size() + s2.alphabet_size());
        let (left, right) = c.symbols().split_at(s1.len());
        prop_assert!(left.iter().all(|&x| u64::from(x) < s1.alphabet_size()));
        prop_assert!(right.iter().all(|&x| u64::from(x) >= s1.alphabet_size()));
        prop_assert!(check_circle(c.symbols(), e).ok());
        prop_assert!(naive_circle_violation(c.symbols(), num, den).is_none());
    }

    #[test]
    fn larger_circles_pass(n in 26usize..=40, seed in any::<u64>()) {
        let e = Epsilon::new(1, 2).unwrap();
        let c = build_circle(&lll(n.div_ceil(2), e, seed), &lll(n / 2, e, seed ^ 1)).unwrap();
        prop_assert!(check_circle(c.symbols(), e).ok());
    }

    #[test]
    fn shift_is_disjoint(a in prop::collection::vec(0u32..5, 1..6), b in prop::collection::vec(0u32..7, 1..6)) {
        prop_assume!(a.len() == b.len() || a.len() == b.len() + 1);
        let e = Epsilon::new(1, 2).unwrap();
        let s1 = SyncString::new(SymbolSeq::new(a.clone(), 5).unwrap(), e).unwrap();
        let s2 = SyncString::new(SymbolSeq::new(b.clone(), 7).unwrap(), e).unwrap();
        let c = build_circle(&s1, &s2).unwrap();
        prop_assert_eq!(&c.symbols()[..a.len()], a.as_slice());
        let shifted: Vec<u32> = b.iter().map(|x| x + 5).collect();
        prop_assert_eq!(&c.symbols()[a.len()..], shifted.as_slice());
        prop_assert_eq!(c.alphabet_size(), 12);
    }
}
