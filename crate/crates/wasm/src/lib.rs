//! Browser bindings: sample a string, build a deterministic circle, and check
//! a symbol sequence with its witness.

use syncstr::{
    check_circle, check_string, construct_deterministic_with, construct_lll,
    construct_two_level_with, DeterministicOptions, Epsilon, SamplerConfig, TwoLevelOptions,
};
use wasm_bindgen::prelude::*;

/// Largest length the page will build or check.
pub const MAX_LENGTH: usize = 1 << 16;
/// Largest length the page will verify; the check is quartic.
pub const MAX_VERIFY_LENGTH: usize = 160;

#[wasm_bindgen]
#[derive(Clone, Debug)]
pub struct Generated {
    symbols: Vec<u32>,
    alphabet_size: u64,
    summary: String,
}

#[wasm_bindgen]
impl Generated {
    #[wasm_bindgen(getter)]
    pub fn symbols(&self) -> Vec<u32> {
        self.symbols.clone()
    }

    #[wasm_bindgen(getter, js_name = alphabetSize)]
    pub fn alphabet_size(&self) -> f64 {
        self.alphabet_size as f64
    }

    #[wasm_bindgen(getter)]
    pub fn summary(&self) -> String {
        self.summary.clone()
    }
}

#[wasm_bindgen]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    ok: bool,
    witness: Option<(usize, usize, usize)>,
    rotation: Option<usize>,
    edit_distance: Option<usize>,
    threshold: Option<String>,
}

#[wasm_bindgen]
impl Report {
    #[wasm_bindgen(getter)]
    pub fn ok(&self) -> bool {
        self.ok
    }

    /// `[i, j, k]`, 1-based, or empty when the check passed.
    #[wasm_bindgen(getter)]
    pub fn witness(&self) -> Vec<u32> {
        self.witness
            .map(|(i, j, k)| vec![i as u32, j as u32, k as u32])
            .unwrap_or_default()
    }

    /// 1-based start of the failing rotation, or 0.
    #[wasm_bindgen(getter)]
    pub fn rotation(&self) -> u32 {
        self.rotation.unwrap_or(0) as u32
    }

    #[wasm_bindgen(getter, js_name = editDistance)]
    pub fn edit_distance(&self) -> Option<u32> {
        self.edit_distance.map(|d| d as u32)
    }

    #[wasm_bindgen(getter)]
    pub fn threshold(&self) -> Option<String> {
        self.threshold.clone()
    }
}

fn parse_eps(epsilon: &str) -> Result<Epsilon, String> {
    epsilon.parse().map_err(|e: syncstr::Error| e.to_string())
}

fn check_length(n: usize, limit: usize) -> Result<(), String> {
    if n == 0 || n > limit {
        return Err(format!("length must be in 1..={limit}, got {n}"));
    }
    Ok(())
}

pub fn sample(n: usize, epsilon: &str, seed: u32) -> Result<Generated, String> {
    check_length(n, MAX_LENGTH)?;
    let eps = parse_eps(epsilon)?;
    let out = construct_lll(&SamplerConfig::new(n, eps).with_seed(seed.into())).map_err(|e| e.to_string())?;
    Ok(Generated {
        summary: format!(
            "alphabet {}, {} resamples",
            out.string.alphabet_size(),
            out.resamples
        ),
        alphabet_size: out.string.alphabet_size(),
        symbols: out.string.symbols().to_vec(),
    })
}

pub fn synthesize(n: usize, epsilon: &str, two_level: bool) -> Result<Generated, String> {
    check_length(n, MAX_LENGTH)?;
    let eps = parse_eps(epsilon)?;
    let out = if two_level {
        construct_two_level_with(n, eps, &TwoLevelOptions::default())
    } else {
        construct_deterministic_with(n, eps, &DeterministicOptions::default())
    }
    .map_err(|e| e.to_string())?;
    Ok(Generated {
        summary: format!(
            "block length {}, {} codewords over {} symbols, circle alphabet {}",
            out.plan.m,
            out.plan.ell,
            out.plan.code_alphabet,
            out.circle.alphabet_size()
        ),
        alphabet_size: out.string.alphabet_size(),
        symbols: out.string.symbols().to_vec(),
    })
}

pub fn check(symbols: &[u32], epsilon: &str, circle: bool) -> Result<Report, String> {
    check_length(symbols.len(), MAX_VERIFY_LENGTH)?;
    let eps = parse_eps(epsilon)?;
    let report = if circle {
        check_circle(symbols, eps)
    } else {
        check_string(symbols, eps)
    };
    Ok(match report.witness() {
        None => Report {
            ok: true,
            witness: None,
            rotation: None,
            edit_distance: None,
            threshold: None,
        },
        Some(w) => Report {
            ok: false,
            witness: Some(w.triple()),
            rotation: w.rotation,
            edit_distance: Some(w.edit_distance),
            threshold: Some(w.threshold.to_string()),
        },
    })
}

#[wasm_bindgen(js_name = sampleString)]
pub fn sample_string(n: usize, epsilon: &str, seed: u32) -> Result<Generated, JsError> {
    sample(n, epsilon, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = synthesizeCircle)]
pub fn synthesize_circle(n: usize, epsilon: &str, two_level: bool) -> Result<Generated, JsError> {
    synthesize(n, epsilon, two_level).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = verifySymbols)]
pub fn verify_symbols(symbols: Vec<u32>, epsilon: &str, circle: bool) -> Result<Report, JsError> {
    check(&symbols, epsilon, circle).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_then_check() {
        let g = sample(30, "1/2", 7).unwrap();
        assert_eq!(g.symbols.len(), 30);
        assert_eq!(g.alphabet_size, 96);
        assert!(check(&g.symbols, "1/2", false).unwrap().ok);
    }

    #[test]
    fn synthesized_circles_check() {
        let g = synthesize(24, "4/5", false).unwrap();
        assert!(check(&g.symbols, "4/5", true).unwrap().ok);
        let g = synthesize(64, "9/10", true).unwrap();
        assert!(check(&g.symbols, "9/10", true).unwrap().ok);
    }

    #[test]
    fn witness_is_reported() {
        let r = check(&[1, 1], "1/2", false).unwrap();
        assert!(!r.ok);
        assert_eq!(r.witness(), vec![1, 1, 2]);
        assert_eq!(r.threshold.as_deref(), Some("1/2"));
        let r = check(&[0, 1, 2, 0], "1/2", true).unwrap();
        assert_eq!((r.witness(), r.rotation()), (vec![3, 4, 1], 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(sample(10, "3/2", 0).is_err());
        assert!(sample(0, "1/2", 0).is_err());
        assert!(check(&[0; 200], "1/2", false).is_err());
        assert!(synthesize(4, "9/10", true).is_err());
    }
}
