//! Text formats for strings and codebooks.
//!
//! A string artifact is three ASCII lines:
//!
//! ```text
//! SYNCSTR v1
//! n=<int> q=<int> epsilon=<num>/<den> kind=<string|circle>
//! <space-separated symbols>
//! ```
//!
//! A codebook is a header `blocklen q count distance` followed by one
//! codeword per line.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::codes::BlockCode;
use crate::epsilon::Epsilon;
use crate::error::{Error, Result};
use crate::seq::{Symbol, SymbolSeq, SyncString};

pub const MAGIC: &str = "SYNCSTR v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    String,
    Circle,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::String => "string",
            Kind::Circle => "circle",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "string" => Ok(Kind::String),
            "circle" => Ok(Kind::Circle),
            other => Err(format_error(2, format!("unknown kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub string: SyncString,
    pub kind: Kind,
}

fn format_error(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn join(symbols: &[Symbol]) -> String {
    let mut out = String::with_capacity(symbols.len() * 4);
    for (idx, s) in symbols.iter().enumerate() {
        if idx > 0 {
            out.push(' ');
        }
        out.push_str(&s.to_string());
    }
    out
}

fn parse_symbols(text: &str, line: usize) -> Result<Vec<Symbol>> {
    text.split_ascii_whitespace()
        .map(|tok| {
            tok.parse::<Symbol>()
                .map_err(|_| format_error(line, format!("bad symbol {tok:?}")))
        })
        .collect()
}

impl Artifact {
    pub fn new(string: SyncString, kind: Kind) -> Self {
        Artifact { string, kind }
    }

    pub fn encode(&self) -> String {
        let s = &self.string;
        format!(
            "{MAGIC}\nn={} q={} epsilon={} kind={}\n{}\n",
            s.len(),
            s.alphabet_size(),
            s.epsilon(),
            self.kind,
            join(s.symbols())
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next() != Some(MAGIC) {
            return Err(format_error(1, format!("expected {MAGIC:?}")));
        }
        let header = lines.next().ok_or_else(|| format_error(2, "missing header"))?;
        let (mut n, mut q, mut eps, mut kind) = (None, None, None, None);
        for field in header.split(' ') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| format_error(2, format!("bad field {field:?}")))?;
            let bad = |what: &str| format_error(2, format!("bad {what} {value:?}"));
            match key {
                "n" => n = Some(value.parse::<usize>().map_err(|_| bad("length"))?),
                "q" => q = Some(value.parse::<u64>().map_err(|_| bad("alphabet size"))?),
                "epsilon" => eps = Some(value.parse::<Epsilon>().map_err(|_| bad("epsilon"))?),
                "kind" => kind = Some(value.parse::<Kind>()?),
                _ => return Err(format_error(2, format!("unknown field {key:?}"))),
            }
        }
        let missing = |what: &str| format_error(2, format!("missing {what}"));
        let n = n.ok_or_else(|| missing("n"))?;
        let q = q.ok_or_else(|| missing("q"))?;
        let eps = eps.ok_or_else(|| missing("epsilon"))?;
        let kind = kind.ok_or_else(|| missing("kind"))?;
        let body = lines.next().ok_or_else(|| format_error(3, "missing symbols"))?;
        let symbols = parse_symbols(body, 3)?;
        if symbols.len() != n {
            return Err(format_error(3, format!("header says n={n}, found {} symbols", symbols.len())));
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(format_error(4, format!("unexpected trailing content {extra:?}")));
        }
        let seq = SymbolSeq::new(symbols, q).map_err(|e| format_error(3, e.to_string()))?;
        let string = SyncString::new(seq, eps).map_err(|e| format_error(3, e.to_string()))?;
        Ok(Artifact { string, kind })
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.encode())?;
        Ok(())
    }

    pub fn read_from(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

pub fn encode_codebook(code: &BlockCode) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        code.block_length(),
        code.alphabet_size(),
        code.len(),
        code.design_distance()
    );
    for w in code.codewords() {
        out.push_str(&join(w));
        out.push('\n');
    }
    out
}

pub fn parse_codebook(text: &str) -> Result<BlockCode> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| format_error(1, "missing header"))?;
    let fields: Vec<u64> = header
        .split_ascii_whitespace()
        .map(|t| t.parse().map_err(|_| format_error(1, format!("bad number {t:?}"))))
        .collect::<Result<_>>()?;
    let [blocklen, q, count, distance] = fields[..] else {
        return Err(format_error(1, "expected `blocklen q count distance`"));
    };
    let mut words = Vec::with_capacity(count as usize);
    for (idx, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        words.push(parse_symbols(line, idx + 2)?);
    }
    if words.len() as u64 != count {
        return Err(format_error(1, format!("header says {count} codewords, found {}", words.len())));
    }
    BlockCode::new(blocklen as usize, q, words, distance as usize)
        .map_err(|e| format_error(2, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Artifact {
        let seq = SymbolSeq::new(vec![0, 3, 1, 2], 5).unwrap();
        Artifact::new(SyncString::new(seq, Epsilon::new(1, 2).unwrap()).unwrap(), Kind::Circle)
    }

    #[test]
    fn artifact_bytes() {
        assert_eq!(
            sample().encode(),
            "SYNCSTR v1\nn=4 q=5 epsilon=1/2 kind=circle\n0 3 1 2\n"
        );
    }

    #[test]
    fn artifact_round_trip() {
        let a = sample();
        assert_eq!(Artifact::parse(&a.encode()).unwrap(), a);
    }

    #[test]
    fn artifact_errors() {
        let good = sample().encode();
        let cases = [
            good.replace("SYNCSTR v1", "SYNCSTR v2"),
            good.replace("n=4", "n=5"),
            good.replace("1/2", "0.5"),
            good.replace("kind=circle", "kind=ring"),
            good.replace("0 3 1 2", "0 3 1 9"),
            good.replace("0 3 1 2", "0 3 x 2"),
            good.replace(" q=5", ""),
            format!("{good}junk\n"),
            "SYNCSTR v1\n".to_string(),
        ];
        for text in cases {
            assert!(matches!(Artifact::parse(&text), Err(Error::Format { .. })), "{text:?}");
        }
    }

    #[test]
    fn codebook_round_trip() {
        let code = BlockCode::new(2, 3, vec![vec![0, 0], vec![1, 1], vec![2, 2]], 2).unwrap();
        let text = encode_codebook(&code);
        assert_eq!(text, "2 3 3 2\n0 0\n1 1\n2 2\n");
        assert_eq!(parse_codebook(&text).unwrap(), code);
        assert!(parse_codebook("2 3 2 2\n0 0\n").is_err());
        assert!(parse_codebook("2 3 1\n0 0\n").is_err());
        assert!(parse_codebook("2 3 1 2\n0 0 0\n").is_err());
    }
}
