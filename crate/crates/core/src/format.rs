//! Family file formats.
//!
//! Text form: a header line `n=<int>`, then one set per non-empty line written
//! `{}` or `{e1,e2,...}` with strictly ascending elements. Compact form: the
//! same header, then one hexadecimal word per line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::family::{FamilyError, GroundSet, SetFamily, SubsetWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Family { line: usize, source: FamilyError },
    #[error("line {line}: duplicate set (strict mode)")]
    Duplicate { line: usize },
    #[error("missing `n=<int>` header")]
    MissingHeader,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParseOptions {
    /// Reject duplicate sets instead of collapsing them.
    pub strict: bool,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Parses either format; a body whose first set line starts with `{` is text,
/// anything else is compact hex.
pub fn parse_family(input: &str, opts: ParseOptions) -> Result<SetFamily, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let n_text = header
        .strip_prefix("n=")
        .ok_or(ParseError::MissingHeader)?
        .trim();
    let n: u32 = n_text
        .parse()
        .map_err(|_| syntax(header_line, format!("bad ground size `{n_text}`")))?;
    let ground = GroundSet::new(n).map_err(|source| ParseError::Family { line: header_line, source })?;

    let mut words: Vec<(usize, SubsetWord)> = Vec::new();
    for (line, text) in lines {
        let w = if text.starts_with('{') {
            parse_set(ground, line, text)?
        } else {
            parse_hex(ground, line, text)?
        };
        words.push((line, w));
    }

    if opts.strict {
        let mut sorted = words.clone();
        sorted.sort_by_key(|&(line, w)| (w, line));
        if let Some(pair) = sorted.windows(2).find(|p| p[0].1 == p[1].1) {
            return Err(ParseError::Duplicate { line: pair[1].0 });
        }
    }
    Ok(SetFamily::from_words_unchecked(ground, words.into_iter().map(|(_, w)| w).collect()))
}

fn parse_set(ground: GroundSet, line: usize, text: &str) -> Result<SubsetWord, ParseError> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| syntax(line, "expected `{...}`"))?
        .trim();
    if inner.is_empty() {
        return Ok(SubsetWord::EMPTY);
    }
    let mut elements = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        let e: u32 = part
            .parse()
            .map_err(|_| syntax(line, format!("bad element `{part}`")))?;
        if let Some(&prev) = elements.last() {
            if e <= prev {
                return Err(syntax(line, "elements must be strictly ascending"));
            }
        }
        elements.push(e);
    }
    SubsetWord::from_elements(ground, &elements).map_err(|source| ParseError::Family { line, source })
}

fn parse_hex(ground: GroundSet, line: usize, text: &str) -> Result<SubsetWord, ParseError> {
    let digits = text.strip_prefix("0x").unwrap_or(text);
    let bits = u32::from_str_radix(digits, 16)
        .map_err(|_| syntax(line, format!("bad hex word `{text}`")))?;
    let w = SubsetWord(bits);
    ground
        .check_word(w)
        .map_err(|source| ParseError::Family { line, source })?;
    Ok(w)
}

pub fn to_text(f: &SetFamily) -> String {
    let mut out = format!("n={}\n", f.n());
    for w in f.iter() {
        writeln!(out, "{w}").unwrap();
    }
    out
}

pub fn to_hex(f: &SetFamily) -> String {
    let mut out = format!("n={}\n", f.n());
    for w in f.iter() {
        writeln!(out, "{:x}", w.bits()).unwrap();
    }
    out
}

/// One-line compact encoding used inside report records: hex words
/// separated by single spaces, empty string for the empty family.
pub fn to_compact(f: &SetFamily) -> String {
    let words: Vec<String> = f.iter().map(|w| format!("{:x}", w.bits())).collect();
    words.join(" ")
}

pub fn from_compact(n: u32, text: &str) -> Result<SetFamily, ParseError> {
    let ground = GroundSet::new(n).map_err(|source| ParseError::Family { line: 1, source })?;
    let words = text
        .split_whitespace()
        .map(|t| parse_hex(ground, 1, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SetFamily::from_words_unchecked(ground, words))
}
