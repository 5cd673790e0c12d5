//! The two line-oriented text formats.
//!
//! Cayley tables:
//!
//! ```text
//! # optional comments
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! The first significant line is the order `n`, followed by `n` lines of
//! `n` space-separated 0-based entries.
//!
//! Translation triples:
//!
//! ```text
//! 2 2
//! S 0 1
//! T 0 1
//! P 0 1
//! S 1 0
//! T 1 0
//! P 0 1
//! ```
//!
//! The first line is `n m` (element count and permutation degree);
//! then each element contributes an `S`, a `T` and a `P` line, in that
//! order, each carrying `m` images.
//!
//! In both formats `#` starts a comment and blank lines are skipped.
//! Parsing rejects out-of-range entries, non-bijective image lines and a
//! zero order, and round-trips exactly with the emitters.

use std::fmt;

use moufang_core::{CayleyTable, Perm, TranslationTriple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number; 0 means the input ended early.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            message: message.into(),
        }
    }

    fn eof(message: impl Into<String>) -> ParseError {
        ParseError {
            line: 0,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "unexpected end of input: {}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

/// Yields `(1-based line number, content)` with comments stripped and
/// blank lines skipped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            None
        } else {
            Some((i + 1, content))
        }
    })
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::at(line, format!("{what}: `{token}` is not a number")))
}

pub fn parse_cayley(text: &str) -> Result<CayleyTable, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::eof("expected the table order"))?;
    let mut tokens = header.split_whitespace();
    let n = parse_usize(
        header_line,
        tokens.next().expect("significant lines are non-empty"),
        "table order",
    )?;
    if tokens.next().is_some() {
        return Err(ParseError::at(
            header_line,
            "expected a single number, the table order",
        ));
    }
    if n == 0 {
        return Err(ParseError::at(header_line, "order must be positive"));
    }

    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (line, content) = lines
            .next()
            .ok_or_else(|| ParseError::eof(format!("expected row {r} of {n}")))?;
        let mut row = Vec::with_capacity(n);
        for token in content.split_whitespace() {
            let value = parse_usize(line, token, "table entry")?;
            if value >= n {
                return Err(ParseError::at(
                    line,
                    format!("entry {value} out of range for order {n}"),
                ));
            }
            row.push(value);
        }
        if row.len() != n {
            return Err(ParseError::at(
                line,
                format!("row {r} has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::at(line, "unexpected content after the table"));
    }
    Ok(CayleyTable::from_rows(rows).expect("rows validated above"))
}

pub fn emit_cayley(tbl: &CayleyTable) -> String {
    let mut out = format!("{}\n", tbl.order());
    for row in tbl.rows() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_triple(text: &str) -> Result<TranslationTriple, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::eof("expected the header `n m`"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(ParseError::at(
            header_line,
            "expected two numbers, the element count and the degree",
        ));
    }
    let n = parse_usize(header_line, tokens[0], "element count")?;
    let m = parse_usize(header_line, tokens[1], "degree")?;
    if n == 0 || m == 0 {
        return Err(ParseError::at(
            header_line,
            "element count and degree must be positive",
        ));
    }

    let mut s = Vec::with_capacity(n);
    let mut t = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(n);
    for g in 0..n {
        for letter in ["S", "T", "P"] {
            let (line, content) = lines.next().ok_or_else(|| {
                ParseError::eof(format!("expected the {letter} line for element {g}"))
            })?;
            let mut tokens = content.split_whitespace();
            let tag = tokens.next().expect("significant lines are non-empty");
            if tag != letter {
                return Err(ParseError::at(
                    line,
                    format!("expected the {letter} line for element {g}, found `{tag}`"),
                ));
            }
            let mut images = Vec::with_capacity(m);
            for token in tokens {
                images.push(parse_usize(line, token, "image")?);
            }
            if images.len() != m {
                return Err(ParseError::at(
                    line,
                    format!(
                        "{letter} line for element {g} has {} images, expected {m}",
                        images.len()
                    ),
                ));
            }
            let perm = Perm::from_images(images).map_err(|e| {
                ParseError::at(
                    line,
                    format!("{letter} line for element {g} is not a permutation: {e}"),
                )
            })?;
            match letter {
                "S" => s.push(perm),
                "T" => t.push(perm),
                _ => p.push(perm),
            }
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::at(line, "unexpected content after the triple"));
    }
    Ok(TranslationTriple::new(s, t, p).expect("shapes validated above"))
}

pub fn emit_triple(triple: &TranslationTriple) -> String {
    let mut out = format!("{} {}\n", triple.loop_order(), triple.degree());
    for g in 0..triple.loop_order() {
        out.push_str(&format!("S {}\n", triple.s(g)));
        out.push_str(&format!("T {}\n", triple.t(g)));
        out.push_str(&format!("P {}\n", triple.p(g)));
    }
    out
}
