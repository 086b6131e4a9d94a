//! The line-oriented algebra file format.
//!
//! ```text
//! # Kodaira surface
//! n 2
//! A 2 1 1 1 0
//! ```
//!
//! `n` must be the first non-comment line. Each `A j k l RE IM` line gives
//! the real and imaginary parts of `A^j_{kℓ}` as `INT` or `INT/POSINT`.
//! Support is not checked here; see [`StructureConstants::validate`].

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exterior::StructureConstants;
use crate::scalar::{format_rational, parse_rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (offset, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(offset),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..offset],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

pub fn parse_algebra(text: &str) -> Result<StructureConstants, ParseError> {
    let mut n: Option<(usize, usize)> = None;
    let mut entries: BTreeMap<(usize, usize, usize), (Scalar, usize)> = BTreeMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let err = |column: usize, message: String| ParseError {
            line,
            column,
            message,
        };
        let toks = tokens(raw);
        let Some(head) = toks.first() else {
            continue;
        };
        if head.text.starts_with('#') {
            continue;
        }
        match (head.text, n) {
            ("n", None) => {
                if toks.len() != 2 {
                    return Err(err(head.column, "expected `n INT`".into()));
                }
                let value: usize = toks[1].text.parse().map_err(|_| {
                    err(
                        toks[1].column,
                        format!("invalid dimension `{}`", toks[1].text),
                    )
                })?;
                n = Some((value, line));
            }
            ("n", Some((_, first))) => {
                return Err(err(
                    head.column,
                    format!("dimension already declared on line {first}"),
                ));
            }
            (_, None) => {
                return Err(err(
                    head.column,
                    "the first declaration must be `n INT`".into(),
                ));
            }
            ("A", Some((dim, _))) => {
                if toks.len() != 6 {
                    return Err(err(head.column, "expected `A j k l RE IM`".into()));
                }
                let mut idx = [0usize; 3];
                for (slot, tok) in idx.iter_mut().zip(&toks[1..4]) {
                    let value: usize = tok
                        .text
                        .parse()
                        .map_err(|_| err(tok.column, format!("invalid index `{}`", tok.text)))?;
                    if value == 0 || value > dim {
                        return Err(err(
                            tok.column,
                            format!("index {value} is outside 1..={dim}"),
                        ));
                    }
                    *slot = value;
                }
                let part = |tok: &Token| {
                    parse_rational(tok.text)
                        .map_err(|_| err(tok.column, format!("invalid rational `{}`", tok.text)))
                };
                let value = Scalar::new(part(&toks[4])?, part(&toks[5])?);
                let key = (idx[0], idx[1], idx[2]);
                if let Some((_, first)) = entries.get(&key) {
                    return Err(err(
                        head.column,
                        format!(
                            "duplicate entry A {} {} {} (first given on line {first})",
                            key.0, key.1, key.2
                        ),
                    ));
                }
                entries.insert(key, (value, line));
            }
            (other, _) => {
                return Err(err(head.column, format!("unknown declaration `{other}`")));
            }
        }
    }
    let Some((dim, line)) = n else {
        return Err(ParseError {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing `n INT` declaration".into(),
        });
    };
    StructureConstants::new(
        dim,
        entries.into_iter().map(|((j, k, l), (c, _))| (j, k, l, c)),
    )
    .map_err(|e| ParseError {
        line,
        column: 3,
        message: e.to_string(),
    })
}

/// Inverse of [`parse_algebra`]; entries in ascending `(j, k, ℓ)` order.
pub fn print_algebra(sc: &StructureConstants) -> String {
    let mut out = format!("n {}\n", sc.n());
    for ((j, k, l), c) in sc.entries() {
        out.push_str(&format!(
            "A {j} {k} {l} {} {}\n",
            format_rational(c.re()),
            format_rational(c.im())
        ));
    }
    out
}
