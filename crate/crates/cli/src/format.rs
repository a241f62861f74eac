//! Sequence file format.
//!
//! ```text
//! #alphabet ACGT
//! A [C:0.6,G:0.4] T
//! ```
//!
//! The header names the letters in index order. Each following token is a
//! position: a bare letter is certain, a bracketed list gives a
//! distribution. Whitespace between tokens is optional, so a plain string
//! may be written as one run of letters.

use std::fmt::Write as _;

use thiserror::Error;
use weightmatch::weighted::WeightedStringBuilder;
use weightmatch::{Alphabet, Letter, PlainString, WeightedString};

const TOKENS_PER_LINE: usize = 60;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("file is empty or has no positions")]
    EmptyFile,
    #[error("{line}:{column}: expected a `#alphabet <letters>` header")]
    MissingHeader { line: usize, column: usize },
    #[error("{line}:{column}: {reason}")]
    InvalidAlphabet {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("{line}:{column}: malformed token: {reason}")]
    MalformedToken {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("{line}:{column}: letter {letter:?} is not in the alphabet")]
    UnknownLetter {
        line: usize,
        column: usize,
        letter: char,
    },
    #[error("{line}:{column}: letter {letter:?} listed twice in one position")]
    DuplicateLetter {
        line: usize,
        column: usize,
        letter: char,
    },
    #[error("{line}:{column}: probabilities sum to {sum}, expected 1 within 1e-6")]
    SumOutOfTolerance {
        line: usize,
        column: usize,
        sum: f64,
    },
    #[error("{line}:{column}: expected a plain letter, found a distribution")]
    NotPlain { line: usize, column: usize },
}

struct Token {
    line: usize,
    column: usize,
    entries: Vec<(char, f64)>,
    bracketed: bool,
}

fn malformed(line: usize, column: usize, reason: impl Into<String>) -> ParseError {
    ParseError::MalformedToken {
        line,
        column,
        reason: reason.into(),
    }
}

fn parse_header(input: &str) -> Result<(Alphabet, usize), ParseError> {
    let Some((idx, line)) = input
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty())
    else {
        return Err(ParseError::EmptyFile);
    };
    let (line_no, column) = (idx + 1, line.len() - line.trim_start().len() + 1);
    let rest = line
        .trim_start()
        .strip_prefix("#alphabet")
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        .ok_or(ParseError::MissingHeader {
            line: line_no,
            column,
        })?;
    let alphabet = Alphabet::new(rest.chars().filter(|c| !c.is_whitespace())).map_err(|e| {
        ParseError::InvalidAlphabet {
            line: line_no,
            column,
            reason: e.to_string(),
        }
    })?;
    Ok((alphabet, idx + 1))
}

fn tokenize(input: &str, skip_lines: usize) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    for (idx, text) in input.lines().enumerate().skip(skip_lines) {
        let line = idx + 1;
        let mut chars = text.chars().enumerate().peekable();
        while let Some((k, c)) = chars.next() {
            let column = k + 1;
            if c.is_whitespace() {
                continue;
            }
            if c == ']' || c == ':' || c == ',' || c == '#' {
                return Err(malformed(line, column, format!("unexpected {c:?}")));
            }
            if c != '[' {
                tokens.push(Token {
                    line,
                    column,
                    entries: vec![(c, 1.0)],
                    bracketed: false,
                });
                continue;
            }
            let mut body = String::new();
            let mut closed = false;
            for (_, c) in chars.by_ref() {
                if c == ']' {
                    closed = true;
                    break;
                }
                body.push(c);
            }
            if !closed {
                return Err(malformed(line, column, "missing `]`"));
            }
            let mut entries = Vec::new();
            for item in body.split(',') {
                let (letter, prob) = item.split_once(':').ok_or_else(|| {
                    malformed(
                        line,
                        column,
                        format!("expected `letter:probability`, got {:?}", item.trim()),
                    )
                })?;
                let mut letter_chars = letter.trim().chars();
                let (Some(letter), None) = (letter_chars.next(), letter_chars.next()) else {
                    return Err(malformed(
                        line,
                        column,
                        format!("bad letter {:?}", letter.trim()),
                    ));
                };
                let prob: f64 = prob
                    .trim()
                    .parse()
                    .ok()
                    .filter(|p: &f64| p.is_finite() && *p > 0.0 && *p <= 1.0 + 1e-6)
                    .ok_or_else(|| {
                        malformed(line, column, format!("bad probability {:?}", prob.trim()))
                    })?;
                entries.push((letter, prob));
            }
            tokens.push(Token {
                line,
                column,
                entries,
                bracketed: true,
            });
        }
    }
    Ok(tokens)
}

pub fn parse_weighted(input: &str) -> Result<WeightedString, ParseError> {
    let (alphabet, body) = parse_header(input)?;
    let tokens = tokenize(input, body)?;
    if tokens.is_empty() {
        return Err(ParseError::EmptyFile);
    }
    let mut b = WeightedStringBuilder::with_capacity(alphabet.clone(), tokens.len());
    let mut entries: Vec<(Letter, f64)> = Vec::new();
    for tok in &tokens {
        let (line, column) = (tok.line, tok.column);
        entries.clear();
        for &(c, p) in &tok.entries {
            let letter = alphabet.index_of(c).ok_or(ParseError::UnknownLetter {
                line,
                column,
                letter: c,
            })?;
            if entries.iter().any(|&(l, _)| l == letter) {
                return Err(ParseError::DuplicateLetter {
                    line,
                    column,
                    letter: c,
                });
            }
            entries.push((letter, p));
        }
        b.push(&entries).map_err(|e| match e {
            weightmatch::Error::SumOutOfTolerance { sum, .. } => {
                ParseError::SumOutOfTolerance { line, column, sum }
            }
            other => malformed(line, column, other.to_string()),
        })?;
    }
    Ok(b.finish())
}

pub fn parse_plain(input: &str) -> Result<PlainString, ParseError> {
    let (alphabet, body) = parse_header(input)?;
    let tokens = tokenize(input, body)?;
    if tokens.is_empty() {
        return Err(ParseError::EmptyFile);
    }
    let mut letters = Vec::with_capacity(tokens.len());
    for tok in &tokens {
        let (line, column) = (tok.line, tok.column);
        if tok.bracketed {
            return Err(ParseError::NotPlain { line, column });
        }
        let c = tok.entries[0].0;
        letters.push(alphabet.index_of(c).ok_or(ParseError::UnknownLetter {
            line,
            column,
            letter: c,
        })?);
    }
    Ok(PlainString::new(alphabet, letters).expect("letters come from the alphabet"))
}

pub fn serialize_weighted(w: &WeightedString) -> String {
    let alphabet = w.alphabet();
    let mut out = format!("#alphabet {alphabet}\n");
    for (i, p) in w.positions().enumerate() {
        if i > 0 {
            out.push(if i % TOKENS_PER_LINE == 0 { '\n' } else { ' ' });
        }
        if p.is_solid() {
            out.push(alphabet.letter(p.letters()[0]).unwrap());
            continue;
        }
        out.push('[');
        for (k, (l, q)) in p.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}:{}", alphabet.letter(l).unwrap(), q);
        }
        out.push(']');
    }
    out.push('\n');
    out
}

pub fn serialize_plain(s: &PlainString) -> String {
    let mut out = format!("#alphabet {}\n", s.alphabet());
    for chunk in s.letters().chunks(TOKENS_PER_LINE) {
        out.push_str(&s.alphabet().decode(chunk));
        out.push('\n');
    }
    out
}
