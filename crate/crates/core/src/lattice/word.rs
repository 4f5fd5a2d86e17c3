//! Text form of stick words (`.knotw`).
//!
//! ```text
//! # comment
//! lattice: sh
//! base: 0 0 0
//! x^2 y^1 w^1 x^-2 y^-1 w^-1
//! ```
//!
//! Header lines are optional and must precede the first token. Tokens are
//! `d^n` with `d` one of `x y z w` and `n` a nonzero integer.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Direction, Lattice, LatticePoint, Polygon, Stick};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    MalformedToken,
    IllegalDirection,
    ZeroLength,
    BadHeader,
    MissingLattice,
    LatticeMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset of the offending token in the input.
    pub offset: usize,
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ParseErrorKind::MalformedToken => "malformed token",
            ParseErrorKind::IllegalDirection => "direction not allowed on this lattice",
            ParseErrorKind::ZeroLength => "zero-length stick",
            ParseErrorKind::BadHeader => "bad header line",
            ParseErrorKind::MissingLattice => "missing `lattice:` header",
            ParseErrorKind::LatticeMismatch => "lattice header disagrees with expected lattice",
        };
        write!(f, "{what} `{}` at byte {}", self.token, self.offset)
    }
}

impl core::error::Error for ParseError {}

struct Parsed {
    lattice: Option<(Lattice, usize)>,
    base: LatticePoint,
    sticks: Vec<(Stick, usize, String)>,
}

fn err(kind: ParseErrorKind, offset: usize, token: &str) -> ParseError {
    ParseError { kind, offset, token: token.to_string() }
}

fn parse_token(tok: &str, offset: usize) -> Result<Stick, ParseError> {
    let mut chars = tok.chars();
    let dir = chars
        .next()
        .and_then(Direction::from_letter)
        .ok_or_else(|| err(ParseErrorKind::MalformedToken, offset, tok))?;
    let rest = chars.as_str();
    let num = rest.strip_prefix('^').ok_or_else(|| err(ParseErrorKind::MalformedToken, offset, tok))?;
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(ParseErrorKind::MalformedToken, offset, tok));
    }
    let len: i64 = num.parse().map_err(|_| err(ParseErrorKind::MalformedToken, offset, tok))?;
    if len == 0 {
        return Err(err(ParseErrorKind::ZeroLength, offset, tok));
    }
    Ok(Stick::new(dir, len))
}

fn parse_raw(text: &str) -> Result<Parsed, ParseError> {
    let mut out = Parsed { lattice: None, base: LatticePoint::ORIGIN, sticks: Vec::new() };
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let body = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let trimmed = body.trim_start();
        let lead = body.len() - trimmed.len();
        let at = line_start + lead;
        if let Some(rest) = trimmed.strip_prefix("lattice:") {
            let name = rest.trim();
            if !out.sticks.is_empty() {
                return Err(err(ParseErrorKind::BadHeader, at, trimmed.trim_end()));
            }
            let l = name.parse::<Lattice>().map_err(|_| err(ParseErrorKind::BadHeader, at, trimmed.trim_end()))?;
            out.lattice = Some((l, at));
        } else if let Some(rest) = trimmed.strip_prefix("base:") {
            let bad = || err(ParseErrorKind::BadHeader, at, trimmed.trim_end());
            if !out.sticks.is_empty() {
                return Err(bad());
            }
            let nums: Vec<i64> =
                rest.split_whitespace().map(|s| s.parse::<i64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
            let [a, b, c] = nums[..] else { return Err(bad()) };
            out.base = LatticePoint::new(a, b, c);
        } else {
            let mut pos = 0;
            while pos < body.len() {
                let rest = &body[pos..];
                let skip = rest.len() - rest.trim_start().len();
                pos += skip;
                if pos >= body.len() {
                    break;
                }
                let rest = &body[pos..];
                let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
                let tok = &rest[..end];
                let offset = line_start + pos;
                out.sticks.push((parse_token(tok, offset)?, offset, tok.to_string()));
                pos += end;
            }
        }
        line_start += line.len();
    }
    Ok(out)
}

fn build(parsed: Parsed, lattice: Lattice) -> Result<Polygon, ParseError> {
    let mut sticks = Vec::with_capacity(parsed.sticks.len());
    for (s, offset, tok) in parsed.sticks {
        if !lattice.admits(s.dir) {
            return Err(err(ParseErrorKind::IllegalDirection, offset, &tok));
        }
        sticks.push(s);
    }
    Ok(Polygon::from_parts(lattice, parsed.base, sticks))
}

/// Parses a word on a known lattice. A `lattice:` header, if present, must
/// agree.
pub fn parse_word(text: &str, lattice: Lattice) -> Result<Polygon, ParseError> {
    let parsed = parse_raw(text)?;
    if let Some((l, at)) = parsed.lattice {
        if l != lattice {
            return Err(err(ParseErrorKind::LatticeMismatch, at, l.name()));
        }
    }
    build(parsed, lattice)
}

/// Parses a `.knotw` document, which must name its lattice.
pub fn parse_knotw(text: &str) -> Result<Polygon, ParseError> {
    let parsed = parse_raw(text)?;
    let Some((lattice, _)) = parsed.lattice else {
        return Err(err(ParseErrorKind::MissingLattice, 0, ""));
    };
    build(parsed, lattice)
}

/// Canonical `.knotw` text: lattice header, base line only when the base is
/// not the origin, then the word on one line.
pub fn emit_knotw(p: &Polygon) -> String {
    let mut s = format!("lattice: {}\n", p.lattice());
    let b = p.base();
    if b != LatticePoint::ORIGIN {
        s.push_str(&format!("base: {} {} {}\n", b.a, b.b, b.c));
    }
    s.push_str(&p.to_string());
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_headers() {
        let text = "# square\nlattice: cubic\nbase: 1 2 3\nx^1 y^1   # tail\nx^-1 y^+1\n";
        let p = parse_knotw(text).unwrap();
        assert_eq!(p.lattice(), Lattice::Cubic);
        assert_eq!(p.base(), LatticePoint::new(1, 2, 3));
        assert_eq!(p.to_string(), "x^1 y^1 x^-1 y^1");
    }

    #[test]
    fn reports_token_and_offset() {
        let e = parse_word("x^1 q^2", Lattice::Sh).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedToken);
        assert_eq!(e.offset, 4);
        assert_eq!(e.token, "q^2");
        let e = parse_word("x^1\n  w^1", Lattice::Cubic).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::IllegalDirection);
        assert_eq!(e.offset, 6);
        let e = parse_word("x^0", Lattice::Sh).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroLength);
        let e = parse_word("x^", Lattice::Sh).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedToken);
        let e = parse_word("x^--1", Lattice::Sh).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedToken);
    }

    #[test]
    fn header_rules() {
        assert_eq!(parse_knotw("x^1").unwrap_err().kind, ParseErrorKind::MissingLattice);
        assert_eq!(parse_word("lattice: cubic\nx^1", Lattice::Sh).unwrap_err().kind, ParseErrorKind::LatticeMismatch);
        assert_eq!(parse_knotw("lattice: sh\nx^1\nbase: 0 0 0").unwrap_err().kind, ParseErrorKind::BadHeader);
        assert_eq!(parse_knotw("lattice: hex\n").unwrap_err().kind, ParseErrorKind::BadHeader);
    }

    #[test]
    fn emit_round_trip() {
        let p = parse_knotw("lattice: sh\nbase: 0 1 0\nx^2 w^1 x^-2 w^-1\n").unwrap();
        let text = emit_knotw(&p);
        assert_eq!(text, "lattice: sh\nbase: 0 1 0\nx^2 w^1 x^-2 w^-1\n");
        assert_eq!(parse_knotw(&text).unwrap(), p);
        let q = parse_word("x^1 y^1 x^-1 y^-1", Lattice::Cubic).unwrap();
        assert_eq!(emit_knotw(&q), "lattice: cubic\nx^1 y^1 x^-1 y^-1\n");
    }
}
