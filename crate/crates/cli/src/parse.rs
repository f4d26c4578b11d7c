//! Text grammars for field elements, quadratic-extension elements and
//! group-ring elements.
//!
//! All three share one shape: `term (('+' | '-') term)*`, where a term is
//! an optional `-`, then either a rational coefficient optionally followed
//! by `*` and a symbol, or a bare symbol. Whitespace is ignored and repeated
//! symbols are summed.

use biquad90::{
    parse_rational, BiquadConfig, ExtElement, GroupRingElement, QuadExtElement, Rational,
};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    /// Byte offset into the source text.
    pub offset: usize,
    pub message: String,
}

const FIELD_SYMBOLS: [&str; 3] = ["r1", "r2", "r12"];
const QUAD_SYMBOLS: [&str; 1] = ["rb"];
const GROUP_SYMBOLS: [&str; 3] = ["s1", "s2", "s12"];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..]
                .chars()
                .next()
                .map_or(0, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            offset,
            message: message.into(),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !f(c))
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        &self.src[start..start + len]
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos;
        let mut text = self.take_while(|c| c.is_ascii_digit()).to_string();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let den_start = self.pos;
            let den = self.take_while(|c| c.is_ascii_digit());
            if den.is_empty() {
                return Err(self.error(den_start, "expected a denominator"));
            }
            if den.bytes().all(|b| b == b'0') {
                return Err(self.error(den_start, "zero denominator"));
            }
            text = format!("{text}/{den}");
        }
        parse_rational(&text).map_err(|_| self.error(start, "invalid number"))
    }

    fn symbol(&mut self, symbols: &[&str]) -> Result<usize, ParseError> {
        let start = self.pos;
        let word = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        symbols
            .iter()
            .position(|s| *s == word)
            .map(|i| i + 1)
            .ok_or_else(|| {
                self.error(
                    start,
                    format!(
                        "unknown symbol `{word}`, expected one of {}",
                        symbols.join(", ")
                    ),
                )
            })
    }

    /// One term: `['-'] (number ['*' symbol] | symbol)`, returned as
    /// `(slot, coefficient)` with slot 0 for constants.
    fn term(&mut self, symbols: &[&str]) -> Result<(usize, Rational), ParseError> {
        let mut negative = false;
        if self.peek() == Some('-') {
            negative = true;
            self.pos += 1;
        }
        let (slot, coeff) = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.number()?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.skip_ws();
                    (self.symbol(symbols)?, c)
                } else {
                    (0, c)
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                (self.symbol(symbols)?, Rational::from_integer(1.into()))
            }
            Some(c) => return Err(self.error(self.pos, format!("unexpected `{c}`"))),
            None => return Err(self.error(self.pos, "unexpected end of input")),
        };
        Ok((slot, if negative { -coeff } else { coeff }))
    }
}

/// Parses a linear combination of `1` and `symbols`; entry 0 of the result
/// is the constant term and entry `i` the coefficient of `symbols[i - 1]`.
pub fn parse_linear(src: &str, symbols: &[&str]) -> Result<Vec<Rational>, ParseError> {
    let mut lex = Lexer { src, pos: 0 };
    let mut coeffs = vec![Rational::zero(); symbols.len() + 1];
    let (slot, c) = lex.term(symbols)?;
    coeffs[slot] += c;
    loop {
        let sign = match lex.peek() {
            None => return Ok(coeffs),
            Some('+') => Rational::from_integer(1.into()),
            Some('-') => Rational::from_integer((-1).into()),
            Some(c) => return Err(lex.error(lex.pos, format!("expected `+` or `-`, found `{c}`"))),
        };
        lex.pos += 1;
        lex.skip_ws();
        // A binary operator may not be followed by another operator, but the
        // term itself may still carry a leading `-` on its number.
        if lex.peek() == Some('+') {
            return Err(lex.error(lex.pos, "unexpected `+`"));
        }
        let (slot, c) = lex.term(symbols)?;
        coeffs[slot] += sign * c;
    }
}

/// Parses `c0 + c1*r1 + c2*r2 + c3*r12` into an element of `cfg`.
pub fn parse_element(src: &str, cfg: &BiquadConfig) -> Result<ExtElement, ParseError> {
    let c = parse_linear(src, &FIELD_SYMBOLS)?;
    Ok(cfg.from_coords([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]))
}

/// Parses `u + v*rb` as an element of `F(√b)`.
pub fn parse_quad(src: &str, b: &Rational) -> Result<QuadExtElement, ParseError> {
    let c = parse_linear(src, &QUAD_SYMBOLS)?;
    Ok(QuadExtElement::new(c[0].clone(), c[1].clone(), b.clone()))
}

/// Parses an integer combination of `1`, `s1`, `s2`, `s12`.
pub fn parse_group_ring(src: &str) -> Result<GroupRingElement, ParseError> {
    let c = parse_linear(src, &GROUP_SYMBOLS)?;
    let mut out: [BigInt; 4] = Default::default();
    for (slot, q) in c.iter().enumerate() {
        if !q.is_integer() {
            return Err(ParseError {
                offset: 0,
                message: format!("group ring coefficients must be integers, found {q}"),
            });
        }
        out[slot] = q.to_integer();
    }
    Ok(GroupRingElement::from_coeffs(out))
}
