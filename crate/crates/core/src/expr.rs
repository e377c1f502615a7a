//! Expression parser for elements of `U(L)[[t]]`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' uint | '^{' uint '}')?
//! atom   := generator | rational | 't' | '(' expr ')'
//! generator := ('L'|'M'|'N') '[' int ']' | 'Y' '[' int '/2' ']'
//!            | ('L'|'M'|'N') '_' (int | '{' int '}') | 'Y' '_{' int '/2' '}'
//! ```
//!
//! The underscore forms are what the text renderer emits, so rendered output
//! parses back to the same element. Products are taken in written order and
//! normal ordered; `t` powers beyond the truncation order vanish.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{Coeff, Family, Generator, UPoly};
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("index error at byte {offset}: {source}")]
    Index {
        offset: usize,
        #[source]
        source: AlgebraError,
    },
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Index { offset, .. } => Some(*offset),
            ParseError::Algebra(_) => None,
        }
    }
}

type PResult<T> = std::result::Result<T, ParseError>;

/// Parses `src` into a canonical element truncated at `order`.
pub fn parse_expression(src: &str, order: u32) -> PResult<UPoly> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, order };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Parses a single generator such as `L[1]`, `Y[-3/2]` or `Y_{1/2}`.
pub fn parse_generator(src: &str) -> PResult<Generator> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, order: 0 };
    p.skip_ws();
    let g = p.generator()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

/// Parses a twist parameter `a/2` (with `a` odd) into `a`.
pub fn parse_half_integer(src: &str) -> Option<i64> {
    let (num, den) = src.trim().split_once('/')?;
    if den.trim() != "2" {
        return None;
    }
    let a: i64 = num.trim().parse().ok()?;
    (a % 2 != 0).then_some(a)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: u32,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { offset: self.pos, message: message.into() }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> PResult<UPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<UPoly> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<UPoly> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        self.factor()
    }

    fn factor(&mut self) -> PResult<UPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let braced = self.eat(b'{');
        let k = self.uint()?;
        if braced {
            self.expect(b'}')?;
        }
        let k = u32::try_from(k).map_err(|_| self.error("exponent too large"))?;
        Ok(base.pow(k)?)
    }

    fn atom(&mut self) -> PResult<UPoly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(UPoly::t_power(1, self.order))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let value = if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.uint()?;
                    if den == BigInt::from(0) {
                        return Err(ParseError::Syntax {
                            offset: at,
                            message: "zero denominator".into(),
                        });
                    }
                    Coeff::new(num, den)
                } else {
                    Coeff::from_integer(num)
                };
                Ok(UPoly::constant(value, self.order))
            }
            Some(b'L' | b'M' | b'N' | b'Y') => {
                let g = self.generator()?;
                Ok(UPoly::from_generator(g, self.order))
            }
            Some(_) => Err(self.error("expected a generator, number, 't' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn generator(&mut self) -> PResult<Generator> {
        self.skip_ws();
        let start = self.pos;
        let family = match self.peek() {
            Some(b'L') => Family::L,
            Some(b'M') => Family::M,
            Some(b'N') => Family::N,
            Some(b'Y') => Family::Y,
            _ => return Err(self.error("expected one of L, M, N, Y")),
        };
        self.pos += 1;
        // index as (numerator, denominator) with denominator 1 or 2
        let (num, halved) = if self.eat(b'[') {
            let idx = self.index()?;
            self.expect(b']')?;
            idx
        } else if self.peek() == Some(b'_') {
            self.pos += 1;
            if self.eat(b'{') {
                let idx = self.index()?;
                self.expect(b'}')?;
                idx
            } else {
                (self.int()?, false)
            }
        } else {
            return Err(self.error("expected '[' or '_' after generator letter"));
        };
        let index2 = if halved { Some(num) } else { num.checked_mul(2) };
        let index2 = index2.ok_or(ParseError::Index { offset: start, source: AlgebraError::IndexOverflow })?;
        if family.is_half_integral() != halved {
            return Err(ParseError::Index {
                offset: start,
                source: AlgebraError::Parity {
                    family,
                    index2,
                    expected: if family.is_half_integral() { "an odd" } else { "an even" },
                },
            });
        }
        Generator::new(family, index2).map_err(|source| ParseError::Index { offset: start, source })
    }

    /// `int ('/2')?`, returning whether the `/2` was present.
    fn index(&mut self) -> PResult<(i64, bool)> {
        let n = self.int()?;
        if self.eat(b'/') {
            self.skip_ws();
            if self.peek() != Some(b'2') {
                return Err(self.error("only the denominator 2 is allowed in an index"));
            }
            self.pos += 1;
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.error("only the denominator 2 is allowed in an index"));
            }
            Ok((n, true))
        } else {
            Ok((n, false))
        }
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat(b'-');
        let at = self.pos;
        let n = self.uint()?;
        let n = if neg { -n } else { n };
        i64::try_from(n).map_err(|_| ParseError::Syntax { offset: at, message: "index too large".into() })
    }

    fn uint(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string parses"))
    }
}
