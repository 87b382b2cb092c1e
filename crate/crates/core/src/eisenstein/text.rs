//! Text form of `Q(w)` elements.
//!
//! ```text
//! element  := sign? term (('+' | '-') term)*
//! term     := rational | rational? '*'? 'w'
//! rational := INT ('/' POSINT)?
//! ```
//!
//! Whitespace between tokens is ignored. Output is always the reduced form
//! `A/B+C/D*w`, dropping zero parts and unit denominators.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::EisensteinRational;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.pos
            };
            let d = self.integer()?;
            if d.is_zero() {
                return Err(Error::Syntax {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(BigRational::new(n, d));
        }
        Ok(BigRational::from_integer(n))
    }

    /// Returns `(coefficient, is_w_term)`.
    fn term(&mut self) -> Result<(BigRational, bool)> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok((BigRational::one(), true))
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        if self.peek() != Some(b'w') {
                            return Err(self.error("expected 'w' after '*'"));
                        }
                        self.pos += 1;
                        Ok((r, true))
                    }
                    Some(b'w') => {
                        self.pos += 1;
                        Ok((r, true))
                    }
                    _ => Ok((r, false)),
                }
            }
            Some(_) => Err(self.error("expected a number or 'w'")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn element(&mut self) -> Result<EisensteinRational> {
        let mut x = BigRational::zero();
        let mut y = BigRational::zero();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (mut c, is_w) = self.term()?;
            if negative {
                c = -c;
            }
            if is_w {
                y += c;
            } else {
                x += c;
            }
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                None => break,
                Some(_) => return Err(self.error("expected '+', '-' or end of input")),
            }
            self.pos += 1;
        }
        Ok(EisensteinRational::from_coords(&x, &y))
    }
}

/// Parses an element of `Q(w)`, e.g. `"6+3*w"`, `"1/2-5/3*w"`, `"-3"`.
pub fn parse_element(text: &str) -> Result<EisensteinRational> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .element()
}

impl std::str::FromStr for EisensteinRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_element(s)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

pub(super) fn write_element(
    f: &mut fmt::Formatter<'_>,
    x: &BigRational,
    y: &BigRational,
) -> fmt::Result {
    if x.is_zero() && y.is_zero() {
        return f.write_str("0");
    }
    if !x.is_zero() {
        write_rational(f, x)?;
    }
    if !y.is_zero() {
        if y.is_negative() {
            f.write_str("-")?;
        } else if !x.is_zero() {
            f.write_str("+")?;
        }
        let mag = y.abs();
        if mag.is_one() {
            f.write_str("w")?;
        } else {
            write_rational(f, &mag)?;
            f.write_str("*w")?;
        }
    }
    Ok(())
}
