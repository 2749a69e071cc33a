use exact_algebra::{BigInt, BigRational, RatPoly};

use crate::{Result, SurfaceError};

/// Parse a polynomial expression in the variable `s` with rational
/// coefficients. Multiplication and powers must be explicit (`3*s^2`, not
/// `3s2`); parentheses, unary minus, and integer ratios like `16/27` are
/// supported.
pub fn parse_poly(input: &str) -> Result<RatPoly> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        input,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> SurfaceError {
        SurfaceError::Parse(format!("{msg} at position {} in {:?}", self.pos, self.input))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<RatPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                self.term()?.neg()
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some('/') => {
                    self.bump();
                    let d = self.factor()?;
                    if d.deg() != 0 || d.is_zero() {
                        return Err(self.err("division only by nonzero constants"));
                    }
                    let inv = BigRational::new(
                        d.coeff(0).denom().clone(),
                        d.coeff(0).numer().clone(),
                    );
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.uint()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatPoly> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.reject_juxtaposition()?;
                Ok(e)
            }
            Some('-') => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Some('s') => {
                self.bump();
                self.reject_juxtaposition()?;
                Ok(RatPoly::x())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint_big()?;
                self.reject_juxtaposition()?;
                Ok(RatPoly::constant(BigRational::from(n)))
            }
            _ => Err(self.err("expected a term")),
        }
    }

    /// After a complete atom, the next character must be an operator or the
    /// end; `3s` and `)(` style juxtaposition is rejected.
    fn reject_juxtaposition(&mut self) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                Err(self.err("implicit multiplication is not allowed; write '*'"))
            }
            _ => Ok(()),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        let n = self.uint_big()?;
        use num_traits::ToPrimitive;
        n.to_u32().ok_or_else(|| self.err("exponent too large"))
    }

    fn uint_big(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>()
            .map_err(|e| self.err(&format!("bad integer: {e}")))
    }
}
