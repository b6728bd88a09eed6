//! Polynomial expressions over R in x, u, v and integer literals.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := 'x' | 'u' | 'v' | uint | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. Error offsets are byte offsets.

use crate::error::{Error, Result};
use crate::qpoly::PolyR;
use crate::ring::RElem;
use crate::zp::Prime;

/// Largest exponent accepted after '^'.
pub const MAX_EXPONENT: u64 = 1 << 20;

/// Largest degree an expression may reach outside the quotient ring.
pub const MAX_PLAIN_DEGREE: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    X,
    U,
    V,
    /// Decimal digits as written; reduced mod p when evaluated.
    Int(String),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u64),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut acc = if self.eat(b'-') {
            PolyExpr::Neg(Box::new(self.term()?))
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = PolyExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PolyExpr> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = {
            self.skip_ws();
            self.pos
        };
        let digits = self.digits().ok_or_else(|| syntax(at, "expected an exponent"))?;
        let e: u64 = digits.parse().map_err(|_| syntax(at, "exponent overflow"))?;
        if e > MAX_EXPONENT {
            return Err(syntax(at, format!("exponent {e} exceeds {MAX_EXPONENT}")));
        }
        Ok(PolyExpr::Pow(Box::new(base), e))
    }

    fn base(&mut self) -> Result<PolyExpr> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(PolyExpr::X)
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(PolyExpr::U)
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(PolyExpr::V)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(syntax(self.pos, "expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(PolyExpr::Int(self.digits().expect("digit present").to_string())),
            Some(c) => Err(syntax(at, format!("unexpected '{}'", c as char))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses an expression without evaluating it.
pub fn parse_expr(src: &str) -> Result<PolyExpr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.pos, format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(e)
}

fn int_mod(digits: &str, p: Prime) -> u32 {
    digits.bytes().fold(0u32, |acc, d| p.add(p.mul(acc, 10 % p.get()), (d - b'0') as u32 % p.get()))
}

fn lift(f: PolyR, n: Option<usize>) -> Result<PolyR> {
    match n {
        Some(n) => f.into_quotient(n),
        None => Ok(f),
    }
}

fn guard(f: PolyR, n: Option<usize>) -> Result<PolyR> {
    if n.is_none() && f.coeffs().len() > MAX_PLAIN_DEGREE + 1 {
        return Err(Error::SizeGuard(format!("degree exceeds {MAX_PLAIN_DEGREE}")));
    }
    Ok(f)
}

impl PolyExpr {
    /// Evaluates in R[x], or in R[x]/<x^n - 1> when `n` is given.
    pub fn eval(&self, p: Prime, n: Option<usize>) -> Result<PolyR> {
        let f = match self {
            PolyExpr::X => lift(PolyR::monomial(RElem::one(p), 1), n)?,
            PolyExpr::U => lift(PolyR::constant(RElem::u(p)), n)?,
            PolyExpr::V => lift(PolyR::constant(RElem::v(p)), n)?,
            PolyExpr::Int(d) => lift(PolyR::constant(RElem::scalar(p, int_mod(d, p))), n)?,
            PolyExpr::Neg(a) => a.eval(p, n)?.neg(),
            PolyExpr::Add(a, b) => a.eval(p, n)?.checked_add(&b.eval(p, n)?)?,
            PolyExpr::Sub(a, b) => a.eval(p, n)?.checked_sub(&b.eval(p, n)?)?,
            PolyExpr::Mul(a, b) => guard(a.eval(p, n)?.checked_mul(&b.eval(p, n)?)?, n)?,
            PolyExpr::Pow(a, e) => {
                let base = a.eval(p, n)?;
                if n.is_none() && base.coeffs().len().saturating_sub(1).saturating_mul(*e as usize) > MAX_PLAIN_DEGREE {
                    return Err(Error::SizeGuard(format!("degree exceeds {MAX_PLAIN_DEGREE}")));
                }
                let mut acc = lift(PolyR::one(p), n)?;
                let mut sq = base;
                let mut e = *e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc.checked_mul(&sq)?;
                    }
                    e >>= 1;
                    if e > 0 {
                        sq = sq.checked_mul(&sq)?;
                    }
                }
                acc
            }
        };
        Ok(f)
    }
}

/// Parses and evaluates `src`, reducing modulo x^n - 1 when `n` is given.
pub fn parse_poly(src: &str, p: Prime, n: Option<usize>) -> Result<PolyR> {
    parse_expr(src)?.eval(p, n)
}
