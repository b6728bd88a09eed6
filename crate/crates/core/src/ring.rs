//! The local ring R = Z_p + uZ_p + vZ_p + uvZ_p with u^2 = v^2 = 0, uv = vu.
//!
//! Elements of the sub-quotients Z_p + uZ_p, Z_p + vZ_p and Z_p are kept as
//! [`RElem`] values with the dropped components set to zero, so the
//! projections [`RElem::psi`], [`RElem::phi_v`] and [`RElem::mu`] compose
//! without conversions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::zp::Prime;

/// a + u*b + v*c + uv*d
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RElem {
    p: Prime,
    pub(crate) a: u32,
    pub(crate) b: u32,
    pub(crate) c: u32,
    pub(crate) d: u32,
}

impl RElem {
    pub fn new(p: Prime, a: u64, b: u64, c: u64, d: u64) -> Self {
        RElem { p, a: p.reduce(a), b: p.reduce(b), c: p.reduce(c), d: p.reduce(d) }
    }

    pub(crate) fn from_reduced(p: Prime, [a, b, c, d]: [u32; 4]) -> Self {
        debug_assert!([a, b, c, d].iter().all(|&x| x < p.get()));
        RElem { p, a, b, c, d }
    }

    pub fn zero(p: Prime) -> Self {
        Self::from_reduced(p, [0; 4])
    }

    pub fn one(p: Prime) -> Self {
        Self::from_reduced(p, [1, 0, 0, 0])
    }

    pub fn u(p: Prime) -> Self {
        Self::from_reduced(p, [0, 1, 0, 0])
    }

    pub fn v(p: Prime) -> Self {
        Self::from_reduced(p, [0, 0, 1, 0])
    }

    pub fn uv(p: Prime) -> Self {
        Self::from_reduced(p, [0, 0, 0, 1])
    }

    pub fn scalar(p: Prime, a: u32) -> Self {
        Self::from_reduced(p, [a % p.get(), 0, 0, 0])
    }

    /// The units 1, u, v, uv of the Z_p-basis of R.
    pub fn basis(p: Prime) -> [RElem; 4] {
        [Self::one(p), Self::u(p), Self::v(p), Self::uv(p)]
    }

    /// All p^4 elements.
    pub fn all(p: Prime) -> impl Iterator<Item = RElem> {
        let q = p.get() as u64;
        (0..q.pow(4)).map(move |i| Self::new(p, i % q, (i / q) % q, (i / (q * q)) % q, i / (q * q * q)))
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    /// Components `[a, b, c, d]`.
    pub fn components(&self) -> [u32; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.components() == [0; 4]
    }

    /// Units are exactly the elements outside the maximal ideal <u, v>.
    pub fn is_unit(&self) -> bool {
        self.a != 0
    }

    /// Non-units of R are nilpotent, hence zero divisors.
    pub fn is_zero_divisor(&self) -> bool {
        !self.is_unit()
    }

    pub fn inverse(&self) -> Option<RElem> {
        if !self.is_unit() {
            return None;
        }
        // x = a(1 + m) with m in <u,v>, m^3 = 0
        let p = self.p;
        let a_inv = RElem::scalar(p, p.inv(self.a));
        let m = a_inv * RElem::from_reduced(p, [0, self.b, self.c, self.d]);
        let one = RElem::one(p);
        Some(a_inv * (one - m + m * m))
    }

    /// Projection onto Z_p + uZ_p (drops the v and uv parts).
    pub fn psi(&self) -> RElem {
        Self::from_reduced(self.p, [self.a, self.b, 0, 0])
    }

    /// Projection onto Z_p + vZ_p (drops the u and uv parts).
    pub fn phi_v(&self) -> RElem {
        Self::from_reduced(self.p, [self.a, 0, self.c, 0])
    }

    /// Image in the residue field R/<u,v> = Z_p.
    pub fn mu(&self) -> u32 {
        self.a
    }

    pub fn checked_mul(&self, o: &RElem) -> Result<RElem> {
        if self.p != o.p {
            return Err(Error::ModulusMismatch(self.p.get(), o.p.get()));
        }
        let p = self.p;
        let m = |x: u32, y: u32| x as u64 * y as u64;
        Ok(RElem::new(
            p,
            m(self.a, o.a),
            m(self.a, o.b) + m(self.b, o.a),
            m(self.a, o.c) + m(self.c, o.a),
            m(self.a, o.d) + m(self.b, o.c) + m(self.c, o.b) + m(self.d, o.a),
        ))
    }

    pub fn checked_add(&self, o: &RElem) -> Result<RElem> {
        if self.p != o.p {
            return Err(Error::ModulusMismatch(self.p.get(), o.p.get()));
        }
        let p = self.p;
        Ok(RElem::from_reduced(p, [p.add(self.a, o.a), p.add(self.b, o.b), p.add(self.c, o.c), p.add(self.d, o.d)]))
    }
}

impl Add for RElem {
    type Output = RElem;
    fn add(self, o: RElem) -> RElem {
        self.checked_add(&o).expect("RElem modulus mismatch")
    }
}

impl Neg for RElem {
    type Output = RElem;
    fn neg(self) -> RElem {
        let p = self.p;
        RElem::from_reduced(p, [p.neg(self.a), p.neg(self.b), p.neg(self.c), p.neg(self.d)])
    }
}

impl Sub for RElem {
    type Output = RElem;
    fn sub(self, o: RElem) -> RElem {
        self + (-o)
    }
}

impl Mul for RElem {
    type Output = RElem;
    fn mul(self, o: RElem) -> RElem {
        self.checked_mul(&o).expect("RElem modulus mismatch")
    }
}

impl fmt::Display for RElem {
    /// Renders as `a + u*b + v*c + uv*d` with zero terms left out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = [("", self.a), ("u*", self.b), ("v*", self.c), ("uv*", self.d)]
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|(s, c)| format!("{s}{c}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
