//! Arithmetic in Z_p and Z_p[x].
//!
//! Polynomials are dense, lowest coefficient first, with trailing zeros
//! trimmed. Everything here is sized for desk-scale lengths (n up to a few
//! dozen), so the factorization of x^n - 1 is plain trial division.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    /// Validates `p` by trial division.
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u32;
        while (d as u64) * (d as u64) <= p as u64 {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.0 as u64) as u32
    }

    /// Reduces a signed integer into [0, p).
    #[inline]
    pub fn reduce_signed(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero mod {}", self.0);
        self.pow(a, self.0 as u64 - 2)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Polynomial degree with a dedicated value for the zero polynomial that
/// sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial over Z_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyZp {
    p: Prime,
    coeffs: Vec<u32>,
}

impl PolyZp {
    /// Builds a polynomial from low-to-high coefficients, reducing mod p.
    pub fn new(p: Prime, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| p.reduce(c)).collect();
        Self::from_reduced(p, coeffs)
    }

    /// Builds from signed coefficients, e.g. `[-1, 0, 1]` for x^2 - 1.
    pub fn from_signed(p: Prime, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| p.reduce_signed(c)).collect();
        Self::from_reduced(p, coeffs)
    }

    pub(crate) fn from_reduced(p: Prime, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p.get()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyZp { p, coeffs }
    }

    pub fn zero(p: Prime) -> Self {
        PolyZp { p, coeffs: Vec::new() }
    }

    pub fn one(p: Prime) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: Prime, c: u32) -> Self {
        Self::from_reduced(p, vec![c % p.get()])
    }

    /// c * x^k
    pub fn monomial(p: Prime, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c % p.get();
        Self::from_reduced(p, coeffs)
    }

    pub fn x(p: Prime) -> Self {
        Self::monomial(p, 1, 1)
    }

    /// x^n - 1
    pub fn x_n_minus_1(p: Prime, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = p.neg(1);
        coeffs[n] = p.add(coeffs[n], 1);
        Self::from_reduced(p, coeffs)
    }

    /// (x - 1)^k
    pub fn x_minus_1_pow(p: Prime, k: usize) -> Self {
        Self::from_signed(p, &[-1, 1]).pow(k)
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            l => Degree::Finite(l - 1),
        }
    }

    /// Degree as an integer with the zero polynomial mapped to 0. Only for
    /// callers that already know the polynomial is nonzero or do not care.
    pub fn deg_or_zero(&self) -> usize {
        self.degree().finite().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| p.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::from_reduced(p, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p));
        }
        let p = self.p;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p.get() as u64;
            }
        }
        Ok(Self::new(p, acc))
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p;
        Self::from_reduced(p, self.coeffs.iter().map(|&a| p.mul(a, c % p.get())).collect())
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        PolyZp { p: self.p, coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1; the zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.p.inv(self.leading()))
    }

    /// Euclidean division: returns `(q, r)` with `self = g*q + r` and
    /// `deg r < deg g`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check(g)?;
        let Degree::Finite(dg) = g.degree() else {
            return Err(Error::DivisionByZero);
        };
        let p = self.p;
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((Self::zero(p), self.clone()));
        }
        let inv_lead = p.inv(g.leading());
        let mut q = vec![0u32; r.len() - dg];
        for k in (dg..r.len()).rev() {
            let c = p.mul(r[k], inv_lead);
            if c == 0 {
                continue;
            }
            q[k - dg] = c;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                let idx = k - dg + j;
                r[idx] = p.sub(r[idx], p.mul(c, gj));
            }
        }
        r.truncate(dg);
        Ok((Self::from_reduced(p, q), Self::from_reduced(p, r)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divmod(g)?.1)
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        match self.divmod(g) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Whether `self` divides `g`. Errors when `self` is zero.
    pub fn divides(&self, g: &Self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(g.rem(self)?.is_zero())
    }

    /// Monic gcd by Euclid's algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Reduction modulo x^n - 1 by folding exponents.
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        assert!(n > 0);
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let p = self.p;
        let mut out = vec![0u32; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = p.add(out[i % n], c);
        }
        Self::from_reduced(p, out)
    }

    /// Coefficients padded (or folded) to exactly `n` entries.
    pub fn to_fixed(&self, n: usize) -> Vec<u32> {
        let mut v = self.reduce_cyclic(n).coeffs;
        v.resize(n, 0);
        v
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| p.add(p.mul(acc, x), c))
    }

    /// Total order used for canonical sorting: by degree, then by
    /// coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for PolyZp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyZp {
    type Output = PolyZp;
    fn add(self, rhs: &PolyZp) -> PolyZp {
        self.checked_add(rhs).expect("PolyZp modulus mismatch")
    }
}

impl Sub for &PolyZp {
    type Output = PolyZp;
    fn sub(self, rhs: &PolyZp) -> PolyZp {
        self.checked_sub(rhs).expect("PolyZp modulus mismatch")
    }
}

impl Mul for &PolyZp {
    type Output = PolyZp;
    fn mul(self, rhs: &PolyZp) -> PolyZp {
        self.checked_mul(rhs).expect("PolyZp modulus mismatch")
    }
}

impl Neg for &PolyZp {
    type Output = PolyZp;
    fn neg(self) -> PolyZp {
        let p = self.p;
        PolyZp::from_reduced(p, self.coeffs.iter().map(|&c| p.neg(c)).collect())
    }
}

/// Trial divisions allowed in one factorization.
const FACTOR_TRIAL_LIMIT: u64 = 4_000_000;

/// Iterates all monic polynomials of degree `d` over Z_p in lexicographic
/// order of the lower coefficients.
fn monic_of_degree(p: Prime, d: usize) -> impl Iterator<Item = PolyZp> {
    let count = (p.get() as u64).pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push((idx % p.get() as u64) as u32);
            idx /= p.get() as u64;
        }
        coeffs.push(1);
        PolyZp { p, coeffs }
    })
}

/// Multiplicative order of p modulo d (d coprime to p, d >= 1).
fn order_mod(p: Prime, d: usize) -> usize {
    if d == 1 {
        return 1;
    }
    let mut k = 1;
    let mut acc = p.get() as usize % d;
    while acc != 1 {
        acc = acc * p.get() as usize % d;
        k += 1;
    }
    k
}

/// Factors x^n - 1 into monic irreducibles with multiplicities, sorted by
/// [`PolyZp::canonical_cmp`].
///
/// Writing n = m p^e with p not dividing m, x^n - 1 = (x^m - 1)^(p^e) and
/// x^m - 1 is the product of the cyclotomic polynomials Phi_d for d | m.
/// Each Phi_d splits into irreducibles of degree ord_d(p), so trial
/// division runs only over that degree and only when Phi_d splits.
pub fn factor_xn_minus_1(p: Prime, n: usize) -> Result<Vec<(PolyZp, usize)>> {
    if n == 0 {
        return Err(Error::OutOfRange("length must be positive".into()));
    }
    let mut m = n;
    let mut pe = 1;
    while m.is_multiple_of(p.get() as usize) {
        m /= p.get() as usize;
        pe *= p.get() as usize;
    }
    let divisors: Vec<usize> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let mut cyclotomic: BTreeMap<usize, PolyZp> = BTreeMap::new();
    let mut out: Vec<(PolyZp, usize)> = Vec::new();
    let mut trials = 0u64;
    for &d in &divisors {
        let mut phi = PolyZp::x_n_minus_1(p, d);
        for (_, lower) in cyclotomic.iter().filter(|(e, _)| d % **e == 0) {
            phi = phi
                .exact_div(lower)
                .ok_or_else(|| Error::Internal(format!("cyclotomic division failed at d = {d}")))?;
        }
        cyclotomic.insert(d, phi.clone());
        let k = order_mod(p, d);
        let count = phi.deg_or_zero() / k;
        if count > 1 {
            trials = trials.saturating_add((p.get() as u64).saturating_pow(k as u32));
            if trials > FACTOR_TRIAL_LIMIT {
                return Err(Error::SizeGuard(format!("factoring x^{n} - 1 over Z_{p} needs too many trial divisions")));
            }
            let mut found = 0;
            for h in monic_of_degree(p, k) {
                if found + 1 == count {
                    break;
                }
                if let Some(q) = phi.exact_div(&h) {
                    phi = q;
                    out.push((h, pe));
                    found += 1;
                }
            }
            if found + 1 != count {
                return Err(Error::Internal(format!("expected {count} factors of degree {k}")));
            }
        }
        out.push((phi, pe));
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(out)
}

/// Trial-division factorization of a monic polynomial.
pub fn factor_by_trial(f: &PolyZp) -> Result<Vec<(PolyZp, usize)>> {
    let p = f.modulus();
    let mut rest = f.monic();
    let mut out: Vec<(PolyZp, usize)> = Vec::new();
    let mut trials = 0u64;
    let mut d = 1;
    while 2 * d <= rest.deg_or_zero() {
        trials += (p.get() as u64).saturating_pow(d as u32);
        if trials > FACTOR_TRIAL_LIMIT {
            return Err(Error::SizeGuard(format!(
                "factoring a degree-{} polynomial over Z_{p} needs too many trial divisions",
                f.deg_or_zero()
            )));
        }
        for h in monic_of_degree(p, d) {
            let mut mult = 0;
            while let Some(q) = rest.exact_div(&h) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((h, mult));
            }
            if 2 * d > rest.deg_or_zero() {
                break;
            }
        }
        d += 1;
    }
    if rest.deg_or_zero() >= 1 {
        match out.iter_mut().find(|(h, _)| *h == rest) {
            Some((_, m)) => *m += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(out)
}

/// Irreducibility test: f of degree k is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every i <= k/2.
pub fn is_irreducible(f: &PolyZp) -> bool {
    let Some(deg) = f.degree().finite() else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    let p = f.modulus();
    let x = PolyZp::x(p).rem(f).expect("nonzero modulus");
    let mut power = x.clone();
    for _ in 1..=deg / 2 {
        power = pow_mod(&power, p.get() as u64, f);
        let g = (&power - &x).gcd(f).expect("f is nonzero");
        if g.deg_or_zero() > 0 {
            return false;
        }
    }
    true
}

/// Irreducibility by exhaustive trial over monic divisors of degree up to
/// half the degree.
pub fn is_irreducible_by_trial(f: &PolyZp) -> bool {
    let Some(deg) = f.degree().finite() else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    (1..=deg / 2).all(|d| monic_of_degree(f.modulus(), d).all(|h| f.exact_div(&h).is_none()))
}

fn pow_mod(base: &PolyZp, mut e: u64, m: &PolyZp) -> PolyZp {
    let mut acc = PolyZp::one(m.modulus());
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &b).rem(m).expect("nonzero modulus");
        }
        b = (&b * &b).rem(m).expect("nonzero modulus");
        e >>= 1;
    }
    acc
}

/// All monic divisors of x^n - 1, sorted by [`PolyZp::canonical_cmp`].
pub fn monic_divisors_xn_minus_1(p: Prime, n: usize) -> Result<Vec<PolyZp>> {
    let factors = factor_xn_minus_1(p, n)?;
    let mut out = vec![PolyZp::one(p)];
    for (h, m) in &factors {
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*m {
                acc = &acc * h;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    fn poly(pr: u32, c: &[i64]) -> PolyZp {
        PolyZp::from_signed(p(pr), c)
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(3).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Prime::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn add_examples() {
        assert!((&poly(3, &[1, 1]) + &poly(3, &[2, 2])).is_zero());
        assert_eq!(&poly(3, &[0, 0, 1]) + &PolyZp::zero(p(3)), poly(3, &[0, 0, 1]));
        assert_eq!(&poly(2, &[1, 1]) + &poly(2, &[1, 0, 1]), poly(2, &[0, 1, 1]));
        assert_eq!(poly(2, &[1]).checked_add(&poly(3, &[1])), Err(Error::ModulusMismatch(2, 3)));
    }

    #[test]
    fn mul_examples() {
        let xm1 = poly(3, &[-1, 1]);
        assert_eq!(&(&xm1 * &xm1) * &xm1, PolyZp::x_n_minus_1(p(3), 3));
        assert_eq!(&poly(2, &[1, 1]) * &poly(2, &[1, 1, 1]), poly(2, &[1, 0, 0, 1]));
        let f = poly(5, &[3, 0, 4, 1]);
        assert_eq!(&f * &PolyZp::one(p(5)), f);
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = poly(3, &[0, 0, 1]).divmod(&poly(3, &[2, 1])).unwrap();
        assert_eq!((q, r), (poly(3, &[1, 1]), poly(3, &[1])));
        let (q, r) = PolyZp::x_n_minus_1(p(3), 3).divmod(&poly(3, &[-1, 1])).unwrap();
        assert_eq!(q, PolyZp::x_minus_1_pow(p(3), 2));
        assert!(r.is_zero());
        let (q, r) = poly(2, &[0, 1, 1]).divmod(&poly(2, &[0, 1])).unwrap();
        assert_eq!((q, r), (poly(2, &[1, 1]), PolyZp::zero(p(2))));
        assert_eq!(poly(3, &[1]).divmod(&PolyZp::zero(p(3))), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let c3 = PolyZp::x_minus_1_pow(p(3), 3);
        let c2 = PolyZp::x_minus_1_pow(p(3), 2);
        assert_eq!(c3.gcd(&c2).unwrap(), c2);
        let f = PolyZp::x_n_minus_1(p(2), 3);
        assert_eq!(f.gcd(&poly(2, &[1, 1])).unwrap(), poly(2, &[1, 1]));
        let g = poly(3, &[1, 2, 2]);
        assert_eq!(g.gcd(&PolyZp::zero(p(3))).unwrap(), g.monic());
        assert_eq!(PolyZp::zero(p(3)).gcd(&PolyZp::zero(p(3))), Err(Error::GcdOfZeros));
    }

    #[test]
    fn divides_examples() {
        let n3 = PolyZp::x_n_minus_1(p(3), 3);
        assert!(PolyZp::x_minus_1_pow(p(3), 2).divides(&n3).unwrap());
        assert!(!PolyZp::x_minus_1_pow(p(3), 3).divides(&PolyZp::x_minus_1_pow(p(3), 2)).unwrap());
        assert!(poly(5, &[1, 2, 3]).divides(&PolyZp::zero(p(5))).unwrap());
        assert_eq!(PolyZp::zero(p(3)).divides(&n3), Err(Error::DivisionByZero));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_xn_minus_1(p(3), 3).unwrap(), vec![(poly(3, &[-1, 1]), 3)]);
        assert_eq!(factor_xn_minus_1(p(2), 3).unwrap(), vec![(poly(2, &[1, 1]), 1), (poly(2, &[1, 1, 1]), 1)]);
        assert_eq!(factor_xn_minus_1(p(3), 2).unwrap(), vec![(poly(3, &[1, 1]), 1), (poly(3, &[-1, 1]), 1)]);
    }

    #[test]
    fn factorization_multiplies_back_and_is_irreducible() {
        for pr in [2u32, 3, 5, 7] {
            for n in 1..=24 {
                let factors = factor_xn_minus_1(p(pr), n).unwrap();
                let prod = factors.iter().fold(PolyZp::one(p(pr)), |acc, (h, m)| &acc * &h.pow(*m));
                assert_eq!(prod, PolyZp::x_n_minus_1(p(pr), n), "p={pr} n={n}");
                for (h, _) in &factors {
                    assert!(h.is_monic() && is_irreducible(h), "p={pr} n={n} {h}");
                    if (pr as u64).pow(h.deg_or_zero() as u32 / 2) <= 50_000 {
                        assert!(is_irreducible_by_trial(h), "p={pr} n={n} {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn coset_guided_factoring_matches_plain_trial() {
        for pr in [2u32, 3, 5] {
            for n in 1..=12 {
                let f = PolyZp::x_n_minus_1(p(pr), n);
                assert_eq!(factor_xn_minus_1(p(pr), n).unwrap(), factor_by_trial(&f).unwrap());
            }
        }
    }

    #[test]
    fn irreducibility_tests_agree() {
        for pr in [2u32, 3] {
            for d in 1..=6 {
                for f in monic_of_degree(p(pr), d) {
                    assert_eq!(is_irreducible(&f), is_irreducible_by_trial(&f), "{f}");
                }
            }
        }
    }

    #[test]
    fn factor_size_guard() {
        assert!(matches!(factor_xn_minus_1(p(97), 60), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn divisor_lattice_counts() {
        // (x-1)^3 over Z_3 has 4 monic divisors; x^3-1 over Z_2 has 4
        assert_eq!(monic_divisors_xn_minus_1(p(3), 3).unwrap().len(), 4);
        assert_eq!(monic_divisors_xn_minus_1(p(2), 3).unwrap().len(), 4);
        assert_eq!(monic_divisors_xn_minus_1(p(2), 4).unwrap().len(), 5);
    }

    #[test]
    fn degree_sentinel_orders_below_finite() {
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(PolyZp::zero(p(2)).degree(), Degree::NegInf);
        assert_eq!(poly(2, &[0, 1]).degree(), Degree::Finite(1));
    }

    #[test]
    fn display() {
        assert_eq!(poly(3, &[1, 2, 1]).to_string(), "x^2 + 2*x + 1");
        assert_eq!(PolyZp::zero(p(3)).to_string(), "0");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(pr: u32, max_len: usize) -> impl Strategy<Value = PolyZp> {
            proptest::collection::vec(0..pr as u64, 0..max_len)
                .prop_map(move |c| PolyZp::new(Prime::new(pr).unwrap(), c))
        }

        proptest! {
            #[test]
            fn division_identity(f in arb_poly(5, 12), g in arb_poly(5, 7)) {
                prop_assume!(!g.is_zero());
                let (q, r) = f.divmod(&g).unwrap();
                prop_assert_eq!(&(&g * &q) + &r, f);
                prop_assert!(r.degree() < g.degree());
            }

            #[test]
            fn gcd_divides_both(f in arb_poly(3, 9), g in arb_poly(3, 9)) {
                prop_assume!(!(f.is_zero() && g.is_zero()));
                let d = f.gcd(&g).unwrap();
                prop_assert!(d.is_monic());
                prop_assert!(d.divides(&f).unwrap());
                prop_assert!(d.divides(&g).unwrap());
            }
        }
    }
}
