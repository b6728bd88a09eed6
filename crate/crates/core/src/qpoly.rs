//! Polynomials over R, and the quotient R[x]/<x^n - 1>.
//!
//! The degree of f in R[x] is the degree of its residue image mu(f) in
//! Z_p[x]; a polynomial is regular exactly when that image is nonzero.
//! Quotient elements keep exactly n coefficients so that the cyclic shift is
//! an index rotation.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::RElem;
use crate::zp::{Degree, PolyZp, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyR {
    p: Prime,
    coeffs: Vec<RElem>,
    modulus_n: Option<usize>,
}

/// Component indices of an [`RElem`] in a four-way split.
pub const COMPONENTS: [&str; 4] = ["1", "u", "v", "uv"];

impl PolyR {
    /// A polynomial in R[x] from its coefficients, trailing zeros trimmed.
    pub fn new(p: Prime, mut coeffs: Vec<RElem>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.modulus() != p) {
            return Err(Error::ModulusMismatch(p.get(), c.modulus().get()));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(PolyR { p, coeffs, modulus_n: None })
    }

    fn plain(p: Prime, mut coeffs: Vec<RElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyR { p, coeffs, modulus_n: None }
    }

    pub fn zero(p: Prime) -> Self {
        PolyR { p, coeffs: Vec::new(), modulus_n: None }
    }

    pub fn one(p: Prime) -> Self {
        Self::constant(RElem::one(p))
    }

    pub fn constant(c: RElem) -> Self {
        Self::plain(c.modulus(), vec![c])
    }

    /// c * x^k
    pub fn monomial(c: RElem, k: usize) -> Self {
        let mut coeffs = vec![RElem::zero(c.modulus()); k + 1];
        coeffs[k] = c;
        Self::plain(c.modulus(), coeffs)
    }

    /// a(x) + u b(x) + v c(x) + uv d(x)
    pub fn from_components(parts: [&PolyZp; 4]) -> Result<Self> {
        let p = parts[0].modulus();
        for q in &parts[1..] {
            if q.modulus() != p {
                return Err(Error::ModulusMismatch(p.get(), q.modulus().get()));
            }
        }
        let len = parts.iter().map(|q| q.coeffs().len()).max().unwrap_or(0);
        let coeffs = (0..len).map(|i| RElem::from_reduced(p, parts.map(|q| q.coeff(i)))).collect();
        Ok(Self::plain(p, coeffs))
    }

    /// Embeds a Z_p[x] polynomial, scaled by the ring element `e`.
    pub fn from_zp(f: &PolyZp, e: RElem) -> Self {
        let p = f.modulus();
        let coeffs = f.coeffs().iter().map(|&c| RElem::scalar(p, c) * e).collect();
        Self::plain(p, coeffs)
    }

    /// x^n - 1 in R[x].
    pub fn x_n_minus_1(p: Prime, n: usize) -> Self {
        Self::from_zp(&PolyZp::x_n_minus_1(p, n), RElem::one(p))
    }

    /// Image in R[x]/<x^n - 1>, held with exactly `n` coefficients.
    pub fn into_quotient(self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("length must be positive".into()));
        }
        if let Some(m) = self.modulus_n {
            if m != n {
                return Err(Error::LengthMismatch(m, n));
            }
            return Ok(self);
        }
        let mut coeffs = vec![RElem::zero(self.p); n];
        for (i, c) in self.coeffs.into_iter().enumerate() {
            coeffs[i % n] = coeffs[i % n] + c;
        }
        Ok(PolyR { p: self.p, coeffs, modulus_n: Some(n) })
    }

    /// Forgets the quotient structure and trims trailing zeros.
    pub fn to_plain(&self) -> Self {
        Self::plain(self.p, self.coeffs.clone())
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn modulus_n(&self) -> Option<usize> {
        self.modulus_n
    }

    pub fn coeffs(&self) -> &[RElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RElem {
        self.coeffs.get(i).copied().unwrap_or_else(|| RElem::zero(self.p))
    }

    /// Coefficients 0..n, zero padded.
    pub fn coeffs_padded(&self, n: usize) -> Vec<RElem> {
        (0..n).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RElem::is_zero)
    }

    /// One of the four Z_p[x] components (0: constant part, 1: u, 2: v, 3: uv).
    pub fn component(&self, k: usize) -> PolyZp {
        PolyZp::from_reduced(self.p, self.coeffs.iter().map(|c| c.components()[k]).collect())
    }

    pub fn components(&self) -> [PolyZp; 4] {
        [0, 1, 2, 3].map(|k| self.component(k))
    }

    /// mu(f), the coefficientwise image in Z_p[x].
    pub fn mu(&self) -> PolyZp {
        self.component(0)
    }

    /// deg f := deg mu(f).
    pub fn degree(&self) -> Degree {
        self.mu().degree()
    }

    /// Index of the highest nonzero coefficient, ignoring the residue map.
    pub fn true_degree(&self) -> Degree {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            Some(i) => Degree::Finite(i),
            None => Degree::NegInf,
        }
    }

    /// Regular (non-zero-divisor) iff mu(f) != 0.
    pub fn is_regular(&self) -> bool {
        self.coeffs.iter().any(RElem::is_unit)
    }

    fn common_modulus(&self, o: &PolyR) -> Result<Option<usize>> {
        if self.p != o.p {
            return Err(Error::ModulusMismatch(self.p.get(), o.p.get()));
        }
        match (self.modulus_n, o.modulus_n) {
            (Some(a), Some(b)) if a != b => Err(Error::LengthMismatch(a, b)),
            (a, b) => Ok(a.or(b)),
        }
    }

    fn finish(p: Prime, coeffs: Vec<RElem>, n: Option<usize>) -> Result<Self> {
        let f = Self::plain(p, coeffs);
        match n {
            Some(n) => f.into_quotient(n),
            None => Ok(f),
        }
    }

    pub fn checked_add(&self, o: &PolyR) -> Result<PolyR> {
        let n = self.common_modulus(o)?;
        let len = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + o.coeff(i)).collect();
        Self::finish(self.p, coeffs, n)
    }

    pub fn checked_sub(&self, o: &PolyR) -> Result<PolyR> {
        self.checked_add(&o.neg())
    }

    pub fn neg(&self) -> PolyR {
        PolyR { p: self.p, coeffs: self.coeffs.iter().map(|&c| -c).collect(), modulus_n: self.modulus_n }
    }

    /// Product in R[x], or in the quotient when either factor lives there.
    pub fn checked_mul(&self, o: &PolyR) -> Result<PolyR> {
        let n = self.common_modulus(o)?;
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::finish(self.p, Vec::new(), n);
        }
        let mut acc = vec![RElem::zero(self.p); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                acc[i + j] = acc[i + j] + a * b;
            }
        }
        Self::finish(self.p, acc, n)
    }

    /// Cyclic convolution: the product reduced by x^n = 1.
    pub fn mul_mod(&self, o: &PolyR, n: usize) -> Result<PolyR> {
        for m in [self.modulus_n, o.modulus_n].into_iter().flatten() {
            if m != n {
                return Err(Error::LengthMismatch(m, n));
            }
        }
        self.to_plain().checked_mul(&o.to_plain())?.into_quotient(n)
    }

    pub fn scale(&self, c: RElem) -> PolyR {
        let coeffs = self.coeffs.iter().map(|&a| a * c).collect();
        match self.modulus_n {
            Some(_) => PolyR { p: self.p, coeffs, modulus_n: self.modulus_n },
            None => Self::plain(self.p, coeffs),
        }
    }

    /// Multiplication by a Z_p[x] polynomial.
    pub fn mul_zp(&self, f: &PolyZp) -> Result<PolyR> {
        self.checked_mul(&PolyR::from_zp(f, RElem::one(self.p)))
    }

    /// x * f in the quotient: the cyclic shift T.
    pub fn shift(&self) -> PolyR {
        let n = self.modulus_n.expect("cyclic shift needs a quotient element");
        let mut coeffs = self.coeffs.clone();
        coeffs.rotate_right(1);
        debug_assert_eq!(coeffs.len(), n);
        PolyR { p: self.p, coeffs, modulus_n: self.modulus_n }
    }

    /// Division by a regular polynomial in R[x]: `(q, r)` with
    /// `self = g*q + r` and `deg r < deg g`.
    ///
    /// The pivot is the unit coefficient of g at index deg g. Coefficients of
    /// the remainder at or above that index are cleared in three passes, one
    /// per power of the maximal ideal, which leaves `r` shorter than
    /// `deg g` as a coefficient sequence and not only under mu.
    pub fn divmod(&self, g: &PolyR) -> Result<(PolyR, PolyR)> {
        self.common_modulus(g)?;
        let Degree::Finite(dg) = g.degree() else {
            return Err(Error::NonRegularDivisor);
        };
        let p = self.p;
        let lead_inv = g.coeffs[dg].inverse().expect("mu-leading coefficient is a unit");
        let mut r = self.coeffs.clone();
        let mut q: Vec<RElem> = Vec::new();
        // x in M^k
        let in_power = |x: &RElem, k: usize| -> bool {
            let [a, b, c, d] = x.components();
            match k {
                0 => true,
                1 => a == 0,
                2 => a == 0 && b == 0 && c == 0,
                _ => d == 0 && a == 0 && b == 0 && c == 0,
            }
        };
        for level in 0..3 {
            while let Some(e) = (dg..r.len()).rev().find(|&i| !in_power(&r[i], level + 1)) {
                let c = r[e] * lead_inv;
                let shift = e - dg;
                if q.len() <= shift {
                    q.resize(shift + 1, RElem::zero(p));
                }
                q[shift] = q[shift] + c;
                if r.len() < shift + g.coeffs.len() {
                    r.resize(shift + g.coeffs.len(), RElem::zero(p));
                }
                for (j, &gj) in g.coeffs.iter().enumerate() {
                    r[shift + j] = r[shift + j] - c * gj;
                }
            }
        }
        Ok((Self::plain(p, q), Self::plain(p, r)))
    }

    /// Z_p coordinates in component-major order: all constant parts, then
    /// all u parts, then v, then uv. Requires a quotient element.
    pub fn to_component_major(&self) -> Vec<u32> {
        let n = self.coeffs.len();
        let mut v = vec![0u32; 4 * n];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (k, x) in c.components().into_iter().enumerate() {
                v[k * n + i] = x;
            }
        }
        v
    }

    pub fn from_component_major(p: Prime, n: usize, v: &[u32]) -> Result<Self> {
        if v.len() != 4 * n {
            return Err(Error::LengthMismatch(v.len(), 4 * n));
        }
        let coeffs = (0..n)
            .map(|i| RElem::new(p, v[i] as u64, v[n + i] as u64, v[2 * n + i] as u64, v[3 * n + i] as u64))
            .collect();
        Ok(PolyR { p, coeffs, modulus_n: Some(n) })
    }

    /// Z_p coordinates in position-major order: coordinates 4i..4i+3 hold
    /// the components of the coefficient of x^i.
    pub fn to_position_major(&self) -> Vec<u32> {
        self.coeffs.iter().flat_map(|c| c.components()).collect()
    }

    pub fn from_position_major(p: Prime, n: usize, v: &[u32]) -> Result<Self> {
        if v.len() != 4 * n {
            return Err(Error::LengthMismatch(v.len(), 4 * n));
        }
        let coeffs = v.chunks(4).map(|c| RElem::new(p, c[0] as u64, c[1] as u64, c[2] as u64, c[3] as u64)).collect();
        Ok(PolyR { p, coeffs, modulus_n: Some(n) })
    }
}

/// Renders one component as a factor, e.g. `u*(x + 2)` or `v*x^2`.
fn render_part(prefix: &str, f: &PolyZp) -> Option<String> {
    if f.is_zero() {
        return None;
    }
    let body = f.to_string();
    let terms = f.coeffs().iter().filter(|&&c| c != 0).count();
    Some(match (prefix, terms) {
        ("", _) => body,
        (pre, _) if body == "1" => pre.to_string(),
        (pre, 1) => format!("{pre}*{body}"),
        (pre, _) => format!("{pre}*({body})"),
    })
}

impl fmt::Display for PolyR {
    /// Parseable rendering: `a(x) + u*(b(x)) + v*(c(x)) + u*v*(d(x))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.components();
        let rendered: Vec<String> =
            ["", "u", "v", "u*v"].iter().zip(&parts).filter_map(|(pre, q)| render_part(pre, q)).collect();
        if rendered.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", rendered.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Echelon;

    fn p(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    fn zp(pr: u32, c: &[i64]) -> PolyZp {
        PolyZp::from_signed(p(pr), c)
    }

    fn r(pr: u32, parts: [&[i64]; 4]) -> PolyR {
        PolyR::from_components(parts.map(|c| zp(pr, c)).each_ref()).unwrap()
    }

    #[test]
    fn degree_examples() {
        let f = r(3, [&[0, 0, 1], &[0, 0, 0, 0, 0, 1], &[], &[]]);
        assert_eq!(f.degree(), Degree::Finite(2));
        let g = r(3, [&[], &[], &[], &[0, 0, 0, 1]]);
        assert_eq!(g.degree(), Degree::NegInf);
        let h = r(3, [&[0, 0, 0, 1], &[1], &[], &[]]);
        assert_eq!(h.degree(), Degree::Finite(3));
    }

    #[test]
    fn regular_examples() {
        assert!(!r(3, [&[], &[1], &[0, 1], &[]]).is_regular());
        assert!(r(3, [&[0, 1], &[1], &[], &[]]).is_regular());
        let f = r(3, [&[2, 0, 1], &[1, 1], &[0, 2], &[1]]);
        assert!(f.is_regular());
        assert_eq!(f.degree(), Degree::Finite(2));
    }

    #[test]
    fn divmod_examples() {
        // x^2 / (x + u) = x - u exactly
        let x2 = r(3, [&[0, 0, 1], &[], &[], &[]]);
        let g = r(3, [&[0, 1], &[1], &[], &[]]);
        let (q, rem) = x2.divmod(&g).unwrap();
        assert_eq!(q, r(3, [&[0, 1], &[-1], &[], &[]]));
        assert!(rem.is_zero());

        let n = PolyR::x_n_minus_1(p(3), 3);
        let xm1 = r(3, [&[-1, 1], &[], &[], &[]]);
        let (q, rem) = n.divmod(&xm1).unwrap();
        assert_eq!(q, PolyR::from_zp(&PolyZp::x_minus_1_pow(p(3), 2), RElem::one(p(3))));
        assert!(rem.is_zero());

        let f = r(3, [&[1, 2], &[0, 1], &[2], &[1, 1, 1]]);
        let (q, rem) = f.divmod(&PolyR::one(p(3))).unwrap();
        assert_eq!(q, f);
        assert!(rem.is_zero());

        let nonreg = r(3, [&[], &[1], &[], &[]]);
        assert_eq!(f.divmod(&nonreg), Err(Error::NonRegularDivisor));
    }

    #[test]
    fn mul_mod_examples() {
        let q = p(3);
        let x2 = PolyR::monomial(RElem::one(q), 2);
        let x = PolyR::monomial(RElem::one(q), 1);
        assert_eq!(x2.mul_mod(&x, 3).unwrap(), PolyR::one(q).into_quotient(3).unwrap());
        let g = PolyR::from_zp(&PolyZp::x_minus_1_pow(q, 2), RElem::one(q));
        let h = PolyR::from_zp(&PolyZp::x_minus_1_pow(q, 1), RElem::one(q));
        assert!(g.mul_mod(&h, 3).unwrap().is_zero());
        assert!(g.mul_mod(&PolyR::zero(q), 3).unwrap().is_zero());
        let g3 = g.clone().into_quotient(3).unwrap();
        assert_eq!(g3.mul_mod(&h, 4), Err(Error::LengthMismatch(3, 4)));
    }

    #[test]
    fn quotient_keeps_fixed_length() {
        let f = r(2, [&[1], &[], &[], &[]]).into_quotient(4).unwrap();
        assert_eq!(f.coeffs().len(), 4);
        assert_eq!(f.shift().coeff(1), RElem::one(p(2)));
    }

    #[test]
    fn vector_layouts_round_trip() {
        let f = r(3, [&[1, 2, 0], &[0, 1], &[2, 2, 2], &[0, 0, 1]]).into_quotient(3).unwrap();
        let cm = f.to_component_major();
        assert_eq!(cm, vec![1, 2, 0, 0, 1, 0, 2, 2, 2, 0, 0, 1]);
        assert_eq!(PolyR::from_component_major(p(3), 3, &cm).unwrap(), f);
        let pm = f.to_position_major();
        assert_eq!(&pm[..4], &[1, 0, 2, 0]);
        assert_eq!(PolyR::from_position_major(p(3), 3, &pm).unwrap(), f);
    }

    #[test]
    fn render() {
        let f = r(3, [&[1, 1, 1], &[2, 1], &[], &[0, 2]]);
        assert_eq!(f.to_string(), "x^2 + x + 1 + u*(x + 2) + u*v*2*x");
        assert_eq!(r(3, [&[], &[], &[1], &[]]).to_string(), "v");
        assert_eq!(PolyR::zero(p(3)).to_string(), "0");
    }

    /// Each of the criteria mu(f) != 0, "some coefficient is a unit" and
    /// "f is not a zero divisor" must agree. The zero-divisor test computes
    /// the kernel of h -> f*h on polynomials h of the same length.
    fn is_zero_divisor(f: &PolyR, len: usize) -> bool {
        let q = f.modulus();
        let out_len = len + f.coeffs().len();
        // columns of the multiplication map, one per Z_p coordinate of h
        let mut images: Vec<Vec<u32>> = Vec::new();
        for i in 0..len {
            for e in RElem::basis(q) {
                let prod = f.checked_mul(&PolyR::monomial(e, i)).unwrap();
                let mut v: Vec<u32> = prod.coeffs().iter().flat_map(|c| c.components()).collect();
                v.resize(4 * out_len, 0);
                images.push(v);
            }
        }
        let rank = Echelon::from_rows(q, 4 * out_len, images).dim();
        rank < 4 * len
    }

    #[test]
    fn regularity_criteria_agree_exhaustively() {
        for (pr, len) in [(2u32, 1usize), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
            let q = p(pr);
            let total = (pr as u64).pow(4 * len as u32);
            for idx in 0..total {
                let mut k = idx;
                let coeffs: Vec<RElem> = (0..len)
                    .map(|_| {
                        let mut c = [0u64; 4];
                        for x in c.iter_mut() {
                            *x = k % pr as u64;
                            k /= pr as u64;
                        }
                        RElem::new(q, c[0], c[1], c[2], c[3])
                    })
                    .collect();
                let f = PolyR::new(q, coeffs).unwrap();
                if f.is_zero() {
                    continue;
                }
                let mu_nonzero = !f.mu().is_zero();
                assert_eq!(mu_nonzero, f.is_regular());
                assert_eq!(mu_nonzero, !is_zero_divisor(&f, len), "{f}");
            }
        }
    }

    #[test]
    fn unit_scaling_preserves_degree() {
        let q = p(3);
        let f = r(3, [&[1, 0, 2], &[1, 1, 1, 1], &[], &[2]]);
        for c in RElem::all(q).filter(RElem::is_unit) {
            assert_eq!(f.scale(c).degree(), f.degree());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_polyr(pr: u32, max_len: usize) -> impl Strategy<Value = PolyR> {
            proptest::collection::vec(proptest::array::uniform4(0..pr as u64), 0..max_len).prop_map(move |cs| {
                let q = Prime::new(pr).unwrap();
                PolyR::new(q, cs.into_iter().map(|[a, b, c, d]| RElem::new(q, a, b, c, d)).collect()).unwrap()
            })
        }

        proptest! {
            #[test]
            fn division_identity(f in arb_polyr(3, 9), g in arb_polyr(3, 6)) {
                prop_assume!(g.is_regular());
                let (q, r) = f.divmod(&g).unwrap();
                prop_assert_eq!(g.checked_mul(&q).unwrap().checked_add(&r).unwrap(), f);
                prop_assert!(r.degree() < g.degree());
                prop_assert!(r.true_degree() < g.degree());
            }
        }
    }
}
