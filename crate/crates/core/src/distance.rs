//! Minimum Hamming distance: an exhaustive oracle, the reduction to the
//! Z_p code <a3>, and the closed forms for length p^l.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{CanonicalGens, CyclicCode};
use crate::error::{Error, Result};
use crate::qpoly::PolyR;
use crate::ring::RElem;
use crate::zp::{PolyZp, Prime};

/// Default number of codewords an exhaustive search may visit (3^16).
pub const DEFAULT_CODEWORD_BUDGET: u128 = 43_046_721;

/// Minimum weight of the nonzero vectors spanned by `rows`, or `None` for
/// the zero space. `floor` is a known lower bound on every nonzero weight;
/// the search stops as soon as it is reached.
///
/// Codewords are visited in modular p-ary Gray-code order: step s adds the
/// row indexed by the lowest nonzero base-p digit of s, so each step costs
/// one row addition. The top digits are fixed per parallel partition.
pub fn min_weight<F>(p: Prime, rows: &[Vec<u32>], weight: F, floor: usize, budget: u128) -> Result<Option<usize>>
where
    F: Fn(&[u32]) -> usize + Sync,
{
    let k = rows.len();
    if k == 0 {
        return Ok(None);
    }
    let q = p.get() as u64;
    let needed = (q as u128).saturating_pow(k as u32);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let width = rows[0].len();
    let fixed = (0..=k).find(|&m| q.pow(m as u32) >= 64).unwrap_or(k);
    let free = k - fixed;
    let best = AtomicUsize::new(usize::MAX);
    (0..q.pow(fixed as u32)).into_par_iter().for_each(|prefix| {
        let mut w = vec![0u32; width];
        let mut digits = prefix;
        for row in &rows[free..] {
            let c = (digits % q) as u32;
            digits /= q;
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = p.add(*x, p.mul(c, y));
                }
            }
        }
        let mut local = usize::MAX;
        if prefix != 0 {
            local = weight(&w);
        }
        let steps = q.pow(free as u32);
        for s in 1..steps {
            let mut j = 0;
            let mut t = s;
            while t % q == 0 {
                t /= q;
                j += 1;
            }
            for (x, &y) in w.iter_mut().zip(&rows[j]) {
                *x = p.add(*x, y);
            }
            let wt = weight(&w);
            if wt < local {
                local = wt;
                if local <= floor {
                    break;
                }
            }
            if s & 0x3ff == 0 && best.load(Ordering::Relaxed) <= floor {
                break;
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
    });
    Ok(Some(best.into_inner()))
}

/// Number of nonzero coordinates.
pub fn hamming_weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Number of positions with a nonzero ring element, for a component-major
/// vector of length 4n.
pub fn r_weight(n: usize, v: &[u32]) -> usize {
    (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0 || v[2 * n + i] != 0 || v[3 * n + i] != 0).count()
}

/// Whether some nonzero codeword is supported on a single position. By
/// cyclicity it suffices to intersect with the vectors supported on 0.
fn has_weight_one(c: &CyclicCode) -> bool {
    let n = c.len();
    let mut joined = c.basis().clone();
    let mut grew = 0;
    for k in 0..4 {
        let mut e = vec![0u32; 4 * n];
        e[k * n] = 1;
        if joined.insert(e) {
            grew += 1;
        }
    }
    grew < 4
}

/// Minimum Hamming weight over R of the nonzero codewords, `None` for the
/// zero code.
pub fn min_hamming_weight(c: &CyclicCode, budget: u128) -> Result<Option<usize>> {
    if c.is_zero() {
        return Ok(None);
    }
    if has_weight_one(c) {
        return Ok(Some(1));
    }
    let n = c.len();
    min_weight(c.modulus(), c.basis().rows(), |v| r_weight(n, v), 2, budget)
}

/// Generator of {f in Z_p[x]/<x^n - 1> : uv f in C}, found by testing every
/// f. Used as a reference for [`CyclicCode::c_uv_generator`].
pub fn c_uv_generator_brute(c: &CyclicCode) -> Result<PolyZp> {
    let (p, n) = (c.modulus(), c.len());
    let total = (p.get() as u128).saturating_pow(n as u32);
    if total > DEFAULT_CODEWORD_BUDGET {
        return Err(Error::BudgetExceeded { needed: total, budget: DEFAULT_CODEWORD_BUDGET });
    }
    let q = p.get() as u64;
    let mut acc = PolyZp::x_n_minus_1(p, n);
    for idx in 0..total as u64 {
        let mut k = idx;
        let f = PolyZp::new(
            p,
            (0..n).map(|_| {
                let c = k % q;
                k /= q;
                c
            }),
        );
        if c.contains(&PolyR::from_zp(&f, RElem::uv(p)))? {
            acc = acc.gcd(&f)?;
        }
    }
    Ok(acc)
}

/// Generator rows x^i f, 0 <= i < n - deg f, of the Z_p cyclic code <f>.
pub fn cyclic_zp_rows(f: &PolyZp, n: usize) -> Vec<Vec<u32>> {
    if f.is_zero() || f.deg_or_zero() >= n {
        return Vec::new();
    }
    (0..n - f.deg_or_zero()).map(|i| f.shift(i).to_fixed(n)).collect()
}

/// Minimum Hamming distance of the Z_p cyclic code <f> of length n.
pub fn zp_cyclic_distance(f: &PolyZp, n: usize, budget: u128) -> Result<Option<usize>> {
    min_weight(f.modulus(), &cyclic_zp_rows(f, n), hamming_weight, 1, budget)
}

/// d(C) computed as d(<a3>) over Z_p; the reduction needs p | n.
pub fn distance_via_torsion(c: &CyclicCode, budget: u128) -> Result<usize> {
    let p = c.modulus().get();
    if !c.len().is_multiple_of(p as usize) {
        return Err(Error::CoprimeLength { p, n: c.len() });
    }
    if c.is_zero() {
        return Err(Error::ZeroCode);
    }
    zp_cyclic_distance(&c.gens().a3, c.len(), budget)?
        .ok_or_else(|| Error::Internal("nonzero code with trivial torsion".into()))
}

/// Digit pattern classes of an exponent written in base p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PAdicKind {
    /// q leading nonzero digits followed only by zeros.
    ZeroExpansion(usize),
    /// q leading nonzero digits, a zero, then some nonzero digit.
    NonZeroExpansion(usize),
    /// Every digit nonzero.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PAdicExpansion {
    pub m: usize,
    pub p: u32,
    pub l: usize,
    /// Most significant first: (b_{l-1}, ..., b_0).
    pub digits: Vec<usize>,
    pub kind: PAdicKind,
}

impl PAdicExpansion {
    /// The leading run length q (l for a full expansion).
    pub fn q(&self) -> usize {
        match self.kind {
            PAdicKind::ZeroExpansion(q) | PAdicKind::NonZeroExpansion(q) => q,
            PAdicKind::Full => self.l,
        }
    }
}

impl fmt::Display for PAdicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.digits.iter().map(ToString::to_string).collect();
        write!(f, "{} = ({})_{} {:?}", self.m, d.join(","), self.p, self.kind)
    }
}

pub fn p_adic_classify(m: usize, p: Prime, l: usize) -> Result<PAdicExpansion> {
    let base = p.get() as usize;
    let limit = base.checked_pow(l as u32).ok_or_else(|| Error::OutOfRange(format!("{base}^{l} overflows")))?;
    if m == 0 || m >= limit {
        return Err(Error::OutOfRange(format!("{m} is not in (0, {limit})")));
    }
    let mut digits = vec![0; l];
    let mut r = m;
    for slot in digits.iter_mut().rev() {
        *slot = r % base;
        r /= base;
    }
    let q = digits.iter().take_while(|&&b| b != 0).count();
    let kind = if q == l {
        PAdicKind::Full
    } else if digits[q + 1..].iter().all(|&b| b == 0) {
        PAdicKind::ZeroExpansion(q)
    } else {
        PAdicKind::NonZeroExpansion(q)
    };
    Ok(PAdicExpansion { m, p: p.get(), l, digits, kind })
}

/// Closed-form distance for n = p^l under the strict chains
/// t > t1 > t3 > 0 and t > t2 > t3 > 0.
pub fn distance_closed_form(gens: &CanonicalGens, l: usize) -> Result<usize> {
    let p = gens.p.get() as usize;
    if p.checked_pow(l as u32) != Some(gens.n) {
        return Err(Error::HypothesisNotMet(format!("length {} is not {p}^{l}", gens.n)));
    }
    let (t, t1, t2, t3) = (gens.t(), gens.t1(), gens.t2(), gens.t3());
    if !(t > t1 && t1 > t3 && t > t2 && t2 > t3 && t3 > 0) {
        return Err(Error::HypothesisNotMet(format!(
            "degrees (t, t1, t2, t3) = ({t}, {t1}, {t2}, {t3}) are not strictly nested"
        )));
    }
    if t3 <= p.pow(l as u32 - 1) {
        return Ok(2);
    }
    let e = p_adic_classify(t3, gens.p, l)?;
    let prod: usize = e.digits[..e.q()].iter().map(|b| b + 1).product();
    Ok(match e.kind {
        PAdicKind::NonZeroExpansion(_) => 2 * prod,
        _ => prod,
    })
}

/// (b + 1) d for the subcode generated by (x^{p^{l-1}} - 1)^b h(x).
pub fn repeated_root_subcode_distance(b: usize, p: Prime, h_distance: usize) -> Result<usize> {
    if b == 0 || b >= p.get() as usize {
        return Err(Error::OutOfRange(format!("multiplicity {b} is not in [1, {})", p.get())));
    }
    Ok((b + 1) * h_distance)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingletonCheck {
    pub holds: bool,
    /// (n - rank + 1) - d
    pub slack: i64,
    pub distance: usize,
    pub rank: usize,
}

/// Evaluates d(C) <= n - rank(C) + 1, with rank the minimal number of
/// generators computed from the basis.
pub fn singleton_check(c: &CyclicCode, budget: u128) -> Result<SingletonCheck> {
    if c.is_zero() {
        return Err(Error::ZeroCode);
    }
    let distance = if c.len().is_multiple_of(c.modulus().get() as usize) {
        distance_via_torsion(c, budget)?
    } else {
        min_hamming_weight(c, budget)?.ok_or(Error::ZeroCode)?
    };
    let rank = c.rank();
    let slack = (c.len() as i64 - rank as i64 + 1) - distance as i64;
    Ok(SingletonCheck { holds: slack >= 0, slack, distance, rank })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMethod {
    ClosedForm,
    Torsion,
    Oracle,
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistanceMethod::ClosedForm => "closed-form",
            DistanceMethod::Torsion => "torsion",
            DistanceMethod::Oracle => "oracle",
        })
    }
}

/// Every distance value that could be computed, the one reported, and
/// whether any two disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub value: Option<usize>,
    pub method: DistanceMethod,
    pub closed_form: Option<usize>,
    pub torsion: Option<usize>,
    pub oracle: Option<usize>,
    pub mismatch: bool,
}

/// l with n = p^l, if any.
pub fn prime_power_exponent(p: Prime, n: usize) -> Option<usize> {
    let base = p.get() as usize;
    let mut m = n;
    let mut l = 0;
    while m > 1 && m.is_multiple_of(base) {
        m /= base;
        l += 1;
    }
    (m == 1 && l > 0).then_some(l)
}

/// Computes every applicable distance and reports the most trustworthy
/// one: the oracle when it fits the budget, then the torsion reduction,
/// then the closed form. `prefer` restricts the computation to one method.
pub fn distance_report(c: &CyclicCode, prefer: Option<DistanceMethod>, budget: u128) -> Result<DistanceReport> {
    let want = |m: DistanceMethod| prefer.is_none_or(|x| x == m);
    let p = c.modulus();
    let closed_form = if want(DistanceMethod::ClosedForm) {
        match prime_power_exponent(p, c.len()) {
            Some(l) => match distance_closed_form(c.gens(), l) {
                Ok(d) => Some(d),
                Err(Error::HypothesisNotMet(_)) => None,
                Err(e) => return Err(e),
            },
            None => None,
        }
    } else {
        None
    };
    let torsion = if want(DistanceMethod::Torsion) && !c.is_zero() && c.len().is_multiple_of(p.get() as usize) {
        match distance_via_torsion(c, budget) {
            Ok(d) => Some(d),
            Err(Error::BudgetExceeded { .. }) if prefer.is_none() => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let oracle = if want(DistanceMethod::Oracle) {
        match min_hamming_weight(c, budget) {
            Ok(d) => d,
            Err(Error::BudgetExceeded { .. }) if prefer.is_none() && (torsion.is_some() || closed_form.is_some()) => {
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    if let Some(m) = prefer {
        let value = match m {
            DistanceMethod::ClosedForm => {
                closed_form.ok_or_else(|| Error::HypothesisNotMet("closed form does not apply to this code".into()))?
            }
            DistanceMethod::Torsion => torsion.ok_or(Error::ZeroCode)?,
            DistanceMethod::Oracle => return Ok(report(oracle, m, closed_form, torsion, oracle)),
        };
        return Ok(report(Some(value), m, closed_form, torsion, oracle));
    }
    let (value, method) = if oracle.is_some() || c.is_zero() {
        (oracle, DistanceMethod::Oracle)
    } else if torsion.is_some() {
        (torsion, DistanceMethod::Torsion)
    } else {
        (closed_form, DistanceMethod::ClosedForm)
    };
    Ok(report(value, method, closed_form, torsion, oracle))
}

fn report(
    value: Option<usize>,
    method: DistanceMethod,
    closed_form: Option<usize>,
    torsion: Option<usize>,
    oracle: Option<usize>,
) -> DistanceReport {
    let known: Vec<usize> = [closed_form, torsion, oracle].into_iter().flatten().collect();
    let mismatch = known.windows(2).any(|w| w[0] != w[1]);
    DistanceReport { value, method, closed_form, torsion, oracle, mismatch }
}

/// The subspace uv*<f> for a Z_p polynomial, as a code over R.
pub fn uv_code(f: &PolyZp, n: usize) -> Result<CyclicCode> {
    let p = f.modulus();
    CyclicCode::from_generators(p, n, &[PolyR::from_zp(f, RElem::uv(p))])
}
