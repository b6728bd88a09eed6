//! The unique generating tuple
//! A1 = g + u p1 + v q1 + uv r1, A2 = u a1 + v q2 + uv r2,
//! A3 = v a2 + uv r3, A4 = uv a3, and the ten divisibility conditions every
//! such tuple satisfies.

use std::fmt;

use super::{block, tower_of};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::qpoly::PolyR;
use crate::zp::{PolyZp, Prime};

/// Canonical generators. A trivial sub-ideal is encoded by x^n - 1 in the
/// corresponding slot of (g, a1, a2, a3), so t = n for a code with no unit
/// residue and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalGens {
    pub p: Prime,
    pub n: usize,
    pub g: PolyZp,
    pub p1: PolyZp,
    pub q1: PolyZp,
    pub r1: PolyZp,
    pub a1: PolyZp,
    pub q2: PolyZp,
    pub r2: PolyZp,
    pub a2: PolyZp,
    pub r3: PolyZp,
    pub a3: PolyZp,
}

fn deg(f: &PolyZp) -> usize {
    f.deg_or_zero()
}

/// Strict degree bound, with the zero polynomial always admissible.
fn below(f: &PolyZp, bound: usize) -> bool {
    f.degree().finite().is_none_or(|d| d < bound)
}

impl CanonicalGens {
    /// deg g
    pub fn t(&self) -> usize {
        deg(&self.g)
    }

    pub fn t1(&self) -> usize {
        deg(&self.a1)
    }

    pub fn t2(&self) -> usize {
        deg(&self.a2)
    }

    pub fn t3(&self) -> usize {
        deg(&self.a3)
    }

    /// min(t1, t2)
    pub fn t_prime(&self) -> usize {
        self.t1().min(self.t2())
    }

    fn big_n(&self) -> PolyZp {
        PolyZp::x_n_minus_1(self.p, self.n)
    }

    /// A1..A4 as elements of R[x]/<x^n - 1>. Slots whose leading generator
    /// is x^n - 1 come out as zero.
    pub fn a_polys(&self) -> [PolyR; 4] {
        let p = self.p;
        let z = PolyZp::zero(p);
        let build = |parts: [&PolyZp; 4]| {
            PolyR::from_components(parts).and_then(|f| f.into_quotient(self.n)).expect("components share the modulus")
        };
        [
            build([&self.g, &self.p1, &self.q1, &self.r1]),
            build([&z, &self.a1, &self.q2, &self.r2]),
            build([&z, &z, &self.a2, &self.r3]),
            build([&z, &z, &z, &self.a3]),
        ]
    }

    /// The nonzero A-polynomials.
    pub fn generators(&self) -> Vec<PolyR> {
        self.a_polys().into_iter().filter(|f| !f.is_zero()).collect()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators().iter().map(ToString::to_string).collect()
    }

    /// Degree bounds of the unique form, plus the forced zeros in slots
    /// above a trivial sub-ideal.
    pub fn satisfies_degree_bounds(&self) -> bool {
        let (t1, t2, t3) = (self.t1(), self.t2(), self.t3());
        let n = self.big_n();
        let bounds = below(&self.p1, t1)
            && below(&self.q1, t2)
            && below(&self.r1, t3)
            && below(&self.q2, t2)
            && below(&self.r2, t3)
            && below(&self.r3, t3);
        let forced = (self.g != n || [&self.p1, &self.q1, &self.r1].iter().all(|f| f.is_zero()))
            && (self.a1 != n || [&self.q2, &self.r2].iter().all(|f| f.is_zero()))
            && (self.a2 != n || self.r3.is_zero());
        let monic = [&self.g, &self.a1, &self.a2, &self.a3].iter().all(|f| f.is_monic());
        bounds && forced && monic
    }
}

impl fmt::Display for CanonicalGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generator_strings();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Codeword whose components before `k` vanish and whose component `k`
/// equals `target`, as four component polynomials.
fn solve_block(p: Prime, n: usize, basis: &Echelon, k: usize, target: &PolyZp) -> Result<[PolyZp; 4]> {
    let tv = target.to_fixed(n);
    let mut w = vec![0u32; 4 * n];
    for (row, &piv) in basis.rows().iter().zip(basis.pivots()) {
        if piv / n != k {
            continue;
        }
        let c = tv[piv - k * n];
        if c == 0 {
            continue;
        }
        for (x, &y) in w.iter_mut().zip(row) {
            *x = p.add(*x, p.mul(c, y));
        }
    }
    if w[..k * n].iter().any(|&x| x != 0) || w[k * n..(k + 1) * n] != tv[..] {
        return Err(Error::Internal(format!("no codeword with component {k} equal to {target}")));
    }
    Ok([0, 1, 2, 3].map(|j| block(p, n, &w, j)))
}

/// Canonical generators of the code spanned by a component-major basis
/// closed under R and x.
pub fn canonicalize(p: Prime, n: usize, basis: &Echelon) -> Result<CanonicalGens> {
    let big_n = PolyZp::x_n_minus_1(p, n);
    let tower = tower_of(p, n, basis);
    let (g, a1, a2, a3) = (tower.c1, tower.c2, tower.c3, tower.c4);
    let zero = PolyZp::zero(p);
    // products stay in the quotient
    let mulmod = |x: &PolyZp, y: &PolyZp| (x * y).reduce_cyclic(n);
    let split = |f: &PolyZp, m: &PolyZp| f.divmod(m).expect("divisors are nonzero");

    let r3 = if a2 == big_n {
        zero.clone()
    } else {
        let [_, _, _, r] = solve_block(p, n, basis, 2, &a2)?;
        split(&r, &a3).1
    };

    let (q2, r2) = if a1 == big_n {
        (zero.clone(), zero.clone())
    } else {
        let [_, _, q, r] = solve_block(p, n, basis, 1, &a1)?;
        let (k, q2) = split(&q, &a2);
        let r = &r - &mulmod(&k, &r3);
        (q2, split(&r, &a3).1)
    };

    let (p1, q1, r1) = if g == big_n {
        (zero.clone(), zero.clone(), zero)
    } else {
        let [_, b, q, r] = solve_block(p, n, basis, 0, &g)?;
        let (k1, p1) = split(&b, &a1);
        let q = &q - &mulmod(&k1, &q2);
        let r = &r - &mulmod(&k1, &r2);
        let (k2, q1) = split(&q.reduce_cyclic(n), &a2);
        let r = &r - &mulmod(&k2, &r3);
        (p1, q1, split(&r.reduce_cyclic(n), &a3).1)
    };

    Ok(CanonicalGens { p, n, g, p1, q1, r1, a1, q2, r2, a2, r3, a3 })
}

/// Indices (1..=10) of the divisibility conditions that fail.
pub fn check_conditions(c: &CanonicalGens) -> Vec<u8> {
    (1..=10).filter(|&i| !condition_holds(c, i)).collect()
}

/// Evaluates one divisibility condition. Each quotient appearing in a
/// condition is formed only after checking it is exact; a quotient that
/// does not exist counts as a violation.
pub fn condition_holds(c: &CanonicalGens, idx: u8) -> bool {
    let n = PolyZp::x_n_minus_1(c.p, c.n);
    let div = |a: &PolyZp, b: &PolyZp| -> Option<PolyZp> {
        if b.is_zero() {
            None
        } else {
            a.exact_div(b)
        }
    };
    let divides = |d: &PolyZp, x: &PolyZp| -> bool { div(x, d).is_some() };
    let (g, a1, a2, a3) = (&c.g, &c.a1, &c.a2, &c.a3);
    let (p1, q1, r1, q2, r2, r3) = (&c.p1, &c.q1, &c.r1, &c.q2, &c.r2, &c.r3);
    // N p1 / (g a1)
    let npa = || div(&n, g).and_then(|x| div(&(&x * p1), a1));
    // (N/g) q1 - (N p1 / (g a1)) q2
    let m3 = || div(&n, g).zip(npa()).map(|(x, y)| &(&x * q1) - &(&y * q2));

    let ok = match idx {
        1 => Some(
            divides(a3, g) && divides(a3, a1) && divides(a3, a2) && divides(a2, g) && divides(a1, g) && divides(g, &n),
        ),
        2 => div(&n, g).map(|x| divides(a1, &(p1 * &x))),
        3 => m3().map(|m| divides(a2, &m)),
        4 => div(g, a1).map(|x| divides(a2, &(&x * q2))),
        5 => Some(divides(a3, q2)),
        6 => div(&n, a2).map(|x| divides(a3, &(&x * r3))),
        7 => div(&n, a1).and_then(|x| {
            let y = div(&(&x * q2), a2)?;
            Some(divides(a3, &(&(&x * r2) - &(&y * r3))))
        }),
        8 => div(g, a2).map(|x| divides(a3, &(p1 - &(&x * r3)))),
        9 => div(g, a1).and_then(|x| {
            let y = div(&(&x * q2), a2)?;
            Some(divides(a3, &(&(q1 - &(&x * r2)) + &(&y * r3))))
        }),
        // the uv-part left after clearing the u- and v-parts of (N/g) A1
        10 => div(&n, g)
            .zip(npa())
            .zip(m3().and_then(|m| div(&m, a2)))
            .map(|((x, y), m)| divides(a3, &(&(&(&x * r1) - &(&y * r2)) - &(&m * r3)))),
        _ => None,
    };
    ok == Some(true)
}

/// Rebuilds the code spanned by the A-polynomials.
pub(crate) fn regenerate(c: &CanonicalGens) -> Result<Echelon> {
    super::ideal_basis(c.p, c.n, &c.a_polys())
}
