//! Exhaustive enumeration of the cyclic codes of length n over R.
//!
//! Every code has exactly one canonical tuple, so walking all tuples that
//! satisfy the degree bounds and the divisibility conditions, and keeping
//! those whose code canonicalizes back to the same tuple, lists each code
//! once. Conditions are tested as soon as the parts they mention are fixed.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canonical::{condition_holds, regenerate, CanonicalGens};
use super::CyclicCode;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::zp::{monic_divisors_xn_minus_1, PolyZp, Prime};

/// Default bound on the number of candidate tuples.
pub const DEFAULT_CANDIDATE_BUDGET: u128 = 10_000_000;

/// A divisor chain a3 | a1 | g, a3 | a2 | g of x^n - 1.
#[derive(Debug, Clone)]
struct Chain {
    g: PolyZp,
    a1: PolyZp,
    a2: PolyZp,
    a3: PolyZp,
}

fn chains(p: Prime, n: usize) -> Result<Vec<Chain>> {
    let divs = monic_divisors_xn_minus_1(p, n)?;
    let divides = |a: &PolyZp, b: &PolyZp| a.divides(b).expect("divisors are nonzero");
    let mut out = Vec::new();
    for g in &divs {
        for a1 in divs.iter().filter(|a| divides(a, g)) {
            for a2 in divs.iter().filter(|a| divides(a, g)) {
                for a3 in divs.iter().filter(|a| divides(a, a1) && divides(a, a2)) {
                    out.push(Chain { g: g.clone(), a1: a1.clone(), a2: a2.clone(), a3: a3.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// Free-part dimensions (q2, r3, p1, r2, q1, r1) searched for a chain.
fn free_dims(c: &Chain, n: usize) -> [usize; 6] {
    let big_n = |f: &PolyZp| f.deg_or_zero() == n;
    let (t1, t2, t3) = (c.a1.deg_or_zero(), c.a2.deg_or_zero(), c.a3.deg_or_zero());
    let g_triv = big_n(&c.g);
    let a1_triv = big_n(&c.a1);
    let a2_triv = big_n(&c.a2);
    let pick = |forced_zero: bool, d: usize| if forced_zero { 0 } else { d };
    [
        pick(a1_triv, t2.saturating_sub(t3)),
        pick(a2_triv, t3),
        pick(g_triv, t1.saturating_sub(t3)),
        pick(a1_triv, t3),
        pick(g_triv, t2.saturating_sub(t3)),
        pick(g_triv, t3),
    ]
}

/// Number of candidate tuples the enumeration would visit before pruning.
pub fn candidate_count(p: Prime, n: usize) -> Result<u128> {
    let total = chains(p, n)?.iter().fold(0u128, |acc, c| {
        let exp: usize = free_dims(c, n).iter().sum();
        acc.saturating_add((p.get() as u128).saturating_pow(exp as u32))
    });
    Ok(total)
}

/// All polynomials of degree below `d` (the zero polynomial when d = 0).
fn polys_below(p: Prime, d: usize) -> impl Iterator<Item = PolyZp> {
    let q = p.get() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut c = Vec::with_capacity(d);
        for _ in 0..d {
            c.push(idx % q);
            idx /= q;
        }
        PolyZp::new(p, c)
    })
}

fn codes_for_chain(p: Prime, n: usize, c: &Chain) -> Result<Vec<CyclicCode>> {
    let [d_q2, d_r3, d_p1, d_r2, d_q1, d_r1] = free_dims(c, n);
    let zero = PolyZp::zero(p);
    let mut t = CanonicalGens {
        p,
        n,
        g: c.g.clone(),
        p1: zero.clone(),
        q1: zero.clone(),
        r1: zero.clone(),
        a1: c.a1.clone(),
        q2: zero.clone(),
        r2: zero.clone(),
        a2: c.a2.clone(),
        r3: zero.clone(),
        a3: c.a3.clone(),
    };
    if !condition_holds(&t, 1) {
        return Ok(Vec::new());
    }
    let a3 = c.a3.clone();
    let g_triv = c.g.deg_or_zero() == n;
    // chain condition (1) holds, so these quotients are exact
    let g_a1 = c.g.exact_div(&c.a1).expect("a1 | g");
    let g_a2 = c.g.exact_div(&c.a2).expect("a2 | g");
    let mut out = Vec::new();
    for s in polys_below(p, d_q2) {
        t.q2 = &a3 * &s;
        if !condition_holds(&t, 5) || !condition_holds(&t, 4) {
            continue;
        }
        // (g/a1) q2 / a2, exact by condition (4)
        let y = (&g_a1 * &t.q2).exact_div(&c.a2).expect("condition (4)");
        for r3 in polys_below(p, d_r3) {
            t.r3 = r3;
            if !condition_holds(&t, 6) {
                continue;
            }
            // condition (8) fixes p1 modulo a3
            let p1_base = if g_triv { zero.clone() } else { (&g_a2 * &t.r3).rem(&a3)? };
            for s in polys_below(p, d_p1) {
                t.p1 = &p1_base + &(&a3 * &s);
                if !condition_holds(&t, 8) || !condition_holds(&t, 2) {
                    continue;
                }
                for r2 in polys_below(p, d_r2) {
                    t.r2 = r2;
                    if !condition_holds(&t, 7) {
                        continue;
                    }
                    // condition (9) fixes q1 modulo a3
                    let q1_base = if g_triv { zero.clone() } else { (&(&g_a1 * &t.r2) - &(&y * &t.r3)).rem(&a3)? };
                    for s in polys_below(p, d_q1) {
                        t.q1 = &q1_base + &(&a3 * &s);
                        if !condition_holds(&t, 9) || !condition_holds(&t, 3) {
                            continue;
                        }
                        for r1 in polys_below(p, d_r1) {
                            t.r1 = r1;
                            if !condition_holds(&t, 10) || !t.satisfies_degree_bounds() {
                                continue;
                            }
                            let code = CyclicCode::from_basis(p, n, regenerate(&t)?)?;
                            if *code.gens() == t {
                                out.push(code);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every cyclic code of length n over R, sorted by tower degrees and then
/// by generator strings. Fails when the candidate count exceeds `budget`.
pub fn enumerate_codes(p: Prime, n: usize, budget: u128) -> Result<Vec<CyclicCode>> {
    let needed = candidate_count(p, n)?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let per_chain: Vec<Vec<CyclicCode>> =
        chains(p, n)?.par_iter().map(|c| codes_for_chain(p, n, c)).collect::<Result<_>>()?;
    let mut seen: HashSet<Echelon> = HashSet::new();
    let mut out: Vec<CyclicCode> = Vec::new();
    for code in per_chain.into_iter().flatten() {
        if seen.insert(code.basis().clone()) {
            out.push(code);
        }
    }
    out.sort();
    Ok(out)
}

/// Every Z_p-subspace of Z_p^{4n} closed under u, v and the cyclic shift,
/// found by closing the zero ideal under single-vector extensions. This is
/// a slow reference search, independent of the generator machinery.
pub fn exhaustive_ideals(p: Prime, n: usize) -> Result<Vec<Echelon>> {
    let width = 4 * n;
    let total = (p.get() as u128).saturating_pow(width as u32);
    if total > 1 << 16 {
        return Err(Error::SizeGuard(format!("{total} vectors is too many for exhaustive search")));
    }
    let q = p.get() as u64;
    let vectors: Vec<Vec<u32>> = (0..total as u64)
        .map(|mut idx| {
            (0..width)
                .map(|_| {
                    let c = (idx % q) as u32;
                    idx /= q;
                    c
                })
                .collect()
        })
        .collect();
    // u: (a,b,c,d) -> (0,a,0,c); v: (a,b,c,d) -> (0,0,a,b); shift rotates each block
    let images = |w: &[u32]| -> [Vec<u32>; 3] {
        let mut u = vec![0; width];
        let mut v = vec![0; width];
        let mut s = vec![0; width];
        for i in 0..n {
            u[n + i] = w[i];
            u[3 * n + i] = w[2 * n + i];
            v[2 * n + i] = w[i];
            v[3 * n + i] = w[n + i];
            for k in 0..4 {
                s[k * n + (i + 1) % n] = w[k * n + i];
            }
        }
        [u, v, s]
    };
    let close = |base: &Echelon, w: &[u32]| -> Echelon {
        let mut e = base.clone();
        let mut stack = vec![w.to_vec()];
        while let Some(x) = stack.pop() {
            if e.insert(x.clone()) {
                stack.extend(images(&x));
            }
        }
        e
    };
    let zero = Echelon::new(p, width);
    let mut found: HashSet<Echelon> = HashSet::from([zero.clone()]);
    let mut queue = vec![zero];
    while let Some(ideal) = queue.pop() {
        for w in &vectors {
            if ideal.contains(w) {
                continue;
            }
            let bigger = close(&ideal, w);
            if found.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    let mut out: Vec<Echelon> = found.into_iter().collect();
    out.sort_by_key(|e| (e.dim(), e.rows().to_vec()));
    Ok(out)
}
