//! Rank, free rank, cardinality and spanning sets, each computed twice: from
//! the closed formulas in terms of (t, t1, t2, t3) and directly from the
//! Z_p basis. Disagreements are returned as data.

use serde::Serialize;

use super::CyclicCode;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::qpoly::PolyR;
use crate::ring::RElem;
use crate::zp::PolyZp;

/// A closed formula that disagrees with the value computed from the basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaDiscrepancy {
    pub quantity: String,
    pub formula: i64,
    pub observed: i64,
}

impl From<FormulaDiscrepancy> for Error {
    fn from(d: FormulaDiscrepancy) -> Self {
        Error::FormulaDiscrepancy { quantity: d.quantity, formula: d.formula, observed: d.observed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    /// Whether the coprime-length formulas were applied.
    pub coprime: bool,
    pub free_rank: usize,
    pub free_rank_formula: i64,
    /// Minimum number of R-module generators, dim C / (uC + vC).
    pub rank: usize,
    pub rank_formula: i64,
    /// log_p |C|, i.e. the Z_p-dimension.
    pub log_p_cardinality: usize,
    pub log_p_cardinality_formula: i64,
    pub spanning_set: Vec<PolyR>,
    pub spanning_set_generates: bool,
    pub discrepancies: Vec<FormulaDiscrepancy>,
}

impl RankReport {
    /// Fails with the first discrepancy, if any.
    pub fn ensure_consistent(&self) -> Result<()> {
        match self.discrepancies.first() {
            Some(d) => Err(d.clone().into()),
            None => Ok(()),
        }
    }
}

/// The single generator of a free code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGenerator {
    pub generator: PolyR,
    /// Whether the generator, taken in R[x], divides x^n - 1.
    pub divides_xn_minus_1: bool,
}

/// Two-generator presentation <g + u a1 + uv r1, v a2 + uv a3> for lengths
/// coprime to p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeForm {
    pub generators: [PolyR; 2],
    /// q1 of the canonical tuple, zero whenever the form applies.
    pub q1: PolyZp,
}

fn span_over_r(p: crate::zp::Prime, n: usize, set: &[PolyR]) -> Echelon {
    let mut e = Echelon::new(p, 4 * n);
    for w in set {
        for c in RElem::basis(p) {
            e.insert(w.scale(c).to_component_major());
        }
    }
    e
}

fn shifts(f: &PolyR, count: usize) -> Vec<PolyR> {
    let mut out = Vec::with_capacity(count);
    let mut w = f.clone();
    for _ in 0..count {
        out.push(w.clone());
        w = w.shift();
    }
    out
}

fn is_coprime(p: u32, n: usize) -> bool {
    !n.is_multiple_of(p as usize)
}

impl CyclicCode {
    /// dim_Zp C / (uC + vC): by Nakayama's lemma the minimal number of
    /// generators of C as an R-module.
    pub fn rank(&self) -> usize {
        let p = self.modulus();
        let mc = self.multiply_basis(RElem::u(p)).join(&self.multiply_basis(RElem::v(p)));
        self.k() - mc.dim()
    }

    /// dim_Zp uvC. A free submodule R^r contributes r to this dimension and
    /// uvC = uv<g> is realised by the free submodule generated by A1.
    pub fn free_rank(&self) -> usize {
        self.uv_part().dim()
    }

    /// The spanning set B listed by the rank formulas.
    pub fn spanning_set(&self) -> Vec<PolyR> {
        let g = self.gens();
        let n = self.len() as i64;
        let (t, t1, t2, t3, tp) = (g.t() as i64, g.t1() as i64, g.t2() as i64, g.t3() as i64, g.t_prime() as i64);
        let count = |c: i64| c.max(0) as usize;
        if is_coprime(self.modulus().get(), self.len()) {
            let [f1, f2] = coprime_generators(self);
            let mut b = shifts(&f1, count(n - t));
            b.extend(shifts(&f2, count(t - t2)));
            return b;
        }
        let [a1, a2, a3, a4] = g.a_polys();
        let mut b = shifts(&a1, count(n - t));
        b.extend(shifts(&a2, count(t - t1)));
        b.extend(shifts(&a3, count(t - t2)));
        b.extend(shifts(&a4, count(tp - t3)));
        b
    }

    /// Whether the spanning set generates C over R and no element can be
    /// dropped.
    pub fn spanning_set_minimal(&self) -> bool {
        is_minimal_spanning_set(self, &self.spanning_set())
    }

    pub fn rank_report(&self) -> RankReport {
        let g = self.gens();
        let p = self.modulus().get();
        let n = self.len() as i64;
        let (t, t1, t2, t3, tp) = (g.t() as i64, g.t1() as i64, g.t2() as i64, g.t3() as i64, g.t_prime() as i64);
        let coprime = is_coprime(p, self.len());
        let (rank_formula, card_formula) = if coprime {
            (n - t2, 4 * n - 2 * t - 2 * t2)
        } else if !g.q2.is_zero() {
            (n + t + tp - t1 - t2 - t3, 4 * n + t + tp - 3 * t1 - 2 * t2 - t3)
        } else {
            (n + t + tp - t1 - t2 - t3, 4 * n + tp - 2 * t1 - 2 * t2 - t3)
        };
        let free_rank_formula = n - t;
        let spanning_set = self.spanning_set();
        let spanning_set_generates = span_over_r(self.modulus(), self.len(), &spanning_set) == *self.basis();
        let rank = self.rank();
        let free_rank = self.free_rank();
        let k = self.k();

        let mut discrepancies = Vec::new();
        let mut audit = |quantity: &str, formula: i64, observed: i64| {
            if formula != observed {
                discrepancies.push(FormulaDiscrepancy { quantity: quantity.to_string(), formula, observed });
            }
        };
        audit("free_rank", free_rank_formula, free_rank as i64);
        audit("rank", rank_formula, rank as i64);
        audit("log_p_cardinality", card_formula, k as i64);
        audit("spanning_set_size", rank_formula, spanning_set.len() as i64);
        audit("spanning_set_generates", 1, spanning_set_generates as i64);

        RankReport {
            coprime,
            free_rank,
            free_rank_formula,
            rank,
            rank_formula,
            log_p_cardinality: k,
            log_p_cardinality_formula: card_formula,
            spanning_set,
            spanning_set_generates,
            discrepancies,
        }
    }

    pub fn is_free(&self) -> bool {
        self.gens().g == self.gens().a3
    }

    /// A1 when the code is free (g = a3).
    pub fn free_generator(&self) -> Option<FreeGenerator> {
        if !self.is_free() {
            return None;
        }
        let [a1, ..] = self.gens().a_polys();
        let p = self.modulus();
        let n = self.len();
        let lifted = if self.is_zero() { PolyR::x_n_minus_1(p, n) } else { a1.to_plain() };
        let divides = PolyR::x_n_minus_1(p, n).divmod(&lifted).is_ok_and(|(_, r)| r.is_zero());
        Some(FreeGenerator { generator: a1, divides_xn_minus_1: divides })
    }

    /// The two-generator form for n coprime to p, checked to regenerate C.
    pub fn coprime_form(&self) -> Result<CoprimeForm> {
        let p = self.modulus();
        if !is_coprime(p.get(), self.len()) {
            return Err(Error::NotCoprime { p: p.get(), n: self.len() });
        }
        let generators = coprime_generators(self);
        let rebuilt = CyclicCode::from_generators(p, self.len(), &generators)?;
        if rebuilt.basis() != self.basis() {
            return Err(Error::CoprimeFormMismatch(format!(
                "<{}, {}> spans dimension {} but the code has dimension {}",
                generators[0],
                generators[1],
                rebuilt.k(),
                self.k()
            )));
        }
        Ok(CoprimeForm { generators, q1: self.gens().q1.clone() })
    }
}

/// g + u a1 + uv r1 and v a2 + uv a3 from the canonical tuple.
fn coprime_generators(c: &CyclicCode) -> [PolyR; 2] {
    let g = c.gens();
    let z = PolyZp::zero(g.p);
    let build = |parts: [&PolyZp; 4]| {
        PolyR::from_components(parts).and_then(|f| f.into_quotient(g.n)).expect("components share the modulus")
    };
    [build([&g.g, &g.a1, &z, &g.r1]), build([&z, &z, &g.a2, &g.a3])]
}

pub(crate) fn is_minimal_spanning_set(c: &CyclicCode, set: &[PolyR]) -> bool {
    let (p, n) = (c.modulus(), c.len());
    if span_over_r(p, n, set) != *c.basis() {
        return false;
    }
    (0..set.len()).all(|skip| {
        let rest: Vec<PolyR> = set.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, w)| w.clone()).collect();
        span_over_r(p, n, &rest).dim() < c.k()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zp::Prime;

    fn p(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    fn xm1(pr: u32, k: usize) -> PolyZp {
        PolyZp::x_minus_1_pow(p(pr), k)
    }

    fn code(pr: u32, n: usize, gens: &[[&PolyZp; 4]]) -> CyclicCode {
        let gens: Vec<PolyR> = gens.iter().map(|g| PolyR::from_components(*g).unwrap()).collect();
        CyclicCode::from_generators(p(pr), n, &gens).unwrap()
    }

    #[test]
    fn rank_examples() {
        let z = PolyZp::zero(p(3));
        let one = PolyZp::one(p(3));
        let c = code(3, 3, &[[&z, &z, &z, &xm1(3, 2)]]);
        let r = c.rank_report();
        assert_eq!((r.free_rank, r.rank, r.log_p_cardinality), (0, 1, 1));
        assert_eq!(r.rank_formula, 1);
        assert_eq!(r.log_p_cardinality_formula, 1);

        let full = code(3, 3, &[[&one, &z, &z, &z]]);
        let r = full.rank_report();
        assert_eq!((r.rank, r.log_p_cardinality, r.spanning_set.len()), (3, 12, 3));
        assert!(r.discrepancies.is_empty());

        for (c0, c1) in [(0, 0), (1, 2), (2, 1)] {
            let x1 = xm1(3, 1);
            let c = code(3, 3, &[[&z, &xm1(3, 2), &z, &x1.scale(c0)], [&z, &z, &xm1(3, 2), &x1.scale(c1)]]);
            assert_eq!(c.rank(), 2);
            assert_eq!(c.rank_report().rank_formula, 2);
        }
    }

    #[test]
    fn minimality_examples() {
        let z = PolyZp::zero(p(3));
        let one = PolyZp::one(p(3));
        let c = code(3, 3, &[[&z, &z, &z, &xm1(3, 2)]]);
        assert!(c.spanning_set_minimal());
        let full = code(3, 3, &[[&one, &z, &z, &z]]);
        assert!(full.spanning_set_minimal());
        let mut b = full.spanning_set();
        b.push(PolyR::constant(RElem::u(p(3))).into_quotient(3).unwrap());
        assert!(!is_minimal_spanning_set(&full, &b));
    }

    #[test]
    fn free_codes() {
        let q = p(3);
        let z = PolyZp::zero(q);
        let x1 = xm1(3, 1);
        for (c0, c1, c2) in [(0, 0, 0), (1, 2, 0), (2, 2, 1)] {
            let c = code(3, 3, &[[&x1, &PolyZp::constant(q, c0), &PolyZp::constant(q, c1), &PolyZp::constant(q, c2)]]);
            let f = c.free_generator().expect("free");
            assert!(f.divides_xn_minus_1);
            assert_eq!(c.free_rank(), c.rank());
            assert_eq!(c.rank(), 3 - c.gens().t());
        }
        let uv = code(3, 3, &[[&z, &z, &z, &PolyZp::one(q)]]);
        assert!(!uv.is_free());
        let full = code(3, 3, &[[&PolyZp::one(q), &z, &z, &z]]);
        assert_eq!(full.free_generator().unwrap().generator, PolyR::one(q).into_quotient(3).unwrap());
    }

    #[test]
    fn coprime_form_examples() {
        let q = p(3);
        let z = PolyZp::zero(q);
        let one = PolyZp::one(q);
        let c = code(3, 2, &[[&xm1(3, 1), &one, &z, &z]]);
        let form = c.coprime_form().unwrap();
        assert!(form.q1.is_zero());
        let c3 = code(3, 3, &[[&one, &z, &z, &z]]);
        assert_eq!(c3.coprime_form(), Err(Error::NotCoprime { p: 3, n: 3 }));
        let (one2, z2) = (PolyZp::one(p(2)), PolyZp::zero(p(2)));
        let full = code(2, 3, &[[&one2, &z2, &z2, &z2]]);
        let form = full.coprime_form().unwrap();
        assert_eq!(form.generators[0].to_string(), "1 + u");
        assert_eq!(form.generators[1].to_string(), "v + u*v");
    }
}
