//! Cyclic codes over R as ideals of R[x]/<x^n - 1>.
//!
//! A code is stored as the reduced row-echelon Z_p basis of its 4n
//! coordinates in component-major order: columns `k*n .. (k+1)*n` hold
//! component `k` (1, u, v, uv) of the n positions. With that order the
//! rows whose pivot falls in block k span exactly the codewords whose
//! components before k vanish, so the four ideals C_1..C_4 are read off the
//! block structure directly.

mod canonical;
mod enumerate;
mod rank;

pub use canonical::{canonicalize, check_conditions, condition_holds, CanonicalGens};
pub use enumerate::{candidate_count, enumerate_codes, exhaustive_ideals, DEFAULT_CANDIDATE_BUDGET};
pub use rank::{CoprimeForm, FormulaDiscrepancy, FreeGenerator, RankReport};

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::qpoly::PolyR;
use crate::ring::RElem;
use crate::zp::{PolyZp, Prime};

/// Monic generators of C_1 = C mod <u,v>, C_2, C_3 and C_4 = {f : uv f in C}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResTorTower {
    pub c1: PolyZp,
    pub c2: PolyZp,
    pub c3: PolyZp,
    pub c4: PolyZp,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicCode {
    p: Prime,
    n: usize,
    basis: Echelon,
    gens: CanonicalGens,
}

/// Z_p vectors x^i * e * f for all shifts i and ring basis elements e.
pub(crate) fn module_vectors(f: &PolyR, n: usize) -> Result<Vec<Vec<u32>>> {
    let p = f.modulus();
    let mut w = f.clone().into_quotient(n)?;
    let mut out = Vec::with_capacity(4 * n);
    for _ in 0..n {
        for e in RElem::basis(p) {
            out.push(w.scale(e).to_component_major());
        }
        w = w.shift();
    }
    Ok(out)
}

/// Z_p span of `gens` under multiplication by R and x.
pub(crate) fn ideal_basis(p: Prime, n: usize, gens: &[PolyR]) -> Result<Echelon> {
    let mut e = Echelon::new(p, 4 * n);
    for g in gens {
        if g.modulus() != p {
            return Err(Error::ModulusMismatch(p.get(), g.modulus().get()));
        }
        if let Some(m) = g.modulus_n() {
            if m != n {
                return Err(Error::LengthMismatch(m, n));
            }
        }
        for v in module_vectors(g, n)? {
            e.insert(v);
            if e.dim() == 4 * n {
                return Ok(e);
            }
        }
    }
    Ok(e)
}

/// Component `k` of a component-major vector as a polynomial.
pub(crate) fn block(p: Prime, n: usize, v: &[u32], k: usize) -> PolyZp {
    PolyZp::new(p, v[k * n..(k + 1) * n].iter().map(|&c| c as u64))
}

impl CyclicCode {
    /// The ideal generated by `gens`; an empty list gives the zero code.
    pub fn from_generators(p: Prime, n: usize, gens: &[PolyR]) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("length must be positive".into()));
        }
        let basis = ideal_basis(p, n, gens)?;
        Self::from_basis(p, n, basis)
    }

    /// Wraps an echelon basis that is already closed under R and x.
    pub fn from_basis(p: Prime, n: usize, basis: Echelon) -> Result<Self> {
        if basis.width() != 4 * n {
            return Err(Error::LengthMismatch(basis.width(), 4 * n));
        }
        let gens = canonicalize(p, n, &basis)?;
        Ok(CyclicCode { p, n, basis, gens })
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    /// Code length n. Emptiness in the coding sense is `is_zero`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Z_p-dimension; the code has p^k codewords.
    pub fn k(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.dim() == 0
    }

    /// Component-major echelon basis.
    pub fn basis(&self) -> &Echelon {
        &self.basis
    }

    /// Basis rows re-ordered position-major (coordinates 4i..4i+3 hold the
    /// components at position i).
    pub fn basis_position_major(&self) -> Vec<Vec<u32>> {
        self.basis
            .rows()
            .iter()
            .map(|r| {
                let w = PolyR::from_component_major(self.p, self.n, r).expect("row width is 4n");
                w.to_position_major()
            })
            .collect()
    }

    pub fn basis_codewords(&self) -> Vec<PolyR> {
        self.basis
            .rows()
            .iter()
            .map(|r| PolyR::from_component_major(self.p, self.n, r).expect("row width is 4n"))
            .collect()
    }

    pub fn gens(&self) -> &CanonicalGens {
        &self.gens
    }

    pub fn tower(&self) -> ResTorTower {
        tower_of(self.p, self.n, &self.basis)
    }

    pub fn contains(&self, w: &PolyR) -> Result<bool> {
        if w.modulus() != self.p {
            return Err(Error::ModulusMismatch(self.p.get(), w.modulus().get()));
        }
        let w = match w.modulus_n() {
            Some(m) if m != self.n => return Err(Error::LengthMismatch(m, self.n)),
            _ => w.clone().into_quotient(self.n)?,
        };
        Ok(self.basis.contains(&w.to_component_major()))
    }

    /// Sub-code uv*C, equal to uv*<a3>.
    pub fn uv_part(&self) -> Echelon {
        self.multiply_basis(RElem::uv(self.p))
    }

    /// Z_p span of e*C for a ring element e.
    pub fn multiply_basis(&self, e: RElem) -> Echelon {
        Echelon::from_rows(
            self.p,
            4 * self.n,
            self.basis_codewords().into_iter().map(|w| w.scale(e).to_component_major()),
        )
    }

    /// The cyclic Z_p code {f : uv f in C}, as a generator polynomial.
    pub fn c_uv_generator(&self) -> PolyZp {
        self.gens.a3.clone()
    }
}

impl PartialOrd for CyclicCode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclicCode {
    /// Orders by tower degrees, then by rendered generator strings.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |c: &CyclicCode| {
            let g = &c.gens;
            ([g.t(), g.t1(), g.t2(), g.t3()], g.generator_strings())
        };
        key(self).cmp(&key(other))
    }
}

/// Reads C_1..C_4 off the block structure of a component-major basis.
pub(crate) fn tower_of(p: Prime, n: usize, basis: &Echelon) -> ResTorTower {
    let big_n = PolyZp::x_n_minus_1(p, n);
    let gen = |k: usize| {
        basis
            .rows()
            .iter()
            .zip(basis.pivots())
            .filter(|(_, &piv)| piv / n == k)
            .fold(big_n.clone(), |acc, (row, _)| acc.gcd(&block(p, n, row, k)).expect("x^n - 1 is nonzero"))
    };
    ResTorTower { c1: gen(0), c2: gen(1), c3: gen(2), c4: gen(3) }
}
