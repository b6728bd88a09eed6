//! The Gray map R -> Z_p^4 and images of cyclic codes as p-ary linear codes.

use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;

use crate::code::CyclicCode;
use crate::distance::{hamming_weight, min_weight};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::qpoly::PolyR;
use crate::ring::RElem;
use crate::zp::Prime;

/// a + ub + vc + uvd  ->  (a+b+c+d, c+d, b+d, d)
pub fn gray_elem(x: RElem) -> [u32; 4] {
    let p = x.modulus();
    let [a, b, c, d] = x.components();
    [p.add(p.add(a, b), p.add(c, d)), p.add(c, d), p.add(b, d), d]
}

/// Inverse of [`gray_elem`].
pub fn gray_elem_inverse(p: Prime, [y0, y1, y2, y3]: [u32; 4]) -> RElem {
    let d = y3;
    let c = p.sub(y1, d);
    let b = p.sub(y2, d);
    let a = p.sub(p.sub(y0, d), p.add(b, c));
    RElem::new(p, a.into(), b.into(), c.into(), d.into())
}

pub fn lee_weight(x: RElem) -> usize {
    hamming_weight(&gray_elem(x))
}

/// Gray image of a word of R^n, position-major: position i fills
/// coordinates 4i..4i+3.
pub fn gray_word(w: &[RElem]) -> Vec<u32> {
    w.iter().flat_map(|&x| gray_elem(x)).collect()
}

/// Gray image of a position-major Z_p vector of length 4n.
fn gray_position_major(p: Prime, v: &[u32]) -> Vec<u32> {
    v.chunks_exact(4)
        .flat_map(|q| gray_elem(RElem::new(p, q[0].into(), q[1].into(), q[2].into(), q[3].into())))
        .collect()
}

/// Lee weight of a component-major vector of length 4n.
pub fn lee_weight_component_major(p: Prime, n: usize, v: &[u32]) -> usize {
    (0..n)
        .map(|i| lee_weight(RElem::new(p, v[i].into(), v[n + i].into(), v[2 * n + i].into(), v[3 * n + i].into())))
        .sum()
}

/// Minimum Lee weight of the nonzero codewords, computed on C itself.
pub fn min_lee_weight(c: &CyclicCode, budget: u128) -> Result<Option<usize>> {
    let (p, n) = (c.modulus(), c.len());
    min_weight(p, c.basis().rows(), |v| lee_weight_component_major(p, n, v), 1, budget)
}

/// A p-ary linear code given by a reduced echelon generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCodeZp {
    basis: Echelon,
    distance: OnceLock<Option<usize>>,
}

impl PartialEq for LinearCodeZp {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for LinearCodeZp {}

impl LinearCodeZp {
    pub fn new(p: Prime, length: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> Self {
        LinearCodeZp { basis: Echelon::from_rows(p, length, rows), distance: OnceLock::new() }
    }

    pub fn modulus(&self) -> Prime {
        self.basis.modulus()
    }

    pub fn len(&self) -> usize {
        self.basis.width()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn k(&self) -> usize {
        self.basis.dim()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        self.basis.rows()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.basis.contains(v)
    }

    /// Minimum Hamming weight, `None` for the zero code. Cached once found.
    pub fn distance(&self, budget: u128) -> Result<Option<usize>> {
        if let Some(d) = self.distance.get() {
            return Ok(*d);
        }
        let d = min_weight(self.modulus(), self.rows(), hamming_weight, 1, budget)?;
        Ok(*self.distance.get_or_init(|| d))
    }

    /// The cached distance, if it has been computed.
    pub fn cached_distance(&self) -> Option<Option<usize>> {
        self.distance.get().copied()
    }

    /// Whether rotating every generator right by `ell` stays in the code.
    pub fn is_quasi_cyclic(&self, ell: usize) -> Result<bool> {
        let len = self.len();
        if ell == 0 || !len.is_multiple_of(ell) {
            return Err(Error::OutOfRange(format!("shift {ell} does not divide length {len}")));
        }
        Ok(self.rows().iter().all(|r| {
            let mut s = r.clone();
            s.rotate_right(ell);
            self.contains(&s)
        }))
    }

    /// One row per line, digits separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in self.rows() {
            let line: Vec<String> = r.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn export(&self, d: Option<usize>) -> GeneratorMatrix {
        GeneratorMatrix { p: self.modulus().get(), length: self.len(), k: self.k(), d, rows: self.rows().to_vec() }
    }
}

/// JSON form of a generator matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorMatrix {
    pub p: u32,
    #[serde(rename = "N")]
    pub length: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub rows: Vec<Vec<u32>>,
}

/// The image of C under the Gray map, of length 4n and dimension dim C.
pub fn gray_code(c: &CyclicCode) -> LinearCodeZp {
    let p = c.modulus();
    let rows = c.basis_position_major().into_iter().map(|r| gray_position_major(p, &r));
    LinearCodeZp::new(p, 4 * c.len(), rows)
}

/// Checks that the Gray image of the cyclic shift of `w` is the 4-rotation
/// of the Gray image of `w`.
pub fn shift_commutes(w: &PolyR) -> Result<bool> {
    let n = w.modulus_n().ok_or_else(|| Error::Internal("shift needs a quotient element".into()))?;
    let lhs = gray_word(w.shift().coeffs_padded(n).as_slice());
    let mut rhs = gray_word(&w.coeffs_padded(n));
    rhs.rotate_right(4);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::DEFAULT_CODEWORD_BUDGET as B;
    use crate::zp::PolyZp;

    fn p(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn element_examples() {
        let q = p(3);
        assert_eq!(gray_elem(RElem::zero(q)), [0; 4]);
        assert_eq!(gray_elem(RElem::u(q)), [1, 0, 1, 0]);
        assert_eq!(gray_elem(RElem::uv(q)), [1, 1, 1, 1]);
        assert_eq!(lee_weight(RElem::uv(q)), 4);
        assert_eq!(lee_weight(RElem::u(q)), 2);
        assert_eq!(lee_weight(RElem::one(q)), 1);
    }

    #[test]
    fn bijective_linear_isometry() {
        for pr in [2u32, 3, 5] {
            let q = p(pr);
            let mut images = std::collections::HashSet::new();
            for x in RElem::all(q) {
                let y = gray_elem(x);
                assert!(images.insert(y));
                assert_eq!(gray_elem_inverse(q, y), x);
                assert_eq!(lee_weight(x), y.iter().filter(|&&c| c != 0).count());
                for z in RElem::all(q) {
                    let s = gray_elem(x + z);
                    let t = gray_elem(z);
                    assert!((0..4).all(|i| s[i] == q.add(y[i], t[i])));
                }
            }
            assert_eq!(images.len(), (pr as usize).pow(4));
        }
    }

    #[test]
    fn transition_matrix_is_invertible() {
        for pr in [2u32, 3, 5, 7, 11] {
            let q = p(pr);
            let rows = RElem::basis(q).map(|e| gray_elem(e).to_vec());
            assert_eq!(Echelon::from_rows(q, 4, rows).dim(), 4);
        }
    }

    fn code(pr: u32, n: usize, src: &[[&[i64]; 4]]) -> CyclicCode {
        let q = p(pr);
        let gens: Vec<PolyR> = src
            .iter()
            .map(|parts| {
                let zs = parts.map(|c| PolyZp::from_signed(q, c));
                PolyR::from_components([&zs[0], &zs[1], &zs[2], &zs[3]]).unwrap()
            })
            .collect();
        CyclicCode::from_generators(q, n, &gens).unwrap()
    }

    #[test]
    fn image_parameters() {
        let x1: &[i64] = &[-1, 1];
        let x1sq: &[i64] = &[1, -2, 1];
        let z: &[i64] = &[];
        let cases = [
            (code(3, 3, &[[z, z, z, x1sq]]), 1, 12),
            (code(3, 3, &[[z, x1, z, z], [z, z, x1, z], [z, z, z, &[1]]]), 7, 4),
            // u+v times the ideal <x-1> adds only 2 dimensions to <uv>
            (code(3, 3, &[[z, x1, x1, z], [z, z, z, &[1]]]), 5, 4),
            // the dimension is 7: the tower degrees are (2, 1, 1, 1)
            (code(3, 3, &[[x1sq, z, z, z], [z, x1, z, z], [z, z, x1, z]]), 7, 3),
        ];
        for (c, k, d) in cases {
            let g = gray_code(&c);
            assert_eq!((g.len(), g.k()), (12, k));
            assert_eq!(g.distance(B).unwrap(), Some(d));
            assert_eq!(g.cached_distance(), Some(Some(d)));
            assert_eq!(min_lee_weight(&c, B).unwrap(), Some(d));
            assert!(g.is_quasi_cyclic(4).unwrap());
        }
    }

    #[test]
    fn non_invariant_subspace() {
        let q = p(3);
        let mut row = vec![0; 8];
        row[0] = 1;
        let c = LinearCodeZp::new(q, 8, [row]);
        assert!(!c.is_quasi_cyclic(4).unwrap());
        assert!(c.is_quasi_cyclic(8).unwrap());
        assert!(c.is_quasi_cyclic(3).is_err());
    }

    #[test]
    fn commutation_exhaustive_small() {
        let q = p(3);
        let elems: Vec<RElem> = RElem::all(q).collect();
        for a in &elems {
            for b in &elems {
                let w = PolyR::new(q, vec![*a, *b]).unwrap().into_quotient(2).unwrap();
                assert!(shift_commutes(&w).unwrap());
            }
        }
    }

    #[test]
    fn export_formats() {
        let c = code(2, 1, &[[&[], &[], &[], &[1]]]);
        let g = gray_code(&c);
        assert_eq!(g.to_text(), "1 1 1 1\n");
        let json = serde_json::to_string(&g.export(Some(4))).unwrap();
        assert_eq!(json, r#"{"p":2,"N":4,"k":1,"d":4,"rows":[[1,1,1,1]]}"#);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn words() -> impl Strategy<Value = (u32, Vec<[u64; 4]>, Vec<[u64; 4]>)> {
            (prop_oneof![Just(2u32), Just(3), Just(5)], 1..8usize).prop_flat_map(|(pr, n)| {
                let w = proptest::collection::vec(proptest::array::uniform4(0..pr as u64), n);
                (Just(pr), w.clone(), w)
            })
        }

        proptest! {
            #[test]
            fn gray_is_a_linear_isometry((pr, a, b) in words()) {
                let q = p(pr);
                let mk = |w: &[[u64; 4]]| -> Vec<RElem> { w.iter().map(|x| RElem::new(q, x[0], x[1], x[2], x[3])).collect() };
                let (a, b) = (mk(&a), mk(&b));
                let sum: Vec<RElem> = a.iter().zip(&b).map(|(&x, &y)| x + y).collect();
                let expect: Vec<u32> = gray_word(&a).iter().zip(gray_word(&b)).map(|(&x, y)| q.add(x, y)).collect();
                prop_assert_eq!(gray_word(&sum), expect);
                // Lee distance of (a, b) equals Hamming distance of the images
                let diff: Vec<RElem> = a.iter().zip(&b).map(|(&x, &y)| x - y).collect();
                let lee: usize = diff.iter().map(|&x| lee_weight(x)).sum();
                let ham = gray_word(&a).iter().zip(gray_word(&b)).filter(|(x, y)| *x != y).count();
                prop_assert_eq!(lee, ham);
                for x in &a {
                    prop_assert_eq!(gray_elem_inverse(q, gray_elem(*x)), *x);
                }
            }
        }
    }
}
