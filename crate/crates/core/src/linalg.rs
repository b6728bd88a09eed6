//! Reduced row-echelon bases of subspaces of Z_p^width.

use crate::zp::Prime;

/// A subspace of Z_p^width held as its unique reduced row-echelon basis.
/// Rows are sorted by pivot column and every pivot entry is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Echelon {
    p: Prime,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: Prime, width: usize) -> Self {
        Echelon { p, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I>(p: Prime, width: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut e = Self::new(p, width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts multiples of the basis rows so that `v` vanishes on every
    /// pivot column. The result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &mut [u32]) {
        assert_eq!(v.len(), self.width);
        let p = self.p;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                if r != 0 {
                    *x = p.sub(*x, p.mul(c, r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coefficients `c` with `v = sum c_i * rows[i]`, if `v` is in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c: Vec<u32> = self.pivots.iter().map(|&j| v[j]).collect();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0).then_some(c)
    }

    /// Adds `v` to the subspace. Returns `true` if the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let p = self.p;
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = p.inv(v[piv]);
        for x in v.iter_mut() {
            *x = p.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&v) {
                if r != 0 {
                    *x = p.sub(*x, p.mul(c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.rows.insert(at, v);
        self.pivots.insert(at, piv);
        true
    }

    /// Span of `self` and `other`.
    pub fn join(&self, other: &Echelon) -> Echelon {
        let mut e = self.clone();
        for r in &other.rows {
            e.insert(r.clone());
        }
        e
    }

    /// Whether every row of `other` lies in `self`.
    pub fn includes(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    #[test]
    fn rref_is_canonical() {
        let a = Echelon::from_rows(p3(), 3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = Echelon::from_rows(p3(), 3, vec![vec![1, 0, 1], vec![2, 1, 0], vec![1, 0, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.rows(), &[vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn coordinates_recover_combination() {
        let e = Echelon::from_rows(p3(), 4, vec![vec![1, 1, 0, 2], vec![0, 0, 1, 1]]);
        let v = vec![2, 2, 1, 2];
        let c = e.coordinates(&v).unwrap();
        assert_eq!(c, vec![2, 1]);
        assert!(e.coordinates(&[0, 1, 0, 0]).is_none());
    }

    #[test]
    fn insert_reports_dependence() {
        let mut e = Echelon::new(p3(), 2);
        assert!(e.insert(vec![1, 2]));
        assert!(!e.insert(vec![2, 1]));
        assert!(!e.insert(vec![0, 0]));
        assert!(e.insert(vec![0, 1]));
        assert_eq!(e.dim(), 2);
    }
}
