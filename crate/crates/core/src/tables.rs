//! Golden tables of length-3 ternary codes and their replay.
//!
//! Table 1 rows are templates: `{c0}`, `{c1}`, ... stand for constants in
//! Z_p, every assignment is checked, and `zero_products` lists index pairs
//! (i, j) restricted to c_i c_j = 0. Table 2 rows give Gray image
//! parameters [4n, k, d].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::distance::distance_report;
use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::gray::gray_code;
use crate::qpoly::PolyR;
use crate::zp::Prime;

pub const TABLES_JSON: &str = include_str!("../data/tables.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Tables {
    pub p: u32,
    pub n: usize,
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table1Row {
    pub label: String,
    pub gens: Vec<String>,
    pub constants: usize,
    pub zero_products: Vec<[usize; 2]>,
    pub rank: usize,
    pub d: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table2Row {
    pub label: String,
    pub gens: Vec<String>,
    pub k: usize,
    pub d: usize,
    /// Marked optimal in the source table; metadata only.
    pub optimal: bool,
}

pub fn load() -> Result<Tables> {
    serde_json::from_str(TABLES_JSON).map_err(|e| Error::Internal(format!("tables.json: {e}")))
}

impl Table1Row {
    /// Every admissible constant tuple.
    pub fn assignments(&self, p: Prime) -> Vec<Vec<u32>> {
        let q = p.get();
        let total = (q as u64).pow(self.constants as u32);
        (0..total)
            .map(|mut idx| {
                (0..self.constants)
                    .map(|_| {
                        let c = (idx % q as u64) as u32;
                        idx /= q as u64;
                        c
                    })
                    .collect::<Vec<u32>>()
            })
            .filter(|c| self.zero_products.iter().all(|&[i, j]| p.mul(c[i], c[j]) == 0))
            .collect()
    }

    /// Generator expressions with the constants substituted.
    pub fn instantiate(&self, consts: &[u32]) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| {
                consts.iter().enumerate().fold(g.clone(), |s, (i, c)| s.replace(&format!("{{c{i}}}"), &c.to_string()))
            })
            .collect()
    }
}

/// Builds the code generated by the given expressions.
pub fn build_code(p: Prime, n: usize, gens: &[String]) -> Result<CyclicCode> {
    let polys: Vec<PolyR> = gens.iter().map(|g| parse_poly(g, p, Some(n))).collect::<Result<_>>()?;
    CyclicCode::from_generators(p, n, &polys)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Check {
    pub label: String,
    pub constants: Vec<u32>,
    pub gens: Vec<String>,
    pub expected_rank: usize,
    pub rank: usize,
    /// Rank from the degree formula, reported for comparison only.
    pub rank_formula: i64,
    pub expected_d: usize,
    pub d: Option<usize>,
    /// Whether the torsion reduction and the oracle disagreed.
    pub distance_mismatch: bool,
    pub gray_quasi_cyclic: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2Check {
    pub label: String,
    pub gens: Vec<String>,
    pub expected: [usize; 3],
    pub got: [usize; 3],
    pub gray_quasi_cyclic: bool,
    pub ok: bool,
}

/// Rebuilds every instance of every Table 1 row, in table order.
pub fn verify_table1(t: &Tables, budget: u128) -> Result<Vec<Table1Check>> {
    let p = Prime::new(t.p)?;
    let jobs: Vec<(&Table1Row, Vec<u32>)> =
        t.table1.iter().flat_map(|r| r.assignments(p).into_iter().map(move |c| (r, c))).collect();
    jobs.par_iter()
        .map(|(row, consts)| {
            let gens = row.instantiate(consts);
            let code = build_code(p, t.n, &gens)?;
            let rank = code.rank();
            let rank_formula = code.rank_report().rank_formula;
            let report = distance_report(&code, None, budget)?;
            let gray_quasi_cyclic = gray_code(&code).is_quasi_cyclic(4)?;
            let ok = rank == row.rank && report.value == Some(row.d) && !report.mismatch;
            Ok(Table1Check {
                label: row.label.clone(),
                constants: consts.clone(),
                gens,
                expected_rank: row.rank,
                rank,
                rank_formula,
                expected_d: row.d,
                d: report.value,
                distance_mismatch: report.mismatch,
                gray_quasi_cyclic,
                ok,
            })
        })
        .collect()
}

/// Rebuilds every Table 2 row and computes its Gray image parameters.
pub fn verify_table2(t: &Tables, budget: u128) -> Result<Vec<Table2Check>> {
    let p = Prime::new(t.p)?;
    t.table2
        .par_iter()
        .map(|row| {
            let code = build_code(p, t.n, &row.gens)?;
            let image = gray_code(&code);
            let d = image.distance(budget)?.unwrap_or(0);
            let got = [image.len(), image.k(), d];
            let expected = [4 * t.n, row.k, row.d];
            Ok(Table2Check {
                label: row.label.clone(),
                gens: row.gens.clone(),
                expected,
                got,
                gray_quasi_cyclic: image.is_quasi_cyclic(4)?,
                ok: got == expected,
            })
        })
        .collect()
}
