//! Serializable summary of everything computed for one code. Field order is
//! fixed by declaration order so identical inputs give identical JSON.

use serde::Serialize;

use crate::code::{check_conditions, CyclicCode, FormulaDiscrepancy};
use crate::distance::{distance_report, singleton_check, DistanceMethod, DistanceReport, SingletonCheck};
use crate::error::{Error, Result};
use crate::gray::gray_code;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalStrings {
    pub g: String,
    pub p1: String,
    pub q1: String,
    pub r1: String,
    pub a1: String,
    pub q2: String,
    pub r2: String,
    pub a2: String,
    pub r3: String,
    pub a3: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub c1: String,
    pub c2: String,
    pub c3: String,
    pub c4: String,
    /// Degrees (t, t1, t2, t3).
    pub degrees: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrayReport {
    pub length: usize,
    pub k: usize,
    /// `None` when the image is zero or too large to search.
    pub d: Option<usize>,
    pub quasi_cyclic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoprimeReport {
    pub generators: Vec<String>,
    pub q1: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub p: u32,
    pub n: usize,
    pub inputs: Vec<String>,
    pub generators: Vec<String>,
    pub canonical: CanonicalStrings,
    pub tower: TowerReport,
    pub k: usize,
    pub rank: usize,
    pub rank_formula: i64,
    pub free_rank: usize,
    pub free_rank_formula: i64,
    pub log_p_cardinality: usize,
    pub log_p_cardinality_formula: i64,
    pub is_free: bool,
    pub distance: DistanceReport,
    pub gray: GrayReport,
    pub singleton: Option<SingletonCheck>,
    /// Present for lengths coprime to p when the two-generator form holds.
    pub coprime_form: Option<CoprimeReport>,
    /// Set when the two-generator form does not reproduce the code.
    pub coprime_form_error: Option<String>,
    pub condition_violations: Vec<u8>,
    pub discrepancies: Vec<FormulaDiscrepancy>,
}

impl AnalysisReport {
    /// Whether any closed formula disagreed with a computed value.
    pub fn has_discrepancy(&self) -> bool {
        !self.discrepancies.is_empty() || self.distance.mismatch || self.coprime_form_error.is_some()
    }
}

/// Runs every analysis on `c`. `inputs` is echoed back verbatim.
pub fn analyze(
    c: &CyclicCode,
    inputs: &[String],
    prefer: Option<DistanceMethod>,
    budget: u128,
) -> Result<AnalysisReport> {
    let g = c.gens();
    let tower = c.tower();
    let ranks = c.rank_report();
    let distance = distance_report(c, prefer, budget)?;
    let image = gray_code(c);
    let gray_d = match image.distance(budget) {
        Ok(d) => d,
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let singleton = match singleton_check(c, budget) {
        Ok(s) => Some(s),
        Err(Error::ZeroCode | Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let (coprime_form, coprime_form_error) = match c.coprime_form() {
        Ok(f) => (
            Some(CoprimeReport {
                generators: f.generators.iter().map(ToString::to_string).collect(),
                q1: f.q1.to_string(),
            }),
            None,
        ),
        Err(Error::NotCoprime { .. }) => (None, None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(AnalysisReport {
        p: c.modulus().get(),
        n: c.len(),
        inputs: inputs.to_vec(),
        generators: g.generator_strings(),
        canonical: CanonicalStrings {
            g: g.g.to_string(),
            p1: g.p1.to_string(),
            q1: g.q1.to_string(),
            r1: g.r1.to_string(),
            a1: g.a1.to_string(),
            q2: g.q2.to_string(),
            r2: g.r2.to_string(),
            a2: g.a2.to_string(),
            r3: g.r3.to_string(),
            a3: g.a3.to_string(),
        },
        tower: TowerReport {
            c1: tower.c1.to_string(),
            c2: tower.c2.to_string(),
            c3: tower.c3.to_string(),
            c4: tower.c4.to_string(),
            degrees: [g.t(), g.t1(), g.t2(), g.t3()],
        },
        k: c.k(),
        rank: ranks.rank,
        rank_formula: ranks.rank_formula,
        free_rank: ranks.free_rank,
        free_rank_formula: ranks.free_rank_formula,
        log_p_cardinality: ranks.log_p_cardinality,
        log_p_cardinality_formula: ranks.log_p_cardinality_formula,
        is_free: c.is_free(),
        distance,
        gray: GrayReport { length: image.len(), k: image.k(), d: gray_d, quasi_cyclic: image.is_quasi_cyclic(4)? },
        singleton,
        coprime_form,
        coprime_form_error,
        condition_violations: check_conditions(g),
        discrepancies: ranks.discrepancies,
    })
}
