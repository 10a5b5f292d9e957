//! Closed-form projective dimension of the edge ideal for cycles, paths and
//! the two bicyclic families, plus the set-theoretic complete intersection
//! test for cycles.
//!
//! On every family here the projective dimension equals the arithmetical
//! rank, so the same values are the required sequence lengths.

use serde::Serialize;
use thiserror::Error;

use crate::graphs::FamilySpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("no closed form for {0}")]
    Unsupported(String),
}

/// A formula value together with the congruence branch that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: usize,
    pub case_tag: String,
}

impl FormulaResult {
    fn new(value: usize, case_tag: impl Into<String>) -> Self {
        Self {
            value,
            case_tag: case_tag.into(),
        }
    }
}

fn need(ok: bool, what: impl FnOnce() -> String) -> Result<(), FormulaError> {
    if ok {
        Ok(())
    } else {
        Err(FormulaError::OutOfRange(what()))
    }
}

pub fn pd_cycle(n: usize) -> Result<FormulaResult, FormulaError> {
    need(n >= 3, || format!("cycle length {n} < 3"))?;
    Ok(match n % 3 {
        0 => FormulaResult::new(2 * n / 3, "n≡0"),
        1 => FormulaResult::new((2 * n + 1) / 3, "n≡1"),
        _ => FormulaResult::new((2 * n - 1) / 3, "n≡2"),
    })
}

pub fn pd_line(n: usize) -> Result<FormulaResult, FormulaError> {
    need(n >= 2, || format!("line length {n} < 2"))?;
    Ok(match n % 3 {
        0 => FormulaResult::new(2 * n / 3, "n≡0"),
        1 => FormulaResult::new((2 * n - 2) / 3, "n≡1"),
        _ => FormulaResult::new((2 * n - 1) / 3, "n≡2"),
    })
}

/// Two cycles of lengths `m`, `n` glued at one vertex; `|V| = m + n - 1`.
pub fn pd_bicyclic_vertex(m: usize, n: usize) -> Result<FormulaResult, FormulaError> {
    need(m >= 3 && n >= 3, || format!("bicyclic ({m},{n}) needs m, n >= 3"))?;
    let v = m + n - 1;
    Ok(match v % 3 {
        1 => FormulaResult::new((2 * v + 1) / 3, "bicyclic |V|≡1"),
        0 => FormulaResult::new(2 * v / 3, "bicyclic |V|≡0"),
        _ if m.is_multiple_of(3) || n.is_multiple_of(3) => {
            FormulaResult::new((2 * v).div_ceil(3), "bicyclic |V|≡2, a cycle ≡0")
        }
        _ => FormulaResult::new((2 * v - 1) / 3, "bicyclic |V|≡2, no cycle ≡0"),
    })
}

/// Cycles of lengths `m`, `n` joined by a path with `k` inner vertices;
/// `|V| = m + n + k`.
pub fn pd_dumbbell(m: usize, k: usize, n: usize) -> Result<FormulaResult, FormulaError> {
    need(m >= 3 && n >= 3, || format!("dumbbell ({m},{k},{n}) needs m, n >= 3"))?;
    let v = m + n + k;
    let low = |r: usize| r.is_multiple_of(3) || r % 3 == 1;
    Ok(match v % 3 {
        1 if m % 3 == 2 && n % 3 == 2 => {
            FormulaResult::new((2 * v - 2) / 3, "dumbbell |V|≡1, m≡n≡2")
        }
        1 => FormulaResult::new((2 * v + 1) / 3, "dumbbell |V|≡1, not m≡n≡2"),
        0 => FormulaResult::new(2 * v / 3, "dumbbell |V|≡0"),
        _ if low(m) && low(n) => {
            FormulaResult::new((2 * v).div_ceil(3), "dumbbell |V|≡2, m,n ∈ {0,1}")
        }
        _ => FormulaResult::new((2 * v - 1) / 3, "dumbbell |V|≡2, a cycle ≡2"),
    })
}

/// Formula for any single-family spec (unions have no closed form here).
pub fn pd_formula(spec: &FamilySpec) -> Result<FormulaResult, FormulaError> {
    match *spec {
        FamilySpec::Cycle(n) => pd_cycle(n),
        FamilySpec::Line(n) => pd_line(n),
        FamilySpec::BicyclicVertex { m, n } => pd_bicyclic_vertex(m, n),
        FamilySpec::Dumbbell { m, k, n } => pd_dumbbell(m, k, n),
        FamilySpec::Union(..) => Err(FormulaError::Unsupported(spec.to_string())),
    }
}

/// `I(C_n)` is a set-theoretic complete intersection iff its arithmetical
/// rank `pd_cycle(n)` equals its height `ceil(n / 2)`.
pub fn is_stci_cycle(n: usize) -> Result<bool, FormulaError> {
    Ok(pd_cycle(n)?.value == n.div_ceil(2))
}
