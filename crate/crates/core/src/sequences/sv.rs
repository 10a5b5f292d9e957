//! Partitions of a monomial set whose part sums generate the same ideal up
//! to radical: one monomial in the first part, and in every later part the
//! product of any two distinct members is divisible by a member of an
//! earlier part.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::SequenceError;
use crate::polyalg::{Monomial, Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvPartition {
    parts: Vec<Vec<Monomial>>,
    /// Exponent applied to each monomial in `sv_sums`, parallel to `parts`.
    exponents: Vec<Vec<u16>>,
    target: Vec<Monomial>,
}

impl SvPartition {
    /// Partition with every exponent 1.
    pub fn new(parts: Vec<Vec<Monomial>>, target: Vec<Monomial>) -> Self {
        let exponents = parts.iter().map(|p| vec![1; p.len()]).collect();
        Self {
            parts,
            exponents,
            target,
        }
    }

    /// Target taken to be the union of the parts.
    pub fn covering(parts: Vec<Vec<Monomial>>) -> Self {
        let target = parts.iter().flatten().copied().collect();
        Self::new(parts, target)
    }

    pub fn with_exponent(mut self, part: usize, index: usize, e: u16) -> Self {
        self.exponents[part][index] = e;
        self
    }

    pub fn parts(&self) -> &[Vec<Monomial>] {
        &self.parts
    }

    pub fn target(&self) -> &[Monomial] {
        &self.target
    }

    /// Moves `parts[from][index]` to the end of `parts[to]`.
    pub fn move_monomial(&mut self, from: usize, index: usize, to: usize) {
        let m = self.parts[from].remove(index);
        let e = self.exponents[from].remove(index);
        self.parts[to].push(m);
        self.exponents[to].push(e);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SvViolation {
    /// A target monomial lies in no part, or a part holds a non-target one.
    Coverage { missing: usize, extra: usize },
    /// The same monomial appears more than once across parts.
    Overlap,
    /// The first part does not have exactly one element.
    FirstPartSize(usize),
    /// Distinct members `a`, `b` of part `part` whose product no earlier
    /// member divides.
    Undivided { part: usize, a: usize, b: usize },
    /// Exponents must be positive.
    ZeroExponent { part: usize, index: usize },
}

impl fmt::Display for SvViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SvViolation::Coverage { missing, extra } => {
                write!(f, "{missing} target monomial(s) uncovered, {extra} outside the target")
            }
            SvViolation::Overlap => write!(f, "parts are not disjoint"),
            SvViolation::FirstPartSize(s) => write!(f, "first part has {s} elements, not 1"),
            SvViolation::Undivided { part, a, b } => write!(
                f,
                "product of elements {a} and {b} of part {part} has no divisor in an earlier part"
            ),
            SvViolation::ZeroExponent { part, index } => {
                write!(f, "element {index} of part {part} has exponent 0")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SvReport {
    pub ok: bool,
    pub violations: Vec<SvViolation>,
}

pub fn sv_check(p: &SvPartition) -> SvReport {
    let mut violations = Vec::new();
    let members: Vec<Monomial> = p.parts.iter().flatten().copied().collect();
    let distinct: BTreeSet<&[u16]> = members.iter().map(|m| m.exponents()).collect();
    if distinct.len() != members.len() {
        violations.push(SvViolation::Overlap);
    }
    let target: BTreeSet<&[u16]> = p.target.iter().map(|m| m.exponents()).collect();
    let missing = target.difference(&distinct).count();
    let extra = distinct.difference(&target).count();
    if missing + extra > 0 {
        violations.push(SvViolation::Coverage { missing, extra });
    }
    match p.parts.first() {
        Some(first) if first.len() == 1 => {}
        first => violations.push(SvViolation::FirstPartSize(first.map_or(0, Vec::len))),
    }
    for (i, part) in p.parts.iter().enumerate().skip(1) {
        let earlier = &p.parts[..i];
        for a in 0..part.len() {
            for b in a + 1..part.len() {
                let prod = part[a].product(&part[b]);
                if !earlier.iter().flatten().any(|d| d.divides(&prod)) {
                    violations.push(SvViolation::Undivided { part: i, a, b });
                }
            }
        }
    }
    for (i, es) in p.exponents.iter().enumerate() {
        for (j, &e) in es.iter().enumerate() {
            if e == 0 {
                violations.push(SvViolation::ZeroExponent { part: i, index: j });
            }
        }
    }
    SvReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// `q_i = Σ_{m ∈ P_i} m^{e(m)}`; an empty part sums to zero.
pub fn sv_sums(p: &SvPartition, ring: &Arc<Ring>) -> Result<Vec<Polynomial>, SequenceError> {
    let report = sv_check(p);
    if !report.ok {
        return Err(SequenceError::SvPrecondition(report.violations));
    }
    p.parts
        .iter()
        .zip(&p.exponents)
        .map(|(part, es)| {
            let terms = part.iter().zip(es).map(|(m, &e)| (1, m.pow(e)));
            Ok(Polynomial::from_terms(ring, terms)?)
        })
        .collect()
}
