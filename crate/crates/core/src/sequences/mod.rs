//! Explicit sequences generating the edge ideal up to radical, with length
//! equal to the projective dimension, and the partition criterion behind the
//! cycle cases.
//!
//! Cycle sequences are built directly from their index patterns. The
//! bicyclic and dumbbell cases are rows of `data/cases.toml`.

mod sv;
mod template;

pub use sv::{sv_check, sv_sums, SvPartition, SvReport, SvViolation};

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::formulas::{self, FormulaError};
use crate::graphs::{self, FamilySpec, Graph, GraphError};
use crate::polyalg::{AlgebraError, Monomial, PolyJson, Polynomial, PrimeField, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("case table: {0}")]
    Table(String),
    #[error("no case row for {0}")]
    NoCase(String),
    #[error("sequence for {graph} has length {got}, formula gives {want}")]
    LengthMismatch { graph: String, got: usize, want: usize },
    #[error("no sequence family for {0}")]
    Unsupported(String),
    #[error("partition fails the divisibility criterion: {0:?}")]
    SvPrecondition(Vec<SvViolation>),
}

/// Sum of edge monomials, as pairs of vertex indices.
pub(crate) type EdgeSum = Vec<(usize, usize)>;

/// Sequence of the cycle through `v[0], v[1], .., v[n-1]`, in the shape
/// fixed by `n mod 3`; `v[0]` plays the vertex `x1`.
pub(crate) fn cycle_terms(v: &[usize]) -> Vec<EdgeSum> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let x = |i: usize| v[i - 1];
    let e = |i: usize, j: usize| (x(i), x(j));
    let m = n / 3;
    let mut out = Vec::new();
    match n % 3 {
        0 | 1 => {
            out.push(vec![e(1, 2)]);
            out.push(vec![e(1, n), e(2, 3)]);
            for i in 1..m {
                out.push(vec![e(3 * i + 1, 3 * i + 2)]);
                out.push(vec![e(3 * i, 3 * i + 1), e(3 * i + 2, 3 * i + 3)]);
            }
            if n % 3 == 1 {
                out.push(vec![e(3 * m, 3 * m + 1)]);
            }
        }
        _ => {
            out.push(vec![e(1, 2)]);
            out.push(vec![e(2, 3), e(4, 5)]);
            for i in 1..m {
                out.push(vec![e(3 * i, 3 * i + 1), e(3 * i + 2, 3 * i + 3)]);
                out.push(vec![e(3 * i + 2, 3 * i + 3), e(3 * i + 4, 3 * i + 5)]);
            }
            out.push(vec![e(1, n), e(3 * m, 3 * m + 1)]);
        }
    }
    out
}

/// Polynomials meant to generate `I(graph)` up to radical.
#[derive(Clone, Debug)]
pub struct GeneratorSequence {
    graph: String,
    case_tag: String,
    claimed_length: usize,
    polys: Vec<Polynomial>,
}

#[derive(Serialize)]
struct SequenceJson<'a> {
    graph: &'a str,
    case: &'a str,
    length: usize,
    polys: Vec<PolyJson>,
}

impl GeneratorSequence {
    pub fn new(graph: String, case_tag: String, claimed_length: usize, polys: Vec<Polynomial>) -> Self {
        Self {
            graph,
            case_tag,
            claimed_length,
            polys,
        }
    }

    pub fn graph(&self) -> &str {
        &self.graph
    }

    pub fn case_tag(&self) -> &str {
        &self.case_tag
    }

    /// Length the construction promises (the projective dimension).
    pub fn claimed_length(&self) -> usize {
        self.claimed_length
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Same sequence with other polynomials (for mutation experiments).
    pub fn with_polys(&self, polys: Vec<Polynomial>) -> Self {
        Self {
            polys,
            ..self.clone()
        }
    }

    /// Same sequence with coefficients read in another prime field.
    pub fn over(&self, field: PrimeField) -> Result<Self, SequenceError> {
        let Some(first) = self.polys.first() else {
            return Ok(self.clone());
        };
        let ring = Ring::with_order(field, first.ring().names().to_vec(), first.ring().order().clone())?;
        let polys = self
            .polys
            .iter()
            .map(|f| f.change_field(&ring))
            .collect::<Result<_, _>>()?;
        Ok(self.with_polys(polys))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SequenceJson {
            graph: &self.graph,
            case: &self.case_tag,
            length: self.polys.len(),
            polys: self.polys.iter().map(Polynomial::to_json).collect(),
        })
        .expect("sequence serializes")
    }

    /// Polynomials rendered as text, e.g. `x1*x2 + x3*x4`.
    pub fn rendered(&self) -> Vec<String> {
        self.polys.iter().map(|f| f.to_string()).collect()
    }
}

fn assemble(
    spec: &FamilySpec,
    g: &Graph,
    field: PrimeField,
    case_tag: String,
    sums: Vec<EdgeSum>,
) -> Result<GeneratorSequence, SequenceError> {
    let ring = g.ring(field)?;
    let n = g.vertex_count();
    let polys = sums
        .iter()
        .map(|sum| {
            let terms = sum
                .iter()
                .map(|&(a, b)| Monomial::edge(n, a, b).map(|m| (1, m)))
                .collect::<Result<Vec<_>, _>>()?;
            Polynomial::from_terms(&ring, terms)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let want = formulas::pd_formula(spec)?.value;
    if polys.len() != want {
        return Err(SequenceError::LengthMismatch {
            graph: spec.to_string(),
            got: polys.len(),
            want,
        });
    }
    Ok(GeneratorSequence::new(spec.to_string(), case_tag, want, polys))
}

fn indices(g: &Graph, names: impl IntoIterator<Item = String>) -> Vec<usize> {
    names
        .into_iter()
        .map(|l| g.index_of(&l).expect("family label present"))
        .collect()
}

pub fn cycle_sequence(n: usize, field: PrimeField) -> Result<GeneratorSequence, SequenceError> {
    let spec = FamilySpec::Cycle(n);
    let g = graphs::build(&spec)?;
    let tag = formulas::pd_cycle(n)?.case_tag;
    let v: Vec<usize> = (0..n).collect();
    assemble(&spec, &g, field, format!("cycle {tag}"), cycle_terms(&v))
}

pub fn bicyclic_vertex_sequence(m: usize, n: usize, field: PrimeField) -> Result<GeneratorSequence, SequenceError> {
    let spec = FamilySpec::BicyclicVertex { m, n };
    let g = graphs::build(&spec)?;
    let row = template::select("bicyclic", None, m, n)?;
    let roles = template::Roles {
        q: indices(&g, (1..=m).map(|i| format!("x{i}"))),
        p: indices(
            &g,
            std::iter::once("x1".to_string()).chain((2..=n).map(|i| format!("y{i}"))),
        ),
        z: Vec::new(),
    };
    let sums = template::expand(row.seq, roles, row.mirror, 0)?;
    assemble(&spec, &g, field, row.tag, sums)
}

pub fn dumbbell_sequence(m: usize, k: usize, n: usize, field: PrimeField) -> Result<GeneratorSequence, SequenceError> {
    let spec = FamilySpec::Dumbbell { m, k, n };
    let g = graphs::build(&spec)?;
    let row = template::select("dumbbell", Some(k), m, n)?;
    let path = std::iter::once("x1".to_string())
        .chain((1..=k).map(|i| format!("z{i}")))
        .chain(std::iter::once("y1".to_string()));
    let roles = template::Roles {
        q: indices(&g, (1..=m).map(|i| format!("x{i}"))),
        p: indices(&g, (1..=n).map(|i| format!("y{i}"))),
        z: indices(&g, path),
    };
    let sums = template::expand(row.seq, roles, row.mirror, k)?;
    assemble(&spec, &g, field, row.tag, sums)
}

/// Sequence for any cycle, bicyclic or dumbbell spec.
pub fn family_sequence(spec: &FamilySpec, field: PrimeField) -> Result<GeneratorSequence, SequenceError> {
    match *spec {
        FamilySpec::Cycle(n) => cycle_sequence(n, field),
        FamilySpec::BicyclicVertex { m, n } => bicyclic_vertex_sequence(m, n, field),
        FamilySpec::Dumbbell { m, k, n } => dumbbell_sequence(m, k, n, field),
        FamilySpec::Line(_) | FamilySpec::Union(..) => Err(SequenceError::Unsupported(spec.to_string())),
    }
}

/// Partition of `I(C_n)`'s edges into the summand sets of
/// `cycle_sequence(n)`, in sequence order; meaningful for `n ≢ 2 (mod 3)`.
pub fn cycle_partition(n: usize) -> Result<SvPartition, SequenceError> {
    formulas::pd_cycle(n)?;
    let v: Vec<usize> = (0..n).collect();
    let parts = cycle_terms(&v)
        .into_iter()
        .map(|sum| sum.into_iter().map(|(a, b)| Monomial::edge(n, a, b)).collect())
        .collect::<Result<Vec<Vec<Monomial>>, _>>()?;
    let g = graphs::build(&FamilySpec::Cycle(n))?;
    Ok(SvPartition::new(parts, graphs::edge_ideal(&g)))
}

/// Ring of the graph a spec describes.
pub fn family_ring(spec: &FamilySpec, field: PrimeField) -> Result<Arc<Ring>, SequenceError> {
    Ok(graphs::build(spec)?.ring(field)?)
}
