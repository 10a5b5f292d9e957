//! Certificates that a generator sequence defines the edge ideal up to
//! radical, and that its length is the projective dimension.
//!
//! The inclusion (sequence) ⊆ I(G) is checked term by term. The reverse
//! inclusion I(G) ⊆ √(sequence) is checked one edge at a time by a
//! Rabinowitsch Gröbner run, over every requested field.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::formulas::{self, FormulaError};
use crate::graphs::{self, FamilySpec, Graph, GraphError};
use crate::groebner::{radical_certificate, GroebnerConfig, GroebnerError, GroebnerStats};
use crate::homcomplex::{self, HomologyError};
use crate::polyalg::{AlgebraError, Monomial, Polynomial, PrimeField};
use crate::sequences::{self, GeneratorSequence, SequenceError};

/// Fields used when none are requested.
pub const DEFAULT_FIELDS: [u64; 2] = [2, 32003];
/// Largest vertex count for which `certify` evaluates homology by default.
pub const DEFAULT_HOMOLOGY_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("Gröbner run for edge {edge} over GF({field}) failed: {source}")]
    Groebner {
        edge: String,
        field: u64,
        source: GroebnerError,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("no fields requested")]
    NoFields,
    #[error("sequence ring does not match the graph's vertices")]
    RingMismatch,
}

impl VerifyError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            VerifyError::Groebner {
                source: GroebnerError::ResourceLimit { .. },
                ..
            } | VerifyError::Homology(HomologyError::TooLarge { .. })
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub groebner: GroebnerConfig,
    /// Homology is skipped (report marked formula-only) above this many
    /// vertices.
    pub homology_limit: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            groebner: GroebnerConfig::from_env(),
            homology_limit: DEFAULT_HOMOLOGY_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HomologyStage {
    #[serde(rename = "computed")]
    Computed,
    #[serde(rename = "formula-only")]
    FormulaOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCheck {
    pub edge: String,
    pub ok: bool,
    /// One entry per requested field, in request order.
    pub per_field: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportStats {
    pub spairs: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
    pub max_basis_len: usize,
    pub homology_stage: HomologyStage,
    /// Homology projective dimension agreed across all fields.
    pub homology_agrees: bool,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    pub fields: Vec<u64>,
    pub forward: Vec<bool>,
    pub reverse: Vec<EdgeCheck>,
    pub length: usize,
    pub pd_formula: usize,
    pub pd_homology: Option<usize>,
    pub verdict: Verdict,
    pub stats: ReportStats,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// JSON without the wall-clock field, stable across runs.
    pub fn to_json_untimed(&self) -> serde_json::Value {
        let mut v = self.to_json();
        if let Some(stats) = v.get_mut("stats").and_then(|s| s.as_object_mut()) {
            stats.shift_remove("wall_ms");
        }
        v
    }
}

fn same_vertices(seq: &GeneratorSequence, g: &Graph) -> bool {
    seq.polys()
        .iter()
        .all(|f| f.ring().names() == g.labels())
}

/// Per polynomial: every term is divisible by an edge monomial of `g`.
pub fn verify_forward(seq: &GeneratorSequence, g: &Graph) -> Vec<bool> {
    let edges = graphs::edge_ideal(g);
    let aligned = same_vertices(seq, g);
    seq.polys()
        .iter()
        .map(|f| {
            aligned
                && !f.is_zero()
                && f
                    .monomials()
                    .all(|m| edges.iter().any(|e| e.divides(m)))
        })
        .collect()
}

/// Per edge of `g`: the edge monomial lies in the radical of the sequence
/// over `field`. Also returns the accumulated Gröbner statistics.
pub fn verify_reverse(
    seq: &GeneratorSequence,
    g: &Graph,
    field: PrimeField,
    config: &GroebnerConfig,
) -> Result<(Vec<bool>, GroebnerStats), VerifyError> {
    if !same_vertices(seq, g) {
        return Err(VerifyError::RingMismatch);
    }
    let seq = seq.over(field)?;
    let ring = g.ring(field)?;
    let mut stats = GroebnerStats::default();
    let mut out = Vec::with_capacity(g.edge_count());
    for (&e, mono) in g.edges().iter().zip(graphs::edge_ideal(g)) {
        let f = Polynomial::monomial(&ring, mono);
        let member = if seq.polys().iter().all(Polynomial::is_zero) {
            false
        } else {
            let cert = radical_certificate(&f, seq.polys(), config).map_err(|source| {
                VerifyError::Groebner {
                    edge: g.edge_name(e),
                    field: field.modulus(),
                    source,
                }
            })?;
            stats.merge(&cert.stats);
            cert.member
        };
        out.push(member);
    }
    Ok((out, stats))
}

fn parse_fields(fields: &[u64]) -> Result<Vec<PrimeField>, VerifyError> {
    if fields.is_empty() {
        return Err(VerifyError::NoFields);
    }
    fields
        .iter()
        .map(|&p| Ok(PrimeField::new(p)?))
        .collect()
}

/// Full certification of the family's own sequence.
pub fn certify(
    spec: &FamilySpec,
    fields: &[u64],
    opts: &CertifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let first = parse_fields(fields)?[0];
    let seq = sequences::family_sequence(spec, first)?;
    certify_with_sequence(spec, &seq, fields, opts)
}

/// Certification of an arbitrary sequence against the family graph.
pub fn certify_with_sequence(
    spec: &FamilySpec,
    seq: &GeneratorSequence,
    fields: &[u64],
    opts: &CertifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let ks = parse_fields(fields)?;
    let g = graphs::build(spec)?;
    let pd_formula = formulas::pd_formula(spec)?.value;
    let forward = verify_forward(seq, &g);

    let mut stats = GroebnerStats::default();
    let mut per_field: Vec<Vec<bool>> = Vec::new();
    for &k in &ks {
        let (bits, s) = verify_reverse(seq, &g, k, &opts.groebner)?;
        stats.merge(&s);
        per_field.push(bits);
    }
    let reverse: Vec<EdgeCheck> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let bits: Vec<bool> = per_field.iter().map(|f| f[i]).collect();
            EdgeCheck {
                edge: g.edge_name(e),
                ok: bits.iter().all(|&b| b),
                per_field: bits,
            }
        })
        .collect();

    let (pd_homology, stage, agrees) = if g.vertex_count() <= opts.homology_limit {
        let mut values = Vec::new();
        for &k in &ks {
            values.push(homcomplex::projective_dimension(&g, k)?);
        }
        let agrees = values.iter().all(|&v| v == values[0]);
        (Some(values[0]), HomologyStage::Computed, agrees)
    } else {
        (None, HomologyStage::FormulaOnly, true)
    };

    let length = seq.len();
    let pass = forward.iter().all(|&b| b)
        && reverse.iter().all(|e| e.ok)
        && length == pd_formula
        && agrees
        && pd_homology.is_none_or(|h| h == pd_formula);

    Ok(VerificationReport {
        graph: spec.to_string(),
        fields: ks.iter().map(PrimeField::modulus).collect(),
        forward,
        reverse,
        length,
        pd_formula,
        pd_homology,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        stats: ReportStats {
            spairs: stats.pairs_processed,
            pairs_skipped: stats.pairs_skipped,
            zero_reductions: stats.zero_reductions,
            max_basis_len: stats.max_basis_len,
            homology_stage: stage,
            homology_agrees: agrees,
            wall_ms: start.elapsed().as_millis() as u64,
        },
    })
}

/// Sequences obtained from `seq` by deleting one polynomial, or one term of
/// a polynomial with at least two terms. Each comes with a description.
pub fn single_deletions(seq: &GeneratorSequence) -> Vec<(String, GeneratorSequence)> {
    let polys = seq.polys();
    let mut out = Vec::new();
    for i in 0..polys.len() {
        let mut rest = polys.to_vec();
        rest.remove(i);
        out.push((format!("drop generator {i}"), seq.with_polys(rest)));
    }
    for (i, f) in polys.iter().enumerate() {
        if f.len() < 2 {
            continue;
        }
        for t in 0..f.len() {
            let kept: Vec<(i64, Monomial)> = f
                .terms()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != t)
                .map(|(_, term)| (f.ring().field().signed(term.coeff), term.mono))
                .collect();
            let g = Polynomial::from_terms(f.ring(), kept).expect("same ring");
            let mut mutated = polys.to_vec();
            mutated[i] = g;
            out.push((format!("drop term {t} of generator {i}"), seq.with_polys(mutated)));
        }
    }
    out
}
