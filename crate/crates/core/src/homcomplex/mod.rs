//! ε-complexes of graphs, their reduced homology over a prime field, and the
//! graded Betti numbers of the edge ideal
//!
//! β_{i,d}(G) = Σ_{|W| = d} dim H̃_{i-2}(ε(G[W]); K),
//!
//! where ε(H) is the complex on V(H) whose facets are the complements of the
//! edges of H.

mod reduce;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::Graph;
use crate::polyalg::PrimeField;

/// Vertex limit for a single homology computation (dense face index).
pub const MAX_HOMOLOGY_VERTICES: usize = 22;
/// Vertex limit for evaluating the Betti formula over all vertex subsets.
pub const MAX_BETTI_VERTICES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("ε-complex is undefined for a graph without edges")]
    Edgeless,
    #[error("{vertices} vertices exceed the homology limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("facet refers to vertex {0}, outside the vertex set")]
    VertexOutOfRange(usize),
}

/// Finite abstract simplicial complex on a labelled vertex set.
///
/// Facets are vertex bitmasks, stored inclusion-maximal and sorted. No
/// facets at all is the void complex; a single empty facet is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    pub fn new(
        vertices: Vec<String>,
        facets: impl IntoIterator<Item = u32>,
    ) -> Result<Self, HomologyError> {
        if vertices.len() > MAX_HOMOLOGY_VERTICES {
            return Err(HomologyError::TooLarge {
                vertices: vertices.len(),
                limit: MAX_HOMOLOGY_VERTICES,
            });
        }
        let mut all: Vec<u32> = facets.into_iter().collect();
        for &f in &all {
            if f >> vertices.len() != 0 {
                return Err(HomologyError::VertexOutOfRange(31 - f.leading_zeros() as usize));
            }
        }
        all.sort_unstable();
        all.dedup();
        let maximal: Vec<u32> = all
            .iter()
            .copied()
            .filter(|&f| !all.iter().any(|&g| g != f && f & !g == 0))
            .collect();
        Ok(Self {
            vertices,
            facets: maximal,
        })
    }

    /// Complex with no faces at all.
    pub fn void(vertices: Vec<String>) -> Self {
        Self {
            vertices,
            facets: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    /// Facets as lists of vertex labels.
    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|&f| {
                (0..self.vertices.len())
                    .filter(|&i| f >> i & 1 == 1)
                    .map(|i| self.vertices[i].as_str())
                    .collect()
            })
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: u32) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// `f[j]` = number of faces with `j` vertices (dimension `j - 1`).
    pub fn face_counts(&self) -> Vec<usize> {
        reduce::FaceLattice::new(self.vertices.len(), &self.facets).face_counts()
    }

    /// Σ_{i ≥ -1} (-1)^i f_i from face counts alone.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum()
    }
}

/// Nonzero reduced homology dimensions, keyed by degree `i >= -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyProfile(BTreeMap<i32, usize>);

impl HomologyProfile {
    pub fn from_dims(dims: impl IntoIterator<Item = (i32, usize)>) -> Self {
        Self(dims.into_iter().filter(|&(_, d)| d > 0).collect())
    }

    pub fn get(&self, degree: i32) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.0.iter().map(|(&i, &d)| (i, d))
    }

    /// Profile with every degree raised by `by`.
    pub fn shifted(&self, by: i32) -> Self {
        Self(self.0.iter().map(|(&i, &d)| (i + by, d)).collect())
    }

    /// Σ (-1)^i dim H̃_i.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(i, d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// ε(h): vertex set V(h), one facet V(h) \ e per edge e.
pub fn epsilon_complex(h: &Graph) -> Result<SimplicialComplex, HomologyError> {
    if h.edge_count() == 0 {
        return Err(HomologyError::Edgeless);
    }
    let d = h.vertex_count();
    if d > MAX_HOMOLOGY_VERTICES {
        return Err(HomologyError::TooLarge {
            vertices: d,
            limit: MAX_HOMOLOGY_VERTICES,
        });
    }
    let full: u32 = if d == 32 { u32::MAX } else { (1 << d) - 1 };
    SimplicialComplex::new(
        h.labels().to_vec(),
        h.edges().iter().map(|&(a, b)| full & !(1 << a | 1 << b)),
    )
}

/// Reduced homology over `field`, from boundary ranks including the
/// augmentation map: `{∅}` gives `{-1: 1}`, the void complex gives zero.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: PrimeField) -> HomologyProfile {
    homology_of_facets(c.vertices.len(), &c.facets, &field)
}

fn homology_of_facets(d: usize, facets: &[u32], field: &PrimeField) -> HomologyProfile {
    let lattice = reduce::FaceLattice::new(d, facets);
    let ranks = reduce::boundary_ranks(field, &lattice);
    let counts = lattice.face_counts();
    HomologyProfile::from_dims((0..counts.len()).map(|j| {
        let next = ranks.get(j + 1).copied().unwrap_or(0);
        (j as i32 - 1, counts[j] - ranks[j] - next)
    }))
}

/// Graded Betti numbers of the edge ideal; entries are all nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable(BTreeMap<(usize, usize), usize>);

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    d: usize,
    dim: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|(&(i, d), &dim)| BettiEntry { i, d, dim }))
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, d: usize) -> usize {
        self.0.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological index in the support.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.0.keys().map(|&(i, _)| i).max()
    }

    /// Adds another table entrywise.
    pub fn merge(&mut self, other: &BettiTable) {
        for (&k, &v) in &other.0 {
            *self.0.entry(k).or_default() += v;
        }
    }

    /// `i,d,dim` rows sorted by `(i, d)`, with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,d,dim\n");
        for ((i, d), dim) in self.iter() {
            writeln!(out, "{i},{d},{dim}").unwrap();
        }
        out
    }
}

/// Contribution of the induced subgraph on `subset` to the Betti table.
fn subset_contribution(
    adj_edges: &[(usize, usize)],
    subset: u32,
    field: &PrimeField,
) -> Option<(usize, HomologyProfile)> {
    let d = subset.count_ones() as usize;
    let mut local = [0u8; 32];
    let mut next = 0u8;
    for (v, slot) in local.iter_mut().enumerate() {
        if subset >> v & 1 == 1 {
            *slot = next;
            next += 1;
        }
    }
    let full: u32 = ((1u64 << d) - 1) as u32;
    let facets: Vec<u32> = adj_edges
        .iter()
        .filter(|&&(a, b)| subset >> a & 1 == 1 && subset >> b & 1 == 1)
        .map(|&(a, b)| full & !(1 << local[a] | 1 << local[b]))
        .collect();
    if facets.is_empty() {
        return None;
    }
    let mut facets = facets;
    facets.sort_unstable();
    facets.dedup();
    Some((d, homology_of_facets(d, &facets, field)))
}

/// Exact evaluation of the Betti formula over every vertex subset with at
/// least one induced edge.
pub fn betti_table(g: &Graph, field: PrimeField) -> Result<BettiTable, HomologyError> {
    let n = g.vertex_count();
    if n > MAX_BETTI_VERTICES {
        return Err(HomologyError::TooLarge {
            vertices: n,
            limit: MAX_BETTI_VERTICES,
        });
    }
    let mut table = BettiTable::default();
    for subset in 1u32..(1u32 << n) {
        if let Some((d, profile)) = subset_contribution(g.edges(), subset, &field) {
            for (deg, dim) in profile.iter() {
                // H̃_{i-2} feeds β_{i,d}
                let i = (deg + 2) as usize;
                *table.0.entry((i, d)).or_default() += dim;
            }
        }
    }
    Ok(table)
}

/// Top homological index of the Betti table.
pub fn projective_dimension(g: &Graph, field: PrimeField) -> Result<usize, HomologyError> {
    if g.edge_count() == 0 {
        return Err(HomologyError::Edgeless);
    }
    Ok(betti_table(g, field)?
        .projective_dimension()
        .expect("a graph with an edge has beta_{1,2} > 0"))
}
