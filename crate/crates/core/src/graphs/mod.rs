//! Labelled simple graphs, the cycle/line/bicyclic families, their edge
//! ideals and vertex-cover height.
//!
//! Vertex labels are ring variable names and their position in
//! [`Graph::labels`] is the ring index. Families use a fixed block order:
//! the x-block, then the y-block, then the z-block.

mod family;

pub use family::FamilySpec;

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::polyalg::{AlgebraError, Monomial, PrimeField, Ring};

/// Vertex-count limit for the exhaustive vertex-cover search.
pub const MAX_COVER_VERTICES: usize = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid graph spec: {0}")]
    Syntax(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("not a simple graph: {0}")]
    NotSimple(String),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("graph has {0} vertices; limit is {1}")]
    TooLarge(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Undirected simple graph on labelled vertices.
///
/// Edges are stored as `(i, j)` with `i < j`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(GraphError::NotSimple("duplicate vertex label".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= labels.len() || b >= labels.len() {
                return Err(GraphError::UnknownLabel(format!("vertex index {}", a.max(b))));
            }
            if a == b {
                return Err(GraphError::NotSimple(format!("loop at {}", labels[a])));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(GraphError::NotSimple(format!(
                    "duplicate edge {}{}",
                    labels[a], labels[b]
                )));
            }
        }
        Ok(Self {
            labels,
            edges: set.into_iter().collect(),
        })
    }

    /// Builds from label pairs; every endpoint must be a declared label.
    pub fn from_labelled_edges(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let find = |name: &str| {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| GraphError::UnknownLabel(name.to_string()))
        };
        let mut idx = Vec::new();
        for (a, b) in edges {
            idx.push((find(a)?, find(b)?));
        }
        Self::new(labels, idx)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Edge rendered as the product of its labels, e.g. `x1x2`.
    pub fn edge_name(&self, (a, b): (usize, usize)) -> String {
        format!("{}{}", self.labels[a], self.labels[b])
    }

    /// Polynomial ring whose variables are this graph's labels.
    pub fn ring(&self, field: PrimeField) -> Result<Arc<Ring>, GraphError> {
        Ok(Ring::new(field, self.labels.clone())?)
    }
}

fn block(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn cycle_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
    let n = vertices.len();
    (0..n).map(|i| (vertices[i], vertices[(i + 1) % n])).collect()
}

/// Constructs the labelled graph for a family spec.
///
/// Cycle vertices are `x1..xn` in cyclic order. In the bicyclic graph the
/// second cycle is `x1 y2 .. yn` (so `y1 = x1`). In the dumbbell the path is
/// `x1 z1 .. zk y1`.
pub fn build(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    match *spec {
        FamilySpec::Cycle(n) => {
            let v: Vec<usize> = (0..n).collect();
            Graph::new(block("x", 1..=n), cycle_edges(&v))
        }
        FamilySpec::Line(n) => Graph::new(block("x", 1..=n), (1..n).map(|i| (i - 1, i))),
        FamilySpec::BicyclicVertex { m, n } => {
            let mut labels = block("x", 1..=m);
            labels.extend(block("y", 2..=n));
            let xs: Vec<usize> = (0..m).collect();
            let mut ys = vec![0];
            ys.extend(m..m + n - 1);
            let mut edges = cycle_edges(&xs);
            edges.extend(cycle_edges(&ys));
            Graph::new(labels, edges)
        }
        FamilySpec::Dumbbell { m, k, n } => {
            let mut labels = block("x", 1..=m);
            labels.extend(block("y", 1..=n));
            labels.extend(block("z", 1..=k));
            let xs: Vec<usize> = (0..m).collect();
            let ys: Vec<usize> = (m..m + n).collect();
            let mut path = vec![0];
            path.extend(m + n..m + n + k);
            path.push(m);
            let mut edges = cycle_edges(&xs);
            edges.extend(cycle_edges(&ys));
            edges.extend(path.windows(2).map(|w| (w[0], w[1])));
            Graph::new(labels, edges)
        }
        FamilySpec::Union(ref a, ref b) => Ok(disjoint_union(&build(a)?, &build(b)?)),
    }
}

fn split_label(label: &str) -> (&str, &str) {
    let pos = label
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(label.len());
    label.split_at(pos)
}

/// Letters used for the relabelled blocks of a union's right operand.
const FRESH_BLOCKS: &str = "uvwabcdefghijklmnopqrs";

/// Disjoint union; each label block of `b` is renamed to the next block
/// letter not used by `a` (in `FRESH_BLOCKS` order).
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut used: BTreeSet<String> = a
        .labels
        .iter()
        .map(|l| split_label(l).0.to_string())
        .collect();
    let mut rename: Vec<(String, String)> = Vec::new();
    for l in &b.labels {
        let prefix = split_label(l).0.to_string();
        if rename.iter().any(|(from, _)| *from == prefix) {
            continue;
        }
        let fresh = FRESH_BLOCKS
            .chars()
            .map(|c| c.to_string())
            .find(|c| !used.contains(c))
            .expect("enough fresh block letters");
        used.insert(fresh.clone());
        rename.push((prefix, fresh));
    }
    let mut labels = a.labels.clone();
    for l in &b.labels {
        let (prefix, num) = split_label(l);
        let to = &rename.iter().find(|(from, _)| from == prefix).unwrap().1;
        labels.push(format!("{to}{num}"));
    }
    let off = a.labels.len();
    let edges = a
        .edges
        .iter()
        .copied()
        .chain(b.edges.iter().map(|&(x, y)| (x + off, y + off)));
    Graph::new(labels, edges).expect("disjoint union of simple graphs is simple")
}

/// One squarefree quadratic monomial per edge, in edge-lex order over the
/// label indices.
pub fn edge_ideal(g: &Graph) -> Vec<Monomial> {
    let n = g.vertex_count();
    g.edges
        .iter()
        .map(|&(a, b)| Monomial::edge(n, a, b).expect("graph fits the monomial width"))
        .collect()
}

/// Induced subgraph on the named vertices (kept in the parent's order).
pub fn induced_subgraph(g: &Graph, vertices: &[&str]) -> Result<Graph, GraphError> {
    let mut keep = vec![false; g.vertex_count()];
    for name in vertices {
        let i = g
            .index_of(name)
            .ok_or_else(|| GraphError::UnknownLabel(name.to_string()))?;
        keep[i] = true;
    }
    Ok(induced_by_flags(g, &keep))
}

/// Induced subgraph on the vertex set encoded by `mask` (bit i = vertex i).
pub fn induced_subgraph_mask(g: &Graph, mask: u64) -> Graph {
    let keep: Vec<bool> = (0..g.vertex_count()).map(|i| mask >> i & 1 == 1).collect();
    induced_by_flags(g, &keep)
}

fn induced_by_flags(g: &Graph, keep: &[bool]) -> Graph {
    let mut new_index = vec![usize::MAX; g.vertex_count()];
    let mut labels = Vec::new();
    for (i, &k) in keep.iter().enumerate() {
        if k {
            new_index[i] = labels.len();
            labels.push(g.labels[i].clone());
        }
    }
    let edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .filter(|&&(a, b)| keep[a] && keep[b])
        .map(|&(a, b)| (new_index[a], new_index[b]))
        .collect();
    Graph { labels, edges }
}

/// Size of a minimum vertex cover (the height of the edge ideal), by
/// exhaustive search over vertex subsets in increasing size.
pub fn min_vertex_cover_size(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n > MAX_COVER_VERTICES {
        return Err(GraphError::TooLarge(n, MAX_COVER_VERTICES));
    }
    let edge_masks: Vec<u32> = g.edges.iter().map(|&(a, b)| 1 << a | 1 << b).collect();
    let covers = |s: u32| edge_masks.iter().all(|&e| s & e != 0);
    for size in 0..=n {
        if size == 0 {
            if covers(0) {
                return Ok(0);
            }
            continue;
        }
        // Gosper's hack over all n-bit masks with `size` bits set
        let mut s: u32 = (1 << size) - 1;
        let limit: u64 = 1 << n;
        while (s as u64) < limit {
            if covers(s) {
                return Ok(size);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            if r == 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    Ok(n)
}
