//! Oriented hypergraphs and the combinatorial statistics derived from them.
//!
//! An oriented hypergraph is a hypergraph together with an incidence
//! orientation assigning `+1` or `-1` to every vertex–edge incidence. Vertices
//! and edges are dense indices `0..n` and `0..m`; each carries a string label
//! used by the document format.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An orientation value, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::BadSign(other)),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = i64::deserialize(deserializer)?;
        Sign::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incidence {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub sign: Sign,
}

/// One element of the adjacency set: a pair of distinct vertices sharing
/// `edge`, with its adjacency signature `-σ(lo, e)·σ(hi, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Adjacency {
    pub edge: EdgeId,
    pub lo: VertexId,
    pub hi: VertexId,
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct VertexStats {
    pub degree: usize,
    pub adj_total: usize,
    pub adj_pos: usize,
    pub adj_neg: usize,
    pub adj_net: i64,
    pub neighbor_count: usize,
}

/// A simple oriented hypergraph `G = (H, σ)`.
///
/// Incidences are stored sorted by `(edge, vertex)`, so the incidences of each
/// edge form a contiguous, vertex-sorted run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertex_labels: Vec<String>,
    edge_labels: Vec<String>,
    incidences: Vec<Incidence>,
    edge_offsets: Vec<usize>,
}

fn default_labels(prefix: char, count: usize) -> Vec<String> {
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

fn check_unique(kind: &'static str, labels: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for label in labels {
        if !seen.insert(label.as_str()) {
            return Err(Error::DuplicateLabel {
                kind,
                label: label.clone(),
            });
        }
    }
    Ok(())
}

impl OrientedHypergraph {
    /// Builds an oriented hypergraph on `n` vertices and `m` edges from signed
    /// `(vertex, edge, sign)` triples. Vertices are labelled `v0..`, edges `e0..`.
    pub fn build(n: usize, m: usize, incidences: &[(usize, usize, i64)]) -> Result<Self> {
        Self::with_labels(default_labels('v', n), default_labels('e', m), incidences)
    }

    pub fn with_labels(
        vertex_labels: Vec<String>,
        edge_labels: Vec<String>,
        incidences: &[(usize, usize, i64)],
    ) -> Result<Self> {
        let (n, m) = (vertex_labels.len(), edge_labels.len());
        let mut parsed = Vec::with_capacity(incidences.len());
        for &(vertex, edge, sign) in incidences {
            let sign = Sign::try_from(sign)?;
            if vertex >= n {
                return Err(Error::IndexOutOfRange {
                    kind: "vertex",
                    index: vertex,
                    count: n,
                });
            }
            if edge >= m {
                return Err(Error::IndexOutOfRange {
                    kind: "edge",
                    index: edge,
                    count: m,
                });
            }
            parsed.push(Incidence {
                vertex: VertexId(vertex),
                edge: EdgeId(edge),
                sign,
            });
        }
        Self::from_incidences(vertex_labels, edge_labels, parsed)
    }

    /// Assembles from already-typed incidences whose indices are in range.
    pub(crate) fn from_incidences(
        vertex_labels: Vec<String>,
        edge_labels: Vec<String>,
        mut incidences: Vec<Incidence>,
    ) -> Result<Self> {
        check_unique("vertex", &vertex_labels)?;
        check_unique("edge", &edge_labels)?;
        let m = edge_labels.len();
        incidences.sort_by_key(|inc| (inc.edge, inc.vertex));
        for pair in incidences.windows(2) {
            if pair[0].edge == pair[1].edge && pair[0].vertex == pair[1].vertex {
                return Err(Error::DuplicateIncidence {
                    vertex: pair[0].vertex.0,
                    edge: pair[0].edge.0,
                });
            }
        }
        let mut edge_offsets = vec![0; m + 1];
        for inc in &incidences {
            edge_offsets[inc.edge.0 + 1] += 1;
        }
        for e in 0..m {
            edge_offsets[e + 1] += edge_offsets[e];
        }
        Ok(Self {
            vertex_labels,
            edge_labels,
            incidences,
            edge_offsets,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertex_labels[v.0]
    }

    pub fn edge_label(&self, e: EdgeId) -> &str {
        &self.edge_labels[e.0]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertex_labels
            .iter()
            .position(|l| l == label)
            .map(VertexId)
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edge_labels.iter().position(|l| l == label).map(EdgeId)
    }

    /// Incidences of edge `e`, sorted by vertex.
    pub fn edge(&self, e: EdgeId) -> &[Incidence] {
        &self.incidences[self.edge_offsets[e.0]..self.edge_offsets[e.0 + 1]]
    }

    pub fn edge_size(&self, e: EdgeId) -> usize {
        self.edge_offsets[e.0 + 1] - self.edge_offsets[e.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    /// `σ(v, e)`, or `None` when `v` is not incident to `e`.
    pub fn sign(&self, v: VertexId, e: EdgeId) -> Option<Sign> {
        let run = self.edge(e);
        run.binary_search_by_key(&v, |inc| inc.vertex)
            .ok()
            .map(|i| run[i].sign)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidences.iter().filter(|inc| inc.vertex == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.vertex_count()];
        for inc in &self.incidences {
            degrees[inc.vertex.0] += 1;
        }
        degrees
    }

    pub fn edge_sizes(&self) -> Vec<usize> {
        self.edges().map(|e| self.edge_size(e)).collect()
    }

    /// The adjacency set ordered by edge, then `lo`, then `hi`.
    pub fn adjacencies(&self) -> Vec<Adjacency> {
        let mut out = Vec::new();
        for e in self.edges() {
            let run = self.edge(e);
            for (i, a) in run.iter().enumerate() {
                for b in &run[i + 1..] {
                    out.push(Adjacency {
                        edge: e,
                        lo: a.vertex,
                        hi: b.vertex,
                        sign: -(a.sign * b.sign),
                    });
                }
            }
        }
        out
    }

    pub fn vertex_stats(&self, v: VertexId) -> VertexStats {
        let mut stats = VertexStats::default();
        let mut neighbors = BTreeSet::new();
        for e in self.edges() {
            let run = self.edge(e);
            let Some(own) = run.iter().find(|inc| inc.vertex == v) else {
                continue;
            };
            stats.degree += 1;
            for other in run.iter().filter(|inc| inc.vertex != v) {
                neighbors.insert(other.vertex);
                match -(own.sign * other.sign) {
                    Sign::Plus => stats.adj_pos += 1,
                    Sign::Minus => stats.adj_neg += 1,
                }
            }
        }
        stats.adj_total = stats.adj_pos + stats.adj_neg;
        stats.adj_net = stats.adj_pos as i64 - stats.adj_neg as i64;
        stats.neighbor_count = neighbors.len();
        stats
    }

    pub fn all_vertex_stats(&self) -> Vec<VertexStats> {
        self.vertices().map(|v| self.vertex_stats(v)).collect()
    }

    /// Any two distinct edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        let m = self.edge_count();
        for e in 0..m {
            for f in e + 1..m {
                if shared_vertices(self.edge(EdgeId(e)), self.edge(EdgeId(f))) > 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges().all(|e| self.edge_size(e) == k)
    }

    /// Every edge carries a single sign across all of its incidences.
    pub fn is_uniformly_oriented(&self) -> bool {
        self.edges().all(|e| {
            let run = self.edge(e);
            run.iter().all(|inc| inc.sign == run[0].sign)
        })
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Smallest edge size, `None` when there are no edges.
    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges().map(|e| self.edge_size(e)).min()
    }

    /// Same vertex and edge sets and the same unsigned incidences.
    pub fn same_underlying(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.incidences.len() == other.incidences.len()
            && self
                .incidences
                .iter()
                .zip(&other.incidences)
                .all(|(a, b)| a.vertex == b.vertex && a.edge == b.edge)
    }

    /// Equal incidence lists with signs, ignoring labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.incidences == other.incidences
    }
}

fn shared_vertices(a: &[Incidence], b: &[Incidence]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].vertex.cmp(&b[j].vertex) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
