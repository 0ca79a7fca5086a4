//! Structure-to-structure maps: vertex-switching, the incidence dual, weak
//! deletions and the uniform `±1` orientations of an underlying hypergraph.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{EdgeId, Incidence, OrientedHypergraph, Sign, VertexId};

/// A vertex-switching function `ζ : V → {+1, −1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingFunction {
    signs: Vec<Sign>,
}

impl SwitchingFunction {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            signs: vec![Sign::Plus; n],
        }
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        let signs = values
            .iter()
            .map(|&v| Sign::try_from(v))
            .collect::<Result<_>>()?;
        Ok(Self { signs })
    }

    /// The `index`-th sign vector in lexicographic order with `+` before `-`:
    /// bit `n-1-i` of `index` set means vertex `i` is switched.
    pub fn from_index(n: usize, index: u64) -> Self {
        let signs = (0..n)
            .map(|i| {
                if (index >> (n - 1 - i)) & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect();
        Self { signs }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn get(&self, v: VertexId) -> Sign {
        self.signs[v.0]
    }

    pub fn values(&self) -> Vec<i64> {
        self.signs.iter().map(|s| s.value()).collect()
    }

    /// Pointwise product `ζ₁·ζ₂`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let signs = self
            .signs
            .iter()
            .zip(&other.signs)
            .map(|(&a, &b)| a * b)
            .collect();
        Ok(Self { signs })
    }
}

impl fmt::Display for SwitchingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// Parses `+,-,+` (also accepting `+1`, `-1`, `1` per entry).
impl FromStr for SwitchingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::new(Vec::new()));
        }
        let signs = s
            .split(',')
            .map(|tok| match tok.trim() {
                "+" | "+1" | "1" => Ok(Sign::Plus),
                "-" | "-1" => Ok(Sign::Minus),
                other => Err(Error::Schema(format!("invalid switching sign {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self { signs })
    }
}

/// The result of a weak deletion together with the old→new index map of the
/// re-densified dimension (`None` for the deleted index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deletion {
    pub graph: OrientedHypergraph,
    pub index_map: Vec<Option<usize>>,
}

/// `σᶻ(v, e) = ζ(v)·σ(v, e)`.
pub fn switch(g: &OrientedHypergraph, zeta: &SwitchingFunction) -> Result<OrientedHypergraph> {
    if zeta.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: zeta.len(),
        });
    }
    let incidences = g
        .incidences()
        .iter()
        .map(|inc| Incidence {
            sign: zeta.get(inc.vertex) * inc.sign,
            ..*inc
        })
        .collect();
    OrientedHypergraph::from_incidences(
        g.vertex_labels().to_vec(),
        g.edge_labels().to_vec(),
        incidences,
    )
}

/// Incidence dual: vertices and edges exchange roles, signs are kept.
pub fn dual(g: &OrientedHypergraph) -> OrientedHypergraph {
    let incidences = g
        .incidences()
        .iter()
        .map(|inc| Incidence {
            vertex: VertexId(inc.edge.0),
            edge: EdgeId(inc.vertex.0),
            sign: inc.sign,
        })
        .collect();
    OrientedHypergraph::from_incidences(
        g.edge_labels().to_vec(),
        g.vertex_labels().to_vec(),
        incidences,
    )
    .expect("dual of a simple hypergraph is simple")
}

fn dense_map(count: usize, removed: usize) -> Vec<Option<usize>> {
    (0..count)
        .map(|i| match i.cmp(&removed) {
            std::cmp::Ordering::Less => Some(i),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(i - 1),
        })
        .collect()
}

/// Removes `v` and every incidence at `v`; all edges survive, possibly shrunk.
pub fn weak_delete_vertex(g: &OrientedHypergraph, v: VertexId) -> Result<Deletion> {
    let n = g.vertex_count();
    if v.0 >= n {
        return Err(Error::IndexOutOfRange {
            kind: "vertex",
            index: v.0,
            count: n,
        });
    }
    let index_map = dense_map(n, v.0);
    let incidences = g
        .incidences()
        .iter()
        .filter_map(|inc| {
            index_map[inc.vertex.0].map(|new| Incidence {
                vertex: VertexId(new),
                ..*inc
            })
        })
        .collect();
    let mut labels = g.vertex_labels().to_vec();
    labels.remove(v.0);
    let graph = OrientedHypergraph::from_incidences(labels, g.edge_labels().to_vec(), incidences)?;
    Ok(Deletion { graph, index_map })
}

/// Removes `e` and its incidences; the vertex set is unchanged.
pub fn weak_delete_edge(g: &OrientedHypergraph, e: EdgeId) -> Result<Deletion> {
    let m = g.edge_count();
    if e.0 >= m {
        return Err(Error::IndexOutOfRange {
            kind: "edge",
            index: e.0,
            count: m,
        });
    }
    let index_map = dense_map(m, e.0);
    let incidences = g
        .incidences()
        .iter()
        .filter_map(|inc| {
            index_map[inc.edge.0].map(|new| Incidence {
                edge: EdgeId(new),
                ..*inc
            })
        })
        .collect();
    let mut labels = g.edge_labels().to_vec();
    labels.remove(e.0);
    let graph =
        OrientedHypergraph::from_incidences(g.vertex_labels().to_vec(), labels, incidences)?;
    Ok(Deletion { graph, index_map })
}

/// Re-signs every incidence with `sign`, keeping the underlying hypergraph.
pub fn uniform_orientation(g: &OrientedHypergraph, sign: Sign) -> OrientedHypergraph {
    let incidences = g
        .incidences()
        .iter()
        .map(|inc| Incidence { sign, ..*inc })
        .collect();
    OrientedHypergraph::from_incidences(
        g.vertex_labels().to_vec(),
        g.edge_labels().to_vec(),
        incidences,
    )
    .expect("re-signing preserves simplicity")
}

/// `+H`: every incidence signed `+1`.
pub fn plus_orientation(g: &OrientedHypergraph) -> OrientedHypergraph {
    uniform_orientation(g, Sign::Plus)
}

/// `−H`: every incidence signed `−1`.
pub fn minus_orientation(g: &OrientedHypergraph) -> OrientedHypergraph {
    uniform_orientation(g, Sign::Minus)
}

/// Gives edge `e` the uniform sign `alphas[e]`; any such orientation of the
/// underlying hypergraph is a member of its uniformly oriented class.
pub fn edgewise_uniform_orientation(
    g: &OrientedHypergraph,
    alphas: &[Sign],
) -> Result<OrientedHypergraph> {
    if alphas.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            expected: g.edge_count(),
            got: alphas.len(),
        });
    }
    let incidences = g
        .incidences()
        .iter()
        .map(|inc| Incidence {
            sign: alphas[inc.edge.0],
            ..*inc
        })
        .collect();
    OrientedHypergraph::from_incidences(
        g.vertex_labels().to_vec(),
        g.edge_labels().to_vec(),
        incidences,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{single_edge, single_hyperedge, triangle_with_pendant};

    #[test]
    fn identity_switch_is_noop() {
        let g = triangle_with_pendant();
        assert_eq!(switch(&g, &SwitchingFunction::identity(4)).unwrap(), g);
    }

    #[test]
    fn switching_one_endpoint_flips_adjacency() {
        let g = single_edge(1, 1);
        let z = SwitchingFunction::from_values(&[-1, 1]).unwrap();
        let s = switch(&g, &z).unwrap();
        assert_eq!(s.sign(VertexId(0), EdgeId(0)), Some(Sign::Minus));
        assert_eq!(s.sign(VertexId(1), EdgeId(0)), Some(Sign::Plus));
        assert_eq!(g.adjacencies()[0].sign, Sign::Minus);
        assert_eq!(s.adjacencies()[0].sign, Sign::Plus);
    }

    #[test]
    fn switch_length_mismatch() {
        let g = single_edge(1, 1);
        assert_eq!(
            switch(&g, &SwitchingFunction::identity(3)).unwrap_err(),
            Error::LengthMismatch {
                expected: 2,
                got: 3
            }
        );
    }

    #[test]
    fn dual_of_single_edge() {
        let d = dual(&single_edge(1, 1));
        assert_eq!((d.vertex_count(), d.edge_count()), (1, 2));
        assert_eq!(d.edge_sizes(), vec![1, 1]);
        assert!(d.adjacencies().is_empty());
        assert_eq!(d.vertex_labels(), &["e0".to_string()]);
    }

    #[test]
    fn dual_is_involution() {
        let g = single_hyperedge(&[1, -1, 1]);
        assert_eq!(dual(&dual(&g)), g);
    }

    #[test]
    fn weak_vertex_deletion_keeps_edges() {
        let g = OrientedHypergraph::build(2, 1, &[(1, 0, -1)]).unwrap();
        let d = weak_delete_vertex(&g, VertexId(1)).unwrap();
        assert_eq!(d.graph.edge_count(), 1);
        assert_eq!(d.graph.edge_size(EdgeId(0)), 0);
        assert_eq!(d.index_map, vec![Some(0), None]);

        let d = weak_delete_vertex(&triangle_with_pendant(), VertexId(3)).unwrap();
        // {v2,v3} survives as the singleton {v2}, so v2 keeps degree 3.
        assert_eq!(d.graph.degrees(), vec![2, 2, 3]);
        assert_eq!(d.graph.edge_sizes(), vec![2, 2, 2, 1]);
    }

    #[test]
    fn deleting_isolated_vertex() {
        let g = OrientedHypergraph::build(3, 1, &[(0, 0, 1), (2, 0, -1)]).unwrap();
        let d = weak_delete_vertex(&g, VertexId(1)).unwrap();
        assert_eq!(d.graph.incidences().len(), 2);
        assert_eq!(d.index_map, vec![Some(0), None, Some(1)]);
        assert_eq!(d.graph.sign(VertexId(1), EdgeId(0)), Some(Sign::Minus));
    }

    #[test]
    fn weak_edge_deletion() {
        let d = weak_delete_edge(&single_edge(1, 1), EdgeId(0)).unwrap();
        assert_eq!((d.graph.vertex_count(), d.graph.edge_count()), (2, 0));

        let d = weak_delete_edge(&triangle_with_pendant(), EdgeId(3)).unwrap();
        assert_eq!(d.graph.degree(VertexId(3)), 0);
        assert_eq!(d.graph.max_degree(), 2);
        assert_eq!(d.index_map, vec![Some(0), Some(1), Some(2), None]);

        let g = OrientedHypergraph::build(2, 2, &[(0, 1, 1), (1, 1, 1)]).unwrap();
        let d = weak_delete_edge(&g, EdgeId(0)).unwrap();
        assert_eq!(d.graph.incidences().len(), 2);
    }

    #[test]
    fn deletion_out_of_range() {
        let g = single_edge(1, 1);
        assert!(weak_delete_vertex(&g, VertexId(2)).is_err());
        assert!(weak_delete_edge(&g, EdgeId(1)).is_err());
    }

    #[test]
    fn uniform_orientations() {
        let g = single_hyperedge(&[1, -1, 1]);
        let minus = minus_orientation(&g);
        assert!(minus.is_uniformly_oriented());
        assert!(minus.adjacencies().iter().all(|a| a.sign == Sign::Minus));
        let plus = plus_orientation(&g);
        assert!(plus.adjacencies().iter().all(|a| a.sign == Sign::Minus));
        assert_eq!(
            plus_orientation(&triangle_with_pendant()),
            triangle_with_pendant()
        );
    }

    #[test]
    fn switching_function_text() {
        let z: SwitchingFunction = "+,-,+1,-1".parse().unwrap();
        assert_eq!(z.values(), vec![1, -1, 1, -1]);
        assert_eq!(z.to_string(), "+,-,+,-");
        assert!("+,0".parse::<SwitchingFunction>().is_err());
    }

    #[test]
    fn from_index_is_lexicographic() {
        assert_eq!(SwitchingFunction::from_index(3, 0).values(), vec![1, 1, 1]);
        assert_eq!(SwitchingFunction::from_index(3, 1).values(), vec![1, 1, -1]);
        assert_eq!(SwitchingFunction::from_index(3, 4).values(), vec![-1, 1, 1]);
    }
}
