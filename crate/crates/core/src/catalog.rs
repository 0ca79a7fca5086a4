//! Small named oriented hypergraphs used as fixtures and tightness witnesses.

use crate::model::OrientedHypergraph;

/// Triangle `{v0,v1,v2}` with a pendant edge `{v2,v3}`, every incidence `+1`.
///
/// Edge order is `{v0,v2}, {v0,v1}, {v1,v2}, {v2,v3}`. With that order the
/// hypergraph and its incidence dual share the Laplacian spectrum
/// `{(5+√17)/2, 2, 1, (5−√17)/2}`.
pub fn triangle_with_pendant() -> OrientedHypergraph {
    OrientedHypergraph::build(
        4,
        4,
        &[
            (0, 0, 1),
            (2, 0, 1),
            (0, 1, 1),
            (1, 1, 1),
            (1, 2, 1),
            (2, 2, 1),
            (2, 3, 1),
            (3, 3, 1),
        ],
    )
    .expect("static instance is valid")
}

/// Star with centre `v0` and `leaves` pendant 2-edges, every incidence `+1`.
pub fn star(leaves: usize) -> OrientedHypergraph {
    let incidences: Vec<_> = (0..leaves)
        .flat_map(|e| [(0, e, 1), (e + 1, e, 1)])
        .collect();
    OrientedHypergraph::build(leaves + 1, leaves, &incidences).expect("static instance is valid")
}

/// A single 2-edge `{v0, v1}` with the given incidence signs.
pub fn single_edge(first: i64, second: i64) -> OrientedHypergraph {
    OrientedHypergraph::build(2, 1, &[(0, 0, first), (1, 0, second)]).expect("signs must be ±1")
}

/// A single edge containing every vertex, with the given signs.
pub fn single_hyperedge(signs: &[i64]) -> OrientedHypergraph {
    let incidences: Vec<_> = signs.iter().enumerate().map(|(v, &s)| (v, 0, s)).collect();
    OrientedHypergraph::build(signs.len(), 1, &incidences).expect("signs must be ±1")
}

/// Two parallel 2-edges on `{v0, v1}` whose adjacency signs are opposite.
pub fn cancelling_pair() -> OrientedHypergraph {
    OrientedHypergraph::build(2, 2, &[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, -1)])
        .expect("static instance is valid")
}
