//! Incidence, adjacency, degree and Laplacian matrices of an oriented
//! hypergraph, assembled in exact integer arithmetic.
//!
//! Rows follow vertex order and the columns of `H` follow edge order.

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, SymmetricMatrix};
use crate::model::OrientedHypergraph;
use crate::transform::{plus_orientation, SwitchingFunction};

pub type IntMatrix = DenseMatrix<i64>;
pub type IntSymmetric = SymmetricMatrix<i64>;

/// `H(G)`, `A(G)`, `D(G)` and `L(G)` with `L = D − A = H·Hᵀ` checked.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixBundle {
    pub incidence: IntMatrix,
    pub adjacency: IntSymmetric,
    pub degree: IntSymmetric,
    pub laplacian: IntSymmetric,
}

/// `η_ij = σ(v_i, e_j)` when incident, else `0`.
pub fn incidence_matrix(g: &OrientedHypergraph) -> IntMatrix {
    let mut h = IntMatrix::zeros(g.vertex_count(), g.edge_count());
    for inc in g.incidences() {
        h.set(inc.vertex.0, inc.edge.0, inc.sign.value());
    }
    h
}

/// `a_ij = Σ_e sgn_e(v_i, v_j)`, zero diagonal.
pub fn adjacency_matrix(g: &OrientedHypergraph) -> IntSymmetric {
    let n = g.vertex_count();
    let mut a = IntMatrix::zeros(n, n);
    for adj in g.adjacencies() {
        let (i, j) = (adj.lo.0, adj.hi.0);
        let value = a.get(i, j) + adj.sign.value();
        a.set(i, j, value);
        a.set(j, i, value);
    }
    SymmetricMatrix::new(a).expect("assembled symmetrically")
}

pub fn degree_matrix(g: &OrientedHypergraph) -> IntSymmetric {
    let degrees: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
    SymmetricMatrix::from_diagonal(&degrees)
}

/// `L(G) = D(G) − A(G)`.
pub fn laplacian_matrix(g: &OrientedHypergraph) -> IntSymmetric {
    degree_matrix(g)
        .sub(&adjacency_matrix(g))
        .expect("degree and adjacency share an order")
}

pub fn bundle(g: &OrientedHypergraph) -> Result<MatrixBundle> {
    let incidence = incidence_matrix(g);
    let adjacency = adjacency_matrix(g);
    let degree = degree_matrix(g);
    let laplacian = degree.sub(&adjacency)?;
    if incidence.gram() != laplacian {
        return Err(Error::InternalIdentityViolation("D - A != H * H^T".into()));
    }
    Ok(MatrixBundle {
        incidence,
        adjacency,
        degree,
        laplacian,
    })
}

/// `D(ζ) = diag(ζ(v_0), …, ζ(v_{n−1}))`.
pub fn switching_matrix(zeta: &SwitchingFunction) -> IntSymmetric {
    SymmetricMatrix::from_diagonal(&zeta.values())
}

/// `Σ_e (Σ_{v_k ∈ e} σ(v_k, e)·x_k)²`, evaluated edge by edge.
pub fn laplacian_quadratic_form(g: &OrientedHypergraph, x: &[f64]) -> Result<f64> {
    if x.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: x.len(),
        });
    }
    Ok(g.edges()
        .map(|e| {
            let s: f64 = g
                .edge(e)
                .iter()
                .map(|inc| inc.sign.value() as f64 * x[inc.vertex.0])
                .sum();
            s * s
        })
        .sum())
}

/// Adjacency matrix of the underlying hypergraph, `A(+H) = A(−H)`.
pub fn hypergraph_adjacency(g: &OrientedHypergraph) -> IntSymmetric {
    adjacency_matrix(&plus_orientation(g))
}

/// Laplacian of the underlying hypergraph, `L(+H) = L(−H)`.
pub fn hypergraph_laplacian(g: &OrientedHypergraph) -> IntSymmetric {
    laplacian_matrix(&plus_orientation(g))
}

/// Every entry of `s` is `≥ 0`.
pub fn is_nonnegative(s: &IntSymmetric) -> bool {
    s.as_dense().data().iter().all(|&x| x >= 0)
}
