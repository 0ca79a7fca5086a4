mod common;

use common::{graph_and_switching, graphs};
use ohgraph::bounds::{adj_mean_net_bound, adj_moment_bound, all_hold, verify_all};
use ohgraph::cli::{parse, serialize};
use ohgraph::linalg::{eigen_residual, quadratic_form, sym_eigen, DenseMatrix, SymmetricMatrix};
use ohgraph::matrices::{
    adjacency_matrix, bundle, degree_matrix, incidence_matrix, laplacian_matrix,
    laplacian_quadratic_form, switching_matrix,
};
use ohgraph::oracle::{spectrum_sanity, switching_equivalent};
use ohgraph::spectra::{
    adjacency_spectrum, is_cospectral, laplacian_spectrum, relative_tolerance,
    same_nonzero_spectrum, zero_count,
};
use ohgraph::transform::{
    dual, edgewise_uniform_orientation, plus_orientation, switch, weak_delete_edge,
    weak_delete_vertex,
};
use ohgraph::{EdgeId, Sign, VertexId};
use proptest::prelude::*;

fn congruence(p: &[i64], s: &SymmetricMatrix<i64>) -> DenseMatrix<i64> {
    let d = DenseMatrix::from_diagonal(p);
    d.transpose()
        .matmul(s.as_dense())
        .unwrap()
        .matmul(&d)
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laplacian_factorizations(g in graphs(0, 7, 6)) {
        let b = bundle(&g).unwrap();
        prop_assert_eq!(b.incidence.gram(), b.laplacian.clone());
        prop_assert_eq!(incidence_matrix(&dual(&g)), b.incidence.transpose());
        prop_assert_eq!(laplacian_matrix(&dual(&g)), b.incidence.gram_dual());
        prop_assert_eq!(degree_matrix(&g).diagonal(), b.laplacian.diagonal());
    }

    #[test]
    fn switching_is_a_similarity((g, z) in graph_and_switching(0, 7, 6)) {
        let gz = switch(&g, &z).unwrap();
        let p = z.values();
        let dz = switching_matrix(&z);
        prop_assert_eq!(incidence_matrix(&gz), dz.as_dense().matmul(&incidence_matrix(&g)).unwrap());
        prop_assert_eq!(adjacency_matrix(&gz).into_dense(), congruence(&p, &adjacency_matrix(&g)));
        prop_assert_eq!(laplacian_matrix(&gz).into_dense(), congruence(&p, &laplacian_matrix(&g)));
        prop_assert_eq!(switch(&gz, &z).unwrap(), g.clone());
        prop_assert!(is_cospectral(&adjacency_spectrum(&g).unwrap(), &adjacency_spectrum(&gz).unwrap(), None).unwrap());
        prop_assert!(is_cospectral(&laplacian_spectrum(&g).unwrap(), &laplacian_spectrum(&gz).unwrap(), None).unwrap());
    }

    #[test]
    fn switching_oracle_recovers_witness((g, z) in graph_and_switching(0, 7, 5)) {
        let gz = switch(&g, &z).unwrap();
        let w = switching_equivalent(&g, &gz).unwrap().zeta.unwrap();
        prop_assert!(switch(&g, &w).unwrap().same_structure(&gz));
    }

    #[test]
    fn dual_is_an_involution(g in graphs(0, 7, 6)) {
        prop_assert_eq!(dual(&dual(&g)), g);
    }

    #[test]
    fn dual_shares_nonzero_laplacian_spectrum(g in graphs(1, 7, 6)) {
        let (a, b) = (laplacian_spectrum(&g).unwrap(), laplacian_spectrum(&dual(&g)).unwrap());
        prop_assert!(same_nonzero_spectrum(&a, &b, None));
        let tol = ohgraph::spectra::pair_tolerance(&a, &b);
        let diff = zero_count(&a, Some(tol)) as i64 - zero_count(&b, Some(tol)) as i64;
        prop_assert_eq!(diff, g.vertex_count() as i64 - g.edge_count() as i64);
    }

    #[test]
    fn uniform_orientations_share_one_laplacian(
        g in graphs(0, 7, 6),
        picks in prop::collection::vec(any::<bool>(), 6),
    ) {
        let alphas: Vec<Sign> = picks[..g.edge_count()].iter().map(|&b| if b { Sign::Minus } else { Sign::Plus }).collect();
        let u = edgewise_uniform_orientation(&g, &alphas).unwrap();
        prop_assert!(u.is_uniformly_oriented());
        prop_assert_eq!(laplacian_matrix(&u), laplacian_matrix(&plus_orientation(&g)));
    }

    #[test]
    fn weak_deletions_are_principal_submatrix_and_rank_one_downdate(g in graphs(2, 7, 6)) {
        let (a, l) = (adjacency_matrix(&g), laplacian_matrix(&g));
        for v in g.vertices() {
            let child = weak_delete_vertex(&g, v).unwrap().graph;
            prop_assert_eq!(adjacency_matrix(&child), a.delete_index(v.0));
            prop_assert_eq!(laplacian_matrix(&child), l.delete_index(v.0));
        }
        let h = incidence_matrix(&g);
        for e in g.edges() {
            let child = weak_delete_edge(&g, e).unwrap().graph;
            let column = h.delete_col(e.0);
            prop_assert_eq!(laplacian_matrix(&child), column.gram());
            prop_assert_eq!(child.vertex_count(), g.vertex_count());
        }
    }

    #[test]
    fn laplacian_is_positive_semidefinite(g in graphs(1, 7, 6), x in prop::collection::vec(-3.0f64..3.0, 7)) {
        let x = &x[..g.vertex_count()];
        let edge_route = laplacian_quadratic_form(&g, x).unwrap();
        let matrix_route = quadratic_form(&laplacian_matrix(&g).to_f64(), x).unwrap();
        prop_assert!(edge_route >= 0.0);
        prop_assert!((edge_route - matrix_route).abs() <= 1e-9 * edge_route.max(1.0));
        let sp = laplacian_spectrum(&g).unwrap();
        prop_assert!(sp.smallest().unwrap() >= 0.0);
    }

    #[test]
    fn rayleigh_quotients_lie_in_the_spectral_range(g in graphs(1, 7, 6), x in prop::collection::vec(-3.0f64..3.0, 7)) {
        let x = &x[..g.vertex_count()];
        let norm2: f64 = x.iter().map(|t| t * t).sum();
        for s in [adjacency_matrix(&g).to_f64(), laplacian_matrix(&g).to_f64()] {
            let sp = ohgraph::linalg::sym_eigenvalues(&s).unwrap();
            let q = quadratic_form(&s, x).unwrap();
            let tol = relative_tolerance(s.frobenius_norm()) * norm2.max(1.0);
            prop_assert!(sp.smallest().unwrap() * norm2 <= q + tol);
            prop_assert!(q <= sp.largest().unwrap() * norm2 + tol);
        }
    }

    #[test]
    fn eigensolver_is_sound(g in graphs(0, 8, 8)) {
        for s in [adjacency_matrix(&g).to_f64(), laplacian_matrix(&g).to_f64()] {
            let eig = sym_eigen(&s).unwrap();
            prop_assert!(spectrum_sanity(&s, &eig.spectrum));
            let tol = 1e-8 * s.frobenius_norm().max(1.0);
            for (lambda, v) in eig.spectrum.values().iter().zip(&eig.vectors) {
                prop_assert!(eigen_residual(&s, *lambda, v) <= tol);
            }
            let at_least = eig.spectrum.values().windows(2).all(|w| w[0] >= w[1]);
            prop_assert!(at_least);
        }
    }

    #[test]
    fn every_bound_holds(g in graphs(0, 7, 6)) {
        let checks = verify_all(&g).unwrap();
        prop_assert!(all_hold(&checks), "{:#?}", checks);
    }

    #[test]
    fn first_moment_is_the_mean_net_bound(g in graphs(1, 7, 6)) {
        let (mean, k1) = (adj_mean_net_bound(&g).unwrap(), adj_moment_bound(&g, 1).unwrap());
        prop_assert!((mean.lhs - k1.lhs).abs() <= 1e-12);
        prop_assert!((mean.rhs - k1.rhs).abs() <= 1e-12);
        prop_assert!((mean.value.unwrap() - k1.value.unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn adjacency_counts_are_consistent(g in graphs(0, 7, 6)) {
        let stats = g.all_vertex_stats();
        let total: usize = stats.iter().map(|s| s.adj_total).sum();
        let by_edges: usize = g.edge_sizes().iter().map(|k| k * k.saturating_sub(1)).sum();
        prop_assert_eq!(total, by_edges);
        prop_assert_eq!(total, 2 * g.adjacencies().len());
        let a = adjacency_matrix(&g);
        for (i, s) in stats.iter().enumerate() {
            prop_assert_eq!(s.adj_total, s.adj_pos + s.adj_neg);
            prop_assert_eq!(s.adj_net, s.adj_pos as i64 - s.adj_neg as i64);
            let row_sum: i64 = a.as_dense().row(i).iter().sum();
            prop_assert_eq!(row_sum, s.adj_net);
            prop_assert!(s.neighbor_count <= s.adj_total);
        }
    }

    #[test]
    fn documents_round_trip(g in graphs(0, 7, 6)) {
        let text = serialize(&g);
        let back = parse(text.as_bytes()).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn deletion_index_maps_are_consistent(g in graphs(2, 7, 6)) {
        let d = weak_delete_vertex(&g, VertexId(0)).unwrap();
        prop_assert_eq!(d.index_map[0], None);
        prop_assert_eq!(d.graph.edge_count(), g.edge_count());
        if g.edge_count() > 0 {
            let d = weak_delete_edge(&g, EdgeId(0)).unwrap();
            prop_assert_eq!(d.index_map[0], None);
            prop_assert_eq!(d.graph.edge_count(), g.edge_count() - 1);
        }
    }
}
