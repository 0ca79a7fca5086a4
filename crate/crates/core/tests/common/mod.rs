#![allow(dead_code)]

use ohgraph::oracle::{random_instance, GeneratorConfig};
use ohgraph::{OrientedHypergraph, Sign, SwitchingFunction};
use proptest::prelude::*;

/// Sweep instance `i`: orders cycle through `n ∈ 1..=8`, `m ∈ 0..=8`, edge
/// sizes up to `min(5, n)` with minimum 0 or 2, and `pNegative ∈ {0, 0.3, 0.5}`.
pub fn sweep_config(i: u64) -> GeneratorConfig {
    let n = 1 + (i % 8) as usize;
    let m = ((i / 8) % 9) as usize;
    let size_max = n.min(5);
    let size_min = if (i / 3).is_multiple_of(2) {
        0
    } else {
        size_max.min(2)
    };
    GeneratorConfig {
        seed: 1000 + i,
        n,
        m,
        size_min,
        size_max,
        p_negative: [0.0, 0.3, 0.5][(i % 3) as usize],
    }
}

pub fn sweep() -> Vec<OrientedHypergraph> {
    (0..200)
        .map(|i| random_instance(&sweep_config(i)).unwrap())
        .collect()
}

fn from_masks(n: usize, edges: &[(u32, u32)]) -> OrientedHypergraph {
    let mut incidences = Vec::new();
    for (e, &(members, signs)) in edges.iter().enumerate() {
        for v in 0..n {
            if members >> v & 1 == 1 {
                let sign = if signs >> v & 1 == 1 { -1 } else { 1 };
                incidences.push((v, e, sign));
            }
        }
    }
    OrientedHypergraph::build(n, edges.len(), &incidences).unwrap()
}

/// Oriented hypergraphs with `n ∈ lo..=hi` vertices and up to `max_m` edges
/// of any size, including empty and singleton edges.
pub fn graphs(lo: usize, hi: usize, max_m: usize) -> impl Strategy<Value = OrientedHypergraph> {
    (lo..=hi, 0..=max_m).prop_flat_map(|(n, m)| {
        prop::collection::vec((0..(1u32 << n), any::<u32>()), m)
            .prop_map(move |edges| from_masks(n, &edges))
    })
}

pub fn switching(n: usize) -> impl Strategy<Value = SwitchingFunction> {
    prop::collection::vec(any::<bool>(), n).prop_map(|bits| {
        SwitchingFunction::new(
            bits.into_iter()
                .map(|b| if b { Sign::Minus } else { Sign::Plus })
                .collect(),
        )
    })
}

pub fn graph_and_switching(
    lo: usize,
    hi: usize,
    max_m: usize,
) -> impl Strategy<Value = (OrientedHypergraph, SwitchingFunction)> {
    graphs(lo, hi, max_m).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), switching(n))
    })
}
