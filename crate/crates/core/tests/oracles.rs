//! Library answers against the brute-force oracles in `common`.

mod common;

use std::collections::BTreeMap;

use common::*;
use hypersupport::instances::{figure2_hypergraph, random_hypergraph};
use hypersupport::planegeom::{is_planar, outerplanarity_number, planar_embedding};
use hypersupport::supports::{search_support, LayerBound, SearchConfig};
use hypersupport::{Budget, Outerplanarity, PlaneEmbedding, SimpleGraph};
use num_bigint::BigUint;
use proptest::prelude::*;

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn small_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = pair_count(n);
        let full = if bits == 0 { 0 } else { (1u64 << bits) - 1 };
        (Just(n), 0..=full).prop_map(|(n, mask)| graph_from_pair_mask(n, mask))
    })
}

/// Sparse graphs keep the rotation enumeration of the oracle cheap.
fn sparse_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let k = max_m.min(pairs.len());
        (Just(n), proptest::sample::subsequence(pairs, 0..=k)).prop_map(|(n, es)| {
            let mask = es.iter().fold(0u64, |m, &(a, b)| {
                let bit = (0..a).map(|i| n - 1 - i).sum::<usize>() + (b - a - 1);
                m | 1 << bit
            });
            graph_from_pair_mask(n, mask)
        })
    })
}

/// Layer count of `e` by the oracle's face tracing and radial distances.
fn oracle_depth(e: &PlaneEmbedding) -> usize {
    let names: Vec<&String> = e.graph().vertices().iter().collect();
    let idx: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let rot: Vec<Vec<usize>> =
        names.iter().map(|v| e.rotation()[v.as_str()].iter().map(|w| idx[w.as_str()]).collect()).collect();
    let faces = trace(&rot);
    let mut depth = 1;
    for (u, v) in e.outer_darts() {
        let dart = (idx[u.as_str()], idx[v.as_str()]);
        let f = faces.iter().position(|f| f.contains(&dart)).unwrap();
        depth = depth.max(radial_depth(names.len(), &faces, f));
    }
    depth
}

#[test]
fn planarity_named_graphs() {
    let k5 = graph_from_pair_mask(5, (1 << 10) - 1);
    let k33 = SimpleGraph::new(
        ["a", "b", "c", "x", "y", "z"],
        ["a", "b", "c"].iter().flat_map(|&p| ["x", "y", "z"].map(move |q| (p, q))),
    )
    .unwrap();
    for (g, planar) in [(k5, false), (k33, false), (graph_from_pair_mask(4, 63), true)] {
        assert_eq!(planar_oracle(&Masks::from_graph(&g).adj), planar);
        assert_eq!(is_planar(&g), planar);
    }
}

#[test]
fn twin_partition_matches_pairwise_comparison() {
    for seed in 0..60 {
        let h = random_hypergraph(4 + (seed as usize % 5), 1 + (seed as usize % 4), 4, seed).unwrap();
        let mut expected = twin_classes_oracle(&h);
        expected.sort();
        let mut got: Vec<Vec<String>> = h.twin_partition().classes().to_vec();
        got.sort();
        assert_eq!(got, expected, "seed {seed}");
    }
    let twins = figure2_hypergraph().twin_partition();
    assert!(twins.are_twins("t", "t'"));
}

#[test]
fn psi_by_repeated_multiplication() {
    // 6r * 2^(m(2r^2+r+1)) * (r+1)^(32r^2+8r), one factor at a time
    fn slow(m: u64, r: u64) -> BigUint {
        let mut v = BigUint::from(6 * r);
        for _ in 0..m * (2 * r * r + r + 1) {
            v *= 2u32;
        }
        for _ in 0..32 * r * r + 8 * r {
            v *= r + 1;
        }
        v
    }
    for m in 1..=4 {
        for r in 1..=4 {
            assert_eq!(hypersupport::kernel::psi_log2(m, r).unwrap(), slow(m, r), "m={m} r={r}");
        }
    }
}

#[test]
fn search_matches_unpruned_oracle_on_fixed_seeds() {
    let mut checked = 0;
    for seed in 0..40u64 {
        let h = random_hypergraph(4 + (seed as usize % 3), 2 + (seed as usize % 3), 3, seed).unwrap();
        for bound in [LayerBound::PlanarOnly, LayerBound::Layers(1), LayerBound::Layers(2)] {
            let report = search_support(&h, bound, &SearchConfig::default()).unwrap();
            let oracle = min_support_oracle(&h, bound);
            assert_eq!(report.outcome.is_found(), oracle.is_some(), "seed {seed} {bound:?}");
            if let (Some(cert), Some(extra)) = (report.outcome.certificate(), oracle) {
                let (forced, _) = candidate_pairs(&h);
                assert_eq!(cert.graph.m(), forced.len() + extra.len(), "seed {seed} {bound:?}");
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 120);
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(200) })]

    #[test]
    fn planarity_agrees_with_wagner(g in small_graph(8)) {
        prop_assert_eq!(is_planar(&g), planar_oracle(&Masks::from_graph(&g).adj));
    }

    #[test]
    fn embedding_is_valid_when_planar(g in small_graph(8)) {
        if let Some(e) = planar_embedding(&g) {
            let faces = e.faces().len();
            let comps = g.components().iter().filter(|c| c.len() > 1).count();
            let isolated = g.components().len() - comps;
            // Euler per component: n - m + f = 2 with one face per non-trivial component
            prop_assert_eq!(g.n() - isolated + faces, g.m() + 2 * comps);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(120) })]

    #[test]
    fn outerplanarity_number_matches_enumeration(g in sparse_graph(7, 11)) {
        let adj = Masks::from_graph(&g).adj;
        let Some(expected) = outerplanarity_oracle(&adj) else {
            prop_assert!(!is_planar(&g));
            return Ok(());
        };
        let mut budget = Budget::unlimited();
        match outerplanarity_number(&g, &mut budget).unwrap() {
            Outerplanarity::Exact { layers, witness } => {
                prop_assert_eq!(layers, expected);
                prop_assert_eq!(witness.layer_count(), layers);
                prop_assert_eq!(oracle_depth(&witness), layers);
            }
            Outerplanarity::Unknown { .. } => prop_assert!(false, "unlimited budget ran out"),
        }
    }

    #[test]
    fn peeling_matches_radial_distance(g in sparse_graph(9, 14)) {
        if let Some(e) = planar_embedding(&g) {
            let d = e.layer_decomposition();
            let mut all: Vec<String> = d.layers.concat();
            all.sort();
            prop_assert_eq!(all, g.vertices().iter().cloned().collect::<Vec<_>>());
            prop_assert_eq!(d.len(), oracle_depth(&e));
        }
    }
}
