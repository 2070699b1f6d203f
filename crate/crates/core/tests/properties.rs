//! Invariants over generated instances.

use hypersupport::dot::export_dot;
use hypersupport::glueing::{compute_signature, glue_support_check, nested_bipartitions};
use hypersupport::instances::random_hypergraph;
use hypersupport::io::{embedding_to_json, hypergraph_to_json, parse_graph, parse_hypergraph};
use hypersupport::kernel::{kernel_vertex_bound_log2, psi_log2, rule1_apply, PsiThreshold};
use hypersupport::planegeom::planar_embedding;
use hypersupport::supports::{
    extend_representative, is_representative_support, is_support, min_representative_support, search_support,
    LayerBound, SearchConfig,
};
use hypersupport::{Budget, Hypergraph};
use num_bigint::BigUint;
use proptest::prelude::*;

fn hypergraph(max_n: usize, max_m: usize, max_size: usize) -> impl Strategy<Value = Hypergraph> {
    (4..=max_n, 1..=max_m, any::<u64>())
        .prop_map(move |(n, m, seed)| random_hypergraph(n, m, max_size, seed).expect("parameters are feasible"))
}

/// A hypergraph with one vertex blown up into a twin class of size `k`.
fn with_twins(h: &Hypergraph, k: usize) -> Hypergraph {
    let v = h.vertex(0).to_string();
    let copies: Vec<String> = (1..k).map(|i| format!("{v}~{i}")).collect();
    let vertices = h.vertices().iter().cloned().chain(copies.iter().cloned());
    let edges = h.named_hyperedges().into_iter().map(|e| {
        let mut e: Vec<String> = e.into_iter().map(String::from).collect();
        if e.contains(&v) {
            e.extend(copies.iter().cloned());
        }
        e
    });
    Hypergraph::new(vertices, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn hypergraph_json_round_trip(h in hypergraph(9, 6, 4)) {
        let (back, report) = parse_hypergraph(&hypergraph_to_json(&h).to_string()).unwrap();
        prop_assert_eq!(back, h);
        prop_assert_eq!(report.dropped(), 0);
    }

    #[test]
    fn embedding_json_round_trip(h in hypergraph(8, 5, 3)) {
        let g = hypersupport::SimpleGraph::new(
            h.vertices().iter().cloned(),
            h.hyperedges().iter().filter(|e| e.len() == 2).map(|e| (h.vertex(e[0]), h.vertex(e[1]))),
        ).unwrap();
        if let Some(e) = planar_embedding(&g) {
            let back = parse_graph(&embedding_to_json(&e).to_string()).unwrap();
            prop_assert_eq!(back.embedding.unwrap(), e);
        }
    }

    #[test]
    fn rule_is_idempotent_and_meets_threshold(h in hypergraph(7, 4, 4), k in 1usize..5, t in 1u64..4) {
        let h = with_twins(&h, k);
        let (once, log) = rule1_apply(&h, 1, PsiThreshold::Override(t));
        prop_assert_eq!(once.n() + log.len(), h.n());
        prop_assert!(once.twin_partition().classes().iter().all(|c| c.len() as u64 <= t));
        let (twice, again) = rule1_apply(&once, 1, PsiThreshold::Override(t));
        prop_assert_eq!(twice, once);
        prop_assert!(again.is_empty());
        let (exact, none) = rule1_apply(&h, 2, PsiThreshold::ExactLog2);
        prop_assert_eq!(exact, h);
        prop_assert!(none.is_empty());
    }

    #[test]
    fn kernel_bound_exceeds_threshold_by_m(m in 1u64..6, r in 1u64..5) {
        prop_assert_eq!(kernel_vertex_bound_log2(m, r).unwrap() - psi_log2(m, r).unwrap(), BigUint::from(m));
    }

    #[test]
    fn representative_supports_extend_to_supports(h in hypergraph(6, 3, 3), k in 1usize..4) {
        let h = with_twins(&h, k);
        let report = min_representative_support(&h, LayerBound::PlanarOnly, &SearchConfig::default()).unwrap();
        let cert = report.outcome.certificate().expect("small hypergraphs have planar supports");
        prop_assert!(is_representative_support(&cert.graph, &h));
        let full = extend_representative(&cert.graph, &h).unwrap();
        prop_assert!(is_support(&full, &h).unwrap());
        prop_assert!(hypersupport::planegeom::is_planar(&full));
    }

    #[test]
    fn parallel_search_matches_sequential(h in hypergraph(6, 4, 3), jobs in 2usize..5) {
        for bound in [LayerBound::Layers(1), LayerBound::PlanarOnly] {
            let seq = search_support(&h, bound, &SearchConfig::default()).unwrap();
            let par = search_support(&h, bound, &SearchConfig { jobs, ..SearchConfig::default() }).unwrap();
            prop_assert_eq!(seq.outcome, par.outcome);
        }
    }

    #[test]
    fn chains_and_gluing(h in hypergraph(7, 4, 3)) {
        let found = search_support(&h, LayerBound::Layers(2), &SearchConfig::default()).unwrap();
        let Some(cert) = found.outcome.certificate() else { return Ok(()); };
        let g = &cert.graph;
        let twins = h.twin_partition();
        let chain = nested_bipartitions(g, 4, &mut Budget::new(200_000));
        let sigs: Vec<_> = chain.elements.iter().map(|bp| compute_signature(&h, g, bp, &twins).unwrap()).collect();
        for i in 0..sigs.len() {
            for j in i + 1..sigs.len() {
                prop_assert!(chain.elements[i].a.is_subset(&chain.elements[j].a));
                prop_assert!(sigs[i].t.iter().all(|c| sigs[j].t.contains(c)));
                if sigs[i] == sigs[j] {
                    let report = glue_support_check(
                        &h, g, &chain.elements[i], &chain.elements[j], &twins, 2, &mut Budget::new(100_000),
                    ).unwrap();
                    prop_assert_eq!(report.vertex_count, report.expected_vertex_count);
                    prop_assert!(report.is_representative_support);
                }
            }
        }
    }

    #[test]
    fn dot_export_is_deterministic(h in hypergraph(8, 5, 3)) {
        let found = search_support(&h, LayerBound::PlanarOnly, &SearchConfig::default()).unwrap();
        let g = &found.outcome.certificate().unwrap().graph;
        let dot = export_dot(g, Some(&h));
        prop_assert_eq!(&dot, &export_dot(g, Some(&h)));
        prop_assert_eq!(dot.matches(" -- ").count(), g.m());
        prop_assert_eq!(dot.matches("[label=").count(), g.n());
    }
}
