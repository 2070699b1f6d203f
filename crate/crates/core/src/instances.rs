//! Generators: the twelve-vertex twin example, its scaled family, and random
//! hypergraphs.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, Vertex};
use crate::planegeom::{PlaneEmbedding, SimpleGraph};

/// Vertices of the twin example.
pub const FIG2_VERTICES: [&str; 12] = ["a", "b", "c", "d", "v_a", "v_b", "v_d", "u_b", "u_c", "u_d", "t", "t'"];

/// Size-two hyperedges; these are also the solid edges of the support.
pub const FIG2_PAIRS: [(&str, &str); 16] = [
    ("a", "b"),
    ("a", "c"),
    ("a", "d"),
    ("b", "c"),
    ("b", "d"),
    ("c", "d"),
    ("a", "v_a"),
    ("v_a", "v_d"),
    ("v_d", "v_b"),
    ("v_b", "b"),
    ("d", "v_d"),
    ("b", "u_b"),
    ("u_b", "u_d"),
    ("u_d", "u_c"),
    ("u_c", "c"),
    ("d", "u_d"),
];

/// The five-vertex hyperedges, each containing both twins.
pub const FIG2_FIVE_SETS: [[&str; 5]; 8] = [
    ["a", "v_a", "t", "t'", "c"],
    ["a", "v_b", "t", "t'", "c"],
    ["b", "v_a", "t", "t'", "c"],
    ["b", "v_b", "t", "t'", "c"],
    ["b", "u_b", "t", "t'", "a"],
    ["b", "u_c", "t", "t'", "a"],
    ["c", "u_b", "t", "t'", "a"],
    ["c", "u_c", "t", "t'", "a"],
];

/// Edges added to the pairs to connect the five-sets.
pub const FIG2_DOTTED: [(&str, &str); 8] =
    [("t", "a"), ("t", "b"), ("t", "v_a"), ("t", "v_b"), ("t'", "b"), ("t'", "c"), ("t'", "u_b"), ("t'", "u_c")];

/// Counter-clockwise neighbour order around every vertex of the drawn
/// support, read off the drawing.
pub const FIG2_ROTATION: [(&str, &[&str]); 12] = [
    ("a", &["c", "d", "v_a", "t", "b"]),
    ("b", &["a", "t", "v_b", "d", "u_b", "t'", "c"]),
    ("c", &["b", "t'", "u_c", "d", "a"]),
    ("d", &["u_d", "b", "v_d", "a", "c"]),
    ("v_a", &["v_d", "t", "a"]),
    ("v_d", &["v_b", "v_a", "d"]),
    ("v_b", &["b", "t", "v_d"]),
    ("u_b", &["b", "u_d", "t'"]),
    ("u_d", &["u_b", "d", "u_c"]),
    ("u_c", &["t'", "u_d", "c"]),
    ("t", &["v_b", "b", "a", "v_a"]),
    ("t'", &["b", "u_b", "u_c", "c"]),
];

/// The unbounded face of the drawing.
pub const FIG2_OUTER_FACE: [&str; 3] = ["a", "c", "b"];

pub fn figure2_hypergraph() -> Hypergraph {
    let pairs = FIG2_PAIRS.iter().map(|&(u, v)| vec![u, v]);
    let fives = FIG2_FIVE_SETS.iter().map(|s| s.to_vec());
    Hypergraph::new(FIG2_VERTICES, pairs.chain(fives)).expect("static instance is valid")
}

pub fn figure2_support_graph() -> SimpleGraph {
    SimpleGraph::new(FIG2_VERTICES, FIG2_PAIRS.iter().chain(&FIG2_DOTTED).copied()).expect("static instance is valid")
}

/// The support with the embedding transcribed from the drawing.
pub fn figure2_support() -> (SimpleGraph, PlaneEmbedding) {
    let g = figure2_support_graph();
    let rotation: BTreeMap<Vertex, Vec<Vertex>> =
        FIG2_ROTATION.iter().map(|(v, l)| (v.to_string(), l.iter().map(|w| w.to_string()).collect())).collect();
    let outer: Vec<Vertex> = FIG2_OUTER_FACE.iter().map(|v| v.to_string()).collect();
    let e = PlaneEmbedding::from_outer_walks(g.clone(), rotation, &[outer]).expect("transcribed embedding is plane");
    (g, e)
}

fn copy_name(v: &str, i: usize) -> String {
    format!("{v}.{i}")
}

pub const VSTAR: &str = "vstar";

fn check_ell(ell: usize) -> Result<()> {
    if ell < 1 {
        return Err(Error::Domain("ell must be at least 1".into()));
    }
    Ok(())
}

/// `ell` copies of the twin example joined through an extra vertex `vstar`;
/// all `2 ell` twin vertices form a single twin class.
pub fn appendix_a_family(ell: usize) -> Result<Hypergraph> {
    check_ell(ell)?;
    let mut vertices: Vec<String> = vec![VSTAR.to_string()];
    let mut edges: Vec<Vec<String>> = Vec::new();
    for i in 1..=ell {
        vertices.extend(FIG2_VERTICES.iter().map(|v| copy_name(v, i)));
        edges.extend(FIG2_PAIRS.iter().map(|(u, v)| vec![copy_name(u, i), copy_name(v, i)]));
        for v in ["a", "b", "c"] {
            edges.push(vec![copy_name(v, i), VSTAR.to_string()]);
        }
    }
    let group = |v: &str| -> Vec<String> { (1..=ell).map(|i| copy_name(v, i)).collect() };
    let twins: Vec<String> = group("t").into_iter().chain(group("t'")).collect();
    // each five-set [x, y, t, t', z] becomes X ∪ Z ∪ Y ∪ T ∪ {vstar}
    for set in FIG2_FIVE_SETS {
        let mut e: Vec<String> = Vec::new();
        for v in [set[0], set[4], set[1]] {
            e.extend(group(v));
        }
        e.extend(twins.iter().cloned());
        e.push(VSTAR.to_string());
        edges.push(e);
    }
    Hypergraph::new(vertices, edges)
}

/// Copies of the twin-example support with `a`, `b`, `c` of every copy
/// joined to `vstar`.
pub fn appendix_a_support(ell: usize) -> Result<SimpleGraph> {
    check_ell(ell)?;
    let mut vertices = vec![VSTAR.to_string()];
    let mut edges = Vec::new();
    for i in 1..=ell {
        vertices.extend(FIG2_VERTICES.iter().map(|v| copy_name(v, i)));
        edges.extend(FIG2_PAIRS.iter().chain(&FIG2_DOTTED).map(|(u, v)| (copy_name(u, i), copy_name(v, i))));
        for v in ["a", "b", "c"] {
            edges.push((copy_name(v, i), VSTAR.to_string()));
        }
    }
    SimpleGraph::new(vertices, edges)
}

const MAX_ATTEMPTS: usize = 10_000;

/// Number of distinct vertex sets with sizes in `2..=max` over `n` vertices,
/// saturating.
fn distinct_sets(n: usize, max: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 1..=max.min(n) {
        binom = binom.saturating_mul((n + 1 - k) as u128) / k as u128;
        if k >= 2 {
            total = total.saturating_add(binom);
        }
    }
    total
}

/// A random hypergraph on vertices `v0, v1, ...` (zero-padded) with `m`
/// distinct hyperedges of sizes in `2..=max_edge_size`, deterministic in
/// `seed`. Samples are redrawn until connected whenever `m` hyperedges of
/// that size can connect `n` vertices at all.
pub fn random_hypergraph(n: usize, m: usize, max_edge_size: usize, seed: u64) -> Result<Hypergraph> {
    if n < 1 || m < 1 || max_edge_size < 2 {
        return Err(Error::Domain("need n >= 1, m >= 1 and max_edge_size >= 2".into()));
    }
    let max = max_edge_size.min(n);
    if (m as u128) > distinct_sets(n, max) {
        return Err(Error::Domain(format!(
            "cannot draw {m} distinct hyperedges of size 2..={max_edge_size} on {n} vertices"
        )));
    }
    let width = (n - 1).to_string().len();
    let names: Vec<String> = (0..n).map(|i| format!("v{i:0width$}")).collect();
    let want_connected = m * (max - 1) >= n - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut draws = 0;
        while sets.len() < m && draws < MAX_ATTEMPTS {
            draws += 1;
            let size = rng.gen_range(2..=max);
            let mut s = sample(&mut rng, n, size).into_vec();
            s.sort_unstable();
            sets.insert(s);
        }
        if sets.len() < m {
            continue;
        }
        let h = Hypergraph::new(
            names.iter().cloned(),
            sets.iter().map(|s| s.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>()),
        )?;
        if !want_connected || h.is_connected() {
            return Ok(h);
        }
    }
    Err(Error::Domain(format!("no connected sample found after {MAX_ATTEMPTS} attempts")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegeom::is_planar;
    use crate::supports::is_support;

    #[test]
    fn twin_example_counts() {
        let h = figure2_hypergraph();
        assert_eq!((h.n(), h.m()), (12, 24));
        assert!(h.is_connected());
        let twins = h.twin_partition();
        let nontrivial: Vec<&[Vertex]> = twins.nontrivial().collect();
        assert_eq!(nontrivial, vec![&["t".to_string(), "t'".to_string()][..]]);
    }

    #[test]
    fn twin_example_support_is_plane_with_two_layers() {
        let (g, e) = figure2_support();
        assert_eq!(g.m(), 24);
        assert!(is_support(&g, &figure2_hypergraph()).unwrap());
        assert!(is_planar(&g));
        assert_eq!(e.layer_decomposition().len(), 2);
        assert_eq!(e.layer_count(), 2);
    }

    #[test]
    fn joined_copies_sizes() {
        for ell in 1..=2 {
            let h = appendix_a_family(ell).unwrap();
            assert_eq!(h.n(), 12 * ell + 1);
            let twins = h.twin_partition();
            let big: Vec<&[Vertex]> = twins.nontrivial().collect();
            assert_eq!(big.len(), 1);
            assert_eq!(big[0].len(), 2 * ell);
            let g = appendix_a_support(ell).unwrap();
            assert!(is_support(&g, &h).unwrap());
            assert!(is_planar(&g));
        }
        assert!(appendix_a_family(0).is_err());
    }

    #[test]
    fn random_generation() {
        let a = random_hypergraph(6, 4, 3, 7).unwrap();
        assert_eq!(a, random_hypergraph(6, 4, 3, 7).unwrap());
        assert!(a.is_connected());
        assert!(a.hyperedges().iter().all(|e| (2..=3).contains(&e.len())));
        let single = random_hypergraph(4, 1, 2, 1).unwrap();
        assert_eq!(single.m(), 1);
        assert_eq!(single.hyperedges()[0].len(), 2);
        assert!(random_hypergraph(3, 5, 2, 1).is_err());
        assert_eq!(random_hypergraph(11, 3, 4, 2).unwrap().vertex(0), "v00");
    }
}
