//! Boundaried graphs, gluing, middle sets and bipartition signatures.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::{json, Map, Value};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, TwinPartition, Vertex};
use crate::planegeom::{edge, is_planar, is_r_outerplanar, Decision, Edge, SimpleGraph};
use crate::supports::is_representative_support;

/// A graph with a boundary labelled bijectively by `1..=b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundariedGraph {
    graph: SimpleGraph,
    labeling: BTreeMap<Vertex, usize>,
}

impl BoundariedGraph {
    pub fn new(graph: SimpleGraph, labeling: BTreeMap<Vertex, usize>) -> Result<Self> {
        check_labeling(&labeling)?;
        if let Some(v) = labeling.keys().find(|v| !graph.contains_vertex(v)) {
            return Err(Error::UnknownVertex(v.clone()));
        }
        Ok(BoundariedGraph { graph, labeling })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn labeling(&self) -> &BTreeMap<Vertex, usize> {
        &self.labeling
    }

    pub fn boundary_size(&self) -> usize {
        self.labeling.len()
    }

    /// Boundary vertex carrying `label`.
    pub fn vertex_with_label(&self, label: usize) -> Option<&str> {
        self.labeling.iter().find(|(_, &l)| l == label).map(|(v, _)| v.as_str())
    }
}

fn check_labeling(labeling: &BTreeMap<Vertex, usize>) -> Result<()> {
    let labels: BTreeSet<usize> = labeling.values().copied().collect();
    if labels.len() != labeling.len() || labels.iter().copied().ne(1..=labeling.len()) {
        return Err(Error::Input("boundary labels must be a bijection onto 1..=b".into()));
    }
    Ok(())
}

/// Labels the vertices of `set` by `1..` in canonical order.
pub fn canonical_labeling(set: &BTreeSet<Vertex>) -> BTreeMap<Vertex, usize> {
    set.iter().enumerate().map(|(i, v)| (v.clone(), i + 1)).collect()
}

/// A bipartition `(A, B)` of the edges of a graph with a labelling of its
/// middle set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBipartition {
    pub a: BTreeSet<Edge>,
    pub b: BTreeSet<Edge>,
    pub labeling: BTreeMap<Vertex, usize>,
}

impl EdgeBipartition {
    /// Validates that `(a, b)` bipartitions `E(g)` and that `labeling` is a
    /// bijection from the middle set onto `1..=l`.
    pub fn new(
        g: &SimpleGraph,
        a: impl IntoIterator<Item = Edge>,
        b: impl IntoIterator<Item = Edge>,
        labeling: BTreeMap<Vertex, usize>,
    ) -> Result<Self> {
        let a: BTreeSet<Edge> = a.into_iter().map(|(u, v)| edge(&u, &v)).collect();
        let b: BTreeSet<Edge> = b.into_iter().map(|(u, v)| edge(&u, &v)).collect();
        let middle = middle_set(g, &a, &b)?;
        check_labeling(&labeling)?;
        if labeling.keys().cloned().collect::<BTreeSet<_>>() != middle {
            return Err(Error::Input("labeling domain differs from the middle set".into()));
        }
        Ok(EdgeBipartition { a, b, labeling })
    }

    /// `(A, E \ A)` with the canonical labelling of its middle set.
    pub fn with_complement(g: &SimpleGraph, a: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let a: BTreeSet<Edge> = a.into_iter().map(|(u, v)| edge(&u, &v)).collect();
        let b: BTreeSet<Edge> = g.edges().difference(&a).cloned().collect();
        let middle = middle_set(g, &a, &b)?;
        Ok(EdgeBipartition { a, b, labeling: canonical_labeling(&middle) })
    }

    pub fn middle(&self) -> BTreeSet<Vertex> {
        self.labeling.keys().cloned().collect()
    }

    pub fn width(&self) -> usize {
        self.labeling.len()
    }
}

fn endpoints<'a>(edges: impl IntoIterator<Item = &'a Edge>) -> BTreeSet<Vertex> {
    edges.into_iter().flat_map(|(u, v)| [u.clone(), v.clone()]).collect()
}

/// Vertices incident with an edge of `a` and an edge of `b`.
pub fn middle_set(g: &SimpleGraph, a: &BTreeSet<Edge>, b: &BTreeSet<Edge>) -> Result<BTreeSet<Vertex>> {
    if !a.is_disjoint(b) {
        return Err(Error::Input("edge sets overlap".into()));
    }
    if a.len() + b.len() != g.m() || !a.iter().chain(b).all(|(u, v)| g.contains_edge(u, v)) {
        return Err(Error::Input("edge sets do not partition the graph's edges".into()));
    }
    Ok(endpoints(a).intersection(&endpoints(b)).cloned().collect())
}

/// The graph formed by the edges `a` and their endpoints.
pub fn edge_induced(_g: &SimpleGraph, a: &BTreeSet<Edge>) -> SimpleGraph {
    SimpleGraph::new(endpoints(a), a.iter().map(|(u, v)| (u.as_str(), v.as_str())))
        .expect("edges carry their endpoints")
}

/// Disjoint union with equally labelled boundary vertices identified. The
/// identified vertex keeps its name from `g1`; other vertices of `g2` whose
/// names occur in `g1` get primes appended.
pub fn glue(g1: &BoundariedGraph, g2: &BoundariedGraph) -> Result<SimpleGraph> {
    if g1.boundary_size() != g2.boundary_size() {
        return Err(Error::Input(format!("boundary sizes differ ({} vs {})", g1.boundary_size(), g2.boundary_size())));
    }
    let by_label: HashMap<usize, &str> = g1.labeling.iter().map(|(v, &l)| (l, v.as_str())).collect();
    let mut out = g1.graph.clone();
    let mut rename: HashMap<&str, Vertex> = HashMap::new();
    for v in g2.graph.vertices() {
        let name = match g2.labeling.get(v) {
            Some(l) => by_label[l].to_string(),
            None => {
                let mut name = v.clone();
                while out.contains_vertex(&name) {
                    name.push('\'');
                }
                out.add_vertex(name.clone());
                name
            }
        };
        rename.insert(v.as_str(), name);
    }
    for (u, v) in g2.graph.edges() {
        out.add_edge(&rename[u.as_str()], &rename[v.as_str()])?;
    }
    Ok(out)
}

/// The triple `(T, phi, C)` attached to an edge bipartition of a support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    /// Twin classes (ids) met by the endpoints of `A`, sorted.
    pub t: Vec<usize>,
    /// `phi[j - 1]` is the twin class of the boundary vertex labelled `j`.
    pub phi: Vec<usize>,
    /// For each hyperedge, the pairs `(i, j)` with `i <= j` of labels whose
    /// vertices lie in the hyperedge and are connected through `B` inside it.
    pub c: Vec<Vec<(usize, usize)>>,
}

impl Signature {
    pub fn to_json(&self) -> Value {
        let phi: Map<String, Value> =
            self.phi.iter().enumerate().map(|(j, &c)| ((j + 1).to_string(), json!(c))).collect();
        let c: Map<String, Value> = self
            .c
            .iter()
            .enumerate()
            .map(|(f, rel)| (f.to_string(), json!(rel.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>())))
            .collect();
        json!({ "T": self.t, "phi": phi, "C": c })
    }
}

/// Signature of `bp` for a support `g` of `h`.
pub fn compute_signature(
    h: &Hypergraph,
    g: &SimpleGraph,
    bp: &EdgeBipartition,
    twins: &TwinPartition,
) -> Result<Signature> {
    let middle = middle_set(g, &bp.a, &bp.b)?;
    if bp.labeling.keys().cloned().collect::<BTreeSet<_>>() != middle {
        return Err(Error::Input("labeling domain differs from the middle set".into()));
    }
    let class = |v: &str| twins.class_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()));
    let mut t: Vec<usize> = endpoints(&bp.a).iter().map(|v| class(v)).collect::<Result<_>>()?;
    t.sort_unstable();
    t.dedup();
    let ell = bp.labeling.len();
    let mut by_label = vec![String::new(); ell];
    for (v, &l) in &bp.labeling {
        by_label[l - 1] = v.clone();
    }
    let phi = by_label.iter().map(|v| class(v)).collect::<Result<Vec<_>>>()?;
    let right = edge_induced(g, &bp.b);
    let mut c = Vec::with_capacity(h.m());
    for f in 0..h.m() {
        let members: BTreeSet<&str> = h.hyperedge(f).into_iter().collect();
        let inside: Vec<&str> = right.vertices().iter().map(String::as_str).filter(|v| members.contains(v)).collect();
        let part = right.induced(inside.iter().copied());
        let comp_of: HashMap<Vertex, usize> = part
            .components()
            .into_iter()
            .enumerate()
            .flat_map(|(i, comp)| comp.into_iter().map(move |v| (v, i)))
            .collect();
        let mut rel = Vec::new();
        for i in 0..ell {
            for j in i..ell {
                let (Some(a), Some(b)) = (comp_of.get(&by_label[i]), comp_of.get(&by_label[j])) else {
                    continue;
                };
                if a == b {
                    rel.push((i + 1, j + 1));
                }
            }
        }
        c.push(rel);
    }
    Ok(Signature { t, phi, c })
}

/// A chain `A_1 ⊊ A_2 ⊊ ...` of edge sets with small middle sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub elements: Vec<EdgeBipartition>,
    /// True when the chain is a longest one; false when the budget forced a
    /// greedy answer.
    pub exhaustive: bool,
}

/// Longest chain of proper, nonempty edge sets `A` whose middle sets have at
/// most `width_cap` vertices. Chains grow one edge at a time; among longest
/// chains, extensions with smaller middle sets and then smaller edges win.
/// Falls back to greedy growth when the exact search exceeds the budget.
pub fn nested_bipartitions(g: &SimpleGraph, width_cap: usize, budget: &mut Budget) -> Chain {
    let edges: Vec<Edge> = g.edges().iter().cloned().collect();
    let m = edges.len();
    let index: HashMap<&str, usize> = g.vertices().iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let ends: Vec<(usize, usize)> = edges.iter().map(|(u, v)| (index[u.as_str()], index[v.as_str()])).collect();
    let n = g.n();
    let width = |mask: u64| -> usize {
        let mut left = vec![false; n];
        let mut right = vec![false; n];
        for (i, &(u, v)) in ends.iter().enumerate() {
            let side = if mask >> i & 1 == 1 { &mut left } else { &mut right };
            side[u] = true;
            side[v] = true;
        }
        (0..n).filter(|&v| left[v] && right[v]).count()
    };
    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let valid = |mask: u64| mask != 0 && mask != full && width(mask) <= width_cap;

    let states = if m < 40 { 1u64 << m } else { u64::MAX };
    let exact = m <= 26 && budget.remaining() >= states;
    let masks: Vec<u64> = if exact {
        budget.charge(states);
        // best[mask] = most valid sets on a one-edge-at-a-time path from mask to E
        let mut best = vec![0u8; states as usize];
        let mut valid_bit = vec![false; states as usize];
        for mask in 0..states {
            valid_bit[mask as usize] = valid(mask);
        }
        for mask in (0..full).rev() {
            let mut b = 0u8;
            for e in 0..m {
                if mask >> e & 1 == 0 {
                    let next = mask | 1 << e;
                    b = b.max(best[next as usize] + valid_bit[next as usize] as u8);
                }
            }
            best[mask as usize] = b;
        }
        let mut path = Vec::new();
        let mut mask = 0u64;
        while mask != full {
            let target = best[mask as usize];
            let step = (0..m)
                .filter(|&e| mask >> e & 1 == 0)
                .map(|e| mask | 1 << e)
                .filter(|&next| best[next as usize] + valid_bit[next as usize] as u8 == target)
                .min_by_key(|&next| (width(next), next.trailing_zeros()))
                .expect("some extension attains the optimum");
            if valid_bit[step as usize] {
                path.push(step);
            }
            mask = step;
        }
        path
    } else {
        let mut path = Vec::new();
        let mut mask = 0u64;
        while mask != full {
            let step = (0..m)
                .filter(|&e| mask >> e & 1 == 0)
                .map(|e| mask | 1 << e)
                .min_by_key(|&next| (width(next), (next ^ mask).trailing_zeros()))
                .unwrap();
            budget.tick();
            if valid(step) {
                path.push(step);
            }
            mask = step;
        }
        path
    };
    let elements = masks
        .into_iter()
        .map(|mask| {
            let a = (0..m).filter(|&e| mask >> e & 1 == 1).map(|e| edges[e].clone());
            EdgeBipartition::with_complement(g, a).expect("subset of edges")
        })
        .collect();
    Chain { elements, exhaustive: exact }
}

/// What gluing two equal-signature chain elements produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueReport {
    pub glued: SimpleGraph,
    pub vertex_count: usize,
    /// `|V(G<A_i>)| + |V(G<B_j>)| - l`.
    pub expected_vertex_count: usize,
    /// Vertices of `g` absent from the glued graph.
    pub removed: Vec<Vertex>,
    pub is_representative_support: bool,
    pub is_planar: bool,
    pub r_outerplanar: Decision<()>,
}

/// Glues `G<A_i>` and `G<B_j>` along their middle sets and checks the result.
/// Requires `A_i ⊆ A_j` and equal signatures.
pub fn glue_support_check(
    h: &Hypergraph,
    g: &SimpleGraph,
    bp_i: &EdgeBipartition,
    bp_j: &EdgeBipartition,
    twins: &TwinPartition,
    r: usize,
    budget: &mut Budget,
) -> Result<GlueReport> {
    if !bp_i.a.is_subset(&bp_j.a) {
        return Err(Error::Precondition("the first bipartition must precede the second in the chain".into()));
    }
    if bp_i.width() != bp_j.width() {
        return Err(Error::Precondition("middle sets differ in size".into()));
    }
    if compute_signature(h, g, bp_i, twins)? != compute_signature(h, g, bp_j, twins)? {
        return Err(Error::Precondition("signatures differ".into()));
    }
    let left = BoundariedGraph::new(edge_induced(g, &bp_i.a), bp_i.labeling.clone())?;
    let right = BoundariedGraph::new(edge_induced(g, &bp_j.b), bp_j.labeling.clone())?;
    let glued = glue(&left, &right)?;
    let expected = left.graph.n() + right.graph.n() - bp_i.width();
    let removed = g.vertices().iter().filter(|v| !glued.contains_vertex(v)).cloned().collect();
    let r_outerplanar = match is_r_outerplanar(&glued, r, budget) {
        Decision::Yes(_) => Decision::Yes(()),
        Decision::No => Decision::No,
        Decision::Unknown => Decision::Unknown,
    };
    Ok(GlueReport {
        vertex_count: glued.n(),
        expected_vertex_count: expected,
        removed,
        is_representative_support: is_representative_support(&glued, h),
        is_planar: is_planar(&glued),
        r_outerplanar,
        glued,
    })
}
