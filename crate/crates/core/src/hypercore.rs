//! Hypergraphs, twin classes and the covering relation.
//!
//! Vertices are opaque string identifiers ordered lexicographically. A
//! [`Hypergraph`] is always stored in canonical form: vertices sorted, every
//! hyperedge a sorted list of vertex indices with at least two members, no
//! duplicate hyperedges, and the hyperedge list itself sorted.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type Vertex = String;

/// What [`Hypergraph::build`] discarded while normalising its input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildReport {
    /// Hyperedges with at most one vertex.
    pub dropped_small: usize,
    /// Hyperedges equal (as sets) to an earlier one.
    pub dropped_duplicate: usize,
}

impl BuildReport {
    pub fn dropped(&self) -> usize {
        self.dropped_small + self.dropped_duplicate
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: Vec<Vertex>,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a canonical hypergraph, silently dropping hyperedges of size at
    /// most one and repeated hyperedges.
    pub fn new<V, E, S>(vertices: V, hyperedges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<Vertex>,
        E: IntoIterator<Item = S>,
        S: IntoIterator,
        S::Item: AsRef<str>,
    {
        Self::build(vertices, hyperedges).map(|(h, _)| h)
    }

    /// Like [`Hypergraph::new`], but also reports how many sets were dropped.
    pub fn build<V, E, S>(vertices: V, hyperedges: E) -> Result<(Self, BuildReport)>
    where
        V: IntoIterator,
        V::Item: Into<Vertex>,
        E: IntoIterator<Item = S>,
        S: IntoIterator,
        S::Item: AsRef<str>,
    {
        let vertices: Vec<Vertex> = vertices.into_iter().map(Into::into).collect::<BTreeSet<_>>().into_iter().collect();
        let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();

        let mut report = BuildReport::default();
        let mut seen = BTreeSet::new();
        for raw in hyperedges {
            let mut edge = BTreeSet::new();
            for v in raw {
                let v = v.as_ref();
                let &i = index.get(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
                edge.insert(i);
            }
            if edge.len() <= 1 {
                report.dropped_small += 1;
                continue;
            }
            let edge: Vec<usize> = edge.into_iter().collect();
            if !seen.insert(edge) {
                report.dropped_duplicate += 1;
            }
        }
        let hyperedges = seen.into_iter().collect();
        Ok((Hypergraph { vertices, hyperedges }, report))
    }

    /// Canonical hypergraph from already-indexed hyperedges.
    pub(crate) fn from_indexed(vertices: Vec<Vertex>, hyperedges: impl IntoIterator<Item = Vec<usize>>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let hyperedges: BTreeSet<Vec<usize>> = hyperedges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                e
            })
            .filter(|e| e.len() >= 2)
            .collect();
        Hypergraph { vertices, hyperedges: hyperedges.into_iter().collect() }
    }

    pub fn empty() -> Self {
        Hypergraph { vertices: Vec::new(), hyperedges: Vec::new() }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Number of hyperedges.
    pub fn m(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &str) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_str().cmp(v)).ok()
    }

    pub(crate) fn require(&self, v: &str) -> Result<usize> {
        self.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.index_of(v).is_some()
    }

    /// Hyperedges as sorted vertex-index lists.
    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// Hyperedge `i` as vertex identifiers.
    pub fn hyperedge(&self, i: usize) -> Vec<&str> {
        self.hyperedges[i].iter().map(|&v| self.vertices[v].as_str()).collect()
    }

    pub fn named_hyperedges(&self) -> Vec<Vec<&str>> {
        (0..self.m()).map(|i| self.hyperedge(i)).collect()
    }

    /// Indices of the hyperedges containing `v`.
    pub fn incident_hyperedges(&self, v: &str) -> Result<Vec<usize>> {
        let v = self.require(v)?;
        Ok(self.incidence_of(v))
    }

    pub(crate) fn incidence_of(&self, v: usize) -> Vec<usize> {
        self.hyperedges.iter().enumerate().filter(|(_, e)| e.binary_search(&v).is_ok()).map(|(i, _)| i).collect()
    }

    /// `v` covers `u` when every hyperedge containing `u` also contains `v`.
    pub fn covers(&self, v: &str, u: &str) -> Result<bool> {
        let v = self.require(v)?;
        let u = self.require(u)?;
        Ok(self.covers_index(v, u))
    }

    pub(crate) fn covers_index(&self, v: usize, u: usize) -> bool {
        self.hyperedges.iter().all(|e| e.binary_search(&u).is_err() || e.binary_search(&v).is_ok())
    }

    /// Twin classes by partition refinement: start from one class holding
    /// every vertex and split each class by membership in each hyperedge.
    pub fn twin_partition(&self) -> TwinPartition {
        let n = self.n();
        let mut class_of = vec![0usize; n];
        let mut sizes = vec![n];
        let mut hits = vec![0usize];
        let mut split_into = vec![usize::MAX];
        let mut touched = Vec::new();
        for e in &self.hyperedges {
            touched.clear();
            for &v in e {
                let c = class_of[v];
                if hits[c] == 0 {
                    touched.push(c);
                }
                hits[c] += 1;
            }
            for &c in &touched {
                if hits[c] < sizes[c] {
                    split_into[c] = sizes.len();
                    sizes.push(0);
                    hits.push(0);
                    split_into.push(usize::MAX);
                }
            }
            for &v in e {
                let c = class_of[v];
                let t = split_into[c];
                if t != usize::MAX {
                    class_of[v] = t;
                    sizes[c] -= 1;
                    sizes[t] += 1;
                }
            }
            for &c in &touched {
                hits[c] = 0;
                split_into[c] = usize::MAX;
            }
        }
        TwinPartition::from_raw_labels(self, &class_of)
    }

    /// `H - S`: delete `removed` from the vertex set and from every
    /// hyperedge, then drop empty, singleton and duplicate sets.
    pub fn remove_vertices<S: AsRef<str>>(&self, removed: &[S]) -> Result<Hypergraph> {
        let mut gone = vec![false; self.n()];
        for v in removed {
            gone[self.require(v.as_ref())?] = true;
        }
        Ok(self.retain_indices(|i| !gone[i]))
    }

    /// The subhypergraph shrunken to `kept`, i.e. `H - (V \ kept)`.
    pub fn shrink<S: AsRef<str>>(&self, kept: &[S]) -> Result<Hypergraph> {
        let mut keep = vec![false; self.n()];
        for v in kept {
            keep[self.require(v.as_ref())?] = true;
        }
        Ok(self.retain_indices(|i| keep[i]))
    }

    pub(crate) fn retain_indices(&self, keep: impl Fn(usize) -> bool) -> Hypergraph {
        let mut map = vec![usize::MAX; self.n()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep(i) {
                map[i] = vertices.len();
                vertices.push(v.clone());
            }
        }
        let edges =
            self.hyperedges.iter().map(|e| e.iter().filter(|&&v| map[v] != usize::MAX).map(|&v| map[v]).collect());
        Hypergraph::from_indexed(vertices, edges)
    }

    /// Connectivity of the bipartite vertex/hyperedge incidence graph. The
    /// empty hypergraph is not connected; a single vertex is.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.hyperedges {
            let r = find(&mut parent, e[0]);
            for &v in &e[1..] {
                let s = find(&mut parent, v);
                parent[s] = r;
            }
        }
        let root = find(&mut parent, 0);
        (1..n).all(|v| find(&mut parent, v) == root)
    }

    /// Total size `|V| + sum |F|`.
    pub fn size(&self) -> usize {
        self.n() + self.hyperedges.iter().map(Vec::len).sum::<usize>()
    }
}

/// Partition of the vertices into twin classes (equal incidence sets).
///
/// Classes are numbered canonically by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<Vertex>>,
    class_of: BTreeMap<Vertex, usize>,
    class_index: Vec<usize>,
}

impl TwinPartition {
    fn from_raw_labels(h: &Hypergraph, labels: &[usize]) -> Self {
        let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
        let mut class_index = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        // vertices are visited in canonical order, so the first member seen
        // for a label is its smallest
        for (v, &l) in labels.iter().enumerate() {
            let next = renumber.len();
            let c = *renumber.entry(l).or_insert(next);
            if c == classes.len() {
                classes.push(Vec::new());
            }
            classes[c].push(h.vertex(v).to_string());
            class_index.push(c);
        }
        let class_of = h.vertices().iter().zip(&class_index).map(|(v, &c)| (v.clone(), c)).collect();
        TwinPartition { classes, class_of, class_index }
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, v: &str) -> Option<usize> {
        self.class_of.get(v).copied()
    }

    pub fn class(&self, c: usize) -> &[Vertex] {
        &self.classes[c]
    }

    pub fn are_twins(&self, u: &str, v: &str) -> bool {
        matches!((self.class_of(u), self.class_of(v)), (Some(a), Some(b)) if a == b)
    }

    /// Classes with more than one member.
    pub fn nontrivial(&self) -> impl Iterator<Item = &[Vertex]> {
        self.classes.iter().filter(|c| c.len() > 1).map(Vec::as_slice)
    }
}
