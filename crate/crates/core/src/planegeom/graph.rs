use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::hypercore::Vertex;

/// An undirected edge stored with its endpoints in canonical order.
pub type Edge = (Vertex, Vertex);

pub(crate) fn edge(u: &str, v: &str) -> Edge {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

/// A simple undirected graph over string vertex identifiers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
}

impl SimpleGraph {
    /// Builds a graph. Parallel edges collapse; self-loops and edges with an
    /// endpoint outside `vertices` are rejected.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<Vertex>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut g = SimpleGraph { vertices: vertices.into_iter().map(Into::into).collect(), edges: BTreeSet::new() };
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        SimpleGraph::default()
    }

    pub fn add_vertex(&mut self, v: impl Into<Vertex>) -> bool {
        self.vertices.insert(v.into())
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<bool> {
        if u == v {
            return Err(Error::Input(format!("self-loop at `{u}`")));
        }
        for x in [u, v] {
            if !self.vertices.contains(x) {
                return Err(Error::UnknownVertex(x.to_string()));
            }
        }
        Ok(self.edges.insert(edge(u, v)))
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_edge(&self, u: &str, v: &str) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn neighbors<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.edges.iter().filter_map(move |(a, b)| {
            if a == v {
                Some(b.as_str())
            } else if b == v {
                Some(a.as_str())
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: &str) -> usize {
        self.neighbors(v).count()
    }

    /// `G - v`.
    pub fn without_vertex(&self, v: &str) -> SimpleGraph {
        SimpleGraph {
            vertices: self.vertices.iter().filter(|x| *x != v).cloned().collect(),
            edges: self.edges.iter().filter(|(a, b)| a != v && b != v).cloned().collect(),
        }
    }

    /// The subgraph induced by `keep`.
    pub fn induced<'a>(&self, keep: impl IntoIterator<Item = &'a str>) -> SimpleGraph {
        let keep: BTreeSet<&str> = keep.into_iter().filter(|v| self.vertices.contains(*v)).collect();
        SimpleGraph {
            vertices: keep.iter().map(|v| v.to_string()).collect(),
            edges: self
                .edges
                .iter()
                .filter(|(a, b)| keep.contains(a.as_str()) && keep.contains(b.as_str()))
                .cloned()
                .collect(),
        }
    }

    /// Whether `keep` (restricted to the vertex set) induces a connected subgraph.
    pub fn is_connected_on<'a>(&self, keep: impl IntoIterator<Item = &'a str>) -> bool {
        let sub = self.induced(keep);
        sub.components().len() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex sets of the connected components, in canonical order.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let ig = IndexGraph::from_graph(self);
        ig.components().into_iter().map(|c| c.into_iter().map(|i| ig.names[i].clone()).collect()).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m() + 1 == self.n() && self.is_connected()
    }
}

/// Dense-index view of a graph used by the algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IndexGraph {
    pub names: Vec<Vertex>,
    pub adj: Vec<Vec<usize>>,
}

impl IndexGraph {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let names: Vec<Vertex> = g.vertices.iter().cloned().collect();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut adj = vec![Vec::new(); names.len()];
        for (a, b) in &g.edges {
            let (i, j) = (index[a.as_str()], index[b.as_str()]);
            adj[i].push(j);
            adj[j].push(i);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        IndexGraph { names, adj }
    }

    /// Unnamed graph from an edge list over `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        IndexGraph { names: (0..n).map(|i| i.to_string()).collect(), adj }
    }

    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph {
            vertices: self.names.iter().cloned().collect(),
            edges: self.edge_list().into_iter().map(|(u, v)| edge(&self.names[u], &self.names[v])).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, l) in self.adj.iter().enumerate() {
            for &v in l {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph on `keep` (given in increasing order), relabelled `0..keep.len()`.
    pub fn subgraph(&self, keep: &[usize]) -> IndexGraph {
        let mut map = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> =
                    self.adj[v].iter().filter(|&&w| map[w] != usize::MAX).map(|&w| map[w]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        IndexGraph { names: keep.iter().map(|&v| self.names[v].clone()).collect(), adj }
    }

    /// Biconnected components as edge lists, plus bridges and cut vertices.
    ///
    /// Iterative Hopcroft-Tarjan with an edge stack.
    pub fn block_structure(&self) -> BlockStructure {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut bridges = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let v = self.adj[u][*pos];
                    *pos += 1;
                    if v == parent {
                        continue;
                    }
                    if disc[v] == usize::MAX {
                        disc[v] = time;
                        low[v] = time;
                        time += 1;
                        edge_stack.push((u, v));
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((v, u, 0));
                    } else if disc[v] < disc[u] {
                        low[u] = low[u].min(disc[v]);
                        edge_stack.push((u, v));
                    }
                } else {
                    stack.pop();
                    if parent == usize::MAX {
                        continue;
                    }
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        if parent != root {
                            is_cut[parent] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, u) {
                                break;
                            }
                        }
                        if low[u] > disc[parent] {
                            bridges.push((parent.min(u), parent.max(u)));
                        }
                        blocks.push(block);
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        bridges.sort_unstable();
        BlockStructure { blocks, bridges, cut_vertices: (0..n).filter(|&v| is_cut[v]).collect() }
    }
}

pub(crate) struct BlockStructure {
    pub blocks: Vec<Vec<(usize, usize)>>,
    pub bridges: Vec<(usize, usize)>,
    pub cut_vertices: Vec<usize>,
}

/// Bridges and cut vertices of `g`, in canonical order.
pub fn bridges_and_cut_vertices(g: &SimpleGraph) -> (Vec<Edge>, Vec<Vertex>) {
    let ig = IndexGraph::from_graph(g);
    let bs = ig.block_structure();
    let bridges = bs.bridges.iter().map(|&(u, v)| edge(&ig.names[u], &ig.names[v])).collect();
    let cuts = bs.cut_vertices.iter().map(|&v| ig.names[v].clone()).collect();
    (bridges, cuts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(vs: &[&str], es: &[(&str, &str)]) -> SimpleGraph {
        SimpleGraph::new(vs.iter().copied(), es.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_loops_and_unknown_endpoints() {
        assert!(SimpleGraph::new(["a"], [("a", "a")]).is_err());
        assert!(matches!(SimpleGraph::new(["a"], [("a", "b")]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn parallel_edges_collapse() {
        let x = g(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(x.m(), 1);
    }

    #[test]
    fn path_bridges_and_cut() {
        let x = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let (br, cut) = bridges_and_cut_vertices(&x);
        assert_eq!(br, vec![edge("a", "b"), edge("b", "c")]);
        assert_eq!(cut, vec!["b".to_string()]);
    }

    #[test]
    fn cycle_has_no_bridges() {
        let x = g(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]);
        let (br, cut) = bridges_and_cut_vertices(&x);
        assert!(br.is_empty() && cut.is_empty());
    }

    #[test]
    fn bowtie_cut_vertex() {
        let x =
            g(&["v", "a", "b", "c", "d"], &[("v", "a"), ("a", "b"), ("b", "v"), ("v", "c"), ("c", "d"), ("d", "v")]);
        let (br, cut) = bridges_and_cut_vertices(&x);
        assert!(br.is_empty());
        assert_eq!(cut, vec!["v".to_string()]);
        let ig = IndexGraph::from_graph(&x);
        assert_eq!(ig.block_structure().blocks.len(), 2);
    }

    #[test]
    fn components_and_induced() {
        let x = g(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]);
        assert_eq!(x.components().len(), 2);
        assert!(x.is_connected_on(["a", "b"]));
        assert!(!x.is_connected_on(["a", "c"]));
        assert!(x.is_connected_on([]));
    }
}
