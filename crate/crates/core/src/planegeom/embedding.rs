//! Rotation systems, face tracing and layer decompositions.
//!
//! Faces are traced with the usual rule: the dart following `x -> u` is
//! `u -> w` where `w` is the successor of `x` in the cyclic order at `u`.
//! Components are embedded independently and share a single outer region, so
//! an embedding designates one outer face per component that has edges.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::graph::{IndexGraph, SimpleGraph};
use crate::error::{Error, Result};
use crate::hypercore::Vertex;

/// Cyclic neighbour orders over dense vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Rotation {
    pub rot: Vec<Vec<usize>>,
}

/// Darts and faces of a rotation system.
#[derive(Clone, Debug)]
pub(crate) struct Faces {
    offset: Vec<usize>,
    tail: Vec<usize>,
    head: Vec<usize>,
    pub walks: Vec<Vec<usize>>,
    pub face_of: Vec<usize>,
}

impl Faces {
    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }

    pub fn tail(&self, d: usize) -> usize {
        self.tail[d]
    }

    pub fn head(&self, d: usize) -> usize {
        self.head[d]
    }

    /// Darts leaving `v`.
    pub fn out_darts(&self, v: usize) -> std::ops::Range<usize> {
        self.offset[v]..self.offset[v + 1]
    }

    pub fn dart(&self, rot: &Rotation, u: usize, v: usize) -> Option<usize> {
        rot.rot[u].iter().position(|&w| w == v).map(|k| self.offset[u] + k)
    }

    /// Face walks as vertex sequences (the tail of each dart).
    pub fn vertex_walk(&self, f: usize) -> Vec<usize> {
        self.walks[f].iter().map(|&d| self.tail[d]).collect()
    }
}

impl Rotation {
    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn graph(&self) -> IndexGraph {
        IndexGraph::from_edges(self.n(), self.rot.iter().enumerate().flat_map(|(u, l)| l.iter().map(move |&v| (u, v))))
    }

    pub fn faces(&self) -> Faces {
        let n = self.n();
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for l in &self.rot {
            offset.push(offset.last().unwrap() + l.len());
        }
        let darts = offset[n];
        let mut tail = vec![0; darts];
        let mut head = vec![0; darts];
        for (u, l) in self.rot.iter().enumerate() {
            for (k, &v) in l.iter().enumerate() {
                tail[offset[u] + k] = u;
                head[offset[u] + k] = v;
            }
        }
        // next(u -> v) = v -> succ_v(u)
        let mut next = vec![0; darts];
        for d in 0..darts {
            let (u, v) = (tail[d], head[d]);
            let l = &self.rot[v];
            let p = l.iter().position(|&w| w == u).expect("rotation is not symmetric");
            next[d] = offset[v] + (p + 1) % l.len();
        }
        let mut face_of = vec![usize::MAX; darts];
        let mut walks = Vec::new();
        for s in 0..darts {
            if face_of[s] != usize::MAX {
                continue;
            }
            let f = walks.len();
            let mut walk = Vec::new();
            let mut d = s;
            while face_of[d] == usize::MAX {
                face_of[d] = f;
                walk.push(d);
                d = next[d];
            }
            walks.push(walk);
        }
        Faces { offset, tail, head, walks, face_of }
    }

    /// Checks that every edge appears once in the rotation of each endpoint.
    pub fn check_structure(&self) -> Result<()> {
        for (u, l) in self.rot.iter().enumerate() {
            let mut seen = HashSet::new();
            for &v in l {
                if v == u || v >= self.n() {
                    return Err(Error::Embedding(format!("bad neighbour {v} at vertex {u}")));
                }
                if !seen.insert(v) {
                    return Err(Error::Embedding(format!("repeated neighbour {v} at vertex {u}")));
                }
                if !self.rot[v].contains(&u) {
                    return Err(Error::Embedding(format!("edge {u}-{v} missing at {v}")));
                }
            }
        }
        Ok(())
    }

    /// Euler's formula per component: `n_c - m_c + f_c = 2`.
    pub fn is_planar_rotation(&self, faces: &Faces) -> bool {
        let g = self.graph();
        let mut comp_of = vec![0; self.n()];
        let comps = g.components();
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        let mut fcount = vec![0usize; comps.len()];
        for w in &faces.walks {
            fcount[comp_of[faces.tail(w[0])]] += 1;
        }
        comps.iter().enumerate().all(|(c, vs)| {
            let m: usize = vs.iter().map(|&v| self.rot[v].len()).sum::<usize>() / 2;
            m == 0 || vs.len() + fcount[c] == m + 2
        })
    }

    /// Layer index (1-based) of every vertex when `outer` (face ids, one per
    /// component with edges) are the outer faces: one more than the face
    /// distance to the outer region. Vertices without edges are in layer 1.
    pub fn face_distance_layers(&self, faces: &Faces, outer: &[usize]) -> Vec<usize> {
        let n = self.n();
        let mut layer = vec![usize::MAX; n];
        let mut fdist = vec![usize::MAX; faces.walks.len()];
        let mut queue = std::collections::VecDeque::new();
        for &f in outer {
            if fdist[f] == usize::MAX {
                fdist[f] = 0;
                queue.push_back(f);
            }
        }
        while let Some(f) = queue.pop_front() {
            for &d in &faces.walks[f] {
                let v = faces.tail(d);
                if layer[v] != usize::MAX {
                    continue;
                }
                layer[v] = fdist[f] + 1;
                for e in faces.out_darts(v) {
                    let g = faces.face_of[e];
                    if fdist[g] == usize::MAX {
                        fdist[g] = fdist[f] + 1;
                        queue.push_back(g);
                    }
                }
            }
        }
        for (v, l) in layer.iter_mut().enumerate() {
            if self.rot[v].is_empty() {
                *l = 1;
            }
        }
        layer
    }

    /// Smallest layer count over all choices of outer face for a connected
    /// rotation system, with the first face attaining it.
    pub fn best_outer_face(&self, faces: &Faces) -> (usize, Option<usize>) {
        if faces.walks.is_empty() {
            return (usize::from(self.n() > 0), None);
        }
        let mut best = (usize::MAX, None);
        for f in 0..faces.walks.len() {
            let depth =
                self.face_distance_layers(faces, &[f]).into_iter().filter(|&l| l != usize::MAX).max().unwrap_or(0);
            if depth < best.0 {
                best = (depth, Some(f));
            }
        }
        best
    }

    /// Layer decomposition by repeated peeling of the outer region.
    ///
    /// `outer` holds one dart per component with edges. Each round collects
    /// the vertices on outer faces (plus vertices left without edges),
    /// deletes them, re-traces the induced rotation system and marks as outer
    /// every new face that absorbed a face touching a deleted vertex.
    pub fn peel_layers(&self, outer: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
        let n = self.n();
        let mut alive = vec![true; n];
        let mut current = self.clone();
        let mut marked: HashSet<(usize, usize)> = outer.iter().copied().collect();
        let mut layers = Vec::new();
        let mut remaining = n;
        while remaining > 0 {
            let faces = current.faces();
            let outer_faces: BTreeSet<usize> = (0..faces.dart_count())
                .filter(|&d| marked.contains(&(faces.tail(d), faces.head(d))))
                .map(|d| faces.face_of[d])
                .collect();
            let mut in_layer = vec![false; n];
            for v in 0..n {
                if alive[v] && current.rot[v].is_empty() {
                    in_layer[v] = true;
                }
            }
            for &f in &outer_faces {
                for &d in &faces.walks[f] {
                    in_layer[faces.tail(d)] = true;
                }
            }
            let layer: Vec<usize> = (0..n).filter(|&v| in_layer[v]).collect();
            if layer.is_empty() {
                return Err(Error::Embedding("outer region does not reach the remaining vertices".into()));
            }
            let absorbed: HashSet<usize> =
                layer.iter().flat_map(|&v| faces.out_darts(v).map(|d| faces.face_of[d]).collect::<Vec<_>>()).collect();
            marked = (0..faces.dart_count())
                .filter(|&d| {
                    absorbed.contains(&faces.face_of[d]) && !in_layer[faces.tail(d)] && !in_layer[faces.head(d)]
                })
                .map(|d| (faces.tail(d), faces.head(d)))
                .collect();
            for &v in &layer {
                alive[v] = false;
            }
            remaining -= layer.len();
            for l in current.rot.iter_mut() {
                l.retain(|&w| !in_layer[w]);
            }
            // deleted vertices stay in the index space with empty rotations
            for &v in &layer {
                current.rot[v].clear();
            }
            layers.push(layer);
        }
        Ok(layers)
    }
}

/// A plane embedding: a planar rotation system plus a designated outer face
/// for every component with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneEmbedding {
    graph: SimpleGraph,
    rotation: BTreeMap<Vertex, Vec<Vertex>>,
    outer: Vec<(Vertex, Vertex)>,
}

/// Partition of the vertices into layers `L1, ..., Lr`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub layers: Vec<Vec<Vertex>>,
}

impl LayerDecomposition {
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}

impl PlaneEmbedding {
    /// Validates the rotation system against `graph`, checks planarity via
    /// Euler's formula and checks that each component with edges has exactly
    /// one outer dart.
    pub fn new(
        graph: SimpleGraph,
        rotation: BTreeMap<Vertex, Vec<Vertex>>,
        outer_darts: Vec<(Vertex, Vertex)>,
    ) -> Result<Self> {
        let e = PlaneEmbedding { graph, rotation, outer: outer_darts };
        let (ig, rot) = e.indexed_rotation()?;
        let faces = rot.faces();
        if !rot.is_planar_rotation(&faces) {
            return Err(Error::Embedding("rotation system violates Euler's formula".into()));
        }
        let index: BTreeMap<&str, usize> = ig.names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let comps = ig.components();
        let mut comp_of = vec![0; ig.n()];
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        let mut covered = vec![0usize; comps.len()];
        for (a, b) in &e.outer {
            let (Some(&u), Some(&v)) = (index.get(a.as_str()), index.get(b.as_str())) else {
                return Err(Error::Embedding(format!("outer dart {a}->{b} uses unknown vertices")));
            };
            if !ig.adj[u].contains(&v) {
                return Err(Error::Embedding(format!("outer dart {a}->{b} is not an edge")));
            }
            covered[comp_of[u]] += 1;
        }
        for (c, vs) in comps.iter().enumerate() {
            let has_edges = vs.iter().any(|&v| !ig.adj[v].is_empty());
            if has_edges && covered[c] != 1 {
                return Err(Error::Embedding(format!(
                    "component containing `{}` needs exactly one outer face",
                    ig.names[vs[0]]
                )));
            }
        }
        Ok(e)
    }

    /// Builds an embedding whose outer faces are given as vertex walks (one
    /// per component with edges), as in the embedding JSON format.
    pub fn from_outer_walks(
        graph: SimpleGraph,
        rotation: BTreeMap<Vertex, Vec<Vertex>>,
        walks: &[Vec<Vertex>],
    ) -> Result<Self> {
        let probe = PlaneEmbedding { graph: graph.clone(), rotation: rotation.clone(), outer: Vec::new() };
        let (ig, rot) = probe.indexed_rotation()?;
        let faces = rot.faces();
        let index: BTreeMap<&str, usize> = ig.names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut darts = Vec::new();
        for walk in walks {
            if walk.len() < 2 {
                if walk.len() == 1
                    && ig.adj.get(*index.get(walk[0].as_str()).unwrap_or(&usize::MAX)).is_some_and(|l| l.is_empty())
                {
                    continue;
                }
                return Err(Error::Embedding("outer face walk needs at least two vertices".into()));
            }
            let (Some(&u), Some(&v)) = (index.get(walk[0].as_str()), index.get(walk[1].as_str())) else {
                return Err(Error::Embedding("outer face walk uses unknown vertices".into()));
            };
            let d = faces
                .dart(&rot, u, v)
                .ok_or_else(|| Error::Embedding(format!("{}-{} is not an edge", walk[0], walk[1])))?;
            let traced: Vec<usize> = faces.vertex_walk(faces.face_of[d]);
            let start = traced
                .iter()
                .enumerate()
                .position(|(i, &x)| x == u && traced[(i + 1) % traced.len()] == v)
                .expect("dart lies on its own face");
            let given: Vec<usize> = walk.iter().map(|x| index.get(x.as_str()).copied().unwrap_or(usize::MAX)).collect();
            let rotated: Vec<usize> = (0..traced.len()).map(|i| traced[(start + i) % traced.len()]).collect();
            if rotated != given {
                return Err(Error::Embedding(format!("walk starting {}->{} is not a face", walk[0], walk[1])));
            }
            darts.push((walk[0].clone(), walk[1].clone()));
        }
        PlaneEmbedding::new(graph, rotation, darts)
    }

    /// Embedding of `g` from an index rotation, with the given outer face ids.
    pub(crate) fn from_index(ig: &IndexGraph, rot: &Rotation, faces: &Faces, outer_faces: &[usize]) -> Self {
        let rotation = ig
            .names
            .iter()
            .enumerate()
            .map(|(u, name)| (name.clone(), rot.rot[u].iter().map(|&v| ig.names[v].clone()).collect()))
            .collect();
        let outer = outer_faces
            .iter()
            .map(|&f| {
                let d = faces.walks[f][0];
                (ig.names[faces.tail(d)].clone(), ig.names[faces.head(d)].clone())
            })
            .collect();
        PlaneEmbedding { graph: ig.to_graph(), rotation, outer }
    }

    pub(crate) fn indexed_rotation(&self) -> Result<(IndexGraph, Rotation)> {
        let ig = IndexGraph::from_graph(&self.graph);
        let index: BTreeMap<&str, usize> = ig.names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut rot = vec![Vec::new(); ig.n()];
        for (v, order) in &self.rotation {
            let &u =
                index.get(v.as_str()).ok_or_else(|| Error::Embedding(format!("rotation for unknown vertex `{v}`")))?;
            for w in order {
                let &x = index
                    .get(w.as_str())
                    .ok_or_else(|| Error::Embedding(format!("rotation at `{v}` names unknown vertex `{w}`")))?;
                rot[u].push(x);
            }
        }
        for (u, l) in rot.iter().enumerate() {
            let mut sorted = l.clone();
            sorted.sort_unstable();
            if sorted != ig.adj[u] {
                return Err(Error::Embedding(format!(
                    "rotation at `{}` does not list exactly its incident edges",
                    ig.names[u]
                )));
            }
        }
        let rot = Rotation { rot };
        rot.check_structure()?;
        Ok((ig, rot))
    }

    fn outer_face_ids(&self, ig: &IndexGraph, rot: &Rotation, faces: &Faces) -> Vec<usize> {
        let index: BTreeMap<&str, usize> = ig.names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        self.outer
            .iter()
            .map(|(a, b)| faces.face_of[faces.dart(rot, index[a.as_str()], index[b.as_str()]).expect("validated dart")])
            .collect()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &BTreeMap<Vertex, Vec<Vertex>> {
        &self.rotation
    }

    pub fn outer_darts(&self) -> &[(Vertex, Vertex)] {
        &self.outer
    }

    /// All face walks, as vertex sequences.
    pub fn faces(&self) -> Vec<Vec<Vertex>> {
        let (ig, rot) = self.indexed_rotation().expect("validated embedding");
        let faces = rot.faces();
        (0..faces.walks.len())
            .map(|f| faces.vertex_walk(f).into_iter().map(|v| ig.names[v].clone()).collect())
            .collect()
    }

    /// The outer face walk of each component with edges.
    pub fn outer_faces(&self) -> Vec<Vec<Vertex>> {
        let (ig, rot) = self.indexed_rotation().expect("validated embedding");
        let faces = rot.faces();
        self.outer_face_ids(&ig, &rot, &faces)
            .into_iter()
            .map(|f| faces.vertex_walk(f).into_iter().map(|v| ig.names[v].clone()).collect())
            .collect()
    }

    pub fn layer_decomposition(&self) -> LayerDecomposition {
        let (ig, rot) = self.indexed_rotation().expect("validated embedding");
        let index: BTreeMap<&str, usize> = ig.names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let outer: Vec<(usize, usize)> =
            self.outer.iter().map(|(a, b)| (index[a.as_str()], index[b.as_str()])).collect();
        let layers = rot.peel_layers(&outer).expect("valid plane embeddings always peel");
        LayerDecomposition {
            layers: layers.into_iter().map(|l| l.into_iter().map(|v| ig.names[v].clone()).collect()).collect(),
        }
    }

    /// Number of layers, computed from face distances to the outer faces.
    pub fn layer_count(&self) -> usize {
        let (ig, rot) = self.indexed_rotation().expect("validated embedding");
        let faces = rot.faces();
        let outer = self.outer_face_ids(&ig, &rot, &faces);
        rot.face_distance_layers(&faces, &outer).into_iter().max().unwrap_or(0)
    }
}

/// Face walks of a rotation system over `graph`, rejecting rotation systems
/// that are malformed or not planar.
pub fn trace_faces(graph: &SimpleGraph, rotation: &BTreeMap<Vertex, Vec<Vertex>>) -> Result<Vec<Vec<Vertex>>> {
    let probe = PlaneEmbedding { graph: graph.clone(), rotation: rotation.clone(), outer: Vec::new() };
    let (ig, rot) = probe.indexed_rotation()?;
    let faces = rot.faces();
    if !rot.is_planar_rotation(&faces) {
        return Err(Error::Embedding("rotation system violates Euler's formula".into()));
    }
    Ok((0..faces.walks.len())
        .map(|f| faces.vertex_walk(f).into_iter().map(|v| ig.names[v].clone()).collect())
        .collect())
}

/// Layer decomposition of a plane embedding.
pub fn layer_decomposition(e: &PlaneEmbedding) -> LayerDecomposition {
    e.layer_decomposition()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(lists: &[&[usize]]) -> Rotation {
        Rotation { rot: lists.iter().map(|l| l.to_vec()).collect() }
    }

    #[test]
    fn triangle_has_two_faces() {
        let r = rot(&[&[1, 2], &[2, 0], &[0, 1]]);
        let f = r.faces();
        assert_eq!(f.walks.len(), 2);
        assert!(r.is_planar_rotation(&f));
    }

    #[test]
    fn single_edge_has_one_face() {
        let r = rot(&[&[1], &[0]]);
        let f = r.faces();
        assert_eq!(f.walks.len(), 1);
        assert!(r.is_planar_rotation(&f));
    }

    #[test]
    fn k4_planar_rotation_has_four_faces() {
        // vertex 3 in the middle of triangle 0,1,2 (counter-clockwise orders)
        let r = rot(&[&[1, 3, 2], &[2, 3, 0], &[0, 3, 1], &[0, 1, 2]]);
        let f = r.faces();
        assert_eq!(f.walks.len(), 4);
        assert!(r.is_planar_rotation(&f));
        let (best, _) = r.best_outer_face(&f);
        assert_eq!(best, 2);
    }

    #[test]
    fn k4_bad_rotation_is_not_planar() {
        let r = rot(&[&[1, 2, 3], &[0, 2, 3], &[0, 1, 3], &[0, 1, 2]]);
        let f = r.faces();
        assert!(!r.is_planar_rotation(&f));
    }

    #[test]
    fn peel_k4_gives_two_layers() {
        let r = rot(&[&[1, 3, 2], &[2, 3, 0], &[0, 3, 1], &[0, 1, 2]]);
        let f = r.faces();
        let outer = f.walks.iter().position(|w| w.iter().all(|&d| f.tail(d) != 3)).unwrap();
        let d = f.walks[outer][0];
        let layers = r.peel_layers(&[(f.tail(d), f.head(d))]).unwrap();
        assert_eq!(layers, vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn cycle_is_one_layer() {
        let r = rot(&[&[1, 3], &[2, 0], &[3, 1], &[0, 2]]);
        let layers = r.peel_layers(&[(0, 1)]).unwrap();
        assert_eq!(layers.len(), 1);
    }

    #[test]
    fn embedding_from_outer_walk_round_trips() {
        let g = SimpleGraph::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let rotation: BTreeMap<Vertex, Vec<Vertex>> =
            [("a", vec!["b", "c"]), ("b", vec!["c", "a"]), ("c", vec!["a", "b"])]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.into_iter().map(String::from).collect()))
                .collect();
        let faces = trace_faces(&g, &rotation).unwrap();
        assert_eq!(faces.len(), 2);
        let e = PlaneEmbedding::from_outer_walks(g.clone(), rotation.clone(), &[faces[0].clone()]).unwrap();
        assert_eq!(e.outer_faces(), vec![faces[0].clone()]);
        assert_eq!(e.layer_decomposition().len(), 1);
        let bad = PlaneEmbedding::from_outer_walks(g, rotation, &[vec!["a".into(), "b".into(), "a".into()]]);
        assert!(bad.is_err());
    }

    #[test]
    fn rotation_must_list_incident_edges() {
        let g = SimpleGraph::new(["a", "b"], [("a", "b")]).unwrap();
        let rotation: BTreeMap<Vertex, Vec<Vertex>> =
            [("a".to_string(), vec!["b".to_string()]), ("b".to_string(), vec![])].into_iter().collect();
        assert!(matches!(trace_faces(&g, &rotation), Err(Error::Embedding(_))));
    }
}
