//! Outerplanarity numbers by exhaustive embedding enumeration.
//!
//! Embeddings of a connected graph are enumerated by inserting edges one at a
//! time, each new edge having at least one endpoint already drawn: a pendant
//! edge goes into one of the corners at its drawn endpoint, a chord joins two
//! corners of a common face. Every planar rotation system arises exactly
//! once. The best layer count over all outer faces of a partial embedding
//! never exceeds that of any completion, so branches whose partial bound
//! already exceeds the target are cut.

use super::embedding::{PlaneEmbedding, Rotation};
use super::graph::{IndexGraph, SimpleGraph};
use super::planarity::planar_rotation;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Layers and outer darts of a witness embedding, by vertex index.
pub(crate) type IndexWitness = (Vec<Vec<usize>>, Vec<(usize, usize)>);

/// Result of computing the outerplanarity number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outerplanarity {
    /// The minimum layer count, with an embedding attaining it.
    Exact { layers: usize, witness: PlaneEmbedding },
    /// The budget ran out; `witness` attains `best_bound` layers.
    Unknown { best_bound: usize, witness: PlaneEmbedding },
}

impl Outerplanarity {
    pub fn witness(&self) -> &PlaneEmbedding {
        match self {
            Outerplanarity::Exact { witness, .. } | Outerplanarity::Unknown { witness, .. } => witness,
        }
    }
}

/// Three-valued answer of a budgeted decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<T> {
    Yes(T),
    No,
    Unknown,
}

impl<T> Decision<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown)
    }
}

/// Switches for the exact search. The shortcuts never change answers; turning
/// them off exercises the plain enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Decide `r = 1` by testing planarity of the graph plus an apex vertex.
    pub apex_test: bool,
    /// Strip degree-one vertices before searching and re-attach them after.
    pub strip_pendants: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { apex_test: true, strip_pendants: true }
    }
}

/// Minimum number of layers over all plane embeddings of a planar graph.
pub fn outerplanarity_number(g: &SimpleGraph, budget: &mut Budget) -> Result<Outerplanarity> {
    outerplanarity_number_with(g, budget, SearchOptions::default())
}

pub fn outerplanarity_number_with(g: &SimpleGraph, budget: &mut Budget, opts: SearchOptions) -> Result<Outerplanarity> {
    let ig = IndexGraph::from_graph(g);
    let start = planar_rotation(&ig).ok_or_else(|| Error::Domain("graph is not planar".into()))?;
    let mut rot = vec![Vec::new(); ig.n()];
    let mut outer = Vec::new();
    let mut layers = 0;
    let mut exact = true;
    for comp in ig.components() {
        let sub = ig.subgraph(&comp);
        let sub_start = restrict(&start, &comp);
        let (value, is_exact, found) = component_number(&sub, &sub_start, budget, opts);
        layers = layers.max(value);
        exact &= is_exact;
        merge_component(&mut rot, &mut outer, &comp, found);
    }
    let witness = assemble(&ig, rot, &outer);
    Ok(if exact {
        Outerplanarity::Exact { layers, witness }
    } else {
        Outerplanarity::Unknown { best_bound: layers, witness }
    })
}

/// Whether `g` has a plane embedding with at most `r` layers.
pub fn is_r_outerplanar(g: &SimpleGraph, r: usize, budget: &mut Budget) -> Decision<PlaneEmbedding> {
    is_r_outerplanar_with(g, r, budget, SearchOptions::default())
}

pub fn is_r_outerplanar_with(
    g: &SimpleGraph,
    r: usize,
    budget: &mut Budget,
    opts: SearchOptions,
) -> Decision<PlaneEmbedding> {
    let ig = IndexGraph::from_graph(g);
    match decide_index(&ig, r, budget, opts) {
        Decision::Yes((rot, outer)) => Decision::Yes(assemble(&ig, rot, &outer)),
        Decision::No => Decision::No,
        Decision::Unknown => Decision::Unknown,
    }
}

/// Index-level decision returning a rotation and one outer dart per
/// component with edges.
pub(crate) fn decide_index(
    ig: &IndexGraph,
    r: usize,
    budget: &mut Budget,
    opts: SearchOptions,
) -> Decision<IndexWitness> {
    if ig.n() == 0 {
        return Decision::Yes((Vec::new(), Vec::new()));
    }
    if r == 0 {
        return Decision::No;
    }
    let Some(start) = planar_rotation(ig) else {
        return Decision::No;
    };
    let mut rot = vec![Vec::new(); ig.n()];
    let mut outer = Vec::new();
    let mut unknown = false;
    for comp in ig.components() {
        let sub = ig.subgraph(&comp);
        let sub_start = restrict(&start, &comp);
        match component_decide(&sub, &sub_start, r, budget, opts) {
            Decision::Yes(found) => merge_component(&mut rot, &mut outer, &comp, found),
            Decision::No => return Decision::No,
            Decision::Unknown => unknown = true,
        }
    }
    if unknown {
        Decision::Unknown
    } else {
        Decision::Yes((rot, outer))
    }
}

/// A connected embedding: rotation plus an outer dart (absent without edges).
type Found = (Rotation, Option<(usize, usize)>);

fn restrict(rot: &Rotation, comp: &[usize]) -> Rotation {
    let mut map = vec![usize::MAX; rot.n()];
    for (i, &v) in comp.iter().enumerate() {
        map[v] = i;
    }
    Rotation {
        rot: comp
            .iter()
            .map(|&v| rot.rot[v].iter().filter(|&&w| map[w] != usize::MAX).map(|&w| map[w]).collect())
            .collect(),
    }
}

fn merge_component(rot: &mut [Vec<usize>], outer: &mut Vec<(usize, usize)>, comp: &[usize], found: Found) {
    for (i, l) in found.0.rot.into_iter().enumerate() {
        rot[comp[i]] = l.into_iter().map(|w| comp[w]).collect();
    }
    if let Some((u, v)) = found.1 {
        outer.push((comp[u], comp[v]));
    }
}

fn assemble(ig: &IndexGraph, rot: Vec<Vec<usize>>, outer: &[(usize, usize)]) -> PlaneEmbedding {
    let rot = Rotation { rot };
    let faces = rot.faces();
    let outer_faces: Vec<usize> =
        outer.iter().map(|&(u, v)| faces.face_of[faces.dart(&rot, u, v).expect("outer dart exists")]).collect();
    PlaneEmbedding::from_index(ig, &rot, &faces, &outer_faces)
}

/// Layer count of `rot` with its best outer face, and that face's first dart.
fn best_of(rot: &Rotation) -> (usize, Option<(usize, usize)>) {
    let faces = rot.faces();
    let (layers, face) = rot.best_outer_face(&faces);
    (
        layers,
        face.map(|f| {
            let d = faces.walks[f][0];
            (faces.tail(d), faces.head(d))
        }),
    )
}

/// Exact number for a connected graph: decide `r = 1, 2, ...` up to the
/// layer count of the initial embedding, which is attained already.
fn component_number(
    g: &IndexGraph,
    start: &Rotation,
    budget: &mut Budget,
    opts: SearchOptions,
) -> (usize, bool, Found) {
    let (upper, dart) = best_of(start);
    let best = (start.clone(), dart);
    for r in 1..upper {
        match component_decide(g, start, r, budget, opts) {
            Decision::Yes(found) => return (r, true, found),
            Decision::No => {}
            Decision::Unknown => return (upper, false, best),
        }
    }
    (upper, true, best)
}

fn component_decide(
    g: &IndexGraph,
    start: &Rotation,
    r: usize,
    budget: &mut Budget,
    opts: SearchOptions,
) -> Decision<Found> {
    let (layers, dart) = best_of(start);
    if layers <= r {
        return Decision::Yes((start.clone(), dart));
    }
    if opts.apex_test && r == 1 {
        return apex_decide(g);
    }
    if opts.strip_pendants {
        let (core, removed) = strip_pendants(g);
        if !removed.is_empty() {
            let sub = g.subgraph(&core);
            let sub_start = restrict(start, &core);
            return match component_decide(&sub, &sub_start, r, budget, opts) {
                Decision::Yes(found) => Decision::Yes(reattach(g, &core, &removed, found)),
                other => other,
            };
        }
    }
    let mut search = Enumerator::new(g, r);
    match search.run(budget) {
        Some(true) => Decision::Yes(search.found.take().expect("witness recorded")),
        Some(false) => Decision::No,
        None => Decision::Unknown,
    }
}

/// A connected graph is outerplanar iff adding a vertex adjacent to all
/// vertices keeps it planar; deleting that vertex from such an embedding
/// leaves every vertex on the merged face.
fn apex_decide(g: &IndexGraph) -> Decision<Found> {
    let n = g.n();
    let with_apex = IndexGraph::from_edges(n + 1, g.edge_list().into_iter().chain((0..n).map(|v| (v, n))));
    match planar_rotation(&with_apex) {
        None => Decision::No,
        Some(rot) => {
            let rot = Rotation {
                rot: rot.rot[..n].iter().map(|l| l.iter().copied().filter(|&w| w != n).collect()).collect(),
            };
            let (layers, dart) = best_of(&rot);
            debug_assert_eq!(layers, 1);
            Decision::Yes((rot, dart))
        }
    }
}

/// Repeatedly removes degree-one vertices while at least three vertices
/// remain. Returns the kept vertices (increasing) and the removed ones in
/// removal order, each with its neighbour at removal time.
fn strip_pendants(g: &IndexGraph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = g.n();
    let mut deg: Vec<usize> = g.adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut left = n;
    let mut removed = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if left <= 2 {
                break;
            }
            if alive[v] && deg[v] == 1 {
                let u = g.adj[v].iter().copied().find(|&u| alive[u]).expect("live neighbour");
                alive[v] = false;
                deg[u] -= 1;
                left -= 1;
                removed.push((v, u));
                changed = true;
            }
        }
    }
    ((0..n).filter(|&v| alive[v]).collect(), removed)
}

/// Re-inserts stripped pendants, each into the corner at its neighbour that
/// lies on a face closest to the outer face, so no layer count grows.
fn reattach(g: &IndexGraph, core: &[usize], removed: &[(usize, usize)], found: Found) -> Found {
    let n = g.n();
    let mut rot = vec![Vec::new(); n];
    for (i, l) in found.0.rot.iter().enumerate() {
        rot[core[i]] = l.iter().map(|&w| core[w]).collect();
    }
    let mut outer = found.1.map(|(u, v)| (core[u], core[v]));
    for &(v, u) in removed.iter().rev() {
        let cur = Rotation { rot: rot.clone() };
        if rot[u].is_empty() {
            rot[u].push(v);
            rot[v].push(u);
            outer = Some((u, v));
            continue;
        }
        let faces = cur.faces();
        let outer_face = outer.map(|(a, b)| faces.face_of[faces.dart(&cur, a, b).expect("outer dart")]);
        let dist = cur.face_distance_layers_faces(&faces, outer_face.as_slice());
        // corner after neighbour x at u lies on the face of dart x -> u
        let pos = (0..rot[u].len())
            .min_by_key(|&k| {
                let x = rot[u][k];
                dist[faces.face_of[faces.dart(&cur, x, u).expect("dart")]]
            })
            .expect("u has neighbours");
        rot[u].insert(pos + 1, v);
        rot[v].push(u);
    }
    (Rotation { rot }, outer)
}

/// Lower bound on the layer count of every completion of `rot`: the best
/// face-distance depth over all choices of outer face, ignoring vertices that
/// carry no edges yet.
fn partial_bound(rot: &Rotation, cap: usize) -> usize {
    let faces = rot.faces();
    let mut best = usize::MAX;
    for f in 0..faces.walks.len() {
        let layers = rot.face_distance_layers(&faces, &[f]);
        let depth = layers.iter().zip(&rot.rot).filter(|(_, l)| !l.is_empty()).map(|(&d, _)| d).max().unwrap_or(1);
        best = best.min(depth);
        if best <= cap {
            break;
        }
    }
    if faces.walks.is_empty() {
        1
    } else {
        best
    }
}

/// Branching search over edge insertions for an embedding with at most
/// `target` layers.
struct Enumerator<'a> {
    g: &'a IndexGraph,
    order: Vec<(usize, usize, bool)>,
    target: usize,
    found: Option<Found>,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a IndexGraph, target: usize) -> Self {
        Enumerator { g, order: insertion_order(g), target, found: None }
    }

    /// `Some(true)` with a witness, `Some(false)` when exhausted, `None` when
    /// the budget ran out.
    fn run(&mut self, budget: &mut Budget) -> Option<bool> {
        let rot = Rotation { rot: vec![Vec::new(); self.g.n()] };
        self.dfs(rot, 0, budget)
    }

    fn dfs(&mut self, rot: Rotation, step: usize, budget: &mut Budget) -> Option<bool> {
        if !budget.tick() {
            return None;
        }
        if step > 0 && partial_bound(&rot, self.target) > self.target {
            return Some(false);
        }
        if step == self.order.len() {
            let (layers, dart) = best_of(&rot);
            debug_assert!(layers <= self.target);
            self.found = Some((rot, dart));
            return Some(true);
        }
        let (u, w, pendant) = self.order[step];
        for next in insertions(&rot, u, w, pendant) {
            match self.dfs(next, step + 1, budget) {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

/// Edges in BFS order from vertex 0: each newly reached vertex contributes
/// its tree edge (flagged pendant) followed by chords to vertices already
/// drawn. Entries are `(drawn endpoint, other endpoint, pendant)`.
fn insertion_order(g: &IndexGraph) -> Vec<(usize, usize, bool)> {
    let n = g.n();
    let mut drawn = vec![false; n];
    let mut order = Vec::with_capacity(g.m());
    if n == 0 {
        return order;
    }
    drawn[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in &g.adj[u] {
            if drawn[w] {
                continue;
            }
            drawn[w] = true;
            order.push((u, w, true));
            for &x in &g.adj[w] {
                if x != u && drawn[x] {
                    order.push((x, w, false));
                }
            }
            queue.push_back(w);
        }
    }
    order
}

/// All ways to add edge `u-w` to the plane embedding `rot`.
fn insertions(rot: &Rotation, u: usize, w: usize, pendant: bool) -> Vec<Rotation> {
    let mut out = Vec::new();
    if pendant {
        let d = rot.rot[u].len();
        for k in 0..d.max(1) {
            let mut next = rot.clone();
            next.rot[u].insert(if d == 0 { 0 } else { k + 1 }, w);
            next.rot[w].push(u);
            out.push(next);
        }
        return out;
    }
    let faces = rot.faces();
    // corners at u and w, as (face, neighbour preceding the corner)
    let corners = |v: usize| -> Vec<(usize, usize)> {
        rot.rot[v].iter().map(|&x| (faces.face_of[faces.dart(rot, x, v).expect("dart")], x)).collect()
    };
    let cu = corners(u);
    let cw = corners(w);
    for &(fu, xu) in &cu {
        for &(fw, xw) in &cw {
            if fu != fw {
                continue;
            }
            let mut next = rot.clone();
            let pu = next.rot[u].iter().position(|&y| y == xu).unwrap();
            next.rot[u].insert(pu + 1, w);
            let pw = next.rot[w].iter().position(|&y| y == xw).unwrap();
            next.rot[w].insert(pw + 1, u);
            out.push(next);
        }
    }
    out
}

impl Rotation {
    /// Face distances (0 for outer faces) used to pick re-attachment corners.
    fn face_distance_layers_faces(&self, faces: &super::embedding::Faces, outer: &[usize]) -> Vec<usize> {
        let mut fdist = vec![usize::MAX; faces.walks.len()];
        let mut queue = std::collections::VecDeque::new();
        for &f in outer {
            fdist[f] = 0;
            queue.push_back(f);
        }
        while let Some(f) = queue.pop_front() {
            for &d in &faces.walks[f] {
                for e in faces.out_darts(faces.tail(d)) {
                    let g = faces.face_of[e];
                    if fdist[g] == usize::MAX {
                        fdist[g] = fdist[f] + 1;
                        queue.push_back(g);
                    }
                }
            }
        }
        fdist
    }
}

/// Planarity of a graph with an extra vertex adjacent to all others.
#[cfg(test)]
fn is_outerplanar_index(g: &IndexGraph) -> bool {
    let n = g.n();
    let with_apex = IndexGraph::from_edges(n + 1, g.edge_list().into_iter().chain((0..n).map(|v| (v, n))));
    super::planarity::is_planar_index(&with_apex)
}
