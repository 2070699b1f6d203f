//! Supports, representative supports and exhaustive support search.
//!
//! A support search only ever adds edges joining two vertices of a common
//! hyperedge: deleting any other edge from a support keeps every induced
//! subgraph `G[F]` intact and cannot hurt planarity or layer counts.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, Vertex};
use crate::planegeom::{
    decide_index, edge, embedding_with_best_outer_faces, is_planar_index, planar_rotation, Decision, IndexGraph,
    PlaneEmbedding, Rotation, SearchOptions, SimpleGraph,
};

pub type VertexPairs = Vec<(Vertex, Vertex)>;

/// Target of a support search: at most `r` layers, or planarity alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerBound {
    Layers(usize),
    PlanarOnly,
}

/// A support together with an optional witness embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCertificate {
    pub graph: SimpleGraph,
    pub embedding: Option<PlaneEmbedding>,
    pub layers_used: Option<usize>,
}

impl SupportCertificate {
    fn with_embedding(embedding: PlaneEmbedding) -> Self {
        let layers = embedding.layer_decomposition().len();
        SupportCertificate { graph: embedding.graph().clone(), embedding: Some(embedding), layers_used: Some(layers) }
    }
}

/// Result of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SupportCertificate),
    None,
    Unknown,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&SupportCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, SearchOutcome::None)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, SearchOutcome::Unknown)
    }
}

/// Counters for one edge-count level of the search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub level: usize,
    pub nodes: u64,
    pub leaves: u64,
    pub pruned_unconnectable: u64,
    pub pruned_nonplanar: u64,
    pub pruned_already_support: u64,
    pub millis: u128,
}

impl LevelStats {
    fn absorb(&mut self, o: &LevelStats) {
        self.nodes += o.nodes;
        self.leaves += o.leaves;
        self.pruned_unconnectable += o.pruned_unconnectable;
        self.pruned_nonplanar += o.pruned_nonplanar;
        self.pruned_already_support += o.pruned_already_support;
    }
}

/// Search statistics.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Total search-node expansions, including embedding enumeration.
    pub nodes: u64,
    pub candidate_edges: usize,
    pub forced_edges: usize,
    pub free_edges: usize,
    pub levels: Vec<LevelStats>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

/// Tuning for [`search_support`].
#[derive(Clone, Copy)]
pub struct SearchConfig<'a> {
    pub budget: u64,
    /// Worker threads; `1` searches sequentially.
    pub jobs: usize,
    pub outerplanarity: SearchOptions,
    /// Called after every completed level.
    pub on_level: Option<&'a (dyn Fn(&LevelStats) + Sync)>,
}

impl Default for SearchConfig<'_> {
    fn default() -> Self {
        SearchConfig {
            budget: crate::DEFAULT_BUDGET,
            jobs: 1,
            outerplanarity: SearchOptions::default(),
            on_level: None,
        }
    }
}

impl std::fmt::Debug for SearchConfig<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SearchConfig")
            .field("budget", &self.budget)
            .field("jobs", &self.jobs)
            .field("outerplanarity", &self.outerplanarity)
            .finish()
    }
}

fn same_vertices(g: &SimpleGraph, h: &Hypergraph) -> bool {
    g.n() == h.n() && g.vertices().iter().zip(h.vertices()).all(|(a, b)| a == b)
}

/// Whether every hyperedge induces a connected subgraph of `g`.
pub fn is_support(g: &SimpleGraph, h: &Hypergraph) -> Result<bool> {
    if !same_vertices(g, h) {
        return Err(Error::Input("graph and hypergraph have different vertex sets".into()));
    }
    Ok(supports_hyperedges(g, h))
}

fn supports_hyperedges(g: &SimpleGraph, h: &Hypergraph) -> bool {
    (0..h.m()).all(|i| g.is_connected_on(h.hyperedge(i)))
}

/// Whether `g` lives on a subset `W` of the vertices, supports the hypergraph
/// shrunken to `W`, and every vertex outside `W` is covered by one inside.
pub fn is_representative_support(g: &SimpleGraph, h: &Hypergraph) -> bool {
    if !g.vertices().iter().all(|v| h.contains_vertex(v)) {
        return false;
    }
    let kept: Vec<&str> = g.vertices().iter().map(String::as_str).collect();
    let shrunk = h.shrink(&kept).expect("vertices checked");
    if !supports_hyperedges(g, &shrunk) {
        return false;
    }
    let inside: Vec<usize> = kept.iter().map(|v| h.index_of(v).unwrap()).collect();
    (0..h.n()).filter(|u| !g.contains_vertex(h.vertex(*u))).all(|u| inside.iter().any(|&w| h.covers_index(w, u)))
}

/// Turns a representative support into a support on all vertices by hanging
/// every missing vertex as a pendant of the smallest vertex covering it.
pub fn extend_representative(g: &SimpleGraph, h: &Hypergraph) -> Result<SimpleGraph> {
    if !is_representative_support(g, h) {
        return Err(Error::Domain("graph is not a representative support".into()));
    }
    let inside: Vec<usize> = g.vertices().iter().map(|v| h.index_of(v).unwrap()).collect();
    let mut out = g.clone();
    let mut attach = Vec::new();
    for u in 0..h.n() {
        let name = h.vertex(u);
        if g.contains_vertex(name) {
            continue;
        }
        let w = inside.iter().copied().find(|&w| h.covers_index(w, u)).expect("covered");
        attach.push((name.to_string(), h.vertex(w).to_string()));
    }
    for (u, w) in attach {
        out.add_vertex(u.clone());
        out.add_edge(&u, &w)?;
    }
    debug_assert!(is_support(&out, h).unwrap_or(false));
    if !supports_hyperedges(&out, h) {
        return Err(Error::Domain("extension is not a support".into()));
    }
    Ok(out)
}

/// Deletes a degree-one vertex from a support.
pub fn remove_twin_from_support(g: &SimpleGraph, v: &str) -> Result<SimpleGraph> {
    if !g.contains_vertex(v) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let d = g.degree(v);
    if d != 1 {
        return Err(Error::Domain(format!("`{v}` has degree {d}, expected 1")));
    }
    Ok(g.without_vertex(v))
}

/// Searches for a support of a connected hypergraph meeting `bound`.
pub fn find_r_outerplanar_support(h: &Hypergraph, bound: LayerBound, budget: u64) -> Result<SearchReport> {
    if !h.is_connected() {
        return Err(Error::Input("hypergraph is not connected".into()));
    }
    search_support(h, bound, &SearchConfig { budget, ..SearchConfig::default() })
}

/// Exhaustive search over subsets of within-hyperedge vertex pairs, by
/// increasing number of added edges and lexicographically within a count.
/// Accepts disconnected hypergraphs; at most 64 vertices.
pub fn search_support(h: &Hypergraph, bound: LayerBound, config: &SearchConfig) -> Result<SearchReport> {
    let mut budget = Budget::new(config.budget);
    search_support_budget(h, bound, config, &mut budget)
}

fn search_support_budget(
    h: &Hypergraph,
    bound: LayerBound,
    config: &SearchConfig,
    budget: &mut Budget,
) -> Result<SearchReport> {
    if h.n() > 64 {
        return Err(Error::Domain(format!("support search handles at most 64 vertices, got {}", h.n())));
    }
    if bound == LayerBound::Layers(0) && h.n() > 0 {
        return Ok(SearchReport { outcome: SearchOutcome::None, stats: SearchStats::default() });
    }
    let ctx = Context::new(h, bound, config.outerplanarity);
    let mut stats = SearchStats {
        nodes: 0,
        candidate_edges: ctx.forced.len() + ctx.free.len(),
        forced_edges: ctx.forced.len(),
        free_edges: ctx.free.len(),
        levels: Vec::new(),
    };
    let start_used = budget.used();
    let outcome = ctx.run(config, budget, &mut stats);
    stats.nodes = budget.used() - start_used;
    Ok(SearchReport { outcome, stats })
}

/// Smallest representative support: vertex subsets `W` by increasing size,
/// one per choice of how many vertices to keep from each twin class.
pub fn find_min_representative_support(h: &Hypergraph, bound: LayerBound, budget: u64) -> Result<SearchReport> {
    if !h.is_connected() {
        return Err(Error::Input("hypergraph is not connected".into()));
    }
    min_representative_support(h, bound, &SearchConfig { budget, ..SearchConfig::default() })
}

/// As [`find_min_representative_support`] but without the connectivity
/// requirement and with explicit configuration.
pub fn min_representative_support(h: &Hypergraph, bound: LayerBound, config: &SearchConfig) -> Result<SearchReport> {
    let mut budget = Budget::new(config.budget);
    let twins = h.twin_partition();
    let classes: Vec<Vec<usize>> =
        twins.classes().iter().map(|c| c.iter().map(|v| h.index_of(v).unwrap()).collect()).collect();
    let mut total = SearchStats::default();
    for size in 0..=h.n() {
        for counts in count_vectors(&classes.iter().map(Vec::len).collect::<Vec<_>>(), size) {
            if !budget.tick() {
                total.nodes = budget.used();
                return Ok(SearchReport { outcome: SearchOutcome::Unknown, stats: total });
            }
            let mut keep = vec![false; h.n()];
            for (c, &k) in classes.iter().zip(&counts) {
                for &v in &c[..k] {
                    keep[v] = true;
                }
            }
            let covered = (0..h.n()).all(|u| keep[u] || (0..h.n()).any(|w| keep[w] && h.covers_index(w, u)));
            if !covered {
                continue;
            }
            let sub = h.retain_indices(|i| keep[i]);
            let report = search_support_budget(&sub, bound, config, &mut budget)?;
            total.levels.extend(report.stats.levels);
            match report.outcome {
                SearchOutcome::None => {}
                other => {
                    total.nodes = budget.used();
                    return Ok(SearchReport { outcome: other, stats: total });
                }
            }
        }
    }
    total.nodes = budget.used();
    Ok(SearchReport { outcome: SearchOutcome::None, stats: total })
}

/// All vectors `c` with `0 <= c_i <= caps_i` summing to `total`, in
/// decreasing lexicographic order (larger counts for earlier classes first).
fn count_vectors(caps: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn rec(caps: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = caps[cur.len() + 1..].iter().sum();
        let hi = caps[cur.len()].min(left);
        for k in (0..=hi).rev() {
            if left - k > rest {
                break;
            }
            cur.push(k);
            rec(caps, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(caps, total, &mut Vec::new(), &mut out);
    out
}

/// Immutable search data shared by all workers.
struct Context<'h> {
    h: &'h Hypergraph,
    bound: LayerBound,
    outer: SearchOptions,
    /// Vertex masks of the hyperedges.
    hmask: Vec<u64>,
    forced: Vec<(usize, usize)>,
    free: Vec<(usize, usize)>,
    /// Hyperedges containing both endpoints of each free edge.
    free_hyperedges: Vec<Vec<usize>>,
}

/// Mutable state of one depth-first walk.
struct Walk<'c, 'h> {
    ctx: &'c Context<'h>,
    chosen_adj: Vec<u64>,
    avail_adj: Vec<u64>,
    chosen: Vec<usize>,
    chosen_edges: usize,
    stats: LevelStats,
    found: Option<SupportCertificate>,
    out_of_budget: bool,
    /// Shared lowest partition index that found a certificate; workers on
    /// later partitions stop early.
    cutoff: Option<(&'c AtomicUsize, usize)>,
}

impl<'h> Context<'h> {
    fn new(h: &'h Hypergraph, bound: LayerBound, outer: SearchOptions) -> Self {
        let hmask: Vec<u64> = h.hyperedges().iter().map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut cand = BTreeSet::new();
        let mut forced = BTreeSet::new();
        for e in h.hyperedges() {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    cand.insert((u, v));
                }
            }
            if e.len() == 2 {
                forced.insert((e[0], e[1]));
            }
        }
        let free: Vec<(usize, usize)> = cand.difference(&forced).copied().collect();
        let free_hyperedges = free
            .iter()
            .map(|&(u, v)| (0..hmask.len()).filter(|&i| hmask[i] >> u & 1 == 1 && hmask[i] >> v & 1 == 1).collect())
            .collect();
        Context { h, bound, outer, hmask, forced: forced.into_iter().collect(), free, free_hyperedges }
    }

    fn n(&self) -> usize {
        self.h.n()
    }

    fn run(&self, config: &SearchConfig, budget: &mut Budget, stats: &mut SearchStats) -> SearchOutcome {
        let n = self.n();
        let mut forced_adj = vec![0u64; n];
        for &(u, v) in &self.forced {
            forced_adj[u] |= 1 << v;
            forced_adj[v] |= 1 << u;
        }
        if !is_planar_index(&adj_graph(&forced_adj)) {
            return SearchOutcome::None;
        }
        let mut all_adj = forced_adj.clone();
        for &(u, v) in &self.free {
            all_adj[u] |= 1 << v;
            all_adj[v] |= 1 << u;
        }
        if !self.hmask.iter().all(|&m| connected_within(&all_adj, m)) {
            return SearchOutcome::None;
        }
        let f = self.free.len();
        for k in 0..=f {
            let started = Instant::now();
            let before = budget.used();
            let (outcome, mut level) = if k == 0 {
                let mut walk = Walk::new(self, &forced_adj, &all_adj, None);
                walk.leaf(budget);
                (walk.outcome(), walk.stats)
            } else if config.jobs <= 1 {
                self.level_sequential(k, &forced_adj, &all_adj, budget)
            } else {
                self.level_parallel(k, config.jobs, &forced_adj, &all_adj, budget)
            };
            level.level = k;
            level.nodes = budget.used() - before;
            level.millis = started.elapsed().as_millis();
            if let Some(cb) = config.on_level {
                cb(&level);
            }
            stats.levels.push(level);
            match outcome {
                SearchOutcome::None => {}
                other => return other,
            }
        }
        SearchOutcome::None
    }

    fn level_sequential(
        &self,
        k: usize,
        forced_adj: &[u64],
        all_adj: &[u64],
        budget: &mut Budget,
    ) -> (SearchOutcome, LevelStats) {
        let mut walk = Walk::new(self, forced_adj, all_adj, None);
        walk.dfs(0, k, budget);
        (walk.outcome(), walk.stats)
    }

    /// Splits the level by the first chosen free edge; partitions run on
    /// worker threads and the lowest partition with a result wins.
    fn level_parallel(
        &self,
        k: usize,
        jobs: usize,
        forced_adj: &[u64],
        all_adj: &[u64],
        budget: &mut Budget,
    ) -> (SearchOutcome, LevelStats) {
        let parts = self.free.len() + 1 - k;
        let next = AtomicUsize::new(0);
        let cutoff = AtomicUsize::new(usize::MAX);
        let remaining = budget.remaining();
        let results: Mutex<Vec<Option<(SearchOutcome, LevelStats, u64)>>> = Mutex::new(vec![None; parts]);
        std::thread::scope(|s| {
            for _ in 0..jobs.min(parts) {
                s.spawn(|| loop {
                    let p = next.fetch_add(1, Ordering::SeqCst);
                    if p >= parts {
                        break;
                    }
                    if p > cutoff.load(Ordering::SeqCst) {
                        continue;
                    }
                    let mut local = Budget::new(remaining);
                    let mut walk = Walk::new(self, forced_adj, all_adj, Some((&cutoff, p)));
                    walk.partition(p, k, &mut local);
                    let outcome = walk.outcome();
                    if !outcome.is_none() {
                        cutoff.fetch_min(p, Ordering::SeqCst);
                    }
                    results.lock().unwrap()[p] = Some((outcome, walk.stats, local.used()));
                });
            }
        });
        let mut level = LevelStats::default();
        let mut used = 0u64;
        let mut outcome = SearchOutcome::None;
        for (o, st, u) in results.into_inner().unwrap().into_iter().flatten() {
            level.absorb(&st);
            used = used.saturating_add(u);
            if outcome.is_none() && !o.is_none() {
                outcome = o;
            }
        }
        budget.charge(used);
        if budget.exhausted() && !outcome.is_found() {
            outcome = SearchOutcome::Unknown;
        }
        (outcome, level)
    }

    fn edges_of(&self, chosen: &[usize]) -> Vec<(usize, usize)> {
        let mut edges = self.forced.clone();
        edges.extend(chosen.iter().map(|&i| self.free[i]));
        edges
    }

    /// The support graph on all hypergraph vertices.
    fn graph_of(&self, edges: &[(usize, usize)]) -> IndexGraph {
        let mut ig = IndexGraph::from_edges(self.n(), edges.iter().copied());
        ig.names = self.h.vertices().to_vec();
        ig
    }
}

impl<'c, 'h> Walk<'c, 'h> {
    fn new(
        ctx: &'c Context<'h>,
        forced_adj: &[u64],
        all_adj: &[u64],
        cutoff: Option<(&'c AtomicUsize, usize)>,
    ) -> Self {
        Walk {
            ctx,
            chosen_adj: forced_adj.to_vec(),
            avail_adj: all_adj.to_vec(),
            chosen: Vec::new(),
            chosen_edges: ctx.forced.len(),
            stats: LevelStats::default(),
            found: None,
            out_of_budget: false,
            cutoff,
        }
    }

    fn outcome(&mut self) -> SearchOutcome {
        if let Some(c) = self.found.take() {
            SearchOutcome::Found(c)
        } else if self.out_of_budget {
            SearchOutcome::Unknown
        } else {
            SearchOutcome::None
        }
    }

    fn done(&self) -> bool {
        self.found.is_some() || self.out_of_budget
    }

    fn cancelled(&self) -> bool {
        self.cutoff.is_some_and(|(c, p)| c.load(Ordering::Relaxed) < p)
    }

    /// Runs the part of a level whose first chosen free edge is `p`.
    fn partition(&mut self, p: usize, k: usize, budget: &mut Budget) {
        for i in 0..p {
            if !self.exclude(i) {
                return;
            }
        }
        if self.include(p) {
            self.dfs(p + 1, k - 1, budget);
        }
    }

    /// Drops free edge `i` from the available set. Returns `false` (and
    /// counts the prune) when some hyperedge can no longer be connected.
    fn exclude(&mut self, i: usize) -> bool {
        let (u, v) = self.ctx.free[i];
        self.avail_adj[u] &= !(1 << v);
        self.avail_adj[v] &= !(1 << u);
        let ok = self.ctx.free_hyperedges[i].iter().all(|&f| connected_within(&self.avail_adj, self.ctx.hmask[f]));
        if !ok {
            self.stats.pruned_unconnectable += 1;
        }
        ok
    }

    fn restore(&mut self, i: usize) {
        let (u, v) = self.ctx.free[i];
        self.avail_adj[u] |= 1 << v;
        self.avail_adj[v] |= 1 << u;
    }

    /// Adds free edge `i` to the chosen set. Returns `false` (and counts the
    /// prune) when the chosen graph stops being planar.
    fn include(&mut self, i: usize) -> bool {
        let (u, v) = self.ctx.free[i];
        self.chosen_adj[u] |= 1 << v;
        self.chosen_adj[v] |= 1 << u;
        self.chosen.push(i);
        self.chosen_edges += 1;
        let n = self.ctx.n();
        let planar = self.chosen_edges < 9 || {
            (n < 3 || self.chosen_edges <= 3 * n - 6) && is_planar_index(&adj_graph(&self.chosen_adj))
        };
        if !planar {
            self.stats.pruned_nonplanar += 1;
        }
        planar
    }

    fn uninclude(&mut self, i: usize) {
        let (u, v) = self.ctx.free[i];
        self.chosen_adj[u] &= !(1 << v);
        self.chosen_adj[v] &= !(1 << u);
        self.chosen.pop();
        self.chosen_edges -= 1;
    }

    fn is_support_now(&self) -> bool {
        self.ctx.hmask.iter().all(|&m| connected_within(&self.chosen_adj, m))
    }

    /// Chooses `need` more free edges from positions `pos..`.
    fn dfs(&mut self, pos: usize, need: usize, budget: &mut Budget) {
        if self.done() || self.cancelled() {
            return;
        }
        if !budget.tick() {
            self.out_of_budget = true;
            return;
        }
        self.stats.nodes += 1;
        if need == 0 {
            self.leaf(budget);
            return;
        }
        // a support that is already complete was tested at a lower level;
        // adding edges cannot make it pass
        if self.is_support_now() {
            self.stats.pruned_already_support += 1;
            return;
        }
        if self.ctx.free.len() - pos < need {
            return;
        }
        if self.include(pos) {
            self.dfs(pos + 1, need - 1, budget);
        }
        self.uninclude(pos);
        if self.done() {
            return;
        }
        if self.ctx.free.len() - pos > need && self.exclude(pos) {
            self.dfs(pos + 1, need, budget);
        }
        self.restore(pos);
    }

    fn leaf(&mut self, budget: &mut Budget) {
        self.stats.leaves += 1;
        if !self.is_support_now() {
            return;
        }
        let ig = self.ctx.graph_of(&self.ctx.edges_of(&self.chosen));
        match self.ctx.bound {
            LayerBound::PlanarOnly => {
                if let Some(rot) = planar_rotation(&ig) {
                    self.found = Some(SupportCertificate::with_embedding(embedding_with_best_outer_faces(&ig, &rot)));
                }
            }
            LayerBound::Layers(r) => match decide_index(&ig, r, budget, self.ctx.outer) {
                Decision::Yes((rot, outer)) => {
                    let rot = Rotation { rot };
                    let faces = rot.faces();
                    let outer_faces: Vec<usize> =
                        outer.iter().map(|&(u, v)| faces.face_of[faces.dart(&rot, u, v).unwrap()]).collect();
                    let e = PlaneEmbedding::from_index(&ig, &rot, &faces, &outer_faces);
                    self.found = Some(SupportCertificate::with_embedding(e));
                }
                Decision::No => {}
                Decision::Unknown => self.out_of_budget = true,
            },
        }
    }
}

/// Whether the vertices of `mask` are connected using only edges inside it.
fn connected_within(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut reach = mask & mask.wrapping_neg();
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v] & mask;
        }
        if next == reach {
            return reach == mask;
        }
        reach = next;
    }
}

fn adj_graph(adj: &[u64]) -> IndexGraph {
    let mut edges = Vec::new();
    for (u, &m) in adj.iter().enumerate() {
        let mut bits = m >> u >> 1 << 1 << u;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            edges.push((u, v));
        }
    }
    IndexGraph::from_edges(adj.len(), edges)
}

/// Names of the candidate pairs `{u, v}` lying inside some hyperedge, split
/// into forced pairs (size-two hyperedges) and free pairs, both sorted.
pub fn candidate_edges(h: &Hypergraph) -> (VertexPairs, VertexPairs) {
    let ctx = Context::new(h, LayerBound::PlanarOnly, SearchOptions::default());
    let name = |&(u, v): &(usize, usize)| edge(h.vertex(u), h.vertex(v));
    (ctx.forced.iter().map(name).collect(), ctx.free.iter().map(name).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(vs: &[&str], es: &[&[&str]]) -> Hypergraph {
        Hypergraph::new(vs.iter().copied(), es.iter().map(|e| e.to_vec())).unwrap()
    }

    fn g(vs: &[&str], es: &[(&str, &str)]) -> SimpleGraph {
        SimpleGraph::new(vs.iter().copied(), es.iter().copied()).unwrap()
    }

    #[test]
    fn support_checks() {
        let h = hg(&["a", "b", "c"], &[&["a", "b", "c"], &["a", "b"]]);
        assert!(is_support(&g(&["a", "b", "c"], &[("a", "b"), ("b", "c")]), &h).unwrap());
        assert!(!is_support(&g(&["a", "b", "c"], &[("a", "b")]), &h).unwrap());
        assert!(is_support(&g(&["a", "b"], &[]), &h).is_err());
        let empty = g(&["a", "b", "c"], &[]);
        assert!(!is_support(&empty, &h).unwrap());
    }

    #[test]
    fn representative_and_extension() {
        // b and c are twins
        let h = hg(&["a", "b", "c"], &[&["a", "b", "c"]]);
        let rep = g(&["a", "b"], &[("a", "b")]);
        assert!(is_representative_support(&rep, &h));
        let ext = extend_representative(&rep, &h).unwrap();
        assert!(ext.contains_edge("b", "c") || ext.contains_edge("a", "c"));
        assert!(is_support(&ext, &h).unwrap());
        let lonely = hg(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
        assert!(!is_representative_support(&g(&["a"], &[]), &lonely));
        assert!(extend_representative(&g(&["a"], &[]), &lonely).is_err());
    }

    #[test]
    fn extension_of_edgeless_hypergraph_is_a_star() {
        let h = hg(&["a", "b", "c"], &[]);
        let ext = extend_representative(&g(&["a"], &[]), &h).unwrap();
        assert_eq!(ext.m(), 2);
        assert!(ext.contains_edge("a", "b") && ext.contains_edge("a", "c"));
    }

    #[test]
    fn pendant_removal() {
        let path = g(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(remove_twin_from_support(&path, "c").unwrap().m(), 1);
        assert!(remove_twin_from_support(&path, "b").is_err());
        assert!(remove_twin_from_support(&path, "z").is_err());
        let single = g(&["u", "v"], &[("u", "v")]);
        let rest = remove_twin_from_support(&single, "v").unwrap();
        assert_eq!((rest.n(), rest.m()), (1, 0));
    }

    #[test]
    fn cycle_hypergraph_is_its_own_support() {
        let h = hg(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]);
        let rep = find_r_outerplanar_support(&h, LayerBound::Layers(1), 1000).unwrap();
        let cert = rep.outcome.certificate().unwrap();
        assert_eq!(cert.graph.m(), 4);
        assert_eq!(cert.layers_used, Some(1));
    }

    #[test]
    fn disconnected_input_rejected() {
        let h = hg(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]);
        assert!(find_r_outerplanar_support(&h, LayerBound::PlanarOnly, 1000).is_err());
        let rep = search_support(&h, LayerBound::PlanarOnly, &SearchConfig::default()).unwrap();
        assert!(rep.outcome.is_found());
    }

    #[test]
    fn k5_pairs_have_no_planar_support() {
        let vs = ["a", "b", "c", "d", "e"];
        let pairs: Vec<Vec<&str>> = (0..5).flat_map(|i| (i + 1..5).map(move |j| vec![vs[i], vs[j]])).collect();
        let h = Hypergraph::new(vs, pairs).unwrap();
        let rep = find_r_outerplanar_support(&h, LayerBound::PlanarOnly, 1000).unwrap();
        assert!(rep.outcome.is_none());
    }

    #[test]
    fn sparse_certificates_come_first() {
        let h = hg(&["a", "b", "c", "d"], &[&["a", "b", "c", "d"]]);
        let rep = find_r_outerplanar_support(&h, LayerBound::Layers(1), 10_000).unwrap();
        let cert = rep.outcome.certificate().unwrap();
        assert_eq!(cert.graph.m(), 3);
        // lexicographically first spanning tree of the pairs: a-b, a-c, a-d
        assert!(cert.graph.contains_edge("a", "d"));
    }

    #[test]
    fn parallel_matches_sequential() {
        let h = hg(
            &["a", "b", "c", "d", "e", "f"],
            &[&["a", "b", "c", "d"], &["c", "d", "e", "f"], &["a", "e", "f"], &["b", "d", "f"]],
        );
        let seq = search_support(&h, LayerBound::Layers(1), &SearchConfig::default()).unwrap();
        let par =
            search_support(&h, LayerBound::Layers(1), &SearchConfig { jobs: 4, ..SearchConfig::default() }).unwrap();
        assert_eq!(seq.outcome, par.outcome);
    }

    #[test]
    fn budget_exhaustion_reports_unknown() {
        let h = hg(&["a", "b", "c", "d", "e"], &[&["a", "b", "c", "d", "e"], &["a", "c"], &["b", "d"]]);
        let rep =
            search_support(&h, LayerBound::Layers(1), &SearchConfig { budget: 2, ..SearchConfig::default() }).unwrap();
        assert!(rep.outcome.is_unknown());
    }

    #[test]
    fn twins_shrink_the_representative() {
        let h = hg(&["a", "b", "c"], &[&["a", "b", "c"]]);
        let rep = find_min_representative_support(&h, LayerBound::Layers(1), 10_000).unwrap();
        let cert = rep.outcome.certificate().unwrap();
        assert_eq!(cert.graph.n(), 1);
        assert!(is_representative_support(&cert.graph, &h));
    }

    #[test]
    fn count_vectors_enumerate_all() {
        let v = count_vectors(&[2, 1], 2);
        assert_eq!(v, vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(count_vectors(&[2, 2, 2], 3).len(), 7);
    }

    #[test]
    fn connectivity_mask() {
        let adj = vec![0b010, 0b101, 0b010];
        assert!(connected_within(&adj, 0b111));
        assert!(!connected_within(&adj, 0b101));
        assert!(connected_within(&adj, 0b100));
    }
}
