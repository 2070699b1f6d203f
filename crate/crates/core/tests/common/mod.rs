//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search or planarity code of the library; graphs are handled as
//! adjacency bitmasks over at most 32 vertices.

#![allow(dead_code, clippy::single_range_in_vec_init)]

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use hypersupport::{Hypergraph, LayerBound, SimpleGraph};

pub type Pairs = Vec<(usize, usize)>;

/// Adjacency bitmasks plus vertex names, indexed in name order.
#[derive(Clone, Debug)]
pub struct Masks {
    pub names: Vec<String>,
    pub adj: Vec<u32>,
}

impl Masks {
    pub fn from_graph(g: &SimpleGraph) -> Masks {
        let names: Vec<String> = g.vertices().iter().cloned().collect();
        let idx: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        assert!(names.len() <= 32, "oracle graphs have at most 32 vertices");
        let mut adj = vec![0u32; names.len()];
        for (u, v) in g.edges() {
            let (a, b) = (idx[u.as_str()], idx[v.as_str()]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Masks { names, adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }
}

pub fn edge_count(adj: &[u32]) -> usize {
    adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
}

/// Whether the vertices of `set` induce a connected subgraph (empty sets are
/// not connected).
pub fn connected_within(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return false;
    }
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & set & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == set
}

/// Does the graph have `h` (on `k` vertices) as a minor? Labels in each
/// range of `groups` are interchangeable, which is used to skip symmetric
/// branch-set assignments.
pub fn has_minor(adj: &[u32], k: usize, h: &[(usize, usize)], groups: &[Range<usize>]) -> bool {
    let n = adj.len();
    if n < k {
        return false;
    }
    let mut group_of = vec![0..0; k];
    for g in groups {
        for l in g.clone() {
            group_of[l] = g.clone();
        }
    }
    let mut sets = vec![0u32; k];
    fn rec(
        v: usize,
        adj: &[u32],
        k: usize,
        h: &[(usize, usize)],
        group_of: &[Range<usize>],
        sets: &mut Vec<u32>,
    ) -> bool {
        let n = adj.len();
        let empty = sets.iter().filter(|&&s| s == 0).count();
        if n - v < empty {
            return false;
        }
        if v == n {
            return sets.iter().all(|&s| connected_within(adj, s))
                && h.iter().all(|&(a, b)| sets[a].iter_bits().any(|x| adj[x] & sets[b] != 0));
        }
        for l in 0..k {
            let g = &group_of[l];
            if l > g.start && sets[l - 1] == 0 {
                continue;
            }
            sets[l] |= 1 << v;
            if rec(v + 1, adj, k, h, group_of, sets) {
                return true;
            }
            sets[l] &= !(1 << v);
        }
        rec(v + 1, adj, k, h, group_of, sets)
    }
    rec(0, adj, k, h, &group_of, &mut sets)
}

trait Bits {
    fn iter_bits(self) -> BitIter;
}

impl Bits for u32 {
    fn iter_bits(self) -> BitIter {
        BitIter(self)
    }
}

struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

fn complete(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect()
}

fn bipartite(p: usize, q: usize) -> Vec<(usize, usize)> {
    (0..p).flat_map(|a| (p..p + q).map(move |b| (a, b))).collect()
}

/// Planarity by Wagner's theorem: no K5 and no K3,3 minor.
pub fn planar_oracle(adj: &[u32]) -> bool {
    let (n, m) = (adj.len(), edge_count(adj));
    if m < 9 {
        return true;
    }
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    !has_minor(adj, 5, &complete(5), &[0..5]) && !has_minor(adj, 6, &bipartite(3, 3), &[0..3, 3..6])
}

/// Outerplanarity: no K4 and no K2,3 minor.
pub fn outerplanar_oracle(adj: &[u32]) -> bool {
    let (n, m) = (adj.len(), edge_count(adj));
    if n >= 2 && m > 2 * n - 3 {
        return false;
    }
    !has_minor(adj, 4, &complete(4), &[0..4]) && !has_minor(adj, 5, &bipartite(2, 3), &[0..2, 2..5])
}

/// All cyclic orders of `items` with the first element fixed.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut o = vec![items[0]];
        o.extend_from_slice(p);
        out.push(o);
    });
    out
}

fn permute(a: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == a.len() {
        f(a);
        return;
    }
    for j in i..a.len() {
        a.swap(i, j);
        permute(a, i + 1, f);
        a.swap(i, j);
    }
}

/// Faces of a rotation system as lists of darts `(u, v)`; the dart after
/// `(u, v)` is `(v, w)` with `w` following `u` around `v`.
pub fn trace(rot: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, l) in rot.iter().enumerate() {
        for (i, &u) in l.iter().enumerate() {
            pos.insert((v, u), i);
        }
    }
    let mut seen: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces = Vec::new();
    for (u, l) in rot.iter().enumerate() {
        for &v in l {
            if seen.contains_key(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while !seen.contains_key(&(a, b)) {
                seen.insert((a, b), true);
                face.push((a, b));
                let around = &rot[b];
                let next = around[(pos[&(b, a)] + 1) % around.len()];
                a = b;
                b = next;
            }
            faces.push(face);
        }
    }
    faces
}

/// Layer count of a connected plane graph with the given outer face:
/// a vertex at distance `d` from the outer face in the vertex-face incidence
/// graph lies in layer `(d + 1) / 2`.
pub fn radial_depth(n: usize, faces: &[Vec<(usize, usize)>], outer: usize) -> usize {
    let mut vf: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (f, face) in faces.iter().enumerate() {
        for &(a, _) in face {
            vf[a].push(f);
        }
    }
    let mut fv: Vec<Vec<usize>> = faces.iter().map(|f| f.iter().map(|&(a, _)| a).collect()).collect();
    for l in &mut fv {
        l.sort_unstable();
        l.dedup();
    }
    let mut fdist = vec![usize::MAX; faces.len()];
    let mut vdist = vec![usize::MAX; n];
    fdist[outer] = 0;
    let mut queue = std::collections::VecDeque::from([(true, outer)]);
    while let Some((is_face, x)) = queue.pop_front() {
        if is_face {
            for &v in &fv[x] {
                if vdist[v] == usize::MAX {
                    vdist[v] = fdist[x] + 1;
                    queue.push_back((false, v));
                }
            }
        } else {
            for &f in &vf[x] {
                if fdist[f] == usize::MAX {
                    fdist[f] = vdist[x] + 1;
                    queue.push_back((true, f));
                }
            }
        }
    }
    vdist.iter().filter(|&&d| d != usize::MAX).map(|d| d.div_ceil(2)).max().unwrap_or(1)
}

/// Minimum layer count over all plane embeddings, by enumerating every
/// rotation system of every component; `None` when the graph is not planar.
pub fn outerplanarity_oracle(adj: &[u32]) -> Option<usize> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = comps.len();
        let mut members = vec![];
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in adj[v].iter_bits() {
                if comp[w] == usize::MAX {
                    comp[w] = comps.len();
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    let mut best_overall = 0;
    for members in comps {
        if members.len() == 1 {
            best_overall = best_overall.max(1);
            continue;
        }
        let local: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let nbrs: Vec<Vec<usize>> = members.iter().map(|&v| adj[v].iter_bits().map(|w| local[&w]).collect()).collect();
        let options: Vec<Vec<Vec<usize>>> = nbrs.iter().map(|l| cyclic_orders(l)).collect();
        let nc = members.len();
        let mc = nbrs.iter().map(Vec::len).sum::<usize>() / 2;
        let mut choice = vec![0usize; nc];
        let mut best: Option<usize> = None;
        loop {
            let rot: Vec<Vec<usize>> = (0..nc).map(|v| options[v][choice[v]].clone()).collect();
            let faces = trace(&rot);
            if nc + faces.len() == mc + 2 {
                for f in 0..faces.len() {
                    let d = radial_depth(nc, &faces, f);
                    best = Some(best.map_or(d, |b: usize| b.min(d)));
                }
            }
            let mut i = 0;
            while i < nc {
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == nc {
                break;
            }
        }
        best_overall = best_overall.max(best?);
    }
    Some(best_overall.max(1))
}

/// Whether a graph meets a layer bound, with cheap exact shortcuts before
/// the enumeration.
pub fn meets_bound(adj: &[u32], bound: LayerBound) -> bool {
    match bound {
        LayerBound::PlanarOnly => planar_oracle(adj),
        LayerBound::Layers(0) => adj.is_empty(),
        LayerBound::Layers(1) => outerplanar_oracle(adj),
        LayerBound::Layers(r) => {
            planar_oracle(adj) && (outerplanar_oracle(adj) || outerplanarity_oracle(adj).is_some_and(|k| k <= r))
        }
    }
}

/// Hyperedges as vertex bitmasks, vertex order as in `h`.
pub fn hyperedge_masks(h: &Hypergraph) -> Vec<u32> {
    h.hyperedges().iter().map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v)).collect()
}

pub fn is_support_oracle(adj: &[u32], edges: &[u32]) -> bool {
    edges.iter().all(|&e| connected_within(adj, e))
}

/// Forced pairs (two-vertex hyperedges) and free pairs (other pairs inside a
/// hyperedge), both sorted.
pub fn candidate_pairs(h: &Hypergraph) -> (Pairs, Pairs) {
    let mut forced = Vec::new();
    let mut all = std::collections::BTreeSet::new();
    for e in h.hyperedges() {
        if e.len() == 2 {
            forced.push((e[0].min(e[1]), e[0].max(e[1])));
        }
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                all.insert((a.min(b), a.max(b)));
            }
        }
    }
    forced.sort_unstable();
    forced.dedup();
    let free = all.into_iter().filter(|p| !forced.contains(p)).collect();
    (forced, free)
}

/// Smallest set of free pairs that completes the forced pairs to a support
/// meeting `bound`, lexicographically first among those of minimum size.
/// Every subset of each size is examined; there is no pruning.
pub fn min_support_oracle(h: &Hypergraph, bound: LayerBound) -> Option<Vec<(usize, usize)>> {
    let (forced, free) = candidate_pairs(h);
    let edges = hyperedge_masks(h);
    let mut base = vec![0u32; h.n()];
    for &(a, b) in &forced {
        base[a] |= 1 << b;
        base[b] |= 1 << a;
    }
    let mut memo: HashMap<Vec<u32>, bool> = HashMap::new();
    for k in 0..=free.len() {
        let mut found = None;
        for_each_combination(free.len(), k, &mut |idx| {
            if found.is_some() {
                return;
            }
            let mut adj = base.clone();
            for &i in idx {
                let (a, b) = free[i];
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            if !is_support_oracle(&adj, &edges) {
                return;
            }
            let ok = *memo.entry(adj.clone()).or_insert_with(|| meets_bound(&adj, bound));
            if ok {
                found = Some(idx.iter().map(|&i| free[i]).collect());
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Twin classes by comparing incidence sets pairwise.
pub fn twin_classes_oracle(h: &Hypergraph) -> Vec<Vec<String>> {
    let inc: Vec<Vec<usize>> =
        (0..h.n()).map(|v| (0..h.m()).filter(|&e| h.hyperedges()[e].contains(&v)).collect()).collect();
    let mut classes: Vec<Vec<String>> = Vec::new();
    let mut rep: Vec<usize> = Vec::new();
    for v in 0..h.n() {
        match rep.iter().position(|&r| inc[r] == inc[v]) {
            Some(c) => classes[c].push(h.vertex(v).to_string()),
            None => {
                rep.push(v);
                classes.push(vec![h.vertex(v).to_string()]);
            }
        }
    }
    classes
}

/// A small random graph on `n` vertices named `x0, x1, ...` from an edge
/// selection bitmask over all pairs.
pub fn graph_from_pair_mask(n: usize, mask: u64) -> SimpleGraph {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((names[a].clone(), names[b].clone()));
            }
            bit += 1;
        }
    }
    SimpleGraph::new(names, edges).unwrap()
}
