//! Planarity testing and planar embedding by path addition
//! (Demoucron, Malgrange and Pertuiset) on each biconnected block.

use std::collections::HashSet;

use super::embedding::{PlaneEmbedding, Rotation};
use super::graph::{IndexGraph, SimpleGraph};

/// True when `g` has a crossing-free drawing in the plane.
pub fn is_planar(g: &SimpleGraph) -> bool {
    planar_rotation(&IndexGraph::from_graph(g)).is_some()
}

/// A plane embedding of `g`, if one exists. For each component the outer
/// face is one that minimises the number of layers for this rotation system.
pub fn planar_embedding(g: &SimpleGraph) -> Option<PlaneEmbedding> {
    let ig = IndexGraph::from_graph(g);
    let rot = planar_rotation(&ig)?;
    Some(embedding_with_best_outer_faces(&ig, &rot))
}

/// Wraps a planar rotation in an embedding whose outer face, per component,
/// minimises the face-distance layer count.
pub(crate) fn embedding_with_best_outer_faces(ig: &IndexGraph, rot: &Rotation) -> PlaneEmbedding {
    let faces = rot.faces();
    let mut outer = Vec::new();
    for comp in ig.components() {
        if comp.iter().all(|&v| ig.adj[v].is_empty()) {
            continue;
        }
        let mut map = vec![usize::MAX; ig.n()];
        for (i, &v) in comp.iter().enumerate() {
            map[v] = i;
        }
        let sub_rot = Rotation { rot: comp.iter().map(|&v| rot.rot[v].iter().map(|&w| map[w]).collect()).collect() };
        let sub_faces = sub_rot.faces();
        let (_, best) = sub_rot.best_outer_face(&sub_faces);
        let d = sub_faces.walks[best.expect("component has edges")][0];
        let (u, v) = (comp[sub_faces.tail(d)], comp[sub_faces.head(d)]);
        let global = faces.dart(rot, u, v).expect("dart exists");
        outer.push(faces.face_of[global]);
    }
    PlaneEmbedding::from_index(ig, rot, &faces, &outer)
}

/// A planar rotation system for `g`, or `None` when `g` is not planar.
pub(crate) fn planar_rotation(g: &IndexGraph) -> Option<Rotation> {
    let n = g.n();
    let m = g.m();
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let bs = g.block_structure();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in &bs.blocks {
        let mut vs: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let mut map = vec![usize::MAX; n];
        for (i, &v) in vs.iter().enumerate() {
            map[v] = i;
        }
        let local = IndexGraph::from_edges(vs.len(), block.iter().map(|&(u, v)| (map[u], map[v])));
        let faces = embed_biconnected(&local)?;
        for (i, order) in rotation_from_faces(&local, &faces).into_iter().enumerate() {
            rot[vs[i]].extend(order.into_iter().map(|w| vs[w]));
        }
    }
    let rot = Rotation { rot };
    debug_assert!(rot.is_planar_rotation(&rot.faces()));
    Some(rot)
}

/// Checks planarity only.
pub(crate) fn is_planar_index(g: &IndexGraph) -> bool {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return false;
    }
    let bs = g.block_structure();
    bs.blocks.iter().all(|block| {
        let mut vs: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() <= 4 {
            return true;
        }
        if block.len() > 3 * vs.len() - 6 {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        for (i, &v) in vs.iter().enumerate() {
            map[v] = i;
        }
        let local = IndexGraph::from_edges(vs.len(), block.iter().map(|&(u, v)| (map[u], map[v])));
        embed_biconnected(&local).is_some()
    })
}

fn rotation_from_faces(g: &IndexGraph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.n();
    // succ[v] as (from, to) pairs: in a face walk ... u, v, w ... w follows u at v
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            succ[v].push((u, w));
        }
    }
    (0..n)
        .map(|v| {
            let Some(&(start, _)) = succ[v].first() else {
                return Vec::new();
            };
            let mut order = vec![start];
            let mut cur = start;
            loop {
                let next = succ[v].iter().find(|&&(a, _)| a == cur).expect("consistent faces").1;
                if next == start {
                    break;
                }
                order.push(next);
                cur = next;
            }
            debug_assert_eq!(order.len(), g.adj[v].len());
            order
        })
        .collect()
}

struct Fragment {
    attachments: Vec<usize>,
    /// For chords the two endpoints; for components the inner vertices.
    inner: Vec<usize>,
    is_chord: bool,
}

/// Face cycles of a planar embedding of a biconnected graph with at least
/// three vertices, or `None` if it is not planar.
fn embed_biconnected(g: &IndexGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let m = g.m();
    if m > 3 * n - 6 {
        return None;
    }
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let cycle = find_cycle(g);
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while h_edges.len() < m {
        let frags = fragments(g, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (i, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&f| fr.attachments.iter().all(|a| faces[f].contains(a))).collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("some fragment remains");
        let path = fragment_path(g, &frags[fi], &in_h);
        let f = faces.swap_remove(face);
        let (f1, f2) = split_face(&f, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

fn find_cycle(g: &IndexGraph) -> Vec<usize> {
    // edge 0-x plus a shortest path from x back to 0 avoiding that edge
    let u = (0..g.n()).find(|&v| !g.adj[v].is_empty()).expect("graph has edges");
    let v = g.adj[u][0];
    let mut parent = vec![usize::MAX; g.n()];
    parent[v] = v;
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in &g.adj[x] {
            if parent[y] != usize::MAX || (x == v && y == u) {
                continue;
            }
            parent[y] = x;
            queue.push_back(y);
        }
    }
    assert!(parent[u] != usize::MAX, "biconnected block must contain a cycle");
    let mut cycle = vec![u];
    let mut x = u;
    while x != v {
        x = parent[x];
        cycle.push(x);
    }
    cycle
}

fn fragments(g: &IndexGraph, in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &g.adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment { attachments: vec![u, v], inner: vec![u, v], is_chord: true });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut att = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in &g.adj[x] {
                if in_h[y] {
                    att.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(Fragment { attachments: att, inner: comp, is_chord: false });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &IndexGraph, fr: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if fr.is_chord {
        return fr.inner.clone();
    }
    let a = fr.attachments[0];
    let b = fr.attachments[1];
    let inside: HashSet<usize> = fr.inner.iter().copied().collect();
    let mut parent: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &x in &g.adj[a] {
        if inside.contains(&x) {
            parent.insert(x, a);
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        if g.adj[x].contains(&b) {
            let mut path = vec![b, x];
            let mut y = x;
            while parent[&y] != a {
                y = parent[&y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in &g.adj[x] {
            if !in_h[y] && inside.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment components are connected to every attachment")
}

/// Splits face cycle `f` along `path = [a, p1, .., pk, b]` with `a`, `b` on `f`.
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = f.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = f.iter().position(|&x| x == a).unwrap();
    let j = f.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = vec![f[from]];
        let mut p = from;
        while p != to {
            p = (p + 1) % k;
            out.push(f[p]);
        }
        out
    };
    let mut f1 = arc(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}
