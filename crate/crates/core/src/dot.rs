//! Graphviz DOT export of supports, optionally coloured by hyperedge.

use std::fmt::Write;

use crate::hypercore::Hypergraph;
use crate::planegeom::SimpleGraph;

/// Colours assigned to hyperedges in order, wrapping around.
pub const PALETTE: [&str; 10] =
    ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders `g` as an undirected DOT graph. With `h`, every vertex is labelled
/// with the indices of the hyperedges containing it, and every edge lying
/// inside some hyperedge takes the colour of the first such hyperedge.
/// Vertices of `h` missing from `g` are ignored.
pub fn export_dot(g: &SimpleGraph, h: Option<&Hypergraph>) -> String {
    let mut out = String::from("graph support {\n");
    if let Some(h) = h {
        for (i, e) in h.named_hyperedges().iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let members = e.join(", ");
            writeln!(out, "  // hyperedge {i} color={color}: {members}").unwrap();
        }
    }
    for v in g.vertices() {
        match h.and_then(|h| h.incident_hyperedges(v).ok()) {
            Some(inc) => {
                let ids: Vec<String> = inc.iter().map(|i| i.to_string()).collect();
                let label = format!("{v}\n{{{}}}", ids.join(","));
                writeln!(out, "  {} [label={}];", quote(v), quote(&label)).unwrap();
            }
            None => writeln!(out, "  {};", quote(v)).unwrap(),
        }
    }
    for (u, v) in g.edges() {
        let color = h.and_then(|h| {
            let (iu, iv) = (h.index_of(u)?, h.index_of(v)?);
            let i = h.hyperedges().iter().position(|e| e.contains(&iu) && e.contains(&iv))?;
            Some(PALETTE[i % PALETTE.len()])
        });
        match color {
            Some(c) => writeln!(out, "  {} -- {} [color={}];", quote(u), quote(v), quote(c)).unwrap(),
            None => writeln!(out, "  {} -- {};", quote(u), quote(v)).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
