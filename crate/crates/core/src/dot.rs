//! Graphviz renderings. Output only; never parsed back.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::graph::{EdgeId, MultiGraph};
use crate::line::LineGraph;
use crate::tours::Decomposition;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Base graph with edge-id labels; edges in `marked` are drawn as cut edges.
pub fn graph_dot(g: &MultiGraph, marked: &BTreeSet<EdgeId>) -> String {
    let mut out = format!("graph {} {{\n  node [shape=circle];\n", quote(g.name()));
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in g.edges() {
        let style = if marked.contains(&e.id) {
            ", color=red, penwidth=2.5, style=dashed"
        } else {
            ""
        };
        writeln!(out, "  {} -- {} [label=\"{}\"{style}];", e.a, e.b, e.id).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Line graph with each edge colored by the cycle of `d` that uses it.
pub fn decomposition_dot(l: &LineGraph, d: Option<&Decomposition>) -> String {
    let mut colour: BTreeMap<(EdgeId, EdgeId), usize> = BTreeMap::new();
    for (i, h) in d.map(|d| d.cycles.as_slice()).unwrap_or(&[]).iter().enumerate() {
        for p in h.edge_pairs() {
            colour.insert(p, i);
        }
    }
    let name = format!("L_{}", l.base().name());
    let mut out = format!("graph {} {{\n  node [shape=box];\n", quote(&name));
    for &v in l.vertices() {
        let e = l.base().edge(v).unwrap();
        writeln!(out, "  e{v} [label=\"{v}: {}{}\"];", e.a, e.b).unwrap();
    }
    for le in l.edges() {
        match colour.get(&(le.a, le.b)) {
            Some(&c) => writeln!(
                out,
                "  e{} -- e{} [color=\"{}\", penwidth=2, tooltip=\"cycle {c}\"];",
                le.a,
                le.b,
                PALETTE[c % PALETTE.len()]
            ),
            None => writeln!(out, "  e{} -- e{} [color=gray];", le.a, le.b),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete_graph;
    use crate::line::line_graph;
    use crate::tours::HamCycle;

    #[test]
    fn marks_and_colours() {
        let k4 = complete_graph(4).unwrap();
        let s = graph_dot(&k4, &[2].into());
        assert_eq!(s.matches("--").count(), 6);
        assert_eq!(s.matches("style=dashed").count(), 1);
        let l = line_graph(&k4).unwrap();
        let d = Decomposition::new(vec![
            HamCycle::new(vec![0, 1, 2, 5, 3, 4]),
            HamCycle::new(vec![0, 2, 4, 5, 1, 3]),
        ]);
        let s = decomposition_dot(&l, Some(&d));
        assert_eq!(s.matches(PALETTE[0]).count(), 6);
        assert_eq!(s.matches(PALETTE[1]).count(), 6);
        assert!(!s.contains("gray"));
    }
}
