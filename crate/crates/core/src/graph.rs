//! Dart-based undirected multigraph.
//!
//! Vertices are an ordered set of non-negative ids (not necessarily
//! contiguous: splitting a vertex appends fresh ids). Edges carry stable ids
//! that survive every derived construction, so line-graph vertices and
//! certificates can refer to them directly.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{parse_err, Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Which end of an edge a dart sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    A,
    B,
}

impl End {
    pub fn flip(self) -> End {
        match self {
            End::A => End::B,
            End::B => End::A,
        }
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            End::A => "a",
            End::B => "b",
        })
    }
}

/// Half edge: an (edge, endpoint) incidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: End,
}

impl Dart {
    pub fn new(edge: EdgeId, end: End) -> Self {
        Dart { edge, end }
    }

    pub fn twin(self) -> Dart {
        Dart::new(self.edge, self.end.flip())
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.edge, self.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    pub fn new(id: EdgeId, a: VertexId, b: VertexId) -> Self {
        Edge { id, a, b }
    }

    pub fn endpoint(&self, end: End) -> VertexId {
        match end {
            End::A => self.a,
            End::B => self.b,
        }
    }

    /// The end of this edge sitting at `v`, if `v` is an endpoint.
    pub fn end_at(&self, v: VertexId) -> Option<End> {
        if self.a == v {
            Some(End::A)
        } else if self.b == v {
            Some(End::B)
        } else {
            None
        }
    }

    pub fn other(&self, v: VertexId) -> Option<VertexId> {
        self.end_at(v).map(|e| self.endpoint(e.flip()))
    }

    pub fn is_incident(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    /// Unordered endpoint pair, smaller first.
    pub fn key(&self) -> (VertexId, VertexId) {
        (self.a.min(self.b), self.a.max(self.b))
    }

    /// The endpoint shared with `other`, if exactly one is shared.
    pub fn shared_endpoint(&self, other: &Edge) -> Option<VertexId> {
        let mine = [self.a, self.b];
        let common: Vec<_> = mine.iter().copied().filter(|&x| other.is_incident(x)).collect();
        match common.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }
}

/// Immutable undirected multigraph without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    name: String,
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<Dart>>,
}

impl MultiGraph {
    pub fn new(
        name: impl Into<String>,
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable_by_key(|e| e.id);
        if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateEdge(w[0].id));
        }
        let mut incidence = vec![Vec::new(); vertices.len()];
        for e in &edges {
            if e.a == e.b {
                return Err(Error::Loop(e.a, e.id));
            }
            for end in [End::A, End::B] {
                let v = e.endpoint(end);
                let idx = vertices
                    .binary_search(&v)
                    .map_err(|_| Error::UnknownVertex(v))?;
                incidence[idx].push(Dart::new(e.id, end));
            }
        }
        for darts in &mut incidence {
            darts.sort_unstable();
        }
        Ok(MultiGraph {
            name: name.into(),
            vertices,
            edges,
            incidence,
        })
    }

    /// Graph on vertices `0..n` with edge-ids assigned in list order.
    pub fn from_pairs(name: impl Into<String>, n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(id, &(a, b))| Edge::new(id, a, b));
        Self::new(name, 0..n, edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Dense position of `v` in the vertex order.
    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Dense position of edge `id` in the edge order.
    pub fn edge_index(&self, id: EdgeId) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edge_index(id).map(|i| &self.edges[i])
    }

    pub fn try_edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edge(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.edges.last().map(|e| e.id)
    }

    /// Darts at `v`, sorted. Empty for unknown vertices.
    pub fn darts_at(&self, v: VertexId) -> &[Dart] {
        match self.vertex_index(v) {
            Some(i) => &self.incidence[i],
            None => &[],
        }
    }

    pub fn dart_vertex(&self, d: Dart) -> Option<VertexId> {
        self.edge(d.edge).map(|e| e.endpoint(d.end))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.darts_at(v).len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.incidence.iter().map(Vec::len).min()
    }

    /// Neighbours of `v` with multiplicity, in dart order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.darts_at(v)
            .iter()
            .map(move |d| self.edges[self.edge_index(d.edge).unwrap()].endpoint(d.end.flip()))
    }

    /// True iff no two edges share an unordered endpoint pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.key()))
    }

    /// The common degree, if every vertex has the same degree.
    pub fn is_regular(&self) -> Option<usize> {
        let mut degs = self.incidence.iter().map(Vec::len);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        components(self).len() <= 1
    }

    /// Subgraph with the listed edges removed (vertices kept).
    pub fn without_edges(&self, removed: &BTreeSet<EdgeId>) -> MultiGraph {
        MultiGraph::new(
            self.name.clone(),
            self.vertices.iter().copied(),
            self.edges.iter().filter(|e| !removed.contains(&e.id)).copied(),
        )
        .expect("subgraph of a valid graph is valid")
    }

    /// Induced subgraph on all vertices except `removed`.
    pub fn without_vertices(&self, removed: &BTreeSet<VertexId>) -> MultiGraph {
        MultiGraph::new(
            self.name.clone(),
            self.vertices.iter().copied().filter(|v| !removed.contains(v)),
            self.edges
                .iter()
                .filter(|e| !removed.contains(&e.a) && !removed.contains(&e.b))
                .copied(),
        )
        .expect("subgraph of a valid graph is valid")
    }

    /// Serialize in the line-oriented text format. Requires vertex ids `0..n`.
    pub fn to_text(&self) -> Result<String> {
        let mut out = String::new();
        write_graph(self, &mut out)?;
        Ok(out)
    }

    /// Strict parser for the text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let g = parse_graph_lines(&mut lines)?;
        if let Some((n, l)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            let kw = l.split_whitespace().next().unwrap_or_default();
            return Err(parse_err(n, format!("unknown keyword `{kw}`")));
        }
        Ok(g)
    }
}

pub(crate) fn write_graph(g: &MultiGraph, out: &mut String) -> Result<()> {
    use std::fmt::Write;
    let contiguous = g.vertices.iter().enumerate().all(|(i, &v)| i == v);
    if !contiguous {
        return Err(Error::NonContiguous);
    }
    writeln!(out, "graph {} {} {}", g.name, g.num_vertices(), g.num_edges()).unwrap();
    for e in &g.edges {
        writeln!(out, "edge {} {} {}", e.id, e.a, e.b).unwrap();
    }
    Ok(())
}

/// Reads the header and exactly `num-edges` edge lines; leaves the rest.
pub(crate) fn parse_graph_lines<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<MultiGraph> {
    let (hline, header) = lines
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.first() != Some(&"graph") {
        return Err(parse_err(hline, format!("expected `graph`, found `{}`", toks[0])));
    }
    if toks.len() != 4 {
        return Err(parse_err(hline, "header must be `graph <name> <num-vertices> <num-edges>`"));
    }
    let name = toks[1].to_string();
    let n: usize = parse_num(hline, toks[2])?;
    let m: usize = parse_num(hline, toks[3])?;
    let mut edges = Vec::with_capacity(m);
    let mut ids = BTreeSet::new();
    while edges.len() < m {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("expected {m} edges, found {}", edges.len())))?;
        if l.trim().is_empty() {
            continue;
        }
        let t: Vec<&str> = l.split_whitespace().collect();
        if t[0] != "edge" {
            return Err(parse_err(ln, format!("unknown keyword `{}`", t[0])));
        }
        if t.len() != 4 {
            return Err(parse_err(ln, "edge line must be `edge <edge-id> <u> <v>`"));
        }
        let id = parse_num(ln, t[1])?;
        let a = parse_num(ln, t[2])?;
        let b = parse_num(ln, t[3])?;
        if !ids.insert(id) {
            return Err(parse_err(ln, format!("duplicate edge-id {id}")));
        }
        for x in [a, b] {
            if x >= n {
                return Err(parse_err(ln, format!("vertex {x} out of range [0, {n})")));
            }
        }
        if a == b {
            return Err(parse_err(ln, format!("loop at vertex {a}")));
        }
        edges.push(Edge::new(id, a, b));
    }
    MultiGraph::new(name, 0..n, edges)
}

pub(crate) fn parse_num(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{tok}`")))
}

/// Disjoint vertex blocks covering the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<VertexId>>,
}

impl VertexPartition {
    /// Blocks sorted internally and ordered by their smallest element.
    pub fn new(mut blocks: Vec<Vec<VertexId>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        VertexPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: VertexId) -> Option<&[VertexId]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&v).is_ok())
            .map(Vec::as_slice)
    }
}

/// Connected components by breadth-first search.
pub fn components(g: &MultiGraph) -> VertexPartition {
    let n = g.num_vertices();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut block = vec![g.vertices[start]];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for d in &g.incidence[i] {
                let w = g.edges[g.edge_index(d.edge).unwrap()].endpoint(d.end.flip());
                let j = g.vertex_index(w).unwrap();
                if !seen[j] {
                    seen[j] = true;
                    block.push(w);
                    queue.push_back(j);
                }
            }
        }
        blocks.push(block);
    }
    VertexPartition::new(blocks)
}

/// A minimum edge cut and its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub size: usize,
    pub cut: Vec<EdgeId>,
}

struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Minimum edge cut by unit-capacity max-flow from the first vertex to every
/// other vertex. Among all source-side-reachable cuts of minimum size the
/// lexicographically smallest sorted edge-id sequence is returned.
pub fn min_edge_cut(g: &MultiGraph) -> Result<EdgeCut> {
    let n = g.num_vertices();
    if n < 2 {
        return Err(Error::Trivial);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best: Option<EdgeCut> = None;
    for sink in 1..n {
        let bound = best.as_ref().map(|b| b.size);
        let Some((flow, reach)) = max_flow(g, 0, sink, bound) else {
            continue;
        };
        let mut cut: Vec<EdgeId> = g
            .edges
            .iter()
            .filter(|e| {
                let ia = g.vertex_index(e.a).unwrap();
                let ib = g.vertex_index(e.b).unwrap();
                reach[ia] != reach[ib]
            })
            .map(|e| e.id)
            .collect();
        cut.sort_unstable();
        debug_assert_eq!(cut.len(), flow);
        let better = match &best {
            None => true,
            Some(b) => flow < b.size || (flow == b.size && cut < b.cut),
        };
        if better {
            best = Some(EdgeCut { size: flow, cut });
        }
    }
    Ok(best.expect("at least one sink"))
}

/// Max-flow value and residual reachability from `s`. Returns `None` once the
/// flow exceeds `bound`, since such a sink cannot improve the answer.
fn max_flow(g: &MultiGraph, s: usize, t: usize, bound: Option<usize>) -> Option<(usize, Vec<bool>)> {
    let n = g.num_vertices();
    let mut adj: Vec<Vec<Arc>> = (0..n).map(|_| Vec::new()).collect();
    for e in &g.edges {
        let a = g.vertex_index(e.a).unwrap();
        let b = g.vertex_index(e.b).unwrap();
        let ra = adj[b].len();
        let rb = adj[a].len();
        adj[a].push(Arc { to: b, cap: 1, rev: ra });
        adj[b].push(Arc { to: a, cap: 1, rev: rb });
    }
    let mut flow = 0;
    loop {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for (k, arc) in adj[x].iter().enumerate() {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    prev[arc.to] = Some((x, k));
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[t] {
            return Some((flow, seen));
        }
        let mut y = t;
        while let Some((x, k)) = prev[y] {
            adj[x][k].cap -= 1;
            let r = adj[x][k].rev;
            adj[y][r].cap += 1;
            y = x;
        }
        flow += 1;
        if bound.is_some_and(|b| flow > b) {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_pairs("k4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn components_of_k4_and_two_edges() {
        assert_eq!(components(&k4()).blocks(), &[vec![0, 1, 2, 3]]);
        let g = MultiGraph::from_pairs("two", 4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(components(&g).blocks(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn rejects_loops_and_duplicate_ids() {
        assert_eq!(
            MultiGraph::from_pairs("l", 2, &[(1, 1)]),
            Err(Error::Loop(1, 0))
        );
        let dup = MultiGraph::new("d", 0..2, [Edge::new(3, 0, 1), Edge::new(3, 1, 0)]);
        assert_eq!(dup, Err(Error::DuplicateEdge(3)));
    }

    #[test]
    fn parallel_edges_are_not_simple() {
        let g = MultiGraph::from_pairs("p", 2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!g.is_simple());
        assert_eq!(g.is_regular(), Some(2));
        assert_eq!(g.degree(0), 2);
    }

    #[test]
    fn min_cut_of_k4() {
        let c = min_edge_cut(&k4()).unwrap();
        assert_eq!(c.size, 3);
        // vertex 0 isolated by edges 0,1,2 is the smallest sequence
        assert_eq!(c.cut, vec![0, 1, 2]);
    }

    #[test]
    fn min_cut_errors() {
        let g = MultiGraph::from_pairs("two", 4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_edge_cut(&g), Err(Error::Disconnected));
        let g = MultiGraph::new("one", [0], []).unwrap();
        assert_eq!(min_edge_cut(&g), Err(Error::Trivial));
    }

    #[test]
    fn parse_is_strict() {
        let ok = "graph g 3 2\nedge 0 0 1\nedge 5 1 2\n";
        let g = MultiGraph::parse(ok).unwrap();
        assert_eq!(g.to_text().unwrap(), ok);
        assert!(MultiGraph::parse("graph g 3 1\nedge 0 0 3\n").is_err());
        assert!(MultiGraph::parse("graph g 3 2\nedge 0 0 1\nedge 0 1 2\n").is_err());
        assert!(MultiGraph::parse("graph g 3 1\nedge 0 0 1\nlabel v 1 0\n").is_err());
        assert!(MultiGraph::parse("graph g 3 1\nvertex 0 0 1\n").is_err());
        assert!(MultiGraph::parse("graph g 3 2\nedge 0 0 1\n").is_err());
    }

    #[test]
    fn non_contiguous_graph_does_not_serialize() {
        let g = MultiGraph::new("g", [0, 2], [Edge::new(0, 0, 2)]).unwrap();
        assert_eq!(g.to_text(), Err(Error::NonContiguous));
    }
}
