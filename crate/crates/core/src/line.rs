//! Line graphs with side annotations, transitions and the vertex split
//! `X^t` used to detect separating transitions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{components, Dart, Edge, EdgeId, End, MultiGraph, VertexId};

/// An edge of a line graph, annotated with the base vertex its two
/// endpoints share. `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineEdge {
    pub a: EdgeId,
    pub b: EdgeId,
    pub via: VertexId,
}

/// Line graph of a simple base graph. Vertices are the base edge-ids.
#[derive(Clone, Debug)]
pub struct LineGraph {
    base: MultiGraph,
    vertices: Vec<EdgeId>,
    edges: Vec<LineEdge>,
    // per vertex index: (neighbour index, shared base vertex, line-edge index)
    adj: Vec<Vec<(usize, VertexId, usize)>>,
}

impl LineGraph {
    pub fn new(base: &MultiGraph) -> Result<Self> {
        if !base.is_simple() {
            return Err(Error::NotSimple);
        }
        let vertices: Vec<EdgeId> = base.edges().iter().map(|e| e.id).collect();
        let mut edges = Vec::new();
        for &x in base.vertices() {
            let darts = base.darts_at(x);
            for (i, d1) in darts.iter().enumerate() {
                for d2 in &darts[i + 1..] {
                    let (a, b) = (d1.edge.min(d2.edge), d1.edge.max(d2.edge));
                    edges.push(LineEdge { a, b, via: x });
                }
            }
        }
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            let ia = base.edge_index(e.a).unwrap();
            let ib = base.edge_index(e.b).unwrap();
            adj[ia].push((ib, e.via, k));
            adj[ib].push((ia, e.via, k));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(LineGraph {
            base: base.clone(),
            vertices,
            edges,
            adj,
        })
    }

    pub fn base(&self) -> &MultiGraph {
        &self.base
    }

    pub fn vertices(&self) -> &[EdgeId] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[LineEdge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, v: EdgeId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn has_vertex(&self, v: EdgeId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn degree(&self, v: EdgeId) -> usize {
        self.index_of(v).map_or(0, |i| self.adj[i].len())
    }

    pub fn is_regular(&self) -> Option<usize> {
        let mut degs = self.adj.iter().map(Vec::len);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Neighbours of `v` with the shared base vertex of each.
    pub fn neighbors(&self, v: EdgeId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        let list = match self.index_of(v) {
            Some(i) => self.adj[i].as_slice(),
            None => &[],
        };
        list.iter().map(|&(j, via, _)| (self.vertices[j], via))
    }

    /// Shared base vertex of two adjacent line-graph vertices.
    pub fn shared(&self, a: EdgeId, b: EdgeId) -> Option<VertexId> {
        self.line_edge(a, b).map(|e| e.via)
    }

    pub fn line_edge(&self, a: EdgeId, b: EdgeId) -> Option<&LineEdge> {
        self.line_edge_index(a, b).map(|k| &self.edges[k])
    }

    pub fn line_edge_index(&self, a: EdgeId, b: EdgeId) -> Option<usize> {
        let (a, b) = (a.min(b), a.max(b));
        self.edges
            .binary_search_by(|e| (e.a, e.b).cmp(&(a, b)))
            .ok()
    }

    /// The `u`-neighbourhood of line-graph vertex `uv`: neighbours sharing `u`.
    pub fn side_neighbourhood(&self, uv: EdgeId, u: VertexId) -> Vec<EdgeId> {
        self.neighbors(uv)
            .filter(|&(_, via)| via == u)
            .map(|(w, _)| w)
            .collect()
    }

    /// The line graph as a plain graph: vertex `i` is the `i`-th smallest base
    /// edge-id and line-edge `k` keeps its position in [`Self::edges`].
    pub fn to_multigraph(&self) -> MultiGraph {
        let edges = self.edges.iter().enumerate().map(|(k, e)| {
            Edge::new(k, self.index_of(e.a).unwrap(), self.index_of(e.b).unwrap())
        });
        MultiGraph::new(format!("L_{}", self.base.name()), 0..self.num_vertices(), edges)
            .expect("line graph is loopless")
    }
}

/// Line graph of a simple graph.
pub fn line_graph(x: &MultiGraph) -> Result<LineGraph> {
    LineGraph::new(x)
}

/// An unordered pair of distinct darts at one vertex; `darts.0 < darts.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub vertex: VertexId,
    pub darts: (Dart, Dart),
}

impl Transition {
    pub fn new(vertex: VertexId, d1: Dart, d2: Dart) -> Self {
        let darts = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        Transition { vertex, darts }
    }

    pub fn contains(&self, d: Dart) -> bool {
        self.darts.0 == d || self.darts.1 == d
    }

    /// Whether both darts exist, are distinct and sit at `vertex` in `x`.
    pub fn is_in(&self, x: &MultiGraph) -> bool {
        self.darts.0 != self.darts.1
            && [self.darts.0, self.darts.1]
                .iter()
                .all(|&d| x.dart_vertex(d) == Some(self.vertex))
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "transition {} {} {}", self.vertex, self.darts.0, self.darts.1)
    }
}

fn parse_dart(s: &str) -> Option<Dart> {
    let (e, end) = s.split_once('/')?;
    let end = match end {
        "a" => End::A,
        "b" => End::B,
        _ => return None,
    };
    Some(Dart::new(e.parse().ok()?, end))
}

impl FromStr for Transition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotATransition(s.to_string());
        let t: Vec<&str> = s.split_whitespace().collect();
        if t.len() != 4 || t[0] != "transition" {
            return Err(bad());
        }
        let v = t[1].parse().map_err(|_| bad())?;
        let d1 = parse_dart(t[2]).ok_or_else(bad)?;
        let d2 = parse_dart(t[3]).ok_or_else(bad)?;
        if d1 == d2 {
            return Err(bad());
        }
        Ok(Transition::new(v, d1, d2))
    }
}

/// All `d(d-1)/2` transitions at `v`, ordered by sorted dart pairs.
pub fn transitions_at(x: &MultiGraph, v: VertexId) -> Vec<Transition> {
    let darts = x.darts_at(v);
    let mut out = Vec::with_capacity(darts.len() * darts.len().saturating_sub(1) / 2);
    for (i, &d1) in darts.iter().enumerate() {
        for &d2 in &darts[i + 1..] {
            out.push(Transition::new(v, d1, d2));
        }
    }
    out
}

pub fn all_transitions(x: &MultiGraph) -> Vec<Transition> {
    x.vertices().iter().flat_map(|&v| transitions_at(x, v)).collect()
}

/// `X^t`: the transition's vertex `u` becomes `u_1` (carrying the two darts
/// of `t`) and `u_2` (carrying the rest), with fresh ids `max+1` and `max+2`.
/// `u_2` is omitted when `u` has no other darts.
pub fn split_at_transition(x: &MultiGraph, t: &Transition) -> Result<MultiGraph> {
    if !t.is_in(x) {
        return Err(Error::NotATransition(t.to_string()));
    }
    let u = t.vertex;
    let top = x.max_vertex_id().expect("graph with a transition has vertices");
    let (u1, u2) = (top + 1, top + 2);
    let has_rest = x.degree(u) > 2;
    let edges = x.edges().iter().map(|e| {
        let mut e = *e;
        for end in [End::A, End::B] {
            if e.endpoint(end) == u {
                let w = if t.contains(Dart::new(e.id, end)) { u1 } else { u2 };
                match end {
                    End::A => e.a = w,
                    End::B => e.b = w,
                }
            }
        }
        e
    });
    let mut vertices: Vec<VertexId> = x.vertices().iter().copied().filter(|&v| v != u).collect();
    vertices.push(u1);
    if has_rest {
        vertices.push(u2);
    }
    MultiGraph::new(x.name().to_string(), vertices, edges)
}

/// Transitions `t` for which `X^t` has more components than `X`.
pub fn separating_transitions(x: &MultiGraph) -> Vec<Transition> {
    let base = components(x).len();
    all_transitions(x)
        .into_iter()
        .filter(|t| {
            let split = split_at_transition(x, t).expect("enumerated transitions are valid");
            components(&split).len() > base
        })
        .collect()
}

/// Whether the vertex set is split by removing the given line-graph vertices
/// (base edge-ids) and line-graph edges (pairs of base edge-ids).
pub fn line_components_without(
    l: &LineGraph,
    removed_vertices: &BTreeSet<EdgeId>,
    removed_edges: &BTreeSet<(EdgeId, EdgeId)>,
) -> Vec<Vec<EdgeId>> {
    let n = l.num_vertices();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen[start] || removed_vertices.contains(&l.vertices[start]) {
            continue;
        }
        seen[start] = true;
        let mut block = vec![l.vertices[start]];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &(j, _, k) in &l.adj[i] {
                let e = &l.edges[k];
                if seen[j]
                    || removed_vertices.contains(&l.vertices[j])
                    || removed_edges.contains(&(e.a, e.b))
                {
                    continue;
                }
                seen[j] = true;
                block.push(l.vertices[j]);
                stack.push(j);
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_pairs("k4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn star3() -> MultiGraph {
        MultiGraph::from_pairs("star", 4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn line_graph_of_k4() {
        let l = line_graph(&k4()).unwrap();
        assert_eq!(l.num_vertices(), 6);
        assert_eq!(l.is_regular(), Some(4));
        // edge 0 = {0,1}: 0-side {0,2},{0,3}; 1-side {1,2},{1,3}
        assert_eq!(l.side_neighbourhood(0, 0), vec![1, 2]);
        assert_eq!(l.side_neighbourhood(0, 1), vec![3, 4]);
    }

    #[test]
    fn single_edge_line_graph() {
        let g = MultiGraph::from_pairs("e", 2, &[(0, 1)]).unwrap();
        let l = line_graph(&g).unwrap();
        assert_eq!((l.num_vertices(), l.num_edges()), (1, 0));
    }

    #[test]
    fn multigraph_line_graph_is_rejected() {
        let g = MultiGraph::from_pairs("p", 2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(line_graph(&g).unwrap_err(), Error::NotSimple);
        assert_eq!(Error::NotSimple.to_string(), "line graph requires simple base");
    }

    #[test]
    fn transition_counts() {
        let g = k4();
        assert_eq!(transitions_at(&g, 0).len(), 3);
        assert_eq!(all_transitions(&g).len(), 12);
        let iso = MultiGraph::new("iso", [0], []).unwrap();
        assert!(transitions_at(&iso, 0).is_empty());
    }

    #[test]
    fn star_has_a_separating_transition() {
        let s = star3();
        let t = transitions_at(&s, 0)[0];
        let split = split_at_transition(&s, &t).unwrap();
        assert_eq!(components(&split).len(), 2);
        assert_eq!(separating_transitions(&s).len(), 3);
    }

    #[test]
    fn triangle_split_is_a_path() {
        let tri = MultiGraph::from_pairs("tri", 3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        for t in all_transitions(&tri) {
            let split = split_at_transition(&tri, &t).unwrap();
            assert_eq!(components(&split).len(), 1);
            assert_eq!(split.num_vertices(), 3);
        }
        assert!(separating_transitions(&tri).is_empty());
    }

    #[test]
    fn k4_has_no_separating_transition() {
        let g = k4();
        for t in all_transitions(&g) {
            let split = split_at_transition(&g, &t).unwrap();
            assert_eq!(components(&split).len(), 1);
            assert_eq!(split.num_edges(), 6);
        }
    }

    #[test]
    fn foreign_transition_is_rejected() {
        let g = k4();
        let t = Transition::new(0, Dart::new(0, End::A), Dart::new(5, End::A));
        assert!(split_at_transition(&g, &t).is_err());
    }

    #[test]
    fn transition_text_round_trip() {
        let t = Transition::new(3, Dart::new(7, End::B), Dart::new(2, End::A));
        assert_eq!(t.to_string(), "transition 3 2/a 7/b");
        assert_eq!(t.to_string().parse::<Transition>().unwrap(), t);
        assert!("transition 3 2/a 2/a".parse::<Transition>().is_err());
    }
}
