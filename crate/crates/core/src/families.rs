//! Graph families: complete graphs, the insertion operation, the ring
//! multigraph `Y(k,t)`, its gadget expansion `X(k,t)` with edge labels, the
//! non-Hamiltonian three-piece graph, and small classical fixtures.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{parse_err, Error, Result};
use crate::graph::{parse_graph_lines, parse_num, write_graph, Edge, EdgeId, MultiGraph, VertexId};

/// `K_n` on `0..n`, edge-ids in lexicographic order of endpoint pairs.
pub fn complete_graph(n: usize) -> Result<MultiGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete graph needs n >= 2, got {n}")));
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    MultiGraph::from_pairs(format!("K{n}"), n, &pairs)
}

/// `K_n - e` with `e = {0, 1}`; returns the graph and the removed pair.
pub fn complete_minus_edge(n: usize) -> Result<(MultiGraph, (VertexId, VertexId))> {
    let k = complete_graph(n)?;
    let pairs: Vec<_> = k.edges().iter().skip(1).map(|e| (e.a, e.b)).collect();
    Ok((MultiGraph::from_pairs(format!("K{n}-e"), n, &pairs)?, (0, 1)))
}

/// How the pieces of an insertion map into the result.
///
/// Vertices of the inserted graph are shifted by `vertex_offset`, its edges
/// by `edge_offset`. The host edge `uv` is reused as the cross edge `uu'` and
/// the removed piece edge `u'v'` (shifted) as `vv'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsertMap {
    pub host_edge: EdgeId,
    pub piece_edge: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub up: VertexId,
    pub vp: VertexId,
    pub vertex_offset: usize,
    pub edge_offset: usize,
}

impl InsertMap {
    pub fn uu_edge(&self) -> EdgeId {
        self.host_edge
    }

    pub fn vv_edge(&self) -> EdgeId {
        self.piece_edge + self.edge_offset
    }

    /// Id in the result of a piece edge other than `u'v'`.
    pub fn piece_edge_id(&self, e: EdgeId) -> EdgeId {
        e + self.edge_offset
    }

    pub fn piece_vertex(&self, w: VertexId) -> VertexId {
        w + self.vertex_offset
    }
}

/// Insertion of `Xp - u'v'` into the edge `uv` of `X`: both edges are
/// replaced by `uu'` and `vv'`. The lower endpoint of `uv` pairs with the
/// lower endpoint of `u'v'`.
pub fn insert(x: &MultiGraph, uv: EdgeId, xp: &MultiGraph, upvp: EdgeId) -> Result<(MultiGraph, InsertMap)> {
    let host = *x.try_edge(uv)?;
    let piece = *xp.try_edge(upvp)?;
    let vertex_offset = x.max_vertex_id().map_or(0, |m| m + 1);
    let edge_offset = x.max_edge_id().map_or(0, |m| m + 1);
    let (u, v) = host.key();
    let (pu, pv) = piece.key();
    let map = InsertMap {
        host_edge: uv,
        piece_edge: upvp,
        u,
        v,
        up: pu + vertex_offset,
        vp: pv + vertex_offset,
        vertex_offset,
        edge_offset,
    };
    let mut edges: Vec<Edge> = x.edges().iter().filter(|e| e.id != uv).copied().collect();
    edges.extend(
        xp.edges()
            .iter()
            .filter(|e| e.id != upvp)
            .map(|e| Edge::new(e.id + edge_offset, e.a + vertex_offset, e.b + vertex_offset)),
    );
    edges.push(Edge::new(map.uu_edge(), u, map.up));
    edges.push(Edge::new(map.vv_edge(), v, map.vp));
    let vertices = x
        .vertices()
        .iter()
        .copied()
        .chain(xp.vertices().iter().map(|&w| w + vertex_offset));
    let g = MultiGraph::new(format!("{}+{}", x.name(), xp.name()), vertices, edges)?;
    Ok((g, map))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Ring multigraph `Y(k,t)`.
    Ring { k: usize, t: usize },
    /// `Y(k,t)` with a copy of `K_{k+1} - e` inserted into every edge.
    Gadget { k: usize, t: usize },
    /// `K_{k+1}` with `K_{k+1} - e` inserted into three edges at one vertex.
    ThreePiece { k: usize },
}

/// A constructed graph together with its named vertices, edges and cuts.
///
/// Indices are 1-based as in the usual notation: `hubs[i]` is `v_i`,
/// `gadgets[(i, j)]` the vertex set of `X_i^j`, `e_labels[(i, j)]` is
/// `e_i^j`, `f_labels[(i, l, j)]` is `f_{i,l}^j`, `line_cuts[i]` is `E_i`.
/// For the three-piece graph `hubs[0]` is the centre `v`, `hubs[i]` is
/// `u_i`, and `edge_cuts[i] = (vv'_i, u_iu'_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledFamily {
    pub kind: FamilyKind,
    pub graph: MultiGraph,
    pub hubs: BTreeMap<usize, VertexId>,
    pub gadgets: BTreeMap<(usize, usize), Vec<VertexId>>,
    pub e_labels: BTreeMap<(usize, usize), EdgeId>,
    pub f_labels: BTreeMap<(usize, usize, usize), EdgeId>,
    pub line_cuts: BTreeMap<usize, Vec<(EdgeId, EdgeId)>>,
    pub edge_cuts: BTreeMap<usize, (EdgeId, EdgeId)>,
    pub insertions: Vec<InsertMap>,
}

impl LabeledFamily {
    fn empty(kind: FamilyKind, graph: MultiGraph) -> Self {
        LabeledFamily {
            kind,
            graph,
            hubs: BTreeMap::new(),
            gadgets: BTreeMap::new(),
            e_labels: BTreeMap::new(),
            f_labels: BTreeMap::new(),
            line_cuts: BTreeMap::new(),
            edge_cuts: BTreeMap::new(),
            insertions: Vec::new(),
        }
    }

    /// Serialize as the graph format followed by label blocks.
    pub fn to_text(&self) -> Result<String> {
        let mut out = String::new();
        write_graph(&self.graph, &mut out)?;
        let w = &mut out;
        match self.kind {
            FamilyKind::Ring { k, t } => writeln!(w, "family ykt {k} {t}"),
            FamilyKind::Gadget { k, t } => writeln!(w, "family xkt {k} {t}"),
            FamilyKind::ThreePiece { k } => writeln!(w, "family theorem4 {k} 0"),
        }
        .unwrap();
        for (i, v) in &self.hubs {
            writeln!(w, "label v {i} {v}").unwrap();
        }
        for ((i, j), vs) in &self.gadgets {
            let vs: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            writeln!(w, "label X {i} {j} {}", vs.join(" ")).unwrap();
        }
        for ((i, j), e) in &self.e_labels {
            writeln!(w, "label e {i} {j} {e}").unwrap();
        }
        for ((i, l, j), e) in &self.f_labels {
            writeln!(w, "label f {i} {l} {j} {e}").unwrap();
        }
        for (i, pairs) in &self.line_cuts {
            let ps: Vec<String> = pairs.iter().map(|(a, b)| format!("{a},{b}")).collect();
            writeln!(w, "cutset E {i} {}", ps.join(" ")).unwrap();
        }
        for (i, (a, b)) in &self.edge_cuts {
            writeln!(w, "cutset C {i} {a},{b}").unwrap();
        }
        for (n, m) in self.insertions.iter().enumerate() {
            writeln!(
                w,
                "label s {n} {} {} {} {} {} {} {} {}",
                m.host_edge, m.piece_edge, m.u, m.v, m.up, m.vp, m.vertex_offset, m.edge_offset
            )
            .unwrap();
        }
        Ok(out)
    }

    /// Parses a family file. A bare graph file parses as a family with no
    /// labels only through [`parse_graph_or_family`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let graph = parse_graph_lines(&mut lines)?;
        let mut fam: Option<LabeledFamily> = None;
        for (ln, line) in lines {
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.is_empty() {
                continue;
            }
            let num = |k: usize| -> Result<usize> {
                let tok = t.get(k).ok_or_else(|| parse_err(ln, "missing field"))?;
                parse_num(ln, tok)
            };
            let arity = |n: usize| -> Result<()> {
                if t.len() == n {
                    Ok(())
                } else {
                    Err(parse_err(ln, format!("expected {n} fields, found {}", t.len())))
                }
            };
            if t[0] == "family" {
                arity(4)?;
                if fam.is_some() {
                    return Err(parse_err(ln, "duplicate family line"));
                }
                let (k, tt) = (num(2)?, num(3)?);
                let kind = match t[1] {
                    "ykt" => FamilyKind::Ring { k, t: tt },
                    "xkt" => FamilyKind::Gadget { k, t: tt },
                    "theorem4" => FamilyKind::ThreePiece { k },
                    other => return Err(parse_err(ln, format!("unknown family `{other}`"))),
                };
                fam = Some(LabeledFamily::empty(kind, graph.clone()));
                continue;
            }
            let f = fam
                .as_mut()
                .ok_or_else(|| parse_err(ln, format!("unknown keyword `{}` before family line", t[0])))?;
            match (t[0], t.get(1).copied()) {
                ("label", Some("v")) => {
                    arity(4)?;
                    f.hubs.insert(num(2)?, num(3)?);
                }
                ("label", Some("X")) => {
                    let vs = (4..t.len()).map(&num).collect::<Result<Vec<_>>>()?;
                    f.gadgets.insert((num(2)?, num(3)?), vs);
                }
                ("label", Some("e")) => {
                    arity(5)?;
                    f.e_labels.insert((num(2)?, num(3)?), num(4)?);
                }
                ("label", Some("f")) => {
                    arity(6)?;
                    f.f_labels.insert((num(2)?, num(3)?, num(4)?), num(5)?);
                }
                ("label", Some("s")) => {
                    arity(11)?;
                    f.insertions.push(InsertMap {
                        host_edge: num(3)?,
                        piece_edge: num(4)?,
                        u: num(5)?,
                        v: num(6)?,
                        up: num(7)?,
                        vp: num(8)?,
                        vertex_offset: num(9)?,
                        edge_offset: num(10)?,
                    });
                }
                ("cutset", Some("E")) => {
                    let pairs = t[3..]
                        .iter()
                        .map(|p| parse_pair(ln, p))
                        .collect::<Result<Vec<_>>>()?;
                    f.line_cuts.insert(num(2)?, pairs);
                }
                ("cutset", Some("C")) => {
                    arity(4)?;
                    f.edge_cuts.insert(num(2)?, parse_pair(ln, t[3])?);
                }
                _ => return Err(parse_err(ln, format!("unknown keyword `{}`", t[0]))),
            }
        }
        fam.ok_or_else(|| parse_err(1, "missing family line"))
    }
}

fn parse_pair(ln: usize, tok: &str) -> Result<(EdgeId, EdgeId)> {
    let (a, b) = tok
        .split_once(',')
        .ok_or_else(|| parse_err(ln, format!("expected `<a>,<b>`, found `{tok}`")))?;
    Ok((parse_num(ln, a)?, parse_num(ln, b)?))
}

/// A file holding either a bare graph or a labeled family.
pub fn parse_graph_or_family(text: &str) -> Result<(MultiGraph, Option<LabeledFamily>)> {
    match MultiGraph::parse(text) {
        Ok(g) => Ok((g, None)),
        Err(plain) => match LabeledFamily::parse(text) {
            Ok(f) => Ok((f.graph.clone(), Some(f))),
            // a bare graph with a stray keyword reports the graph parser's error
            Err(_) if !text.lines().any(|l| l.trim_start().starts_with("family")) => Err(plain),
            Err(e) => Err(e),
        },
    }
}

fn check_kt(k: usize, t: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be >= 3, got {k}")));
    }
    if t < 4 || t % 2 == 1 {
        return Err(Error::InvalidParameter(format!("t must be even and >= 4, got {t}")));
    }
    Ok(())
}

/// Number of parallel edges from `v_i` to `v_{i+1}` in `Y(k,t)`.
fn ring_multiplicity(k: usize, i: usize) -> usize {
    if i % 2 == 1 {
        2
    } else {
        k - 2
    }
}

/// `Y(k,t)`: hubs `v_1..v_t` (vertex `i-1`), two edges `v_iv_{i+1}` for odd
/// `i` and `k-2` for even `i`, with `v_{t+1} = v_1`.
pub fn build_y(k: usize, t: usize) -> Result<LabeledFamily> {
    check_kt(k, t)?;
    let mut pairs = Vec::new();
    for i in 1..=t {
        for _ in 0..ring_multiplicity(k, i) {
            pairs.push((i - 1, i % t));
        }
    }
    let g = MultiGraph::from_pairs(format!("Y_{k}_{t}"), t, &pairs)?;
    let mut fam = LabeledFamily::empty(FamilyKind::Ring { k, t }, g);
    fam.hubs = (1..=t).map(|i| (i, i - 1)).collect();
    Ok(fam)
}

/// `X(k,t)`: a copy of `K_{k+1} - e` inserted into every edge of `Y(k,t)`,
/// gadgets allocated in `(i, j)` order, with all edge labels and the
/// line-graph edge sets `E_i`.
pub fn build_x(k: usize, t: usize) -> Result<LabeledFamily> {
    let ring = build_y(k, t)?;
    let piece = complete_graph(k + 1)?;
    let mut g = ring.graph.clone();
    let mut fam = LabeledFamily::empty(FamilyKind::Gadget { k, t }, ring.graph.clone());
    fam.hubs = ring.hubs.clone();
    let hub = |i: usize| (i - 1) % t;

    // cross edges at each hub, keyed by (i, j) as e_i^j
    let mut edge_id = 0;
    for i in 1..=t {
        for j in 1..=ring_multiplicity(k, i) {
            let (h, m) = insert(&g, edge_id, &piece, 0)?;
            g = h;
            edge_id += 1;
            fam.gadgets.insert(
                (i, j),
                (0..=k).map(|w| m.piece_vertex(w)).collect(),
            );
            let at = |x: VertexId| if x == m.u { m.uu_edge() } else { m.vv_edge() };
            let (lo, hi) = (hub(i), hub(i + 1));
            let label = if i % 2 == 1 { j } else { j + 2 };
            let next = if i == t { 1 } else { i + 1 };
            fam.e_labels.insert((i, label), at(lo));
            fam.e_labels.insert((next, label), at(hi));
            fam.insertions.push(m);
        }
    }
    fam.graph = g.with_name(format!("X_{k}_{t}"));

    for i in 1..=t {
        let gi = if i % 2 == 1 { i } else { i - 1 };
        for j in 1..=2 {
            let e = fam.graph.try_edge(fam.e_labels[&(i, j)])?;
            let attach = e.other(hub(i)).expect("e label touches its hub");
            let gadget = &fam.gadgets[&(gi, j)];
            let mut inner: Vec<EdgeId> = fam
                .graph
                .darts_at(attach)
                .iter()
                .map(|d| d.edge)
                .filter(|&id| {
                    let e = fam.graph.edge(id).unwrap();
                    gadget.contains(&e.a) && gadget.contains(&e.b)
                })
                .collect();
            inner.sort_unstable();
            for (l, id) in inner.into_iter().enumerate() {
                fam.f_labels.insert((i, l + 1, j), id);
            }
        }
        let mut cut = Vec::with_capacity(2 * (k - 2));
        for j in 1..=2 {
            for jj in 3..=k {
                let (a, b) = (fam.e_labels[&(i, j)], fam.e_labels[&(i, jj)]);
                cut.push((a.min(b), a.max(b)));
            }
        }
        cut.sort_unstable();
        fam.line_cuts.insert(i, cut);
    }
    Ok(fam)
}

/// Smallest even `t >= max(4, k)`: the ring length for which the
/// non-decomposability argument applies.
pub fn theorem1_ring_length(k: usize) -> usize {
    let t = k.max(4);
    t + t % 2
}

/// `K_{k+1}` with centre `v = 0` and `u_i = i`; for `i = 1, 2, 3` a copy of
/// `K_{k+1} - u'_iv'_i` is inserted into `vu_i`. The cross edge at `v` is
/// `vv'_i` and the one at `u_i` is `u_iu'_i`.
pub fn build_theorem4(k: usize) -> Result<LabeledFamily> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("k must be >= 4, got {k}")));
    }
    let host = complete_graph(k + 1)?;
    let piece = complete_graph(k + 1)?;
    let mut g = host.clone();
    let mut fam = LabeledFamily::empty(FamilyKind::ThreePiece { k }, host);
    fam.hubs.insert(0, 0);
    for i in 1..=3 {
        fam.hubs.insert(i, i);
        // {0, i} is edge i-1 in lexicographic order
        let (h, m) = insert(&g, i - 1, &piece, 0)?;
        g = h;
        debug_assert_eq!((m.u, m.v), (0, i));
        fam.gadgets.insert((i, 1), (0..=k).map(|w| m.piece_vertex(w)).collect());
        fam.edge_cuts.insert(i, (m.uu_edge(), m.vv_edge()));
        fam.insertions.push(m);
    }
    fam.graph = g.with_name(format!("T4_{k}"));
    Ok(fam)
}

/// Two copies of `K_4` with one edge subdivided each, the subdivision
/// vertices joined by a bridge.
pub fn bridged_cubic_example() -> MultiGraph {
    let mut pairs = Vec::new();
    for base in [0, 5] {
        pairs.extend([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)].map(|(a, b)| (a + base, b + base)));
    }
    pairs.push((4, 9));
    MultiGraph::from_pairs("bridged", 10, &pairs).expect("fixture is valid")
}

pub fn petersen() -> MultiGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::from_pairs("petersen", 10, &pairs).expect("fixture is valid")
}

pub fn k33() -> MultiGraph {
    let mut pairs = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            pairs.push((a, b));
        }
    }
    MultiGraph::from_pairs("K33", 6, &pairs).expect("fixture is valid")
}

/// Triangular prism.
pub fn prism() -> MultiGraph {
    let pairs = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
    MultiGraph::from_pairs("prism", 6, &pairs).expect("fixture is valid")
}
