//! Euler tours, Hamilton cycles and decompositions of line graphs, Euler
//! tour compatibility, perfect sets of tours, and the decomposition splice
//! across an insertion.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::families::InsertMap;
use crate::graph::{components, Dart, EdgeId, MultiGraph, VertexId};
use crate::line::{all_transitions, line_graph, LineGraph, Transition};

/// Closed trail `v_0, e_1, v_1, ..., e_t, v_t = v_0`. `edges[i]` runs from
/// `vertices[i]` to `vertices[(i + 1) % t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTour {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl EulerTour {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        EulerTour { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks incidence and that every edge of `x` is used exactly once.
    pub fn validate(&self, x: &MultiGraph) -> std::result::Result<(), String> {
        let t = self.edges.len();
        if self.vertices.len() != t {
            return Err(format!("{} vertices for {} edges", self.vertices.len(), t));
        }
        if t != x.num_edges() {
            return Err(format!("uses {t} edges, graph has {}", x.num_edges()));
        }
        let mut used = BTreeSet::new();
        for i in 0..t {
            let id = self.edges[i];
            let e = x.edge(id).ok_or_else(|| format!("unknown edge {id}"))?;
            if !used.insert(id) {
                return Err(format!("edge {id} used twice"));
            }
            let (from, to) = (self.vertices[i], self.vertices[(i + 1) % t]);
            if e.key() != (from.min(to), from.max(to)) {
                return Err(format!("edge {id} does not join {from} and {to}"));
            }
        }
        Ok(())
    }

    /// The transition passed through at each visit. Assumes a valid tour.
    pub fn transitions(&self, x: &MultiGraph) -> Vec<Transition> {
        let t = self.edges.len();
        (0..t)
            .map(|i| {
                let v = self.vertices[i];
                let arrive = x.edge(self.edges[(i + t - 1) % t]).unwrap();
                let depart = x.edge(self.edges[i]).unwrap();
                let da = Dart::new(arrive.id, arrive.end_at(v).unwrap());
                let dd = Dart::new(depart.id, depart.end_at(v).unwrap());
                Transition::new(v, da, dd)
            })
            .collect()
    }

    fn reversed(&self) -> EulerTour {
        let t = self.edges.len();
        let mut vertices = Vec::with_capacity(t);
        let mut edges = Vec::with_capacity(t);
        for i in (0..t).rev() {
            vertices.push(self.vertices[(i + 1) % t]);
            edges.push(self.edges[i]);
        }
        EulerTour { vertices, edges }
    }

    fn rotated_to_min(&self) -> EulerTour {
        let Some(k) = (0..self.edges.len()).min_by_key(|&i| self.edges[i]) else {
            return self.clone();
        };
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.rotate_left(k);
        edges.rotate_left(k);
        EulerTour { vertices, edges }
    }

    /// Smallest edge-id first, oriented toward the smaller second element.
    pub fn canonical(&self) -> EulerTour {
        let a = self.rotated_to_min();
        let b = self.reversed().rotated_to_min();
        if (&b.edges, &b.vertices) < (&a.edges, &a.vertices) {
            b
        } else {
            a
        }
    }
}

/// Cyclic sequence of line-graph vertices (base edge-ids).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamCycle {
    pub cycle: Vec<EdgeId>,
}

impl HamCycle {
    pub fn new(cycle: Vec<EdgeId>) -> Self {
        HamCycle { cycle }
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn position(&self, v: EdgeId) -> Option<usize> {
        self.cycle.iter().position(|&x| x == v)
    }

    /// Cycle neighbours `(previous, next)` of the vertex at `pos`.
    pub fn neighbours_at(&self, pos: usize) -> (EdgeId, EdgeId) {
        let n = self.cycle.len();
        (self.cycle[(pos + n - 1) % n], self.cycle[(pos + 1) % n])
    }

    /// Consecutive pairs, each as `(min, max)`.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        let n = self.cycle.len();
        (0..n).map(move |i| {
            let (a, b) = (self.cycle[i], self.cycle[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
    }

    pub fn reversed(&self) -> HamCycle {
        let mut c = self.cycle.clone();
        c.reverse();
        HamCycle { cycle: c }
    }

    /// Smallest id first, oriented toward the smaller neighbour.
    pub fn canonical(&self) -> HamCycle {
        let n = self.cycle.len();
        let Some(k) = (0..n).min_by_key(|&i| self.cycle[i]) else {
            return self.clone();
        };
        let mut c = self.cycle.clone();
        c.rotate_left(k);
        if n > 2 && c[n - 1] < c[1] {
            c[1..].reverse();
        }
        HamCycle { cycle: c }
    }
}

/// Hamilton cycles of one line graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    pub cycles: Vec<HamCycle>,
}

impl Decomposition {
    pub fn new(cycles: Vec<HamCycle>) -> Self {
        Decomposition { cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn canonical(&self) -> Decomposition {
        Decomposition::new(self.cycles.iter().map(HamCycle::canonical).collect())
    }
}

/// First violated condition found by [`validate_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UnknownVertex { cycle: usize, vertex: EdgeId },
    NotACycle { cycle: usize, a: EdgeId, b: EdgeId },
    RepeatedVertex { cycle: usize, vertex: EdgeId },
    NotSpanning { cycle: usize, len: usize, expected: usize },
    EdgeReused { a: EdgeId, b: EdgeId, first: usize, second: usize },
    EdgeUncovered { a: EdgeId, b: EdgeId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownVertex { cycle, vertex } => {
                write!(f, "cycle {cycle}: {vertex} is not a line-graph vertex")
            }
            Violation::NotACycle { cycle, a, b } => {
                write!(f, "not a cycle: cycle {cycle} steps from {a} to non-adjacent {b}")
            }
            Violation::RepeatedVertex { cycle, vertex } => {
                write!(f, "not a Hamilton cycle: cycle {cycle} repeats {vertex}")
            }
            Violation::NotSpanning { cycle, len, expected } => {
                write!(f, "not a Hamilton cycle: cycle {cycle} has {len} vertices, expected {expected}")
            }
            Violation::EdgeReused { a, b, first, second } => {
                write!(f, "edge {a}-{b} used by cycles {first} and {second}")
            }
            Violation::EdgeUncovered { a, b } => write!(f, "edge {a}-{b} is not covered"),
        }
    }
}

/// Ok iff every cycle is a Hamilton cycle of `l` and the cycles partition
/// the edge set of `l`.
pub fn validate_decomposition(l: &LineGraph, d: &Decomposition) -> std::result::Result<(), Violation> {
    let n = l.num_vertices();
    let mut owner: BTreeMap<(EdgeId, EdgeId), usize> = BTreeMap::new();
    for (ci, h) in d.cycles.iter().enumerate() {
        if let Some(&vertex) = h.cycle.iter().find(|&&v| !l.has_vertex(v)) {
            return Err(Violation::UnknownVertex { cycle: ci, vertex });
        }
        let m = h.cycle.len();
        for i in 0..m {
            let (a, b) = (h.cycle[i], h.cycle[(i + 1) % m]);
            if m < 3 || l.line_edge_index(a, b).is_none() {
                return Err(Violation::NotACycle { cycle: ci, a, b });
            }
        }
        let mut seen = BTreeSet::new();
        if let Some(&vertex) = h.cycle.iter().find(|&&v| !seen.insert(v)) {
            return Err(Violation::RepeatedVertex { cycle: ci, vertex });
        }
        if m != n {
            return Err(Violation::NotSpanning { cycle: ci, len: m, expected: n });
        }
        for (a, b) in h.edge_pairs() {
            if let Some(&first) = owner.get(&(a, b)) {
                return Err(Violation::EdgeReused { a, b, first, second: ci });
            }
            owner.insert((a, b), ci);
        }
    }
    if let Some(e) = l.edges().iter().find(|e| !owner.contains_key(&(e.a, e.b))) {
        return Err(Violation::EdgeUncovered { a: e.a, b: e.b });
    }
    Ok(())
}

/// True iff the two cycle neighbours of `uv` lie on different sides of `uv`.
pub fn etc_at(l: &LineGraph, h: &HamCycle, uv: EdgeId) -> Result<bool> {
    let pos = h.position(uv).ok_or(Error::NotOnCycle(uv))?;
    let (p, q) = h.neighbours_at(pos);
    let sp = l.shared(uv, p);
    let sq = l.shared(uv, q);
    Ok(sp.is_some() && sq.is_some() && sp != sq)
}

/// Vertices of `h` at which it is not Euler tour compatible.
pub fn etc_failures(l: &LineGraph, h: &HamCycle) -> Vec<EdgeId> {
    h.cycle
        .iter()
        .copied()
        .filter(|&v| !etc_at(l, h, v).unwrap_or(false))
        .collect()
}

fn require_valid(l: &LineGraph, d: &Decomposition) -> Result<()> {
    validate_decomposition(l, d).map_err(|v| Error::InvalidDecomposition(v.to_string()))
}

pub fn etc_everywhere(l: &LineGraph, d: &Decomposition) -> Result<bool> {
    etc_at_vertex_set(l, d, l.vertices())
}

/// Every cycle of `d` is Euler tour compatible at every vertex of `s`.
pub fn etc_at_vertex_set(l: &LineGraph, d: &Decomposition, s: &[EdgeId]) -> Result<bool> {
    require_valid(l, d)?;
    for h in &d.cycles {
        for &v in s {
            if !etc_at(l, h, v)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Euler tour of the base graph traced by an everywhere compatible
/// Hamilton cycle of its line graph.
pub fn cycle_to_tour(l: &LineGraph, h: &HamCycle) -> Result<EulerTour> {
    let m = h.cycle.len();
    let mut vertices = Vec::with_capacity(m);
    for i in 0..m {
        let (prev, cur) = (h.cycle[(i + m - 1) % m], h.cycle[i]);
        let via = l
            .shared(prev, cur)
            .ok_or_else(|| Error::InvalidDecomposition(format!("not a cycle: {prev} and {cur} are not adjacent")))?;
        vertices.push(via);
    }
    if let Some(&bad) = h.cycle.iter().find(|&&v| !etc_at(l, h, v).unwrap_or(false)) {
        return Err(Error::NotEtc(bad));
    }
    Ok(EulerTour::new(vertices, h.cycle.clone()))
}

/// The Hamilton cycle of `L(x)` given by the edge sequence of a tour.
pub fn tour_to_cycle(x: &MultiGraph, t: &EulerTour) -> Result<HamCycle> {
    t.validate(x).map_err(Error::NotATour)?;
    Ok(HamCycle::new(t.edges.clone()))
}

/// Why a set of tours is not perfect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerfectSetViolation {
    NotEulerian(String),
    NotATour { tour: usize, reason: String },
    CoveredTwice { transition: Transition, first: usize, second: usize },
    Uncovered { transition: Transition },
}

impl fmt::Display for PerfectSetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerfectSetViolation::NotEulerian(r) => write!(f, "graph has no Euler tour: {r}"),
            PerfectSetViolation::NotATour { tour, reason } => write!(f, "not a tour: tour {tour}: {reason}"),
            PerfectSetViolation::CoveredTwice { transition, first, second } => {
                write!(f, "transition covered twice: {transition} (tours {first} and {second})")
            }
            PerfectSetViolation::Uncovered { transition } => write!(f, "transition not covered: {transition}"),
        }
    }
}

/// Ok iff the tours together pass through every transition of `x` exactly once.
pub fn perfect_set_check(x: &MultiGraph, tours: &[EulerTour]) -> std::result::Result<(), PerfectSetViolation> {
    if let Some(&v) = x.vertices().iter().find(|&&v| x.degree(v) % 2 == 1) {
        return Err(PerfectSetViolation::NotEulerian(format!("vertex {v} has odd degree")));
    }
    if components(x).len() > 1 {
        return Err(PerfectSetViolation::NotEulerian("disconnected".into()));
    }
    let mut owner: BTreeMap<Transition, usize> = BTreeMap::new();
    for (ti, tour) in tours.iter().enumerate() {
        tour.validate(x)
            .map_err(|reason| PerfectSetViolation::NotATour { tour: ti, reason })?;
        for tr in tour.transitions(x) {
            if let Some(&first) = owner.get(&tr) {
                return Err(PerfectSetViolation::CoveredTwice { transition: tr, first, second: ti });
            }
            owner.insert(tr, ti);
        }
    }
    if let Some(transition) = all_transitions(x).into_iter().find(|t| !owner.contains_key(t)) {
        return Err(PerfectSetViolation::Uncovered { transition });
    }
    Ok(())
}

/// Hamilton decomposition of `L(y)` built from decompositions of `L(x)` and
/// `L(x')` joined across an insertion.
#[derive(Clone, Debug)]
pub struct Splice {
    pub decomposition: Decomposition,
    /// Line-graph vertices `uu'` and `vv'` of `L(y)`.
    pub new_vertices: [EdgeId; 2],
    /// Compatibility of the result at `uu'` and `vv'`.
    pub etc_at_new: [bool; 2],
}

/// Rotates `h` so that `at` is first and returns the rest as an open path
/// that starts at the neighbour sharing `start_side` with `at`.
fn open_path(
    l: &LineGraph,
    h: &HamCycle,
    at: EdgeId,
    start_side: VertexId,
    cycle: usize,
    sides: (&'static str, &'static str),
) -> Result<Vec<EdgeId>> {
    let pos = h.position(at).ok_or(Error::NotOnCycle(at))?;
    let (p, q) = h.neighbours_at(pos);
    let (sp, sq) = (l.shared(at, p), l.shared(at, q));
    if sp == sq {
        let side = if sp == Some(start_side) { sides.0 } else { sides.1 };
        return Err(Error::SpliceNotEtc { cycle, vertex: at, side });
    }
    let m = h.cycle.len();
    // forward from `at` gives q, ..., p
    let mut path: Vec<EdgeId> = (1..m).map(|k| h.cycle[(pos + k) % m]).collect();
    if sq != Some(start_side) {
        path.reverse();
    }
    Ok(path)
}

/// Joins `H_i` and `H'_i` through the new vertices `uu'` and `vv'`:
/// `J_i = uu', (H_i - uv from the u-side to the v-side), vv',
/// (H'_i - u'v' from the v'-side to the u'-side)`.
pub fn splice(
    lx: &LineGraph,
    dx: &Decomposition,
    lxp: &LineGraph,
    dxp: &Decomposition,
    y: &MultiGraph,
    map: &InsertMap,
) -> Result<Splice> {
    if dx.len() != dxp.len() {
        return Err(Error::CycleCountMismatch(dx.len(), dxp.len()));
    }
    let uv = map.host_edge;
    let upvp = map.piece_edge;
    let host = lx.base().try_edge(uv)?;
    let piece = lxp.base().try_edge(upvp)?;
    let (pu, pv) = (map.up - map.vertex_offset, map.vp - map.vertex_offset);
    if host.key() != (map.u, map.v) || piece.key() != (pu, pv) {
        return Err(Error::InvalidParameter("insertion map does not match the graphs".into()));
    }
    let mut cycles = Vec::with_capacity(dx.len());
    for (i, (h, hp)) in dx.cycles.iter().zip(&dxp.cycles).enumerate() {
        let p = open_path(lx, h, uv, map.u, i, ("u", "v"))?;
        let pp = open_path(lxp, hp, upvp, pv, i, ("v'", "u'"))?;
        let mut j = Vec::with_capacity(p.len() + pp.len() + 2);
        j.push(map.uu_edge());
        j.extend(p);
        j.push(map.vv_edge());
        j.extend(pp.into_iter().map(|e| map.piece_edge_id(e)));
        cycles.push(HamCycle::new(j).canonical());
    }
    let decomposition = Decomposition::new(cycles);
    let ly = line_graph(y)?;
    let new_vertices = [map.uu_edge(), map.vv_edge()];
    let etc_at_new = new_vertices.map(|v| {
        decomposition
            .cycles
            .iter()
            .all(|h| etc_at(&ly, h, v).unwrap_or(false))
    });
    Ok(Splice {
        decomposition,
        new_vertices,
        etc_at_new,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete_graph;

    /// K_4 on w=0, x=1, y=2, z=3; edge ids wx=0 wy=1 wz=2 xy=3 xz=4 yz=5.
    fn k4() -> (MultiGraph, LineGraph) {
        let g = complete_graph(4).unwrap();
        let l = line_graph(&g).unwrap();
        (g, l)
    }

    // (wz, wx, wy, yz, xy, xz)
    fn paper_cycle() -> HamCycle {
        HamCycle::new(vec![2, 0, 1, 5, 3, 4])
    }

    /// Brute-force side test straight from the definition.
    fn etc_oracle(g: &MultiGraph, h: &HamCycle, pos: usize) -> bool {
        let (p, q) = h.neighbours_at(pos);
        let me = g.edge(h.cycle[pos]).unwrap();
        let sp = me.shared_endpoint(g.edge(p).unwrap()).unwrap();
        let sq = me.shared_endpoint(g.edge(q).unwrap()).unwrap();
        sp != sq
    }

    #[test]
    fn worked_example_fails_compatibility() {
        let (g, l) = k4();
        let h = paper_cycle();
        // wx: neighbours wz and wy both share w
        assert!(!etc_at(&l, &h, 0).unwrap());
        for pos in 0..6 {
            assert_eq!(etc_at(&l, &h, h.cycle[pos]).unwrap(), etc_oracle(&g, &h, pos));
        }
        // oracle values: wx (both neighbours at w) and yz (both at y) fail
        assert_eq!(etc_failures(&l, &h), vec![0, 5]);
        assert_eq!(cycle_to_tour(&l, &h).unwrap_err(), Error::NotEtc(0));
    }

    #[test]
    fn etc_at_off_cycle_vertex_errors() {
        let (_, l) = k4();
        let h = HamCycle::new(vec![0, 1, 5]);
        assert_eq!(etc_at(&l, &h, 3), Err(Error::NotOnCycle(3)));
    }

    #[test]
    fn triangle_tour_and_cycle() {
        let tri = complete_graph(3).unwrap(); // ab=0 ac=1 bc=2
        let l = line_graph(&tri).unwrap();
        let tour = EulerTour::new(vec![0, 1, 2], vec![0, 2, 1]);
        let h = tour_to_cycle(&tri, &tour).unwrap();
        assert_eq!(h.cycle, vec![0, 2, 1]);
        assert!(h.cycle.iter().all(|&v| etc_at(&l, &h, v).unwrap()));
        assert_eq!(cycle_to_tour(&l, &h).unwrap(), tour);
        assert_eq!(perfect_set_check(&tri, &[tour]), Ok(()));
    }

    #[test]
    fn bad_tours() {
        let tri = complete_graph(3).unwrap();
        let t = EulerTour::new(vec![0, 1, 2], vec![0, 1, 2]);
        assert!(tour_to_cycle(&tri, &t).is_err());
        assert!(matches!(
            perfect_set_check(&tri, &[t]),
            Err(PerfectSetViolation::NotATour { tour: 0, .. })
        ));
        let k4 = complete_graph(4).unwrap();
        assert!(matches!(perfect_set_check(&k4, &[]), Err(PerfectSetViolation::NotEulerian(_))));
    }

    #[test]
    fn k4_decomposition_validation() {
        let (_, l) = k4();
        // octahedron: antipodal pairs are {wx,yz}, {wy,xz}, {wz,xy}
        let d = Decomposition::new(vec![
            HamCycle::new(vec![0, 1, 2, 5, 3, 4]),
            HamCycle::new(vec![0, 2, 4, 5, 1, 3]),
        ]);
        assert_eq!(validate_decomposition(&l, &d), Ok(()));
        let rev = Decomposition::new(vec![d.cycles[0].reversed(), d.cycles[1].clone()]);
        assert_eq!(validate_decomposition(&l, &rev), Ok(()));
        // wx and yz are antipodal in the octahedron
        let broken = Decomposition::new(vec![
            HamCycle::new(vec![0, 5, 2, 1, 4, 3]),
            d.cycles[1].clone(),
        ]);
        assert!(matches!(
            validate_decomposition(&l, &broken),
            Err(Violation::NotACycle { cycle: 0, a: 0, b: 5 })
        ));
        let short = Decomposition::new(vec![HamCycle::new(vec![0, 1, 2, 5, 3]), d.cycles[1].clone()]);
        assert!(validate_decomposition(&l, &short).is_err());
        let missing = Decomposition::new(vec![d.cycles[0].clone()]);
        assert!(matches!(
            validate_decomposition(&l, &missing),
            Err(Violation::EdgeUncovered { .. })
        ));
        let twice = Decomposition::new(vec![d.cycles[0].clone(), d.cycles[0].reversed()]);
        assert!(matches!(
            validate_decomposition(&l, &twice),
            Err(Violation::EdgeReused { .. })
        ));
    }

    #[test]
    fn decomposition_with_paper_cycle_is_not_everywhere_compatible() {
        let (_, l) = k4();
        let h = paper_cycle();
        let used: BTreeSet<_> = h.edge_pairs().collect();
        // the complement of a Hamilton cycle in the octahedron is a 6-cycle
        let rest: Vec<_> = l.edges().iter().map(|e| (e.a, e.b)).filter(|p| !used.contains(p)).collect();
        let other = trace_single_cycle(&rest);
        let d = Decomposition::new(vec![h, other]);
        assert_eq!(validate_decomposition(&l, &d), Ok(()));
        assert!(!etc_everywhere(&l, &d).unwrap());
    }

    fn trace_single_cycle(pairs: &[(EdgeId, EdgeId)]) -> HamCycle {
        let mut adj: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
        for &(a, b) in pairs {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let start = *adj.keys().next().unwrap();
        let mut cyc = vec![start];
        let mut prev = start;
        let mut cur = adj[&start][0];
        while cur != start {
            cyc.push(cur);
            let next = *adj[&cur].iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        HamCycle::new(cyc)
    }

    #[test]
    fn canonical_forms() {
        let h = HamCycle::new(vec![5, 3, 0, 4, 1]);
        assert_eq!(h.canonical().cycle, vec![0, 3, 5, 1, 4]);
        assert_eq!(h.reversed().canonical(), h.canonical());
        let tri = complete_graph(3).unwrap();
        let t = EulerTour::new(vec![1, 0, 2], vec![0, 1, 2]);
        t.validate(&tri).unwrap();
        let c = t.canonical();
        c.validate(&tri).unwrap();
        assert_eq!(c.edges, vec![0, 1, 2]);
        assert_eq!(t.reversed().canonical(), c);
    }

    #[test]
    fn splice_rejects_count_mismatch() {
        let (g, l) = k4();
        let (y, map) = crate::families::insert(&g, 0, &g, 0).unwrap();
        let one = Decomposition::new(vec![HamCycle::new(vec![0, 1, 2, 5, 4, 3])]);
        let two = Decomposition::new(vec![one.cycles[0].clone(), one.cycles[0].clone()]);
        assert_eq!(
            splice(&l, &one, &l, &two, &y, &map).unwrap_err(),
            Error::CycleCountMismatch(1, 2)
        );
    }

    #[test]
    fn splice_rejects_incompatible_input() {
        let (g, l) = k4();
        let (y, map) = crate::families::insert(&g, 0, &g, 0).unwrap();
        // wx = 0 has neighbours wz, wy in the worked example: both on the w side
        let d = Decomposition::new(vec![paper_cycle()]);
        let ok = Decomposition::new(vec![HamCycle::new(vec![0, 1, 2, 5, 4, 3])]);
        let err = splice(&l, &d, &l, &ok, &y, &map).unwrap_err();
        assert_eq!(err, Error::SpliceNotEtc { cycle: 0, vertex: 0, side: "u" });
    }
}
