use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{components, Dart, EdgeId, End, MultiGraph};
use crate::line::LineGraph;
use crate::tours::{Decomposition, EulerTour, HamCycle};

use super::slots::{Link, SlotProblem};
use super::{Meter, SearchBudget, SearchOutcome, Witness};

/// Exhaustive search for a Hamilton decomposition of a `2r`-regular line
/// graph: every line-graph edge goes to one of `r` cycles, each vertex
/// meets every cycle twice, and no cycle closes early. At each vertex of
/// `etc_required` every cycle must use one neighbour from each side.
pub fn find_hamilton_decomposition(
    l: &LineGraph,
    etc_required: Option<&[EdgeId]>,
    budget: SearchBudget,
) -> Result<SearchOutcome> {
    let deg = match l.is_regular() {
        Some(d) if d > 0 && d % 2 == 0 => d,
        _ => return Err(Error::NoDecompositionPossible),
    };
    let slots = deg / 2;
    let constrained: BTreeSet<EdgeId> = etc_required.unwrap_or(&[]).iter().copied().collect();
    let base = l.base();

    // one group per vertex, or one per side at constrained vertices
    let mut group_cap = Vec::new();
    let mut group_of = Vec::with_capacity(l.num_vertices());
    for &v in l.vertices() {
        let first = group_cap.len();
        if constrained.contains(&v) {
            group_cap.extend([1, 1]);
            let e = base.edge(v).unwrap();
            group_of.push((first, Some((e.a, first + 1))));
        } else {
            group_cap.push(2);
            group_of.push((first, None));
        }
    }
    let group_for = |i: usize, via| match group_of[i] {
        (g, Some((a, other))) => if via == a { g } else { other },
        (g, None) => g,
    };
    let links = l
        .edges()
        .iter()
        .map(|e| {
            let (ia, ib) = (l.index_of(e.a).unwrap(), l.index_of(e.b).unwrap());
            Link {
                a: ia,
                b: ib,
                group_a: group_for(ia, e.via),
                group_b: group_for(ib, e.via),
            }
        })
        .collect();
    let problem = SlotProblem {
        nodes: l.num_vertices(),
        slots,
        group_cap,
        links,
        fixed: Vec::new(),
    };
    let mut meter = Meter::new(budget);
    let found = problem.solve(&mut meter).map(|assign| {
        let cycles = (0..slots)
            .map(|c| {
                let pairs: Vec<(usize, usize)> = problem
                    .links
                    .iter()
                    .zip(&assign)
                    .filter(|(_, &s)| s == c)
                    .map(|(k, _)| (k.a, k.b))
                    .collect();
                let order = trace_cycle(l.num_vertices(), &pairs);
                HamCycle::new(order.into_iter().map(|i| l.vertices()[i]).collect()).canonical()
            })
            .collect();
        Witness::Decomposition(Decomposition::new(cycles))
    });
    Ok(meter.outcome(found))
}

/// Follows a 2-regular single-cycle edge list from node 0.
fn trace_cycle(n: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::with_capacity(2); n];
    for &(a, b) in pairs {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut order = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, 0);
    loop {
        order.push(cur);
        let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
        prev = cur;
        cur = next;
        if cur == 0 {
            break order;
        }
    }
}

/// Exhaustive search for a perfect set of Euler tours of a connected
/// `k`-regular graph, `k` even. Nodes are darts; at every vertex each of the
/// `k - 1` tour slots receives a perfect matching on the darts there, and a
/// slot is accepted only if its transitions trace one closed trail.
pub fn find_perfect_euler_set(x: &MultiGraph, budget: SearchBudget) -> Result<SearchOutcome> {
    if x.vertices().iter().any(|&v| x.degree(v) % 2 == 1) || x.num_edges() == 0 {
        return Err(Error::NoEulerTour);
    }
    if components(x).len() > 1 {
        return Err(Error::NoEulerTour);
    }
    let k = x
        .is_regular()
        .ok_or_else(|| Error::InvalidParameter("perfect Euler sets need a regular graph".into()))?;
    let slots = k - 1;
    let dart_index = |d: Dart| 2 * x.edge_index(d.edge).unwrap() + usize::from(d.end == End::B);
    let nodes = 2 * x.num_edges();
    let mut links = Vec::new();
    for &v in x.vertices() {
        let darts = x.darts_at(v);
        for (i, &d1) in darts.iter().enumerate() {
            for &d2 in &darts[i + 1..] {
                let (a, b) = (dart_index(d1), dart_index(d2));
                links.push(Link { a, b, group_a: a, group_b: b });
            }
        }
    }
    let fixed = (0..x.num_edges()).map(|i| (2 * i, 2 * i + 1)).collect();
    let problem = SlotProblem {
        nodes,
        slots,
        group_cap: vec![1; nodes],
        links,
        fixed,
    };
    let mut meter = Meter::new(budget);
    let found = problem.solve(&mut meter).map(|assign| {
        let tours = (0..slots)
            .map(|c| {
                let mut partner = vec![usize::MAX; nodes];
                for (l, &s) in problem.links.iter().zip(&assign) {
                    if s == c {
                        partner[l.a] = l.b;
                        partner[l.b] = l.a;
                    }
                }
                trace_tour(x, &partner).canonical()
            })
            .collect();
        Witness::Tours(tours)
    });
    Ok(meter.outcome(found))
}

/// Leaves along the first edge from its `a` end, crosses each edge and
/// continues through the transition partner of the arrival dart.
fn trace_tour(x: &MultiGraph, partner: &[usize]) -> EulerTour {
    let edges = x.edges();
    let mut vertices = Vec::with_capacity(edges.len());
    let mut ids = Vec::with_capacity(edges.len());
    let mut leave = 0;
    loop {
        let e = &edges[leave / 2];
        let end = if leave % 2 == 0 { End::A } else { End::B };
        vertices.push(e.endpoint(end));
        ids.push(e.id);
        leave = partner[leave ^ 1];
        if leave == 0 {
            break;
        }
    }
    EulerTour::new(vertices, ids)
}
