use crate::graph::{EdgeId, MultiGraph};

use super::{Meter, SearchBudget, SearchOutcome, Witness};

/// Exhaustive Hamilton cycle search.
///
/// The path grows from a minimum-degree vertex. After every extension the
/// unvisited vertices together with both path ends must admit a Hamilton
/// path between the ends: each unvisited vertex needs two available
/// neighbours, the remainder plus a virtual end-to-end edge must be
/// 2-connected, and a vertex with exactly two available neighbours forces
/// the edges to them.
pub fn find_hamilton_cycle(g: &MultiGraph, budget: SearchBudget) -> SearchOutcome {
    find_hamilton_cycle_with_cuts(g, &[], budget)
}

/// As [`find_hamilton_cycle`], with labeled 2-edge cuts: both edges of a
/// cut separating the graph lie on every Hamilton cycle, so they are
/// treated as required edges. Pairs that do not separate the graph are
/// ignored.
pub fn find_hamilton_cycle_with_cuts(
    g: &MultiGraph,
    cuts: &[(EdgeId, EdgeId)],
    budget: SearchBudget,
) -> SearchOutcome {
    let mut s = HamSearch::new(g, cuts, budget);
    let found = s.run();
    let witness = found.map(|p| Witness::Cycle(p.into_iter().map(|i| g.vertices()[i]).collect()));
    s.meter.outcome(witness)
}

struct HamSearch {
    n: usize,
    adj: Vec<Vec<usize>>,
    adjm: Vec<Vec<bool>>,
    required: Vec<(usize, usize)>,
    visited: Vec<bool>,
    path: Vec<usize>,
    meter: Meter,
}

impl HamSearch {
    fn new(g: &MultiGraph, cuts: &[(EdgeId, EdgeId)], budget: SearchBudget) -> Self {
        let n = g.num_vertices();
        let mut adjm = vec![vec![false; n]; n];
        for e in g.edges() {
            let a = g.vertex_index(e.a).unwrap();
            let b = g.vertex_index(e.b).unwrap();
            adjm[a][b] = true;
            adjm[b][a] = true;
        }
        let adj = (0..n)
            .map(|i| (0..n).filter(|&j| adjm[i][j]).collect())
            .collect();
        let mut required = Vec::new();
        for &(x, y) in cuts {
            let (Some(ex), Some(ey)) = (g.edge(x), g.edge(y)) else {
                continue;
            };
            let removed = [x, y].into_iter().collect();
            if g.without_edges(&removed).is_connected() {
                continue;
            }
            for e in [ex, ey] {
                let pair = (g.vertex_index(e.a).unwrap(), g.vertex_index(e.b).unwrap());
                if !required.contains(&pair) {
                    required.push(pair);
                }
            }
        }
        HamSearch {
            n,
            adj,
            adjm,
            required,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            meter: Meter::new(budget),
        }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        if !self.meter.tick() || self.n < 3 {
            return None;
        }
        if self.adj.iter().any(|a| a.len() < 2) {
            return None;
        }
        let mut req_deg = vec![0; self.n];
        for &(a, b) in &self.required {
            req_deg[a] += 1;
            req_deg[b] += 1;
        }
        if req_deg.iter().any(|&d| d > 2) {
            return None;
        }
        let start = (0..self.n).min_by_key(|&i| (self.adj[i].len(), i)).unwrap();
        self.visited[start] = true;
        self.path.push(start);
        if self.extend() {
            Some(self.path.clone())
        } else {
            None
        }
    }

    fn extend(&mut self) -> bool {
        let end = *self.path.last().unwrap();
        let start = self.path[0];
        if self.path.len() == self.n {
            return self.adjm[end][start];
        }
        let candidates: Vec<usize> = match self.forced_next(end, start) {
            Forced::Dead => return false,
            Forced::One(w) => vec![w],
            Forced::Free => self.adj[end].iter().copied().filter(|&w| !self.visited[w]).collect(),
        };
        for w in candidates {
            if !self.meter.tick() {
                return false;
            }
            self.visited[w] = true;
            self.path.push(w);
            if self.feasible() && self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[w] = false;
            if self.meter.exceeded {
                return false;
            }
        }
        false
    }

    /// Number of neighbours of unvisited `u` that can still be its cycle
    /// neighbours: unvisited ones and the two path ends.
    fn available(&self, u: usize, start: usize, end: usize) -> usize {
        self.adj[u]
            .iter()
            .filter(|&&w| !self.visited[w] || w == start || w == end)
            .count()
    }

    fn forced_next(&self, end: usize, start: usize) -> Forced {
        let mut forced = None;
        if self.path.len() > 1 {
            for &(a, b) in &self.required {
                let other = if a == end {
                    b
                } else if b == end {
                    a
                } else {
                    continue;
                };
                let prev = self.path[self.path.len() - 2];
                if other == prev || (other == start && self.path.len() == self.n) {
                    continue;
                }
                if self.visited[other] {
                    return Forced::Dead;
                }
                if forced.is_some_and(|f| f != other) {
                    return Forced::Dead;
                }
                forced = Some(other);
            }
        }
        // at the root both cycle neighbours of the start are still open
        let ends_differ = self.path.len() > 1;
        for &w in &self.adj[end] {
            if self.visited[w] || !ends_differ {
                continue;
            }
            if self.available(w, start, end) == 2 {
                if forced.is_some_and(|f| f != w) {
                    return Forced::Dead;
                }
                forced = Some(w);
            }
        }
        match forced {
            Some(w) => Forced::One(w),
            None => Forced::Free,
        }
    }

    fn feasible(&self) -> bool {
        let start = self.path[0];
        let end = *self.path.last().unwrap();
        let remaining = self.n - self.path.len();
        if remaining == 0 {
            return true;
        }
        // interior path vertices are closed: their required edges must be on the path
        for &(a, b) in &self.required {
            for (x, y) in [(a, b), (b, a)] {
                if self.visited[x] && x != start && x != end && !self.path_has_edge(x, y) {
                    return false;
                }
            }
        }
        let mut need_start = 0;
        for u in 0..self.n {
            if self.visited[u] {
                continue;
            }
            let av = self.available(u, start, end);
            if av < 2 {
                return false;
            }
            if av == 2 && self.adjm[u][start] {
                need_start += 1;
            }
        }
        if need_start > 1 {
            return false;
        }
        if !self.adj[end].iter().any(|&w| !self.visited[w])
            || !self.adj[start].iter().any(|&w| !self.visited[w])
        {
            return false;
        }
        self.remainder_biconnected(start, end)
    }

    fn path_has_edge(&self, x: usize, y: usize) -> bool {
        let pos = self.path.iter().position(|&p| p == x).unwrap();
        (pos > 0 && self.path[pos - 1] == y) || self.path.get(pos + 1) == Some(&y)
    }

    /// Unvisited vertices plus both ends, with a virtual end-to-end edge,
    /// must be connected without articulation points.
    fn remainder_biconnected(&self, start: usize, end: usize) -> bool {
        let n = self.n;
        let in_r = |u: usize| !self.visited[u] || u == start || u == end;
        let neighbours = |u: usize| -> Vec<usize> {
            let mut out: Vec<usize> = self.adj[u]
                .iter()
                .copied()
                .filter(|&w| in_r(w) && !((u == start && w == end) || (u == end && w == start)))
                .collect();
            if u == start {
                out.push(end);
            } else if u == end {
                out.push(start);
            }
            out
        };
        let size = (0..n).filter(|&u| in_r(u)).count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        // iterative lowpoint DFS rooted at `start`
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
        disc[start] = timer;
        low[start] = timer;
        timer += 1;
        stack.push((start, usize::MAX, neighbours(start), 0));
        let mut root_children = 0;
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if top.3 < top.2.len() {
                let w = top.2[top.3];
                top.3 += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == start {
                        root_children += 1;
                    }
                    let nb = neighbours(w);
                    stack.push((w, u, nb, 0));
                } else if w != parent {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(up) = stack.last() {
                    let p = up.0;
                    low[p] = low[p].min(low[u]);
                    if p != start && low[u] >= disc[p] {
                        return false;
                    }
                }
            }
        }
        timer == size && root_children <= 1
    }
}

enum Forced {
    Dead,
    One(usize),
    Free,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_theorem4, build_x, complete_graph, k33, petersen, prism};
    use crate::solvers::SearchStatus;

    fn assert_valid_cycle(g: &MultiGraph, c: &[usize]) {
        assert_eq!(c.len(), g.num_vertices());
        let mut s = c.to_vec();
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), c.len());
        for i in 0..c.len() {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            assert!(g.neighbors(a).any(|w| w == b), "{a}-{b}");
        }
    }

    #[test]
    fn small_hamiltonian_graphs() {
        for g in [complete_graph(4).unwrap(), complete_graph(5).unwrap(), k33(), prism()] {
            let out = find_hamilton_cycle(&g, SearchBudget::default());
            let Some(Witness::Cycle(c)) = out.witness else { panic!("{}", g.name()) };
            assert_valid_cycle(&g, &c);
        }
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let out = find_hamilton_cycle(&petersen(), SearchBudget::default());
        assert_eq!(out.status, SearchStatus::Exhausted);
    }

    #[test]
    fn gadget_ring_is_not_hamiltonian() {
        let x = build_x(3, 4).unwrap();
        let out = find_hamilton_cycle(&x.graph, SearchBudget::default());
        assert_eq!(out.status, SearchStatus::Exhausted);
    }

    #[test]
    fn required_cut_edges_short_circuit() {
        let f = build_theorem4(4).unwrap();
        let cuts: Vec<_> = f.edge_cuts.values().copied().collect();
        let out = find_hamilton_cycle_with_cuts(&f.graph, &cuts, SearchBudget::default());
        assert_eq!(out.status, SearchStatus::Exhausted);
        assert_eq!(out.nodes_explored, 1);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let x = build_x(3, 4).unwrap();
        let b = SearchBudget::new(2, std::time::Duration::from_secs(10)).unwrap();
        let out = find_hamilton_cycle(&x.graph, b);
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
    }
}
