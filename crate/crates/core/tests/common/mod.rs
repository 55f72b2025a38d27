//! Independent oracles and generators shared by the integration tests.
//! Nothing here calls the search or validation code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use linegraph_hd::graph::{Edge, MultiGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Adjacency matrix over vertex positions.
pub fn adjacency(g: &MultiGraph) -> Vec<Vec<bool>> {
    let n = g.num_vertices();
    let pos = |v| g.vertices().iter().position(|&w| w == v).unwrap();
    let mut m = vec![vec![false; n]; n];
    for e in g.edges() {
        m[pos(e.a)][pos(e.b)] = true;
        m[pos(e.b)][pos(e.a)] = true;
    }
    m
}

/// Hamiltonicity by trying every ordering of the vertices after the first.
pub fn hamiltonian_by_permutations(g: &MultiGraph) -> bool {
    let n = g.num_vertices();
    if n < 3 {
        return false;
    }
    let adj = adjacency(g);
    let mut rest: Vec<usize> = (1..n).collect();
    // Heap's algorithm
    let check = |p: &[usize]| {
        adj[0][p[0]] && adj[p[p.len() - 1]][0] && p.windows(2).all(|w| adj[w[0]][w[1]])
    };
    if check(&rest) {
        return true;
    }
    let m = rest.len();
    let mut c = vec![0; m];
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                rest.swap(0, i);
            } else {
                rest.swap(c[i], i);
            }
            if check(&rest) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Hamiltonicity by dynamic programming over vertex subsets.
pub fn hamiltonian_by_subsets(g: &MultiGraph) -> bool {
    let n = g.num_vertices();
    if n < 3 {
        return false;
    }
    assert!(n <= 20);
    let adj = adjacency(g);
    // reach[mask][v]: a path from 0 through exactly `mask` ends at v
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1usize..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for (v, row) in adj.iter().enumerate() {
            if ends >> v & 1 == 0 {
                continue;
            }
            for (w, &edge) in row.iter().enumerate() {
                if edge && mask >> w & 1 == 0 {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    let full = reach[(1 << n) - 1];
    (1..n).any(|v| full >> v & 1 == 1 && adj[v][0])
}

fn union_find_components(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut count = n;
    for (a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// Number of components of `g` with the edges at `skip` positions removed.
pub fn component_count(g: &MultiGraph, skip: &BTreeSet<usize>) -> usize {
    let pos = |v| g.vertices().iter().position(|&w| w == v).unwrap();
    union_find_components(
        g.num_vertices(),
        g.edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| !skip.contains(i))
            .map(|(_, e)| (pos(e.a), pos(e.b))),
    )
}

/// Size of a smallest disconnecting edge set, by enumerating subsets of
/// growing size.
pub fn min_cut_by_subsets(g: &MultiGraph) -> usize {
    let m = g.num_edges();
    let base = component_count(g, &BTreeSet::new());
    for size in 0..=m {
        let mut chosen: Vec<usize> = (0..size).collect();
        loop {
            let skip: BTreeSet<usize> = chosen.iter().copied().collect();
            if component_count(g, &skip) > base {
                return size;
            }
            // next combination
            let mut i = size;
            while i > 0 && chosen[i - 1] == m - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            chosen[i - 1] += 1;
            for j in i..size {
                chosen[j] = chosen[j - 1] + 1;
            }
        }
    }
    m
}

/// Line-graph adjacency computed directly from shared endpoints.
pub fn line_adjacent(g: &MultiGraph, a: usize, b: usize) -> bool {
    let (ea, eb) = (g.edge(a).unwrap(), g.edge(b).unwrap());
    a != b && (ea.a == eb.a || ea.a == eb.b || ea.b == eb.a || ea.b == eb.b)
}

/// Random connected simple graph on `n` vertices: a random spanning tree
/// plus each remaining pair with probability `p`.
pub fn random_connected_simple(rng: &mut impl Rng, n: usize, p: f64) -> MultiGraph {
    let mut pairs = BTreeSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        pairs.insert((a.min(b), a.max(b)));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.insert((a, b));
            }
        }
    }
    let pairs: Vec<_> = pairs.into_iter().collect();
    MultiGraph::from_pairs("rand", n, &pairs).unwrap()
}

/// Random loopless multigraph with edge ids shuffled.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> MultiGraph {
    let mut ids: Vec<usize> = (0..m).map(|i| 3 * i + 1).collect();
    ids.shuffle(rng);
    let edges = ids.into_iter().map(|id| {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        Edge::new(id, a, b)
    });
    MultiGraph::new("multi", 0..n, edges).unwrap()
}

/// Random simple `k`-regular graph on `n` vertices by pairing stubs and
/// retrying on loops or repeated pairs.
pub fn random_regular(rng: &mut impl Rng, n: usize, k: usize) -> MultiGraph {
    assert!((n * k).is_multiple_of(2) && k < n);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        stubs.shuffle(rng);
        let mut pairs = BTreeSet::new();
        let ok = stubs.chunks(2).all(|c| {
            let (a, b) = (c[0].min(c[1]), c[0].max(c[1]));
            a != b && pairs.insert((a, b))
        });
        if ok {
            let pairs: Vec<_> = pairs.into_iter().collect();
            return MultiGraph::from_pairs(format!("reg{k}_{n}"), n, &pairs).unwrap();
        }
    }
}

/// The same graph with vertex `v` renamed `perm[v]` and edges re-listed in
/// a shuffled order under fresh ids; returns the graph and the old-to-new
/// edge id map.
pub fn relabel(g: &MultiGraph, perm: &[usize], rng: &mut impl Rng) -> (MultiGraph, Vec<(usize, usize)>) {
    let mut new_ids: Vec<usize> = (0..g.num_edges()).map(|i| 2 * i + 5).collect();
    new_ids.shuffle(rng);
    let map: Vec<(usize, usize)> = g.edges().iter().map(|e| e.id).zip(new_ids).collect();
    let edges = g
        .edges()
        .iter()
        .zip(&map)
        .map(|(e, &(_, id))| Edge::new(id, perm[e.a], perm[e.b]));
    (MultiGraph::new(g.name(), 0..g.num_vertices(), edges).unwrap(), map)
}
