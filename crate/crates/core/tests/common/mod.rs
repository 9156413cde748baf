//! Brute-force oracles shared by the integration tests. They only use
//! `Graph::n`, `Graph::has_edge` and plain distances, never the search
//! routines they check.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ubg_core::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("valid edge list")
}

pub fn claw_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3)]
}

pub fn net_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
}

/// Sun on `2k` vertices: hub `0..k` is a clique, rim vertex `k + i` sees hub
/// vertices `i` and `i + 1 mod k`.
pub fn sun_edges(k: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            e.push((i, j));
        }
        e.push((i, k + i));
        e.push(((i + 1) % k, k + i));
    }
    e
}

pub fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
    (0..k).map(|i| (i, (i + 1) % k)).collect()
}

pub fn star_edges(leaves: usize) -> Vec<(usize, usize)> {
    (1..=leaves).map(|i| (0, i)).collect()
}

/// Every graph on `n` labeled vertices, by edge mask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        graph(n, &edges)
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    graph(n, &edges)
}

fn injections(k: usize, n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(
        k: usize,
        n: usize,
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                if go(k, n, cur, used, f) {
                    return true;
                }
                cur.pop();
                used[v] = false;
            }
        }
        false
    }
    go(k, n, &mut Vec::new(), &mut vec![false; n], f)
}

/// Whether `g` has an induced copy of the pattern on `k` vertices, by
/// trying every injective map.
pub fn naive_induced(k: usize, pattern: &[(usize, usize)], g: &Graph) -> bool {
    if k > g.n() {
        return false;
    }
    let mut adj = vec![vec![false; k]; k];
    for &(u, v) in pattern {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    injections(k, g.n(), &mut |m| {
        (0..k).all(|i| ((i + 1)..k).all(|j| adj[i][j] == g.has_edge(m[i], m[j])))
    })
}

fn subset_vertices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn induced_connected(g: &Graph, vs: &[usize]) -> bool {
    if vs.is_empty() {
        return false;
    }
    let mut seen = vec![false; vs.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..vs.len() {
            if !seen[j] && g.has_edge(vs[i], vs[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Whether some vertex subset of size at least four induces a cycle.
pub fn naive_has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.n();
    (0..1u64 << n).any(|mask| {
        let vs = subset_vertices(mask, n);
        vs.len() >= 4
            && vs
                .iter()
                .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
            && induced_connected(g, &vs)
    })
}

pub fn naive_has_sun(g: &Graph) -> bool {
    (3..=g.n() / 2).any(|k| naive_induced(2 * k, &sun_edges(k), g))
}

pub fn naive_unit_interval(g: &Graph) -> bool {
    !naive_has_long_induced_cycle(g)
        && !naive_induced(4, &claw_edges(), g)
        && !naive_induced(6, &net_edges(), g)
        && !naive_induced(6, &sun_edges(3), g)
}

/// Depth-first search over vertex orders of the given vertices.
pub fn brute_hamiltonian_path(g: &Graph, vs: &[usize]) -> bool {
    fn go(
        g: &Graph,
        vs: &[usize],
        used: &mut Vec<bool>,
        last: Option<usize>,
        depth: usize,
    ) -> bool {
        if depth == vs.len() {
            return true;
        }
        for i in 0..vs.len() {
            if used[i] || last.is_some_and(|l| !g.has_edge(vs[l], vs[i])) {
                continue;
            }
            used[i] = true;
            if go(g, vs, used, Some(i), depth + 1) {
                return true;
            }
            used[i] = false;
        }
        false
    }
    vs.is_empty() || go(g, vs, &mut vec![false; vs.len()], None, 0)
}

pub fn naive_hamiltonian_hereditary(g: &Graph) -> bool {
    let n = g.n();
    (1..1u64 << n).all(|mask| {
        let vs = subset_vertices(mask, n);
        !induced_connected(g, &vs) || brute_hamiltonian_path(g, &vs)
    })
}

/// Whether `order` lists every vertex once and each vertex's later
/// neighbours are pairwise adjacent.
pub fn naive_is_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return false;
    }
    (0..n).all(|i| {
        let later: Vec<usize> = order[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(order[i], w))
            .collect();
        later
            .iter()
            .all(|&a| later.iter().all(|&b| a == b || g.has_edge(a, b)))
    })
}

/// The proper interval graph of a nondecreasing reach sequence: vertex `i`
/// is adjacent to every `j` with `i < j <= reach[i]`.
pub fn reach_graph(reach: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for (i, &r) in reach.iter().enumerate() {
        for j in (i + 1)..=r {
            edges.push((i, j));
        }
    }
    graph(reach.len(), &edges)
}

/// Every nondecreasing reach sequence on `n` vertices. Each unit interval
/// graph on `n` vertices is isomorphic to one of these.
pub fn all_reach_sequences(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == n {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0).max(i);
        for r in lo..n {
            cur.push(r);
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

pub fn random_reach_sequence(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut reach = Vec::with_capacity(n);
    let mut prev = 0;
    for i in 0..n {
        let lo = prev.max(i);
        let r = (lo + rng.gen_range(0..3)).min(n - 1);
        reach.push(r);
        prev = r;
    }
    reach
}

/// `g` with vertex `v` renamed to `perm[v]`.
pub fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    graph(g.n(), &edges)
}
