//! Random inputs for the suites. Every generator is a pure function of the
//! RNG state it is handed.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::graphs::Graph;
use crate::rational::{int, Rational};
use crate::spaces::sample::{sample_on_graph, sample_with};
use crate::spaces::{LpNorm, MetricGraph, PointRef, SpaceModel};
use crate::ubg::Realization;
use crate::witnesses::NetLikeStructure;

/// Denominator of sampled edge lengths and thresholds.
pub const GRID: i64 = 64;

/// Uniform multiple of `1/GRID` in `[lo, hi]`, both given in grid units.
pub fn grid_value<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(lo..=hi)), BigInt::from(GRID))
}

/// Edge length in `[1/4, 4]`.
pub fn edge_length<R: Rng>(rng: &mut R) -> Rational {
    grid_value(rng, GRID / 4, 4 * GRID)
}

/// Random tree shape on `n` vertices: each vertex attaches to an earlier one.
pub fn random_tree_edges<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

/// Random metric tree with `2..=max_vertices` vertices.
pub fn random_metric_tree<R: Rng>(rng: &mut R, max_vertices: usize) -> MetricGraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let edges = random_tree_edges(rng, n)
        .into_iter()
        .map(|(u, v)| (u, v, edge_length(rng)))
        .collect();
    MetricGraph::new(n, edges).expect("trees are connected")
}

/// Random connected metric graph with at least one cycle: a random tree plus
/// one to three extra edges (parallel edges allowed).
pub fn random_cyclic_metric_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> MetricGraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut edges: Vec<(usize, usize, Rational)> = random_tree_edges(rng, n)
        .into_iter()
        .map(|(u, v)| (u, v, edge_length(rng)))
        .collect();
    for _ in 0..rng.gen_range(1..=3) {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        edges.push((u, v, edge_length(rng)));
    }
    MetricGraph::new(n, edges).expect("connected")
}

/// Random metric graph with a vertex of degree at least three: a hub with
/// three legs, extra random tree growth, and (if `cyclic`) one extra edge.
pub fn random_tripod_space<R: Rng>(rng: &mut R, max_vertices: usize, cyclic: bool) -> MetricGraph {
    let n = rng.gen_range(4..=max_vertices.max(4));
    let mut edges: Vec<(usize, usize, Rational)> =
        (1..4).map(|v| (0, v, edge_length(rng))).collect();
    for v in 4..n {
        edges.push((rng.gen_range(0..v), v, edge_length(rng)));
    }
    if cyclic {
        let u = rng.gen_range(1..n);
        let v = rng.gen_range(1..n);
        let v = if v == u { 0 } else { v };
        edges.push((u, v, edge_length(rng)));
    }
    MetricGraph::new(n, edges).expect("connected")
}

/// Gilbert random graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.insert(u, v);
            }
        }
    }
    g
}

/// Random connected graph on `n` vertices: a random spanning tree plus
/// Gilbert edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for (u, v) in random_tree_edges(rng, n) {
        g.insert(perm[u], perm[v]);
    }
    g
}

/// Random net-like graph: three chordless paths of 2..=6 vertices whose
/// ends form a triangle, plus random edges between non-leaf vertices of
/// different paths.
pub fn random_netlike<R: Rng>(rng: &mut R) -> (Graph, NetLikeStructure) {
    let lens: Vec<usize> = (0..3).map(|_| rng.gen_range(2..=6)).collect();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &len in &lens {
        paths.push((next..next + len).collect());
        next += len;
    }
    let mut g = Graph::empty(next);
    for p in &paths {
        for w in p.windows(2) {
            g.insert(w[0], w[1]);
        }
    }
    let ends: Vec<usize> = paths.iter().map(|p| *p.last().unwrap()).collect();
    g.insert(ends[0], ends[1]);
    g.insert(ends[1], ends[2]);
    g.insert(ends[0], ends[2]);
    let density = rng.gen_range(0.0..0.5);
    for i in 0..3 {
        for j in (i + 1)..3 {
            for &u in &paths[i][1..] {
                for &v in &paths[j][1..] {
                    if rng.gen_bool(density) {
                        g.insert(u, v);
                    }
                }
            }
        }
    }
    let s = NetLikeStructure::new(paths[0].clone(), paths[1].clone(), paths[2].clone());
    (g, s)
}

/// Random bounded interval and points on it, threshold in `[1/64, length]`.
pub fn interval_realization<R: Rng>(rng: &mut R, max_points: usize) -> Realization {
    let length = grid_value(rng, GRID, 16 * GRID);
    let delta = grid_value(rng, 1, 16 * GRID).min(length.clone());
    let space = SpaceModel::interval(length).expect("positive");
    let n = rng.gen_range(1..=max_points);
    let points = sample_with(&space, n, rng);
    Realization::new(space, points, delta).expect("sampled points are valid")
}

/// Random circle and points on it, threshold in `[1/64, c/2]`.
pub fn circle_realization<R: Rng>(rng: &mut R, max_points: usize) -> Realization {
    let c = grid_value(rng, GRID, 16 * GRID);
    let delta = grid_value(rng, 1, 8 * GRID).min(&c / int(2));
    let space = SpaceModel::circle(c).expect("positive");
    let n = rng.gen_range(1..=max_points);
    let points = sample_with(&space, n, rng);
    Realization::new(space, points, delta).expect("sampled points are valid")
}

/// Random realization in any of the space models.
pub fn any_realization<R: Rng>(rng: &mut R, max_points: usize) -> Realization {
    let space = match rng.gen_range(0..8) {
        0 => SpaceModel::interval(grid_value(rng, GRID, 16 * GRID)).expect("positive"),
        1 => SpaceModel::real_line(),
        2 => SpaceModel::circle(grid_value(rng, GRID, 16 * GRID)).expect("positive"),
        3 => SpaceModel::MetricGraph(random_metric_tree(rng, 8)),
        4 => SpaceModel::MetricGraph(random_cyclic_metric_graph(rng, 6)),
        5 => SpaceModel::plane(LpNorm::L1),
        6 => SpaceModel::plane(LpNorm::L2),
        _ => SpaceModel::plane(LpNorm::LInf),
    };
    let n = rng.gen_range(1..=max_points);
    let points = sample_with(&space, n, rng);
    let delta = grid_value(rng, 1, 4 * GRID);
    Realization::new(space, points, delta).expect("sampled points are valid")
}

/// A uniformly random point of a metric graph.
pub fn random_point<R: Rng>(rng: &mut R, g: &MetricGraph) -> PointRef {
    sample_on_graph(g, rng)
}
