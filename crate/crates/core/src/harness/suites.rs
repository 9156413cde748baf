//! Trial bodies. Each draws its inputs from the RNG it is handed and returns
//! the first violated property.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::generators::*;
use super::table1::{self, Cell};
use super::{Failure, Suite, TrialConfig, Violation};
use crate::caps::caps;
use crate::graphs::io::graph_to_json;
use crate::graphs::{certify, find_induced, CertificateKind, Graph, Pattern};
use crate::rational::{int, Rational};
use crate::recognizers::{
    hamiltonian_hereditary_violation, is_chordal, is_strongly_chordal, is_unit_interval,
};
use crate::spaces::io::{point_to_json, rational_value};
use crate::spaces::paths_intersection;
use crate::spaces::sample::sample_with;
use crate::spaces::{classify_space, MetricGraph, PointRef, SpaceModel};
use crate::ubg::io::realization_to_json;
use crate::ubg::{
    build_ubg, build_ubg_at, common_intersection, realize_any_graph, recombination_violation,
    scale, strict_threshold, Mode, Realization,
};
use crate::witnesses::{
    cycle_witness, extract_claw_or_net, realize_unit_interval, tripod_witness, Witness,
};

type Outcome = std::result::Result<(), Violation>;

/// Hereditary checks run up to this many vertices.
const HEREDITARY_LIMIT: usize = 12;
/// Permutations tried per forced-common-point family.
const SIGMAS_PER_FAMILY: usize = 20;
/// Draws allowed before a recombination trial gives up on finding a positive.
const POSITIVE_ATTEMPTS: usize = 2000;

pub(super) fn run(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    match cfg.suite {
        Suite::TreeStronglyChordal => tree_strongly_chordal(cfg, rng),
        Suite::IntervalCircleClawNet => interval_circle_claw_net(cfg, rng),
        Suite::IntervalUnitInterval => interval_unit_interval(cfg, rng),
        Suite::CycleWitness => cycle_witness_trial(cfg, rng),
        Suite::TripodWitness => tripod_witness_trial(cfg, rng),
        Suite::NetLike => net_like(rng),
        Suite::AllGraphs => random_all_graphs(rng),
        Suite::OpenClosedScale => open_closed_scale(cfg, rng),
        Suite::Recombination => {
            forced_common_point(cfg, rng)?;
            recombination_positive(cfg, rng)
        }
        Suite::Table1 => Ok(()),
    }
}

fn errored(context: &str, e: impl Display) -> Violation {
    Violation::new(
        "no error",
        json!({"context": context, "error": e.to_string()}),
    )
}

fn bundle(r: &Realization, g: &Graph, evidence: Value) -> Value {
    json!({
        "realization": realization_to_json(r),
        "graph": graph_to_json(g),
        "evidence": evidence,
    })
}

fn witness_bundle(w: &Witness, evidence: Value) -> Value {
    json!({"witness": w.to_json(), "graph": graph_to_json(&w.graph), "evidence": evidence})
}

fn space_bundle(g: &MetricGraph) -> Value {
    crate::spaces::io::space_to_json(&SpaceModel::MetricGraph(g.clone()))
}

fn tree_strongly_chordal(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let tree = random_metric_tree(rng, cfg.max_tree_vertices);
    let diameter = tree.vertex_diameter() * int(GRID);
    let hi = diameter.floor().to_integer().to_i64().unwrap_or(i64::MAX);
    let delta = grid_value(rng, cfg.min_delta_64ths.min(hi), hi);
    let space = SpaceModel::MetricGraph(tree);
    let n = rng.gen_range(1..=cfg.max_points);
    let points = sample_with(&space, n, rng);
    let r = Realization::new(space, points, delta).map_err(|e| errored("realization", e))?;
    let g = build_ubg(&r, Mode::Closed);
    match is_strongly_chordal(&g) {
        Ok((true, _)) => Ok(()),
        Ok((false, cert)) => Err(Violation::new(
            "strongly chordal",
            bundle(&r, &g, cert.to_json()),
        )),
        Err(e) => Err(errored("is_strongly_chordal", e)),
    }
}

fn claw_net_free(r: &Realization, g: &Graph) -> Outcome {
    for pattern in [Pattern::Claw, Pattern::Net] {
        if let Some(cert) = find_induced(pattern, g) {
            return Err(Violation::new(
                format!("{pattern}-free"),
                bundle(r, g, cert.to_json()),
            ));
        }
    }
    if g.n() <= HEREDITARY_LIMIT.min(caps().hereditary) {
        match hamiltonian_hereditary_violation(g) {
            Ok(None) => {}
            Ok(Some(vs)) => {
                return Err(Violation::new(
                    "hamiltonian hereditary",
                    bundle(r, g, json!(vs)),
                ));
            }
            Err(e) => return Err(errored("hamiltonian_hereditary_violation", e)),
        }
    }
    Ok(())
}

fn interval_circle_claw_net(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let r = if rng.gen_bool(0.5) {
        interval_realization(rng, cfg.max_points)
    } else {
        circle_realization(rng, cfg.max_points)
    };
    let g = build_ubg(&r, Mode::Closed);
    claw_net_free(&r, &g)
}

fn interval_unit_interval(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let r = interval_realization(rng, cfg.max_points);
    let g = build_ubg(&r, Mode::Closed);
    let (ok, cert) = is_unit_interval(&g);
    if !ok {
        return Err(Violation::new(
            "unit interval",
            bundle(&r, &g, cert.to_json()),
        ));
    }
    let layout = realize_unit_interval(&g).map_err(|e| errored("realize_unit_interval", e))?;
    let again = build_ubg(&layout, Mode::Closed);
    if again != g {
        return Err(Violation::new(
            "unit interval layout reproduces the graph",
            bundle(&r, &g, realization_to_json(&layout)),
        ));
    }
    Ok(())
}

fn check_witness(w: &Witness, accept: impl Fn(&CertificateKind) -> bool) -> Outcome {
    if build_ubg(&w.realization, Mode::Closed) != w.graph {
        return Err(Violation::new(
            "witness graph is reproduced",
            witness_bundle(w, Value::Null),
        ));
    }
    if !accept(&w.certificate.kind) || !certify(&w.graph, &w.certificate) {
        return Err(Violation::new(
            "witness certificate",
            witness_bundle(w, Value::Null),
        ));
    }
    Ok(())
}

fn cycle_witness_trial(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let g = random_cyclic_metric_graph(rng, cfg.max_tree_vertices);
    let w = cycle_witness(&g).map_err(|e| {
        Violation::new(
            "cycle witness",
            json!({"space": space_bundle(&g), "error": e.to_string()}),
        )
    })?;
    check_witness(
        &w.witness,
        |k| matches!(k, CertificateKind::ChordlessCycle(k) if *k >= 4),
    )
}

fn tripod_witness_trial(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let cyclic = rng.gen_bool(0.25);
    let g = random_tripod_space(rng, cfg.max_tree_vertices, cyclic);
    let failed = |e: crate::Error| {
        Violation::new(
            "tripod witness",
            json!({"space": space_bundle(&g), "error": e.to_string()}),
        )
    };
    let class = classify_space(&g).map_err(failed)?;
    let Some(tripod) = class.tripod else {
        return Err(Violation::new("tripod exists", space_bundle(&g)));
    };
    let tw = tripod_witness(&g, &tripod, None).map_err(failed)?;
    let w = &tw.witness;
    check_witness(w, |k| {
        matches!(k, CertificateKind::Claw | CertificateKind::Net)
    })?;
    if g.is_acyclic() {
        let (chordal, cert) = is_chordal(&w.graph);
        if !chordal {
            return Err(Violation::new(
                "tree witness is chordal",
                witness_bundle(w, cert.to_json()),
            ));
        }
        if w.graph.n() > caps().exponential {
            return Ok(());
        }
        match is_strongly_chordal(&w.graph) {
            Ok((true, _)) => {}
            Ok((false, cert)) => {
                return Err(Violation::new(
                    "tree witness is strongly chordal",
                    witness_bundle(w, cert.to_json()),
                ));
            }
            Err(e) => return Err(errored("is_strongly_chordal", e)),
        }
    }
    Ok(())
}

fn net_like(rng: &mut ChaCha8Rng) -> Outcome {
    let (g, s) = random_netlike(rng);
    let detail = |extra: Value| {
        json!({
            "graph": graph_to_json(&g),
            "paths": [s.a.clone(), s.b.clone(), s.c.clone()],
            "evidence": extra,
        })
    };
    if let Err(e) = s.validate(&g) {
        return Err(Violation::new(
            "generated structure is net-like",
            detail(json!(e.to_string())),
        ));
    }
    let cert = extract_claw_or_net(&g, &s)
        .map_err(|e| Violation::new("extraction succeeds", detail(json!(e.to_string()))))?;
    if !matches!(cert.kind, CertificateKind::Claw | CertificateKind::Net) || !certify(&g, &cert) {
        return Err(Violation::new(
            "extracted certificate",
            detail(cert.to_json()),
        ));
    }
    if find_induced(Pattern::Claw, &g).is_none() && find_induced(Pattern::Net, &g).is_none() {
        return Err(Violation::new(
            "independent search agrees",
            detail(cert.to_json()),
        ));
    }
    Ok(())
}

fn round_trips_through_any_graph_space(g: &Graph) -> bool {
    build_ubg(&realize_any_graph(g), Mode::Closed) == *g
}

fn random_all_graphs(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(1..=10);
    let p = rng.gen_range(0.1..0.9);
    let g = random_graph(rng, n, p);
    if round_trips_through_any_graph_space(&g) {
        Ok(())
    } else {
        Err(Violation::new(
            "all-graphs space reproduces the graph",
            graph_to_json(&g),
        ))
    }
}

/// Checks every labeled connected graph on `1..=max_n` vertices. Returns
/// how many were checked and the failures, numbered after the random
/// trials starting at `offset`.
pub(super) fn all_small_connected_graphs(max_n: usize, offset: usize) -> (usize, Vec<Failure>) {
    let cases: Vec<(usize, u64)> = (1..=max_n)
        .flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (0..1u64 << pairs).map(move |mask| (n, mask))
        })
        .collect();
    let results: Vec<Option<Option<Failure>>> = cases
        .par_iter()
        .enumerate()
        .map(|(index, &(n, mask))| {
            let mut g = Graph::empty(n);
            let mut bit = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask >> bit & 1 == 1 {
                        g.insert(u, v);
                    }
                    bit += 1;
                }
            }
            if !g.is_connected() {
                return None;
            }
            Some((!round_trips_through_any_graph_space(&g)).then(|| Failure {
                trial: offset + index,
                trial_seed: 0,
                property: "all-graphs space reproduces the graph".into(),
                detail: graph_to_json(&g),
            }))
        })
        .collect();
    let checked = results.iter().filter(|r| r.is_some()).count();
    (checked, results.into_iter().flatten().flatten().collect())
}

fn open_closed_scale(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let r = any_realization(rng, cfg.max_points);
    let closed = build_ubg(&r, Mode::Closed);
    let threshold = strict_threshold(&r);
    let open = build_ubg_at(r.space(), r.points(), &threshold, Mode::Open);
    if open != closed {
        return Err(Violation::new(
            "open mode at the strict threshold equals closed mode",
            bundle(
                &r,
                &closed,
                json!({"threshold": threshold.to_string(), "open": graph_to_json(&open)}),
            ),
        ));
    }
    let factor = Rational::new(BigInt::from(rng.gen_range(1..=64)), BigInt::from(16));
    let scaled = scale(&r, &factor).map_err(|e| errored("scale", e))?;
    let after = build_ubg(&scaled, Mode::Closed);
    if after != closed {
        return Err(Violation::new(
            "scaling preserves the graph",
            bundle(
                &r,
                &closed,
                json!({"factor": rational_value(&factor), "scaled": graph_to_json(&after)}),
            ),
        ));
    }
    Ok(())
}

fn points_json(g: &MetricGraph, pairs: &[(PointRef, PointRef)]) -> Value {
    let space = SpaceModel::MetricGraph(g.clone());
    pairs
        .iter()
        .map(|(x, y)| json!([point_to_json(&space, x), point_to_json(&space, y)]))
        .collect()
}

/// Segment families through one common point satisfy
/// `sum d(x_i, y_i) >= sum d(x_i, y_sigma(i))` for every permutation.
fn forced_common_point(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let g = random_metric_tree(rng, cfg.max_tree_vertices);
    let z = random_point(rng, &g);
    let m = rng.gen_range(2..=5);
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let x = random_point(rng, &g);
        let mut y = z.clone();
        for _ in 0..10 {
            let t = random_point(rng, &g);
            let path = g.tree_path(&x, &t).map_err(|e| errored("tree_path", e))?;
            if path.contains(&g, &z) {
                y = t;
                break;
            }
        }
        pairs.push((x, y));
    }
    let detail = |extra: Value| {
        json!({
            "space": space_bundle(&g),
            "common_point": point_to_json(&SpaceModel::MetricGraph(g.clone()), &z),
            "pairs": points_json(&g, &pairs),
            "evidence": extra,
        })
    };
    let segments = pairs
        .iter()
        .map(|(x, y)| g.tree_path(x, y))
        .collect::<crate::Result<Vec<_>>>()
        .map_err(|e| errored("tree_path", e))?;
    match common_intersection(&g, &segments) {
        Ok(Some(_)) => {}
        Ok(None) => {
            return Err(Violation::new(
                "forced family intersects",
                detail(Value::Null),
            ))
        }
        Err(e) => return Err(errored("common_intersection", e)),
    }
    let direct: Rational = pairs.iter().map(|(x, y)| g.distance(x, y)).sum();
    let mut sigma: Vec<usize> = (0..m).collect();
    for _ in 0..SIGMAS_PER_FAMILY {
        sigma.shuffle(rng);
        let recombined: Rational = (0..m)
            .map(|i| g.distance(&pairs[i].0, &pairs[sigma[i]].1))
            .sum();
        if recombined > direct {
            return Err(Violation::new(
                "recombination inequality",
                detail(json!({
                    "sigma": sigma,
                    "direct": rational_value(&direct),
                    "recombined": rational_value(&recombined),
                })),
            ));
        }
    }
    Ok(())
}

/// Draws trees, close pairs and derangements until the recombination
/// condition holds, then checks that some two segments are disjoint.
fn recombination_positive(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..POSITIVE_ATTEMPTS {
        let g = random_metric_tree(rng, cfg.max_tree_vertices);
        let quarter = (g.vertex_diameter() * int(GRID) / int(4))
            .floor()
            .to_integer();
        let delta = grid_value(rng, 1, quarter.to_i64().unwrap_or(1).max(1));
        let m = rng.gen_range(2..=4);
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let x = random_point(rng, &g);
            let t = random_point(rng, &g);
            let path = g.tree_path(&x, &t).map_err(|e| errored("tree_path", e))?;
            let reach = path.length().clone().min(delta.clone());
            let s = reach * grid_value(rng, 0, GRID);
            let y = path.point_at(&g, &s).map_err(|e| errored("point_at", e))?;
            pairs.push((x, y));
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(rng);
        let mut sigma = vec![0; m];
        for k in 0..m {
            sigma[order[k]] = order[(k + 1) % m];
        }
        let detail = |extra: Value| {
            json!({
                "space": space_bundle(&g),
                "pairs": points_json(&g, &pairs),
                "sigma": sigma,
                "delta": rational_value(&delta),
                "evidence": extra,
            })
        };
        match recombination_violation(&g, &pairs, &sigma, &delta) {
            Ok(false) => continue,
            Ok(true) => {}
            Err(e) => {
                return Err(Violation::new(
                    "folded intersection is empty",
                    detail(json!(e.to_string())),
                ))
            }
        }
        let segments = pairs
            .iter()
            .map(|(x, y)| g.tree_path(x, y))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(|e| errored("tree_path", e))?;
        // Subtrees of a tree with empty common part contain a disjoint pair.
        let mut disjoint_pair = false;
        for i in 0..m {
            for j in (i + 1)..m {
                match paths_intersection(&g, &segments[i], &segments[j]) {
                    Ok(None) => disjoint_pair = true,
                    Ok(Some(_)) => {}
                    Err(e) => return Err(errored("paths_intersection", e)),
                }
            }
        }
        return if disjoint_pair {
            Ok(())
        } else {
            Err(Violation::new(
                "some two segments are disjoint",
                detail(Value::Null),
            ))
        };
    }
    Err(Violation::new(
        "a recombination positive is found",
        json!({"attempts": POSITIVE_ATTEMPTS}),
    ))
}

pub(super) fn table1_report() -> (Vec<Failure>, Value) {
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let mut index = 0;
    for (row, cells) in table1::table() {
        let mut out = Vec::new();
        for (pattern, cell) in cells {
            if let Cell::Failed(why) = &cell {
                failures.push(Failure {
                    trial: index,
                    trial_seed: 0,
                    property: format!("{} cell for {pattern}", row.name()),
                    detail: json!(why),
                });
            }
            let mut entry = cell.to_json();
            entry["graph"] = json!(pattern.to_string());
            out.push(entry);
            index += 1;
        }
        rows.push(json!({"space": row.name(), "cells": out}));
    }
    (failures, json!({"rows": rows}))
}
