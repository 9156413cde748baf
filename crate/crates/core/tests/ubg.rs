mod common;

use proptest::prelude::*;
use rand::Rng;
use ubg_core::graphs::io::graph_to_json;
use ubg_core::harness::generators::{any_realization, random_graph as gen_graph};
use ubg_core::rational::{int, rat};
use ubg_core::ubg::io::{parse_realization, realization_to_json};
use ubg_core::ubg::{
    build_ubg, build_ubg_at, realize_any_graph, recombination_violation, scale, strict_threshold,
};
use ubg_core::{
    Distance, Error, Graph, MetricGraph, Mode, PointRef, Rational, Realization, SpaceModel,
};

use common::*;

fn on_line(space: SpaceModel, ts: &[Rational], delta: Rational) -> Realization {
    Realization::new(
        space,
        ts.iter().cloned().map(PointRef::Line).collect(),
        delta,
    )
    .unwrap()
}

#[test]
fn build_ubg_examples() {
    let r = on_line(
        SpaceModel::interval(int(10)).unwrap(),
        &[int(0), rat(1, 2), rat(6, 5)],
        int(1),
    );
    assert_eq!(build_ubg(&r, Mode::Closed), graph(3, &[(0, 1), (1, 2)]));

    let circle = SpaceModel::circle(int(4)).unwrap();
    let pts: Vec<PointRef> = (0..4).map(|i| PointRef::Arc(int(i))).collect();
    let r = Realization::new(circle, pts, int(1)).unwrap();
    // Arc distances: neighbours 1 apart, opposite points 2 apart.
    let mut expected = Vec::new();
    for i in 0..4i64 {
        for j in (i + 1)..4 {
            let d = (j - i).min(4 - (j - i));
            if d <= 1 {
                expected.push((i as usize, j as usize));
            }
        }
    }
    assert_eq!(build_ubg(&r, Mode::Closed), graph(4, &expected));
    assert_eq!(build_ubg(&r, Mode::Closed), Graph::cycle(4));

    let point = SpaceModel::single_point();
    for delta in [rat(1, 100), int(1), int(50)] {
        let r = on_line(point.clone(), &vec![int(0); 5], delta);
        assert_eq!(build_ubg(&r, Mode::Closed), Graph::complete(5));
        assert_eq!(build_ubg(&r, Mode::Open), Graph::complete(5));
    }
}

#[test]
fn realizations_are_validated() {
    let line = SpaceModel::interval(int(2)).unwrap();
    assert!(Realization::new(line.clone(), vec![PointRef::Line(int(3))], int(1)).is_err());
    assert!(Realization::new(line.clone(), vec![PointRef::Line(int(1))], int(0)).is_err());
    assert!(Realization::new(line, vec![PointRef::Arc(int(1))], int(1)).is_err());
}

#[test]
fn strict_threshold_examples() {
    let r = on_line(
        SpaceModel::interval(int(10)).unwrap(),
        &[int(0), rat(1, 2), rat(6, 5)],
        int(1),
    );
    let s = strict_threshold(&r);
    assert_eq!(s, Distance::Exact(rat(6, 5)));
    assert_eq!(
        build_ubg_at(r.space(), r.points(), &s, Mode::Open),
        build_ubg(&r, Mode::Closed)
    );

    let r = on_line(SpaceModel::real_line(), &[int(0), int(2)], int(1));
    let s = strict_threshold(&r);
    assert_eq!(s, Distance::Exact(int(2)));
    assert_eq!(
        build_ubg_at(r.space(), r.points(), &s, Mode::Open),
        Graph::empty(2)
    );

    let r = on_line(
        SpaceModel::real_line(),
        &[int(0), rat(1, 2), int(1)],
        int(1),
    );
    assert_eq!(strict_threshold(&r), Distance::Exact(int(2)));

    let r = on_line(SpaceModel::real_line(), &[int(0)], int(3));
    assert_eq!(strict_threshold(&r), Distance::Exact(int(4)));
}

#[test]
fn scale_examples() {
    let r = on_line(
        SpaceModel::interval(int(10)).unwrap(),
        &[int(0), rat(1, 2), rat(6, 5)],
        int(1),
    );
    assert_eq!(scale(&r, &int(1)).unwrap(), r);

    let circle = SpaceModel::circle(int(4)).unwrap();
    let pts: Vec<PointRef> = (0..4).map(|i| PointRef::Arc(int(i))).collect();
    let c4 = Realization::new(circle, pts, int(1)).unwrap();
    let big = scale(&c4, &int(3)).unwrap();
    assert_eq!(big.space(), &SpaceModel::circle(int(12)).unwrap());
    assert_eq!(big.delta(), &int(3));
    assert_eq!(build_ubg(&big, Mode::Closed), Graph::cycle(4));

    let half = scale(&r, &rat(1, 2)).unwrap();
    assert_eq!(half.delta(), &rat(1, 2));
    assert_eq!(build_ubg(&half, Mode::Closed), build_ubg(&r, Mode::Closed));
    assert!(scale(&r, &int(0)).is_err());
}

fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    graph(10, &e)
}

#[test]
fn realize_any_graph_examples() {
    let c5 = Graph::cycle(5);
    let r = realize_any_graph(&c5);
    assert_eq!(r.delta(), &int(1));
    let SpaceModel::MetricGraph(g) = r.space() else {
        panic!("metric graph expected")
    };
    assert_eq!(g.edge_count(), 5);
    assert!(g.edges().iter().all(|e| e.length == int(1)));
    assert_eq!(build_ubg(&r, Mode::Closed), c5);

    let k1 = realize_any_graph(&Graph::empty(1));
    assert_eq!(k1.len(), 1);
    assert_eq!(k1.space().as_metric_graph().unwrap().vertex_count(), 1);
    assert_eq!(build_ubg(&k1, Mode::Closed), Graph::empty(1));

    let p = petersen();
    assert_eq!(p.edge_count(), 15);
    assert!((0..10).all(|v| p.degree(v) == 3));
    assert_eq!(build_ubg(&realize_any_graph(&p), Mode::Closed), p);
}

#[test]
fn realize_any_graph_keeps_non_edges_two_apart() {
    let g = graph(7, &[(0, 1), (1, 2), (3, 4), (5, 6), (4, 5)]);
    let r = realize_any_graph(&g);
    assert_eq!(build_ubg(&r, Mode::Closed), g);
    for u in 0..7 {
        for v in (u + 1)..7 {
            if !g.has_edge(u, v) {
                assert!(r.distance(u, v) >= Distance::Exact(int(2)));
            }
        }
    }
}

fn point_on(g: &MetricGraph, edge: usize, from_u: Rational) -> PointRef {
    g.point(edge, from_u).unwrap()
}

#[test]
fn recombination_examples() {
    let seg = MetricGraph::new(2, vec![(0, 1, int(10))]).unwrap();
    let pairs = vec![
        (point_on(&seg, 0, int(0)), point_on(&seg, 0, int(1))),
        (point_on(&seg, 0, int(10)), point_on(&seg, 0, int(9))),
    ];
    assert!(!recombination_violation(&seg, &pairs, &[0, 1], &int(1)).unwrap());
    assert!(recombination_violation(&seg, &pairs, &[1, 0], &int(1)).unwrap());
    let a = seg.tree_path(&pairs[0].0, &pairs[0].1).unwrap();
    let b = seg.tree_path(&pairs[1].0, &pairs[1].1).unwrap();
    assert!(ubg_core::spaces::paths_intersection(&seg, &a, &b)
        .unwrap()
        .is_none());

    assert!(matches!(
        recombination_violation(&seg, &pairs, &[0, 0], &int(1)),
        Err(Error::Precondition(_))
    ));
    let tri = MetricGraph::new(3, vec![(0, 1, int(1)), (1, 2, int(1)), (2, 0, int(1))]).unwrap();
    let tri_pairs = vec![(PointRef::Vertex(0), PointRef::Vertex(1))];
    assert!(matches!(
        recombination_violation(&tri, &tri_pairs, &[0], &int(1)),
        Err(Error::UnsupportedSpace(_))
    ));
}

/// Whether some point of a fine grid lies on every segment.
fn grid_fold_nonempty(g: &MetricGraph, pairs: &[(PointRef, PointRef)]) -> bool {
    let mut grid: Vec<PointRef> = (0..g.vertex_count()).map(PointRef::Vertex).collect();
    for (i, e) in g.edges().iter().enumerate() {
        let mut t = rat(1, 8);
        while t < e.length {
            grid.push(PointRef::OnEdge {
                edge: i,
                offset: t.clone(),
            });
            t += rat(1, 8);
        }
    }
    grid.iter().any(|p| {
        pairs
            .iter()
            .all(|(x, y)| g.distance(x, p) + g.distance(p, y) == g.distance(x, y))
    })
}

#[test]
fn recombination_on_a_star_matches_the_fold_oracle() {
    let star = MetricGraph::new(4, (1..4).map(|v| (0, v, int(3))).collect()).unwrap();
    let leg = |l: usize, from_hub: Rational| point_on(&star, l, from_hub);
    let delta = int(1);
    type Case = (Vec<(PointRef, PointRef)>, Vec<usize>);
    let cases: Vec<Case> = vec![
        // Both pairs straddle the hub.
        (
            vec![
                (leg(0, rat(1, 2)), leg(1, rat(1, 2))),
                (leg(2, rat(1, 2)), leg(1, rat(1, 4))),
            ],
            vec![1, 0],
        ),
        // Pairs far out on different legs.
        (
            vec![
                (leg(0, int(3)), leg(0, int(2))),
                (leg(1, int(3)), leg(1, int(2))),
            ],
            vec![1, 0],
        ),
        // Three pairs, one per leg, cyclically recombined.
        (
            vec![
                (leg(0, rat(5, 2)), leg(0, rat(3, 2))),
                (leg(1, rat(5, 2)), leg(1, rat(3, 2))),
                (leg(2, rat(5, 2)), leg(2, rat(3, 2))),
            ],
            vec![1, 2, 0],
        ),
        // Pairs whose segments share the hub but one recombined pair is close.
        (
            vec![
                (leg(0, rat(1, 4)), leg(1, rat(1, 4))),
                (leg(1, rat(1, 2)), leg(2, rat(1, 4))),
            ],
            vec![1, 0],
        ),
    ];
    let mut positives = 0;
    for (pairs, sigma) in cases {
        let close = pairs.iter().all(|(x, y)| star.distance(x, y) <= delta);
        let apart =
            (0..pairs.len()).all(|i| star.distance(&pairs[i].0, &pairs[sigma[i]].1) > delta);
        let got = recombination_violation(&star, &pairs, &sigma, &delta).unwrap();
        assert_eq!(got, close && apart);
        if got {
            positives += 1;
            assert!(!grid_fold_nonempty(&star, &pairs));
        }
    }
    assert_eq!(positives, 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn open_mode_at_the_strict_threshold_matches_closed(seed in any::<u64>()) {
        let r = any_realization(&mut rng(seed), 12);
        let closed = build_ubg(&r, Mode::Closed);
        let s = strict_threshold(&r);
        prop_assert_eq!(build_ubg_at(r.space(), r.points(), &s, Mode::Open), closed.clone());
        // The threshold is the smallest non-edge distance when one exists.
        for u in 0..r.len() {
            for v in (u + 1)..r.len() {
                let d = r.distance(u, v);
                if closed.has_edge(u, v) {
                    prop_assert!(d < s);
                } else {
                    prop_assert!(d >= s);
                }
            }
        }
    }

    #[test]
    fn scaling_preserves_the_graph(seed in any::<u64>(), k in 1i64..=64) {
        let r = any_realization(&mut rng(seed), 12);
        let factor = rat(k, 16);
        let s = scale(&r, &factor).unwrap();
        prop_assert_eq!(s.delta(), &(r.delta() * &factor));
        prop_assert_eq!(build_ubg(&s, Mode::Closed), build_ubg(&r, Mode::Closed));
        prop_assert_eq!(build_ubg(&s, Mode::Open), build_ubg(&r, Mode::Open));
        for u in 0..r.len().min(4) {
            for v in 0..r.len().min(4) {
                prop_assert_eq!(s.distance(u, v), r.distance(u, v).scaled(&factor));
            }
        }
    }

    #[test]
    fn realization_json_round_trips(seed in any::<u64>()) {
        let r = any_realization(&mut rng(seed), 8);
        let text = realization_to_json(&r).to_string();
        prop_assert_eq!(parse_realization(&text).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn every_graph_is_a_unit_ball_graph_of_its_gluing(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.9);
        let g = gen_graph(&mut r, n, p);
        prop_assert_eq!(build_ubg(&realize_any_graph(&g), Mode::Closed), g.clone(), "{}", graph_to_json(&g));
    }
}
