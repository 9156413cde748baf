mod common;

use rand::Rng;
use ubg_core::graphs::certify;
use ubg_core::harness::generators::circle_realization;
use ubg_core::rational::int;
use ubg_core::recognizers::{
    classify_graph, hamiltonian_hereditary_violation, is_chordal, is_complete,
    is_hamiltonian_hereditary, is_strongly_chordal, is_unit_interval,
    unit_circular_arc_realization, FlagValue,
};
use ubg_core::ubg::{build_ubg, scale};
use ubg_core::{CertificateKind, Error, Graph, Mode, PointRef, Realization, SpaceModel};

use common::*;

#[test]
fn chordal_examples() {
    let (ok, c) = is_chordal(&Graph::cycle(4));
    assert!(!ok);
    assert_eq!(c.kind, CertificateKind::ChordlessCycle(4));
    assert!(certify(&Graph::cycle(4), &c));

    let sun3 = graph(6, &sun_edges(3));
    let (ok, c) = is_chordal(&sun3);
    assert!(ok);
    assert_eq!(c.kind, CertificateKind::PerfectEliminationOrdering);
    assert!(naive_is_peo(&sun3, &c.vertices));
    assert!(!naive_has_long_induced_cycle(&sun3));

    assert!(is_chordal(&Graph::complete(5)).0);
}

#[test]
fn strongly_chordal_examples() {
    let sun3 = graph(6, &sun_edges(3));
    let (ok, c) = is_strongly_chordal(&sun3).unwrap();
    assert!(!ok);
    assert_eq!(c.kind, CertificateKind::Sun(3));
    assert!(certify(&sun3, &c));

    let sun7 = graph(14, &sun_edges(7));
    let (ok, c) = is_strongly_chordal(&sun7).unwrap();
    assert!(!ok);
    assert_eq!(c.kind, CertificateKind::Sun(7));
    assert!(certify(&sun7, &c));

    let tree = graph(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
    assert!(is_strongly_chordal(&tree).unwrap().0);
    assert!(matches!(
        is_strongly_chordal(&Graph::path(25)),
        Err(Error::Capacity { .. })
    ));
}

#[test]
fn unit_interval_examples() {
    let (ok, c) = is_unit_interval(&Graph::star(3));
    assert!(!ok);
    assert_eq!(c.kind, CertificateKind::Claw);

    let p4 = Graph::path(4);
    assert!(is_unit_interval(&p4).0);
    let line = SpaceModel::interval(int(3)).unwrap();
    let pts = ["0", "9/10", "9/5", "27/10"]
        .iter()
        .map(|s| PointRef::Line(ubg_core::rational::parse_rational(s).unwrap()))
        .collect();
    let r = Realization::new(line, pts, int(1)).unwrap();
    assert_eq!(build_ubg(&r, Mode::Closed), p4);

    let (ok, c) = is_unit_interval(&graph(6, &sun_edges(3)));
    assert!(!ok);
    assert_eq!(c.kind, CertificateKind::ThreeSun);

    let (ok, c) = is_unit_interval(&Graph::cycle(5));
    assert!(!ok);
    assert_eq!(c.kind, CertificateKind::ChordlessCycle(5));
}

#[test]
fn hereditary_examples() {
    assert!(is_hamiltonian_hereditary(&Graph::path(4)).unwrap());
    assert!(!is_hamiltonian_hereditary(&Graph::star(3)).unwrap());
    assert!(!brute_hamiltonian_path(&Graph::star(3), &[0, 1, 2, 3]));
    assert!(is_hamiltonian_hereditary(&Graph::cycle(5)).unwrap());
    assert!(naive_hamiltonian_hereditary(&Graph::cycle(5)));
    let vs = hamiltonian_hereditary_violation(&Graph::star(3))
        .unwrap()
        .unwrap();
    assert!(!brute_hamiltonian_path(&Graph::star(3), &vs));
    assert!(matches!(
        is_hamiltonian_hereditary(&Graph::path(13)),
        Err(Error::Capacity { .. })
    ));
}

#[test]
fn complete_examples() {
    assert!(is_complete(&Graph::complete(4)));
    let k4_minus = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
    assert!(!is_complete(&k4_minus));
    assert!(is_complete(&Graph::complete(1)));
}

#[test]
fn class_report_examples() {
    let claw = classify_graph(&Graph::star(3));
    assert_eq!(claw.chordal.value, FlagValue::Yes);
    assert_eq!(claw.claw_free.value, FlagValue::No);
    assert_eq!(claw.unit_interval.value, FlagValue::No);

    let c4 = classify_graph(&Graph::cycle(4));
    assert_eq!(c4.chordal.value, FlagValue::No);

    let net_graph = graph(6, &net_edges());
    let net = classify_graph(&net_graph);
    assert_eq!(net.chordal.value, FlagValue::Yes);
    assert_eq!(net.net_free.value, FlagValue::No);
    assert_eq!(net.hamiltonian_hereditary.value, FlagValue::No);
    assert!(!naive_hamiltonian_hereditary(&net_graph));

    let json = net.to_json();
    for key in [
        "chordal",
        "strongly_chordal",
        "claw_free",
        "net_free",
        "three_sun_free",
        "unit_interval",
        "hamiltonian_hereditary",
        "complete",
    ] {
        assert!(json[key]["value"].is_boolean(), "{key}");
    }
    assert_eq!(json["net_free"]["certificate"]["kind"], "net");
}

#[test]
fn class_report_skips_over_caps() {
    let big = classify_graph(&Graph::path(13));
    assert_eq!(big.hamiltonian_hereditary.value, FlagValue::Skipped);
    assert_eq!(big.to_json()["hamiltonian_hereditary"]["value"], "skipped");
    assert_eq!(big.strongly_chordal.value, FlagValue::Yes);
    let huge = classify_graph(&Graph::path(30));
    assert_eq!(huge.strongly_chordal.value, FlagValue::Skipped);
    assert_eq!(huge.unit_interval.value, FlagValue::Yes);
}

#[test]
fn chordality_matches_the_naive_oracle() {
    let mut r = rng(5);
    for _ in 0..1500 {
        let n = r.gen_range(1..=9);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(&mut r, n, p);
        let (ok, c) = is_chordal(&g);
        assert_eq!(ok, !naive_has_long_induced_cycle(&g), "{:?}", g.edges());
        assert!(certify(&g, &c));
        if ok {
            assert!(naive_is_peo(&g, &c.vertices));
        } else {
            let CertificateKind::ChordlessCycle(k) = c.kind else {
                panic!("cycle expected")
            };
            assert!(k >= 4 && naive_induced(k, &cycle_edges(k), &g.induced(&c.vertices)));
        }
        let (strong, sc) = is_strongly_chordal(&g).unwrap();
        assert_eq!(strong, ok && !naive_has_sun(&g), "{:?}", g.edges());
        assert!(certify(&g, &sc));
    }
}

#[test]
fn unit_interval_matches_the_naive_oracle_exhaustively() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let (ok, c) = is_unit_interval(&g);
            assert_eq!(ok, naive_unit_interval(&g), "{:?}", g.edges());
            assert!(certify(&g, &c));
        }
    }
    let mut r = rng(6);
    for _ in 0..1000 {
        let p = r.gen_range(0.3..0.9);
        let g = random_graph(&mut r, 7, p);
        assert_eq!(
            is_unit_interval(&g).0,
            naive_unit_interval(&g),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn hereditary_matches_the_naive_oracle() {
    let mut r = rng(8);
    for _ in 0..300 {
        let n = r.gen_range(1..=8);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(&mut r, n, p);
        assert_eq!(
            is_hamiltonian_hereditary(&g).unwrap(),
            naive_hamiltonian_hereditary(&g),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn claw_net_free_graphs_are_hamiltonian_hereditary() {
    let mut r = rng(9);
    for _ in 0..2000 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.2..0.9);
        let g = random_graph(&mut r, n, p);
        let report = classify_graph(&g);
        assert!(report.is_consistent());
        let claw_net_free =
            report.claw_free.value == FlagValue::Yes && report.net_free.value == FlagValue::Yes;
        let hereditary = is_hamiltonian_hereditary(&g).unwrap();
        if claw_net_free {
            assert!(hereditary, "{:?}", g.edges());
        }
        assert_eq!(claw_net_free, hereditary, "{:?}", g.edges());
        let unit = report.unit_interval.value == FlagValue::Yes;
        let parts = [
            &report.chordal,
            &report.claw_free,
            &report.net_free,
            &report.three_sun_free,
        ];
        assert_eq!(unit, parts.iter().all(|f| f.value == FlagValue::Yes));
        if report.strongly_chordal.value == FlagValue::Yes {
            assert_eq!(report.chordal.value, FlagValue::Yes);
        }
    }
}

fn circle_graph_is_reproduced(g: &Graph) -> bool {
    match unit_circular_arc_realization(g).unwrap() {
        None => false,
        Some(c) => {
            let space = SpaceModel::circle(c.circumference.clone()).unwrap();
            let pts = c.positions.iter().cloned().map(PointRef::Arc).collect();
            let r = Realization::new(space, pts, int(1)).unwrap();
            assert_eq!(build_ubg(&r, Mode::Closed), *g);
            true
        }
    }
}

#[test]
fn circle_procedure_examples() {
    for k in 3..=7 {
        assert!(circle_graph_is_reproduced(&Graph::cycle(k)), "C{k}");
    }
    assert!(circle_graph_is_reproduced(&Graph::complete(4)));
    assert!(circle_graph_is_reproduced(&Graph::path(5)));
    assert!(!circle_graph_is_reproduced(&graph(6, &sun_edges(3))));
    assert!(!circle_graph_is_reproduced(&Graph::star(3)));
    assert!(!circle_graph_is_reproduced(&graph(6, &net_edges())));
}

#[test]
fn sampled_circle_graphs_are_accepted() {
    let mut r = rng(10);
    for _ in 0..150 {
        let real = circle_realization(&mut r, 8);
        let unit = scale(&real, &(int(1) / real.delta())).unwrap();
        let g = build_ubg(&unit, Mode::Closed);
        assert!(circle_graph_is_reproduced(&g), "{:?}", g.edges());
    }
}
