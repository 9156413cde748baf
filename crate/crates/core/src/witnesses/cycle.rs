use std::collections::VecDeque;

use num_traits::Zero;

use super::{open_ball_threshold, reverify, Witness};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::rational::{int, rat, Rational};
use crate::recognizers::is_chordal;
use crate::spaces::{set_distance, MetricGraph, Piece, PointRef, SpaceModel, TreePath};
use crate::ubg::{build_ubg, Mode, Realization};

/// An embedded loop cut into four arcs of equal length.
#[derive(Debug, Clone)]
pub struct QuarterSplit {
    /// Loop edges in travel order, each with the vertex it is entered from.
    pub loop_edges: Vec<(usize, usize)>,
    pub length: Rational,
    pub quarter_points: [PointRef; 4],
    /// Arc `i` runs from quarter point `i` to quarter point `i + 1`.
    pub arcs: [TreePath; 4],
    pub r: Rational,
}

#[derive(Debug, Clone)]
pub struct CycleWitness {
    pub witness: Witness,
    pub split: QuarterSplit,
    /// Vertices whose centres lie on each arc, both ends included.
    pub arc_vertices: [Vec<usize>; 4],
}

/// The first simple cycle found by trying edges in index order: the edge
/// plus a shortest route back avoiding it.
fn find_loop(g: &MetricGraph) -> Option<Vec<(usize, usize)>> {
    for (e, edge) in g.edges().iter().enumerate() {
        let mut via: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[edge.v] = true;
        let mut queue = VecDeque::from([edge.v]);
        while let Some(x) = queue.pop_front() {
            for &f in g.incident(x) {
                let y = g.edge(f).other(x);
                if f != e && !seen[y] {
                    seen[y] = true;
                    via[y] = Some((f, x));
                    queue.push_back(y);
                }
            }
        }
        if seen[edge.u] {
            let mut back = Vec::new();
            let mut x = edge.u;
            while x != edge.v {
                let (f, prev) = via[x].expect("reached by search");
                back.push((f, prev));
                x = prev;
            }
            back.reverse();
            let mut out = vec![(e, edge.u)];
            out.extend(back);
            return Some(out);
        }
    }
    None
}

struct Loop<'a> {
    g: &'a MetricGraph,
    edges: &'a [(usize, usize)],
    starts: Vec<Rational>,
}

impl<'a> Loop<'a> {
    fn new(g: &'a MetricGraph, edges: &'a [(usize, usize)]) -> Self {
        let mut starts = Vec::with_capacity(edges.len());
        let mut s = Rational::zero();
        for &(e, _) in edges {
            starts.push(s.clone());
            s += &g.edge(e).length;
        }
        Loop { g, edges, starts }
    }

    /// Offset on edge `k` of the loop at arc length `s` from the loop start.
    fn offset(&self, k: usize, s: &Rational) -> Rational {
        let (e, from) = self.edges[k];
        let edge = self.g.edge(e);
        let along = s - &self.starts[k];
        if edge.u == from {
            along
        } else {
            &edge.length - along
        }
    }

    fn segment_of(&self, s: &Rational) -> usize {
        self.starts.iter().rposition(|t| t <= s).unwrap_or(0)
    }

    fn point(&self, s: &Rational) -> Result<PointRef> {
        let k = self.segment_of(s);
        self.g.point(self.edges[k].0, self.offset(k, s))
    }

    /// The arc from `s0` to `s1` (`s0 < s1 <= length`).
    fn arc(&self, s0: &Rational, s1: &Rational) -> Result<TreePath> {
        let mut pieces = Vec::new();
        for k in 0..self.edges.len() {
            let lo = &self.starts[k];
            let hi = lo + &self.g.edge(self.edges[k].0).length;
            let a = s0.max(lo).clone();
            let b = s1.min(&hi).clone();
            if a < b {
                pieces.push(Piece {
                    edge: self.edges[k].0,
                    from: self.offset(k, &a),
                    to: self.offset(k, &b),
                });
            }
        }
        TreePath::along(self.g, pieces)
    }
}

/// Finds a loop, cuts it into quarters and covers each quarter with ball
/// centres closer than `r` apart, where `2r` is below the distance between
/// opposite quarters. The closed-mode graph at the open-ball threshold then
/// contains a chordless cycle of length at least four.
pub fn cycle_witness(g: &MetricGraph) -> Result<CycleWitness> {
    let loop_edges = find_loop(g).ok_or_else(|| {
        Error::Precondition("cycle witness needs a metric graph with a cycle".into())
    })?;
    let lp = Loop::new(g, &loop_edges);
    let length: Rational = loop_edges
        .iter()
        .map(|&(e, _)| g.edge(e).length.clone())
        .sum();
    let quarter = &length / int(4);
    let marks: Vec<Rational> = (0..=4).map(|k| &quarter * int(k)).collect();
    let quarter_points: [PointRef; 4] = [
        lp.point(&marks[0])?,
        lp.point(&marks[1])?,
        lp.point(&marks[2])?,
        lp.point(&marks[3])?,
    ];
    let arcs: [TreePath; 4] = [
        lp.arc(&marks[0], &marks[1])?,
        lp.arc(&marks[1], &marks[2])?,
        lp.arc(&marks[2], &marks[3])?,
        lp.arc(&marks[3], &marks[4])?,
    ];
    let d13 = set_distance(g, &arcs[0..1], &arcs[2..3])?;
    let d24 = set_distance(g, &arcs[1..2], &arcs[3..4])?;
    let r = d13.min(d24) * rat(15, 32);

    let per_arc = {
        let step = &r * rat(15, 16);
        let k = (&quarter / &step).ceil();
        usize::try_from(k.to_integer()).map_err(|_| Error::Internal("too many centres".into()))?
    };
    let spacing = &quarter / int(per_arc as i64);
    let mut points = Vec::with_capacity(4 * per_arc);
    for mark in &marks[..4] {
        for t in 0..per_arc {
            points.push(lp.point(&(mark + &spacing * int(t as i64)))?);
        }
    }
    let total = points.len();
    let arc_vertices: [Vec<usize>; 4] =
        std::array::from_fn(|k| (0..=per_arc).map(|t| (k * per_arc + t) % total).collect());

    let space = SpaceModel::MetricGraph(g.clone());
    let delta = open_ball_threshold(&space, &points, &r);
    let realization = Realization::new(space, points, delta)?;
    let graph = build_ubg(&realization, Mode::Closed);
    check_arcs(&graph, &arc_vertices)?;

    let (chordal, certificate) = is_chordal(&graph);
    if chordal {
        return Err(Error::TheoremFalsification(format!(
            "cycle witness graph on {total} centres is chordal"
        )));
    }
    reverify(&graph, &certificate)?;
    Ok(CycleWitness {
        witness: Witness {
            realization,
            graph,
            certificate,
            r: r.clone(),
        },
        split: QuarterSplit {
            loop_edges,
            length,
            quarter_points,
            arcs,
            r,
        },
        arc_vertices,
    })
}

/// Each arc's centres induce a connected subgraph, and opposite arcs share
/// no edge.
fn check_arcs(graph: &Graph, arcs: &[Vec<usize>; 4]) -> Result<()> {
    for (k, vs) in arcs.iter().enumerate() {
        if !graph.induced(vs).is_connected() {
            return Err(Error::Internal(format!(
                "centres on arc {k} are not connected"
            )));
        }
    }
    for (a, b) in [(0, 2), (1, 3)] {
        for &u in &arcs[a] {
            for &v in &arcs[b] {
                if graph.has_edge(u, v) {
                    return Err(Error::Internal(format!(
                        "opposite arcs {a} and {b} are joined by {u}-{v}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{certify, CertificateKind};

    fn check(g: &MetricGraph) {
        let w = cycle_witness(g).unwrap();
        let CertificateKind::ChordlessCycle(k) = w.witness.certificate.kind else {
            panic!("expected a cycle certificate");
        };
        assert!(k >= 4);
        assert!(certify(&w.witness.graph, &w.witness.certificate));
        assert_eq!(
            build_ubg(&w.witness.realization, Mode::Closed),
            w.witness.graph
        );
    }

    #[test]
    fn square_and_triangle_loops() {
        check(&MetricGraph::new(4, (0..4).map(|i| (i, (i + 1) % 4, int(2))).collect()).unwrap());
        check(&MetricGraph::new(3, (0..3).map(|i| (i, (i + 1) % 3, int(4))).collect()).unwrap());
    }

    #[test]
    fn loops_with_shortcuts_and_parallel_edges() {
        check(&MetricGraph::new(2, vec![(0, 1, int(1)), (0, 1, int(3))]).unwrap());
        check(
            &MetricGraph::new(
                4,
                vec![
                    (0, 1, int(3)),
                    (1, 2, int(3)),
                    (2, 0, int(3)),
                    (2, 3, int(1)),
                    (0, 3, rat(1, 2)),
                ],
            )
            .unwrap(),
        );
    }

    #[test]
    fn trees_are_rejected() {
        let star =
            MetricGraph::new(4, vec![(0, 1, int(3)), (0, 2, int(3)), (0, 3, int(3))]).unwrap();
        assert!(matches!(cycle_witness(&star), Err(Error::Precondition(_))));
    }
}
