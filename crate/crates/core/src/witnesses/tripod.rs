use num_traits::{Signed, Zero};

use super::{extract_claw_or_net, open_ball_threshold, reverify, NetLikeStructure, Witness};
use crate::error::{Error, Result};
use crate::graphs::{Certificate, CertificateKind};
use crate::rational::{int, rat, Rational};
use crate::spaces::{set_distance, MetricGraph, PointRef, SpaceModel, TreePath, Tripod};
use crate::ubg::{build_ubg, Mode, Realization};

#[derive(Debug, Clone)]
pub struct TripodWitness {
    pub witness: Witness,
    /// The three chains of centres, when they form a net-like structure.
    /// Absent only when `r` divides every leg, where the centre itself
    /// closes a claw.
    pub structure: Option<NetLikeStructure>,
}

fn divides(r: &Rational, len: &Rational) -> bool {
    (len / r).is_integer()
}

/// Legs pairwise meet only at the centre; leaves and centre are distinct.
fn check_tripod(g: &MetricGraph, t: &Tripod) -> Result<()> {
    for leg in &t.legs {
        if *leg.end() != t.center || leg.is_point() {
            return Err(Error::Precondition(
                "each leg must run from a distinct leaf to the centre".into(),
            ));
        }
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            let (p, q) = (&t.legs[i], &t.legs[j]);
            for x in p.pieces() {
                for y in q.pieces() {
                    if x.edge != y.edge {
                        continue;
                    }
                    let lo = x.low().max(y.low());
                    let hi = x.high().min(y.high());
                    if lo < hi || (lo == hi && g.point(x.edge, lo.clone())? != t.center) {
                        return Err(Error::Precondition(
                            "tripod legs overlap away from the centre".into(),
                        ));
                    }
                }
            }
            let shared_vertex = (0..g.vertex_count()).any(|v| {
                let v = PointRef::Vertex(v);
                v != t.center && p.contains(g, &v) && q.contains(g, &v)
            });
            if shared_vertex {
                return Err(Error::Precondition(
                    "tripod legs meet away from the centre".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Smallest distance from a leaf to the union of the other two legs.
fn leaf_separation(g: &MetricGraph, t: &Tripod) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for i in 0..3 {
        let leaf = [TreePath::point(t.legs[i].start().clone())];
        let others = [t.legs[(i + 1) % 3].clone(), t.legs[(i + 2) % 3].clone()];
        let d = set_distance(g, &leaf, &others)?;
        if best.as_ref().is_none_or(|b| d < *b) {
            best = Some(d);
        }
    }
    Ok(best.expect("three legs"))
}

/// Places ball centres every `r` along each leg, from the leaf towards the
/// centre, and returns the closed-mode graph of the open-ball intersection
/// pattern with a certified claw or net.
///
/// Without `r`, the radius is `15/16 * min(sep/2, shortest leg/3)`, shrunk
/// by further factors of 15/16 while it divides a leg length, where `sep` is
/// the smallest leaf-to-other-legs distance. A given `r` must satisfy
/// `2r < sep`.
pub fn tripod_witness(g: &MetricGraph, t: &Tripod, r: Option<Rational>) -> Result<TripodWitness> {
    check_tripod(g, t)?;
    let sep = leaf_separation(g, t)?;
    let lengths: Vec<Rational> = t.legs.iter().map(|l| l.length().clone()).collect();
    let r = match r {
        Some(r) => {
            if !r.is_positive() {
                return Err(Error::Precondition("radius must be positive".into()));
            }
            if int(2) * &r >= sep {
                return Err(Error::Precondition(format!(
                    "radius {r} too large: leaves are only {sep} from the other legs; use a tripod with longer legs or a radius below {}",
                    &sep / int(2)
                )));
            }
            r
        }
        None => {
            let shortest = lengths.iter().min().expect("three legs").clone();
            let mut r = rat(15, 16) * (&sep / int(2)).min(shortest / int(3));
            while lengths.iter().any(|l| divides(&r, l)) {
                r *= rat(15, 16);
            }
            r
        }
    };

    let mut points: Vec<PointRef> = Vec::new();
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for leg in &t.legs {
        let mut chain = Vec::new();
        let mut s = Rational::zero();
        while s < *leg.length() {
            chain.push(points.len());
            points.push(leg.point_at(g, &s)?);
            s += &r;
        }
        chains.push(chain);
    }
    let divisible: Vec<bool> = lengths.iter().map(|l| divides(&r, l)).collect();
    let center_index = if divisible.iter().any(|&d| d) {
        points.push(t.center.clone());
        Some(points.len() - 1)
    } else {
        None
    };

    let space = SpaceModel::MetricGraph(g.clone());
    let delta = open_ball_threshold(&space, &points, &r);
    let realization = Realization::new(space, points, delta)?;
    let graph = build_ubg(&realization, Mode::Closed);

    let (certificate, structure) = match center_index {
        Some(y) if divisible.iter().all(|&d| d) => {
            let last = |i: usize| *chains[i].last().expect("legs longer than r");
            (
                Certificate::new(CertificateKind::Claw, vec![y, last(0), last(1), last(2)]),
                None,
            )
        }
        _ => {
            if let Some(y) = center_index {
                let first = divisible
                    .iter()
                    .position(|&d| d)
                    .expect("some leg divisible");
                chains[first].push(y);
            }
            let s = NetLikeStructure::new(chains[0].clone(), chains[1].clone(), chains[2].clone());
            s.validate(&graph)
                .map_err(|e| Error::Internal(format!("tripod centres are not net-like: {e}")))?;
            (extract_claw_or_net(&graph, &s)?, Some(s))
        }
    };
    reverify(&graph, &certificate)?;
    Ok(TripodWitness {
        witness: Witness {
            realization,
            graph,
            certificate,
            r,
        },
        structure,
    })
}
