//! Constructive witnesses: realizations whose unit ball graphs carry a
//! certified obstruction, claw/net extraction, and unit interval layouts.

mod cycle;
mod interval;
mod netlike;
mod tripod;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphs::{certify, find_induced, Certificate, Graph};
use crate::rational::{int, rat, Rational};
use crate::spaces::io::rational_value;
use crate::spaces::{PointRef, SpaceModel};
use crate::ubg::io::realization_to_json;
use crate::ubg::Realization;

pub use cycle::{cycle_witness, CycleWitness, QuarterSplit};
pub use interval::{realize_unit_interval, umbrella_ordering};
pub use netlike::{extract_claw_or_net, NetLikeStructure};
pub use tripod::{tripod_witness, TripodWitness};

/// A realization, its closed-mode graph, and a certified obstruction in it.
#[derive(Debug, Clone)]
pub struct Witness {
    pub realization: Realization,
    pub graph: Graph,
    pub certificate: Certificate,
    /// Ball radius of the construction.
    pub r: Rational,
}

impl Witness {
    pub fn delta(&self) -> &Rational {
        self.realization.delta()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "realization": realization_to_json(&self.realization),
            "certificate": self.certificate.to_json(),
            "params": {"r": rational_value(&self.r), "delta": rational_value(self.delta())},
        })
    }
}

/// A closed threshold `delta < 2r` such that `d <= delta` iff `d < 2r` for
/// every pair of the given points: `2r(1 - eps)` with `eps` halved from
/// 1/16 until no distance falls in `(delta, 2r)`.
pub(crate) fn open_ball_threshold(
    space: &SpaceModel,
    points: &[PointRef],
    r: &Rational,
) -> Rational {
    let two_r = int(2) * r;
    let mut distances: Vec<Rational> = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = space.distance_unchecked(&points[i], &points[j]);
            let d = d
                .as_rational()
                .expect("metric graph distances are rational")
                .clone();
            if d < two_r {
                distances.push(d);
            }
        }
    }
    let below = distances.into_iter().max();
    let mut eps = rat(1, 16);
    loop {
        let delta = &two_r * (int(1) - &eps);
        if below.as_ref().is_none_or(|d| *d <= delta) {
            return delta;
        }
        eps *= rat(1, 2);
    }
}

/// Checks a pattern certificate against `g` both directly and by an
/// independent search on the induced subgraph.
pub(crate) fn reverify(g: &Graph, c: &Certificate) -> Result<()> {
    let pattern = c
        .kind
        .pattern()
        .ok_or_else(|| Error::Internal(format!("{:?} is not a pattern certificate", c.kind)))?;
    if !certify(g, c) || find_induced(pattern, &g.induced(&c.vertices)).is_none() {
        return Err(Error::Internal(format!(
            "certificate {c:?} does not re-verify"
        )));
    }
    Ok(())
}
