//! Exact models of geodesic spaces.

mod classify;
pub mod io;
mod metric_graph;
mod paths;
pub(crate) mod sample;

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

pub use classify::{classify_space, SpaceClass, SpaceKind, Tripod};
pub use metric_graph::{Edge, MetricGraph};
pub use paths::{paths_intersection, set_distance, tree_bridge, Bridge, Piece, TreePath};
pub use sample::{sample_points, SAMPLE_DENOMINATOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpNorm {
    L1,
    L2,
    LInf,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpaceModel {
    /// `[0, length]`, or the whole real line when `length` is `None`.
    /// Length 0 is the single-point space.
    Interval {
        length: Option<Rational>,
    },
    /// Circle of the given circumference with the arc-length metric.
    Circle {
        circumference: Rational,
    },
    MetricGraph(MetricGraph),
    LpPlane {
        norm: LpNorm,
    },
}

/// A location in a [`SpaceModel`]. Each variant belongs to one kind of space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PointRef {
    /// Coordinate on an interval.
    Line(Rational),
    /// Arc position on a circle, in `[0, circumference)`.
    Arc(Rational),
    Vertex(usize),
    /// Interior point of an edge, `0 < offset < length`, measured from the
    /// edge's first endpoint.
    OnEdge {
        edge: usize,
        offset: Rational,
    },
    Plane(Rational, Rational),
}

/// An exact distance. Euclidean distances are kept as square roots of
/// rationals so comparisons stay exact.
#[derive(Debug, Clone)]
pub enum Distance {
    Exact(Rational),
    Sqrt(Rational),
}

impl Distance {
    pub fn squared(&self) -> Rational {
        match self {
            Distance::Exact(d) => d * d,
            Distance::Sqrt(s) => s.clone(),
        }
    }

    /// The value itself when it is known to be rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::Sqrt(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Distance::Exact(d) => crate::rational::to_f64(d),
            Distance::Sqrt(s) => crate::rational::to_f64(s).sqrt(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.squared().is_zero()
    }

    pub fn scaled(&self, factor: &Rational) -> Distance {
        match self {
            Distance::Exact(d) => Distance::Exact(d * factor),
            Distance::Sqrt(s) => Distance::Sqrt(s * factor * factor),
        }
    }

    /// Exact test of `self <= ab + bc`.
    pub fn at_most_sum(&self, ab: &Distance, bc: &Distance) -> bool {
        if let (Distance::Exact(x), Distance::Exact(y), Distance::Exact(z)) = (self, ab, bc) {
            return *x <= y + z;
        }
        // x <= sqrt(p) + sqrt(q)  <=>  x^2 - p - q <= 2 sqrt(pq)
        let (s, p, q) = (self.squared(), ab.squared(), bc.squared());
        let lhs = &s - &p - &q;
        if !lhs.is_positive() {
            return true;
        }
        &lhs * &lhs <= rat(4, 1) * p * q
    }
}

impl From<Rational> for Distance {
    fn from(r: Rational) -> Self {
        Distance::Exact(r)
    }
}

impl PartialEq for Distance {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Distance {}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Exact(a), Distance::Exact(b)) => a.cmp(b),
            _ => self.squared().cmp(&other.squared()),
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{}", crate::rational::format_rational(d)),
            Distance::Sqrt(s) => write!(f, "sqrt({})", crate::rational::format_rational(s)),
        }
    }
}

impl SpaceModel {
    pub fn interval(length: Rational) -> Result<SpaceModel> {
        if length.is_negative() {
            return Err(Error::Precondition(
                "interval length must be non-negative".into(),
            ));
        }
        Ok(SpaceModel::Interval {
            length: Some(length),
        })
    }

    pub fn real_line() -> SpaceModel {
        SpaceModel::Interval { length: None }
    }

    pub fn single_point() -> SpaceModel {
        SpaceModel::Interval {
            length: Some(Rational::zero()),
        }
    }

    pub fn circle(circumference: Rational) -> Result<SpaceModel> {
        if !circumference.is_positive() {
            return Err(Error::Precondition(
                "circle circumference must be positive".into(),
            ));
        }
        Ok(SpaceModel::Circle { circumference })
    }

    pub fn plane(norm: LpNorm) -> SpaceModel {
        SpaceModel::LpPlane { norm }
    }

    pub fn as_metric_graph(&self) -> Option<&MetricGraph> {
        match self {
            SpaceModel::MetricGraph(g) => Some(g),
            _ => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SpaceModel::Interval { .. } => "interval",
            SpaceModel::Circle { .. } => "circle",
            SpaceModel::MetricGraph(_) => "metric_graph",
            SpaceModel::LpPlane { .. } => "lp_plane",
        }
    }

    pub fn validate(&self, p: &PointRef) -> Result<()> {
        match (self, p) {
            (SpaceModel::Interval { length }, PointRef::Line(t)) => {
                if let Some(len) = length {
                    if t.is_negative() || t > len {
                        return Err(Error::Domain(format!("coordinate outside [0, {len}]")));
                    }
                }
                Ok(())
            }
            (SpaceModel::Circle { circumference }, PointRef::Arc(s)) => {
                if s.is_negative() || s >= circumference {
                    return Err(Error::Domain("arc position outside [0, c)".into()));
                }
                Ok(())
            }
            (SpaceModel::MetricGraph(g), _) => g.validate(p),
            (SpaceModel::LpPlane { .. }, PointRef::Plane(..)) => Ok(()),
            _ => Err(Error::Domain(format!(
                "{p:?} is not a point of a {} space",
                self.kind_name()
            ))),
        }
    }

    pub fn distance(&self, a: &PointRef, b: &PointRef) -> Result<Distance> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.distance_unchecked(a, b))
    }

    /// Distance between points already known to belong to this space.
    pub(crate) fn distance_unchecked(&self, a: &PointRef, b: &PointRef) -> Distance {
        match (self, a, b) {
            (SpaceModel::Interval { .. }, PointRef::Line(x), PointRef::Line(y)) => {
                Distance::Exact((x - y).abs())
            }
            (SpaceModel::Circle { circumference }, PointRef::Arc(x), PointRef::Arc(y)) => {
                let d = (x - y).abs();
                let around = circumference - &d;
                Distance::Exact(d.min(around))
            }
            (SpaceModel::MetricGraph(g), _, _) => Distance::Exact(g.distance(a, b)),
            (SpaceModel::LpPlane { norm }, PointRef::Plane(x1, y1), PointRef::Plane(x2, y2)) => {
                let dx = (x1 - x2).abs();
                let dy = (y1 - y2).abs();
                match norm {
                    LpNorm::L1 => Distance::Exact(dx + dy),
                    LpNorm::LInf => Distance::Exact(dx.max(dy)),
                    LpNorm::L2 => Distance::Sqrt(&dx * &dx + &dy * &dy),
                }
            }
            _ => unreachable!("points validated against their space"),
        }
    }

    /// A point `m` with `d(a, m) = d(m, b) = d(a, b) / 2`.
    pub fn midpoint(&self, a: &PointRef, b: &PointRef) -> Result<PointRef> {
        self.validate(a)?;
        self.validate(b)?;
        let half = rat(1, 2);
        match (self, a, b) {
            (SpaceModel::Interval { .. }, PointRef::Line(x), PointRef::Line(y)) => {
                Ok(PointRef::Line((x + y) * half))
            }
            (SpaceModel::Circle { circumference: c }, PointRef::Arc(x), PointRef::Arc(y)) => {
                let mut m = (x + y) * &half;
                if (x - y).abs() > c * &half {
                    m += c * &half;
                    if m >= *c {
                        m -= c;
                    }
                }
                Ok(PointRef::Arc(m))
            }
            (SpaceModel::LpPlane { .. }, PointRef::Plane(x1, y1), PointRef::Plane(x2, y2)) => {
                Ok(PointRef::Plane((x1 + x2) * &half, (y1 + y2) * half))
            }
            (SpaceModel::MetricGraph(g), _, _) => metric_graph_midpoint(g, a, b),
            _ => unreachable!("points validated against their space"),
        }
    }

    /// Same space with every distance multiplied by `factor`. Points carry
    /// across with [`PointRef::scaled`].
    pub fn scaled(&self, factor: &Rational) -> Result<SpaceModel> {
        if !factor.is_positive() {
            return Err(Error::Precondition("scale factor must be positive".into()));
        }
        Ok(match self {
            SpaceModel::Interval { length } => SpaceModel::Interval {
                length: length.as_ref().map(|l| l * factor),
            },
            SpaceModel::Circle { circumference } => SpaceModel::Circle {
                circumference: circumference * factor,
            },
            SpaceModel::MetricGraph(g) => SpaceModel::MetricGraph(g.scaled(factor)?),
            SpaceModel::LpPlane { norm } => SpaceModel::LpPlane { norm: *norm },
        })
    }

    /// Diameter when finite; `None` for the real line and the plane.
    pub fn diameter(&self) -> Option<Rational> {
        match self {
            SpaceModel::Interval { length } => length.clone(),
            SpaceModel::Circle { circumference } => Some(circumference * rat(1, 2)),
            SpaceModel::MetricGraph(g) => Some(metric_graph_diameter(g)),
            SpaceModel::LpPlane { .. } => None,
        }
    }
}

impl PointRef {
    pub fn scaled(&self, factor: &Rational) -> PointRef {
        match self {
            PointRef::Line(t) => PointRef::Line(t * factor),
            PointRef::Arc(s) => PointRef::Arc(s * factor),
            PointRef::Vertex(v) => PointRef::Vertex(*v),
            PointRef::OnEdge { edge, offset } => PointRef::OnEdge {
                edge: *edge,
                offset: offset * factor,
            },
            PointRef::Plane(x, y) => PointRef::Plane(x * factor, y * factor),
        }
    }
}

/// Every candidate midpoint lies on some edge at a position reached from
/// `a` either through an edge endpoint or directly along a's own edge.
fn metric_graph_midpoint(g: &MetricGraph, a: &PointRef, b: &PointRef) -> Result<PointRef> {
    let target = g.distance(a, b) * rat(1, 2);
    let mut candidates: Vec<PointRef> = vec![a.clone()];
    for (i, e) in g.edges().iter().enumerate() {
        let via_u = &target - g.distance(a, &PointRef::Vertex(e.u));
        let via_v = &e.length - (&target - g.distance(a, &PointRef::Vertex(e.v)));
        let mut offsets = vec![via_u, via_v];
        if let PointRef::OnEdge { edge, offset } = a {
            if *edge == i {
                offsets.push(offset + &target);
                offsets.push(offset - &target);
            }
        }
        for t in offsets {
            if !t.is_negative() && t <= e.length {
                candidates.push(g.point(i, t)?);
            }
        }
    }
    candidates
        .into_iter()
        .find(|m| g.distance(a, m) == target && g.distance(m, b) == target)
        .ok_or_else(|| Error::Internal("no midpoint found in a geodesic space".into()))
}

/// Maximum distance between any two points of the metric graph. The farthest
/// point from a vertex along an edge is where the two routes balance, so the
/// candidates are vertices and those balance points.
fn metric_graph_diameter(g: &MetricGraph) -> Rational {
    let mut points: Vec<PointRef> = (0..g.vertex_count()).map(PointRef::Vertex).collect();
    if !g.is_acyclic() {
        for v in 0..g.vertex_count() {
            for (i, e) in g.edges().iter().enumerate() {
                // d(v, u) + t = d(v, w) + L - t
                let t =
                    (g.vertex_distance(v, e.v) + &e.length - g.vertex_distance(v, e.u)) * rat(1, 2);
                if t.is_positive() && t < e.length {
                    points.push(g.point(i, t).expect("inside edge"));
                }
            }
        }
    }
    let mut best = Rational::zero();
    for p in &points {
        for q in &points {
            let d = g.distance(p, q);
            if d > best {
                best = d;
            }
        }
    }
    best
}
