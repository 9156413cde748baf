//! Realizations and unit ball graph construction.

pub mod io;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::rational::{int, Rational};
use crate::spaces::{paths_intersection, Distance, MetricGraph, PointRef, SpaceModel, TreePath};

/// Whether edges join points at distance `<= delta` or `< delta`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Closed,
    Open,
}

/// A space, a point for every vertex, and a positive threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    space: SpaceModel,
    points: Vec<PointRef>,
    delta: Rational,
}

impl Realization {
    /// Vertex `i` sits at `points[i]`.
    pub fn new(space: SpaceModel, points: Vec<PointRef>, delta: Rational) -> Result<Realization> {
        if !delta.is_positive() {
            return Err(Error::Precondition("threshold must be positive".into()));
        }
        for (i, p) in points.iter().enumerate() {
            space
                .validate(p)
                .map_err(|e| Error::Domain(format!("vertex {i}: {e}")))?;
        }
        Ok(Realization {
            space,
            points,
            delta,
        })
    }

    pub fn space(&self) -> &SpaceModel {
        &self.space
    }

    pub fn points(&self) -> &[PointRef] {
        &self.points
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        self.space
            .distance_unchecked(&self.points[u], &self.points[v])
    }
}

/// The unit ball graph of `r` in the given mode.
pub fn build_ubg(r: &Realization, mode: Mode) -> Graph {
    build_ubg_at(&r.space, &r.points, &Distance::Exact(r.delta.clone()), mode)
}

/// Unit ball graph of already validated points at an arbitrary (possibly
/// irrational) threshold.
pub fn build_ubg_at(
    space: &SpaceModel,
    points: &[PointRef],
    threshold: &Distance,
    mode: Mode,
) -> Graph {
    let n = points.len();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let d = space.distance_unchecked(&points[u], &points[v]);
            let adjacent = match mode {
                Mode::Closed => d <= *threshold,
                Mode::Open => d < *threshold,
            };
            if adjacent {
                g.insert(u, v);
            }
        }
    }
    g
}

/// A threshold whose open-mode graph equals the closed-mode graph at
/// `delta`: the smallest non-edge distance, or a value above every distance
/// when there are no non-edges. Euclidean distances may make it irrational,
/// which is why a [`Distance`] is returned.
pub fn strict_threshold(r: &Realization) -> Distance {
    let n = r.len();
    let delta = Distance::Exact(r.delta.clone());
    if n < 2 {
        return Distance::Exact(&r.delta + int(1));
    }
    let mut non_edge: Option<Distance> = None;
    let mut max: Option<Distance> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            let d = r.distance(u, v);
            if d > delta && non_edge.as_ref().is_none_or(|m| d < *m) {
                non_edge = Some(d.clone());
            }
            if max.as_ref().is_none_or(|m| d > *m) {
                max = Some(d);
            }
        }
    }
    non_edge.unwrap_or_else(|| match max.expect("n >= 2") {
        Distance::Exact(m) => Distance::Exact(m + int(1)),
        // (sqrt(s) + 1)^2 <= s + 2 max(s, 1) + 1
        Distance::Sqrt(s) => {
            let bound = if s > Rational::one() {
                s.clone()
            } else {
                Rational::one()
            };
            Distance::Sqrt(&s + int(2) * bound + int(1))
        }
    })
}

/// The same realization with every distance and the threshold multiplied
/// by `factor`.
pub fn scale(r: &Realization, factor: &Rational) -> Result<Realization> {
    let space = r.space.scaled(factor)?;
    let points = r.points.iter().map(|p| p.scaled(factor)).collect();
    Realization::new(space, points, &r.delta * factor)
}

/// Realizes any graph on the metric graph obtained by replacing its edges
/// with unit segments, at threshold 1. Components are chained by spacer
/// edges of length 3.
pub fn realize_any_graph(g: &Graph) -> Realization {
    let n = g.n();
    if n == 0 {
        let space =
            SpaceModel::MetricGraph(MetricGraph::new(1, Vec::new()).expect("single vertex"));
        return Realization::new(space, Vec::new(), int(1)).expect("valid");
    }
    let mut edges: Vec<(usize, usize, Rational)> =
        g.edges().into_iter().map(|(u, v)| (u, v, int(1))).collect();
    let components = g.components();
    for pair in components.windows(2) {
        edges.push((pair[0][0], pair[1][0], int(3)));
    }
    let space =
        SpaceModel::MetricGraph(MetricGraph::new(n, edges).expect("connected by construction"));
    Realization::new(space, (0..n).map(PointRef::Vertex).collect(), int(1)).expect("valid")
}

/// The common part of a family of tree paths, or `None` when empty.
pub fn common_intersection(g: &MetricGraph, paths: &[TreePath]) -> Result<Option<TreePath>> {
    let mut iter = paths.iter();
    let Some(first) = iter.next() else {
        return Ok(None);
    };
    let mut acc = first.clone();
    for p in iter {
        match paths_intersection(g, &acc, p)? {
            Some(next) => acc = next,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// Whether the pairs `(x_i, y_i)` are all within `delta` while every
/// recombined pair `(x_i, y_sigma(i))` is farther than `delta`.
///
/// In that case the segments `[x_i, y_i]` of a tree have empty common
/// intersection; a non-empty one is reported as
/// [`Error::TheoremFalsification`].
pub fn recombination_violation(
    g: &MetricGraph,
    pairs: &[(PointRef, PointRef)],
    sigma: &[usize],
    delta: &Rational,
) -> Result<bool> {
    if !g.is_acyclic() {
        return Err(Error::UnsupportedSpace(
            "recombination needs an acyclic metric graph".into(),
        ));
    }
    if sigma.len() != pairs.len() || {
        let mut s = sigma.to_vec();
        s.sort_unstable();
        s != (0..pairs.len()).collect::<Vec<_>>()
    } {
        return Err(Error::Precondition(
            "sigma must be a permutation of the pairs".into(),
        ));
    }
    for (x, y) in pairs {
        g.validate(x)?;
        g.validate(y)?;
    }
    let close = pairs.iter().all(|(x, y)| g.distance(x, y) <= *delta);
    let apart = pairs
        .iter()
        .enumerate()
        .all(|(i, (x, _))| g.distance(x, &pairs[sigma[i]].1) > *delta);
    if !(close && apart) {
        return Ok(false);
    }
    let segments = pairs
        .iter()
        .map(|(x, y)| g.tree_path(x, y))
        .collect::<Result<Vec<_>>>()?;
    if let Some(common) = common_intersection(g, &segments)? {
        return Err(Error::TheoremFalsification(format!(
            "recombined pairs {pairs:?} with sigma {sigma:?} at delta {delta} share {:?}",
            common.start()
        )));
    }
    Ok(true)
}
