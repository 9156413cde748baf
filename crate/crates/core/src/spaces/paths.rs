//! Geodesic segments in metric graphs and the set operations on them.

use num_traits::{Signed, Zero};

use super::metric_graph::MetricGraph;
use super::PointRef;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A straight run along one edge, between two offsets measured from the
/// edge's `u` end. `from != to` for every piece of a materialised path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub edge: usize,
    pub from: Rational,
    pub to: Rational,
}

impl Piece {
    pub fn low(&self) -> &Rational {
        if self.from <= self.to {
            &self.from
        } else {
            &self.to
        }
    }

    pub fn high(&self) -> &Rational {
        if self.from <= self.to {
            &self.to
        } else {
            &self.from
        }
    }

    pub fn length(&self) -> Rational {
        (&self.to - &self.from).abs()
    }

    fn contains(&self, g: &MetricGraph, p: &PointRef) -> bool {
        match p {
            PointRef::OnEdge { edge, offset } => {
                *edge == self.edge && self.low() <= offset && offset <= self.high()
            }
            PointRef::Vertex(w) => {
                let e = g.edge(self.edge);
                (e.u == *w && self.low().is_zero()) || (e.v == *w && *self.high() == e.length)
            }
            _ => false,
        }
    }

    /// Vertices this piece touches (its endpoints that sit on vertices).
    fn vertices(&self, g: &MetricGraph) -> Vec<usize> {
        let e = g.edge(self.edge);
        let mut out = Vec::new();
        if self.low().is_zero() {
            out.push(e.u);
        }
        if *self.high() == e.length {
            out.push(e.v);
        }
        out
    }
}

/// An ordered run of pieces from `start` to `end`. On acyclic metric graphs
/// this is the unique geodesic segment; on cyclic graphs it can describe any
/// arc built with [`TreePath::along`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePath {
    start: PointRef,
    end: PointRef,
    pieces: Vec<Piece>,
    length: Rational,
}

impl TreePath {
    pub fn point(p: PointRef) -> TreePath {
        TreePath {
            start: p.clone(),
            end: p,
            pieces: Vec::new(),
            length: Rational::zero(),
        }
    }

    pub(crate) fn from_parts(start: PointRef, end: PointRef, pieces: Vec<Piece>) -> TreePath {
        let length = pieces.iter().map(Piece::length).sum();
        TreePath {
            start,
            end,
            pieces,
            length,
        }
    }

    /// Builds a path from explicit pieces, checking that consecutive pieces
    /// share their junction point.
    pub fn along(g: &MetricGraph, pieces: Vec<Piece>) -> Result<TreePath> {
        let first = pieces
            .first()
            .ok_or_else(|| Error::Precondition("a path needs at least one piece".into()))?;
        let start = g.point(first.edge, first.from.clone())?;
        let mut cursor = start.clone();
        for (i, p) in pieces.iter().enumerate() {
            if p.from == p.to {
                return Err(Error::Precondition(format!("piece {i} has zero length")));
            }
            if g.point(p.edge, p.from.clone())? != cursor {
                return Err(Error::Precondition(format!(
                    "piece {i} does not continue the path"
                )));
            }
            cursor = g.point(p.edge, p.to.clone())?;
        }
        Ok(TreePath::from_parts(start, cursor, pieces))
    }

    pub fn start(&self) -> &PointRef {
        &self.start
    }

    pub fn end(&self) -> &PointRef {
        &self.end
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn length(&self) -> &Rational {
        &self.length
    }

    pub fn is_point(&self) -> bool {
        self.pieces.is_empty()
    }

    /// The point at arc length `s` from the start.
    pub fn point_at(&self, g: &MetricGraph, s: &Rational) -> Result<PointRef> {
        if s.is_negative() || *s > self.length {
            return Err(Error::Domain(format!("arc length {s} outside the path")));
        }
        let mut rest = s.clone();
        for piece in &self.pieces {
            let len = piece.length();
            if rest <= len {
                let offset = if piece.from <= piece.to {
                    &piece.from + &rest
                } else {
                    &piece.from - &rest
                };
                return g.point(piece.edge, offset);
            }
            rest -= len;
        }
        Ok(self.start.clone())
    }

    pub fn contains(&self, g: &MetricGraph, p: &PointRef) -> bool {
        if self.pieces.is_empty() {
            return self.start == *p;
        }
        self.pieces.iter().any(|piece| piece.contains(g, p))
    }
}

/// The common part of two geodesics in an acyclic metric graph, or `None`
/// when they are disjoint.
pub fn paths_intersection(
    g: &MetricGraph,
    p1: &TreePath,
    p2: &TreePath,
) -> Result<Option<TreePath>> {
    if !g.is_acyclic() {
        return Err(Error::UnsupportedSpace(
            "path intersection requires an acyclic metric graph".into(),
        ));
    }
    let mut atoms: Vec<PointRef> = Vec::new();
    if p1.is_point() && p2.contains(g, &p1.start) {
        atoms.push(p1.start.clone());
    }
    if p2.is_point() && p1.contains(g, &p2.start) {
        atoms.push(p2.start.clone());
    }
    for a in &p1.pieces {
        for b in &p2.pieces {
            if a.edge == b.edge {
                let lo = a.low().max(b.low()).clone();
                let hi = a.high().min(b.high()).clone();
                if lo <= hi {
                    atoms.push(g.point(a.edge, lo)?);
                    atoms.push(g.point(a.edge, hi)?);
                }
            } else {
                let bv = b.vertices(g);
                for w in a.vertices(g) {
                    if bv.contains(&w) {
                        atoms.push(PointRef::Vertex(w));
                    }
                }
            }
        }
    }
    let Some(seed) = atoms.first().cloned() else {
        return Ok(None);
    };
    // In a tree the intersection is a segment; a double sweep over its
    // extreme atoms recovers the two endpoints.
    let far = |from: &PointRef| {
        atoms
            .iter()
            .max_by(|x, y| g.distance(from, x).cmp(&g.distance(from, y)))
            .cloned()
            .unwrap()
    };
    let x = far(&seed);
    let y = far(&x);
    g.tree_path(&x, &y).map(Some)
}

/// Result of [`tree_bridge`]: the unique closest points and the segment
/// joining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bridge {
    pub a: PointRef,
    pub b: PointRef,
    pub path: TreePath,
}

fn check_connected(g: &MetricGraph, set: &[TreePath], name: &str) -> Result<()> {
    let n = set.len();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !reached[j] && paths_intersection(g, &set[i], &set[j])?.is_some() {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    if reached.iter().all(|&r| r) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("set {name} is not connected")))
    }
}

/// The bridge between two disjoint connected unions of segments in an
/// acyclic metric graph.
pub fn tree_bridge(g: &MetricGraph, a_set: &[TreePath], b_set: &[TreePath]) -> Result<Bridge> {
    if !g.is_acyclic() {
        return Err(Error::UnsupportedSpace(
            "bridges are defined on acyclic metric graphs".into(),
        ));
    }
    if a_set.is_empty() || b_set.is_empty() {
        return Err(Error::Precondition("bridge sets must be non-empty".into()));
    }
    check_connected(g, a_set, "A")?;
    check_connected(g, b_set, "B")?;
    for p in a_set {
        for q in b_set {
            if paths_intersection(g, p, q)?.is_some() {
                return Err(Error::Precondition("sets A and B intersect".into()));
            }
        }
    }

    // Walk any A-to-B geodesic: A occupies an initial run of it and B a final
    // run, and the bridge is the gap between the two runs.
    let a0 = a_set[0].start().clone();
    let b0 = b_set[0].start().clone();
    let probe = g.tree_path(&a0, &b0)?;
    let mut a_best: Option<(Rational, PointRef)> = None;
    let mut b_best: Option<(Rational, PointRef)> = None;
    for p in a_set {
        if let Some(common) = paths_intersection(g, p, &probe)? {
            for q in [common.start(), common.end()] {
                let d = g.distance(&a0, q);
                if a_best.as_ref().is_none_or(|(bd, _)| d > *bd) {
                    a_best = Some((d, q.clone()));
                }
            }
        }
    }
    for p in b_set {
        if let Some(common) = paths_intersection(g, p, &probe)? {
            for q in [common.start(), common.end()] {
                let d = g.distance(&a0, q);
                if b_best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                    b_best = Some((d, q.clone()));
                }
            }
        }
    }
    let (Some((_, a)), Some((_, b))) = (a_best, b_best) else {
        return Err(Error::Internal(
            "bridge probe missed one of the sets".into(),
        ));
    };
    let path = g.tree_path(&a, &b)?;
    Ok(Bridge { a, b, path })
}

enum Chunk {
    Point(PointRef),
    Run {
        edge: usize,
        lo: Rational,
        hi: Rational,
    },
}

fn chunks(path: &TreePath) -> Vec<Chunk> {
    if path.is_point() {
        return vec![Chunk::Point(path.start().clone())];
    }
    path.pieces()
        .iter()
        .map(|p| Chunk::Run {
            edge: p.edge,
            lo: p.low().clone(),
            hi: p.high().clone(),
        })
        .collect()
}

fn chunk_ends(g: &MetricGraph, c: &Chunk) -> Vec<PointRef> {
    match c {
        Chunk::Point(p) => vec![p.clone()],
        Chunk::Run { edge, lo, hi } => vec![
            g.point(*edge, lo.clone()).expect("piece inside its edge"),
            g.point(*edge, hi.clone()).expect("piece inside its edge"),
        ],
    }
}

fn chunk_contains(g: &MetricGraph, c: &Chunk, p: &PointRef) -> bool {
    match c {
        Chunk::Point(q) => q == p,
        Chunk::Run { edge, lo, hi } => Piece {
            edge: *edge,
            from: lo.clone(),
            to: hi.clone(),
        }
        .contains(g, p),
    }
}

/// Exact infimum of `d(a, b)` over `a` in the union of `a_set` and `b` in the
/// union of `b_set`. Works on any metric graph.
///
/// Distance from a point to a run along an edge is a minimum of functions
/// linear in the run parameter, hence minimised at a run end unless the
/// point lies on the run; the same holds for pairs of runs.
pub fn set_distance(g: &MetricGraph, a_set: &[TreePath], b_set: &[TreePath]) -> Result<Rational> {
    if a_set.is_empty() || b_set.is_empty() {
        return Err(Error::Precondition(
            "set_distance needs non-empty sets".into(),
        ));
    }
    let a_chunks: Vec<Chunk> = a_set.iter().flat_map(chunks).collect();
    let b_chunks: Vec<Chunk> = b_set.iter().flat_map(chunks).collect();
    let mut best: Option<Rational> = None;
    for ca in &a_chunks {
        for cb in &b_chunks {
            let d = chunk_distance(g, ca, cb);
            if d.is_zero() {
                return Ok(d);
            }
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    }
    Ok(best.unwrap())
}

fn chunk_distance(g: &MetricGraph, a: &Chunk, b: &Chunk) -> Rational {
    if let (
        Chunk::Run {
            edge: ea,
            lo: la,
            hi: ha,
        },
        Chunk::Run {
            edge: eb,
            lo: lb,
            hi: hb,
        },
    ) = (a, b)
    {
        if ea == eb && la.max(lb) <= ha.min(hb) {
            return Rational::zero();
        }
    }
    let a_ends = chunk_ends(g, a);
    let b_ends = chunk_ends(g, b);
    if a_ends.iter().any(|p| chunk_contains(g, b, p))
        || b_ends.iter().any(|p| chunk_contains(g, a, p))
    {
        return Rational::zero();
    }
    let mut best: Option<Rational> = None;
    for p in &a_ends {
        for q in &b_ends {
            let d = g.distance(p, q);
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    }
    best.unwrap()
}
