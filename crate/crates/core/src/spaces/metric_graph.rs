use num_traits::{Signed, Zero};

use super::paths::{Piece, TreePath};
use super::PointRef;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: Rational,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Offset of endpoint `w` along this edge (0 at `u`, length at `v`).
    pub fn offset_of(&self, w: usize) -> Rational {
        if w == self.u {
            Rational::zero()
        } else {
            self.length.clone()
        }
    }
}

#[derive(Debug, Clone)]
struct TreeIndex {
    /// (parent vertex, connecting edge) for every non-root vertex.
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

/// A finite connected metric graph: vertices joined by edges of positive
/// rational length, with the shortest-path metric extended to edge interiors.
///
/// Parallel edges are allowed; self-loops are not. Vertex-to-vertex distances
/// are computed once at construction.
#[derive(Debug, Clone)]
pub struct MetricGraph {
    ids: Vec<u64>,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
    dist: Vec<Vec<Rational>>,
    tree: Option<TreeIndex>,
}

impl PartialEq for MetricGraph {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.edges == other.edges
    }
}

impl MetricGraph {
    /// Vertices `0..n`, edges given as `(u, v, length)` over those indices.
    pub fn new(n: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        Self::with_ids((0..n as u64).collect(), edges)
    }

    /// Vertices carry external ids (used by the file format); edges refer to
    /// vertex positions in `ids`.
    pub fn with_ids(ids: Vec<u64>, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let n = ids.len();
        if n == 0 {
            return Err(Error::Precondition(
                "metric graph needs at least one vertex".into(),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for id in &ids {
            if !seen.insert(*id) {
                return Err(Error::Precondition(format!("duplicate vertex id {id}")));
            }
        }
        let mut incident = vec![Vec::new(); n];
        let mut list = Vec::with_capacity(edges.len());
        for (i, (u, v, length)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge {i} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!(
                    "edge {i} is a self-loop at vertex {u}"
                )));
            }
            if !length.is_positive() {
                return Err(Error::Precondition(format!(
                    "edge {i} has non-positive length"
                )));
            }
            incident[u].push(i);
            incident[v].push(i);
            list.push(Edge { u, v, length });
        }

        let dist = all_pairs(n, &list)
            .ok_or_else(|| Error::Precondition("metric graph is disconnected".into()))?;
        let mut graph = MetricGraph {
            ids,
            edges: list,
            incident,
            dist,
            tree: None,
        };
        if graph.edges.len() + 1 == n {
            graph.tree = Some(graph.index_tree());
        }
        Ok(graph)
    }

    fn index_tree(&self) -> TreeIndex {
        let n = self.vertex_count();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(w) = stack.pop() {
            for &e in &self.incident[w] {
                let x = self.edges[e].other(w);
                if !seen[x] {
                    seen[x] = true;
                    parent[x] = Some((w, e));
                    depth[x] = depth[w] + 1;
                    stack.push(x);
                }
            }
        }
        TreeIndex { parent, depth }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn ids(&self) -> &[u64] {
        &self.ids
    }

    pub fn index_of_id(&self, id: u64) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn is_acyclic(&self) -> bool {
        self.tree.is_some()
    }

    pub fn total_length(&self) -> Rational {
        self.edges.iter().map(|e| e.length.clone()).sum()
    }

    pub fn vertex_distance(&self, u: usize, v: usize) -> &Rational {
        &self.dist[u][v]
    }

    /// Largest vertex-to-vertex distance. On trees this is the diameter.
    pub fn vertex_diameter(&self) -> Rational {
        self.dist
            .iter()
            .flat_map(|row| row.iter())
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The point at `offset` from the `u` end of `edge`, normalised to a
    /// vertex when the offset is 0 or the full length.
    pub fn point(&self, edge: usize, offset: Rational) -> Result<PointRef> {
        let e = self
            .edges
            .get(edge)
            .ok_or_else(|| Error::Domain(format!("no edge {edge}")))?;
        if offset.is_negative() || offset > e.length {
            return Err(Error::Domain(format!("offset outside edge {edge}")));
        }
        Ok(if offset.is_zero() {
            PointRef::Vertex(e.u)
        } else if offset == e.length {
            PointRef::Vertex(e.v)
        } else {
            PointRef::OnEdge { edge, offset }
        })
    }

    pub fn validate(&self, p: &PointRef) -> Result<()> {
        match p {
            PointRef::Vertex(v) if *v < self.vertex_count() => Ok(()),
            PointRef::OnEdge { edge, offset } => match self.edges.get(*edge) {
                Some(e) if offset.is_positive() && *offset < e.length => Ok(()),
                Some(_) => Err(Error::Domain(format!(
                    "edge-interior offset must lie strictly inside edge {edge}"
                ))),
                None => Err(Error::Domain(format!("no edge {edge}"))),
            },
            _ => Err(Error::Domain(format!(
                "{p:?} is not a point of this metric graph"
            ))),
        }
    }

    /// Ways to leave a point: each reachable vertex with the cost to reach it
    /// without passing through another vertex.
    pub(crate) fn anchors(&self, p: &PointRef) -> Vec<(usize, Rational)> {
        match p {
            PointRef::Vertex(v) => vec![(*v, Rational::zero())],
            PointRef::OnEdge { edge, offset } => {
                let e = &self.edges[*edge];
                vec![(e.u, offset.clone()), (e.v, &e.length - offset)]
            }
            _ => Vec::new(),
        }
    }

    /// Shortest-path distance between two validated points.
    pub fn distance(&self, a: &PointRef, b: &PointRef) -> Rational {
        let mut best: Option<Rational> = None;
        if let (
            PointRef::OnEdge {
                edge: ea,
                offset: ta,
            },
            PointRef::OnEdge {
                edge: eb,
                offset: tb,
            },
        ) = (a, b)
        {
            if ea == eb {
                best = Some((ta - tb).abs());
            }
        }
        for (x, cx) in self.anchors(a) {
            for (y, cy) in self.anchors(b) {
                let d = &cx + &self.dist[x][y] + &cy;
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
        best.unwrap_or_else(Rational::zero)
    }

    /// Edges along the unique vertex path from `u` to `v` in a tree, in travel
    /// order, each with the vertex it is entered from.
    fn vertex_path(&self, u: usize, v: usize) -> Vec<(usize, usize)> {
        let tree = self.tree.as_ref().expect("vertex_path on a tree");
        let (mut a, mut b) = (u, v);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while tree.depth[a] > tree.depth[b] {
            let (p, e) = tree.parent[a].unwrap();
            up.push((e, a));
            a = p;
        }
        while tree.depth[b] > tree.depth[a] {
            let (p, e) = tree.parent[b].unwrap();
            down.push((e, p));
            b = p;
        }
        while a != b {
            let (pa, ea) = tree.parent[a].unwrap();
            let (pb, eb) = tree.parent[b].unwrap();
            up.push((ea, a));
            down.push((eb, pb));
            a = pa;
            b = pb;
        }
        down.reverse();
        up.extend(down);
        up
    }

    fn full_piece(&self, edge: usize, from_vertex: usize) -> Piece {
        let e = &self.edges[edge];
        Piece {
            edge,
            from: e.offset_of(from_vertex),
            to: e.offset_of(e.other(from_vertex)),
        }
    }

    /// The unique geodesic between two points of an acyclic metric graph.
    pub fn tree_path(&self, a: &PointRef, b: &PointRef) -> Result<TreePath> {
        if self.tree.is_none() {
            return Err(Error::UnsupportedSpace(
                "geodesic paths are only materialised on acyclic metric graphs".into(),
            ));
        }
        self.validate(a)?;
        self.validate(b)?;
        if a == b {
            return Ok(TreePath::point(a.clone()));
        }
        if let (
            PointRef::OnEdge {
                edge: ea,
                offset: ta,
            },
            PointRef::OnEdge {
                edge: eb,
                offset: tb,
            },
        ) = (a, b)
        {
            if ea == eb {
                let piece = Piece {
                    edge: *ea,
                    from: ta.clone(),
                    to: tb.clone(),
                };
                return Ok(TreePath::from_parts(a.clone(), b.clone(), vec![piece]));
            }
        }

        let mut pieces = Vec::new();
        let exit_a = self.exit_towards(a, b);
        if let PointRef::OnEdge { edge, offset } = a {
            pieces.push(Piece {
                edge: *edge,
                from: offset.clone(),
                to: self.edges[*edge].offset_of(exit_a),
            });
        }
        let exit_b = self.exit_towards(b, a);
        for (e, from) in self.vertex_path(exit_a, exit_b) {
            pieces.push(self.full_piece(e, from));
        }
        if let PointRef::OnEdge { edge, offset } = b {
            pieces.push(Piece {
                edge: *edge,
                from: self.edges[*edge].offset_of(exit_b),
                to: offset.clone(),
            });
        }
        Ok(TreePath::from_parts(a.clone(), b.clone(), pieces))
    }

    /// The vertex through which the geodesic from `p` towards `q` leaves p's
    /// edge (or `p` itself when it is a vertex). Tree only.
    fn exit_towards(&self, p: &PointRef, q: &PointRef) -> usize {
        match p {
            PointRef::Vertex(v) => *v,
            PointRef::OnEdge { edge, .. } => {
                let e = &self.edges[*edge];
                let pu = PointRef::Vertex(e.u);
                let pv = PointRef::Vertex(e.v);
                if self.distance(&pu, q) <= self.distance(&pv, q) {
                    e.u
                } else {
                    e.v
                }
            }
            _ => unreachable!("validated metric-graph point"),
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Result<MetricGraph> {
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, &e.length * factor))
            .collect();
        MetricGraph::with_ids(self.ids.clone(), edges)
    }

    /// Indices of the distinct simple-graph neighbours of `v`.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incident[v]
            .iter()
            .map(|&e| self.edges[e].other(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[allow(clippy::needless_range_loop)]
fn all_pairs(n: usize, edges: &[Edge]) -> Option<Vec<Vec<Rational>>> {
    let mut d: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(Rational::zero());
    }
    for e in edges {
        if d[e.u][e.v].as_ref().is_none_or(|x| e.length < *x) {
            d[e.u][e.v] = Some(e.length.clone());
            d[e.v][e.u] = Some(e.length.clone());
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(dik) = d[i][k].clone() else { continue };
            for j in 0..n {
                if let Some(dkj) = &d[k][j] {
                    let via = &dik + dkj;
                    if d[i][j].as_ref().is_none_or(|x| via < *x) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
    }
    d.into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<_>>>())
        .collect()
}
