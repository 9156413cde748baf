//! Named induced patterns, certificates and their verification.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use super::Graph;
use crate::error::{Error, Result};

/// Fixed induced subgraphs searched for by [`find_induced`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    Claw,
    Net,
    ThreeSun,
    /// The k-sun, `k >= 3`.
    Sun(usize),
    /// The chordless cycle on `k >= 4` vertices.
    ChordlessCycle(usize),
    /// The star with five leaves.
    K15,
}

impl Pattern {
    pub fn size(&self) -> usize {
        match self {
            Pattern::Claw => 4,
            Pattern::Net | Pattern::ThreeSun => 6,
            Pattern::Sun(k) => 2 * k,
            Pattern::ChordlessCycle(k) => *k,
            Pattern::K15 => 6,
        }
    }

    fn is_valid(&self) -> bool {
        match self {
            Pattern::Sun(k) => *k >= 3,
            Pattern::ChordlessCycle(k) => *k >= 4,
            _ => true,
        }
    }

    /// The pattern itself, with vertices in certificate order:
    /// claw `[center, leaves..]`, net `[triangle.., pendants..]` with pendant
    /// `3 + i` attached to triangle vertex `i`, k-sun `v_0..v_{2k-1}` with the
    /// even vertices forming the hub and `v_{2i+1}` adjacent to `v_{2i}` and
    /// `v_{2i+2}`, cycles in cyclic order, K_{1,5} `[center, leaves..]`.
    pub fn graph(&self) -> Graph {
        match self {
            Pattern::Claw => Graph::star(3),
            Pattern::K15 => Graph::star(5),
            Pattern::Net => Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
                .expect("net"),
            Pattern::ThreeSun => Pattern::Sun(3).graph(),
            Pattern::Sun(k) => {
                let k = *k;
                let mut g = Graph::empty(2 * k);
                for i in 0..k {
                    for j in (i + 1)..k {
                        g.insert(2 * i, 2 * j);
                    }
                    g.insert(2 * i + 1, 2 * i);
                    g.insert(2 * i + 1, (2 * i + 2) % (2 * k));
                }
                g
            }
            Pattern::ChordlessCycle(k) => Graph::cycle(*k),
        }
    }

    fn kind(&self) -> CertificateKind {
        match self {
            Pattern::Claw => CertificateKind::Claw,
            Pattern::Net => CertificateKind::Net,
            Pattern::ThreeSun => CertificateKind::ThreeSun,
            Pattern::Sun(k) => CertificateKind::Sun(*k),
            Pattern::ChordlessCycle(k) => CertificateKind::ChordlessCycle(*k),
            Pattern::K15 => CertificateKind::K15,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Claw => write!(f, "claw"),
            Pattern::Net => write!(f, "net"),
            Pattern::ThreeSun => write!(f, "3-sun"),
            Pattern::Sun(k) => write!(f, "{k}-sun"),
            Pattern::ChordlessCycle(k) => write!(f, "C{k}"),
            Pattern::K15 => write!(f, "K1,5"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    ChordlessCycle(usize),
    Claw,
    Net,
    Sun(usize),
    ThreeSun,
    HamiltonianPath,
    PerfectEliminationOrdering,
    K15,
}

impl CertificateKind {
    pub fn name(&self) -> &'static str {
        match self {
            CertificateKind::ChordlessCycle(_) => "chordless_cycle",
            CertificateKind::Claw => "claw",
            CertificateKind::Net => "net",
            CertificateKind::Sun(_) => "sun",
            CertificateKind::ThreeSun => "three_sun",
            CertificateKind::HamiltonianPath => "hamiltonian_path",
            CertificateKind::PerfectEliminationOrdering => "perfect_elimination_ordering",
            CertificateKind::K15 => "k15",
        }
    }

    /// The induced pattern this kind certifies, if it is a pattern kind.
    pub fn pattern(&self) -> Option<Pattern> {
        match self {
            CertificateKind::ChordlessCycle(k) => Some(Pattern::ChordlessCycle(*k)),
            CertificateKind::Claw => Some(Pattern::Claw),
            CertificateKind::Net => Some(Pattern::Net),
            CertificateKind::Sun(k) => Some(Pattern::Sun(*k)),
            CertificateKind::ThreeSun => Some(Pattern::ThreeSun),
            CertificateKind::K15 => Some(Pattern::K15),
            CertificateKind::HamiltonianPath | CertificateKind::PerfectEliminationOrdering => None,
        }
    }
}

/// An ordered vertex list that lets a verifier re-check a claim.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
}

impl Certificate {
    pub fn new(kind: CertificateKind, vertices: Vec<usize>) -> Certificate {
        Certificate { kind, vertices }
    }

    /// `{"kind": ..., "k": ..., "vertices": [...]}`; `k` only for cycles and
    /// suns.
    pub fn to_json(&self) -> Value {
        let mut v = json!({"kind": self.kind.name(), "vertices": self.vertices});
        if let CertificateKind::ChordlessCycle(k) | CertificateKind::Sun(k) = self.kind {
            v["k"] = json!(k);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Certificate> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse(v.to_string(), "certificate needs a \"kind\" string"))?;
        let vertices: Vec<usize> = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse(v.to_string(), "certificate needs a \"vertices\" array"))?
            .iter()
            .map(|x| {
                x.as_u64().map(|x| x as usize).ok_or_else(|| {
                    Error::parse(x.to_string(), "vertex must be a non-negative integer")
                })
            })
            .collect::<Result<_>>()?;
        let k = v.get("k").and_then(Value::as_u64).map(|k| k as usize);
        let kind = match (kind, k) {
            ("chordless_cycle", k) => CertificateKind::ChordlessCycle(k.unwrap_or(vertices.len())),
            ("sun", k) => CertificateKind::Sun(k.unwrap_or(vertices.len() / 2)),
            ("claw", _) => CertificateKind::Claw,
            ("net", _) => CertificateKind::Net,
            ("three_sun", _) => CertificateKind::ThreeSun,
            ("hamiltonian_path", _) => CertificateKind::HamiltonianPath,
            ("perfect_elimination_ordering", _) => CertificateKind::PerfectEliminationOrdering,
            ("k15", _) => CertificateKind::K15,
            (other, _) => return Err(Error::parse(other, "unknown certificate kind")),
        };
        Ok(Certificate { kind, vertices })
    }
}

fn is_permutation(n: usize, vertices: &[usize]) -> bool {
    if vertices.len() != n {
        return false;
    }
    let mut seen = FixedBitSet::with_capacity(n);
    vertices.iter().all(|&v| v < n && !seen.put(v))
}

/// Whether `order` eliminates every vertex while it is simplicial among the
/// vertices not yet eliminated.
pub(crate) fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if !is_permutation(g.n(), order) {
        return false;
    }
    let mut later = FixedBitSet::with_capacity(g.n());
    later.insert_range(..);
    for &v in order {
        later.set(v, false);
        let mut nb = g.row(v).clone();
        nb.intersect_with(&later);
        let nb: Vec<usize> = nb.ones().collect();
        if !g.is_clique(&nb) {
            return false;
        }
    }
    true
}

/// Re-checks a certificate against `g` without trusting its producer.
pub fn certify(g: &Graph, c: &Certificate) -> bool {
    match c.kind {
        CertificateKind::PerfectEliminationOrdering => {
            is_perfect_elimination_ordering(g, &c.vertices)
        }
        CertificateKind::HamiltonianPath => {
            is_permutation(g.n(), &c.vertices)
                && c.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
        }
        kind => {
            let pattern = kind.pattern().expect("pattern kind");
            if !pattern.is_valid() || c.vertices.len() != pattern.size() {
                return false;
            }
            let mut seen = FixedBitSet::with_capacity(g.n());
            if !c.vertices.iter().all(|&v| v < g.n() && !seen.put(v)) {
                return false;
            }
            g.induced(&c.vertices) == pattern.graph()
        }
    }
}

/// Searches `g` for an induced copy of `pattern`. Returns the host vertices
/// in the pattern's certificate order, preferring lexicographically small
/// host indices.
pub fn find_induced(pattern: Pattern, g: &Graph) -> Option<Certificate> {
    if !pattern.is_valid() || pattern.size() > g.n() {
        return None;
    }
    let vertices = match pattern {
        Pattern::Sun(k) => SunSearch::new(g, k).run(),
        Pattern::ThreeSun => SunSearch::new(g, 3).run(),
        _ => GenericSearch::new(g, &pattern.graph()).run(),
    }?;
    Some(Certificate::new(pattern.kind(), vertices))
}

/// Backtracking over pattern vertices in a connected order; each new host
/// vertex is drawn from the neighbourhood of an already matched one.
struct GenericSearch<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    /// For each position: earlier positions with whether they must be adjacent.
    constraints: Vec<Vec<(usize, bool)>>,
    /// For each position > 0: an earlier position it must be adjacent to.
    anchor: Vec<Option<usize>>,
    min_degree: Vec<usize>,
    assigned: Vec<usize>,
    used: FixedBitSet,
}

impl<'a> GenericSearch<'a> {
    fn new(host: &'a Graph, pattern: &Graph) -> Self {
        let k = pattern.n();
        let mut order = vec![0];
        let mut placed = FixedBitSet::with_capacity(k);
        placed.insert(0);
        let mut i = 0;
        while i < order.len() {
            for w in pattern.neighbours(order[i]) {
                if !placed.put(w) {
                    order.push(w);
                }
            }
            i += 1;
        }
        debug_assert_eq!(order.len(), k, "patterns are connected");
        let constraints: Vec<Vec<(usize, bool)>> = (0..k)
            .map(|i| {
                (0..i)
                    .map(|j| (j, pattern.has_edge(order[i], order[j])))
                    .collect()
            })
            .collect();
        let anchor = constraints
            .iter()
            .map(|c| c.iter().find(|(_, adj)| *adj).map(|(j, _)| *j))
            .collect();
        let min_degree = order.iter().map(|&p| pattern.degree(p)).collect();
        GenericSearch {
            host,
            order,
            constraints,
            anchor,
            min_degree,
            assigned: Vec::with_capacity(k),
            used: FixedBitSet::with_capacity(host.n()),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if !self.extend() {
            return None;
        }
        let mut out = vec![0; self.order.len()];
        for (pos, &p) in self.order.iter().enumerate() {
            out[p] = self.assigned[pos];
        }
        Some(out)
    }

    fn fits(&self, pos: usize, v: usize) -> bool {
        !self.used.contains(v)
            && self.host.degree(v) >= self.min_degree[pos]
            && self.constraints[pos]
                .iter()
                .all(|&(j, adj)| self.host.has_edge(v, self.assigned[j]) == adj)
    }

    fn extend(&mut self) -> bool {
        let pos = self.assigned.len();
        if pos == self.order.len() {
            return true;
        }
        let candidates: Vec<usize> = match self.anchor[pos] {
            Some(j) => self.host.neighbours(self.assigned[j]).collect(),
            None => (0..self.host.n()).collect(),
        };
        for v in candidates {
            if self.fits(pos, v) {
                self.assigned.push(v);
                self.used.insert(v);
                if self.extend() {
                    return true;
                }
                self.used.set(v, false);
                self.assigned.pop();
            }
        }
        false
    }
}

/// Sun search: the hub clique is fixed first, in cyclic order, with its
/// smallest vertex first and the direction chosen so the second hub vertex
/// is smaller than the last. Rim vertices are matched afterwards.
struct SunSearch<'a> {
    host: &'a Graph,
    k: usize,
    hub: Vec<usize>,
    rim: Vec<usize>,
    used: FixedBitSet,
}

impl<'a> SunSearch<'a> {
    fn new(host: &'a Graph, k: usize) -> Self {
        SunSearch {
            host,
            k,
            hub: Vec::with_capacity(k),
            rim: Vec::with_capacity(k),
            used: FixedBitSet::with_capacity(host.n()),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if !self.choose_hub() {
            return None;
        }
        let mut out = Vec::with_capacity(2 * self.k);
        for i in 0..self.k {
            out.push(self.hub[i]);
            out.push(self.rim[i]);
        }
        Some(out)
    }

    /// Some unused vertex sees hub vertices `a` and `b` and no other chosen
    /// hub vertex.
    fn rim_possible(&self, a: usize, b: usize) -> bool {
        let g = self.host;
        let mut common = g.row(a).clone();
        common.intersect_with(g.row(b));
        common.ones().any(|r| {
            !self.used.contains(r)
                && self
                    .hub
                    .iter()
                    .all(|&h| h == a || h == b || !g.has_edge(r, h))
        })
    }

    fn choose_hub(&mut self) -> bool {
        let g = self.host;
        let i = self.hub.len();
        if i == self.k {
            return self.rim_possible(self.hub[self.k - 1], self.hub[0]) && self.choose_rim();
        }
        let candidates: Vec<usize> = match self.hub.first() {
            None => (0..g.n()).collect(),
            Some(&h0) => g.neighbours(h0).filter(|&v| v > h0).collect(),
        };
        for v in candidates {
            if self.used.contains(v) || g.degree(v) < self.k + 1 {
                continue;
            }
            if !self.hub.iter().all(|&h| g.has_edge(h, v)) {
                continue;
            }
            if i == self.k - 1 && i >= 2 && v < self.hub[1] {
                continue;
            }
            if let Some(&prev) = self.hub.last() {
                if !self.rim_possible(prev, v) {
                    continue;
                }
            }
            self.hub.push(v);
            self.used.insert(v);
            if self.choose_hub() {
                return true;
            }
            self.used.set(v, false);
            self.hub.pop();
        }
        false
    }

    fn choose_rim(&mut self) -> bool {
        let g = self.host;
        let i = self.rim.len();
        if i == self.k {
            return true;
        }
        let (a, b) = (self.hub[i], self.hub[(i + 1) % self.k]);
        let mut common = g.row(a).clone();
        common.intersect_with(g.row(b));
        let candidates: Vec<usize> = common.ones().collect();
        for r in candidates {
            if self.used.contains(r) {
                continue;
            }
            let hub_ok = self
                .hub
                .iter()
                .all(|&h| h == a || h == b || !g.has_edge(r, h));
            let rim_ok = self.rim.iter().all(|&s| !g.has_edge(r, s));
            if hub_ok && rim_ok {
                self.rim.push(r);
                self.used.insert(r);
                if self.choose_rim() {
                    return true;
                }
                self.used.set(r, false);
                self.rim.pop();
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_are_what_they_claim() {
        let net = Pattern::Net.graph();
        assert_eq!(net.edge_count(), 6);
        assert_eq!(
            (3..6).map(|v| net.degree(v)).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );
        let sun = Pattern::Sun(4).graph();
        assert_eq!(sun.edge_count(), 6 + 8);
        assert!(sun.is_clique(&[0, 2, 4, 6]));
        assert_eq!(Pattern::ThreeSun.graph(), Pattern::Sun(3).graph());
    }

    #[test]
    fn claw_in_star_and_not_in_hexagon() {
        let c = find_induced(Pattern::Claw, &Graph::star(3)).unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2, 3]);
        assert!(find_induced(Pattern::Claw, &Graph::cycle(6)).is_none());
    }

    #[test]
    fn net_in_net_and_sun_in_sun() {
        assert!(find_induced(Pattern::Net, &Pattern::Net.graph()).is_some());
        let sun7 = Pattern::Sun(7).graph();
        let c = find_induced(Pattern::Sun(7), &sun7).unwrap();
        assert!(certify(&sun7, &c));
        assert!(find_induced(Pattern::ThreeSun, &sun7).is_none());
        assert!(find_induced(Pattern::Sun(4), &Graph::complete(8)).is_none());
    }

    #[test]
    fn certify_rejects_broken_certificates() {
        let g = Graph::star(3);
        assert!(certify(
            &g,
            &Certificate::new(CertificateKind::Claw, vec![0, 1, 2, 3])
        ));
        assert!(!certify(
            &g,
            &Certificate::new(CertificateKind::Claw, vec![1, 0, 2, 3])
        ));
        assert!(!certify(
            &g,
            &Certificate::new(CertificateKind::Claw, vec![0, 1, 1, 3])
        ));
        let peo = Certificate::new(
            CertificateKind::PerfectEliminationOrdering,
            vec![1, 2, 3, 0],
        );
        assert!(certify(&g, &peo));
        let c4 = Graph::cycle(4);
        let bad = Certificate::new(
            CertificateKind::PerfectEliminationOrdering,
            vec![0, 1, 2, 3],
        );
        assert!(!certify(&c4, &bad));
    }

    #[test]
    fn certificate_json_round_trip() {
        for c in [
            Certificate::new(CertificateKind::Sun(4), (0..8).collect()),
            Certificate::new(CertificateKind::ChordlessCycle(5), (0..5).collect()),
            Certificate::new(CertificateKind::Net, (0..6).collect()),
        ] {
            assert_eq!(Certificate::from_json(&c.to_json()).unwrap(), c);
        }
    }
}
