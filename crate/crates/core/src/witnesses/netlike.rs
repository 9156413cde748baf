//! Claw or net extraction from net-like graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graphs::{Certificate, CertificateKind, Graph};

/// Three vertex paths `a_0..a_l`, `b_0..b_m`, `c_0..c_n` (each with at least
/// two vertices) such that, in the subgraph induced on their union, each
/// path is chordless, `a_0`, `b_0`, `c_0` are leaves and `{a_l, b_m, c_n}`
/// is a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetLikeStructure {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl NetLikeStructure {
    pub fn new(a: Vec<usize>, b: Vec<usize>, c: Vec<usize>) -> Self {
        NetLikeStructure { a, b, c }
    }

    fn paths(&self) -> [&Vec<usize>; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.paths().into_iter().flatten().copied().collect()
    }

    fn contains(&self, v: usize) -> bool {
        self.paths().iter().any(|p| p.contains(&v))
    }

    fn inner_degree(&self, g: &Graph, v: usize) -> usize {
        g.neighbours(v).filter(|&w| self.contains(w)).count()
    }

    /// Checks the three defining conditions, naming the first that fails.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let names = ["a", "b", "c"];
        let all = self.vertices();
        let mut sorted = all.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != all.len() {
            return Err(Error::Precondition("paths must be vertex-disjoint".into()));
        }
        if let Some(&v) = all.iter().find(|&&v| v >= g.n()) {
            return Err(Error::Precondition(format!(
                "vertex {v} is not in the graph"
            )));
        }
        for (p, name) in self.paths().into_iter().zip(names) {
            if p.len() < 2 {
                return Err(Error::Precondition(format!(
                    "path {name} needs at least two vertices"
                )));
            }
            for i in 0..p.len() {
                for j in (i + 1)..p.len() {
                    if g.has_edge(p[i], p[j]) != (j == i + 1) {
                        return Err(Error::Precondition(format!(
                            "path {name} does not induce a chordless path"
                        )));
                    }
                }
            }
            if self.inner_degree(g, p[0]) != 1 {
                return Err(Error::Precondition(format!("{name}_0 is not a leaf")));
            }
        }
        let ends = [
            *self.a.last().unwrap(),
            *self.b.last().unwrap(),
            *self.c.last().unwrap(),
        ];
        if !g.is_clique(&ends) {
            return Err(Error::Precondition(
                "the path ends do not induce a triangle".into(),
            ));
        }
        Ok(())
    }
}

/// Follows the inductive case analysis down to a claw or a net.
pub fn extract_claw_or_net(g: &Graph, s: &NetLikeStructure) -> Result<Certificate> {
    s.validate(g)?;
    let mut s = s.clone();
    loop {
        match step(g, s) {
            Step::Done(c) => return Ok(c),
            Step::Recurse(next) => {
                debug_assert!(
                    next.validate(g).is_ok(),
                    "reduction preserves the conditions"
                );
                s = next;
            }
        }
    }
}

enum Step {
    Done(Certificate),
    Recurse(NetLikeStructure),
}

fn claw(center: usize, leaves: [usize; 3]) -> Step {
    Step::Done(Certificate::new(
        CertificateKind::Claw,
        vec![center, leaves[0], leaves[1], leaves[2]],
    ))
}

fn step(g: &Graph, s: NetLikeStructure) -> Step {
    let NetLikeStructure { a, b, c } = s;
    if a.len() == 2 && b.len() == 2 && c.len() == 2 {
        return Step::Done(Certificate::new(
            CertificateKind::Net,
            vec![a[1], b[1], c[1], a[0], b[0], c[0]],
        ));
    }
    // Rotate so that the first path is the long one.
    let (a, b, c) = if a.len() >= 3 {
        (a, b, c)
    } else if b.len() >= 3 {
        (b, c, a)
    } else {
        (c, a, b)
    };
    let s = NetLikeStructure { a, b, c };
    let a1 = s.a[1];
    if s.inner_degree(g, a1) == 2 {
        let NetLikeStructure { a, b, c } = s;
        return Step::Recurse(NetLikeStructure::new(a[1..].to_vec(), b, c));
    }
    let NetLikeStructure { a, b, c } = s;
    let (b, c) = if b.iter().any(|&v| g.has_edge(a1, v)) {
        (b, c)
    } else {
        (c, b)
    };
    let m = b.len() - 1;
    let i = (0..=m)
        .find(|&i| g.has_edge(a1, b[i]))
        .expect("a_1 sees the second path");
    if i < m {
        if !g.has_edge(a1, b[i + 1]) {
            return claw(b[i], [a1, b[i - 1], b[i + 1]]);
        }
        let mut pool: Vec<usize> = b[i + 1..].to_vec();
        pool.extend(c.iter().copied());
        let tail = shortest_path(g, &pool, c[0], b[i + 1]);
        return Step::Recurse(NetLikeStructure::new(
            a[..2].to_vec(),
            b[..=i].to_vec(),
            tail,
        ));
    }
    let cn = *c.last().unwrap();
    if g.has_edge(a1, cn) {
        return Step::Recurse(NetLikeStructure::new(a[..2].to_vec(), b, c));
    }
    if g.has_edge(b[m - 1], cn) {
        let new_a = vec![a[0], a1, b[m]];
        return Step::Recurse(NetLikeStructure::new(new_a, b[..m].to_vec(), c));
    }
    claw(b[m], [a1, b[m - 1], cn])
}

/// Shortest path from `from` to `to` inside the subgraph induced on `pool`.
fn shortest_path(g: &Graph, pool: &[usize], from: usize, to: usize) -> Vec<usize> {
    let mut parent = std::collections::HashMap::from([(from, from)]);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &w in pool {
            if g.has_edge(u, w) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[path.last().unwrap()]);
    }
    path.reverse();
    path
}
