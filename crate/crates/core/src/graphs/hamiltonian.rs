use super::{Certificate, CertificateKind, Graph};
use crate::caps::caps;
use crate::error::{Error, Result};

/// Held–Karp reachability over vertex subsets: `ends(mask)` is the set of
/// vertices at which some Hamiltonian path of the subgraph induced on `mask`
/// can end.
pub struct HamiltonianTable {
    adj: Vec<u32>,
    ends: Vec<u32>,
}

impl HamiltonianTable {
    pub fn new(g: &Graph) -> Result<HamiltonianTable> {
        let n = g.n();
        let cap = caps().exponential;
        if n > cap {
            return Err(Error::Capacity {
                what: "Hamiltonian path table",
                n,
                cap,
            });
        }
        let adj: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
        let mut ends = vec![0u32; 1 << n];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..ends.len() {
            let mut cur = ends[mask];
            while cur != 0 {
                let v = cur.trailing_zeros() as usize;
                cur &= cur - 1;
                let mut next = adj[v] & !(mask as u32);
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    ends[mask | (1 << w)] |= 1 << w;
                }
            }
        }
        Ok(HamiltonianTable { adj, ends })
    }

    pub fn ends(&self, mask: u32) -> u32 {
        self.ends[mask as usize]
    }

    pub fn has_path(&self, mask: u32) -> bool {
        mask == 0 || self.ends(mask) != 0
    }

    /// A Hamiltonian path of the subgraph induced on `mask`, ending at its
    /// smallest possible end vertex.
    pub fn path(&self, mask: u32) -> Option<Vec<usize>> {
        if mask == 0 {
            return Some(Vec::new());
        }
        let mut end = self.ends(mask);
        if end == 0 {
            return None;
        }
        let mut rest = mask;
        let mut out = Vec::new();
        loop {
            let v = end.trailing_zeros() as usize;
            out.push(v);
            rest &= !(1 << v);
            if rest == 0 {
                break;
            }
            end = self.ends(rest) & self.adj[v];
            debug_assert!(end != 0, "table is consistent");
        }
        out.reverse();
        Some(out)
    }
}

/// A Hamiltonian path certificate, or `None` when the graph has none.
pub fn hamiltonian_path_exists(g: &Graph) -> Result<Option<Certificate>> {
    let table = HamiltonianTable::new(g)?;
    let full = ((1u64 << g.n()) - 1) as u32;
    Ok(table
        .path(full)
        .map(|p| Certificate::new(CertificateKind::HamiltonianPath, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{certify, Pattern};

    #[test]
    fn paths_claws_nets() {
        let p5 = hamiltonian_path_exists(&Graph::path(5)).unwrap().unwrap();
        assert!(certify(&Graph::path(5), &p5));
        assert!(hamiltonian_path_exists(&Graph::star(3)).unwrap().is_none());
        assert!(hamiltonian_path_exists(&Pattern::Net.graph())
            .unwrap()
            .is_none());
        assert!(hamiltonian_path_exists(&Graph::empty(0)).unwrap().is_some());
    }

    #[test]
    fn over_cap_is_a_capacity_error() {
        let g = Graph::path(25);
        assert!(matches!(
            hamiltonian_path_exists(&g),
            Err(Error::Capacity { .. })
        ));
    }
}
