use crate::caps::caps;
use crate::error::{Error, Result};
use crate::graphs::{Graph, HamiltonianTable};

fn connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = mask & mask.wrapping_neg();
    loop {
        let mut grow = seen;
        let mut cur = seen;
        while cur != 0 {
            let v = cur.trailing_zeros() as usize;
            cur &= cur - 1;
            grow |= adj[v] & mask;
        }
        if grow == seen {
            return seen == mask;
        }
        seen = grow;
    }
}

/// A vertex set inducing a connected subgraph without a Hamiltonian path,
/// smallest mask first, or `None` when the graph is Hamiltonian-hereditary.
pub fn hamiltonian_hereditary_violation(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    let cap = caps().hereditary;
    if n > cap {
        return Err(Error::Capacity {
            what: "Hamiltonian-hereditary enumeration",
            n,
            cap,
        });
    }
    let table = HamiltonianTable::new(g)?;
    let adj = g.masks();
    for mask in 1u64..(1 << n) {
        if connected(&adj, mask) && !table.has_path(mask as u32) {
            return Ok(Some((0..n).filter(|v| mask >> v & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// Every connected induced subgraph has a Hamiltonian path.
pub fn is_hamiltonian_hereditary(g: &Graph) -> Result<bool> {
    Ok(hamiltonian_hereditary_violation(g)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Pattern;

    #[test]
    fn examples() {
        assert!(is_hamiltonian_hereditary(&Graph::path(4)).unwrap());
        assert!(!is_hamiltonian_hereditary(&Graph::star(3)).unwrap());
        assert!(is_hamiltonian_hereditary(&Graph::cycle(5)).unwrap());
        assert_eq!(
            hamiltonian_hereditary_violation(&Pattern::Net.graph()).unwrap(),
            Some((0..6).collect())
        );
        assert!(matches!(
            is_hamiltonian_hereditary(&Graph::path(13)),
            Err(Error::Capacity { .. })
        ));
    }
}
