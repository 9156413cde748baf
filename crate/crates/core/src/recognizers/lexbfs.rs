//! Lexicographic breadth-first search.

use crate::graphs::Graph;

/// LexBFS visit order. Ties between equal labels go to the smallest index,
/// or, given a previous order (LexBFS+), to the vertex appearing last in it.
pub fn lexbfs(g: &Graph, previous: Option<&[usize]>) -> Vec<usize> {
    let n = g.n();
    let rank: Vec<usize> = match previous {
        Some(order) => {
            let mut r = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                r[v] = i;
            }
            r
        }
        None => (0..n).map(|v| n - v).collect(),
    };
    // Partition refinement: an ordered list of cells, highest label first.
    let mut cells: Vec<Vec<usize>> = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    let mut order = Vec::with_capacity(n);
    while let Some(first) = cells.first_mut() {
        let pick_at = (0..first.len())
            .max_by_key(|&i| rank[first[i]])
            .expect("cells are non-empty");
        let v = first.swap_remove(pick_at);
        if first.is_empty() {
            cells.remove(0);
        }
        order.push(v);
        let mut refined = Vec::with_capacity(cells.len() * 2);
        for cell in cells.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) =
                cell.into_iter().partition(|&w| g.has_edge(v, w));
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        cells = refined;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn visits_every_vertex_once() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let mut o = lexbfs(&g, None);
        assert_eq!(o[0], 0);
        o.sort_unstable();
        assert_eq!(o, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn neighbours_of_earlier_vertices_come_first() {
        // Path 0-1-2-3: starting at 0 forces the path order.
        assert_eq!(lexbfs(&Graph::path(4), None), vec![0, 1, 2, 3]);
        // LexBFS+ from that order starts at the last vertex.
        assert_eq!(
            lexbfs(&Graph::path(4), Some(&[0, 1, 2, 3])),
            vec![3, 2, 1, 0]
        );
    }
}
