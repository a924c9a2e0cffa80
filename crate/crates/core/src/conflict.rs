//! The conflict graph: one vertex per edge, adjacency between edges that
//! must receive distinct colors in a strong edge coloring (edges sharing an
//! endpoint, or joined by a third edge). A strong K-edge-coloring of `g` is
//! exactly a proper K-vertex-coloring of `conflict_graph(g)`.

use crate::graph::SimpleGraph;

fn edges_conflict(g: &SimpleGraph, e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = e;
    let (c, d) = f;
    if a == c || a == d || b == c || b == d {
        return true;
    }
    g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
}

/// All conflicting edge-id pairs `(i, j)` with `i < j`.
pub fn conflicting_pairs(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges_conflict(g, edges[i], edges[j]) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// The conflict graph of `g`, on vertex set `0..g.edge_count()`.
pub fn conflict_graph(g: &SimpleGraph) -> SimpleGraph {
    let pairs = conflicting_pairs(g);
    SimpleGraph::from_edges(g.edge_count(), &pairs).expect("conflict pairs are simple")
}

/// Per-edge conflict adjacency lists, sorted.
pub fn conflict_lists(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut lists = vec![Vec::new(); g.edge_count()];
    for (i, j) in conflicting_pairs(g) {
        lists[i].push(j);
        lists[j].push(i);
    }
    lists
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn three_edge_path_gives_triangle() {
        let g = families::path(3).unwrap();
        let c = conflict_graph(&g);
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.edge_count(), 3);
    }

    #[test]
    fn five_cycle_gives_complete_graph() {
        let g = families::cycle(5).unwrap();
        let c = conflict_graph(&g);
        assert_eq!(c.edge_count(), 10);
    }

    #[test]
    fn six_cycle_spares_opposite_edges() {
        let g = families::cycle(6).unwrap();
        let c = conflict_graph(&g);
        assert_eq!(c.vertex_count(), 6);
        assert!((0..6).all(|v| c.degree(v) == 4));
    }
}
