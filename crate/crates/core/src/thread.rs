//! Threads: paths whose internal vertices have degree two in the host graph.

use crate::graph::SimpleGraph;

/// An `ell`-thread: a path `v_0 .. v_{ell+1}` whose `ell` internal vertices
/// have degree exactly two in the host graph. The endpoints may coincide
/// (the thread then wraps a cycle); internal vertices are pairwise distinct
/// and distinct from the endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    pub path: Vec<usize>,
}

impl Thread {
    /// Internal length `ell` (the path has `ell + 1` edges).
    pub fn ell(&self) -> usize {
        self.path.len() - 2
    }

    pub fn endpoints_coincide(&self) -> bool {
        self.path.first() == self.path.last()
    }
}

/// A thread of a peeled graph lifted back to the full graph: each internal
/// spine vertex carries the degree-one neighbors it lost to peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarSpine {
    pub spine: Vec<usize>,
    /// Pendant lists for the internal vertices `spine[1..=ell]`, in order.
    pub pendants: Vec<Vec<usize>>,
}

/// Finds the lexicographically least `ell`-thread of `g`, if any.
pub fn find_thread(g: &SimpleGraph, ell: usize) -> Option<Thread> {
    find_thread_with(g, ell, false)
}

/// As [`find_thread`], optionally insisting on distinct endpoints.
pub fn find_thread_with(g: &SimpleGraph, ell: usize, distinct_endpoints: bool) -> Option<Thread> {
    assert!(ell >= 1, "threads have at least one internal vertex");
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    for start in 0..n {
        let mut path = vec![start];
        on_path[start] = true;
        let found = extend_thread(g, ell, distinct_endpoints, &mut path, &mut on_path);
        on_path[start] = false;
        if found {
            return Some(Thread { path });
        }
    }
    None
}

fn extend_thread(
    g: &SimpleGraph,
    ell: usize,
    distinct_endpoints: bool,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    if path.len() == ell + 2 {
        return true;
    }
    let last = *path.last().unwrap();
    let pos = path.len(); // index the next vertex would take
    let closing = pos == ell + 1;
    for &w in g.neighbors(last) {
        if closing {
            // Final endpoint: any degree; may equal the start (length >= 3).
            let wraps = w == path[0];
            if on_path[w] && !wraps {
                continue;
            }
            if wraps && (distinct_endpoints || ell < 2) {
                continue;
            }
            path.push(w);
            return true;
        }
        // Internal vertex: degree exactly two, fresh.
        if on_path[w] || g.degree(w) != 2 {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend_thread(g, ell, distinct_endpoints, path, on_path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::{build_graph, peel_pendants};

    #[test]
    fn cycle_thread_wraps() {
        let g = families::cycle(7).unwrap();
        let t = find_thread(&g, 6).unwrap();
        assert_eq!(t.path, vec![0, 1, 2, 3, 4, 5, 6, 0]);
        assert!(t.endpoints_coincide());
    }

    #[test]
    fn cycle_has_threads_of_every_shorter_length() {
        let g = families::cycle(7).unwrap();
        for ell in 1..=6 {
            let t = find_thread(&g, ell).unwrap();
            assert_eq!(t.ell(), ell);
        }
    }

    #[test]
    fn caterpillar_spine_blocks_threads_until_peeled() {
        let g = families::caterpillar_cycle(6, 4).unwrap();
        assert!(find_thread(&g, 1).is_none());
        let peeled = peel_pendants(&g);
        let t = find_thread(&peeled.graph, 5).unwrap();
        assert_eq!(t.ell(), 5);
    }

    #[test]
    fn k4_has_no_threads() {
        let g = build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(find_thread(&g, 1).is_none());
        assert!(find_thread(&g, 3).is_none());
    }

    #[test]
    fn distinct_endpoint_search_skips_wrapping() {
        let g = families::cycle(5).unwrap();
        assert!(find_thread(&g, 4).is_some());
        assert!(find_thread_with(&g, 4, true).is_none());
        assert!(find_thread_with(&g, 3, true).is_some());
    }

    #[test]
    fn thread_internals_have_degree_two() {
        let g = families::path(6).unwrap();
        let t = find_thread(&g, 3).unwrap();
        for &v in &t.path[1..t.path.len() - 1] {
            assert_eq!(g.degree(v), 2);
        }
        assert_eq!(t.path, vec![0, 1, 2, 3, 4]);
    }
}
