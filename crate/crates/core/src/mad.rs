//! Exact maximum average degree.
//!
//! `mad(G)` is the maximum of `2|E(H)| / |V(H)|` over non-empty induced
//! subgraphs. The densities are rationals with denominator at most `|V|`,
//! and two distinct ones differ by more than `1/|V|^2`, so an integer binary
//! search over thresholds `k / |V|^2`, each decided by a max-flow densest
//! subgraph test with integer capacities, pins the exact value and a witness.
//! No floating point is involved anywhere.

use crate::graph::{GraphError, SimpleGraph};
use std::collections::VecDeque;

/// An exact maximum average degree with its witness vertex set.
///
/// `numerator / denominator` equals `2|E(H)| / |V(H)|` for the witness `H`,
/// stored unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Density {
    pub numerator: u64,
    pub denominator: u64,
    pub witness: Vec<usize>,
}

impl Density {
    /// Exact comparison against the rational `num/den`.
    pub fn less_than(&self, num: u64, den: u64) -> bool {
        (self.numerator as u128) * (den as u128) < (num as u128) * (self.denominator as u128)
    }

    pub fn equals(&self, num: u64, den: u64) -> bool {
        (self.numerator as u128) * (den as u128) == (num as u128) * (self.denominator as u128)
    }
}

impl std::fmt::Display for Density {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g = gcd(self.numerator.max(1), self.denominator);
        let (p, q) = (self.numerator / g, self.denominator / g);
        if q == 1 {
            write!(f, "{p}")
        } else {
            write!(f, "{p}/{q}")
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone)]
struct FlowEdge {
    to: usize,
    cap: i64,
    rev: usize,
}

struct Dinic {
    graph: Vec<Vec<FlowEdge>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            graph: vec![Vec::new(); n],
            level: vec![-1; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let rev_to = self.graph[to].len();
        let rev_from = self.graph[from].len();
        self.graph[from].push(FlowEdge {
            to,
            cap,
            rev: rev_to,
        });
        self.graph[to].push(FlowEdge {
            to: from,
            cap: 0,
            rev: rev_from,
        });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for e in &self.graph[v] {
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.graph[v].len() {
            let i = self.iter[v];
            let (to, cap, rev) = {
                let e = &self.graph[v][i];
                (e.to, e.cap, e.rev)
            };
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let d = self.dfs(to, t, f.min(cap));
                if d > 0 {
                    self.graph[v][i].cap -= d;
                    self.graph[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Vertices reachable from `s` in the residual graph (the canonical
    /// inclusion-minimal source side of a minimum cut).
    fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.graph.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for e in &self.graph[v] {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    stack.push(e.to);
                }
            }
        }
        seen
    }
}

/// Does some non-empty `H` satisfy `2 * scale * |E(H)| > k * |V(H)|`?
/// On success returns the witness vertex set.
fn denser_than(g: &SimpleGraph, scale: u64, k: u64) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let alpha = 2 * scale as i64;
    let total = alpha * m as i64;
    // source -> edge node (alpha), edge node -> endpoints (inf), vertex -> sink (k)
    let mut net = Dinic::new(2 + m + n);
    let (source, sink) = (0, 1);
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + m + v;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        net.add_edge(source, edge_node(i), alpha);
        net.add_edge(edge_node(i), vertex_node(u), total + 1);
        net.add_edge(edge_node(i), vertex_node(v), total + 1);
    }
    for v in 0..n {
        net.add_edge(vertex_node(v), sink, k as i64);
    }
    let flow = net.max_flow(source, sink);
    if flow >= total {
        return None;
    }
    let side = net.source_side(source);
    let witness: Vec<usize> = (0..n).filter(|&v| side[vertex_node(v)]).collect();
    debug_assert!(!witness.is_empty());
    Some(witness)
}

fn induced_edge_count(g: &SimpleGraph, verts: &[usize]) -> usize {
    let mut inside = vec![false; g.vertex_count()];
    for &v in verts {
        inside[v] = true;
    }
    g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] && inside[v])
        .count()
}

/// Exact maximum average degree with a maximizing witness.
pub fn mad(g: &SimpleGraph) -> Result<Density, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(Density {
            numerator: 0,
            denominator: 1,
            witness: vec![0],
        });
    }
    // Thresholds k / n^2: distinct achievable densities are farther apart
    // than 1/n^2, so the largest feasible k isolates the maximum.
    let scale = (n as u64) * (n as u64);
    let mut lo = 0u64; // feasible: some subgraph has positive density
    let mut hi = scale * (n as u64); // infeasible: density never exceeds n - 1
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if denser_than(g, scale, mid).is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let witness = denser_than(g, scale, lo).expect("threshold lo is feasible");
    let e = induced_edge_count(g, &witness) as u64;
    let v = witness.len() as u64;
    debug_assert!((2 * e as u128) * (scale as u128) > (lo as u128) * (v as u128));
    Ok(Density {
        numerator: 2 * e,
        denominator: v,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::build_graph;

    #[test]
    fn complete_graph_is_regular() {
        let g = build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = mad(&g).unwrap();
        assert!(d.equals(3, 1));
        assert_eq!(d.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn star_density() {
        let g = families::star(4).unwrap();
        let d = mad(&g).unwrap();
        assert!(d.equals(8, 5));
    }

    #[test]
    fn caterpillar_cycle_is_two() {
        let g = families::caterpillar_cycle(6, 4).unwrap();
        let d = mad(&g).unwrap();
        assert!(d.equals(2, 1));
        // strictly below the coloring threshold 2 + 1/(3*4 - 2)
        assert!(d.less_than(21, 10));
        // regularity bound: mad of the whole graph is at least the average
        assert!(!d.less_than(
            2 * g.edge_count() as u64,
            g.vertex_count() as u64
        ));
    }

    #[test]
    fn flow_method_matches_exhaustive_on_small_caterpillar_piece() {
        // a 6-cycle spine with two pendants: small enough to enumerate
        let g = build_graph(&[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (0, 5),
            (0, 6),
            (3, 7),
        ])
        .unwrap();
        let d = mad(&g).unwrap();
        let mut best = (0u64, 1u64);
        for mask in 1u16..(1 << 8) {
            let e = g
                .edges()
                .iter()
                .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .count() as u64;
            let v = mask.count_ones() as u64;
            if (2 * e) as u128 * (best.1 as u128) > (best.0 as u128) * (v as u128) {
                best = (2 * e, v);
            }
        }
        assert!(d.equals(best.0, best.1));
        assert!(d.equals(2, 1));
    }

    #[test]
    fn edgeless_graph() {
        let g = SimpleGraph::new(3);
        let d = mad(&g).unwrap();
        assert!(d.equals(0, 1));
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert!(mad(&SimpleGraph::new(0)).is_err());
    }

    #[test]
    fn dense_core_beats_sparse_whole() {
        // K4 with a pendant tail: the witness is the K4, not the whole graph.
        let g = build_graph(&[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
        ])
        .unwrap();
        let d = mad(&g).unwrap();
        assert!(d.equals(3, 1));
        assert_eq!(d.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn trees_hanging_off_a_cycle_keep_density_two() {
        let g = build_graph(&[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let d = mad(&g).unwrap();
        assert!(d.equals(2, 1));
    }

    #[test]
    fn display_reduces() {
        let d = Density {
            numerator: 36,
            denominator: 18,
            witness: vec![],
        };
        assert_eq!(d.to_string(), "2");
        let d = Density {
            numerator: 8,
            denominator: 5,
            witness: vec![],
        };
        assert_eq!(d.to_string(), "8/5");
    }
}
