//! Finite simple undirected graphs with dense 0-based vertex ids.
//!
//! Edges are stored sorted, so the index of an edge in [`SimpleGraph::edges`]
//! is a stable id used by colorings and the conflict graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simple graph: no loops, no parallel edges, vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph on `n` vertices from an edge list, rejecting loops,
    /// duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SimpleGraph {
            adj,
            edges: normalized,
        })
    }

    /// Builds a graph from an edge list alone; the vertex count is the
    /// largest id plus one.
    pub fn from_edge_list(edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = edges
            .iter()
            .map(|&(a, b)| a.max(b) + 1)
            .max()
            .unwrap_or(0);
        Self::from_edges(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically with `u < v`; the slice index is the edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge_id: usize) -> (usize, usize) {
        self.edges[edge_id]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// The id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `keep` (sorted, deduplicated internally).
    /// Returns the subgraph with compacted ids and the new-to-old id map.
    pub fn induced(&self, keep: &[usize]) -> (SimpleGraph, Vec<usize>) {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut old_to_new = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in kept.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if old_to_new[u] != usize::MAX && old_to_new[v] != usize::MAX {
                edges.push((old_to_new[u], old_to_new[v]));
            }
        }
        let g = SimpleGraph::from_edges(kept.len(), &edges).expect("induced subgraph is simple");
        (g, kept)
    }
}

/// Builds a simple graph from an edge list; loops and duplicates are errors.
pub fn build_graph(edge_list: &[(usize, usize)]) -> Result<SimpleGraph, GraphError> {
    SimpleGraph::from_edge_list(edge_list)
}

/// Result of removing the degree-one vertices of a graph in a single pass.
#[derive(Debug, Clone)]
pub struct PeelResult {
    /// The peeled graph with compacted vertex ids.
    pub graph: SimpleGraph,
    /// Map from peeled-graph vertex id to original vertex id.
    pub kept: Vec<usize>,
    /// For each original vertex, its removed degree-one neighbors.
    /// Every removed vertex appears exactly once, as its unique neighbor's pendant.
    pub pendants: BTreeMap<usize, Vec<usize>>,
}

/// Removes all vertices of degree one (a single pass, not iterated).
pub fn peel_pendants(g: &SimpleGraph) -> PeelResult {
    let n = g.vertex_count();
    let mut pendants: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut keep = Vec::new();
    for v in 0..n {
        if g.degree(v) == 1 {
            pendants.entry(g.neighbors(v)[0]).or_default().push(v);
        } else {
            keep.push(v);
        }
    }
    let (graph, kept) = g.induced(&keep);
    PeelResult {
        graph,
        kept,
        pendants,
    }
}

/// Parses the graph text format: a `graph <n> <m>` header followed by `m`
/// lines `e <u> <v>`. Blank lines and `#` comments are ignored.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let tag = it.next().unwrap();
        let parse_usize = |tok: Option<&str>, what: &str| -> Result<usize, GraphError> {
            tok.ok_or_else(|| GraphError::Parse {
                line: idx + 1,
                message: format!("missing {what}"),
            })?
            .parse()
            .map_err(|_| GraphError::Parse {
                line: idx + 1,
                message: format!("malformed {what}"),
            })
        };
        match tag {
            "graph" => {
                if header.is_some() {
                    return Err(GraphError::Parse {
                        line: idx + 1,
                        message: "duplicate graph header".into(),
                    });
                }
                let n = parse_usize(it.next(), "vertex count")?;
                let m = parse_usize(it.next(), "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(GraphError::Parse {
                        line: idx + 1,
                        message: "edge before graph header".into(),
                    });
                }
                let u = parse_usize(it.next(), "edge endpoint")?;
                let v = parse_usize(it.next(), "edge endpoint")?;
                edges.push((u, v));
            }
            other => {
                return Err(GraphError::Parse {
                    line: idx + 1,
                    message: format!("unknown line tag `{other}`"),
                });
            }
        }
        if it.next().is_some() {
            return Err(GraphError::Parse {
                line: idx + 1,
                message: "trailing tokens".into(),
            });
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        line: 0,
        message: "missing graph header".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    SimpleGraph::from_edges(n, &edges)
}

/// Writes the graph text format; inverse of [`parse_graph`].
pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}
