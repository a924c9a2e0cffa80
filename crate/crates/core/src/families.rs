//! Named graph generators used by the coloring algorithms and their tests.

use crate::graph::{GraphError, SimpleGraph};

/// A generator request; see the individual constructor functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Cycle(usize),
    Star(usize),
    Path(usize),
    Petersen,
    /// Cycle length and maximum degree of `C_{kappa, delta}`.
    CaterpillarCycle(usize, usize),
    /// Internal spine length and maximum degree.
    CaterpillarPath(usize, usize),
}

pub fn generate(family: GraphFamily) -> Result<SimpleGraph, GraphError> {
    match family {
        GraphFamily::Cycle(k) => cycle(k),
        GraphFamily::Star(d) => star(d),
        GraphFamily::Path(m) => path(m),
        GraphFamily::Petersen => Ok(petersen()),
        GraphFamily::CaterpillarCycle(k, d) => caterpillar_cycle(k, d),
        GraphFamily::CaterpillarPath(l, d) => caterpillar_path(l, d),
    }
}

/// The cycle `C_k`, `k >= 3`.
pub fn cycle(k: usize) -> Result<SimpleGraph, GraphError> {
    if k < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle length must be at least 3, got {k}"
        )));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    SimpleGraph::from_edges(k, &edges)
}

/// The star `K_{1,d}` with center 0, `d >= 1`.
pub fn star(d: usize) -> Result<SimpleGraph, GraphError> {
    if d < 1 {
        return Err(GraphError::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    let edges: Vec<_> = (1..=d).map(|i| (0, i)).collect();
    SimpleGraph::from_edges(d + 1, &edges)
}

/// The path with `m` edges (`m + 1` vertices), `m >= 1`.
pub fn path(m: usize) -> Result<SimpleGraph, GraphError> {
    if m < 1 {
        return Err(GraphError::InvalidParameter(
            "path needs at least one edge".into(),
        ));
    }
    let edges: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
    SimpleGraph::from_edges(m + 1, &edges)
}

/// The Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9, spokes.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    SimpleGraph::from_edges(10, &edges).expect("petersen is simple")
}

/// `C_{kappa, delta}`: the cycle `C_kappa` with `delta - 2` pendant edges on
/// each cycle vertex, so every spine vertex has degree `delta`.
///
/// Vertices `0..kappa` are the cycle; pendant `j` of spine vertex `i` is
/// `kappa + i * (delta - 2) + j`.
pub fn caterpillar_cycle(kappa: usize, delta: usize) -> Result<SimpleGraph, GraphError> {
    if kappa < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle length must be at least 3, got {kappa}"
        )));
    }
    if delta < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "maximum degree must be at least 2, got {delta}"
        )));
    }
    let p = delta - 2;
    let mut edges = Vec::with_capacity(kappa * (delta - 1));
    for i in 0..kappa {
        edges.push((i, (i + 1) % kappa));
        for j in 0..p {
            edges.push((i, kappa + i * p + j));
        }
    }
    SimpleGraph::from_edges(kappa * (delta - 1), &edges)
}

/// A caterpillar whose spine is a path `u_0 .. u_{ell+1}` and whose `ell`
/// internal vertices each carry `delta - 2` pendant edges.
pub fn caterpillar_path(ell: usize, delta: usize) -> Result<SimpleGraph, GraphError> {
    if ell < 1 {
        return Err(GraphError::InvalidParameter(
            "spine needs at least one internal vertex".into(),
        ));
    }
    if delta < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "maximum degree must be at least 2, got {delta}"
        )));
    }
    let p = delta - 2;
    let spine = ell + 2;
    let mut edges = Vec::new();
    for i in 0..ell + 1 {
        edges.push((i, i + 1));
    }
    for i in 1..=ell {
        for j in 0..p {
            edges.push((i, spine + (i - 1) * p + j));
        }
    }
    SimpleGraph::from_edges(spine + ell * p, &edges)
}
