//! Exact dynamic-programming oracle for special walks.
//!
//! States are directed edges of the materialized odd graph; a transition
//! from `u -> v` to `v -> w` is allowed unless `w == u` (that would repeat
//! the edge). Layered reachability over exactly `length` steps decides any
//! boundary-label request, and reconstruction walks the layers backwards
//! choosing the least predecessor, so results are deterministic.

use super::walks::{WalkMode, WalkRequest};
use super::{edge_label, odd_graph, Element, OddGraph, SpecialWalk, SubsetVertex, WalkError};

/// Hard cap on dp walk lengths; layers are stored for reconstruction.
const MAX_DP_LENGTH: usize = 10_000;

struct DirectedEdges<'a> {
    og: &'a OddGraph,
}

impl<'a> DirectedEdges<'a> {
    fn new(og: &'a OddGraph) -> Self {
        DirectedEdges { og }
    }

    fn count(&self) -> usize {
        self.og.graph().vertex_count() * self.og.n()
    }

    /// Directed edge id for `u -> v`: `u` is dense, `v` is ranked among the
    /// `n` sorted neighbors of `u`.
    fn id(&self, u: usize, v: usize) -> usize {
        let rank = self
            .og
            .graph()
            .neighbors(u)
            .binary_search(&v)
            .expect("v adjacent to u");
        u * self.og.n() + rank
    }

    fn pair(&self, id: usize) -> (usize, usize) {
        let u = id / self.og.n();
        let v = self.og.graph().neighbors(u)[id % self.og.n()];
        (u, v)
    }
}

struct Layers {
    blocks: usize,
    bits: Vec<Vec<u64>>,
}

impl Layers {
    fn new(states: usize) -> Self {
        Layers {
            blocks: states.div_ceil(64),
            bits: Vec::new(),
        }
    }

    fn push_empty(&mut self) -> &mut Vec<u64> {
        self.bits.push(vec![0u64; self.blocks]);
        self.bits.last_mut().unwrap()
    }

    fn get(&self, layer: usize, state: usize) -> bool {
        (self.bits[layer][state / 64] >> (state % 64)) & 1 == 1
    }

    fn set(layer: &mut [u64], state: usize) {
        layer[state / 64] |= 1 << (state % 64);
    }
}

/// All directed-edge start states admissible for the request's first edge.
fn start_states(og: &OddGraph, de: &DirectedEdges, req: &WalkRequest) -> Vec<usize> {
    let sid = og.id_of(&req.start);
    let mut out = Vec::new();
    for &v in og.graph().neighbors(sid) {
        let lab = edge_label(&req.start, &og.subset(v)).expect("adjacent");
        let ok = match req.mode {
            WalkMode::Prescribed => lab == req.first_label,
            WalkMode::Avoiding => lab != req.first_label,
        };
        if ok {
            out.push(de.id(sid, v));
        }
    }
    out
}

fn end_state_ok(og: &OddGraph, de: &DirectedEdges, req: &WalkRequest, state: usize) -> bool {
    let (u, v) = de.pair(state);
    if og.subset(v) != req.end {
        return false;
    }
    let lab = edge_label(&og.subset(u), &req.end).expect("adjacent");
    match req.mode {
        WalkMode::Prescribed => lab == req.last_label,
        WalkMode::Avoiding => lab != req.last_label,
    }
}

/// Runs the layered reachability and reconstructs a walk hitting any
/// accepted final state, or `None` if no walk meets the request.
fn search(
    og: &OddGraph,
    starts: &[usize],
    length: usize,
    accept: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let de = DirectedEdges::new(og);
    let states = de.count();
    let mut layers = Layers::new(states);
    {
        let first = layers.push_empty();
        for &s in starts {
            Layers::set(first, s);
        }
    }
    for _ in 1..length {
        let prev = layers.bits.last().unwrap().clone();
        let next = layers.push_empty();
        for state in 0..states {
            if (prev[state / 64] >> (state % 64)) & 1 == 0 {
                continue;
            }
            let (u, v) = de.pair(state);
            for &w in og.graph().neighbors(v) {
                if w != u {
                    Layers::set(next, de.id(v, w));
                }
            }
        }
    }
    // Least accepted final state, then least predecessors backwards.
    let last = length - 1;
    let goal = (0..states).find(|&s| layers.get(last, s) && accept(s))?;
    let mut rev_states = vec![goal];
    let mut cur = goal;
    for layer in (0..last).rev() {
        let (u, v) = de.pair(cur);
        // A predecessor of u -> v is any reachable p -> u with p != v.
        let pred = og
            .graph()
            .neighbors(u)
            .iter()
            .filter(|&&p| p != v && layers.get(layer, de.id(p, u)))
            .map(|&p| de.id(p, u))
            .min()
            .expect("reachable state has a reachable predecessor");
        rev_states.push(pred);
        cur = pred;
    }
    rev_states.reverse();
    Some(rev_states)
}

fn states_to_walk(og: &OddGraph, states: &[usize], closed: bool) -> Result<SpecialWalk, WalkError> {
    let de = DirectedEdges::new(og);
    let mut vertices: Vec<SubsetVertex> = Vec::with_capacity(states.len() + 1);
    let (u0, v0) = de.pair(states[0]);
    vertices.push(og.subset(u0));
    vertices.push(og.subset(v0));
    for &s in &states[1..] {
        let (u, v) = de.pair(s);
        debug_assert_eq!(og.subset(u), *vertices.last().unwrap());
        vertices.push(og.subset(v));
    }
    let labels: Vec<Element> = (0..vertices.len() - 1)
        .map(|i| edge_label(&vertices[i], &vertices[i + 1]).expect("adjacent"))
        .collect();
    SpecialWalk::from_parts(vertices, labels, closed)
}

/// Decides the request exactly and reconstructs a witness walk.
pub fn dp_special_walk(og: &OddGraph, req: &WalkRequest) -> Result<Option<SpecialWalk>, WalkError> {
    req.validate()?;
    if req.n != og.n() {
        return Err(WalkError::MixedParameters);
    }
    if req.length > MAX_DP_LENGTH {
        return Err(WalkError::InvalidParameter(format!(
            "dp length capped at {MAX_DP_LENGTH}"
        )));
    }
    let de = DirectedEdges::new(og);
    let starts = start_states(og, &de, req);
    if starts.is_empty() {
        return Ok(None);
    }
    let states = search(og, &starts, req.length, |s| end_state_ok(og, &de, req, s));
    match states {
        None => Ok(None),
        Some(states) => Ok(Some(states_to_walk(og, &states, false)?)),
    }
}

/// A closed special walk of length `length` through `w`, cyclically
/// non-backtracking (the wrap pair of edges is also distinct). Requires
/// `length` even and at least 6, or odd and at least `2n - 1`.
pub fn closed_special_walk(
    og: &OddGraph,
    w: &SubsetVertex,
    length: usize,
) -> Result<SpecialWalk, WalkError> {
    let n = og.n();
    if w.n() != n {
        return Err(WalkError::MixedParameters);
    }
    let minimum = if length.is_multiple_of(2) { 6 } else { 2 * n - 1 };
    if length < minimum {
        return Err(WalkError::LengthBelowThreshold { length, minimum });
    }
    let de = DirectedEdges::new(og);
    let wid = og.id_of(w);
    for &v in og.graph().neighbors(wid) {
        let first = de.id(wid, v);
        let found = search(og, &[first], length, |s| {
            let (x, y) = de.pair(s);
            y == wid && x != v
        });
        if let Some(states) = found {
            return states_to_walk(og, &states, true);
        }
    }
    Err(WalkError::NoSuchWalk)
}

/// Convenience wrapper that materializes `O_n` for a single query.
pub fn dp_special_walk_fresh(req: &WalkRequest) -> Result<Option<SpecialWalk>, WalkError> {
    let og = odd_graph(req.n)?;
    dp_special_walk(&og, req)
}
