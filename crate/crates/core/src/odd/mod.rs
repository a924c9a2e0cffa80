//! The odd graph `O_n` and its labeled special walks.
//!
//! Vertices of `O_n` are the `(n-1)`-element subsets of `{1, .., 2n-1}`;
//! two vertices are adjacent exactly when their subsets are disjoint. Every
//! edge then misses a unique ground element, which labels it. The `n` edges
//! at a vertex carry pairwise distinct labels, and the labeling as a whole
//! is a strong edge coloring of `O_n` with `2n - 1` colors — the property
//! the caterpillar extension machinery in [`crate::coloring`] runs on.
//!
//! A special walk is a walk in which consecutive edges are distinct
//! (non-backtracking). [`walks`] constructs special walks of prescribed
//! length and boundary labels; [`dp`] decides their existence independently
//! by dynamic programming over directed edges.

pub mod audit;
pub mod dp;
pub mod format;
pub mod walks;

use crate::graph::SimpleGraph;
use thiserror::Error;

pub use audit::{sharpness_audit, SharpnessCheck, SharpnessReport};
pub use dp::{closed_special_walk, dp_special_walk};
pub use format::{parse_walk, write_walk};
pub use walks::{construct_avoiding_walk, construct_prescribed_walk};

/// Largest supported odd-graph parameter for explicit materialization:
/// `O_7` has C(13,6) = 1716 vertices.
pub const MAX_N: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("odd graph parameter n must be in 3..={MAX_N}, got {0}")]
    UnsupportedN(usize),
    #[error("element {0} out of range for n={1}")]
    ElementOutOfRange(u8, usize),
    #[error("subset has {got} elements, expected {expected}")]
    WrongSubsetSize { got: usize, expected: usize },
    #[error("vertices are not adjacent (subsets intersect)")]
    NotAdjacent,
    #[error("label {0} lies in the current vertex set")]
    LabelInSet(u8),
    #[error("backtracking: labels at steps {0} and {1} coincide")]
    Backtrack(usize, usize),
    #[error("walk length {length} is below the constructive threshold {minimum}")]
    LengthBelowThreshold { length: usize, minimum: usize },
    #[error("input is not a path of four distinct pairwise-adjacent vertices")]
    NotAPath,
    #[error("mismatched odd graph parameters")]
    MixedParameters,
    #[error("no such walk exists")]
    NoSuchWalk,
    #[error("parameter out of the audited range: {0}")]
    OutOfAuditRange(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("walk parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal construction failure: {0}")]
    Internal(String),
}

/// Ground-set element of `O_n`, in `1..=2n-1`.
pub type Element = u8;

/// A vertex of `O_n`: an `(n-1)`-element subset of `{1, .., 2n-1}`,
/// stored as a bitmask with bit `e - 1` for element `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetVertex {
    n: u8,
    mask: u16,
}

impl SubsetVertex {
    pub fn new(n: usize, elements: &[Element]) -> Result<Self, WalkError> {
        check_n(n)?;
        let mut mask: u16 = 0;
        for &e in elements {
            if e == 0 || e as usize > 2 * n - 1 {
                return Err(WalkError::ElementOutOfRange(e, n));
            }
            mask |= 1 << (e - 1);
        }
        if mask.count_ones() as usize != n - 1 {
            return Err(WalkError::WrongSubsetSize {
                got: mask.count_ones() as usize,
                expected: n - 1,
            });
        }
        Ok(SubsetVertex { n: n as u8, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: u16) -> Self {
        debug_assert_eq!(mask.count_ones() as usize, n - 1);
        SubsetVertex { n: n as u8, mask }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub(crate) fn mask(&self) -> u16 {
        self.mask
    }

    pub fn contains(&self, e: Element) -> bool {
        e >= 1 && (self.mask >> (e - 1)) & 1 == 1
    }

    pub fn elements(&self) -> Vec<Element> {
        let top = 2 * self.n() - 1;
        (1..=top as Element).filter(|&e| self.contains(e)).collect()
    }

    fn ground_mask(&self) -> u16 {
        (1u16 << (2 * self.n() - 1)) - 1
    }

    pub fn is_disjoint(&self, other: &SubsetVertex) -> bool {
        self.n == other.n && self.mask & other.mask == 0
    }
}

impl std::fmt::Display for SubsetVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let els = self.elements();
        let strs: Vec<String> = els.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

fn check_n(n: usize) -> Result<(), WalkError> {
    if !(3..=MAX_N).contains(&n) {
        return Err(WalkError::UnsupportedN(n));
    }
    Ok(())
}

/// The label of edge `uv`: the unique ground element outside both subsets.
pub fn edge_label(u: &SubsetVertex, v: &SubsetVertex) -> Result<Element, WalkError> {
    if u.n != v.n {
        return Err(WalkError::MixedParameters);
    }
    if !u.is_disjoint(v) {
        return Err(WalkError::NotAdjacent);
    }
    let missing = u.ground_mask() & !(u.mask | v.mask);
    debug_assert_eq!(missing.count_ones(), 1);
    Ok(missing.trailing_zeros() as Element + 1)
}

/// The unique neighbor of `w` across its `label`-edge:
/// the complement of `[w] ∪ {label}`.
pub fn neighbor_via_label(w: &SubsetVertex, label: Element) -> Result<SubsetVertex, WalkError> {
    if label == 0 || label as usize > 2 * w.n() - 1 {
        return Err(WalkError::ElementOutOfRange(label, w.n()));
    }
    if w.contains(label) {
        return Err(WalkError::LabelInSet(label));
    }
    let mask = w.ground_mask() & !(w.mask | (1 << (label - 1)));
    Ok(SubsetVertex::from_mask(w.n(), mask))
}

/// The canonical partition of the ground set relative to an ordered vertex
/// pair: shared elements, start-only, end-only, and the rest. Each class is
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClasses {
    pub shared: Vec<Element>,
    pub start_only: Vec<Element>,
    pub end_only: Vec<Element>,
    pub outside: Vec<Element>,
}

impl PairClasses {
    /// Size of the shared class.
    pub fn k(&self) -> usize {
        self.shared.len()
    }
}

pub fn classify_pair(start: &SubsetVertex, end: &SubsetVertex) -> Result<PairClasses, WalkError> {
    if start.n != end.n {
        return Err(WalkError::MixedParameters);
    }
    let top = 2 * start.n() - 1;
    let mut classes = PairClasses {
        shared: Vec::new(),
        start_only: Vec::new(),
        end_only: Vec::new(),
        outside: Vec::new(),
    };
    for e in 1..=top as Element {
        match (start.contains(e), end.contains(e)) {
            (true, true) => classes.shared.push(e),
            (true, false) => classes.start_only.push(e),
            (false, true) => classes.end_only.push(e),
            (false, false) => classes.outside.push(e),
        }
    }
    Ok(classes)
}

/// Length of a shortest even-length path between `u` and `v`:
/// twice the number of elements of `[u]` missing from `[v]`.
pub fn shortest_even_distance(u: &SubsetVertex, v: &SubsetVertex) -> Result<usize, WalkError> {
    if u.n != v.n {
        return Err(WalkError::MixedParameters);
    }
    Ok(2 * (u.mask & !v.mask).count_ones() as usize)
}

/// A non-backtracking walk in `O_n` together with its derived label sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialWalk {
    vertices: Vec<SubsetVertex>,
    labels: Vec<Element>,
    closed: bool,
}

impl SpecialWalk {
    pub fn n(&self) -> usize {
        self.vertices[0].n()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> &[SubsetVertex] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Element] {
        &self.labels
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn start(&self) -> SubsetVertex {
        self.vertices[0]
    }

    pub fn end(&self) -> SubsetVertex {
        *self.vertices.last().unwrap()
    }

    pub fn first_label(&self) -> Element {
        self.labels[0]
    }

    pub fn last_label(&self) -> Element {
        *self.labels.last().unwrap()
    }

    pub(crate) fn from_parts(
        vertices: Vec<SubsetVertex>,
        labels: Vec<Element>,
        closed: bool,
    ) -> Result<Self, WalkError> {
        let walk = SpecialWalk {
            vertices,
            labels,
            closed,
        };
        walk.validate()?;
        Ok(walk)
    }

    /// The same walk traversed backwards.
    pub fn reversed(&self) -> SpecialWalk {
        let mut vertices = self.vertices.clone();
        let mut labels = self.labels.clone();
        vertices.reverse();
        labels.reverse();
        SpecialWalk {
            vertices,
            labels,
            closed: self.closed,
        }
    }

    /// Checks every structural invariant: consecutive adjacency, the stored
    /// labels, non-backtracking (cyclically so when closed), and the
    /// two-step replacement law `[w_{i+2}] = ([w_i] \ {second}) ∪ {first}`.
    pub fn validate(&self) -> Result<(), WalkError> {
        if self.vertices.len() != self.labels.len() + 1 || self.labels.is_empty() {
            return Err(WalkError::InvalidParameter(
                "walk needs one more vertex than labels".into(),
            ));
        }
        for w in &self.vertices {
            if w.n != self.vertices[0].n {
                return Err(WalkError::MixedParameters);
            }
        }
        for i in 0..self.labels.len() {
            let lab = edge_label(&self.vertices[i], &self.vertices[i + 1])?;
            if lab != self.labels[i] {
                return Err(WalkError::Internal(format!(
                    "stored label {} differs from edge label {lab} at step {i}",
                    self.labels[i]
                )));
            }
        }
        for i in 0..self.labels.len().saturating_sub(1) {
            if self.labels[i] == self.labels[i + 1] {
                return Err(WalkError::Backtrack(i, i + 1));
            }
            let first = self.labels[i];
            let second = self.labels[i + 1];
            let expect = (self.vertices[i].mask & !(1 << (second - 1))) | (1 << (first - 1));
            if self.vertices[i + 2].mask != expect {
                return Err(WalkError::Internal(format!(
                    "replacement law fails at step {i}"
                )));
            }
        }
        if self.closed {
            if self.vertices[0] != *self.vertices.last().unwrap() {
                return Err(WalkError::InvalidParameter(
                    "closed walk must return to its start".into(),
                ));
            }
            if self.labels.len() < 2 || self.first_label() == self.last_label() {
                return Err(WalkError::Backtrack(self.labels.len() - 1, 0));
            }
        }
        Ok(())
    }
}

/// Builds the walk starting at `start` and following `labels` through the
/// unique labeled edges, validating the special-walk invariants.
pub fn walk_from_labels(start: &SubsetVertex, labels: &[Element]) -> Result<SpecialWalk, WalkError> {
    if labels.is_empty() {
        return Err(WalkError::InvalidParameter("no labels given".into()));
    }
    let mut vertices = vec![*start];
    for (i, &lab) in labels.iter().enumerate() {
        if i > 0 && labels[i - 1] == lab {
            return Err(WalkError::Backtrack(i - 1, i));
        }
        let next = neighbor_via_label(vertices.last().unwrap(), lab)?;
        vertices.push(next);
    }
    SpecialWalk::from_parts(vertices, labels.to_vec(), false)
}

/// Extends any 3-path `v1 v2 v3 v4` to a 6-cycle through it. `v1` and `v3`
/// differ in one element; with `[v1] = X ∪ {x1}`, `[v3] = X ∪ {x2}` and the
/// third edge labeled `x3`, the cycle closes through `X ∪ {x3}` and the
/// complement of `X ∪ {x1, x3}`.
pub fn six_cycle_through(path: &[SubsetVertex]) -> Result<SpecialWalk, WalkError> {
    if path.len() != 4 {
        return Err(WalkError::NotAPath);
    }
    for i in 0..3 {
        for j in i + 1..4 {
            if path[i] == path[j] {
                return Err(WalkError::NotAPath);
            }
        }
    }
    for i in 0..3 {
        if !path[i].is_disjoint(&path[i + 1]) {
            return Err(WalkError::NotAPath);
        }
    }
    let (v1, _v2, v3, v4) = (path[0], path[1], path[2], path[3]);
    let shared = v1.mask & v3.mask;
    let x1 = v1.mask & !v3.mask;
    debug_assert_eq!(x1.count_ones(), 1);
    let x3 = edge_label(&v3, &v4)?;
    let v5 = SubsetVertex::from_mask(v1.n(), shared | (1 << (x3 - 1)));
    let v6_mask = v1.ground_mask() & !(shared | x1 | (1 << (x3 - 1)));
    let v6 = SubsetVertex::from_mask(v1.n(), v6_mask);
    let vertices = vec![v1, path[1], v3, v4, v5, v6, v1];
    let mut labels = Vec::with_capacity(6);
    for i in 0..6 {
        labels.push(edge_label(&vertices[i], &vertices[i + 1])?);
    }
    SpecialWalk::from_parts(vertices, labels, true)
}

/// The odd graph `O_n`, materialized: vertex `i` of the [`SimpleGraph`]
/// corresponds to `subsets()[i]`, ordered by ascending bitmask.
#[derive(Debug, Clone)]
pub struct OddGraph {
    n: usize,
    graph: SimpleGraph,
    subsets: Vec<SubsetVertex>,
    id_by_mask: Vec<usize>,
}

/// Materializes `O_n` for `3 <= n <= MAX_N`.
pub fn odd_graph(n: usize) -> Result<OddGraph, WalkError> {
    check_n(n)?;
    let ground = 2 * n - 1;
    let full = (1u16 << ground) - 1;
    let mut subsets = Vec::new();
    let mut id_by_mask = vec![usize::MAX; (full as usize) + 1];
    for mask in 0..=full {
        if mask.count_ones() as usize == n - 1 {
            id_by_mask[mask as usize] = subsets.len();
            subsets.push(SubsetVertex::from_mask(n, mask));
        }
    }
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(b) {
                edges.push((i, j));
            }
        }
    }
    let graph = SimpleGraph::from_edges(subsets.len(), &edges).expect("odd graph is simple");
    Ok(OddGraph {
        n,
        graph,
        subsets,
        id_by_mask,
    })
}

impl OddGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn subsets(&self) -> &[SubsetVertex] {
        &self.subsets
    }

    pub fn subset(&self, id: usize) -> SubsetVertex {
        self.subsets[id]
    }

    pub fn id_of(&self, v: &SubsetVertex) -> usize {
        self.id_by_mask[v.mask as usize]
    }

    /// The edge labeling as a coloring of the materialized graph, indexed by
    /// edge id; colors are the ground elements `1..=2n-1`.
    pub fn edge_labeling(&self) -> Vec<Element> {
        self.graph
            .edges()
            .iter()
            .map(|&(i, j)| {
                edge_label(&self.subsets[i], &self.subsets[j]).expect("edges are disjoint pairs")
            })
            .collect()
    }
}
