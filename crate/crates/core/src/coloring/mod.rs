//! Strong edge colorings: verification, solvers, and the reduction
//! machinery that colors sparse graphs with `2Δ - 1` colors.

pub mod exact;
pub mod extend;
pub mod format;
pub mod sparse;

use crate::conflict::conflict_lists;
use crate::graph::SimpleGraph;
use thiserror::Error;

pub use exact::{exact_strong_chromatic_index, ChisResult, DEFAULT_NODE_BUDGET};
pub use extend::{
    caterpillar_cycle_audit, color_caterpillar_cycle, color_cycle, extend_over_caterpillar,
    extend_pendant,
};
pub use format::{parse_coloring, parse_trace, write_coloring, write_trace};
pub use sparse::{
    precondition_report, replay_trace, strong_color_sparse, AlgorithmMode, AlgorithmVariant,
    PreconditionCheck, PreconditionReport, ReductionStep, ReductionTrace, SparseError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("edge {0}-{1} is not colored")]
    Uncolored(usize, usize),
    #[error("color {0} outside the palette 1..={1}")]
    ColorOutOfPalette(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no free color for edge {0}-{1} in a palette of {2}")]
    NoFreeColor(usize, usize, usize),
    #[error("walk construction failed: {0}")]
    Walk(#[from] crate::odd::WalkError),
    #[error("graph error: {0}")]
    Graph(#[from] crate::graph::GraphError),
    #[error("coloring parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A total strong edge coloring: `colors[edge_id]` in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongColoring {
    k: usize,
    colors: Vec<usize>,
}

impl StrongColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        for &c in colors.iter() {
            if c == 0 || c > k {
                return Err(ColoringError::ColorOutOfPalette(c, k));
            }
        }
        Ok(StrongColoring { k, colors })
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, edge_id: usize) -> usize {
        self.colors[edge_id]
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for &c in &self.colors {
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }
}

/// A coloring under construction: edges colored one extension at a time.
#[derive(Debug, Clone)]
pub struct PartialColoring {
    k: usize,
    colors: Vec<Option<usize>>,
}

impl PartialColoring {
    pub fn new(g: &SimpleGraph, k: usize) -> Self {
        PartialColoring {
            k,
            colors: vec![None; g.edge_count()],
        }
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    pub fn get(&self, edge_id: usize) -> Option<usize> {
        self.colors[edge_id]
    }

    pub fn set(&mut self, edge_id: usize, color: usize) {
        assert!(color >= 1 && color <= self.k, "color outside the palette");
        assert!(
            self.colors[edge_id].is_none(),
            "edge {edge_id} colored twice"
        );
        self.colors[edge_id] = Some(color);
    }

    pub fn into_total(self, g: &SimpleGraph) -> Result<StrongColoring, ColoringError> {
        let mut colors = Vec::with_capacity(self.colors.len());
        for (id, c) in self.colors.iter().enumerate() {
            match c {
                Some(c) => colors.push(*c),
                None => {
                    let (u, v) = g.endpoints(id);
                    return Err(ColoringError::Uncolored(u, v));
                }
            }
        }
        StrongColoring::new(self.k, colors)
    }
}

/// Checks the induced-matching condition: `Ok(())`, or every conflicting
/// edge-id pair that received the same color.
pub fn verify_strong_coloring(
    g: &SimpleGraph,
    coloring: &StrongColoring,
) -> Result<(), Vec<(usize, usize)>> {
    let mut violations = Vec::new();
    for (i, j) in crate::conflict::conflicting_pairs(g) {
        if coloring.color(i) == coloring.color(j) {
            violations.push((i, j));
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Greedy strong edge coloring: edges in id order, least available color.
/// Uses at most `2Δ(Δ-1) + 1` colors.
pub fn greedy_strong_coloring(g: &SimpleGraph) -> StrongColoring {
    let m = g.edge_count();
    let lists = conflict_lists(g);
    let mut colors = vec![0usize; m];
    let mut max_color = 0;
    for e in 0..m {
        let mut used: Vec<bool> = vec![false; max_color + 2];
        for &f in &lists[e] {
            if colors[f] != 0 && colors[f] < used.len() {
                used[colors[f]] = true;
            }
        }
        let c = (1..).find(|&c| c >= used.len() || !used[c]).unwrap();
        colors[e] = c;
        max_color = max_color.max(c);
    }
    StrongColoring {
        k: max_color,
        colors,
    }
}
