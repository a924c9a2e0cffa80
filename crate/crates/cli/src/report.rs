//! JSON report shapes for `--json` output.

use serde::Serialize;

#[derive(Serialize)]
pub struct InvariantsReport {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
    pub even_girth: Option<usize>,
    pub mad: Option<MadReport>,
    pub preconditions: Vec<PreconditionLine>,
}

#[derive(Serialize)]
pub struct MadReport {
    pub numerator: u64,
    pub denominator: u64,
    pub display: String,
    pub witness_size: usize,
}

#[derive(Serialize)]
pub struct PreconditionLine {
    pub variant: String,
    pub delta: usize,
    pub name: String,
    pub required: String,
    pub actual: String,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct ChisReport {
    pub chi: usize,
    pub exact: bool,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub nodes_used: u64,
}
