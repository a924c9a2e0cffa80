//! The `2Δ - 1` coloring algorithm for sparse graphs.
//!
//! The minimal-counterexample proofs become a two-phase algorithm. The
//! reduction phase repeatedly shrinks the active graph, recording one step
//! each time: star and small components are solved outright, a vertex whose
//! peeled degree is one loses a pendant edge, a component that peels to a
//! bare cycle terminates through a closed special walk (or the direct cycle
//! formula), and otherwise a long thread of the peeled graph is lifted to a
//! caterpillar and its interior removed. The extension phase replays the
//! steps in reverse: bases set their stored colors, pendant edges take the
//! least free color, and caterpillars are colored from a prescribed-end
//! special walk in `O_Δ`. The recorded trace replays deterministically and
//! reproduces the returned coloring bit for bit.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::exact::{exact_strong_chromatic_index, DEFAULT_NODE_BUDGET};
use super::extend::{color_cycle_with_pendants, cycle_color_sequence, extend_over_caterpillar};
use super::{ColoringError, PartialColoring, StrongColoring};
use crate::girth::girth_profile;
use crate::graph::SimpleGraph;
use crate::mad::mad;
use crate::thread::{find_thread_with, CaterpillarSpine};

/// Which sufficient condition gates the algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgorithmVariant {
    /// Girth at least `10Δ - 4`, `Δ >= 4`.
    HighGirth,
    /// Girth at least 41, `Δ = 3`.
    SubcubicGirth41,
    /// Even girth >= 6, odd girth >= `2Δ - 1`, `mad < 2 + 1/(3Δ-2)`, `Δ >= 4`.
    MadBased,
    /// Girth >= 8 and `mad < 2 + 2/23`, `Δ = 3`.
    SubcubicMad,
}

impl AlgorithmVariant {
    pub fn name(&self) -> &'static str {
        match self {
            AlgorithmVariant::HighGirth => "high-girth",
            AlgorithmVariant::SubcubicGirth41 => "subcubic-girth41",
            AlgorithmVariant::MadBased => "mad-based",
            AlgorithmVariant::SubcubicMad => "subcubic-mad",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "high-girth" => Some(AlgorithmVariant::HighGirth),
            "subcubic-girth41" => Some(AlgorithmVariant::SubcubicGirth41),
            "mad-based" => Some(AlgorithmVariant::MadBased),
            "subcubic-mad" => Some(AlgorithmVariant::SubcubicMad),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgorithmMode {
    pub variant: AlgorithmVariant,
    pub delta: usize,
}

impl AlgorithmMode {
    pub fn validate(&self) -> Result<(), SparseError> {
        let ok = match self.variant {
            AlgorithmVariant::HighGirth | AlgorithmVariant::MadBased => self.delta >= 4,
            AlgorithmVariant::SubcubicGirth41 | AlgorithmVariant::SubcubicMad => self.delta == 3,
        };
        if ok {
            Ok(())
        } else {
            Err(SparseError::InvalidMode(format!(
                "variant {} is incompatible with delta {}",
                self.variant.name(),
                self.delta
            )))
        }
    }

    pub fn palette(&self) -> usize {
        2 * self.delta - 1
    }

    /// Internal thread length of the caterpillars the reduction hunts for.
    pub fn thread_length(&self) -> usize {
        if self.delta == 3 {
            8
        } else {
            2 * self.delta - 1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreconditionCheck {
    pub name: String,
    pub required: String,
    pub actual: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreconditionReport {
    pub checks: Vec<PreconditionCheck>,
}

impl PreconditionReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn fmt_girth(v: Option<usize>) -> String {
    match v {
        Some(g) => g.to_string(),
        None => "inf".into(),
    }
}

/// Evaluates the variant's sufficient conditions on `g`.
pub fn precondition_report(g: &SimpleGraph, mode: AlgorithmMode) -> PreconditionReport {
    let mut checks = Vec::new();
    let delta = mode.delta;
    let actual_delta = g.max_degree();
    checks.push(PreconditionCheck {
        name: "maximum degree".into(),
        required: format!("<= {delta}"),
        actual: actual_delta.to_string(),
        holds: actual_delta <= delta,
    });
    let profile = girth_profile(g);
    let girth_at_least = |bound: usize| profile.girth.is_none_or(|x| x >= bound);
    match mode.variant {
        AlgorithmVariant::HighGirth => {
            let bound = 10 * delta - 4;
            checks.push(PreconditionCheck {
                name: "girth".into(),
                required: format!(">= {bound}"),
                actual: fmt_girth(profile.girth),
                holds: girth_at_least(bound),
            });
        }
        AlgorithmVariant::SubcubicGirth41 => {
            checks.push(PreconditionCheck {
                name: "girth".into(),
                required: ">= 41".into(),
                actual: fmt_girth(profile.girth),
                holds: girth_at_least(41),
            });
        }
        AlgorithmVariant::MadBased => {
            checks.push(PreconditionCheck {
                name: "even girth".into(),
                required: ">= 6".into(),
                actual: fmt_girth(profile.even_girth),
                holds: profile.even_girth.is_none_or(|x| x >= 6),
            });
            let odd_bound = 2 * delta - 1;
            checks.push(PreconditionCheck {
                name: "odd girth".into(),
                required: format!(">= {odd_bound}"),
                actual: fmt_girth(profile.odd_girth),
                holds: profile.odd_girth.is_none_or(|x| x >= odd_bound),
            });
            let density = mad(g).ok();
            let (num, den) = (2 * (3 * delta as u64 - 2) + 1, 3 * delta as u64 - 2);
            checks.push(PreconditionCheck {
                name: "mad".into(),
                required: format!("< {num}/{den}"),
                actual: density.as_ref().map_or("-".into(), |d| d.to_string()),
                holds: density.as_ref().is_some_and(|d| d.less_than(num, den)),
            });
        }
        AlgorithmVariant::SubcubicMad => {
            checks.push(PreconditionCheck {
                name: "girth".into(),
                required: ">= 8".into(),
                actual: fmt_girth(profile.girth),
                holds: girth_at_least(8),
            });
            let density = mad(g).ok();
            checks.push(PreconditionCheck {
                name: "mad".into(),
                required: "< 48/23".into(),
                actual: density.as_ref().map_or("-".into(), |d| d.to_string()),
                holds: density.as_ref().is_some_and(|d| d.less_than(48, 23)),
            });
        }
    }
    PreconditionReport { checks }
}

#[derive(Debug, Error, Clone)]
pub enum SparseError {
    #[error("invalid mode: {0}")]
    InvalidMode(String),
    #[error("maximum degree {actual} exceeds the mode bound {bound}")]
    DegreeExceeded { actual: usize, bound: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("reduction stuck on a component with {} edges: {reason}", .edges.len())]
    Stuck {
        edges: Vec<(usize, usize)>,
        reason: String,
    },
    #[error("internal failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// One replayable step. Base steps carry the colors they set; extension
/// steps are recomputed deterministically on replay and checked against the
/// recorded assignments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum ReductionStep {
    ExactBase {
        edges: Vec<(usize, usize)>,
        colors: Vec<usize>,
    },
    StarBase {
        center: usize,
        edges: Vec<(usize, usize)>,
        colors: Vec<usize>,
    },
    CycleBase {
        cycle: Vec<usize>,
        colors: Vec<usize>,
    },
    CycleCaterpillar {
        cycle: Vec<usize>,
        pendants: Vec<Vec<usize>>,
        assigned: Vec<(usize, usize, usize)>,
    },
    Caterpillar {
        spine: Vec<usize>,
        pendants: Vec<Vec<usize>>,
        assigned: Vec<(usize, usize, usize)>,
    },
    PendantExtension {
        x: usize,
        z: usize,
        color: usize,
    },
}

/// The ordered step list; replaying it forward from an empty partial
/// coloring rebuilds the returned coloring exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub k: usize,
    pub delta: usize,
    pub steps: Vec<ReductionStep>,
}

/// Colors `g` with at most `2Δ - 1` colors under the mode's sufficient
/// conditions, returning the coloring and its replayable trace.
///
/// Precondition checking is advisory unless `strict`: the reduction is
/// attempted regardless and returns a structured [`SparseError::Stuck`] if
/// it stalls. The returned coloring always passes the verifier.
pub fn strong_color_sparse(
    g: &SimpleGraph,
    mode: AlgorithmMode,
    strict: bool,
) -> Result<(StrongColoring, ReductionTrace), SparseError> {
    mode.validate()?;
    if g.max_degree() > mode.delta {
        return Err(SparseError::DegreeExceeded {
            actual: g.max_degree(),
            bound: mode.delta,
        });
    }
    if strict {
        let report = precondition_report(g, mode);
        if !report.all_hold() {
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.holds)
                .map(|c| format!("{} is {}, required {}", c.name, c.actual, c.required))
                .collect();
            return Err(SparseError::PreconditionFailed(failed.join("; ")));
        }
    }
    let steps = reduce(g, mode)?;
    let skeleton = ReductionTrace {
        k: mode.palette(),
        delta: mode.delta,
        steps,
    };
    let (coloring, trace) = apply_trace(g, &skeleton, false)?;
    if let Err(violations) = super::verify_strong_coloring(g, &coloring) {
        return Err(SparseError::Internal(format!(
            "constructed coloring violates {} conflict pairs",
            violations.len()
        )));
    }
    Ok((coloring, trace))
}

/// Replays a trace against `g`, recomputing every extension step and
/// checking it against the recorded assignments.
pub fn replay_trace(g: &SimpleGraph, trace: &ReductionTrace) -> Result<StrongColoring, SparseError> {
    let (coloring, _) = apply_trace(g, trace, true)?;
    Ok(coloring)
}

/// A live view of the shrinking graph: edges toggle off as steps fire.
struct Active<'a> {
    g: &'a SimpleGraph,
    alive: Vec<bool>,
    degree: Vec<usize>,
}

impl<'a> Active<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let mut degree = vec![0usize; g.vertex_count()];
        for &(u, v) in g.edges() {
            degree[u] += 1;
            degree[v] += 1;
        }
        Active {
            g,
            alive: vec![true; g.edge_count()],
            degree,
        }
    }

    fn remove_edge(&mut self, id: usize) {
        debug_assert!(self.alive[id]);
        self.alive[id] = false;
        let (u, v) = self.g.endpoints(id);
        self.degree[u] -= 1;
        self.degree[v] -= 1;
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.alive[self.g.edge_id(v, w).unwrap()])
            .collect()
    }

    /// First component (least vertex) of the live graph, as sorted vertices.
    fn first_component(&self) -> Option<Vec<usize>> {
        let start = (0..self.g.vertex_count()).find(|&v| self.degree[v] > 0)?;
        let mut seen = vec![false; self.g.vertex_count()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        Some(comp)
    }

    fn component_edges(&self, comp: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.g.vertex_count()];
        for &v in comp {
            inside[v] = true;
        }
        (0..self.g.edge_count())
            .filter(|&id| {
                self.alive[id] && {
                    let (u, _) = self.g.endpoints(id);
                    inside[u]
                }
            })
            .collect()
    }

    /// Degree within the peeled component: live neighbors that are not
    /// themselves live pendants.
    fn peeled_degree(&self, v: usize) -> usize {
        self.neighbors(v)
            .into_iter()
            .filter(|&w| self.degree[w] >= 2)
            .count()
    }
}

const EXACT_BASE_EDGE_LIMIT: usize = 24;

/// The reduction phase: returns the steps in replay order.
fn reduce(g: &SimpleGraph, mode: AlgorithmMode) -> Result<Vec<ReductionStep>, SparseError> {
    let mut active = Active::new(g);
    let mut discovered: Vec<ReductionStep> = Vec::new();
    let k = mode.palette();
    while let Some(comp) = active.first_component() {
        let edge_ids = active.component_edges(&comp);
        let stuck = |reason: String| SparseError::Stuck {
            edges: edge_ids.iter().map(|&id| g.endpoints(id)).collect(),
            reason,
        };
        // Star component: color its edges 1, 2, ...
        if let Some(&center) = comp.iter().find(|&&v| active.degree[v] == edge_ids.len()) {
            let edges: Vec<(usize, usize)> = edge_ids.iter().map(|&id| g.endpoints(id)).collect();
            let colors: Vec<usize> = (1..=edges.len()).collect();
            if colors.len() > k {
                return Err(stuck(format!(
                    "star of degree {} exceeds the palette {k}",
                    colors.len()
                )));
            }
            for &id in &edge_ids {
                active.remove_edge(id);
            }
            discovered.push(ReductionStep::StarBase {
                center,
                edges,
                colors,
            });
            continue;
        }
        // Small component: exact solver, capped at the palette.
        if edge_ids.len() <= EXACT_BASE_EDGE_LIMIT {
            let edges: Vec<(usize, usize)> = edge_ids.iter().map(|&id| g.endpoints(id)).collect();
            let (sub, back) = subgraph_from_edges(&edges);
            let result = exact_strong_chromatic_index(&sub, DEFAULT_NODE_BUDGET);
            if !result.exact || result.chi > k {
                return Err(stuck(format!(
                    "small component needs {} colors, palette is {k}",
                    result.chi
                )));
            }
            let to_sub: std::collections::HashMap<usize, usize> =
                back.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let colors: Vec<usize> = edges
                .iter()
                .map(|&(u, v)| {
                    result
                        .witness
                        .color(sub.edge_id(to_sub[&u], to_sub[&v]).unwrap())
                })
                .collect();
            for &id in &edge_ids {
                active.remove_edge(id);
            }
            discovered.push(ReductionStep::ExactBase { edges, colors });
            continue;
        }
        // Pendant step: some peeled vertex keeps a single non-pendant
        // neighbor, so one of its pendant edges comes off.
        let pendant_anchor = comp
            .iter()
            .copied()
            .find(|&x| active.degree[x] >= 2 && active.peeled_degree(x) == 1);
        if let Some(x) = pendant_anchor {
            let z = active
                .neighbors(x)
                .into_iter()
                .find(|&w| active.degree[w] == 1)
                .expect("anchor has a live pendant");
            active.remove_edge(g.edge_id(x, z).unwrap());
            discovered.push(ReductionStep::PendantExtension { x, z, color: 0 });
            continue;
        }
        // From here every peeled vertex has peeled degree >= 2.
        let core: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| active.degree[v] >= 2)
            .collect();
        let core_is_cycle = core.iter().all(|&v| active.peeled_degree(v) == 2);
        if core_is_cycle {
            // The component is a bare cycle, possibly with pendant edges.
            let cycle = carve_cycle(&active, &core);
            let kappa = cycle.len();
            let pure = core.len() == comp.len();
            if pure {
                let colors = cycle_color_sequence(kappa);
                if colors.iter().copied().max().unwrap_or(0) > k {
                    return Err(stuck(format!("cycle of length {kappa} needs more than {k}")));
                }
                for &id in &edge_ids {
                    active.remove_edge(id);
                }
                discovered.push(ReductionStep::CycleBase { cycle, colors });
                continue;
            }
            let walkable =
                (kappa.is_multiple_of(2) && kappa >= 6) || (kappa % 2 == 1 && kappa >= 2 * mode.delta - 1);
            if !walkable {
                return Err(stuck(format!(
                    "cycle of length {kappa} with pendants admits no closed walk encoding"
                )));
            }
            let pendants: Vec<Vec<usize>> = cycle
                .iter()
                .map(|&v| {
                    active
                        .neighbors(v)
                        .into_iter()
                        .filter(|&w| active.degree[w] == 1)
                        .collect()
                })
                .collect();
            for &id in &edge_ids {
                active.remove_edge(id);
            }
            discovered.push(ReductionStep::CycleCaterpillar {
                cycle,
                pendants,
                assigned: Vec::new(),
            });
            continue;
        }
        // General case: lift a thread of the peeled component to a
        // caterpillar and drop its interior. Every deactivated edge keeps an
        // endpoint of live degree <= 1 forever, so the full-graph induced
        // subgraph on the core equals the live one.
        let ell = mode.thread_length();
        let (core_graph, back) = g.induced(&core);
        let thread = find_thread_with(&core_graph, ell, true)
            .ok_or_else(|| stuck(format!("no {ell}-thread in the peeled component")))?;
        let spine: Vec<usize> = thread.path.iter().map(|&v| back[v]).collect();
        let pendants: Vec<Vec<usize>> = spine[1..=ell]
            .iter()
            .map(|&v| {
                active
                    .neighbors(v)
                    .into_iter()
                    .filter(|&w| active.degree[w] == 1)
                    .collect()
            })
            .collect();
        // Interior spine edges and every pendant edge of the internals.
        for i in 1..ell {
            active.remove_edge(g.edge_id(spine[i], spine[i + 1]).unwrap());
        }
        for (i, plist) in pendants.iter().enumerate() {
            for &z in plist {
                active.remove_edge(g.edge_id(spine[i + 1], z).unwrap());
            }
        }
        discovered.push(ReductionStep::Caterpillar {
            spine,
            pendants,
            assigned: Vec::new(),
        });
    }
    discovered.reverse();
    Ok(discovered)
}

fn subgraph_from_edges(edges: &[(usize, usize)]) -> (SimpleGraph, Vec<usize>) {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let remap: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let sub_edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (remap[&u], remap[&v])).collect();
    let sub = SimpleGraph::from_edges(verts.len(), &sub_edges).expect("subgraph is simple");
    (sub, verts)
}

/// Cyclic vertex order of a 2-regular peeled core: least vertex first,
/// then its least neighbor.
fn carve_cycle(active: &Active, core: &[usize]) -> Vec<usize> {
    let inside: std::collections::HashSet<usize> = core.iter().copied().collect();
    let start = *core.iter().min().unwrap();
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = active
            .neighbors(cur)
            .into_iter()
            .filter(|&w| inside.contains(&w) && w != prev)
            .min()
            .expect("core vertices have two core neighbors");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

/// Colors edge `xz` with the least color free among its colored conflicts.
/// Unlike the public pendant extension this places no demand on ambient
/// degrees; the reduction discipline supplies the `2Δ - 2` conflict bound.
fn color_pendant_edge(
    g: &SimpleGraph,
    coloring: &mut PartialColoring,
    x: usize,
    z: usize,
) -> Result<usize, ColoringError> {
    let e = g
        .edge_id(x, z)
        .ok_or_else(|| ColoringError::Precondition(format!("no edge {x}-{z}")))?;
    let k = coloring.palette_size();
    let mut used = vec![false; k + 1];
    for v in [x, z] {
        for &w in g.neighbors(v) {
            let id = g.edge_id(v, w).unwrap();
            if let Some(c) = coloring.get(id) {
                used[c] = true;
            }
            for &t in g.neighbors(w) {
                let id2 = g.edge_id(w, t).unwrap();
                if id2 != e {
                    if let Some(c) = coloring.get(id2) {
                        used[c] = true;
                    }
                }
            }
        }
    }
    let color = (1..=k)
        .find(|&c| !used[c])
        .ok_or(ColoringError::NoFreeColor(x, z, k))?;
    coloring.set(e, color);
    Ok(color)
}

/// Applies the steps in order. With `check` set, recomputed extension
/// colors must match the recorded ones; otherwise the recomputed colors are
/// recorded into the returned trace.
fn apply_trace(
    g: &SimpleGraph,
    trace: &ReductionTrace,
    check: bool,
) -> Result<(StrongColoring, ReductionTrace), SparseError> {
    let mut coloring = PartialColoring::new(g, trace.k);
    let mut filled = Vec::with_capacity(trace.steps.len());
    for step in &trace.steps {
        let done = match step {
            ReductionStep::ExactBase { edges, colors }
            | ReductionStep::StarBase { edges, colors, .. } => {
                if edges.len() != colors.len() {
                    return Err(SparseError::Internal("ragged base step".into()));
                }
                for (&(u, v), &c) in edges.iter().zip(colors) {
                    let id = g.edge_id(u, v).ok_or_else(|| {
                        SparseError::Internal(format!("trace names a missing edge {u}-{v}"))
                    })?;
                    coloring.set(id, c);
                }
                step.clone()
            }
            ReductionStep::CycleBase { cycle, colors } => {
                let recomputed = cycle_color_sequence(cycle.len());
                if check && recomputed != *colors {
                    return Err(SparseError::Internal(
                        "cycle colors disagree with the recorded trace".into(),
                    ));
                }
                for (i, &c) in recomputed.iter().enumerate() {
                    let id = g
                        .edge_id(cycle[i], cycle[(i + 1) % cycle.len()])
                        .ok_or_else(|| SparseError::Internal("trace cycle edge missing".into()))?;
                    coloring.set(id, c);
                }
                ReductionStep::CycleBase {
                    cycle: cycle.clone(),
                    colors: recomputed,
                }
            }
            ReductionStep::CycleCaterpillar {
                cycle,
                pendants,
                assigned,
            } => {
                let before = snapshot(&coloring, g, cycle, pendants);
                color_cycle_with_pendants(g, &mut coloring, cycle, pendants, trace.delta)?;
                let now = diff(&coloring, g, &before);
                if check && now != *assigned {
                    return Err(SparseError::Internal(
                        "cycle-caterpillar colors disagree with the recorded trace".into(),
                    ));
                }
                ReductionStep::CycleCaterpillar {
                    cycle: cycle.clone(),
                    pendants: pendants.clone(),
                    assigned: now,
                }
            }
            ReductionStep::Caterpillar {
                spine,
                pendants,
                assigned,
            } => {
                let before = snapshot(&coloring, g, spine, pendants);
                let spine_struct = CaterpillarSpine {
                    spine: spine.clone(),
                    pendants: pendants.clone(),
                };
                extend_over_caterpillar(g, &mut coloring, &spine_struct, trace.delta)?;
                let now = diff(&coloring, g, &before);
                if check && now != *assigned {
                    return Err(SparseError::Internal(
                        "caterpillar colors disagree with the recorded trace".into(),
                    ));
                }
                ReductionStep::Caterpillar {
                    spine: spine.clone(),
                    pendants: pendants.clone(),
                    assigned: now,
                }
            }
            ReductionStep::PendantExtension { x, z, color } => {
                let c = color_pendant_edge(g, &mut coloring, *x, *z)?;
                if check && c != *color {
                    return Err(SparseError::Internal(
                        "pendant color disagrees with the recorded trace".into(),
                    ));
                }
                ReductionStep::PendantExtension {
                    x: *x,
                    z: *z,
                    color: c,
                }
            }
        };
        filled.push(done);
    }
    let total = coloring.into_total(g)?;
    Ok((
        total,
        ReductionTrace {
            k: trace.k,
            delta: trace.delta,
            steps: filled,
        },
    ))
}

/// Edge ids a spine step may touch, with their current colors.
fn snapshot(
    coloring: &PartialColoring,
    g: &SimpleGraph,
    spine: &[usize],
    pendants: &[Vec<usize>],
) -> Vec<(usize, Option<usize>)> {
    let mut ids = Vec::new();
    for i in 0..spine.len() {
        let (a, b) = (spine[i], spine[(i + 1) % spine.len()]);
        if let Some(id) = g.edge_id(a, b) {
            ids.push(id);
        }
    }
    for plist in pendants {
        for &z in plist {
            for &v in spine {
                if let Some(id) = g.edge_id(v, z) {
                    ids.push(id);
                }
            }
        }
    }
    ids.sort_unstable();
    ids.dedup();
    ids.into_iter().map(|id| (id, coloring.get(id))).collect()
}

fn diff(
    coloring: &PartialColoring,
    g: &SimpleGraph,
    before: &[(usize, Option<usize>)],
) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &(id, old) in before {
        let new = coloring.get(id);
        if old.is_none() {
            if let Some(c) = new {
                let (u, v) = g.endpoints(id);
                out.push((u, v, c));
            }
        }
    }
    out
}
