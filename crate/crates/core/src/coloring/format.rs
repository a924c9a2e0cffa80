//! Coloring and trace text formats.
//!
//! Coloring: a `coloring K=<K>` header, then one `c <u> <v> <color>` line
//! per edge. Trace: a `trace k=<K> delta=<D>` header, then one JSON object
//! per line, one per step.

use super::sparse::{ReductionStep, ReductionTrace};
use super::{ColoringError, StrongColoring};
use crate::graph::SimpleGraph;
use std::fmt::Write as _;

pub fn write_coloring(g: &SimpleGraph, coloring: &StrongColoring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "coloring K={}", coloring.palette_size());
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "c {u} {v} {}", coloring.color(id));
    }
    out
}

/// Parses a coloring against its graph; every edge must be colored exactly
/// once and the palette respected.
pub fn parse_coloring(g: &SimpleGraph, text: &str) -> Result<StrongColoring, ColoringError> {
    let mut k: Option<usize> = None;
    let mut colors: Vec<Option<usize>> = vec![None; g.edge_count()];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse_err = |message: String| ColoringError::Parse {
            line: idx + 1,
            message,
        };
        match it.next().unwrap() {
            "coloring" => {
                let field = it
                    .next()
                    .ok_or_else(|| parse_err("missing K= field".into()))?;
                let value = field
                    .strip_prefix("K=")
                    .ok_or_else(|| parse_err(format!("expected K=<K>, got `{field}`")))?;
                k = Some(
                    value
                        .parse()
                        .map_err(|_| parse_err(format!("malformed palette `{value}`")))?,
                );
            }
            "c" => {
                let mut num = || -> Result<usize, ColoringError> {
                    it.next()
                        .ok_or_else(|| parse_err("missing field".into()))?
                        .parse()
                        .map_err(|_| parse_err("malformed number".into()))
                };
                let u = num()?;
                let v = num()?;
                let color = num()?;
                let id = g
                    .edge_id(u, v)
                    .ok_or_else(|| parse_err(format!("edge {u}-{v} not in the graph")))?;
                if colors[id].is_some() {
                    return Err(parse_err(format!("edge {u}-{v} colored twice")));
                }
                colors[id] = Some(color);
            }
            other => return Err(parse_err(format!("unknown line tag `{other}`"))),
        }
    }
    let k = k.ok_or(ColoringError::Parse {
        line: 0,
        message: "missing coloring header".into(),
    })?;
    let mut total = Vec::with_capacity(colors.len());
    for (id, c) in colors.iter().enumerate() {
        match c {
            Some(c) => total.push(*c),
            None => {
                let (u, v) = g.endpoints(id);
                return Err(ColoringError::Uncolored(u, v));
            }
        }
    }
    StrongColoring::new(k, total)
}

pub fn write_trace(trace: &ReductionTrace) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trace k={} delta={}", trace.k, trace.delta);
    for step in &trace.steps {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(step).expect("steps serialize")
        );
    }
    out
}

pub fn parse_trace(text: &str) -> Result<ReductionTrace, ColoringError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(ColoringError::Parse {
        line: 1,
        message: "missing trace header".into(),
    })?;
    let mut k = None;
    let mut delta = None;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("trace") {
        return Err(ColoringError::Parse {
            line: 1,
            message: "header must start with `trace`".into(),
        });
    }
    for part in parts {
        let (key, value) = part.split_once('=').ok_or(ColoringError::Parse {
            line: 1,
            message: format!("malformed header field `{part}`"),
        })?;
        let value: usize = value.parse().map_err(|_| ColoringError::Parse {
            line: 1,
            message: format!("malformed header value `{part}`"),
        })?;
        match key {
            "k" => k = Some(value),
            "delta" => delta = Some(value),
            _ => {
                return Err(ColoringError::Parse {
                    line: 1,
                    message: format!("unknown header field `{key}`"),
                })
            }
        }
    }
    let (k, delta) = match (k, delta) {
        (Some(k), Some(d)) => (k, d),
        _ => {
            return Err(ColoringError::Parse {
                line: 1,
                message: "header needs k= and delta=".into(),
            })
        }
    };
    let mut steps: Vec<ReductionStep> = Vec::new();
    for (idx, line) in lines {
        steps.push(
            serde_json::from_str(line.trim()).map_err(|e| ColoringError::Parse {
                line: idx + 1,
                message: format!("bad step: {e}"),
            })?,
        );
    }
    Ok(ReductionTrace { k, delta, steps })
}
