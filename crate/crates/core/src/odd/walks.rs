//! Constructive special walks with prescribed length and boundary labels.
//!
//! Between any two vertices of `O_n` and any admissible boundary labels there
//! is a special walk of every length from a base threshold upward: `2n` for
//! `n >= 4` and `9` for `n = 3`. The base lengths are built from explicit
//! label templates over the canonical pair partition (shared / start-only /
//! end-only / outside); by symmetry only the template cases below are
//! needed, with the remaining boundary-label patterns reached by reversing
//! the request and by choosing which concrete element plays which template
//! role. Longer walks peel one edge off the end and recurse.
//!
//! Every constructed walk is validated structurally before it is returned,
//! and the dp oracle in [`super::dp`] cross-checks the construction in tests.

use super::{
    classify_pair, neighbor_via_label, walk_from_labels, Element, SpecialWalk,
    SubsetVertex, WalkError,
};

/// Whether the boundary labels are prescribed exactly or must be avoided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkMode {
    Prescribed,
    Avoiding,
}

/// A request for a special walk from `start` to `end` of exactly `length`
/// edges whose first and last labels equal (mode `Prescribed`) or differ
/// from (mode `Avoiding`) `first_label` and `last_label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkRequest {
    pub n: usize,
    pub start: SubsetVertex,
    pub end: SubsetVertex,
    pub first_label: Element,
    pub last_label: Element,
    pub length: usize,
    pub mode: WalkMode,
}

impl WalkRequest {
    pub fn validate(&self) -> Result<(), WalkError> {
        if self.start.n() != self.n || self.end.n() != self.n {
            return Err(WalkError::MixedParameters);
        }
        if self.length == 0 {
            return Err(WalkError::InvalidParameter("length must be positive".into()));
        }
        let top = (2 * self.n - 1) as Element;
        for lab in [self.first_label, self.last_label] {
            if lab == 0 || lab > top {
                return Err(WalkError::ElementOutOfRange(lab, self.n));
            }
        }
        if self.start.contains(self.first_label) {
            return Err(WalkError::LabelInSet(self.first_label));
        }
        if self.end.contains(self.last_label) {
            return Err(WalkError::LabelInSet(self.last_label));
        }
        Ok(())
    }
}

fn base_length(n: usize) -> usize {
    if n == 3 {
        9
    } else {
        2 * n
    }
}

/// Builds a special walk of exactly `req.length` from `req.start` to
/// `req.end` whose first edge is labeled `first_label` and last edge
/// `last_label`. Requires `length >= 2n` (`n >= 4`) or `length >= 9`
/// (`n = 3`); shorter lengths may still be feasible for particular requests,
/// which the dp oracle decides.
pub fn construct_prescribed_walk(req: &WalkRequest) -> Result<SpecialWalk, WalkError> {
    req.validate()?;
    if req.mode != WalkMode::Prescribed {
        return Err(WalkError::InvalidParameter(
            "construct_prescribed_walk needs mode Prescribed".into(),
        ));
    }
    let base = base_length(req.n);
    if req.length < base {
        return Err(WalkError::LengthBelowThreshold {
            length: req.length,
            minimum: base,
        });
    }
    // Peel edges off the end until the base length remains: the walk ends
    // `... u -> end` with the final edge labeled `last_label`, and the next
    // inner boundary label is the least one not re-crossing that edge.
    let mut suffix: Vec<(SubsetVertex, Element)> = Vec::new();
    let mut end = req.end;
    let mut last_label = req.last_label;
    let mut remaining = req.length;
    while remaining > base {
        let u = neighbor_via_label(&end, last_label)?;
        let mu = (1..=(2 * req.n - 1) as Element)
            .find(|&e| !u.contains(e) && e != last_label)
            .expect("a vertex of O_n has n >= 3 admissible labels");
        suffix.push((end, last_label));
        end = u;
        last_label = mu;
        remaining -= 1;
    }
    let base_walk = construct_base_walk(req.n, &req.start, &end, req.first_label, last_label)?;
    let mut vertices = base_walk.vertices().to_vec();
    let mut labels = base_walk.labels().to_vec();
    for &(v, lab) in suffix.iter().rev() {
        debug_assert_eq!(neighbor_via_label(vertices.last().unwrap(), lab), Ok(v));
        vertices.push(v);
        labels.push(lab);
    }
    let walk = SpecialWalk::from_parts(vertices, labels, false)?;
    check_boundary(&walk, req)?;
    Ok(walk)
}

/// Builds a special walk of exactly `req.length` whose first edge label
/// differs from `first_label` and last from `last_label`: take the walk of
/// length `length + 2` between the forbidden-label neighbors with those very
/// boundary labels, and strip its outer edges. Labels at a vertex are
/// pairwise distinct, so the stripped boundary labels necessarily differ
/// from the forbidden ones.
pub fn construct_avoiding_walk(req: &WalkRequest) -> Result<SpecialWalk, WalkError> {
    req.validate()?;
    if req.mode != WalkMode::Avoiding {
        return Err(WalkError::InvalidParameter(
            "construct_avoiding_walk needs mode Avoiding".into(),
        ));
    }
    let minimum = base_length(req.n) - 2;
    if req.length < minimum {
        return Err(WalkError::LengthBelowThreshold {
            length: req.length,
            minimum,
        });
    }
    let outer_start = neighbor_via_label(&req.start, req.first_label)?;
    let outer_end = neighbor_via_label(&req.end, req.last_label)?;
    let outer = construct_prescribed_walk(&WalkRequest {
        n: req.n,
        start: outer_start,
        end: outer_end,
        first_label: req.first_label,
        last_label: req.last_label,
        length: req.length + 2,
        mode: WalkMode::Prescribed,
    })?;
    let vertices = outer.vertices()[1..outer.vertices().len() - 1].to_vec();
    let labels = outer.labels()[1..outer.labels().len() - 1].to_vec();
    let walk = SpecialWalk::from_parts(vertices, labels, false)?;
    if walk.start() != req.start || walk.end() != req.end {
        return Err(WalkError::Internal("avoiding walk misses its endpoints".into()));
    }
    if walk.first_label() == req.first_label || walk.last_label() == req.last_label {
        return Err(WalkError::Internal(
            "avoiding walk hit a forbidden boundary label".into(),
        ));
    }
    Ok(walk)
}

fn check_boundary(walk: &SpecialWalk, req: &WalkRequest) -> Result<(), WalkError> {
    if walk.len() != req.length
        || walk.start() != req.start
        || walk.end() != req.end
        || walk.first_label() != req.first_label
        || walk.last_label() != req.last_label
    {
        return Err(WalkError::Internal(
            "constructed walk violates its request".into(),
        ));
    }
    Ok(())
}

/// Which partition class a boundary label falls in. A first label lies
/// outside `[start]`, hence in `end_only` or `outside`; a last label lies
/// outside `[end]`, hence in `start_only` or `outside`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LabelClass {
    StartOnly,
    EndOnly,
    Outside,
}

fn construct_base_walk(
    n: usize,
    start: &SubsetVertex,
    end: &SubsetVertex,
    first: Element,
    last: Element,
) -> Result<SpecialWalk, WalkError> {
    let classes = classify_pair(start, end)?;
    let class_of_first = if classes.end_only.contains(&first) {
        LabelClass::EndOnly
    } else {
        LabelClass::Outside
    };
    let class_of_last = if classes.start_only.contains(&last) {
        LabelClass::StartOnly
    } else {
        LabelClass::Outside
    };
    // Only (end-only, start-only), (end-only, outside) and (outside, outside)
    // have direct templates; (outside, start-only) is the reversal of the
    // second one.
    if class_of_first == LabelClass::Outside && class_of_last == LabelClass::StartOnly {
        let reversed = construct_base_walk(n, end, start, last, first)?;
        return Ok(reversed.reversed());
    }
    let labels = if n == 3 {
        base_labels_n3(&classes, class_of_first, class_of_last, first, last)
    } else {
        base_labels_general(n, &classes, class_of_first, class_of_last, first, last)
    };
    let walk = walk_from_labels(start, &labels).map_err(|e| {
        WalkError::Internal(format!("base template produced an invalid walk: {e}"))
    })?;
    if walk.end() != *end {
        return Err(WalkError::Internal(
            "base template walk ends at the wrong vertex".into(),
        ));
    }
    Ok(walk)
}

/// Fills template roles with concrete elements: forced (slot, element)
/// assignments first, the remaining pool ascending into the remaining slots.
fn assign_roles(pool: &[Element], forced: &[(usize, Element)]) -> Vec<Element> {
    let mut slots = vec![0 as Element; pool.len()];
    let mut used = vec![false; pool.len()];
    for &(slot, e) in forced {
        slots[slot] = e;
        let idx = pool.iter().position(|&p| p == e).expect("forced element in pool");
        used[idx] = true;
    }
    let mut rest = pool.iter().zip(&used).filter(|(_, &u)| !u).map(|(&e, _)| e);
    for slot in &mut slots {
        if *slot == 0 {
            *slot = rest.next().expect("pool large enough");
        }
    }
    slots
}

/// Base templates for `n = 3` (length 9), split by the size of the shared
/// class and the boundary-label pattern.
fn base_labels_n3(
    classes: &super::PairClasses,
    cf: LabelClass,
    cl: LabelClass,
    first: Element,
    last: Element,
) -> Vec<Element> {
    let k = classes.k();
    match k {
        0 => {
            // start = {y1, y2}, end = {z1, z2}, outside = {s1}
            match (cf, cl) {
                (LabelClass::EndOnly, LabelClass::StartOnly) => {
                    let z = assign_roles(&classes.end_only, &[(0, first)]);
                    let y = assign_roles(&classes.start_only, &[(0, last)]);
                    let s = classes.outside.clone();
                    vec![z[0], y[0], z[1], y[1], s[0], z[0], y[1], z[1], y[0]]
                }
                (LabelClass::EndOnly, LabelClass::Outside) => {
                    let z = assign_roles(&classes.end_only, &[(0, first)]);
                    let y = classes.start_only.clone();
                    let s = classes.outside.clone();
                    vec![z[0], y[0], z[1], y[1], y[0], z[0], y[1], z[1], s[0]]
                }
                (LabelClass::Outside, LabelClass::Outside) => {
                    // the single outside element plays both boundary labels
                    let y = classes.start_only.clone();
                    let z = classes.end_only.clone();
                    let s = classes.outside.clone();
                    vec![s[0], y[0], z[1], y[1], y[0], s[0], y[1], z[1], s[0]]
                }
                _ => unreachable!("(outside, start-only) is handled by reversal"),
            }
        }
        1 => {
            // start = {x1, y2}, end = {x1, z2}, outside = {s1, s2}
            let x = classes.shared.clone();
            match (cf, cl) {
                (LabelClass::EndOnly, LabelClass::StartOnly) => {
                    let z = classes.end_only.clone();
                    let y = classes.start_only.clone();
                    let s = classes.outside.clone();
                    vec![z[0], x[0], s[1], z[0], x[0], y[0], s[0], x[0], y[0]]
                }
                (LabelClass::EndOnly, LabelClass::Outside) => {
                    let z = classes.end_only.clone();
                    let y = classes.start_only.clone();
                    let s = assign_roles(&classes.outside, &[(1, last)]);
                    vec![z[0], y[0], s[1], x[0], y[0], s[1], s[0], z[0], s[1]]
                }
                (LabelClass::Outside, LabelClass::Outside) if first != last => {
                    let s = assign_roles(&classes.outside, &[(0, first), (1, last)]);
                    vec![s[0], x[0], s[1], s[0], x[0], s[1], s[0], x[0], s[1]]
                }
                (LabelClass::Outside, LabelClass::Outside) => {
                    let z = classes.end_only.clone();
                    let y = classes.start_only.clone();
                    let s = assign_roles(&classes.outside, &[(0, first)]);
                    vec![s[0], x[0], z[0], y[0], s[1], s[0], y[0], z[0], s[0]]
                }
                _ => unreachable!("(outside, start-only) is handled by reversal"),
            }
        }
        2 => {
            // start = end = {x1, x2}, outside = {s1, s2, s3}
            let x = classes.shared.clone();
            if first != last {
                let s = assign_roles(&classes.outside, &[(0, first), (2, last)]);
                vec![s[0], x[0], s[2], x[1], x[0], s[2], s[1], x[0], s[2]]
            } else {
                let s = assign_roles(&classes.outside, &[(2, first)]);
                vec![s[2], x[0], s[1], x[1], x[0], s[2], s[0], x[0], s[2]]
            }
        }
        _ => unreachable!("shared class of O_3 pairs has at most 2 elements"),
    }
}

/// Base templates for `n >= 4` (length `2n`). Template roles index into the
/// pair partition: shared `x_1..x_k`, start-only `y_{k+1}..y_{n-1}`,
/// end-only `z_{k+1}..z_{n-1}`, outside `s_1..s_{k+1}`.
fn base_labels_general(
    n: usize,
    classes: &super::PairClasses,
    cf: LabelClass,
    cl: LabelClass,
    first: Element,
    last: Element,
) -> Vec<Element> {
    let k = classes.k();
    // 1-based accessors over role-bound class vectors.
    let make =
        |v: Vec<Element>, offset: usize| move |i: usize| -> Element { v[i - 1 - offset] };
    match (cf, cl) {
        (LabelClass::EndOnly, LabelClass::StartOnly) => {
            let z = make(assign_roles(&classes.end_only, &[(0, first)]), k);
            let y = make(
                assign_roles(&classes.start_only, &[(classes.start_only.len() - 1, last)]),
                k,
            );
            let x = make(classes.shared.clone(), 0);
            let s = make(classes.outside.clone(), 0);
            let mut seq = Vec::with_capacity(2 * n);
            if k <= n - 4 {
                for j in k + 1..=n - 3 {
                    seq.extend([z(j), y(j)]);
                }
                seq.extend([s(1), y(n - 2)]);
                for j in 1..=k {
                    seq.extend([s(j + 1), s(j)]);
                }
                seq.extend([z(n - 2), s(k + 1)]);
                seq.extend([z(n - 1), y(n - 1)]);
            } else if k == n - 3 {
                seq.extend([z(n - 2), x(1)]);
                seq.extend([s(1), y(n - 2)]);
                for j in 1..=k - 1 {
                    seq.extend([s(j + 1), s(j)]);
                }
                seq.extend([x(1), s(k)]);
                seq.extend([z(n - 1), y(n - 1)]);
            } else {
                // k == n - 2: both off-shared classes are singletons
                seq.extend([z(n - 1), y(n - 1)]);
                seq.extend([s(1), x(1)]);
                for j in 1..=n - 4 {
                    seq.extend([s(j + 1), s(j)]);
                }
                seq.extend([y(n - 1), s(n - 3)]);
                seq.extend([x(1), y(n - 1)]);
            }
            seq
        }
        (LabelClass::EndOnly, LabelClass::Outside) => {
            let z = make(assign_roles(&classes.end_only, &[(0, first)]), k);
            let y = make(classes.start_only.clone(), k);
            let x = make(classes.shared.clone(), 0);
            let s = make(assign_roles(&classes.outside, &[(k, last)]), 0);
            let mut seq = Vec::with_capacity(2 * n);
            if k <= n - 3 {
                for j in k + 1..=n - 2 {
                    seq.extend([z(j), y(j)]);
                }
                seq.extend([s(1), y(n - 1)]);
                for j in 1..=k {
                    seq.extend([s(j + 1), s(j)]);
                }
                seq.extend([z(n - 1), s(k + 1)]);
            } else {
                // k == n - 2: the template above would not start with the
                // prescribed end-only label, so the chain is rerouted
                // through the shared class instead.
                seq.extend([z(n - 1), y(n - 1)]);
                seq.extend([s(2), x(1)]);
                for j in 2..=n - 2 {
                    seq.extend([s(j + 1), s(j)]);
                }
                seq.extend([x(1), s(n - 1)]);
            }
            seq
        }
        (LabelClass::Outside, LabelClass::Outside) => {
            let x = make(classes.shared.clone(), 0);
            let y = make(classes.start_only.clone(), k);
            let z = make(classes.end_only.clone(), k);
            let mut seq = Vec::with_capacity(2 * n);
            if first == last {
                let s = make(assign_roles(&classes.outside, &[(0, first)]), 0);
                match k {
                    0 => {
                        seq.extend([s(1), y(1)]);
                        for j in 2..=n - 1 {
                            seq.extend([z(j), y(j)]);
                        }
                        seq.extend([z(1), s(1)]);
                    }
                    1 => {
                        seq.extend([s(1), x(1)]);
                        for j in 2..=n - 1 {
                            seq.extend([z(j), y(j)]);
                        }
                        seq.extend([x(1), s(1)]);
                    }
                    2 => {
                        seq.extend([s(1), x(1)]);
                        seq.extend([s(3), y(3)]);
                        seq.extend([z(3), s(3)]);
                        for j in 4..=n - 1 {
                            seq.extend([z(j), y(j)]);
                        }
                        seq.extend([x(1), s(1)]);
                    }
                    k if k <= n - 2 => {
                        seq.extend([s(1), x(1)]);
                        seq.extend([s(3), y(k + 1)]);
                        for j in 3..=k {
                            seq.extend([s(j + 1), s(j)]);
                        }
                        seq.extend([z(k + 1), s(k + 1)]);
                        for j in k + 2..=n - 1 {
                            seq.extend([z(j), y(j)]);
                        }
                        seq.extend([x(1), s(1)]);
                    }
                    _ => {
                        // k == n - 1: equal endpoints, boundary tokens unpaired
                        seq.push(s(1));
                        seq.extend([x(2), s(2)]);
                        for j in 2..=k - 1 {
                            seq.extend([x(j + 1), x(j)]);
                        }
                        seq.extend([s(2), x(k)]);
                        seq.push(s(1));
                    }
                }
            } else {
                match k {
                    1 => {
                        let s = make(assign_roles(&classes.outside, &[(0, first), (1, last)]), 0);
                        seq.extend([s(1), y(2)]);
                        seq.extend([s(2), s(1)]);
                        for j in 3..=n - 1 {
                            seq.extend([z(j), y(j)]);
                        }
                        seq.extend([z(2), s(2)]);
                    }
                    2 => {
                        let s = make(assign_roles(&classes.outside, &[(0, first), (2, last)]), 0);
                        seq.extend([s(1), y(3)]);
                        seq.extend([s(2), s(1)]);
                        seq.extend([s(3), s(2)]);
                        for j in 4..=n - 1 {
                            seq.extend([z(j), y(j)]);
                        }
                        seq.extend([z(3), s(3)]);
                    }
                    k if k <= n - 2 => {
                        let s = make(assign_roles(&classes.outside, &[(0, first), (k, last)]), 0);
                        seq.extend([s(1), y(k + 1)]);
                        for j in 1..=k {
                            seq.extend([s(j + 1), s(j)]);
                        }
                        for j in k + 2..=n - 1 {
                            seq.extend([z(j), y(j)]);
                        }
                        seq.extend([z(k + 1), s(k + 1)]);
                    }
                    _ => {
                        // k == n - 1: route through the shared class
                        let s = make(assign_roles(&classes.outside, &[(1, first), (k, last)]), 0);
                        seq.extend([s(2), x(2)]);
                        for j in 2..=k {
                            seq.extend([s(j + 1), s(j)]);
                        }
                        seq.extend([x(2), s(k + 1)]);
                    }
                }
            }
            seq
        }
        _ => unreachable!("(outside, start-only) is handled by reversal"),
    }
}
