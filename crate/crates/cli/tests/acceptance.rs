//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them) and enforcing the
//! stated runtime budget. All combinatorial checks are exact.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use strongcolor::coloring::{
    caterpillar_cycle_audit, color_caterpillar_cycle, exact_strong_chromatic_index,
    greedy_strong_coloring, parse_trace, replay_trace, strong_color_sparse,
    verify_strong_coloring, write_trace, AlgorithmMode, AlgorithmVariant, StrongColoring,
    DEFAULT_NODE_BUDGET,
};
use strongcolor::odd::dp::dp_special_walk;
use strongcolor::odd::walks::{WalkMode, WalkRequest};
use strongcolor::odd::{construct_prescribed_walk, odd_graph, Element, OddGraph, SubsetVertex};
use strongcolor::{build_graph, conflict_graph, families, girth_profile, mad, SimpleGraph};

struct Criterion {
    number: usize,
    budget: Duration,
    started: Instant,
}

impl Criterion {
    fn start(number: usize, budget_secs: u64) -> Self {
        Criterion {
            number,
            budget: Duration::from_secs(budget_secs),
            started: Instant::now(),
        }
    }

    fn pass(self, detail: &str) {
        let elapsed = self.started.elapsed();
        println!(
            "[acceptance] criterion {} PASS — {detail} ({elapsed:.2?} of {:?} budget)",
            self.number, self.budget
        );
        assert!(
            elapsed <= self.budget,
            "criterion {} exceeded its runtime budget: {elapsed:.2?} > {:?}",
            self.number,
            self.budget
        );
    }
}

fn all_requests(og: &OddGraph, length: usize) -> Vec<WalkRequest> {
    let n = og.n();
    let top = (2 * n - 1) as Element;
    let mut out = Vec::new();
    for s in og.subsets() {
        for e in og.subsets() {
            for l1 in (1..=top).filter(|&l| !s.contains(l)) {
                for l2 in (1..=top).filter(|&l| !e.contains(l)) {
                    out.push(WalkRequest {
                        n,
                        start: *s,
                        end: *e,
                        first_label: l1,
                        last_label: l2,
                        length,
                        mode: WalkMode::Prescribed,
                    });
                }
            }
        }
    }
    out
}

fn assert_valid(req: &WalkRequest) {
    let w = construct_prescribed_walk(req).unwrap_or_else(|e| {
        panic!(
            "n={} {} -> {} ({}, {}) len {}: {e}",
            req.n, req.start, req.end, req.first_label, req.last_label, req.length
        )
    });
    assert_eq!(w.len(), req.length);
    assert_eq!(w.start(), req.start);
    assert_eq!(w.end(), req.end);
    assert_eq!(w.first_label(), req.first_label);
    assert_eq!(w.last_label(), req.last_label);
    w.validate().unwrap();
}

/// Criterion 1: odd-graph structure.
#[test]
fn criterion_1_odd_graph_structure() {
    let c = Criterion::start(1, 1);
    let o3 = odd_graph(3).unwrap();
    assert_eq!(o3.graph().vertex_count(), 10);
    assert_eq!(o3.graph().edge_count(), 15);
    assert!((0..10).all(|v| o3.graph().degree(v) == 3));
    assert_eq!(girth_profile(o3.graph()).girth, Some(5));
    let o4 = odd_graph(4).unwrap();
    assert_eq!(o4.graph().vertex_count(), 35);
    assert_eq!(o4.graph().edge_count(), 70);
    assert!((0..35).all(|v| o4.graph().degree(v) == 4));
    c.pass("O_3 is 10/15/3-regular with girth 5; O_4 is 35/70/4-regular");
}

/// Criterion 2: the canonical labeling is a strong edge coloring.
#[test]
fn criterion_2_labeling_is_coloring() {
    let c = Criterion::start(2, 5);
    for n in [3usize, 4] {
        let og = odd_graph(n).unwrap();
        let coloring = StrongColoring::new(
            2 * n - 1,
            og.edge_labeling().iter().map(|&l| l as usize).collect(),
        )
        .unwrap();
        assert!(verify_strong_coloring(og.graph(), &coloring).is_ok());
        assert_eq!(coloring.colors_used(), 2 * n - 1);
    }
    c.pass("edge labelings of O_3 and O_4 verify as strong colorings with 2n-1 colors");
}

/// Criterion 3: universality at the base length, with dp agreement.
#[test]
fn criterion_3_walk_universality_at_base_length() {
    let c = Criterion::start(3, 120);
    let o3 = odd_graph(3).unwrap();
    let reqs3 = all_requests(&o3, 9);
    assert_eq!(reqs3.len(), 900);
    for req in &reqs3 {
        assert_valid(req);
        assert!(dp_special_walk(&o3, req).unwrap().is_some());
    }
    let o4 = odd_graph(4).unwrap();
    let reqs4 = all_requests(&o4, 8);
    assert_eq!(reqs4.len(), 19600);
    for req in &reqs4 {
        assert_valid(req);
        assert!(dp_special_walk(&o4, req).unwrap().is_some());
    }
    c.pass("900 O_3 requests at length 9 and 19600 O_4 requests at length 8, dp concurring");
}

/// Criterion 4: the negative instances are infeasible and the repro
/// command reports PASS.
#[test]
fn criterion_4_sharpness() {
    let c = Criterion::start(4, 60);
    let o3 = odd_graph(3).unwrap();
    let sv = |els: &[Element]| SubsetVertex::new(3, els).unwrap();
    let negatives = [
        (sv(&[1, 2]), sv(&[1, 2]), 5, 5, 6),
        (sv(&[1, 2]), sv(&[1, 2]), 5, 3, 7),
        (sv(&[1, 2]), sv(&[3, 4]), 5, 5, 8),
    ];
    for &(start, end, l1, l2, len) in &negatives {
        let req = WalkRequest {
            n: 3,
            start,
            end,
            first_label: l1,
            last_label: l2,
            length: len,
            mode: WalkMode::Prescribed,
        };
        assert_eq!(dp_special_walk(&o3, &req).unwrap(), None, "length {len}");
    }
    let o4 = odd_graph(4).unwrap();
    let sv4 = |els: &[Element]| SubsetVertex::new(4, els).unwrap();
    // no even walk shorter than 8 with the first edge labeled by the
    // element outside both disjoint ends, whatever the last label
    for len in [2usize, 4, 6] {
        for l2 in [1u8, 2, 3, 7] {
            let req = WalkRequest {
                n: 4,
                start: sv4(&[1, 2, 3]),
                end: sv4(&[4, 5, 6]),
                first_label: 7,
                last_label: l2,
                length: len,
                mode: WalkMode::Prescribed,
            };
            assert_eq!(dp_special_walk(&o4, &req).unwrap(), None);
        }
    }
    // no odd walk shorter than 9 between equal ends with both labels outside
    for len in [1usize, 3, 5, 7] {
        let req = WalkRequest {
            n: 4,
            start: sv4(&[1, 2, 3]),
            end: sv4(&[1, 2, 3]),
            first_label: 7,
            last_label: 7,
            length: len,
            mode: WalkMode::Prescribed,
        };
        assert_eq!(dp_special_walk(&o4, &req).unwrap(), None);
    }
    // the CLI audit agrees
    for n in ["3", "4"] {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_strongcolor"))
            .args(["repro-sharpness", "--n", n])
            .output()
            .unwrap();
        assert!(out.status.success());
        let text = String::from_utf8_lossy(&out.stdout).into_owned();
        assert!(text.lines().count() >= 3);
        assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    }
    c.pass("O_3 lengths 6/7/8 and O_4 even<8, odd<9 instances infeasible; repro-sharpness PASS");
}

/// Criterion 5: every length from the base threshold through 14.
#[test]
fn criterion_5_extension_lengths() {
    let c = Criterion::start(5, 300);
    let o3 = odd_graph(3).unwrap();
    for length in 9..=14 {
        for req in all_requests(&o3, length) {
            assert_valid(&req);
        }
    }
    let o4 = odd_graph(4).unwrap();
    let mut rng = StdRng::seed_from_u64(0xacc5);
    let base = all_requests(&o4, 8);
    let mut sampled = 0usize;
    while sampled < 500 {
        let mut req = base[rng.random_range(0..base.len())];
        for length in 8..=14 {
            req.length = length;
            assert_valid(&req);
        }
        sampled += 1;
    }
    c.pass("all O_3 requests at lengths 9..=14; 500 random O_4 requests at lengths 8..=14");
}

/// Criterion 6: caterpillar cycles at desk scale.
#[test]
fn criterion_6_caterpillar_cycles() {
    let c = Criterion::start(6, 600);
    for (kappa, delta) in [(6usize, 3usize), (6, 4), (7, 4), (8, 4), (9, 5)] {
        let g = families::caterpillar_cycle(kappa, delta).unwrap();
        let result = exact_strong_chromatic_index(&g, DEFAULT_NODE_BUDGET);
        assert!(result.exact, "C_({kappa},{delta})");
        assert_eq!(result.chi, 2 * delta - 1, "C_({kappa},{delta})");
        assert!(verify_strong_coloring(&g, &result.witness).is_ok());
    }
    let mut colored = 0usize;
    for delta in 3..=5usize {
        for kappa in 3..=12usize {
            let admissible = (kappa % 2 == 0 && kappa >= 6)
                || (kappa % 2 == 1 && delta >= 4 && kappa >= 2 * delta - 1);
            if !admissible {
                continue;
            }
            let (g, coloring) = color_caterpillar_cycle(kappa, delta).unwrap();
            assert!(
                verify_strong_coloring(&g, &coloring).is_ok(),
                "C_({kappa},{delta})"
            );
            assert!(coloring.palette_size() < 2 * delta);
            colored += 1;
        }
    }
    // and the CLI audit agrees on a spot check
    let checks = caterpillar_cycle_audit(6, 4).unwrap();
    assert!(checks.iter().all(|c| c.passed));
    c.pass(&format!(
        "exact chi = 2*delta - 1 on five instances; {colored} walk colorings verified"
    ));
}

/// Deterministic corpus generators for criterion 7.
mod corpus {
    use super::*;

    pub fn cycle_with_pendant_trees(
        rng: &mut StdRng,
        delta: usize,
        min_girth: usize,
    ) -> SimpleGraph {
        let m = rng.random_range(min_girth..min_girth + 40);
        let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        let mut next = m;
        for v in 0..m {
            if rng.random_bool(0.3) {
                // hang up to delta - 2 short pendant paths, keeping degrees legal
                let arms = rng.random_range(1..=delta - 2);
                for _ in 0..arms {
                    let len = rng.random_range(1..=3);
                    let mut prev = v;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
            }
        }
        build_graph(&edges).unwrap()
    }

    pub fn subdivided(base: &SimpleGraph, rng: &mut StdRng, min_per_edge: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        let mut next = base.vertex_count();
        for &(u, v) in base.edges() {
            let t = min_per_edge + rng.random_range(0..4);
            let mut prev = u;
            for _ in 0..t {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, v));
        }
        SimpleGraph::from_edges(next, &edges).unwrap()
    }

    pub fn k4() -> SimpleGraph {
        build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub fn k5() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
            }
        }
        build_graph(&edges).unwrap()
    }

    pub fn k33() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                edges.push((i, j));
            }
        }
        build_graph(&edges).unwrap()
    }

    /// Random tree plus random chords that never close a cycle shorter
    /// than `min_girth`, under a degree cap.
    pub fn random_high_girth(
        rng: &mut StdRng,
        n: usize,
        delta: usize,
        min_girth: usize,
    ) -> SimpleGraph {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut degree = vec![0usize; n];
        for v in 1..n {
            let mut u = rng.random_range(0..v);
            while degree[u] >= delta - 1 {
                u = rng.random_range(0..v);
            }
            edges.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
        let dist = |edges: &[(usize, usize)], a: usize, b: usize| -> usize {
            use std::collections::VecDeque;
            let mut adj = vec![Vec::new(); n];
            for &(u, v) in edges {
                adj[u].push(v);
                adj[v].push(u);
            }
            let mut d = vec![usize::MAX; n];
            d[a] = 0;
            let mut q = VecDeque::from([a]);
            while let Some(v) = q.pop_front() {
                if v == b {
                    break;
                }
                for &w in &adj[v] {
                    if d[w] == usize::MAX {
                        d[w] = d[v] + 1;
                        q.push_back(w);
                    }
                }
            }
            d[b]
        };
        for _ in 0..6 {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a == b || degree[a] >= delta || degree[b] >= delta {
                continue;
            }
            if edges.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            if dist(&edges, a, b) >= min_girth - 1 {
                edges.push((a.min(b), a.max(b)));
                degree[a] += 1;
                degree[b] += 1;
            }
        }
        SimpleGraph::from_edges(n, &edges).unwrap()
    }
}

fn run_corpus(graphs: Vec<SimpleGraph>, mode: AlgorithmMode, min_girth: usize) -> usize {
    for (i, g) in graphs.iter().enumerate() {
        assert!(g.max_degree() <= mode.delta, "graph {i}");
        let profile = girth_profile(g);
        assert!(
            profile.girth.is_none_or(|x| x >= min_girth),
            "graph {i} girth {:?}",
            profile.girth
        );
        let (coloring, trace) =
            strong_color_sparse(g, mode, true).unwrap_or_else(|e| panic!("graph {i}: {e}"));
        assert!(verify_strong_coloring(g, &coloring).is_ok(), "graph {i}");
        assert!(coloring.palette_size() < 2 * mode.delta);
        let replayed = replay_trace(g, &trace).unwrap();
        assert_eq!(replayed, coloring, "graph {i} replay");
        let round_tripped = parse_trace(&write_trace(&trace)).unwrap();
        assert_eq!(replay_trace(g, &round_tripped).unwrap(), coloring);
    }
    graphs.len()
}

/// Criterion 7: the main algorithm over generated high-girth corpora.
#[test]
fn criterion_7_main_algorithm_corpora() {
    let c = Criterion::start(7, 300);
    let mut rng = StdRng::seed_from_u64(0x7777);
    // Delta <= 4, girth >= 36
    let mut delta4: Vec<SimpleGraph> = Vec::new();
    for _ in 0..40 {
        delta4.push(corpus::cycle_with_pendant_trees(&mut rng, 4, 36));
    }
    for _ in 0..10 {
        delta4.push(corpus::subdivided(&corpus::k4(), &mut rng, 12));
        delta4.push(corpus::subdivided(&corpus::k5(), &mut rng, 12));
        delta4.push(corpus::subdivided(&corpus::k33(), &mut rng, 9));
    }
    for _ in 0..30 {
        delta4.push(corpus::random_high_girth(&mut rng, 120, 4, 36));
    }
    let count4 = run_corpus(
        delta4,
        AlgorithmMode {
            variant: AlgorithmVariant::HighGirth,
            delta: 4,
        },
        36,
    );
    assert!(count4 >= 100);
    // Delta = 3, girth >= 41
    let mut delta3: Vec<SimpleGraph> = Vec::new();
    for _ in 0..40 {
        delta3.push(corpus::cycle_with_pendant_trees(&mut rng, 3, 41));
    }
    for _ in 0..15 {
        delta3.push(corpus::subdivided(&corpus::k4(), &mut rng, 14));
        delta3.push(corpus::subdivided(&corpus::k33(), &mut rng, 10));
    }
    for _ in 0..30 {
        delta3.push(corpus::random_high_girth(&mut rng, 130, 3, 41));
    }
    let count3 = run_corpus(
        delta3,
        AlgorithmMode {
            variant: AlgorithmVariant::SubcubicGirth41,
            delta: 3,
        },
        41,
    );
    assert!(count3 >= 100);
    c.pass(&format!(
        "{count4} graphs (delta <= 4, girth >= 36) and {count3} graphs (delta = 3, girth >= 41) \
         colored, verified, and replayed exactly"
    ));
}

/// Criterion 8: the mad engine against exhaustive maximization, and the
/// threshold gating on caterpillar cycles.
#[test]
fn criterion_8_mad_engine() {
    let c = Criterion::start(8, 120);
    let mut rng = StdRng::seed_from_u64(0x8888);
    for case in 0..200 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.1..0.7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        let d = mad(&g).unwrap();
        // exhaustive maximization over all non-empty subsets
        let mut best = (0u64, 1u64);
        for mask in 1u32..(1 << n) {
            let e = g
                .edges()
                .iter()
                .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .count() as u64;
            let v = mask.count_ones() as u64;
            if (2 * e) as u128 * best.1 as u128 > best.0 as u128 * v as u128 {
                best = (2 * e, v);
            }
        }
        assert!(d.equals(best.0, best.1), "case {case}");
    }
    for delta in [4usize, 5] {
        let g = families::caterpillar_cycle(2 * delta - 1, delta).unwrap();
        let d = mad(&g).unwrap();
        assert!(d.equals(2, 1));
        let den = 3 * delta as u64 - 2;
        assert!(d.less_than(2 * den + 1, den));
    }
    c.pass("200 random graphs match exhaustive maximization; caterpillar cycles sit below 2 + 1/(3Δ-2)");
}

/// Criterion 9: exact solver versus full enumeration on small graphs.
#[test]
fn criterion_9_solver_cross_check() {
    let c = Criterion::start(9, 120);
    let mut rng = StdRng::seed_from_u64(0x9999);
    let mut done = 0usize;
    while done < 300 {
        let n = rng.random_range(2..=8);
        let p = rng.random_range(0.15..0.6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        if g.edge_count() > 8 || g.edge_count() == 0 {
            continue;
        }
        done += 1;
        let result = exact_strong_chromatic_index(&g, DEFAULT_NODE_BUDGET);
        assert!(result.exact);
        // independent enumeration: least K admitting a proper coloring of
        // the conflict graph, fixed order, no pruning heuristics
        let cg = conflict_graph(&g);
        let m = g.edge_count();
        let mut lists = vec![Vec::new(); m];
        for &(i, j) in cg.edges() {
            lists[i].push(j);
            lists[j].push(i);
        }
        fn feasible(lists: &[Vec<usize>], colors: &mut [usize], v: usize, k: usize) -> bool {
            if v == colors.len() {
                return true;
            }
            'next: for c in 1..=k {
                for &w in &lists[v] {
                    if colors[w] == c {
                        continue 'next;
                    }
                }
                colors[v] = c;
                if feasible(lists, colors, v + 1, k) {
                    return true;
                }
                colors[v] = 0;
            }
            false
        }
        let brute = (1..=m)
            .find(|&k| feasible(&lists, &mut vec![0; m], 0, k))
            .unwrap();
        assert_eq!(result.chi, brute, "{:?}", g.edges());
        let greedy = greedy_strong_coloring(&g);
        assert!(greedy.palette_size() >= result.chi);
        assert!(verify_strong_coloring(&g, &greedy).is_ok());
        assert!(verify_strong_coloring(&g, &result.witness).is_ok());
    }
    c.pass("300 graphs with <= 8 edges: exact equals enumeration, greedy never beats exact");
}
