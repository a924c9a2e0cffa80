//! Independent brute-force oracles cross-checking the structural
//! measurements and solvers on randomized corpora. The oracles here are
//! deliberately naive: plain enumeration with no shared code paths with the
//! implementations they check.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use strongcolor::coloring::{
    exact_strong_chromatic_index, greedy_strong_coloring, verify_strong_coloring, StrongColoring,
};
use strongcolor::{build_graph, conflict_graph, find_thread, girth_profile, mad, SimpleGraph};

fn random_graph(rng: &mut StdRng, n: usize, edge_prob: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// Every simple cycle, by minimum-vertex anchored path enumeration with no
/// pruning; returns the shortest length of each parity.
fn enumerate_girths(g: &SimpleGraph) -> (Option<usize>, Option<usize>) {
    fn dfs(
        g: &SimpleGraph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        best: &mut [Option<usize>; 2],
    ) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                let len = path.len();
                let slot = &mut best[len % 2];
                if slot.is_none_or(|b| len < b) {
                    *slot = Some(len);
                }
            }
            if w > start && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                dfs(g, start, path, on_path, best);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut best = [None, None];
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        dfs(g, s, &mut path, &mut on_path, &mut best);
        on_path[s] = false;
    }
    (best[1], best[0])
}

#[test]
fn girth_profile_matches_enumeration() {
    let mut rng = StdRng::seed_from_u64(0x6721);
    for case in 0..250 {
        let n = rng.random_range(3..=12);
        let p = rng.random_range(0.08..0.5);
        let g = random_graph(&mut rng, n, p);
        let profile = girth_profile(&g);
        let (odd, even) = enumerate_girths(&g);
        assert_eq!(profile.odd_girth, odd, "case {case}: {:?}", g.edges());
        assert_eq!(profile.even_girth, even, "case {case}: {:?}", g.edges());
        let expected_girth = match (odd, even) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, b) => b,
        };
        assert_eq!(profile.girth, expected_girth, "case {case}");
    }
}

/// Maximum of 2e(H)/v(H) over all non-empty induced subgraphs, by direct
/// subset enumeration.
fn exhaustive_mad(g: &SimpleGraph) -> (u64, u64) {
    let n = g.vertex_count();
    let mut best = (0u64, 1u64);
    for mask in 1u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let e = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count() as u64;
        let v = verts.len() as u64;
        if (2 * e) as u128 * best.1 as u128 > best.0 as u128 * v as u128 {
            best = (2 * e, v);
        }
    }
    best
}

#[test]
fn mad_matches_exhaustive_maximization() {
    let mut rng = StdRng::seed_from_u64(0x3902);
    for case in 0..200 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p);
        let d = mad(&g).unwrap();
        let (num, den) = exhaustive_mad(&g);
        assert!(
            d.equals(num, den),
            "case {case}: got {}/{}, expected {num}/{den} on {:?}",
            d.numerator,
            d.denominator,
            g.edges()
        );
        // witness really attains the reported value
        let (wg, _) = g.induced(&d.witness);
        assert_eq!(2 * wg.edge_count() as u64, d.numerator);
        assert_eq!(wg.vertex_count() as u64, d.denominator);
        // mad of the whole graph is a lower bound
        if g.edge_count() > 0 {
            assert!(!d.less_than(2 * g.edge_count() as u64, g.vertex_count() as u64));
        }
    }
}

#[test]
fn mad_never_decreases_under_edge_addition() {
    let mut rng = StdRng::seed_from_u64(0x77aa);
    for _ in 0..60 {
        let n = rng.random_range(3..=9);
        let g = random_graph(&mut rng, n, 0.3);
        let d0 = mad(&g).unwrap();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        if let Some(&(u, v)) = missing.first() {
            let mut edges = g.edges().to_vec();
            edges.push((u, v));
            let g2 = SimpleGraph::from_edges(n, &edges).unwrap();
            let d1 = mad(&g2).unwrap();
            assert!(!d1.less_than(d0.numerator, d0.denominator));
        }
    }
}

/// All thread paths by brute force: every vertex sequence of length
/// `ell + 2` with adjacent steps, degree-2 internals, distinct internals.
fn exhaustive_has_thread(g: &SimpleGraph, ell: usize) -> bool {
    fn extend(g: &SimpleGraph, ell: usize, path: &mut Vec<usize>) -> bool {
        if path.len() == ell + 2 {
            return true;
        }
        let closing = path.len() == ell + 1;
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if closing {
                let wraps = w == path[0];
                let fresh = !path[1..].contains(&w) && w != path[0];
                if fresh || (wraps && ell >= 2) {
                    return true;
                }
                continue;
            }
            if g.degree(w) == 2 && !path.contains(&w) {
                path.push(w);
                if extend(g, ell, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.vertex_count()).any(|s| extend(g, ell, &mut vec![s]))
}

#[test]
fn find_thread_agrees_with_enumeration() {
    let mut rng = StdRng::seed_from_u64(0x515);
    for case in 0..150 {
        let n = rng.random_range(3..=12);
        let p = rng.random_range(0.1..0.4);
        let g = random_graph(&mut rng, n, p);
        for ell in 1..=4 {
            let found = find_thread(&g, ell);
            let expected = exhaustive_has_thread(&g, ell);
            assert_eq!(found.is_some(), expected, "case {case} ell={ell}");
            if let Some(t) = found {
                assert_eq!(t.path.len(), ell + 2);
                for pair in t.path.windows(2) {
                    assert!(g.has_edge(pair[0], pair[1]));
                }
                for &v in &t.path[1..=ell] {
                    assert_eq!(g.degree(v), 2);
                }
            }
        }
    }
}

/// A strong coloring is valid iff it properly colors the conflict graph.
#[test]
fn verifier_agrees_with_conflict_graph() {
    let mut rng = StdRng::seed_from_u64(0xc01);
    for _ in 0..200 {
        let n = rng.random_range(2..=10);
        let g = random_graph(&mut rng, n, 0.35);
        if g.edge_count() == 0 {
            continue;
        }
        let cg = conflict_graph(&g);
        let k = rng.random_range(1..=8);
        let colors: Vec<usize> = (0..g.edge_count())
            .map(|_| rng.random_range(1..=k))
            .collect();
        let coloring = StrongColoring::new(k, colors.clone()).unwrap();
        let valid = verify_strong_coloring(&g, &coloring).is_ok();
        let proper = cg
            .edges()
            .iter()
            .all(|&(i, j)| colors[i] != colors[j]);
        assert_eq!(valid, proper);
    }
}

/// Plain exhaustive search for a proper K-coloring of the conflict lists:
/// fixed vertex order, no bounds, no heuristics.
fn enumeration_chis(g: &SimpleGraph) -> usize {
    fn try_color(lists: &[Vec<usize>], colors: &mut [usize], v: usize, k: usize) -> bool {
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
            if try_color(lists, colors, v + 1, k) {
                return true;
            }
            colors[v] = 0;
        }
        false
    }
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    let cg = conflict_graph(&g.clone());
    let mut lists = vec![Vec::new(); m];
    for &(i, j) in cg.edges() {
        lists[i].push(j);
        lists[j].push(i);
    }
    (1..=m)
        .find(|&k| try_color(&lists, &mut vec![0; m], 0, k))
        .unwrap()
}

#[test]
fn exact_solver_matches_enumeration() {
    let mut rng = StdRng::seed_from_u64(0xbeef);
    let mut done = 0;
    while done < 300 {
        let n = rng.random_range(2..=8);
        let p = rng.random_range(0.15..0.6);
        let g = random_graph(&mut rng, n, p);
        if g.edge_count() > 8 {
            continue;
        }
        done += 1;
        let result = exact_strong_chromatic_index(&g, 10_000_000);
        assert!(result.exact);
        assert_eq!(result.chi, enumeration_chis(&g), "{:?}", g.edges());
        let greedy = greedy_strong_coloring(&g);
        assert!(greedy.palette_size() >= result.chi);
        assert!(verify_strong_coloring(&g, &greedy).is_ok() || g.edge_count() == 0);
        if g.edge_count() > 0 {
            assert!(verify_strong_coloring(&g, &result.witness).is_ok());
        }
    }
}

#[test]
fn greedy_respects_the_classical_bound() {
    let mut rng = StdRng::seed_from_u64(0x9d);
    for _ in 0..100 {
        let n = rng.random_range(2..=12);
        let g = random_graph(&mut rng, n, 0.4);
        if g.edge_count() == 0 {
            continue;
        }
        let delta = g.max_degree();
        let c = greedy_strong_coloring(&g);
        assert!(c.palette_size() <= 2 * delta * (delta.saturating_sub(1)) + 1);
        assert!(verify_strong_coloring(&g, &c).is_ok());
    }
}

#[test]
fn peel_invariants_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0x1122);
    for _ in 0..100 {
        let n = rng.random_range(1..=12);
        let g = random_graph(&mut rng, n, 0.25);
        let peeled = strongcolor::peel_pendants(&g);
        let removed: usize = peeled.pendants.values().map(Vec::len).sum();
        assert_eq!(g.vertex_count(), peeled.graph.vertex_count() + removed);
        for &old in &peeled.kept {
            assert_ne!(g.degree(old), 1);
        }
        for (&anchor, zs) in &peeled.pendants {
            for &z in zs {
                assert_eq!(g.degree(z), 1);
                assert!(g.has_edge(anchor, z));
            }
        }
    }
}

#[test]
fn graph_format_round_trips_random() {
    let mut rng = StdRng::seed_from_u64(0xabcd);
    for _ in 0..50 {
        let n = rng.random_range(1..=15);
        let g = random_graph(&mut rng, n, 0.3);
        let text = strongcolor::write_graph(&g);
        assert_eq!(strongcolor::parse_graph(&text).unwrap(), g);
    }
}

#[test]
fn build_graph_infers_vertex_count() {
    let g = build_graph(&[(0, 3), (3, 5)]).unwrap();
    assert_eq!(g.vertex_count(), 6);
}
