use std::collections::BTreeSet;

use matchplex::enumerate::{enumerate_graphs, EnumSpec};
use matchplex::verify::{run_search, SearchSpec, Target};
use matchplex_core::graph::Graph;

/// Smallest adjacency bitmask over all relabelings; slow but obviously a
/// complete invariant.
fn brute_key(n: usize, edges: &[(usize, usize)]) -> (usize, u32) {
    let pair_bit = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        // Index of (a, b) among pairs of 0..n in lexicographic order.
        a * (2 * n - a - 1) / 2 + (b - a - 1)
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u32::MAX;
    loop {
        let mask = edges
            .iter()
            .fold(0u32, |m, &(u, v)| m | 1 << pair_bit(perm[u], perm[v]));
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (n, best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn labeled_classes(
    max_vertices: usize,
    max_edges: usize,
    connected: bool,
) -> BTreeSet<(usize, u32)> {
    let mut keys = BTreeSet::new();
    for n in 2..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 1u32..(1 << pairs.len()) {
            if mask.count_ones() as usize > max_edges {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            if g.has_isolated_vertices() || (connected && !g.is_connected()) {
                continue;
            }
            keys.insert(brute_key(n, &edges));
        }
    }
    keys
}

fn enumerated_classes(max_vertices: usize, max_edges: usize, connected: bool) -> Vec<(usize, u32)> {
    enumerate_graphs(&EnumSpec {
        max_edges,
        max_vertices,
        connected_only: connected,
    })
    .iter()
    .map(|r| brute_key(r.graph.vertex_count(), r.graph.edges()))
    .collect()
}

#[test]
fn enumeration_yields_every_class_once() {
    for connected in [false, true] {
        for max_edges in 1..=5 {
            let got = enumerated_classes(6, max_edges, connected);
            let distinct: BTreeSet<_> = got.iter().copied().collect();
            assert_eq!(
                distinct.len(),
                got.len(),
                "duplicate class, edges {max_edges}"
            );
            assert_eq!(
                distinct,
                labeled_classes(6, max_edges, connected),
                "edges {max_edges}"
            );
        }
    }
}

#[test]
fn enumeration_on_six_vertices_up_to_fifteen_edges() {
    // Every graph on at most six vertices, including K6.
    let got = enumerated_classes(6, 15, false);
    let distinct: BTreeSet<_> = got.iter().copied().collect();
    assert_eq!(distinct.len(), got.len());
    assert_eq!(distinct, labeled_classes(6, 15, false));
}

#[test]
fn reports_are_deterministic() {
    for target in [
        Target::OneSphere,
        Target::DisconnectedComplex,
        Target::TwoManifoldWithBoundary,
    ] {
        let mut spec = SearchSpec::new(target);
        spec.max_edges = 7;
        let a = run_search(&spec).unwrap().to_json(false);
        let b = run_search(&spec).unwrap().to_json(false);
        assert_eq!(a, b);
    }
}

#[test]
fn disconnected_complexes_match_the_trichotomy() {
    let mut spec = SearchSpec::new(Target::DisconnectedComplex);
    spec.max_edges = 8;
    let report = run_search(&spec).unwrap();
    assert!(report.is_success(), "{}", report.to_json(false));
    assert!(!report.hits.is_empty());
}

#[test]
fn two_manifolds_with_boundary_small_budget() {
    // Within eight edges and ten vertices: basic unions of weight three
    // containing a ball graph, the exceptional disconnected balls, and the
    // small connected entries.
    let mut spec = SearchSpec::new(Target::TwoManifoldWithBoundary);
    spec.max_edges = 8;
    let report = run_search(&spec).unwrap();
    assert!(report.is_success(), "{}", report.to_json(false));
    let names: BTreeSet<&str> = report
        .hits
        .iter()
        .filter_map(|h| h.name.as_deref())
        .collect();
    for n in ["Sp3", "C7", "annulus", "moebius_8e", "3P2", "P2⊔C5"] {
        assert!(names.contains(n), "{n} missing from {names:?}");
    }
}
