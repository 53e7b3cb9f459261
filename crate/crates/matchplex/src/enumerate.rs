//! Isomorphism classes of small graphs without isolated vertices.
//!
//! Level `m + 1` is produced from level `m` by adding one edge in every
//! possible way: between two present vertices, from a present vertex to a
//! new one, or (unless only connected graphs are wanted) as a new disjoint
//! edge. Children are reduced to canonical form and deduplicated. Every
//! graph with `m + 1` edges arises this way, since deleting a suitable edge
//! (a non-bridge or a pendant edge, in the connected case) and dropping any
//! vertex left isolated gives a graph on the level below.
//!
//! Each level is expanded in parallel; the merge sorts by canonical form, so
//! the output does not depend on scheduling.

use std::collections::HashSet;

use matchplex_core::canon::{canonical_form_with_cap, MAX_VERTICES};
use matchplex_core::graph::Graph;
use matchplex_core::graph6;
use rayon::prelude::*;

/// Most edges a graph may have: complexes index edges by a 64-bit set.
pub const EDGE_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub max_edges: usize,
    pub max_vertices: usize,
    pub connected_only: bool,
}

/// A canonical representative and its canonical graph6 bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRep {
    pub graph: Graph,
    pub form: Vec<u8>,
}

/// One level per edge count `1..=max_edges`, each sorted by canonical form.
pub fn enumerate_levels(spec: &EnumSpec) -> Vec<Vec<ClassRep>> {
    let max_vertices = spec.max_vertices.min(MAX_VERTICES);
    let max_edges = spec.max_edges.min(EDGE_LIMIT);
    let mut levels: Vec<Vec<ClassRep>> = Vec::new();
    let mut current = vec![rep(Graph::empty())];
    for _ in 0..max_edges {
        let next: HashSet<Vec<u8>> = current
            .par_iter()
            .fold(HashSet::new, |mut acc, parent| {
                for child in children(&parent.graph, max_vertices, spec.connected_only) {
                    acc.insert(form_of(&child));
                }
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        let mut forms: Vec<Vec<u8>> = next.into_iter().collect();
        forms.sort_unstable();
        current = forms
            .into_par_iter()
            .map(|form| ClassRep {
                graph: graph6::decode(&form).expect("canonical forms are valid graph6"),
                form,
            })
            .collect();
        if current.is_empty() {
            break;
        }
        levels.push(current.clone());
    }
    levels
}

/// All classes, ordered by edge count and then canonical form.
pub fn enumerate_graphs(spec: &EnumSpec) -> Vec<ClassRep> {
    enumerate_levels(spec).into_iter().flatten().collect()
}

fn rep(g: Graph) -> ClassRep {
    let form = form_of(&g);
    ClassRep { graph: g, form }
}

fn form_of(g: &Graph) -> Vec<u8> {
    canonical_form_with_cap(g, MAX_VERTICES).expect("vertex count is capped")
}

fn children(g: &Graph, max_vertices: usize, connected_only: bool) -> Vec<Graph> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if let Some(h) = g.with_edge(u, v) {
                out.push(h);
            }
        }
    }
    if n < max_vertices && n > 0 {
        let bigger = g.with_extra_vertices(1);
        for u in 0..n {
            out.push(bigger.with_edge(u, n).expect("new vertex has no edges"));
        }
    }
    if (n == 0 || !connected_only) && n + 2 <= max_vertices {
        out.push(
            g.with_extra_vertices(2)
                .with_edge(n, n + 1)
                .expect("new vertices have no edges"),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(max_edges: usize, connected_only: bool) -> EnumSpec {
        EnumSpec {
            max_edges,
            max_vertices: 2 * max_edges,
            connected_only,
        }
    }

    #[test]
    fn two_edges_give_three_classes() {
        assert_eq!(enumerate_graphs(&spec(2, false)).len(), 3);
    }

    #[test]
    fn three_connected_edges_give_five_classes() {
        assert_eq!(enumerate_graphs(&spec(3, true)).len(), 5);
    }

    #[test]
    fn level_sizes_match_known_counts() {
        // Graphs with m edges and no isolated vertices, m = 1..=6.
        let sizes: Vec<usize> = enumerate_levels(&spec(6, false))
            .iter()
            .map(|l| l.len())
            .collect();
        assert_eq!(sizes, vec![1, 2, 5, 11, 26, 68]);
        let sizes: Vec<usize> = enumerate_levels(&spec(6, true))
            .iter()
            .map(|l| l.len())
            .collect();
        assert_eq!(sizes, vec![1, 1, 3, 5, 12, 30]);
    }

    #[test]
    fn vertex_bound_is_respected() {
        let small = EnumSpec {
            max_edges: 4,
            max_vertices: 4,
            connected_only: false,
        };
        let all = enumerate_graphs(&small);
        assert!(all.iter().all(|r| r.graph.vertex_count() <= 4));
        // 2P2 fits on four vertices, 3P2 does not.
        assert!(all
            .iter()
            .any(|r| r.graph.edge_count() == 2 && r.graph.vertex_count() == 4));
        assert!(!all.iter().any(|r| r.graph.vertex_count() == 6));
    }
}
