//! Simple undirected graphs, the named families used throughout the crate,
//! and matching enumeration.
//!
//! Edges are kept sorted lexicographically with `u < v`; an edge is referred
//! to by its position in that list, and that index is the vertex name in the
//! matching complex.

use core::fmt;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{SmallSet, CAPACITY};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    LoopEdge {
        vertex: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        vertex_count: usize,
    },
    InvalidParameter(&'static str),
    NotAMatching,
    /// Matching operations index edges with a 64-bit set.
    TooManyEdges {
        edges: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopEdge { vertex } => write!(f, "loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::VertexOutOfRange {
                vertex,
                vertex_count,
            } => write!(
                f,
                "vertex {vertex} out of range for {vertex_count} vertices"
            ),
            GraphError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            GraphError::NotAMatching => write!(f, "edge set is not a matching of the graph"),
            GraphError::TooManyEdges { edges } => {
                write!(
                    f,
                    "graph has {edges} edges; matching operations support at most {CAPACITY}"
                )
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite simple graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.vertex_count, self.edges)
    }
}

/// A set of pairwise non-incident edges, by edge index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Matching(SmallSet);

impl Matching {
    pub const EMPTY: Matching = Matching(SmallSet::EMPTY);

    /// Wraps an edge-index set without checking it against a graph.
    pub fn from_set(edges: SmallSet) -> Self {
        Matching(edges)
    }

    pub fn edges(self) -> SmallSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{:?}", self.0)
    }
}

/// Result of [`Graph::subgraph_avoiding`]: the surviving graph and, for every
/// edge of the original graph, its index in the new one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidingSubgraph {
    pub graph: Graph,
    pub edge_map: Vec<Option<usize>>,
}

/// One connected component with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Original vertex ids, increasing; vertex `i` of `graph` is `vertices[i]`.
    pub vertices: Vec<usize>,
    /// Original edge indices, increasing; edge `i` of `graph` is `edge_indices[i]`.
    pub edge_indices: Vec<usize>,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub components: Vec<Component>,
    pub isolated: Vec<usize>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `u < v` and sorting the edge
    /// list.
    pub fn new(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge { vertex: a });
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    /// The graph with no vertices.
    pub fn empty() -> Graph {
        Graph {
            vertex_count: 0,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.degrees().contains(&0)
    }

    /// Drops isolated vertices, renumbering the rest in increasing order.
    /// Edge order (and therefore edge indices) is unchanged.
    pub fn without_isolated(&self) -> Graph {
        let deg = self.degrees();
        let mut new_id = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            if deg[v] > 0 {
                new_id[v] = next;
                next += 1;
            }
        }
        Graph {
            vertex_count: next,
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| (new_id[u], new_id[v]))
                .collect(),
        }
    }

    /// The graph spanned by the given edges, isolated vertices removed. The
    /// `i`-th smallest selected index becomes edge `i`.
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> Graph {
        let mut idx: Vec<usize> = edge_indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let edges = idx.iter().map(|&i| self.edges[i]).collect();
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
        .without_isolated()
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count);
        let pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.vertex_count, &pairs).expect("relabelling a simple graph by a permutation")
    }

    /// Appends `extra` isolated vertices.
    pub fn with_extra_vertices(&self, extra: usize) -> Graph {
        Graph {
            vertex_count: self.vertex_count + extra,
            edges: self.edges.clone(),
        }
    }

    /// Adds an edge between existing vertices. Returns `None` if present or a
    /// loop.
    pub fn with_edge(&self, u: usize, v: usize) -> Option<Graph> {
        if u == v || u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let key = (u.min(v), u.max(v));
        match self.edges.binary_search(&key) {
            Ok(_) => None,
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, key);
                Some(Graph {
                    vertex_count: self.vertex_count,
                    edges,
                })
            }
        }
    }

    // --- named families -------------------------------------------------

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter(
                "path needs at least one vertex",
            ));
        }
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &pairs)
    }

    /// Cycle on `n` vertices.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(
                "cycle needs at least three vertices",
            ));
        }
        let mut pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        pairs.push((0, n - 1));
        Graph::new(n, &pairs)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter(
                "complete graph needs at least one vertex",
            ));
        }
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::new(n, &pairs)
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
        if m < 1 || n < 1 {
            return Err(GraphError::InvalidParameter("both parts must be nonempty"));
        }
        let mut pairs = Vec::new();
        for u in 0..m {
            for v in m..m + n {
                pairs.push((u, v));
            }
        }
        Graph::new(m + n, &pairs)
    }

    /// `K_{1,leaves}`, center 0.
    pub fn star(leaves: usize) -> Result<Graph, GraphError> {
        if leaves < 1 {
            return Err(GraphError::InvalidParameter("star needs at least one leaf"));
        }
        let pairs: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &pairs)
    }

    /// `k` legs of length two glued at vertex 0. Leg `i` is `0 - (2i+1) - (2i+2)`.
    pub fn spider(k: usize) -> Result<Graph, GraphError> {
        if k < 2 {
            return Err(GraphError::InvalidParameter(
                "spider needs at least two legs",
            ));
        }
        let mut pairs = Vec::with_capacity(2 * k);
        for i in 0..k {
            pairs.push((0, 2 * i + 1));
            pairs.push((2 * i + 1, 2 * i + 2));
        }
        Graph::new(2 * k + 1, &pairs)
    }

    /// The banner: the 4-cycle `0-1-2-3` with a pendant edge `0-4`.
    pub fn banner() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).expect("banner is simple")
    }

    /// Disjoint union, offsetting vertex ids left to right. Edge `i` of the
    /// result is the `i`-th edge of the concatenated edge lists.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let mut vertex_count = 0;
        let mut edges = Vec::new();
        for g in graphs {
            edges.extend(
                g.edges
                    .iter()
                    .map(|&(u, v)| (u + vertex_count, v + vertex_count)),
            );
            vertex_count += g.vertex_count;
        }
        Graph {
            vertex_count,
            edges,
        }
    }

    // --- matchings --------------------------------------------------------

    fn check_capacity(&self) -> Result<(), GraphError> {
        if self.edges.len() > CAPACITY {
            Err(GraphError::TooManyEdges {
                edges: self.edges.len(),
            })
        } else {
            Ok(())
        }
    }

    /// For each edge, the set of other edges sharing a vertex with it.
    pub fn conflict_masks(&self) -> Result<Vec<SmallSet>, GraphError> {
        self.check_capacity()?;
        let mut at_vertex = vec![SmallSet::EMPTY; self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            at_vertex[u].insert(i);
            at_vertex[v].insert(i);
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| at_vertex[u].union(at_vertex[v]).without(i))
            .collect())
    }

    pub fn is_matching(&self, edges: SmallSet) -> bool {
        let Ok(conflicts) = self.conflict_masks() else {
            return false;
        };
        if edges.max().is_some_and(|m| m >= self.edges.len()) {
            return false;
        }
        edges.iter().all(|i| conflicts[i].is_disjoint(edges))
    }

    /// Every matching, the empty one included, ordered by size and then
    /// lexicographically on the sorted index list.
    pub fn enumerate_matchings(&self) -> Result<Vec<Matching>, GraphError> {
        let conflicts = self.conflict_masks()?;
        let mut out = Vec::new();
        fn rec(
            start: usize,
            current: SmallSet,
            blocked: SmallSet,
            conflicts: &[SmallSet],
            out: &mut Vec<Matching>,
        ) {
            out.push(Matching(current));
            for i in start..conflicts.len() {
                if !blocked.contains(i) {
                    rec(
                        i + 1,
                        current.with(i),
                        blocked.union(conflicts[i]),
                        conflicts,
                        out,
                    );
                }
            }
        }
        rec(0, SmallSet::EMPTY, SmallSet::EMPTY, &conflicts, &mut out);
        out.sort_by(|a, b| a.0.cmp_graded(&b.0));
        Ok(out)
    }

    /// Inclusion-maximal matchings, ordered as in [`Graph::enumerate_matchings`].
    pub fn maximal_matchings(&self) -> Result<Vec<Matching>, GraphError> {
        let conflicts = self.conflict_masks()?;
        let all = SmallSet::range(self.edges.len());
        let mut out = Vec::new();
        // Bron–Kerbosch style: `candidates` are edges still addable, `excluded`
        // are addable edges already branched on at this level.
        fn rec(
            current: SmallSet,
            candidates: SmallSet,
            excluded: SmallSet,
            conflicts: &[SmallSet],
            out: &mut Vec<Matching>,
        ) {
            if candidates.is_empty() {
                if excluded.is_empty() {
                    out.push(Matching(current));
                }
                return;
            }
            let mut cand = candidates;
            let mut excl = excluded;
            for i in candidates.iter() {
                rec(
                    current.with(i),
                    cand.without(i).difference(conflicts[i]),
                    excl.difference(conflicts[i]),
                    conflicts,
                    out,
                );
                cand.remove(i);
                excl.insert(i);
            }
        }
        rec(SmallSet::EMPTY, all, SmallSet::EMPTY, &conflicts, &mut out);
        out.sort_by(|a, b| a.0.cmp_graded(&b.0));
        Ok(out)
    }

    /// Size of a maximum matching.
    pub fn matching_number(&self) -> Result<usize, GraphError> {
        Ok(self
            .maximal_matchings()?
            .iter()
            .map(|m| m.len())
            .max()
            .unwrap_or(0))
    }

    /// All maximal matchings have the same size.
    pub fn is_equimatchable(&self) -> Result<bool, GraphError> {
        let maxi = self.maximal_matchings()?;
        Ok(maxi.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    /// The graph spanned by the edges not incident to any edge of `m`, with
    /// isolated vertices dropped.
    pub fn subgraph_avoiding(&self, m: Matching) -> Result<AvoidingSubgraph, GraphError> {
        if !self.is_matching(m.0) {
            return Err(GraphError::NotAMatching);
        }
        let mut covered = vec![false; self.vertex_count];
        for i in m.0.iter() {
            let (u, v) = self.edges[i];
            covered[u] = true;
            covered[v] = true;
        }
        let mut edge_map = vec![None; self.edges.len()];
        let mut kept = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !covered[u] && !covered[v] {
                edge_map[i] = Some(kept.len());
                kept.push(i);
            }
        }
        Ok(AvoidingSubgraph {
            graph: self.edge_subgraph(&kept),
            edge_map,
        })
    }

    // --- connectivity -----------------------------------------------------

    /// Components with at least one edge, ordered by smallest vertex, plus
    /// the isolated vertices.
    pub fn connected_components(&self) -> Components {
        let adj = self.neighbors();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut components = Vec::new();
        let mut isolated = Vec::new();
        for s in 0..self.vertex_count {
            if comp[s] != usize::MAX {
                continue;
            }
            if adj[s].is_empty() {
                isolated.push(s);
                comp[s] = usize::MAX - 1;
                continue;
            }
            let id = components.len();
            let mut queue = VecDeque::from([s]);
            comp[s] = id;
            let mut vertices = Vec::new();
            while let Some(u) = queue.pop_front() {
                vertices.push(u);
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            vertices.sort_unstable();
            components.push(vertices);
        }
        let components = components
            .into_iter()
            .enumerate()
            .map(|(id, vertices)| {
                let mut local = vec![usize::MAX; self.vertex_count];
                for (i, &v) in vertices.iter().enumerate() {
                    local[v] = i;
                }
                let edge_indices: Vec<usize> = (0..self.edges.len())
                    .filter(|&i| comp[self.edges[i].0] == id)
                    .collect();
                let edges = edge_indices
                    .iter()
                    .map(|&i| (local[self.edges[i].0], local[self.edges[i].1]))
                    .collect();
                Component {
                    graph: Graph {
                        vertex_count: vertices.len(),
                        edges,
                    },
                    vertices,
                    edge_indices,
                }
            })
            .collect();
        Components {
            components,
            isolated,
        }
    }

    /// Connected once isolated vertices are ignored; the edgeless graph counts
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().components.len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_graph_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3, Graph::path(3).unwrap());
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(GraphError::LoopEdge { vertex: 0 })
        );
        assert_eq!(
            Graph::new(4, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn isolated_flag() {
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        assert!(g.has_isolated_vertices());
        assert!(!g.without_isolated().has_isolated_vertices());
        assert_eq!(g.without_isolated().vertex_count(), 2);
    }

    #[test]
    fn family_sizes() {
        assert_eq!(Graph::banner().vertex_count(), 5);
        assert_eq!(Graph::banner().edge_count(), 5);
        assert_eq!(Graph::complete_bipartite(3, 2).unwrap().edge_count(), 6);
        let sp = Graph::spider(4).unwrap();
        assert_eq!(sp.vertex_count(), 9);
        assert_eq!(sp.degrees()[0], 4);
        assert!(Graph::spider(1).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn disjoint_union_examples() {
        let p3 = Graph::path(3).unwrap();
        let u = Graph::disjoint_union(&[p3.clone(), p3]);
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 4));
        assert_eq!(Graph::disjoint_union(&[]).vertex_count(), 0);
        let u = Graph::disjoint_union(&[Graph::path(2).unwrap(), Graph::banner()]);
        assert_eq!((u.vertex_count(), u.edge_count()), (7, 6));
    }

    #[test]
    fn matching_counts() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.enumerate_matchings().unwrap().len(), 10);
        let p2 = Graph::path(2).unwrap();
        let ms = p2.enumerate_matchings().unwrap();
        assert_eq!(ms, vec![Matching::EMPTY, Matching(SmallSet::singleton(0))]);
        // Size-then-lex order.
        let ms = k4.enumerate_matchings().unwrap();
        assert!(ms.windows(2).all(|w| w[0].0.cmp_graded(&w[1].0).is_lt()));
    }

    #[test]
    fn equimatchable_examples() {
        let sp3 = Graph::spider(3).unwrap();
        assert!(sp3.is_equimatchable().unwrap());
        assert_eq!(sp3.matching_number().unwrap(), 3);
        assert!(!Graph::path(4).unwrap().is_equimatchable().unwrap());
        assert!(Graph::complete_bipartite(3, 2)
            .unwrap()
            .is_equimatchable()
            .unwrap());
        assert_eq!(
            Graph::empty().maximal_matchings().unwrap(),
            vec![Matching::EMPTY]
        );
    }

    #[test]
    fn avoiding_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = c5
            .subgraph_avoiding(Matching(SmallSet::singleton(0)))
            .unwrap();
        assert_eq!(r.graph, Graph::path(3).unwrap());
        let g = Graph::new(5, &[(0, 1), (1, 2)]).unwrap();
        let r = g.subgraph_avoiding(Matching::EMPTY).unwrap();
        assert_eq!(r.graph, Graph::path(3).unwrap());
        assert_eq!(r.edge_map, vec![Some(0), Some(1)]);
        assert_eq!(
            g.subgraph_avoiding(Matching(SmallSet::from_indices([0, 1]))),
            Err(GraphError::NotAMatching)
        );
    }

    #[test]
    fn components_examples() {
        let p3 = Graph::path(3).unwrap();
        let two = Graph::disjoint_union(&[p3.clone(), p3]);
        assert_eq!(two.connected_components().components.len(), 2);
        assert!(Graph::cycle(7).unwrap().is_connected());
        let g = Graph::disjoint_union(&[Graph::banner(), Graph::path(2).unwrap()]);
        let cs = g.connected_components();
        let sizes: Vec<_> = cs.components.iter().map(|c| c.graph.edge_count()).collect();
        assert_eq!(sizes, vec![5, 1]);
        let g = Graph::new(4, &[(1, 2)]).unwrap();
        assert_eq!(g.connected_components().isolated, vec![0, 3]);
    }
}
