//! Canonical forms for small graphs by individualization and refinement.
//!
//! The search tree is the usual one: refine an ordered vertex partition to
//! an equitable-like fixed point, individualize each vertex of the first
//! non-singleton cell, recurse. Every leaf is a discrete partition, read as a
//! labeling; the canonical labeling is the leaf whose upper-triangle
//! adjacency bitstring is lexicographically least. Automorphisms found by
//! equal leaves prune siblings in the same orbit and let the search jump
//! back to the deepest common ancestor.
//!
//! Refinement splits cells by a hash of per-cell neighbour counts. The hash
//! is a fixed function of the ordered partition, so the tree stays
//! isomorphism-invariant; a collision only makes a cell coarser.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::graph6;

/// Default vertex cap for [`canonical_form`].
pub const DEFAULT_CAP: usize = 10;
/// Adjacency rows are single machine words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonError {
    TooLarge { vertices: usize, cap: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonError::TooLarge { vertices, cap } => {
                write!(
                    f,
                    "graph has {vertices} vertices; canonical form cap is {cap}"
                )
            }
        }
    }
}

impl core::error::Error for CanonError {}

/// Canonical graph6 bytes with the default vertex cap.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, CanonError> {
    canonical_form_with_cap(g, DEFAULT_CAP)
}

/// Canonical graph6 bytes. Two graphs give equal output iff isomorphic.
pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<Vec<u8>, CanonError> {
    let (adj, lab) = labeling_of(g, cap)?;
    let n = lab.len();
    Ok(graph6::encode_with(n, |i, j| {
        adj[lab[i]] >> lab[j] & 1 == 1
    }))
}

/// The canonical labeling: position `i` of the canonical graph is original
/// vertex `result[i]`.
pub fn canonical_labeling(g: &Graph, cap: usize) -> Result<Vec<usize>, CanonError> {
    Ok(labeling_of(g, cap)?.1)
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph, cap: usize) -> Result<Graph, CanonError> {
    let lab = canonical_labeling(g, cap)?;
    let mut pos = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    Ok(g.relabel(&pos))
}

fn labeling_of(g: &Graph, cap: usize) -> Result<(Vec<u64>, Vec<usize>), CanonError> {
    let n = g.vertex_count();
    let cap = cap.min(MAX_VERTICES);
    if n > cap {
        return Err(CanonError::TooLarge { vertices: n, cap });
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let colors = vec![0u32; n];
    let lab = search(&adj, &colors);
    Ok((adj, lab))
}

/// Canonical form of a vertex-coloured graph given by adjacency rows.
/// Isomorphisms must preserve colours. The output starts with the colour
/// histogram so graphs with different colour multisets never collide.
pub fn colored_canonical_form(adj: &[u64], colors: &[u32]) -> Result<Vec<u8>, CanonError> {
    let n = adj.len();
    assert_eq!(colors.len(), n);
    if n > MAX_VERTICES {
        return Err(CanonError::TooLarge {
            vertices: n,
            cap: MAX_VERTICES,
        });
    }
    let lab = search(adj, colors);
    let mut out = Vec::new();
    for &v in &lab {
        out.extend_from_slice(&colors[v].to_le_bytes());
    }
    out.push(b'|');
    out.extend(graph6::encode_with(n, |i, j| {
        adj[lab[i]] >> lab[j] & 1 == 1
    }));
    Ok(out)
}

fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let i = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i)
        }
    })
}

/// Refines an ordered partition until no cell splits.
fn refine(adj: &[u64], cells: &mut Vec<u64>, scratch: &mut Vec<(u64, usize)>) {
    let n = adj.len();
    loop {
        if cells.len() == n {
            return;
        }
        let mut next = Vec::with_capacity(n);
        let mut changed = false;
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            scratch.clear();
            for v in bits(cell) {
                let row = adj[v];
                let mut h: u64 = 0xcbf2_9ce4_8422_2325;
                for &c in cells.iter() {
                    h = (h ^ (row & c).count_ones() as u64).wrapping_mul(0x0000_0100_0000_01b3);
                }
                scratch.push((h, v));
            }
            scratch.sort_unstable();
            let mut current = 0u64;
            let mut key = scratch[0].0;
            for &(h, v) in scratch.iter() {
                if h != key {
                    next.push(current);
                    current = 0;
                    key = h;
                    changed = true;
                }
                current |= 1 << v;
            }
            next.push(current);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u8>>,
    scratch: Vec<(u64, usize)>,
}

fn search(adj: &[u64], colors: &[u32]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut cells = Vec::new();
    let mut i = 0;
    while i < n {
        let mut cell = 0u64;
        let c = colors[order[i]];
        while i < n && colors[order[i]] == c {
            cell |= 1 << order[i];
            i += 1;
        }
        cells.push(cell);
    }
    let mut s = Search {
        adj,
        first: None,
        best: None,
        generators: Vec::new(),
        scratch: Vec::new(),
    };
    refine(adj, &mut cells, &mut s.scratch);
    let mut path = Vec::new();
    s.descend(cells, &mut path);
    s.best.expect("search reaches at least one leaf").lab
}

fn certificate(adj: &[u64], lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut cert = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let row = adj[lab[j]];
        for &li in &lab[..j] {
            if row >> li & 1 == 1 {
                cert[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    cert
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [u8], mut x: usize) -> usize {
    while parent[x] as usize != x {
        let p = parent[x] as usize;
        parent[x] = parent[p];
        x = p;
    }
    x
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.adj.len();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let t = cells
            .iter()
            .position(|&c| c & (c - 1) != 0)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() && self.same_orbit(path, v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            let mut scratch = core::mem::take(&mut self.scratch);
            refine(self.adj, &mut child, &mut scratch);
            self.scratch = scratch;
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the stored
    /// automorphisms that fix the current path pointwise.
    fn same_orbit(&self, path: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<u8> = (0..n as u8).collect();
        let mut any = false;
        for g in &self.generators {
            if path.iter().any(|&x| g[x] as usize != x) {
                continue;
            }
            any = true;
            for (x, &gx) in g.iter().enumerate() {
                let a = find(&mut parent, x);
                let b = find(&mut parent, gx as usize);
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let r = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == r)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = certificate(self.adj, &lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                cert,
                lab,
                path: path.to_vec(),
            };
            self.first = Some(Leaf {
                cert: leaf.cert.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let level = common_prefix(path, &first.path);
            let gen = automorphism(&first.lab, &lab);
            self.generators.push(gen);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            core::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    cert,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
            core::cmp::Ordering::Equal => {
                let level = common_prefix(path, &best.path);
                let gen = automorphism(&best.lab, &lab);
                self.generators.push(gen);
                Some(level)
            }
            core::cmp::Ordering::Greater => None,
        }
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<u8> {
    let mut g = vec![0u8; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a] = b as u8;
    }
    g
}
