//! Finite simplicial complexes stored by their facets.
//!
//! A complex carries a list of integer labels; faces are [`SmallSet`]s of
//! positions into that list. The void complex has no facets at all and the
//! complex `{∅}` has exactly one, empty, facet.

use core::fmt;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{SmallSet, CAPACITY};
use crate::canon::{colored_canonical_form, CanonError};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    VoidComplex,
    FaceNotInComplex,
    BadSubset,
    BadDimension {
        requested: isize,
    },
    DuplicateLabel {
        label: i64,
    },
    UnknownLabel {
        label: i64,
    },
    /// Faces are 64-bit sets.
    TooManyVertices {
        vertices: usize,
    },
    Canon(CanonError),
    Graph(GraphError),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::VoidComplex => write!(f, "operation undefined on the void complex"),
            ComplexError::FaceNotInComplex => write!(f, "face is not in the complex"),
            ComplexError::BadSubset => write!(f, "vertex subset is not contained in the complex"),
            ComplexError::BadDimension { requested } => {
                write!(f, "dimension {requested} is out of range")
            }
            ComplexError::DuplicateLabel { label } => write!(f, "duplicate vertex label {label}"),
            ComplexError::UnknownLabel { label } => write!(f, "unknown vertex label {label}"),
            ComplexError::TooManyVertices { vertices } => {
                write!(
                    f,
                    "{vertices} vertex labels exceed the capacity of {CAPACITY}"
                )
            }
            ComplexError::Canon(e) => write!(f, "{e}"),
            ComplexError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ComplexError {}

impl From<GraphError> for ComplexError {
    fn from(e: GraphError) -> Self {
        ComplexError::Graph(e)
    }
}

impl From<CanonError> for ComplexError {
    fn from(e: CanonError) -> Self {
        ComplexError::Canon(e)
    }
}

/// Face counts `f_{-1}, f_0, ..., f_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// Counts of nonempty faces `f_0, ..., f_d`.
    pub fn nonempty(&self) -> &[u64] {
        &self.0[1..]
    }

    /// `f_k` for `k >= -1`; zero beyond the top dimension.
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.0.get(i).copied())
            .unwrap_or(0)
    }

    /// `Σ_{k≥0} (−1)^k f_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonempty()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    labels: Vec<i64>,
    /// Pairwise incomparable, sorted by size then lexicographically.
    facets: Vec<SmallSet>,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labeled_facets()).finish()
    }
}

/// Drops facets contained in other facets and sorts the rest.
pub(crate) fn absorb(mut sets: Vec<SmallSet>) -> Vec<SmallSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.bits().cmp(&b.bits())));
    sets.dedup();
    let mut kept: Vec<SmallSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by(SmallSet::cmp_graded);
    kept
}

impl Complex {
    /// The complex with no faces.
    pub fn void() -> Complex {
        Complex {
            labels: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`, of dimension −1.
    pub fn empty_face() -> Complex {
        Complex {
            labels: Vec::new(),
            facets: vec![SmallSet::EMPTY],
        }
    }

    fn check_labels(labels: &[i64]) -> Result<(), ComplexError> {
        if labels.len() > CAPACITY {
            return Err(ComplexError::TooManyVertices {
                vertices: labels.len(),
            });
        }
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateLabel { label: w[0] });
        }
        Ok(())
    }

    /// Builds a complex from facets given by label. Non-maximal sets are
    /// absorbed.
    pub fn from_facets(labels: Vec<i64>, facets: &[Vec<i64>]) -> Result<Complex, ComplexError> {
        Complex::check_labels(&labels)?;
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = SmallSet::EMPTY;
            for &l in f {
                let i = labels
                    .iter()
                    .position(|&x| x == l)
                    .ok_or(ComplexError::UnknownLabel { label: l })?;
                s.insert(i);
            }
            sets.push(s);
        }
        Ok(Complex {
            labels,
            facets: absorb(sets),
        })
    }

    /// Builds a complex from facets given as index sets into `labels`.
    pub fn from_index_facets(
        labels: Vec<i64>,
        facets: Vec<SmallSet>,
    ) -> Result<Complex, ComplexError> {
        Complex::check_labels(&labels)?;
        let all = SmallSet::range(labels.len());
        if facets.iter().any(|f| !f.is_subset(all)) {
            return Err(ComplexError::BadSubset);
        }
        Ok(Complex {
            labels,
            facets: absorb(facets),
        })
    }

    /// The matching complex: vertex `i` is edge `i` of `g`, facets are the
    /// maximal matchings. Isolated vertices of `g` play no role.
    pub fn matching_complex(g: &Graph) -> Result<Complex, ComplexError> {
        let facets = g
            .maximal_matchings()?
            .into_iter()
            .map(|m| m.edges())
            .collect();
        Ok(Complex {
            labels: (0..g.edge_count() as i64).collect(),
            facets,
        })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn facets(&self) -> &[SmallSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, −1 for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Positions of labels that occur in some face.
    pub fn vertices(&self) -> SmallSet {
        self.facets
            .iter()
            .fold(SmallSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains_face(&self, face: SmallSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Label positions for the given labels.
    pub fn face_from_labels(&self, labels: &[i64]) -> Result<SmallSet, ComplexError> {
        let mut s = SmallSet::EMPTY;
        for &l in labels {
            let i = self
                .labels
                .iter()
                .position(|&x| x == l)
                .ok_or(ComplexError::UnknownLabel { label: l })?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn face_labels(&self, face: SmallSet) -> Vec<i64> {
        face.iter().map(|i| self.labels[i]).collect()
    }

    /// Facets as sorted label lists, the list itself sorted. Two complexes
    /// with equal output have the same faces under their labels.
    pub fn labeled_facets(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = self
            .facets
            .iter()
            .map(|f| {
                let mut v = self.face_labels(*f);
                v.sort_unstable();
                v
            })
            .collect();
        out.sort();
        out
    }

    /// Faces grouped by size `0..=d+1`, each group sorted by bit pattern.
    pub fn faces_by_size(&self) -> Vec<Vec<SmallSet>> {
        faces_by_size(&self.facets)
    }

    pub fn f_vector(&self) -> Result<FVector, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        Ok(FVector(
            self.faces_by_size()
                .iter()
                .map(|g| g.len() as u64)
                .collect(),
        ))
    }

    pub fn euler_characteristic(&self) -> Result<i64, ComplexError> {
        Ok(self.f_vector()?.euler_characteristic())
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `link(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`. Labels are kept.
    pub fn link(&self, face: SmallSet) -> Result<Complex, ComplexError> {
        let facets = link_facets(&self.facets, face);
        if facets.is_empty() {
            return Err(ComplexError::FaceNotInComplex);
        }
        Ok(Complex {
            labels: self.labels.clone(),
            facets,
        })
    }

    /// The join. If the label sets overlap, the second complex's labels are
    /// shifted past the first's maximum.
    pub fn join(&self, other: &Complex) -> Result<Complex, ComplexError> {
        let total = self.labels.len() + other.labels.len();
        if total > CAPACITY {
            return Err(ComplexError::TooManyVertices { vertices: total });
        }
        let overlap = other.labels.iter().any(|l| self.labels.contains(l));
        let shift = if overlap {
            let max1 = self.labels.iter().copied().max().unwrap_or(-1);
            let min2 = other.labels.iter().copied().min().unwrap_or(0);
            max1 + 1 - min2
        } else {
            0
        };
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| l + shift));
        let offset = self.labels.len();
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a.union(SmallSet::from_bits(
                    b.bits().checked_shl(offset as u32).unwrap_or(0),
                )));
            }
        }
        facets.sort_unstable_by(SmallSet::cmp_graded);
        Ok(Complex { labels, facets })
    }

    /// Faces contained in `subset`. Labels are kept.
    pub fn induced_subcomplex(&self, subset: SmallSet) -> Result<Complex, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        if !subset.is_subset(self.vertices()) {
            return Err(ComplexError::BadSubset);
        }
        let facets = self.facets.iter().map(|f| f.intersection(subset)).collect();
        Ok(Complex {
            labels: self.labels.clone(),
            facets: absorb(facets),
        })
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Result<Complex, ComplexError> {
        let d = self.dimension().ok_or(ComplexError::VoidComplex)?;
        if k < 0 || k > d {
            return Err(ComplexError::BadDimension { requested: k });
        }
        let size = (k + 1) as usize;
        let mut sets = Vec::new();
        for &f in &self.facets {
            if f.len() <= size {
                sets.push(f);
            } else {
                sets.extend(f.subsets().filter(|s| s.len() == size));
            }
        }
        Ok(Complex {
            labels: self.labels.clone(),
            facets: absorb(sets),
        })
    }

    /// Minimal non-faces over the vertex set of the complex.
    pub fn missing_faces(&self) -> Vec<SmallSet> {
        let by_size = self.faces_by_size();
        let verts = self.vertices();
        let mut out = Vec::new();
        for (s, faces) in by_size.iter().enumerate() {
            if s == 0 {
                continue;
            }
            for &f in faces {
                let above = f.max().map_or(0, |m| m + 1);
                for v in verts.iter().filter(|&v| v >= above) {
                    let t = f.with(v);
                    if self.contains_face(t) {
                        continue;
                    }
                    // Every other codimension-one subset must be a face.
                    let minimal = t.iter().all(|u| {
                        let sub = t.without(u);
                        by_size[s]
                            .binary_search_by_key(&sub.bits(), |x| x.bits())
                            .is_ok()
                    });
                    if minimal {
                        out.push(t);
                    }
                }
            }
        }
        out.sort_unstable_by(SmallSet::cmp_graded);
        out
    }

    /// Every minimal non-face has two vertices.
    pub fn is_flag(&self) -> bool {
        self.missing_faces().iter().all(|m| m.len() == 2)
    }

    /// Neighbour masks of the 1-skeleton, indexed by label position.
    pub fn skeleton_adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.labels.len()];
        for &f in &self.facets {
            for v in f.iter() {
                adj[v] |= f.without(v).bits();
            }
        }
        adj
    }

    /// The 1-skeleton as a graph on label positions.
    pub fn one_skeleton(&self) -> Result<Graph, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        let adj = self.skeleton_adjacency();
        let mut pairs = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            for v in SmallSet::from_bits(row).iter().filter(|&v| v > u) {
                pairs.push((u, v));
            }
        }
        Ok(Graph::new(self.labels.len(), &pairs)?)
    }

    /// Connected components of the vertex set, each as a set of positions.
    pub fn components(&self) -> Result<Vec<SmallSet>, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::VoidComplex);
        }
        let adj = self.skeleton_adjacency();
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(s) = left.min() {
            let mut comp = SmallSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = SmallSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(SmallSet::from_bits(adj[v]));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            left = left.difference(comp);
            out.push(comp);
        }
        Ok(out)
    }

    /// At most one component; `{∅}` counts as connected.
    pub fn is_connected(&self) -> Result<bool, ComplexError> {
        Ok(self.components()?.len() <= 1)
    }

    /// Largest distance in the 1-skeleton; `None` when disconnected.
    pub fn diameter(&self) -> Result<Option<usize>, ComplexError> {
        if !self.is_connected()? {
            return Ok(None);
        }
        let adj = self.skeleton_adjacency();
        let mut best = 0;
        for s in self.vertices().iter() {
            let mut dist = vec![usize::MAX; self.labels.len()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in SmallSet::from_bits(adj[u]).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        best = best.max(dist[w]);
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(Some(best))
    }

    /// Whether the 1-skeleton has an induced path on six vertices.
    pub fn has_induced_path6(&self) -> bool {
        let adj = self.skeleton_adjacency();
        fn extend(adj: &[u64], path: &mut Vec<usize>, used: u64, near: u64) -> bool {
            if path.len() == 6 {
                return true;
            }
            let last = *path.last().expect("path is nonempty");
            // `near` holds vertices adjacent to some path vertex other than the last.
            let cands = adj[last] & !used & !near;
            for w in SmallSet::from_bits(cands).iter() {
                path.push(w);
                let found = extend(adj, path, used | 1 << w, near | adj[last]);
                path.pop();
                if found {
                    return true;
                }
            }
            false
        }
        let mut path = Vec::with_capacity(6);
        for s in self.vertices().iter() {
            path.push(s);
            if extend(&adj, &mut path, 1 << s, 0) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Isomorphism as abstract complexes (labels ignored), decided by the
    /// canonical form of the vertex–facet incidence graph.
    pub fn is_isomorphic(&self, other: &Complex) -> Result<bool, ComplexError> {
        Ok(self.incidence_form()? == other.incidence_form()?)
    }

    fn incidence_form(&self) -> Result<Vec<u8>, ComplexError> {
        let verts: Vec<usize> = self.vertices().to_vec();
        let n = verts.len() + self.facets.len();
        if n > crate::canon::MAX_VERTICES {
            return Err(CanonError::TooLarge {
                vertices: n,
                cap: crate::canon::MAX_VERTICES,
            }
            .into());
        }
        let mut adj = vec![0u64; n];
        let mut colors = vec![0u32; n];
        for (j, f) in self.facets.iter().enumerate() {
            let fj = verts.len() + j;
            colors[fj] = 1;
            for (i, &v) in verts.iter().enumerate() {
                if f.contains(v) {
                    adj[i] |= 1 << fj;
                    adj[fj] |= 1 << i;
                }
            }
        }
        Ok(colored_canonical_form(&adj, &colors)?)
    }
}

/// Facets of the link of `face`: facets containing it, minus it.
pub(crate) fn link_facets(facets: &[SmallSet], face: SmallSet) -> Vec<SmallSet> {
    let mut out: Vec<SmallSet> = facets
        .iter()
        .filter(|f| face.is_subset(**f))
        .map(|f| f.difference(face))
        .collect();
    out.sort_unstable_by(SmallSet::cmp_graded);
    out
}

/// All faces of the complex generated by `facets`, grouped by size and
/// sorted by bit pattern within each group.
pub(crate) fn faces_by_size(facets: &[SmallSet]) -> Vec<Vec<SmallSet>> {
    let Some(top) = facets.iter().map(|f| f.len()).max() else {
        return Vec::new();
    };
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in facets {
        by_size[f.len()].push(f.bits());
    }
    // Each level is the facets of that size plus the codimension-one faces
    // of the level above.
    let mut out: Vec<Vec<SmallSet>> = vec![Vec::new(); top + 1];
    let mut above: Vec<u64> = Vec::new();
    for s in (0..=top).rev() {
        let mut level = core::mem::take(&mut by_size[s]);
        for &b in &above {
            let mut rest = b;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                level.push(b & !low);
                rest &= rest - 1;
            }
        }
        level.sort_unstable();
        level.dedup();
        out[s] = level.iter().map(|&b| SmallSet::from_bits(b)).collect();
        above = level;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary_of_triangle() -> Complex {
        Complex::from_facets(vec![0, 1, 2], &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn from_facets_absorbs() {
        let c = Complex::from_facets(vec![0, 1], &[vec![0, 1], vec![1]]).unwrap();
        assert_eq!(c.labeled_facets(), vec![vec![0, 1]]);
        assert!(Complex::from_facets(vec![], &[]).unwrap().is_void());
        let e = Complex::from_facets(vec![], &[vec![]]).unwrap();
        assert_eq!(e.dimension(), Some(-1));
        assert_eq!(e, Complex::empty_face());
        let again = Complex::from_index_facets(c.labels().to_vec(), c.facets().to_vec()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn matching_complex_examples() {
        let k32 = Complex::matching_complex(&Graph::complete_bipartite(3, 2).unwrap()).unwrap();
        assert_eq!(k32.f_vector().unwrap().nonempty(), &[6, 6]);
        assert_eq!(k32.diameter().unwrap(), Some(3));
        let hexagon = Complex::from_facets(
            (0..6).collect(),
            &[
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![3, 4],
                vec![4, 5],
                vec![5, 0],
            ],
        )
        .unwrap();
        assert!(k32.is_isomorphic(&hexagon).unwrap());
        let gamma = Complex::matching_complex(&Graph::banner()).unwrap();
        let p5 = Complex::matching_complex(&Graph::path(6).unwrap()).unwrap();
        let path5 = Complex::from_facets(
            (0..5).collect(),
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]],
        )
        .unwrap();
        assert!(gamma.is_isomorphic(&path5).unwrap());
        assert!(!p5.is_isomorphic(&path5).unwrap());
        let k4 = Complex::matching_complex(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(k4.facets().len(), 3);
        assert_eq!(k4.components().unwrap().len(), 3);
        assert_eq!(
            Complex::matching_complex(&Graph::empty()).unwrap(),
            Complex::empty_face()
        );
    }

    #[test]
    fn f_vectors() {
        let t = Complex::matching_complex(&Graph::complete_bipartite(4, 3).unwrap()).unwrap();
        let f = t.f_vector().unwrap();
        assert_eq!(f.nonempty(), &[12, 36, 24]);
        assert_eq!(f.euler_characteristic(), 0);
        assert_eq!(
            boundary_of_triangle().f_vector().unwrap().nonempty(),
            &[3, 3]
        );
        let sp3 = Complex::matching_complex(&Graph::spider(3).unwrap()).unwrap();
        assert_eq!(sp3.f_vector().unwrap().nonempty(), &[6, 9, 4]);
        assert_eq!(sp3.euler_characteristic().unwrap(), 1);
        assert_eq!(Complex::void().f_vector(), Err(ComplexError::VoidComplex));
    }

    #[test]
    fn links() {
        let b = boundary_of_triangle();
        let l = b.link(SmallSet::singleton(0)).unwrap();
        assert_eq!(l.labeled_facets(), vec![vec![1], vec![2]]);
        assert_eq!(b.link(SmallSet::EMPTY).unwrap(), b);
        for &f in b.facets() {
            assert_eq!(b.link(f).unwrap().facets(), &[SmallSet::EMPTY]);
        }
        assert_eq!(
            b.link(SmallSet::from_indices([0, 1, 2])),
            Err(ComplexError::FaceNotInComplex)
        );
    }

    #[test]
    fn joins() {
        let s0 = Complex::from_facets(vec![0, 1], &[vec![0], vec![1]]).unwrap();
        let c4 = s0.join(&s0).unwrap();
        assert_eq!(c4.labels(), &[0, 1, 2, 3]);
        assert_eq!(c4.f_vector().unwrap().nonempty(), &[4, 4]);
        let square = Complex::from_facets(
            (0..4).collect(),
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        assert!(c4.is_isomorphic(&square).unwrap());
        let b = boundary_of_triangle();
        assert_eq!(b.join(&Complex::empty_face()).unwrap(), b);
        assert!(b.join(&Complex::void()).unwrap().is_void());
    }

    #[test]
    fn flag_and_missing_faces() {
        let b = boundary_of_triangle();
        assert_eq!(b.missing_faces(), vec![SmallSet::from_indices([0, 1, 2])]);
        assert!(!b.is_flag());
        let simplex = Complex::from_facets(vec![0, 1, 2, 3], &[vec![0, 1, 2, 3]]).unwrap();
        assert!(simplex.missing_faces().is_empty());
        assert!(simplex.is_flag());
        let c4 = Complex::from_facets(
            (0..4).collect(),
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        assert_eq!(
            c4.missing_faces(),
            vec![
                SmallSet::from_indices([0, 2]),
                SmallSet::from_indices([1, 3])
            ]
        );
    }

    #[test]
    fn skeleton_and_purity() {
        let simplex = Complex::from_facets(vec![0, 1, 2, 3], &[vec![0, 1, 2, 3]]).unwrap();
        let sk = simplex.skeleton(1).unwrap();
        assert_eq!(sk.facets().len(), 6);
        assert_eq!(sk.one_skeleton().unwrap(), Graph::complete(4).unwrap());
        assert!(matches!(
            simplex.skeleton(4),
            Err(ComplexError::BadDimension { .. })
        ));
        let p4 = Complex::matching_complex(&Graph::path(4).unwrap()).unwrap();
        assert!(!p4.is_pure());
    }

    #[test]
    fn connectivity() {
        let c4 = Complex::matching_complex(&Graph::cycle(4).unwrap()).unwrap();
        assert!(!c4.is_connected().unwrap());
        assert_eq!(c4.diameter().unwrap(), None);
        assert_eq!(
            Complex::void().is_connected(),
            Err(ComplexError::VoidComplex)
        );
    }

    #[test]
    fn induced_paths() {
        let path = |n: i64, closed: bool| {
            let mut f: Vec<Vec<i64>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
            if closed {
                f.push(vec![n - 1, 0]);
            }
            Complex::from_facets((0..n).collect(), &f).unwrap()
        };
        assert!(path(6, false).has_induced_path6());
        assert!(!path(5, false).has_induced_path6());
        assert!(path(7, true).has_induced_path6());
        assert!(!path(6, true).has_induced_path6());
    }

    #[test]
    fn induced_subcomplex_examples() {
        let b = boundary_of_triangle();
        let sub = b
            .induced_subcomplex(SmallSet::from_indices([0, 1]))
            .unwrap();
        assert_eq!(sub.labeled_facets(), vec![vec![0, 1]]);
        assert_eq!(
            b.induced_subcomplex(SmallSet::from_indices([5])),
            Err(ComplexError::BadSubset)
        );
    }
}
