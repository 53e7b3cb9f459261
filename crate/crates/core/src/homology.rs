//! Reduced simplicial homology over prime fields.
//!
//! Chains are indexed by face size: faces of size `s` span `C_{s-1}`, the
//! empty face spans `C_{-1}`, and `∂_0` is the augmentation. Ranks come from
//! column reduction of the boundary matrices, highest dimension first. A
//! column whose face is the pivot of a reduced column one dimension up is a
//! combination of earlier columns and is skipped without reduction.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::SmallSet;
use crate::complex::{absorb, faces_by_size, Complex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyError {
    NotPrime { p: u32 },
    VoidComplex,
    BadDimension { requested: isize },
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::NotPrime { p } => {
                write!(f, "{p} is not a supported prime (need a prime below 65536)")
            }
            HomologyError::VoidComplex => write!(f, "homology of the void complex is undefined"),
            HomologyError::BadDimension { requested } => {
                write!(f, "dimension {requested} is out of range")
            }
        }
    }
}

impl core::error::Error for HomologyError {}

/// A prime `p < 2^16`; products of residues fit in a `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPrime(u32);

impl FieldPrime {
    pub const TWO: FieldPrime = FieldPrime(2);
    pub const THREE: FieldPrime = FieldPrime(3);

    pub fn new(p: u32) -> Result<FieldPrime, HomologyError> {
        let prime = (2..1 << 16).contains(&p)
            && (2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(FieldPrime(p))
        } else {
            Err(HomologyError::NotPrime { p })
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.0
    }

    fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    fn inv(self, a: u32) -> u32 {
        let mut result = 1u32;
        let mut base = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

impl fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ..., β̃_d` over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    pub p: u32,
    pub betti: Vec<usize>,
}

impl BettiVector {
    /// `β̃_k`; zero outside the stored range.
    pub fn get(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.betti.get(i).copied())
            .unwrap_or(0)
    }

    /// `β̃_0, β̃_1, ...`, dropping `β̃_{-1}`.
    pub fn from_zero(&self) -> &[usize] {
        &self.betti[1..]
    }

    /// `β̃_d = 1` and every other entry zero.
    pub fn is_sphere(&self, d: isize) -> bool {
        self.betti
            .iter()
            .enumerate()
            .all(|(i, &b)| b == usize::from(i as isize - 1 == d))
            && d + 1 < self.betti.len() as isize
            && d >= -1
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// `Σ_{k≥-1} (−1)^k β̃_k`, which equals `χ − 1`.
    pub fn alternating_sum(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// A boundary matrix `∂_k : C_k → C_{k-1}` stored by sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub k: isize,
    pub p: u32,
    pub rows: usize,
    /// `columns[j]` lists `(row, value)` with nonzero values, rows increasing.
    pub columns: Vec<Vec<(usize, u32)>>,
    /// Row faces and column faces, each sorted by bit pattern.
    pub row_faces: Vec<SmallSet>,
    pub col_faces: Vec<SmallSet>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[i][j] = v;
            }
        }
        m
    }
}

fn index_of(faces: &[SmallSet], f: SmallSet) -> usize {
    faces
        .binary_search_by_key(&f.bits(), |x| x.bits())
        .expect("every boundary face is a face")
}

/// `∂_k` over GF(p); `k = 0` is the augmentation row.
pub fn boundary_matrix(
    c: &Complex,
    k: isize,
    p: FieldPrime,
) -> Result<BoundaryMatrix, HomologyError> {
    let d = c.dimension().ok_or(HomologyError::VoidComplex)?;
    if k < 0 || k > d {
        return Err(HomologyError::BadDimension { requested: k });
    }
    let mut by_size = c.faces_by_size();
    let size = (k + 1) as usize;
    let col_faces = core::mem::take(&mut by_size[size]);
    let row_faces = core::mem::take(&mut by_size[size - 1]);
    let columns = col_faces
        .iter()
        .map(|&f| {
            let mut col: Vec<(usize, u32)> = f
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let sign = if i % 2 == 0 { 1 } else { p.neg(1) };
                    (index_of(&row_faces, f.without(v)), sign)
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    Ok(BoundaryMatrix {
        k,
        p: p.get(),
        rows: row_faces.len(),
        columns,
        row_faces,
        col_faces,
    })
}

/// Reduced Betti numbers of a nonvoid complex.
pub fn betti_reduced(c: &Complex, p: FieldPrime) -> Result<BettiVector, HomologyError> {
    if c.is_void() {
        return Err(HomologyError::VoidComplex);
    }
    Ok(betti_of_facets(c.facets(), p))
}

/// `β̃` of `c` equals that of a `d`-sphere. False for the void complex.
pub fn has_sphere_homology(c: &Complex, d: isize, p: FieldPrime) -> bool {
    !c.is_void() && betti_of_facets(c.facets(), p).is_sphere(d)
}

/// Every reduced Betti number vanishes. False for the void complex.
pub fn has_ball_homology(c: &Complex, p: FieldPrime) -> bool {
    !c.is_void() && betti_of_facets(c.facets(), p).is_acyclic()
}

/// Reduced Betti numbers of the complex generated by nonempty `facets`.
pub(crate) fn betti_of_facets(facets: &[SmallSet], p: FieldPrime) -> BettiVector {
    debug_assert!(!facets.is_empty());
    let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
    let core = strong_core(facets.to_vec());
    let mut b = betti_by_reduction(&core, p);
    b.betti.resize(top + 1, 0);
    b
}

/// Repeatedly deletes a dominated vertex: one whose star lies in the star
/// of another vertex. Its link is then a cone, so the deletion is a homotopy
/// equivalence and every Betti number is preserved.
pub(crate) fn strong_core(mut facets: Vec<SmallSet>) -> Vec<SmallSet> {
    loop {
        let verts = facets.iter().fold(SmallSet::EMPTY, |a, f| a.union(*f));
        let dominated = verts.iter().find(|&v| {
            let common = facets
                .iter()
                .filter(|f| f.contains(v))
                .fold(verts, |a, f| a.intersection(*f));
            common.len() > 1
        });
        let Some(v) = dominated else {
            return facets;
        };
        let shrunk: Vec<SmallSet> = facets.iter().map(|f| f.without(v)).collect();
        facets = absorb(shrunk);
    }
}

fn betti_by_reduction(facets: &[SmallSet], p: FieldPrime) -> BettiVector {
    let faces = faces_by_size(facets);
    let top = faces.len() - 1;
    // rank[s] = rank of the map from size-s chains to size-(s-1) chains.
    let mut rank = vec![0usize; top + 2];
    let mut cleared: Vec<bool> = Vec::new();
    for s in (1..=top).rev() {
        let (r, pivots) = if p.get() == 2 {
            reduce_gf2(&faces[s], &faces[s - 1], &cleared)
        } else {
            reduce_gfp(&faces[s], &faces[s - 1], &cleared, p)
        };
        rank[s] = r;
        cleared = pivots;
    }
    let betti = (0..=top)
        .map(|s| faces[s].len() - rank[s] - rank[s + 1])
        .collect();
    BettiVector { p: p.get(), betti }
}

const NONE: u32 = u32::MAX;

/// Column reduction over GF(2). Returns the rank and, per row, whether it
/// became a pivot.
fn reduce_gf2(cols: &[SmallSet], rows: &[SmallSet], skip: &[bool]) -> (usize, Vec<bool>) {
    let mut pivot_col: Vec<u32> = vec![NONE; rows.len()];
    let mut store: Vec<Vec<u32>> = Vec::new();
    let mut scratch: Vec<u32> = Vec::new();
    let mut col: Vec<u32> = Vec::new();
    for (j, &f) in cols.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) {
            continue;
        }
        // Dropping larger vertices gives smaller rows, so reverse to sort.
        col.clear();
        col.extend(f.iter().map(|v| index_of(rows, f.without(v)) as u32));
        col.reverse();
        while let Some(&low) = col.last() {
            let pc = pivot_col[low as usize];
            if pc == NONE {
                pivot_col[low as usize] = store.len() as u32;
                store.push(core::mem::take(&mut col));
                break;
            }
            symmetric_difference(&col, &store[pc as usize], &mut scratch);
            core::mem::swap(&mut col, &mut scratch);
        }
    }
    let rank = store.len();
    (rank, pivot_col.iter().map(|&c| c != NONE).collect())
}

fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Column reduction over GF(p), p odd. Stored pivot columns are scaled so
/// their lowest entry is 1.
fn reduce_gfp(
    cols: &[SmallSet],
    rows: &[SmallSet],
    skip: &[bool],
    p: FieldPrime,
) -> (usize, Vec<bool>) {
    let mut pivot_col: Vec<u32> = vec![NONE; rows.len()];
    let mut store: Vec<Vec<(u32, u32)>> = Vec::new();
    let mut scratch: Vec<(u32, u32)> = Vec::new();
    let mut col: Vec<(u32, u32)> = Vec::new();
    for (j, &f) in cols.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) {
            continue;
        }
        col.clear();
        col.extend(f.iter().enumerate().map(|(i, v)| {
            let sign = if i % 2 == 0 { 1 } else { p.neg(1) };
            (index_of(rows, f.without(v)) as u32, sign)
        }));
        col.reverse();
        while let Some(&(low, val)) = col.last() {
            let pc = pivot_col[low as usize];
            if pc == NONE {
                let inv = p.inv(val);
                for e in col.iter_mut() {
                    e.1 = p.mul(e.1, inv);
                }
                pivot_col[low as usize] = store.len() as u32;
                store.push(core::mem::take(&mut col));
                break;
            }
            // col -= val * pivot
            axpy(&col, &store[pc as usize], p.neg(val), p, &mut scratch);
            core::mem::swap(&mut col, &mut scratch);
        }
    }
    let rank = store.len();
    (rank, pivot_col.iter().map(|&c| c != NONE).collect())
}

/// `out = a + factor * b`, dropping zeros.
fn axpy(a: &[(u32, u32)], b: &[(u32, u32)], factor: u32, p: FieldPrime, out: &mut Vec<(u32, u32)>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(u32::MAX, |e| e.0);
        let rb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i]);
            i += 1;
        } else if rb < ra {
            out.push((rb, p.mul(factor, b[j].1)));
            j += 1;
        } else {
            let v = (a[i].1 + p.mul(factor, b[j].1)) % p.get();
            if v != 0 {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn simplex(n: i64) -> Complex {
        Complex::from_facets((0..n).collect(), &[(0..n).collect()]).unwrap()
    }

    fn sphere_boundary(n: i64) -> Complex {
        let facets: Vec<Vec<i64>> = (0..n)
            .map(|skip| (0..n).filter(|&v| v != skip).collect())
            .collect();
        Complex::from_facets((0..n).collect(), &facets).unwrap()
    }

    #[test]
    fn primes() {
        assert!(FieldPrime::new(2).is_ok());
        assert!(FieldPrime::new(65521).is_ok());
        assert!(FieldPrime::new(4).is_err());
        assert!(FieldPrime::new(1).is_err());
        assert!(FieldPrime::new(65537).is_err());
        let p = FieldPrime::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
    }

    #[test]
    fn edge_boundary_signs() {
        let edge = simplex(2);
        let m = boundary_matrix(&edge, 1, FieldPrime::THREE).unwrap();
        assert_eq!(m.to_dense(), vec![vec![2], vec![1]]);
        let aug = boundary_matrix(&edge, 0, FieldPrime::THREE).unwrap();
        assert_eq!(aug.to_dense(), vec![vec![1, 1]]);
        assert!(matches!(
            boundary_matrix(&edge, 2, FieldPrime::TWO),
            Err(HomologyError::BadDimension { .. })
        ));
    }

    #[test]
    fn triangle_top_boundary() {
        let m = boundary_matrix(&simplex(3), 2, FieldPrime::TWO).unwrap();
        assert_eq!(m.to_dense(), vec![vec![1], vec![1], vec![1]]);
    }

    #[test]
    fn golden_betti() {
        for p in [FieldPrime::TWO, FieldPrime::THREE] {
            assert_eq!(
                betti_reduced(&simplex(4), p).unwrap().betti,
                vec![0, 0, 0, 0, 0]
            );
            assert!(betti_reduced(&sphere_boundary(4), p).unwrap().is_sphere(2));
            assert_eq!(
                betti_reduced(&Complex::empty_face(), p).unwrap().betti,
                vec![1]
            );
            let c5 = Complex::matching_complex(&Graph::cycle(5).unwrap()).unwrap();
            assert_eq!(betti_reduced(&c5, p).unwrap().from_zero(), &[0, 1]);
            let torus =
                Complex::matching_complex(&Graph::complete_bipartite(4, 3).unwrap()).unwrap();
            assert_eq!(betti_reduced(&torus, p).unwrap().from_zero(), &[0, 2, 1]);
        }
        assert_eq!(
            betti_reduced(&Complex::void(), FieldPrime::TWO),
            Err(HomologyError::VoidComplex)
        );
    }

    #[test]
    fn projective_plane_depends_on_field() {
        // Six-vertex RP^2.
        let facets = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let facets: Vec<Vec<i64>> = facets.iter().map(|f| f.to_vec()).collect();
        let rp2 = Complex::from_facets((0..6).collect(), &facets).unwrap();
        assert_eq!(
            betti_reduced(&rp2, FieldPrime::TWO).unwrap().from_zero(),
            &[0, 1, 1]
        );
        assert_eq!(
            betti_reduced(&rp2, FieldPrime::THREE).unwrap().from_zero(),
            &[0, 0, 0]
        );
    }

    #[test]
    fn predicates() {
        let two_p3 = Graph::disjoint_union(&[Graph::path(3).unwrap(), Graph::path(3).unwrap()]);
        let m = Complex::matching_complex(&two_p3).unwrap();
        assert!(has_sphere_homology(&m, 1, FieldPrime::TWO));
        let sp4 = Complex::matching_complex(&Graph::spider(4).unwrap()).unwrap();
        assert!(has_ball_homology(&sp4, FieldPrime::THREE));
        let path = Complex::from_facets(
            (0..6).collect(),
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]],
        )
        .unwrap();
        assert!(!has_sphere_homology(&path, 1, FieldPrime::TWO));
        assert!(has_ball_homology(&path, FieldPrime::TWO));
        assert!(!has_ball_homology(&Complex::void(), FieldPrime::TWO));
        assert!(!has_sphere_homology(&Complex::void(), -1, FieldPrime::TWO));
        assert!(has_sphere_homology(
            &Complex::empty_face(),
            -1,
            FieldPrime::TWO
        ));
    }
}
