//! Homology manifolds, with and without boundary, and a coarse
//! classification by Betti numbers and boundary components.
//!
//! A pure `d`-complex is a homology manifold with boundary when every
//! nonempty face `σ` has a link with the homology of a `(d−|σ|)`-sphere or
//! of a ball, and the faces of the second kind, together with `∅`, form a
//! closed homology `(d−1)`-manifold. With no faces of the second kind the
//! complex is closed.

use core::fmt;

use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::SmallSet;
use crate::complex::{absorb, faces_by_size, link_facets, Complex};
use crate::homology::{betti_of_facets, BettiVector, FieldPrime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ManifoldStatus {
    NotPure,
    NotManifold,
    ClosedManifold,
    ManifoldWithBoundary,
}

impl ManifoldStatus {
    pub fn is_manifold(self) -> bool {
        matches!(
            self,
            ManifoldStatus::ClosedManifold | ManifoldStatus::ManifoldWithBoundary
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ManifoldStatus::NotPure => "NotPure",
            ManifoldStatus::NotManifold => "NotManifold",
            ManifoldStatus::ClosedManifold => "ClosedManifold",
            ManifoldStatus::ManifoldWithBoundary => "ManifoldWithBoundary",
        }
    }
}

impl fmt::Display for ManifoldStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A face whose link fails the manifold condition, with the link's Betti
/// numbers. When the failure is inside the boundary, the link is taken in
/// the boundary complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub face: SmallSet,
    pub face_labels: Vec<i64>,
    pub link_betti: BettiVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldVerdict {
    pub status: ManifoldStatus,
    /// `None` only for the void complex.
    pub dimension: Option<isize>,
    pub p: u32,
    /// Present iff `status` is `NotManifold`.
    pub witness: Option<Witness>,
    /// Faces with ball-homology links, plus `∅`, for manifold verdicts. `{∅}`
    /// for closed manifolds.
    pub boundary: Option<Complex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    /// The verdict is not a manifold verdict.
    NotAManifold { status: ManifoldStatus },
    /// The link-homology boundary differs from the span of the
    /// codimension-one faces lying in exactly one facet.
    CrossCheckMismatch {
        by_links: Vec<Vec<i64>>,
        by_facet_count: Vec<Vec<i64>>,
    },
}

impl fmt::Display for ManifoldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldError::NotAManifold { status } => {
                write!(f, "boundary requested for a complex with verdict {status}")
            }
            ManifoldError::CrossCheckMismatch {
                by_links,
                by_facet_count,
            } => write!(
                f,
                "boundary cross-check failed: link criterion gives facets {by_links:?}, facet count gives {by_facet_count:?}"
            ),
        }
    }
}

impl core::error::Error for ManifoldError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryComplex {
    pub complex: Complex,
    /// Connected components of the boundary; zero when it is `{∅}`.
    pub component_count: usize,
}

enum LinkKind {
    Sphere,
    Ball,
    Neither(BettiVector),
}

/// Facet membership as one bitset over facet indices per vertex, so that
/// links cost a few word operations per facet block instead of a scan.
struct Incidence<'a> {
    facets: &'a [SmallSet],
    words: usize,
    rows: Vec<u64>,
}

impl<'a> Incidence<'a> {
    fn new(facets: &'a [SmallSet]) -> Self {
        let words = facets.len().div_ceil(64);
        let top = facets
            .iter()
            .filter_map(|f| f.max())
            .max()
            .map_or(0, |m| m + 1);
        let mut rows = alloc::vec![0u64; words * top];
        for (i, f) in facets.iter().enumerate() {
            for v in f.iter() {
                rows[v * words + i / 64] |= 1 << (i % 64);
            }
        }
        Incidence {
            facets,
            words,
            rows,
        }
    }

    /// Link facets of a nonempty face, in the order of `facets`.
    fn link(&self, face: SmallSet) -> Vec<SmallSet> {
        let mut vs = face.iter();
        let first = vs.next().expect("face is nonempty");
        let mut acc: Vec<u64> = self.rows[first * self.words..(first + 1) * self.words].to_vec();
        for v in vs {
            for (a, r) in acc.iter_mut().zip(&self.rows[v * self.words..]) {
                *a &= r;
            }
        }
        let mut out = Vec::new();
        for (w, &bits) in acc.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let i = w * 64 + b.trailing_zeros() as usize;
                out.push(self.facets[i].difference(face));
                b &= b - 1;
            }
        }
        out
    }
}

/// Homology of a pure 1-dimensional complex given by its edges, from
/// vertex, edge and component counts.
fn graph_betti(edges: &[SmallSet], p: FieldPrime) -> BettiVector {
    let mut verts: Vec<usize> = edges.iter().flat_map(|e| e.iter()).collect();
    verts.sort_unstable();
    verts.dedup();
    let index = |v: usize| verts.binary_search(&v).expect("endpoint is a vertex");
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = verts.len();
    for e in edges {
        let a = root(&mut parent, index(e.min().expect("edge")));
        let b = root(&mut parent, index(e.max().expect("edge")));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    BettiVector {
        p: p.get(),
        betti: alloc::vec![0, components - 1, edges.len() + components - verts.len()],
    }
}

/// Classifies the link of `face`, which has dimension `link_dim`.
fn link_kind(inc: &Incidence<'_>, face: SmallSet, link_dim: isize, p: FieldPrime) -> LinkKind {
    // Facets and ridges: the link is {∅} or a set of points.
    if link_dim == -1 {
        return LinkKind::Sphere;
    }
    let link = inc.link(face);
    if link_dim == 0 {
        return match link.len() {
            1 => LinkKind::Ball,
            2 => LinkKind::Sphere,
            k => LinkKind::Neither(BettiVector {
                p: p.get(),
                betti: alloc::vec![0, k - 1],
            }),
        };
    }
    let b = if link_dim == 1 {
        graph_betti(&link, p)
    } else {
        betti_of_facets(&link, p)
    };
    if b.is_sphere(link_dim) {
        LinkKind::Sphere
    } else if b.is_acyclic() {
        LinkKind::Ball
    } else {
        LinkKind::Neither(b)
    }
}

fn witness(c_labels: &[i64], face: SmallSet, link_betti: BettiVector) -> Witness {
    Witness {
        face,
        face_labels: face.iter().map(|i| c_labels[i]).collect(),
        link_betti,
    }
}

/// Decides the manifold condition over GF(p). Faces are examined by size,
/// then lexicographically; the witness is the first failing face.
pub fn check_manifold(c: &Complex, p: FieldPrime) -> ManifoldVerdict {
    let dimension = c.dimension();
    let not_pure = ManifoldVerdict {
        status: ManifoldStatus::NotPure,
        dimension,
        p: p.get(),
        witness: None,
        boundary: None,
    };
    let Some(d) = dimension else {
        return not_pure;
    };
    if !c.is_pure() {
        return not_pure;
    }
    let facets = c.facets();
    let inc = Incidence::new(facets);
    let mut faces = faces_by_size(facets);
    let mut ball_faces = Vec::new();
    for (s, group) in faces.iter_mut().enumerate().skip(1) {
        group.sort_unstable_by(SmallSet::cmp_graded);
        let link_dim = d - s as isize;
        for &face in group.iter() {
            match link_kind(&inc, face, link_dim, p) {
                LinkKind::Sphere => {}
                LinkKind::Ball => ball_faces.push(face),
                LinkKind::Neither(b) => {
                    return ManifoldVerdict {
                        status: ManifoldStatus::NotManifold,
                        dimension,
                        p: p.get(),
                        witness: Some(witness(c.labels(), face, b)),
                        boundary: None,
                    }
                }
            }
        }
    }
    let labels = c.labels().to_vec();
    if ball_faces.is_empty() {
        return ManifoldVerdict {
            status: ManifoldStatus::ClosedManifold,
            dimension,
            p: p.get(),
            witness: None,
            boundary: Some(
                Complex::from_index_facets(labels, alloc::vec![SmallSet::EMPTY])
                    .expect("labels come from a valid complex"),
            ),
        };
    }
    let fail = |face: SmallSet, betti: BettiVector| ManifoldVerdict {
        status: ManifoldStatus::NotManifold,
        dimension,
        p: p.get(),
        witness: Some(witness(c.labels(), face, betti)),
        boundary: None,
    };
    // The boundary set must be closed under taking faces.
    let mut sorted_ball: Vec<u64> = ball_faces.iter().map(|f| f.bits()).collect();
    sorted_ball.sort_unstable();
    for &f in &ball_faces {
        for sub in f.subsets() {
            if !sub.is_empty() && sorted_ball.binary_search(&sub.bits()).is_err() {
                let link = link_facets(facets, sub);
                return fail(sub, betti_of_facets(&link, p));
            }
        }
    }
    let boundary =
        Complex::from_index_facets(labels, ball_faces).expect("labels come from a valid complex");
    // It must be a closed (d−1)-manifold.
    let inner = check_manifold(&boundary, p);
    let closed = inner.status == ManifoldStatus::ClosedManifold && inner.dimension == Some(d - 1);
    if !closed {
        return match inner.witness {
            Some(w) => fail(w.face, w.link_betti),
            None => {
                // Impure or of the wrong dimension: report the smallest facet.
                let f = boundary.facets()[0];
                let link = link_facets(facets, f);
                fail(f, betti_of_facets(&link, p))
            }
        };
    }
    ManifoldVerdict {
        status: ManifoldStatus::ManifoldWithBoundary,
        dimension,
        p: p.get(),
        witness: None,
        boundary: Some(boundary),
    }
}

/// The boundary of a manifold, checked against the facet-count description
/// for `d ≥ 1`.
pub fn boundary_complex(c: &Complex, p: FieldPrime) -> Result<BoundaryComplex, ManifoldError> {
    let verdict = check_manifold(c, p);
    boundary_of(c, &verdict)
}

/// As [`boundary_complex`], reusing an existing verdict.
pub fn boundary_of(
    c: &Complex,
    verdict: &ManifoldVerdict,
) -> Result<BoundaryComplex, ManifoldError> {
    let Some(boundary) = verdict.boundary.clone() else {
        return Err(ManifoldError::NotAManifold {
            status: verdict.status,
        });
    };
    let d = verdict
        .dimension
        .expect("manifold verdicts have a dimension");
    if d >= 1 {
        let ridges = faces_by_size(c.facets())
            .swap_remove(d as usize)
            .into_iter()
            .filter(|&r| c.facets().iter().filter(|f| r.is_subset(**f)).count() == 1)
            .collect::<Vec<_>>();
        let by_count = if ridges.is_empty() {
            alloc::vec![SmallSet::EMPTY]
        } else {
            absorb(ridges)
        };
        if by_count.as_slice() != boundary.facets() {
            let other = Complex::from_index_facets(c.labels().to_vec(), by_count)
                .expect("labels come from a valid complex");
            return Err(ManifoldError::CrossCheckMismatch {
                by_links: boundary.labeled_facets(),
                by_facet_count: other.labeled_facets(),
            });
        }
    }
    let component_count = boundary.components().expect("boundary is nonvoid").len();
    Ok(BoundaryComplex {
        complex: boundary,
        component_count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ManifoldClass {
    Sphere(isize),
    Ball(isize),
    Torus,
    MoebiusStrip,
    Annulus,
    TorusMinusDisk,
    OtherSurface,
    OtherManifold,
    NotManifold,
}

impl ManifoldClass {
    pub fn label(self) -> String {
        use alloc::format;
        match self {
            ManifoldClass::Sphere(d) => format!("Sphere({d})"),
            ManifoldClass::Ball(d) => format!("Ball({d})"),
            ManifoldClass::Torus => "Torus".into(),
            ManifoldClass::MoebiusStrip => "MoebiusStrip".into(),
            ManifoldClass::Annulus => "Annulus".into(),
            ManifoldClass::TorusMinusDisk => "TorusMinusDisk".into(),
            ManifoldClass::OtherSurface => "OtherSurface".into(),
            ManifoldClass::OtherManifold => "OtherManifold".into(),
            ManifoldClass::NotManifold => "NotManifold".into(),
        }
    }

    /// Inverse of [`ManifoldClass::label`].
    pub fn parse(s: &str) -> Option<ManifoldClass> {
        let s = s.trim();
        let arg = |prefix: &str| {
            s.strip_prefix(prefix)?
                .strip_suffix(')')?
                .trim()
                .parse::<isize>()
                .ok()
        };
        if let Some(d) = arg("Sphere(") {
            return Some(ManifoldClass::Sphere(d));
        }
        if let Some(d) = arg("Ball(") {
            return Some(ManifoldClass::Ball(d));
        }
        Some(match s {
            "Torus" => ManifoldClass::Torus,
            "MoebiusStrip" => ManifoldClass::MoebiusStrip,
            "Annulus" => ManifoldClass::Annulus,
            "TorusMinusDisk" => ManifoldClass::TorusMinusDisk,
            "OtherSurface" => ManifoldClass::OtherSurface,
            "OtherManifold" => ManifoldClass::OtherManifold,
            "NotManifold" => ManifoldClass::NotManifold,
            _ => return None,
        })
    }

    /// The dimension carried by the class, where it determines one.
    pub fn dimension(self) -> Option<isize> {
        match self {
            ManifoldClass::Sphere(d) | ManifoldClass::Ball(d) => Some(d),
            ManifoldClass::Torus
            | ManifoldClass::MoebiusStrip
            | ManifoldClass::Annulus
            | ManifoldClass::TorusMinusDisk
            | ManifoldClass::OtherSurface => Some(2),
            ManifoldClass::OtherManifold | ManifoldClass::NotManifold => None,
        }
    }
}

impl fmt::Display for ManifoldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Everything [`classify`] looked at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: ManifoldClass,
    /// Betti numbers at the two primes, for nonvoid complexes.
    pub betti: Option<(BettiVector, BettiVector)>,
    pub boundary_components: Option<usize>,
    /// Manifold with all reduced Betti numbers zero at both primes, without
    /// asking anything of the boundary.
    pub literal_ball: bool,
}

/// The class of a complex given its verdict. See [`classification`].
pub fn classify(
    c: &Complex,
    verdict: &ManifoldVerdict,
    primes: (FieldPrime, FieldPrime),
) -> ManifoldClass {
    classification(c, verdict, primes).class
}

/// Decision tree: sphere homology and closed → `Sphere(d)`; acyclic with a
/// homology `(d−1)`-sphere boundary → `Ball(d)`; closed surface with
/// `β̃ = (0,2,1)` → `Torus`; surfaces with boundary by `(β̃_1, boundary
/// components)`; everything else `OtherSurface` in dimension two and
/// `OtherManifold` otherwise. Conditions on Betti numbers must hold at both
/// primes.
pub fn classification(
    c: &Complex,
    verdict: &ManifoldVerdict,
    primes: (FieldPrime, FieldPrime),
) -> Classification {
    let betti = (!c.is_void()).then(|| {
        (
            betti_of_facets(c.facets(), primes.0),
            betti_of_facets(c.facets(), primes.1),
        )
    });
    let not_manifold = |betti| Classification {
        class: ManifoldClass::NotManifold,
        betti,
        boundary_components: None,
        literal_ball: false,
    };
    if !verdict.status.is_manifold() {
        return not_manifold(betti);
    }
    let (Some(d), Some(boundary), Some((b1, b2))) =
        (verdict.dimension, verdict.boundary.as_ref(), betti.as_ref())
    else {
        return not_manifold(betti);
    };
    let components = boundary.components().expect("boundary is nonvoid").len();
    let closed = verdict.status == ManifoldStatus::ClosedManifold;
    let both = |f: &dyn Fn(&BettiVector) -> bool| f(b1) && f(b2);
    let acyclic = both(&|b| b.is_acyclic());
    let class = if closed && both(&|b| b.is_sphere(d)) {
        ManifoldClass::Sphere(d)
    } else if acyclic
        && betti_of_facets(boundary.facets(), primes.0).is_sphere(d - 1)
        && betti_of_facets(boundary.facets(), primes.1).is_sphere(d - 1)
    {
        ManifoldClass::Ball(d)
    } else if d == 2 {
        let surface = |b: &BettiVector| b.get(0) == 0 && b.get(2) == 0;
        if closed && both(&|b| b.from_zero() == [0, 2, 1]) {
            ManifoldClass::Torus
        } else if !closed && both(&surface) && b1.get(1) == b2.get(1) {
            match (b1.get(1), components) {
                (1, 1) => ManifoldClass::MoebiusStrip,
                (1, 2) => ManifoldClass::Annulus,
                (2, 1) => ManifoldClass::TorusMinusDisk,
                _ => ManifoldClass::OtherSurface,
            }
        } else {
            ManifoldClass::OtherSurface
        }
    } else {
        ManifoldClass::OtherManifold
    };
    Classification {
        class,
        literal_ball: acyclic,
        betti,
        boundary_components: Some(components),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    const PRIMES: (FieldPrime, FieldPrime) = (FieldPrime::TWO, FieldPrime::THREE);

    fn m(g: &Graph) -> Complex {
        Complex::matching_complex(g).unwrap()
    }

    fn class_of(g: &Graph) -> ManifoldClass {
        let c = m(g);
        let v = check_manifold(&c, FieldPrime::TWO);
        classify(&c, &v, PRIMES)
    }

    #[test]
    fn torus() {
        let c = m(&Graph::complete_bipartite(4, 3).unwrap());
        let v = check_manifold(&c, FieldPrime::THREE);
        assert_eq!(v.status, ManifoldStatus::ClosedManifold);
        assert_eq!(v.dimension, Some(2));
        assert_eq!(classify(&c, &v, PRIMES), ManifoldClass::Torus);
        let b = boundary_of(&c, &v).unwrap();
        assert_eq!(b.component_count, 0);
    }

    #[test]
    fn buchsbaum_non_manifold() {
        let g = Graph::disjoint_union(&[Graph::star(3).unwrap(), Graph::path(2).unwrap()]);
        let v = check_manifold(&m(&g), FieldPrime::TWO);
        assert_eq!(v.status, ManifoldStatus::NotManifold);
        let w = v.witness.unwrap();
        // The pendant edge is a cone point whose link is three points.
        assert_eq!(w.face_labels, alloc::vec![3]);
        assert_eq!(w.link_betti.from_zero(), &[2]);
    }

    #[test]
    fn spider_three_is_a_disk() {
        let c = m(&Graph::spider(3).unwrap());
        let v = check_manifold(&c, FieldPrime::TWO);
        assert_eq!(v.status, ManifoldStatus::ManifoldWithBoundary);
        assert_eq!(v.dimension, Some(2));
        assert_eq!(classify(&c, &v, PRIMES), ManifoldClass::Ball(2));
    }

    #[test]
    fn banner_boundary_is_two_points() {
        let c = m(&Graph::banner());
        let b = boundary_complex(&c, FieldPrime::TWO).unwrap();
        assert_eq!(b.complex.facets().len(), 2);
        assert!(b.complex.facets().iter().all(|f| f.len() == 1));
        assert_eq!(b.component_count, 2);
        let hexagon = m(&Graph::complete_bipartite(3, 2).unwrap());
        let b = boundary_complex(&hexagon, FieldPrime::TWO).unwrap();
        assert_eq!(b.complex.facets(), &[SmallSet::EMPTY]);
    }

    #[test]
    fn surface_classes() {
        assert_eq!(
            class_of(&Graph::cycle(7).unwrap()),
            ManifoldClass::MoebiusStrip
        );
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            class_of(&Graph::disjoint_union(&[p3.clone(), p3.clone(), p3])),
            ManifoldClass::Sphere(2)
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(class_of(&Graph::empty()), ManifoldClass::Sphere(-1));
        assert_eq!(class_of(&Graph::path(2).unwrap()), ManifoldClass::Ball(0));
        assert_eq!(class_of(&Graph::path(3).unwrap()), ManifoldClass::Sphere(0));
        assert_eq!(
            class_of(&Graph::star(3).unwrap()),
            ManifoldClass::OtherManifold
        );
        assert_eq!(
            class_of(&Graph::cycle(4).unwrap()),
            ManifoldClass::OtherManifold
        );
        assert_eq!(
            class_of(&Graph::path(4).unwrap()),
            ManifoldClass::NotManifold
        );
        let v = check_manifold(&Complex::void(), FieldPrime::TWO);
        assert_eq!(v.status, ManifoldStatus::NotPure);
    }

    #[test]
    fn class_labels_round_trip() {
        for c in [
            ManifoldClass::Sphere(-1),
            ManifoldClass::Ball(7),
            ManifoldClass::Torus,
            ManifoldClass::TorusMinusDisk,
            ManifoldClass::NotManifold,
        ] {
            assert_eq!(ManifoldClass::parse(&c.label()), Some(c));
        }
    }
}
