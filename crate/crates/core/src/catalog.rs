//! Known answers: the basic sphere and ball graphs, closed-form predictions
//! for their disjoint unions, and a table of exceptional graphs.
//!
//! Joins of homology spheres are spheres and a join with at least one ball
//! factor is a ball, so a disjoint union of basic graphs has a predicted
//! class and dimension. Each basic component contributes a fixed amount to
//! `dim + 1`:
//!
//! | graph      | complex         | contribution |
//! |------------|-----------------|--------------|
//! | `P3`       | `S^0`           | 1            |
//! | `C5`       | pentagon        | 2            |
//! | `K32`      | hexagon         | 2            |
//! | `P2`       | point           | 1            |
//! | `Gamma`    | path on 5 vertices | 2         |
//! | `Sp_k`     | `(k−1)`-ball    | k            |

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::canon::canonical_form_with_cap;
use crate::graph::Graph;
use crate::manifold::ManifoldClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicGraphKind {
    P2,
    P3,
    C5,
    K32,
    Gamma,
    /// `k ≥ 2`; `Spider(2)` is the path on five vertices.
    Spider(usize),
}

impl BasicGraphKind {
    pub fn graph(self) -> Graph {
        match self {
            BasicGraphKind::P2 => Graph::path(2).expect("valid"),
            BasicGraphKind::P3 => Graph::path(3).expect("valid"),
            BasicGraphKind::C5 => Graph::cycle(5).expect("valid"),
            BasicGraphKind::K32 => Graph::complete_bipartite(3, 2).expect("valid"),
            BasicGraphKind::Gamma => Graph::banner(),
            BasicGraphKind::Spider(k) => Graph::spider(k).expect("spider needs k >= 2"),
        }
    }

    /// Whether the matching complex is a sphere (otherwise a ball).
    pub fn is_sphere(self) -> bool {
        matches!(
            self,
            BasicGraphKind::P3 | BasicGraphKind::C5 | BasicGraphKind::K32
        )
    }

    /// Dimension of the matching complex plus one.
    pub fn weight(self) -> isize {
        match self {
            BasicGraphKind::P2 | BasicGraphKind::P3 => 1,
            BasicGraphKind::C5 | BasicGraphKind::K32 | BasicGraphKind::Gamma => 2,
            BasicGraphKind::Spider(k) => k as isize,
        }
    }

    pub fn name(self) -> alloc::string::String {
        use alloc::string::ToString;
        match self {
            BasicGraphKind::P2 => "P2".to_string(),
            BasicGraphKind::P3 => "P3".to_string(),
            BasicGraphKind::C5 => "C5".to_string(),
            BasicGraphKind::K32 => "K32".to_string(),
            BasicGraphKind::Gamma => "Gamma".to_string(),
            BasicGraphKind::Spider(k) => alloc::format!("Sp{k}"),
        }
    }

    /// A remark on the kind, if any.
    pub fn note(self) -> Option<&'static str> {
        match self {
            BasicGraphKind::Spider(2) => Some("Sp2 is isomorphic to P5"),
            _ => None,
        }
    }
}

impl fmt::Display for BasicGraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Recognizes a connected basic graph. Spiders are detected structurally:
/// a centre of degree `k` whose neighbours have degree two and lead to
/// distinct leaves.
pub fn recognize_basic(g: &Graph) -> Option<BasicGraphKind> {
    let g = g.without_isolated();
    if g.edge_count() == 0 || !g.is_connected() {
        return None;
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    let small = [
        BasicGraphKind::P2,
        BasicGraphKind::P3,
        BasicGraphKind::C5,
        BasicGraphKind::K32,
        BasicGraphKind::Gamma,
        BasicGraphKind::Spider(2),
    ];
    for kind in small {
        let h = kind.graph();
        if h.vertex_count() == n && h.edge_count() == m && isomorphic(&g, &h) {
            return Some(kind);
        }
    }
    if n < 7 || n % 2 == 0 || m != n - 1 {
        return None;
    }
    let k = (n - 1) / 2;
    let deg = g.degrees();
    let adj = g.neighbors();
    let center = (0..n).find(|&v| deg[v] == k)?;
    let mut leaves = Vec::with_capacity(k);
    for &a in &adj[center] {
        if deg[a] != 2 {
            return None;
        }
        let b = *adj[a].iter().find(|&&x| x != center)?;
        if deg[b] != 1 {
            return None;
        }
        leaves.push(b);
    }
    leaves.sort_unstable();
    leaves.dedup();
    (leaves.len() == k).then_some(BasicGraphKind::Spider(k))
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form_with_cap(a, 64).ok() == canonical_form_with_cap(b, 64).ok()
}

/// Class and dimension predicted for a disjoint union of basic graphs. The
/// empty union is the empty graph, whose complex is `{∅}`.
pub fn predict_basic(kinds: &[BasicGraphKind]) -> (ManifoldClass, isize) {
    let dim = kinds.iter().map(|k| k.weight()).sum::<isize>() - 1;
    if kinds.iter().all(|k| k.is_sphere()) {
        (ManifoldClass::Sphere(dim), dim)
    } else {
        (ManifoldClass::Ball(dim), dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub expected: ManifoldClass,
    /// Which list the entry belongs to.
    pub family: &'static str,
    pub description: &'static str,
    /// How the drawn vertices were numbered.
    pub vertex_order: &'static str,
}

pub const FAMILY_CLOSED: &str = "closed 2-manifolds";
pub const FAMILY_CONNECTED_BOUNDARY: &str = "connected graphs, 2-manifolds with boundary";
pub const FAMILY_DISCONNECTED_BALL: &str = "disconnected graphs, 2-balls";

fn edges(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::new(n, pairs).expect("catalog graphs are simple")
}

fn union(kinds: &[BasicGraphKind]) -> Graph {
    let parts: Vec<Graph> = kinds.iter().map(|k| k.graph()).collect();
    Graph::disjoint_union(&parts)
}

/// All hard-coded entries, in a fixed order.
pub fn exceptional_table() -> Vec<ExceptionalEntry> {
    use BasicGraphKind::*;
    let cycle7 = "cycle vertices in order around the cycle";
    // Heptagon drawn as (0,0) (1,0) (2,0) (3,1) (2,2) (1,2) (0,2).
    let heptagon =
        "v0..v6 around the 7-cycle starting bottom left: (0,0) (1,0) (2,0) (3,1) (2,2) (1,2) (0,2)";
    vec![
        ExceptionalEntry {
            name: "K43",
            graph: Graph::complete_bipartite(4, 3).expect("valid"),
            expected: ManifoldClass::Torus,
            family: FAMILY_CLOSED,
            description: "Triangulated torus with 12 vertices, 36 edges, 24 triangles",
            vertex_order: "parts 0..4 and 4..7",
        },
        ExceptionalEntry {
            name: "annulus",
            // A=(3,2) B=(1,2) C=(0,0) D=(2,0) E=(5,2) F=(6,0) G=(4,0).
            graph: edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (0, 4),
                    (4, 5),
                    (5, 6),
                    (6, 0),
                ],
            ),
            expected: ManifoldClass::Annulus,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "Two 4-cycles sharing a vertex; triangulated annulus",
            vertex_order: "shared vertex 0, then each 4-cycle in drawing order",
        },
        ExceptionalEntry {
            name: "C7",
            graph: Graph::cycle(7).expect("valid"),
            expected: ManifoldClass::MoebiusStrip,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "The 7-cycle; triangulated Moebius strip",
            vertex_order: cycle7,
        },
        ExceptionalEntry {
            name: "moebius_8e",
            graph: edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 0),
                    (1, 5),
                ],
            ),
            expected: ManifoldClass::MoebiusStrip,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "7-cycle with chord v1-v5; triangulated Moebius strip",
            vertex_order: heptagon,
        },
        ExceptionalEntry {
            name: "moebius_9e",
            graph: edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 0),
                    (1, 5),
                    (0, 4),
                ],
            ),
            expected: ManifoldClass::MoebiusStrip,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "7-cycle with chords v1-v5 and v0-v4; triangulated Moebius strip",
            vertex_order: heptagon,
        },
        ExceptionalEntry {
            name: "moebius_10e",
            graph: edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 0),
                    (6, 2),
                    (0, 4),
                    (1, 5),
                ],
            ),
            expected: ManifoldClass::MoebiusStrip,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "7-cycle with chords v6-v2, v0-v4, v1-v5; triangulated Moebius strip",
            vertex_order: heptagon,
        },
        ExceptionalEntry {
            name: "torus_minus_disk_9e",
            // a=(0,4.8) b=(0,2) c=(2,0) d=(4,2) e=(4,4.8) f=(2,6.8) g=(2,4).
            graph: edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 3),
                    (1, 6),
                    (0, 5),
                ],
            ),
            expected: ManifoldClass::TorusMinusDisk,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "7 vertices, 9 edges; triangulated torus with a disk removed",
            vertex_order: "a..g = (0,4.8) (0,2) (2,0) (4,2) (4,4.8) (2,6.8) (2,4)",
        },
        ExceptionalEntry {
            name: "torus_minus_disk_10e",
            // p=(0,0) q=(2,0) r=(4,0) s=(3,1) t=(2,2) u=(1,1) w=(2,4).
            graph: edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 0),
                    (0, 6),
                    (6, 2),
                    (1, 4),
                    (4, 6),
                ],
            ),
            expected: ManifoldClass::TorusMinusDisk,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "7 vertices, 10 edges; triangulated torus with a disk removed",
            vertex_order: "p q r s t u w = (0,0) (2,0) (4,0) (3,1) (2,2) (1,1) (2,4)",
        },
        ExceptionalEntry {
            name: "torus_minus_disk_11e",
            // a=(0,0) b=(1.5,0) c=(3,0) d=(3,2) e=(1.5,2) f=(0,2) g=(1.5,3).
            graph: edges(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 0),
                    (2, 5),
                    (5, 6),
                    (6, 3),
                    (3, 0),
                    (1, 4),
                ],
            ),
            expected: ManifoldClass::TorusMinusDisk,
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "7 vertices, 11 edges; triangulated torus with a disk removed",
            vertex_order: "a..g = (0,0) (1.5,0) (3,0) (3,2) (1.5,2) (0,2) (1.5,3)",
        },
        ExceptionalEntry {
            name: "Sp3",
            graph: Spider(3).graph(),
            expected: ManifoldClass::Ball(2),
            family: FAMILY_CONNECTED_BOUNDARY,
            description: "Spider with three legs; triangulated disk",
            vertex_order: "centre 0, leg i is 0-(2i+1)-(2i+2)",
        },
        disconnected("3P2", &[P2, P2, P2], "Triangle"),
        disconnected("2P2⊔P3", &[P2, P2, P3], "Two triangles sharing an edge"),
        disconnected(
            "P2⊔P5",
            &[P2, Spider(2)],
            "Chain of three triangles sharing a vertex",
        ),
        disconnected(
            "P2⊔Γ",
            &[P2, Gamma],
            "Chain of four triangles sharing a vertex",
        ),
        disconnected("P2⊔2P3", &[P2, P3, P3], "Triangulated square"),
        disconnected("P2⊔C5", &[P2, C5], "Triangulated pentagon"),
        disconnected("P2⊔K32", &[P2, K32], "Triangulated hexagon"),
        disconnected(
            "P3⊔P5",
            &[P3, Spider(2)],
            "Six triangles: suspension over path of three edges",
        ),
        disconnected(
            "P3⊔Γ",
            &[P3, Gamma],
            "Eight triangles: suspension over path of four edges",
        ),
    ]
}

fn disconnected(
    name: &'static str,
    kinds: &[BasicGraphKind],
    description: &'static str,
) -> ExceptionalEntry {
    ExceptionalEntry {
        name,
        graph: union(kinds),
        expected: ManifoldClass::Ball(2),
        family: FAMILY_DISCONNECTED_BALL,
        description,
        vertex_order: "components left to right, each in its constructor numbering",
    }
}

/// Looks an entry up by name. `+` is accepted for `⊔` and `Gamma` for `Γ`.
pub fn exceptional_by_name(name: &str) -> Option<ExceptionalEntry> {
    let norm = |s: &str| {
        s.replace('+', "⊔")
            .replace("Gamma", "Γ")
            .to_ascii_lowercase()
    };
    let want = norm(name);
    exceptional_table()
        .into_iter()
        .find(|e| norm(e.name) == want)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// Components, sorted. Empty for the empty graph.
    Basic(Vec<BasicGraphKind>),
    Exceptional(&'static str),
    /// Graphs whose complex is disconnected: `C4`, `K4`, or an edge meeting
    /// every other edge.
    Degenerate(&'static str),
    NoPrediction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub decomposition: Decomposition,
    pub predicted_class: Option<ManifoldClass>,
    pub predicted_dimension: Option<isize>,
}

/// Predicts the class of the matching complex of `g` without computing it.
pub fn predict(g: &Graph) -> Prediction {
    let g = g.without_isolated();
    let comps = g.connected_components();
    let kinds: Option<Vec<BasicGraphKind>> = comps
        .components
        .iter()
        .map(|c| recognize_basic(&c.graph))
        .collect();
    if let Some(mut kinds) = kinds {
        kinds.sort_unstable();
        let (class, dim) = predict_basic(&kinds);
        return Prediction {
            decomposition: Decomposition::Basic(kinds),
            predicted_class: Some(class),
            predicted_dimension: Some(dim),
        };
    }
    for entry in exceptional_table() {
        if isomorphic(&g, &entry.graph) {
            return Prediction {
                decomposition: Decomposition::Exceptional(entry.name),
                predicted_class: Some(entry.expected),
                predicted_dimension: entry.expected.dimension(),
            };
        }
    }
    if let Some(p) = predict_degenerate(&g) {
        return p;
    }
    Prediction {
        decomposition: Decomposition::NoPrediction,
        predicted_class: None,
        predicted_dimension: None,
    }
}

/// Whether some edge meets every other edge (with at least two edges).
pub fn has_universal_edge(g: &Graph) -> bool {
    let e = g.edges();
    e.len() >= 2
        && e.iter()
            .any(|&(a, b)| e.iter().all(|&(u, v)| u == a || u == b || v == a || v == b))
}

/// Whether the matching complex of `g` is disconnected, from the graph alone:
/// `g` is `C4`, `K4`, or has an edge meeting every other edge.
pub fn predicts_disconnected_complex(g: &Graph) -> bool {
    let g = g.without_isolated();
    has_universal_edge(&g)
        || isomorphic(&g, &Graph::cycle(4).expect("valid"))
        || isomorphic(&g, &Graph::complete(4).expect("valid"))
}

fn predict_degenerate(g: &Graph) -> Option<Prediction> {
    let degenerate = |name, class: ManifoldClass, dim| {
        Some(Prediction {
            decomposition: Decomposition::Degenerate(name),
            predicted_class: Some(class),
            predicted_dimension: dim,
        })
    };
    if isomorphic(g, &Graph::cycle(4).expect("valid")) {
        // Two disjoint edges.
        return degenerate("C4", ManifoldClass::OtherManifold, Some(1));
    }
    if isomorphic(g, &Graph::complete(4).expect("valid")) {
        // Three disjoint edges.
        return degenerate("K4", ManifoldClass::OtherManifold, Some(1));
    }
    if !has_universal_edge(g) {
        return None;
    }
    let e = g.edges();
    let pairwise = e.iter().enumerate().all(|(i, &(a, b))| {
        e[i + 1..]
            .iter()
            .all(|&(u, v)| u == a || u == b || v == a || v == b)
    });
    if pairwise {
        // Every matching is a single edge: at least three isolated points
        // (two points would be P3, which is basic).
        degenerate(
            "pairwise-incident edges",
            ManifoldClass::OtherManifold,
            Some(0),
        )
    } else {
        // An isolated vertex beside a nonempty edge: not pure.
        degenerate("universal edge", ManifoldClass::NotManifold, None)
    }
}
