//! JSON views of graphs, complexes and verdicts, and the table projection.
//!
//! JSON is the contract; keys are stable. A table is the same JSON value
//! flattened into `path: value` lines, so both formats carry the same data.

use matchplex_core::canon::{canonical_form_with_cap, MAX_VERTICES};
use matchplex_core::catalog::{Decomposition, ExceptionalEntry, Prediction};
use matchplex_core::complex::Complex;
use matchplex_core::graph::Graph;
use matchplex_core::graph6;
use matchplex_core::homology::BettiVector;
use matchplex_core::manifold::{Classification, ManifoldVerdict};
use matchplex_core::SmallSet;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GraphView {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub graph6: String,
    /// Graph6 of the canonical representative of the isomorphism class.
    pub canonical_graph6: Option<String>,
}

pub fn graph_view(g: &Graph) -> GraphView {
    GraphView {
        vertices: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        graph6: bytes_to_string(graph6::encode(g)),
        canonical_graph6: canonical_graph6(g),
    }
}

pub fn canonical_graph6(g: &Graph) -> Option<String> {
    canonical_form_with_cap(g, MAX_VERTICES)
        .ok()
        .map(bytes_to_string)
}

pub fn bytes_to_string(b: Vec<u8>) -> String {
    String::from_utf8(b).expect("graph6 is printable ASCII")
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ComplexView {
    pub dimension: Option<isize>,
    pub f_vector: Vec<u64>,
    /// Facets as sorted vertex labels; for matching complexes a label is an
    /// edge index of the graph.
    pub facets: Vec<Vec<i64>>,
    pub pure: bool,
    pub flag: bool,
    pub components: usize,
}

pub fn complex_view(c: &Complex) -> ComplexView {
    ComplexView {
        dimension: c.dimension(),
        f_vector: c
            .f_vector()
            .map(|f| f.nonempty().to_vec())
            .unwrap_or_default(),
        facets: c.labeled_facets(),
        pure: c.is_pure(),
        flag: c.is_flag(),
        components: c.components().map(|v| v.len()).unwrap_or(0),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BettiView {
    pub p: u32,
    /// `β̃_0, β̃_1, ...` up to the dimension.
    pub betti: Vec<usize>,
    /// `β̃_{−1}`: one exactly for `{∅}`.
    pub betti_minus_one: usize,
}

pub fn betti_view(b: &BettiVector) -> BettiView {
    BettiView {
        p: b.p,
        betti: b.from_zero().to_vec(),
        betti_minus_one: b.get(-1),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessView {
    pub face: Vec<i64>,
    /// The face's vertices as graph edges, when the complex is a matching
    /// complex.
    pub face_edges: Option<Vec<[usize; 2]>>,
    pub link_betti: BettiView,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BoundaryView {
    pub facets: Vec<Vec<i64>>,
    pub components: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ManifoldView {
    pub status: String,
    pub dimension: Option<isize>,
    pub p: u32,
    pub class: String,
    pub literal_ball: bool,
    pub f_vector: Vec<u64>,
    pub betti: Vec<BettiView>,
    pub boundary_components: Option<usize>,
    pub witness_face: Option<Vec<i64>>,
    pub witness_betti: Option<BettiView>,
    pub witness: Option<WitnessView>,
    pub boundary: Option<BoundaryView>,
}

pub fn manifold_view(
    c: &Complex,
    graph: Option<&Graph>,
    verdict: &ManifoldVerdict,
    classification: &Classification,
) -> ManifoldView {
    let witness = verdict.witness.as_ref().map(|w| WitnessView {
        face: w.face_labels.clone(),
        face_edges: graph.map(|g| edge_pairs(g, w.face)),
        link_betti: betti_view(&w.link_betti),
    });
    let boundary = verdict.boundary.as_ref().map(|b| BoundaryView {
        facets: b.labeled_facets(),
        components: classification.boundary_components.unwrap_or(0),
    });
    let betti = classification
        .betti
        .as_ref()
        .map(|(a, b)| {
            if a.p == b.p {
                vec![betti_view(a)]
            } else {
                vec![betti_view(a), betti_view(b)]
            }
        })
        .unwrap_or_default();
    ManifoldView {
        status: verdict.status.as_str().to_string(),
        dimension: verdict.dimension,
        p: verdict.p,
        class: classification.class.label(),
        literal_ball: classification.literal_ball,
        f_vector: c
            .f_vector()
            .map(|f| f.nonempty().to_vec())
            .unwrap_or_default(),
        betti,
        boundary_components: boundary.as_ref().map(|b| b.components),
        witness_face: witness.as_ref().map(|w| w.face.clone()),
        witness_betti: witness.as_ref().map(|w| w.link_betti.clone()),
        witness,
        boundary,
    }
}

pub fn edge_pairs(g: &Graph, face: SmallSet) -> Vec<[usize; 2]> {
    face.iter()
        .filter(|&i| i < g.edge_count())
        .map(|i| {
            let (u, v) = g.edge(i);
            [u, v]
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PredictionView {
    /// `basic`, `exceptional`, `degenerate` or `none`.
    pub kind: String,
    /// Basic components, or the catalog or degenerate-form name.
    pub parts: Vec<String>,
    pub predicted_class: Option<String>,
    pub predicted_dimension: Option<isize>,
    pub notes: Vec<String>,
}

pub fn prediction_view(p: &Prediction) -> PredictionView {
    let (kind, parts, notes) = match &p.decomposition {
        Decomposition::Basic(kinds) => (
            "basic",
            kinds.iter().map(|k| k.name()).collect(),
            kinds
                .iter()
                .filter_map(|k| k.note())
                .map(String::from)
                .collect(),
        ),
        Decomposition::Exceptional(name) => ("exceptional", vec![name.to_string()], vec![]),
        Decomposition::Degenerate(name) => ("degenerate", vec![name.to_string()], vec![]),
        Decomposition::NoPrediction => ("none", vec![], vec![]),
    };
    let mut notes: Vec<String> = notes;
    notes.dedup();
    PredictionView {
        kind: kind.to_string(),
        parts,
        predicted_class: p.predicted_class.map(|c| c.label()),
        predicted_dimension: p.predicted_dimension,
        notes,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CatalogEntryView {
    pub name: String,
    pub family: String,
    pub expected_class: String,
    pub description: String,
    pub vertex_order: String,
    pub graph: GraphView,
}

pub fn catalog_entry_view(e: &ExceptionalEntry) -> CatalogEntryView {
    CatalogEntryView {
        name: e.name.to_string(),
        family: e.family.to_string(),
        expected_class: e.expected.label(),
        description: e.description.to_string(),
        vertex_order: e.vertex_order.to_string(),
        graph: graph_view(&e.graph),
    }
}

/// Flattens a JSON value into `path: value` lines in key order.
pub fn to_table(value: &Value) -> String {
    let mut out = String::new();
    flatten("", value, &mut out);
    out
}

fn flatten(path: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let sub = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                flatten(&sub, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), v, out);
            }
        }
        other => {
            out.push_str(path);
            out.push_str(": ");
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}

/// Inverse of [`to_table`] for values whose arrays hold no objects at the
/// top of a path; used to check that tables lose nothing.
pub fn table_entries(table: &str) -> Vec<(String, Value)> {
    table
        .lines()
        .filter_map(|l| l.split_once(": "))
        .map(|(k, v)| {
            (
                k.to_string(),
                serde_json::from_str(v).expect("table values are JSON"),
            )
        })
        .collect()
}
