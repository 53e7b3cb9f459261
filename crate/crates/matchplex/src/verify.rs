//! Exhaustive searches over small graphs, compared with the catalog.
//!
//! A search enumerates every isomorphism class within the edge and vertex
//! budget, computes the matching complex of each, keeps those satisfying the
//! target, and compares the hits with the set the catalog predicts for the
//! same budget. A bounded search confirms a classification within its
//! budget only; graphs beyond the budget are not examined.

use std::collections::BTreeMap;
use std::time::Instant;

use matchplex_core::catalog::{
    exceptional_table, predict_basic, predicts_disconnected_complex, BasicGraphKind,
};
use matchplex_core::complex::Complex;
use matchplex_core::graph::Graph;
use matchplex_core::homology::{BettiVector, FieldPrime};
use matchplex_core::manifold::{check_manifold, classification, ManifoldClass, ManifoldStatus};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{enumerate_graphs, ClassRep, EnumSpec, EDGE_LIMIT};
use crate::export::bytes_to_string;

pub const DEFAULT_MAX_EDGES: usize = 12;
pub const DEFAULT_MAX_VERTICES: usize = 10;

pub const BOUNDED_NOTE: &str = "bounded search: the hit list is confirmed only for graphs within the edge and vertex budget; larger graphs are not examined";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Target {
    #[serde(rename = "1-sphere")]
    OneSphere,
    #[serde(rename = "2-sphere")]
    TwoSphere,
    #[serde(rename = "closed-2-manifold")]
    ClosedTwoManifold,
    #[serde(rename = "2-manifold-with-boundary")]
    TwoManifoldWithBoundary,
    #[serde(rename = "connected-2-manifold-with-boundary")]
    ConnectedTwoManifoldWithBoundary,
    #[serde(rename = "disconnected-complex")]
    DisconnectedComplex,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::OneSphere,
        Target::TwoSphere,
        Target::ClosedTwoManifold,
        Target::TwoManifoldWithBoundary,
        Target::ConnectedTwoManifoldWithBoundary,
        Target::DisconnectedComplex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::OneSphere => "1-sphere",
            Target::TwoSphere => "2-sphere",
            Target::ClosedTwoManifold => "closed-2-manifold",
            Target::TwoManifoldWithBoundary => "2-manifold-with-boundary",
            Target::ConnectedTwoManifoldWithBoundary => "connected-2-manifold-with-boundary",
            Target::DisconnectedComplex => "disconnected-complex",
        }
    }

    pub fn parse(s: &str) -> Option<Target> {
        Target::ALL.into_iter().find(|t| t.name() == s)
    }

    /// The complex dimension every hit must have, if fixed.
    fn dimension(self) -> Option<isize> {
        match self {
            Target::OneSphere => Some(1),
            Target::DisconnectedComplex => None,
            _ => Some(2),
        }
    }

    /// Whether a computed verdict satisfies the target, for graph `g`.
    fn accepts(self, status: ManifoldStatus, class: ManifoldClass, g: &Graph) -> bool {
        match self {
            Target::OneSphere => class == ManifoldClass::Sphere(1),
            Target::TwoSphere => class == ManifoldClass::Sphere(2),
            Target::ClosedTwoManifold => status == ManifoldStatus::ClosedManifold,
            Target::TwoManifoldWithBoundary => status == ManifoldStatus::ManifoldWithBoundary,
            Target::ConnectedTwoManifoldWithBoundary => {
                status == ManifoldStatus::ManifoldWithBoundary && g.is_connected()
            }
            Target::DisconnectedComplex => false,
        }
    }

    /// Whether a predicted class satisfies the target.
    fn accepts_class(self, class: ManifoldClass, g: &Graph) -> bool {
        use ManifoldClass::*;
        let closed = matches!(class, Sphere(2) | Torus);
        let boundary = matches!(class, Ball(2) | Annulus | MoebiusStrip | TorusMinusDisk);
        match self {
            Target::OneSphere => class == Sphere(1),
            Target::TwoSphere => class == Sphere(2),
            Target::ClosedTwoManifold => closed,
            Target::TwoManifoldWithBoundary => boundary,
            Target::ConnectedTwoManifoldWithBoundary => boundary && g.is_connected(),
            Target::DisconnectedComplex => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub max_edges: usize,
    pub max_vertices: usize,
    pub connected_only: bool,
    pub p: u32,
    pub cross_check_prime: Option<u32>,
    pub target: Target,
    /// Lifts the default budget guard.
    pub force: bool,
}

impl SearchSpec {
    pub fn new(target: Target) -> SearchSpec {
        SearchSpec {
            max_edges: DEFAULT_MAX_EDGES,
            max_vertices: DEFAULT_MAX_VERTICES,
            connected_only: false,
            p: 2,
            cross_check_prime: Some(3),
            target,
            force: false,
        }
    }

    pub fn validate(&self) -> Result<(FieldPrime, Option<FieldPrime>), VerifyError> {
        let over = self.max_edges > DEFAULT_MAX_EDGES || self.max_vertices > DEFAULT_MAX_VERTICES;
        if over && !self.force {
            return Err(VerifyError::GuardExceeded {
                max_edges: self.max_edges,
                max_vertices: self.max_vertices,
            });
        }
        if self.max_edges > EDGE_LIMIT || self.max_vertices > matchplex_core::canon::MAX_VERTICES {
            return Err(VerifyError::HardLimit {
                max_edges: self.max_edges,
                max_vertices: self.max_vertices,
            });
        }
        let p = FieldPrime::new(self.p).map_err(|_| VerifyError::NotPrime(self.p))?;
        let q = match self.cross_check_prime {
            Some(q) => Some(FieldPrime::new(q).map_err(|_| VerifyError::NotPrime(q))?),
            None => None,
        };
        Ok((p, q))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("budget of {max_edges} edges / {max_vertices} vertices exceeds the guard of {DEFAULT_MAX_EDGES} / {DEFAULT_MAX_VERTICES}; pass --force to lift it")]
    GuardExceeded {
        max_edges: usize,
        max_vertices: usize,
    },
    #[error("budget of {max_edges} edges / {max_vertices} vertices exceeds what a complex can index (64 each)")]
    HardLimit {
        max_edges: usize,
        max_vertices: usize,
    },
    #[error("{0} is not a prime below 65536")]
    NotPrime(u32),
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Hit {
    pub graph6: String,
    pub vertices: usize,
    pub edges: usize,
    pub class: String,
    pub status: String,
    /// Catalog name when the hit is a known graph.
    pub name: Option<String>,
    /// `β̃_0, β̃_1, ...` keyed `betti_p<prime>`.
    #[serde(flatten)]
    pub betti: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Expected {
    pub graph6: String,
    pub name: String,
    /// `None` when only membership is predicted.
    pub class: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Anomaly {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Match,
    /// Some hit is not expected (checked before missing hits).
    ExtraHit,
    MissingHit,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SearchReport {
    pub spec: SearchSpec,
    pub enumerated: usize,
    pub hits: Vec<Hit>,
    pub expected: Vec<Expected>,
    pub extra: Vec<Hit>,
    pub missing: Vec<Expected>,
    pub anomalies: Vec<Anomaly>,
    pub verdict: Verdict,
    pub note: &'static str,
    pub elapsed_ms: u128,
}

impl SearchReport {
    /// Success means the verdict is `Match` and there are no anomalies.
    pub fn is_success(&self) -> bool {
        self.verdict == Verdict::Match && self.anomalies.is_empty()
    }

    /// The report as JSON; `elapsed_ms` is dropped when `timing` is false,
    /// which makes equal specs give byte-identical output.
    pub fn to_json(&self, timing: bool) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if !timing {
            v.as_object_mut().expect("object").remove("elapsed_ms");
        }
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

struct Examined {
    hit: Option<Hit>,
    anomaly: Option<Anomaly>,
}

pub fn run_search(spec: &SearchSpec) -> Result<SearchReport, VerifyError> {
    let (p, q) = spec.validate()?;
    let start = Instant::now();
    let connected_only =
        spec.connected_only || spec.target == Target::ConnectedTwoManifoldWithBoundary;
    let graphs = enumerate_graphs(&EnumSpec {
        max_edges: spec.max_edges,
        max_vertices: spec.max_vertices,
        connected_only,
    });
    let names = catalog_names();
    let examined: Vec<Examined> = graphs
        .par_iter()
        .map(|rep| examine(rep, spec.target, p, q, &names))
        .collect();
    let mut hits: Vec<Hit> = Vec::new();
    let mut anomalies = Vec::new();
    for e in examined {
        hits.extend(e.hit);
        anomalies.extend(e.anomaly);
    }
    let expected = if spec.target == Target::DisconnectedComplex {
        graphs
            .iter()
            .filter(|r| predicts_disconnected_complex(&r.graph))
            .map(|r| Expected {
                graph6: bytes_to_string(r.form.clone()),
                name: names
                    .get(&r.form)
                    .cloned()
                    .unwrap_or_else(|| "trichotomy".into()),
                class: None,
            })
            .collect()
    } else {
        expected_set(
            spec.target,
            spec.max_edges,
            spec.max_vertices,
            connected_only,
        )
    };
    let matches = |h: &Hit, e: &Expected| {
        h.graph6 == e.graph6 && e.class.as_ref().is_none_or(|c| *c == h.class)
    };
    let extra: Vec<Hit> = hits
        .iter()
        .filter(|h| !expected.iter().any(|e| matches(h, e)))
        .cloned()
        .collect();
    let missing: Vec<Expected> = expected
        .iter()
        .filter(|e| !hits.iter().any(|h| matches(h, e)))
        .cloned()
        .collect();
    let verdict = if !extra.is_empty() {
        Verdict::ExtraHit
    } else if !missing.is_empty() {
        Verdict::MissingHit
    } else {
        Verdict::Match
    };
    Ok(SearchReport {
        spec: *spec,
        enumerated: graphs.len(),
        hits,
        expected,
        extra,
        missing,
        anomalies,
        verdict,
        note: BOUNDED_NOTE,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn betti_map(b: &BettiVector, out: &mut BTreeMap<String, Vec<usize>>) {
    out.insert(format!("betti_p{}", b.p), b.from_zero().to_vec());
}

fn examine(
    rep: &ClassRep,
    target: Target,
    p: FieldPrime,
    q: Option<FieldPrime>,
    names: &BTreeMap<Vec<u8>, String>,
) -> Examined {
    let g = &rep.graph;
    let graph6 = bytes_to_string(rep.form.clone());
    let nothing = Examined {
        hit: None,
        anomaly: None,
    };
    let c = Complex::matching_complex(g).expect("edge count is capped");
    let hit = |class: ManifoldClass, status: &str, betti: BTreeMap<String, Vec<usize>>| Hit {
        graph6: graph6.clone(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        class: class.label(),
        status: status.to_string(),
        name: names.get(&rep.form).cloned(),
        betti,
    };
    if target == Target::DisconnectedComplex {
        if c.is_connected().expect("nonvoid") {
            return nothing;
        }
        let mut betti = BTreeMap::new();
        let v = check_manifold(&c, p);
        let cl = classification(&c, &v, (p, q.unwrap_or(p)));
        if let Some((a, b)) = &cl.betti {
            betti_map(a, &mut betti);
            betti_map(b, &mut betti);
        }
        let anomaly = (c.dimension().unwrap_or(-1) > 1).then(|| Anomaly {
            graph6: graph6.clone(),
            detail: format!("disconnected complex of dimension {:?}", c.dimension()),
        });
        return Examined {
            hit: Some(hit(cl.class, v.status.as_str(), betti)),
            anomaly,
        };
    }
    // Every target fixes a pure complex of one dimension.
    if c.dimension() != target.dimension() || !c.is_pure() {
        return nothing;
    }
    let q = q.unwrap_or(p);
    let vp = check_manifold(&c, p);
    let cp = classification(&c, &vp, (p, q));
    let vq = check_manifold(&c, q);
    let cq = classification(&c, &vq, (q, p));
    let accepted_p = target.accepts(vp.status, cp.class, g);
    let accepted_q = target.accepts(vq.status, cq.class, g);
    if !accepted_p && !accepted_q {
        return nothing;
    }
    let anomaly = (vp.status != vq.status || cp.class != cq.class).then(|| Anomaly {
        graph6: graph6.clone(),
        detail: format!(
            "GF({}) gives {} / {}, GF({}) gives {} / {}",
            p.get(),
            vp.status,
            cp.class,
            q.get(),
            vq.status,
            cq.class
        ),
    });
    let mut betti = BTreeMap::new();
    if let Some((a, b)) = &cp.betti {
        betti_map(a, &mut betti);
        betti_map(b, &mut betti);
    }
    Examined {
        hit: accepted_p.then(|| hit(cp.class, vp.status.as_str(), betti)),
        anomaly,
    }
}

/// Canonical forms of every catalog graph and basic union with at most
/// three components of total weight three, named.
fn catalog_names() -> BTreeMap<Vec<u8>, String> {
    let mut names = BTreeMap::new();
    for (kinds, g) in basic_unions(3, usize::MAX, usize::MAX) {
        let name = union_name(&kinds);
        names.insert(form(&g), name);
    }
    for e in exceptional_table() {
        names
            .entry(form(&e.graph))
            .or_insert_with(|| e.name.to_string());
    }
    names
}

fn form(g: &Graph) -> Vec<u8> {
    matchplex_core::canon::canonical_form_with_cap(g, matchplex_core::canon::MAX_VERTICES)
        .expect("catalog graphs are small")
}

/// `3P3`, `P3⊔C5`, ... with multiplicities.
pub fn union_name(kinds: &[BasicGraphKind]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < kinds.len() {
        let j = kinds[i..].iter().take_while(|&&k| k == kinds[i]).count();
        let name = match kinds[i] {
            BasicGraphKind::Spider(2) => "P5".to_string(),
            BasicGraphKind::Gamma => "Γ".to_string(),
            k => k.name(),
        };
        parts.push(if j > 1 { format!("{j}{name}") } else { name });
        i += j;
    }
    parts.join("⊔")
}

/// Multisets of basic kinds with total weight at most `max_weight`, as
/// graphs within the budget.
fn basic_unions(
    max_weight: isize,
    max_edges: usize,
    max_vertices: usize,
) -> Vec<(Vec<BasicGraphKind>, Graph)> {
    use BasicGraphKind::*;
    let kinds: Vec<BasicGraphKind> = [P2, P3, C5, K32, Gamma]
        .into_iter()
        .chain((2..=max_weight.max(2) as usize).map(Spider))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<BasicGraphKind> = Vec::new();
    fn rec(
        kinds: &[BasicGraphKind],
        start: usize,
        left: isize,
        stack: &mut Vec<BasicGraphKind>,
        out: &mut Vec<Vec<BasicGraphKind>>,
    ) {
        if !stack.is_empty() {
            out.push(stack.clone());
        }
        for i in start..kinds.len() {
            if kinds[i].weight() <= left {
                stack.push(kinds[i]);
                rec(kinds, i, left - kinds[i].weight(), stack, out);
                stack.pop();
            }
        }
    }
    let mut multisets = Vec::new();
    rec(&kinds, 0, max_weight, &mut stack, &mut multisets);
    for ms in multisets {
        let g = Graph::disjoint_union(&ms.iter().map(|k| k.graph()).collect::<Vec<_>>());
        if g.edge_count() <= max_edges && g.vertex_count() <= max_vertices {
            out.push((ms, g));
        }
    }
    out
}

/// What the catalog predicts for a target within a budget.
pub fn expected_set(
    target: Target,
    max_edges: usize,
    max_vertices: usize,
    connected_only: bool,
) -> Vec<Expected> {
    let mut found: BTreeMap<Vec<u8>, Expected> = BTreeMap::new();
    let weight = target.dimension().map_or(0, |d| d + 1);
    let within = |g: &Graph| {
        g.edge_count() <= max_edges
            && g.vertex_count() <= max_vertices
            && (!connected_only || g.is_connected())
    };
    for (kinds, g) in basic_unions(weight, max_edges, max_vertices) {
        let (class, _) = predict_basic(&kinds);
        if within(&g) && target.accepts_class(class, &g) {
            found.entry(form(&g)).or_insert_with(|| Expected {
                graph6: bytes_to_string(form(&g)),
                name: union_name(&kinds),
                class: Some(class.label()),
            });
        }
    }
    for e in exceptional_table() {
        if within(&e.graph) && target.accepts_class(e.expected, &e.graph) {
            found.entry(form(&e.graph)).or_insert_with(|| Expected {
                graph6: bytes_to_string(form(&e.graph)),
                name: e.name.to_string(),
                class: Some(e.expected.label()),
            });
        }
    }
    let mut out: Vec<Expected> = found.into_values().collect();
    out.sort_by(|a, b| {
        let ea = matchplex_core::graph6::decode(a.graph6.as_bytes()).map(|g| g.edge_count());
        let eb = matchplex_core::graph6::decode(b.graph6.as_bytes()).map(|g| g.edge_count());
        ea.ok().cmp(&eb.ok()).then(a.graph6.cmp(&b.graph6))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(Target::parse(t.name()), Some(t));
        }
        assert_eq!(Target::parse("torus"), None);
    }

    #[test]
    fn guard_blocks_large_budgets() {
        let mut s = SearchSpec::new(Target::OneSphere);
        s.max_edges = 13;
        assert!(matches!(
            s.validate(),
            Err(VerifyError::GuardExceeded { .. })
        ));
        s.force = true;
        assert!(s.validate().is_ok());
        s.max_edges = 65;
        assert!(matches!(s.validate(), Err(VerifyError::HardLimit { .. })));
        let mut s = SearchSpec::new(Target::OneSphere);
        s.p = 4;
        assert_eq!(s.validate(), Err(VerifyError::NotPrime(4)));
    }

    #[test]
    fn expected_one_spheres() {
        let names: Vec<String> = expected_set(Target::OneSphere, 6, 10, false)
            .into_iter()
            .map(|e| e.name)
            .collect();
        assert_eq!(names.len(), 3);
        for n in ["2P3", "C5", "K32"] {
            assert!(names.iter().any(|x| x == n), "{n} in {names:?}");
        }
    }

    #[test]
    fn expected_connected_boundary_surfaces() {
        let e = expected_set(Target::ConnectedTwoManifoldWithBoundary, 11, 10, true);
        assert_eq!(e.len(), 9);
    }

    #[test]
    fn union_names() {
        use BasicGraphKind::*;
        assert_eq!(union_name(&[P2, P2, P3]), "2P2⊔P3");
        assert_eq!(union_name(&[P3, Spider(2)]), "P3⊔P5");
        assert_eq!(union_name(&[P3, Gamma]), "P3⊔Γ");
    }
}
