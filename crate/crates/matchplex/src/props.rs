//! Randomized checks of structural facts about matching complexes.
//!
//! Trial `t` of a run with seed `s` draws from a ChaCha stream selected by
//! `(s, t)`, so any counterexample is reproduced by [`sample_trial`] alone.
//! Graphs are drawn with `n` uniform in `2..=9` and `m` uniform in
//! `1..=min(12, n(n−1)/2)`, edges uniform without replacement; a draw with
//! an isolated vertex is discarded and redrawn.

use matchplex_core::catalog::predicts_disconnected_complex;
use matchplex_core::complex::Complex;
use matchplex_core::graph::{Graph, Matching};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::export::bytes_to_string;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Property {
    #[serde(rename = "flag")]
    Flag,
    #[serde(rename = "link-lemma")]
    LinkLemma,
    #[serde(rename = "join-lemma")]
    JoinLemma,
    #[serde(rename = "no-induced-p6")]
    NoInducedP6,
    #[serde(rename = "connected-diameter")]
    ConnectedDiameter,
    #[serde(rename = "disconnected-trichotomy")]
    DisconnectedTrichotomy,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Flag,
        Property::LinkLemma,
        Property::JoinLemma,
        Property::NoInducedP6,
        Property::ConnectedDiameter,
        Property::DisconnectedTrichotomy,
    ];
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: u64,
    pub graph6: String,
    /// The second graph of a join check.
    pub other_graph6: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PropertyResult {
    pub property: Property,
    pub trials: u64,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PropertyReport {
    pub seed: u64,
    pub trials: u64,
    pub results: Vec<PropertyResult>,
}

impl PropertyReport {
    pub fn failures(&self) -> usize {
        self.results.iter().map(|r| r.failures).sum()
    }
}

/// What one trial draws: a graph, a second graph for the join check, and a
/// matching of the first for the link check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialSample {
    pub graph: Graph,
    pub other: Graph,
    pub matching: Matching,
}

fn rng_for(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn sample_graph<R: Rng>(rng: &mut R) -> Graph {
    loop {
        let n = rng.gen_range(2..=9usize);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = rng.gen_range(1..=pairs.len().min(12));
        let chosen: Vec<(usize, usize)> = sample(rng, pairs.len(), m)
            .into_iter()
            .map(|i| pairs[i])
            .collect();
        let g = Graph::new(n, &chosen).expect("distinct pairs");
        if !g.has_isolated_vertices() {
            return g;
        }
    }
}

pub fn sample_trial(seed: u64, trial: u64) -> TrialSample {
    let mut rng = rng_for(seed, trial);
    let graph = sample_graph(&mut rng);
    let other = sample_graph(&mut rng);
    let matchings = graph.enumerate_matchings().expect("at most 12 edges");
    let matching = matchings[rng.gen_range(0..matchings.len())];
    TrialSample {
        graph,
        other,
        matching,
    }
}

pub fn property_suite(seed: u64, trials: u64) -> PropertyReport {
    let mut results: Vec<PropertyResult> = Property::ALL
        .iter()
        .map(|&property| PropertyResult {
            property,
            trials,
            failures: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    for trial in 0..trials {
        let s = sample_trial(seed, trial);
        for (r, &property) in results.iter_mut().zip(Property::ALL.iter()) {
            if let Some(detail) = check(property, &s) {
                r.failures += 1;
                r.counterexamples.push(Counterexample {
                    trial,
                    graph6: g6(&s.graph),
                    other_graph6: (property == Property::JoinLemma).then(|| g6(&s.other)),
                    detail,
                });
            }
        }
    }
    PropertyReport {
        seed,
        trials,
        results,
    }
}

fn g6(g: &Graph) -> String {
    bytes_to_string(matchplex_core::graph6::encode(g))
}

/// `None` when the property holds, else a description of the failure.
pub fn check(property: Property, s: &TrialSample) -> Option<String> {
    let c = Complex::matching_complex(&s.graph).expect("at most 12 edges");
    match property {
        Property::Flag => (!c.is_flag()).then(|| "matching complex is not flag".into()),
        Property::LinkLemma => {
            let link = c.link(s.matching.edges()).expect("matchings are faces");
            let avoid = s.graph.subgraph_avoiding(s.matching).expect("a matching");
            let mut back = vec![0i64; avoid.graph.edge_count()];
            for (old, new) in avoid.edge_map.iter().enumerate() {
                if let Some(new) = new {
                    back[*new] = old as i64;
                }
            }
            let mut expected: Vec<Vec<i64>> = Complex::matching_complex(&avoid.graph)
                .expect("subgraph")
                .facets()
                .iter()
                .map(|f| {
                    let mut v: Vec<i64> = f.iter().map(|i| back[i]).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            expected.sort();
            let got = link.labeled_facets();
            (got != expected).then(|| {
                format!(
                    "link of {:?} has facets {got:?}, avoiding subgraph gives {expected:?}",
                    s.matching.edges().to_vec()
                )
            })
        }
        Property::JoinLemma => {
            let other = Complex::matching_complex(&s.other).expect("at most 12 edges");
            let joined = c.join(&other).expect("at most 24 vertices");
            let union = Graph::disjoint_union(&[s.graph.clone(), s.other.clone()]);
            let direct = Complex::matching_complex(&union).expect("at most 24 edges");
            (direct.labeled_facets() != joined.labeled_facets())
                .then(|| "matching complex of the union differs from the join".into())
        }
        Property::NoInducedP6 => c
            .has_induced_path6()
            .then(|| "1-skeleton has an induced path on six vertices".into()),
        Property::ConnectedDiameter => match c.diameter().expect("nonvoid") {
            Some(d) if d > 4 => Some(format!("connected with diameter {d}")),
            _ => None,
        },
        Property::DisconnectedTrichotomy => {
            let disconnected = !c.is_connected().expect("nonvoid");
            let predicted = predicts_disconnected_complex(&s.graph);
            if disconnected != predicted {
                Some(format!(
                    "disconnected = {disconnected}, trichotomy predicts {predicted}"
                ))
            } else if disconnected && c.dimension().unwrap_or(-1) > 1 {
                Some(format!(
                    "disconnected complex of dimension {:?}",
                    c.dimension()
                ))
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trials_are_reproducible() {
        assert_eq!(sample_trial(7, 3), sample_trial(7, 3));
        assert_ne!(sample_trial(7, 3).graph, sample_trial(7, 4).graph);
    }

    #[test]
    fn samples_have_no_isolated_vertices() {
        let mut rng = rng_for(1, 0);
        for _ in 0..200 {
            let g = sample_graph(&mut rng);
            assert!(!g.has_isolated_vertices());
            assert!((1..=12).contains(&g.edge_count()));
            assert!((2..=9).contains(&g.vertex_count()));
        }
    }

    #[test]
    fn path_on_four_vertices_passes() {
        let mut s = sample_trial(0, 0);
        s.graph = Graph::path(4).unwrap();
        s.matching = Matching::from_set(matchplex_core::SmallSet::singleton(1));
        assert_eq!(check(Property::LinkLemma, &s), None);
        // P4 has a universal middle edge: its complex is disconnected.
        assert_eq!(check(Property::DisconnectedTrichotomy, &s), None);
    }

    #[test]
    fn small_suite_passes() {
        assert_eq!(property_suite(11, 40).failures(), 0);
    }
}
