//! Graphs by name.
//!
//! A name is a catalog entry (`K43`, `annulus`, `moebius_9e`, `2P2⊔P3`, ...)
//! or a disjoint union of family members joined by `+` or `⊔`, each with an
//! optional multiplicity: `3P3`, `P3+C5`, `P2⊔Sp3`. Families:
//!
//! * `Pn` path on n vertices, `Cn` cycle, `Sp<k>` spider, `Gamma` banner,
//!   `Star<n>` the star with n leaves, `empty` the graph with no vertices;
//! * `Kn` complete graph for a single digit, `K_n` for any n;
//! * `Kmn` complete bipartite for two digits, `Km,n` for any m, n.
//!
//! A trailing `-matching` is ignored, so `C7-matching` names `C7`.

use matchplex_core::catalog::exceptional_by_name;
use matchplex_core::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NameError {
    #[error("unknown graph name `{0}`")]
    Unknown(String),
    #[error("`{name}`: {source}")]
    Invalid {
        name: String,
        #[source]
        source: GraphError,
    },
}

pub fn resolve(name: &str) -> Result<Graph, NameError> {
    let name = name.trim();
    let name = name.strip_suffix("-matching").unwrap_or(name);
    if let Some(entry) = exceptional_by_name(name) {
        return Ok(entry.graph);
    }
    let mut parts = Vec::new();
    for term in name.split(['+', '⊔']) {
        let term = term.trim();
        let digits = term.len() - term.trim_start_matches(|c: char| c.is_ascii_digit()).len();
        let (count, atom) = if digits > 0 {
            let count: usize = term[..digits]
                .parse()
                .map_err(|_| NameError::Unknown(term.to_string()))?;
            (count, &term[digits..])
        } else {
            (1, term)
        };
        let g = atom_graph(atom)?;
        parts.extend(std::iter::repeat_n(g, count));
    }
    Ok(Graph::disjoint_union(&parts))
}

fn atom_graph(atom: &str) -> Result<Graph, NameError> {
    let unknown = || NameError::Unknown(atom.to_string());
    let invalid = |source| NameError::Invalid {
        name: atom.to_string(),
        source,
    };
    let number = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if let Some(entry) = exceptional_by_name(atom) {
        return Ok(entry.graph);
    }
    match atom {
        "Gamma" | "Γ" | "banner" => return Ok(Graph::banner()),
        "empty" => return Ok(Graph::empty()),
        _ => {}
    }
    let built = if let Some(k) = atom
        .strip_prefix("Spider")
        .or_else(|| atom.strip_prefix("Sp"))
    {
        Graph::spider(number(k)?)
    } else if let Some(n) = atom.strip_prefix("Star") {
        Graph::star(number(n)?)
    } else if let Some(n) = atom.strip_prefix('P') {
        Graph::path(number(n)?)
    } else if let Some(n) = atom.strip_prefix('C') {
        Graph::cycle(number(n)?)
    } else if let Some(n) = atom.strip_prefix("K_") {
        Graph::complete(number(n)?)
    } else if let Some(rest) = atom.strip_prefix('K') {
        if let Some((m, n)) = rest.split_once(',') {
            Graph::complete_bipartite(number(m)?, number(n)?)
        } else if rest.len() == 1 {
            Graph::complete(number(rest)?)
        } else if rest.len() == 2 && rest.bytes().all(|b| b.is_ascii_digit()) {
            Graph::complete_bipartite(number(&rest[..1])?, number(&rest[1..])?)
        } else {
            return Err(unknown());
        }
    } else {
        return Err(unknown());
    };
    built.map_err(invalid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_and_unions() {
        assert_eq!(
            resolve("K43").unwrap(),
            Graph::complete_bipartite(4, 3).unwrap()
        );
        assert_eq!(resolve("K4").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(resolve("K_10").unwrap(), Graph::complete(10).unwrap());
        assert_eq!(
            resolve("K5,6").unwrap(),
            Graph::complete_bipartite(5, 6).unwrap()
        );
        assert_eq!(resolve("C7-matching").unwrap(), Graph::cycle(7).unwrap());
        let three = resolve("3P3").unwrap();
        assert_eq!(three.vertex_count(), 9);
        assert_eq!(three.edge_count(), 6);
        let u = resolve("P3 + C5").unwrap();
        assert_eq!((u.vertex_count(), u.edge_count()), (8, 7));
        assert_eq!(resolve("Sp3").unwrap(), Graph::spider(3).unwrap());
        assert_eq!(resolve("Gamma").unwrap(), Graph::banner());
    }

    #[test]
    fn catalog_names() {
        assert_eq!(resolve("annulus").unwrap().edge_count(), 8);
        assert_eq!(resolve("2P2⊔P3").unwrap(), resolve("2P2+P3").unwrap());
        assert_eq!(resolve("torus_minus_disk_11e").unwrap().edge_count(), 11);
    }

    #[test]
    fn rejects_nonsense() {
        assert!(matches!(resolve("Q5"), Err(NameError::Unknown(_))));
        assert!(matches!(resolve("K123"), Err(NameError::Unknown(_))));
        assert!(matches!(resolve("C2"), Err(NameError::Invalid { .. })));
    }
}
