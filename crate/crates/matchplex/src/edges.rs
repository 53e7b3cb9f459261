//! Plain-text edge lists.
//!
//! One edge per line as two non-negative integers separated by whitespace
//! or a comma. `#` starts a comment. An optional `n <count>` line declares
//! the vertex count, which is otherwise one more than the largest label.

use matchplex_core::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: vertex {vertex} exceeds the declared count {declared}")]
    Undeclared {
        line: usize,
        vertex: usize,
        declared: usize,
    },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let syntax = |message: String| EdgeListError::Syntax { line, message };
        if tokens[0] == "n" {
            if tokens.len() != 2 || declared.is_some() || !edges.is_empty() {
                return Err(syntax(
                    "`n <count>` must appear once, before any edge".into(),
                ));
            }
            let n = tokens[1]
                .parse()
                .map_err(|_| syntax(format!("bad vertex count `{}`", tokens[1])))?;
            declared = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(syntax(format!(
                "expected two vertices, found {}",
                tokens.len()
            )));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| syntax(format!("`{t}` is not a vertex number")))
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if let Some(n) = declared {
            if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
                return Err(EdgeListError::Undeclared {
                    line,
                    vertex,
                    declared: n,
                });
            }
        }
        edges.push((u, v, line));
    }
    let n = declared.unwrap_or_else(|| {
        edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    // Validate edge by edge so errors carry the offending line.
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in &edges {
        if u == v {
            return Err(EdgeListError::Graph {
                line,
                source: GraphError::LoopEdge { vertex: u },
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::Graph {
                line,
                source: GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                },
            });
        }
    }
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::new(n, &pairs).map_err(|source| EdgeListError::Graph {
        line: edges.last().map_or(0, |e| e.2),
        source,
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
