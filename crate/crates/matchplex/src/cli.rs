//! The `matchplex` command line.
//!
//! Data goes to the output writer (or `--out`), diagnostics to the error
//! writer. Exit codes: 0 success, 1 usage or input error, 2 a verification
//! mismatch, an anomaly or a failed property.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matchplex_core::catalog::{exceptional_table, predict};
use matchplex_core::complex::Complex;
use matchplex_core::graph::Graph;
use matchplex_core::homology::{betti_reduced, FieldPrime};
use matchplex_core::manifold::{check_manifold, classification};
use matchplex_core::{canon, graph6};
use serde::Serialize;
use serde_json::{json, Value};

use crate::edges::parse_edge_list;
use crate::export::{
    betti_view, bytes_to_string, catalog_entry_view, complex_view, graph_view, manifold_view,
    prediction_view, to_table,
};
use crate::named::resolve;
use crate::props::property_suite;
use crate::verify::{run_search, SearchSpec, Target, DEFAULT_MAX_EDGES, DEFAULT_MAX_VERTICES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "matchplex",
    version,
    about = "Matching complexes of graphs: homology, manifold checks, classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; a table is a flattened projection of the JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the data to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Named graph: catalog entry or family union such as `P3+C5`.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Debug, Args)]
struct Primes {
    /// Prime field; repeatable. The first is primary, the second is used for
    /// cross-checks. Defaults to 2 and 3.
    #[arg(long = "p")]
    p: Vec<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the matching complex and report its combinatorics.
    Build {
        #[command(flatten)]
        input: Input,
        /// Print only the canonical graph6 of the input's class.
        #[arg(long)]
        emit_graph6: bool,
    },
    /// Reduced Betti numbers of the matching complex.
    Homology {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        primes: Primes,
    },
    /// Homology-manifold check with boundary and witness.
    Manifold {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        primes: Primes,
    },
    /// Computed class next to the class predicted from the graph.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        primes: Primes,
    },
    /// Class predicted from the shape of the graph alone.
    Predict {
        #[command(flatten)]
        input: Input,
    },
    /// Hard-coded graphs with their expected classes.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Exhaustive search over small graphs for a target predicate.
    Verify {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Only connected graphs.
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        primes: Primes,
        /// Lift the budget guard.
        #[arg(long)]
        force: bool,
        /// Include elapsed time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Randomized structural checks.
    Props {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: u64,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// Every entry with its expected class.
    List,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok((data, code)) => {
            let text = match (&data, cli.format) {
                (Output::Raw(s), _) => s.clone(),
                (Output::Json(v), Format::Json) => {
                    serde_json::to_string_pretty(v).expect("value serializes") + "\n"
                }
                (Output::Json(v), Format::Table) => to_table(v),
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            } else if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

enum Output {
    Json(Value),
    Raw(String),
}

fn json_of<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("views serialize")
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    if let Some(s) = &input.graph6 {
        return graph6::decode(s.trim().as_bytes())
            .map_err(|e| usage(format!("graph6 `{s}`: {e}")));
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        return parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())));
    }
    if let Some(name) = &input.name {
        return resolve(name).map_err(|e| usage(e.to_string()));
    }
    Err(usage("one of --graph6, --edges, --name is required"))
}

fn primes(p: &Primes) -> Result<(FieldPrime, FieldPrime), Failure> {
    let list: Vec<u32> = if p.p.is_empty() {
        vec![2, 3]
    } else {
        p.p.clone()
    };
    if list.len() > 2 {
        return Err(usage("at most two primes may be given"));
    }
    let field =
        |q: u32| FieldPrime::new(q).map_err(|_| usage(format!("{q} is not a prime below 65536")));
    let first = field(list[0])?;
    let second = field(*list.get(1).unwrap_or(&list[0]))?;
    Ok((first, second))
}

fn complex_of(g: &Graph) -> Result<Complex, Failure> {
    Complex::matching_complex(g).map_err(|e| usage(e.to_string()))
}

fn execute(cli: &Cli) -> Result<(Output, i32), Failure> {
    match &cli.command {
        Command::Build { input, emit_graph6 } => {
            let g = read_graph(input)?;
            if *emit_graph6 {
                let form = canon::canonical_form_with_cap(&g, canon::MAX_VERTICES)
                    .map_err(|e| usage(e.to_string()))?;
                return Ok((Output::Raw(bytes_to_string(form) + "\n"), EXIT_OK));
            }
            let c = complex_of(&g)?;
            let v = json!({"graph": graph_view(&g), "complex": complex_view(&c)});
            Ok((Output::Json(v), EXIT_OK))
        }
        Command::Homology { input, primes: ps } => {
            let g = read_graph(input)?;
            let (p, q) = primes(ps)?;
            let c = complex_of(&g)?;
            let mut fields = vec![p];
            if q != p {
                fields.push(q);
            }
            let mut homology = Vec::new();
            for f in fields {
                let b = betti_reduced(&c, f).map_err(|e| usage(e.to_string()))?;
                homology.push(betti_view(&b));
            }
            let first = homology[0].clone();
            let v = json!({
                "graph": graph_view(&g),
                "f_vector": complex_view(&c).f_vector,
                "p": first.p,
                "betti": first.betti,
                "betti_minus_one": first.betti_minus_one,
                "homology": homology,
            });
            Ok((Output::Json(v), EXIT_OK))
        }
        Command::Manifold { input, primes: ps } => {
            let g = read_graph(input)?;
            let (p, q) = primes(ps)?;
            let c = complex_of(&g)?;
            let verdict = check_manifold(&c, p);
            let cls = classification(&c, &verdict, (p, q));
            let mut v = json_of(&manifold_view(&c, Some(&g), &verdict, &cls));
            v.as_object_mut()
                .expect("object")
                .insert("graph".into(), json_of(&graph_view(&g)));
            Ok((Output::Json(v), EXIT_OK))
        }
        Command::Classify { input, primes: ps } => {
            let g = read_graph(input)?;
            let (p, q) = primes(ps)?;
            let c = complex_of(&g)?;
            let verdict = check_manifold(&c, p);
            let cls = classification(&c, &verdict, (p, q));
            let prediction = predict(&g);
            let agrees = prediction.predicted_class.map(|pc| pc == cls.class);
            let v = json!({
                "graph": graph_view(&g),
                "class": cls.class.label(),
                "status": verdict.status.as_str(),
                "dimension": verdict.dimension,
                "prediction": prediction_view(&prediction),
                "agrees_with_prediction": agrees,
            });
            Ok((Output::Json(v), EXIT_OK))
        }
        Command::Predict { input } => {
            let g = read_graph(input)?;
            let v = json!({"graph": graph_view(&g), "prediction": prediction_view(&predict(&g))});
            Ok((Output::Json(v), EXIT_OK))
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            let entries: Vec<_> = exceptional_table().iter().map(catalog_entry_view).collect();
            Ok((Output::Json(json_of(&entries)), EXIT_OK))
        }
        Command::Verify {
            target,
            max_edges,
            max_vertices,
            connected,
            primes: ps,
            force,
            timing,
        } => {
            let target = Target::parse(target).ok_or_else(|| {
                let names: Vec<&str> = Target::ALL.iter().map(|t| t.name()).collect();
                usage(format!(
                    "unknown target `{target}`; expected one of {}",
                    names.join(", ")
                ))
            })?;
            if ps.p.len() > 2 {
                return Err(usage("at most two primes may be given"));
            }
            let mut spec = SearchSpec::new(target);
            spec.max_edges = *max_edges;
            spec.max_vertices = *max_vertices;
            spec.connected_only = *connected;
            spec.force = *force;
            match ps.p.as_slice() {
                [] => {}
                [p] => {
                    spec.p = *p;
                    spec.cross_check_prime = None;
                }
                [p, q, ..] => {
                    spec.p = *p;
                    spec.cross_check_prime = Some(*q);
                }
            }
            let report = run_search(&spec).map_err(|e| usage(e.to_string()))?;
            let mut v = json_of(&report);
            if !timing {
                v.as_object_mut().expect("object").remove("elapsed_ms");
            }
            let code = if report.is_success() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok((Output::Json(v), code))
        }
        Command::Props { seed, trials } => {
            let report = property_suite(*seed, *trials);
            let code = if report.failures() == 0 {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok((Output::Json(json_of(&report)), code))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("matchplex").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn two_inputs_are_a_usage_error() {
        let (code, out, err) = call(&["build", "--name", "C5", "--graph6", "Dhc"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }

    #[test]
    fn missing_input_is_a_usage_error() {
        assert_eq!(call(&["homology"]).0, EXIT_USAGE);
    }

    #[test]
    fn composite_prime_is_a_usage_error() {
        let (code, _, err) = call(&["homology", "--name", "C5", "--p", "4"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("not a prime"));
    }

    #[test]
    fn help_exits_cleanly() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }

    #[test]
    fn unknown_name_is_reported() {
        let (code, _, err) = call(&["manifold", "--name", "Q9"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("Q9"));
    }
}
