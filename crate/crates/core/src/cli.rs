//! Command-line front end. Every command prints one JSON report.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::check::{Check, Status};
use crate::circulation::{monomial_dimensions, verify_inequalities};
use crate::corpus::{check_graph, class_counts, connected_multigraphs, run_corpus, CheckGroup, CorpusOptions};
use crate::error::{Error, Result};
use crate::flow_lattice::{
    characteristic_flow, codichromatic_compare, lattice_unchecked, theta_enumerate, theta_product,
};
use crate::graph::{Direction, EdgeId, Graph};
use crate::io::parse_graph_str;
use crate::kirchhoff::{product_torsion, rank_sequence};
use crate::report::{self, ReportDocument};
use crate::tutte::{complexity, poincare, tutte, tutte_deletion_contraction, tutte_rank_nullity, ORACLE_EDGE_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kirchhoff", version, about = "Kirchhoff groups, circulations and flow lattices of multigraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Tutte,
    Relations,
    Monomials,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Product,
    Enumerate,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Arc {
    Forward,
    Reverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tutte polynomial, by deletion-contraction and rank-nullity.
    Tutte { file: PathBuf },
    /// Poincaré polynomial of the Kirchhoff groups.
    Poincare { file: PathBuf },
    /// Rank sequence d_0, d_1, ... from one or all oracles.
    Ranks {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Oracle::All)]
        oracle: Oracle,
    },
    /// Basic-flow basis and Gram matrix of the integer flows.
    Lattice { file: PathBuf },
    /// Characteristic flow of an arc and its potential.
    CharFlow {
        file: PathBuf,
        #[arg(long)]
        edge: u32,
        #[arg(long, value_enum, default_value_t = Arc::Forward)]
        direction: Arc,
    },
    /// Theta series of the flow lattice up to a norm bound.
    Theta {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_norm: u64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Number of integer flows of a given squared norm.
    FlowsOfNorm {
        file: PathBuf,
        #[arg(long)]
        norm: u64,
    },
    /// Compares Tutte polynomials and theta series of two graphs.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_norm: u64,
    },
    /// Torsion of circulations of degree i+j modulo products of degrees i and j.
    Torsion {
        file: PathBuf,
        #[arg(long, value_parser = parse_degrees)]
        degrees: (usize, usize),
    },
    /// Inequality suite; with --all also every identity check.
    Verify {
        file: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Generates all connected multigraphs up to an edge count and runs every check.
    Corpus {
        #[arg(long, default_value_t = 7)]
        max_edges: usize,
        #[arg(long, default_value_t = 12)]
        max_norm: u64,
        #[arg(long, default_value_t = 50)]
        flip_trials: usize,
        #[arg(long, default_value_t = CorpusOptions::default().seed)]
        seed: u64,
        /// Include every check of every graph, not only failures.
        #[arg(long)]
        details: bool,
    },
}

fn parse_degrees(s: &str) -> std::result::Result<(usize, usize), String> {
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `i,j`, found `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(i)?, parse(j)?))
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::OracleMismatch { .. } => EXIT_CHECK_FAILURE,
        _ => EXIT_INPUT,
    }
}

fn load(path: &Path) -> Result<(Graph, Vec<u8>)> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::input(format!("{} is not UTF-8", path.display())))?;
    Ok((parse_graph_str(&text)?, bytes))
}

fn trimmed(mut v: Vec<usize>) -> Vec<usize> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Runs one command and assembles its report. Check failures are reported
/// inside the document; errors abort.
pub fn execute(command: &Command) -> Result<ReportDocument> {
    let start = Instant::now();
    let mut doc = match command {
        Command::Tutte { file } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("tutte", &bytes);
            let t = tutte_deletion_contraction(&g);
            doc.results = json!({
                "tutte": report::bi_poly(&t),
                "display": t.to_string(),
                "complexity": report::integer(&t.eval(&BigInt::from(1), &BigInt::from(1))),
            });
            if g.edge_count() <= ORACLE_EDGE_LIMIT {
                let r = tutte_rank_nullity(&g)?;
                doc.checks.push(Check::new(
                    "deletion-contraction equals rank-nullity expansion",
                    r == t,
                    format!("rank-nullity {r}"),
                ));
            }
            doc
        }
        Command::Poincare { file } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("poincare", &bytes);
            let d = poincare(&g)?;
            doc.results = json!({
                "poincare": report::uni_poly(&d),
                "display": d.to_string(),
                "value_at_one": report::integer(&d.eval(&BigInt::from(1))),
            });
            doc
        }
        Command::Ranks { file, oracle } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("ranks", &bytes);
            let mut sequences = Vec::new();
            if matches!(oracle, Oracle::Tutte | Oracle::All) {
                let d = poincare(&g)?;
                sequences.push(("tutte", d.coeffs().iter().map(|&c| c as usize).collect()));
            }
            if matches!(oracle, Oracle::Relations | Oracle::All) {
                sequences.push(("relations", rank_sequence(&g)?));
            }
            if matches!(oracle, Oracle::Monomials | Oracle::All) {
                sequences.push(("monomials", monomial_dimensions(&g)?));
            }
            let sequences: Vec<(&str, Vec<usize>)> =
                sequences.into_iter().map(|(k, v)| (k, trimmed(v))).collect();
            let mut results = serde_json::Map::new();
            for (k, v) in &sequences {
                results.insert(k.to_string(), json!(v));
            }
            doc.results = serde_json::Value::Object(results);
            if sequences.len() > 1 {
                let agree = sequences.windows(2).all(|w| w[0].1 == w[1].1);
                doc.checks.push(Check::new("oracles agree", agree, format!("{sequences:?}")));
            }
            doc
        }
        Command::Lattice { file } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("lattice", &bytes);
            let l = lattice_unchecked(&g);
            let kappa = complexity(&g)?;
            doc.results = json!({
                "chords": l.chords.iter().map(|c| c.0).collect::<Vec<_>>(),
                "basis": l.basis,
                "gram": l.gram.to_rows(),
                "determinant": report::integer(&l.determinant),
                "complexity": kappa,
            });
            doc.checks.push(Check::new(
                "gram determinant equals complexity",
                l.determinant == BigInt::from(kappa),
                format!("det {} vs complexity {kappa}", l.determinant),
            ));
            doc
        }
        Command::CharFlow { file, edge, direction } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("char-flow", &bytes);
            let dir = match direction {
                Arc::Forward => Direction::Forward,
                Arc::Reverse => Direction::Reverse,
            };
            let id = EdgeId(*edge);
            let chi = characteristic_flow(&g, id, dir)?;
            let ratio = crate::algebra::Rational::new(
                complexity(&g)?.into(),
                complexity(&g.delete_edge(id)?)?.into(),
            );
            doc.results = json!({
                "edge": edge,
                "direction": format!("{direction:?}").to_lowercase(),
                "flow": report::rationals(&chi.flow),
                "potential": chi.potential.iter().map(|(v, x)| json!([v.0, report::rational(x)])).collect::<Vec<_>>(),
                "norm": report::rational(&chi.norm()),
            });
            doc.checks.push(Check::new(
                "norm equals complexity ratio",
                chi.norm() == ratio,
                format!("complexity ratio {}", report::rational(&ratio)),
            ));
            doc.checks.push(Check::new(
                "potential identities",
                chi.potential_identities_hold(&g),
                "",
            ));
            doc
        }
        Command::Theta { file, max_norm, method } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("theta", &bytes);
            let mut results = serde_json::Map::new();
            results.insert("max_norm".into(), json!(max_norm));
            let product = match method {
                Method::Product | Method::Both => Some(theta_product(&g, *max_norm)?),
                Method::Enumerate => None,
            };
            let enumerated = match method {
                Method::Enumerate | Method::Both => Some(theta_enumerate(&g, *max_norm)?),
                Method::Product => None,
            };
            if let Some(s) = &product {
                results.insert("product".into(), report::q_series(s));
            }
            if let Some(s) = &enumerated {
                results.insert("enumerate".into(), report::q_series(s));
            }
            if let (Some(a), Some(b)) = (&product, &enumerated) {
                doc.checks.push(Check::new("methods agree", a == b, format!("product {a}, enumerate {b}")));
            }
            doc.results = serde_json::Value::Object(results);
            doc
        }
        Command::FlowsOfNorm { file, norm } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("flows-of-norm", &bytes);
            let count = theta_enumerate(&g, *norm)?.coeff_int(*norm);
            doc.results = json!({ "norm": norm, "count": count });
            doc
        }
        Command::Compare { first, second, max_norm } => {
            let (g1, b1) = load(first)?;
            let (g2, b2) = load(second)?;
            let mut joined = b1.clone();
            joined.push(0);
            joined.extend(&b2);
            let mut doc = ReportDocument::new("compare", &joined);
            let r = codichromatic_compare(&g1, &g2, *max_norm)?;
            doc.results = json!({
                "tutte_equal": r.tutte_equal,
                "theta_first_difference": r.theta_first_difference,
                "max_norm": max_norm,
                "first": { "tutte": report::bi_poly(&tutte(&g1)?), "theta": report::q_series(&theta_enumerate(&g1, *max_norm)?) },
                "second": { "tutte": report::bi_poly(&tutte(&g2)?), "theta": report::q_series(&theta_enumerate(&g2, *max_norm)?) },
            });
            doc
        }
        Command::Torsion { file, degrees } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("torsion", &bytes);
            let t = product_torsion(&g, degrees.0, degrees.1)?;
            doc.results = json!({
                "degrees": [degrees.0, degrees.1],
                "invariant_factors": t.invariant_factors.iter().map(report::integer).collect::<Vec<_>>(),
                "free_rank": t.free_rank,
            });
            doc
        }
        Command::Verify { file, all } => {
            let (g, bytes) = load(file)?;
            let mut doc = ReportDocument::new("verify", &bytes);
            let r = verify_inequalities(&g)?;
            doc.results = json!({ "sequence": r.sequence });
            doc.checks = r.checks;
            if *all {
                let options = CorpusOptions {
                    groups: CheckGroup::ALL
                        .into_iter()
                        .filter(|&c| c != CheckGroup::Inequalities)
                        .collect(),
                    ..CorpusOptions::default()
                };
                doc.checks.extend(check_graph(&g, &options, options.seed));
            }
            doc
        }
        Command::Corpus { max_edges, max_norm, flip_trials, seed, details } => {
            let options = CorpusOptions {
                max_edges: *max_edges,
                max_norm: *max_norm,
                flip_trials: *flip_trials,
                seed: *seed,
                groups: CheckGroup::ALL.to_vec(),
            };
            let params = format!(
                "max-edges={max_edges} max-norm={max_norm} flip-trials={flip_trials} seed={seed}"
            );
            let mut doc = ReportDocument::new("corpus", params.as_bytes());
            let graphs = connected_multigraphs(*max_edges)?;
            let r = run_corpus(&options)?;
            let failures: Vec<_> = r
                .failures()
                .into_iter()
                .map(|(i, c)| json!({ "graph": i, "edges": r.graphs[i].edges, "check": c }))
                .collect();
            doc.results = json!({
                "max_edges": max_edges,
                "graph_count": r.graph_count,
                "graphs_per_edge_count": class_counts(&graphs),
                "tally": r.tally,
                "failures": failures,
            });
            if *details {
                doc.results["graphs"] = json!(r.graphs);
            }
            for (name, t) in &r.tally {
                let exploratory = t.exploratory_violations > 0
                    || r.graphs.iter().flat_map(|g| &g.checks).any(|c| &c.name == name && c.status == Status::Exploratory);
                let detail = format!(
                    "{} held, {} failed, {} exploratory violations",
                    t.passed, t.failed, t.exploratory_violations
                );
                doc.checks.push(if exploratory {
                    Check::exploratory(name.clone(), t.exploratory_violations == 0, detail)
                } else {
                    Check::new(name.clone(), t.failed == 0, detail)
                });
            }
            doc
        }
    };
    doc.timings_us.insert("total".into(), start.elapsed().as_micros() as u64);
    Ok(doc)
}

pub fn report_exit_code(doc: &ReportDocument) -> i32 {
    if doc.failed() {
        EXIT_CHECK_FAILURE
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_pairs() {
        assert_eq!(parse_degrees("1,2"), Ok((1, 2)));
        assert_eq!(parse_degrees(" 3 , 0"), Ok((3, 0)));
        assert!(parse_degrees("1").is_err());
        assert!(parse_degrees("a,1").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::input("x")), EXIT_INPUT);
        assert_eq!(exit_code(&Error::domain("x")), EXIT_INPUT);
        assert_eq!(
            exit_code(&Error::Capacity { what: "x", actual: 2, limit: 1 }),
            EXIT_CAPACITY
        );
        assert_eq!(exit_code(&Error::mismatch("x", "y")), EXIT_CHECK_FAILURE);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(trimmed(vec![1, 0, 0]), vec![1]);
        assert_eq!(trimmed(vec![0]), vec![0]);
        assert_eq!(trimmed(vec![1, 3, 0, 1]), vec![1, 3, 0, 1]);
    }

    #[test]
    fn command_line_shapes() {
        let cli = Cli::try_parse_from(["kirchhoff", "theta", "g.txt", "--max-norm", "3", "--method", "product"]).unwrap();
        assert!(matches!(cli.command, Command::Theta { max_norm: 3, method: Method::Product, .. }));
        let cli = Cli::try_parse_from(["kirchhoff", "torsion", "g.txt", "--degrees", "1,1"]).unwrap();
        assert!(matches!(cli.command, Command::Torsion { degrees: (1, 1), .. }));
        assert!(Cli::try_parse_from(["kirchhoff", "ranks", "g.txt", "--oracle", "bogus"]).is_err());
    }
}
