//! JSON and text input/output. Graphs serialize as
//! {"n": ..., "edges": [[u,v], ...]} with the edge array order normative;
//! plain whitespace-separated edge lists ("u v" per line) are also accepted,
//! with n inferred. Numbers that may exceed the 53-bit range JSON can store
//! losslessly are emitted as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exact::{IntPoly, RatPoly, RationalFunction};
use crate::flows::Multigraph;
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Parses a graph from JSON, or, failing that, from edge-list text.
pub fn parse_graph(input: &str) -> Result<Graph> {
    match serde_json::from_str::<GraphJson>(input) {
        Ok(gj) => Graph::new(gj.n, &gj.edges),
        Err(_) => graph_from_text(input),
    }
}

/// Parses a multigraph (repeated edge pairs allowed) the same way.
pub fn parse_multigraph(input: &str) -> Result<Multigraph> {
    match serde_json::from_str::<GraphJson>(input) {
        Ok(gj) => Multigraph::new(gj.n, &gj.edges),
        Err(_) => {
            let edges = edges_from_text(input)?;
            let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
            Multigraph::new(n, &edges)
        }
    }
}

fn edges_from_text(input: &str) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = (parts.next(), parts.next());
        let parse = |s: Option<&str>| -> Result<usize> {
            s.and_then(|x| x.parse().ok()).ok_or_else(|| {
                Error::InvalidGraph(format!("line {}: expected 'u v'", lineno + 1))
            })
        };
        edges.push((parse(u)?, parse(v)?));
        if parts.next().is_some() {
            return Err(Error::InvalidGraph(format!(
                "line {}: expected exactly two vertex indices",
                lineno + 1
            )));
        }
    }
    Ok(edges)
}

/// Edge-list text with n inferred as one past the largest vertex index.
pub fn graph_from_text(input: &str) -> Result<Graph> {
    let edges = edges_from_text(input)?;
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::new(n, &edges)
}

pub fn graph_to_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
    })
}

/// Largest integer magnitude JSON numbers hold losslessly: 2^53.
const JSON_SAFE: i64 = 1 << 53;

pub fn bigint_to_json(x: &BigInt) -> Value {
    if x.abs() < BigInt::from(JSON_SAFE) {
        let as_i64 = i64::try_from(x.clone()).expect("checked magnitude");
        json!(as_i64)
    } else {
        json!(x.to_string())
    }
}

pub fn u64_to_json(x: u64) -> Value {
    bigint_to_json(&BigInt::from(x))
}

pub fn rational_to_json(x: &BigRational) -> Value {
    if x.is_integer() {
        bigint_to_json(&x.to_integer())
    } else {
        json!(format!("{}/{}", x.numer(), x.denom()))
    }
}

/// Coefficient array, lowest degree first.
pub fn int_poly_to_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_to_json).collect())
}

pub fn rat_poly_to_json(p: &RatPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn ratfun_to_json(f: &RationalFunction) -> Value {
    json!({
        "num": rat_poly_to_json(f.num()),
        "den": rat_poly_to_json(f.den()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn graph_json_roundtrip_preserves_ranks() {
        let g = Graph::new(4, &[(2, 3), (0, 1), (1, 2), (0, 3)]).unwrap();
        let emitted = graph_to_json(&g).to_string();
        let back = parse_graph(&emitted).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn text_edge_list() {
        let g = graph_from_text("0 1\n1 2\n2 3\n0 3\n").unwrap();
        assert_eq!(g, cycle(4));
        assert!(graph_from_text("0\n").is_err());
        assert!(graph_from_text("0 1 2\n").is_err());
    }

    #[test]
    fn multigraph_accepts_parallel_edges() {
        let m = parse_multigraph(r#"{"n": 2, "edges": [[0,1],[0,1],[0,1]]}"#).unwrap();
        assert_eq!(m.edges().len(), 3);
    }

    #[test]
    fn big_numbers_become_strings() {
        assert_eq!(bigint_to_json(&BigInt::from(12)), json!(12));
        let huge = BigInt::from(2).pow(80);
        assert_eq!(bigint_to_json(&huge), json!(huge.to_string()));
    }

    #[test]
    fn rationals_render_as_fractions() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rational_to_json(&half), json!("1/2"));
        let three = BigRational::from_integer(BigInt::from(3));
        assert_eq!(rational_to_json(&three), json!(3));
    }
}
