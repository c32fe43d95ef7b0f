//! Line-oriented text format for weighted graphs.
//!
//! ```text
//! # a comment
//! v a
//! v b
//! e a b 3
//! ```
//!
//! `v <id>` declares a vertex, `e <id1> <id2> <m>` sets the weight of an
//! unordered pair (`m >= 2`). Pairs without an `e` line have weight `∞`.

use std::collections::HashSet;

use thiserror::Error;

use super::WeightedGraph;
use crate::coxeter::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: pair {a} {b} declared twice")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: vertex {id} declared twice")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: unknown vertex {id}")]
    UnknownVertex { line: usize, id: String },
    #[error("line {line}: weight {weight} is below 2")]
    BadWeight { line: usize, weight: u64 },
}

pub fn parse_complex(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut ids: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut edges: Vec<(usize, String, String, u32)> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: &str| ParseError::Syntax { line, message: message.to_owned() };
        match tokens.as_slice() {
            [] => {}
            ["v", id] => {
                if !seen.insert((*id).to_owned()) {
                    return Err(ParseError::DuplicateVertex { line, id: (*id).to_owned() });
                }
                ids.push((*id).to_owned());
            }
            ["e", a, b, m] => {
                let weight: u64 = m.parse().map_err(|_| syntax(&format!("weight {m:?} is not an integer")))?;
                if weight < 2 {
                    return Err(ParseError::BadWeight { line, weight });
                }
                let weight = u32::try_from(weight).map_err(|_| syntax("weight too large"))?;
                if a == b {
                    return Err(syntax("an edge needs two distinct vertices"));
                }
                edges.push((line, (*a).to_owned(), (*b).to_owned(), weight));
            }
            ["v", ..] => return Err(syntax("expected `v <id>`")),
            ["e", ..] => return Err(syntax("expected `e <id1> <id2> <weight>`")),
            [other, ..] => return Err(syntax(&format!("unknown record {other:?}"))),
        }
    }

    let mut g = WeightedGraph::new(ids).expect("duplicates rejected above");
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    for (line, a, b, m) in edges {
        let lookup = |id: &str| g.index_of(id).ok_or_else(|| ParseError::UnknownVertex { line, id: id.to_owned() });
        let (i, j) = (lookup(&a)?, lookup(&b)?);
        if !pairs.insert((i.min(j), i.max(j))) {
            return Err(ParseError::DuplicateEdge { line, a, b });
        }
        g.set_weight(i, j, Weight::Finite(m)).expect("validated above");
    }
    Ok(g)
}

/// Canonical text: sorted `v` lines, then `e` lines for finite-weight pairs
/// in lexicographic order.
pub fn serialize_complex(g: &WeightedGraph) -> String {
    let mut out = String::new();
    for id in g.vertices() {
        out.push_str("v ");
        out.push_str(id);
        out.push('\n');
    }
    for (i, j, m) in g.edges() {
        out.push_str(&format!("e {} {} {}\n", g.id(i), g.id(j), m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::examples::cycle;

    #[test]
    fn parses_single_edge() {
        let g = parse_complex("v a\nv b\ne a b 3\n").unwrap();
        assert_eq!(g.weight_by_id("a", "b").unwrap(), Weight::Finite(3));
    }

    #[test]
    fn pentagon_file() {
        let text = "# pentagon\nv 1\nv 2\nv 3\nv 4\nv 5\ne 1 2 2\ne 2 3 2\ne 3 4 2\ne 4 5 2\ne 5 1 2  # closing edge\n";
        let g = parse_complex(text).unwrap();
        assert_eq!(g.edges().len(), 5);
        assert_eq!(g.weight_by_id("1", "3").unwrap(), Weight::Infinite);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_complex("v a\nv b\ne a b 1"),
            Err(ParseError::BadWeight { line: 3, weight: 1 })
        );
        assert_eq!(
            parse_complex("v a\nv b\ne a b 2\ne b a 3\n"),
            Err(ParseError::DuplicateEdge { line: 4, a: "b".into(), b: "a".into() })
        );
        assert_eq!(
            parse_complex("v a\ne a c 2\n"),
            Err(ParseError::UnknownVertex { line: 2, id: "c".into() })
        );
        assert_eq!(
            parse_complex("v a\nv a\n"),
            Err(ParseError::DuplicateVertex { line: 2, id: "a".into() })
        );
        assert!(matches!(parse_complex("v a\nv b\ne a b x\n"), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(parse_complex("x y\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_complex("v a\ne a a 2\n"), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn round_trip() {
        let g = cycle(5).with_edge("v00", "v02", 7);
        assert_eq!(parse_complex(&serialize_complex(&g)).unwrap(), g);
    }
}
