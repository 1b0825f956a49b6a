//! Edge-list text format.
//!
//! ```text
//! n m
//! u v      (m lines, 0 ≤ u < v < n)
//! ```
//!
//! Directed graphs use the same layout behind a leading `directed` line;
//! each arc line `u v` means `u → v` and only requires `u ≠ v`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Graph};

/// A parsed edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeList {
    Undirected(Graph),
    Directed(DirectedGraph),
}

impl EdgeList {
    pub fn undirected(&self) -> Graph {
        match self {
            EdgeList::Undirected(g) => g.clone(),
            EdgeList::Directed(d) => d.underlying(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            EdgeList::Undirected(g) => write_graph(g),
            EdgeList::Directed(d) => write_directed(d),
        }
    }
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_directed(d: &DirectedGraph) -> String {
    let arcs = d.arcs();
    let mut out = format!("directed\n{} {}\n", d.n(), arcs.len());
    for (u, v) in arcs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph> {
    match parse(text)? {
        EdgeList::Undirected(g) => Ok(g),
        EdgeList::Directed(_) => Err(Error::Parse {
            line: 1,
            msg: "expected an undirected edge list".into(),
        }),
    }
}

pub fn parse(text: &str) -> Result<EdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (mut lineno, mut header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let directed = header == "directed";
    if directed {
        (lineno, header) = lines.next().ok_or(Error::Parse {
            line: lineno + 1,
            msg: "missing header".into(),
        })?;
    }
    let (n, m) = parse_pair(lineno, header)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let (u, v) = parse_pair(lineno, line)?;
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !directed && u > v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("edge \"{u} {v}\" must be written with u < v"),
            });
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("header declares {m} edges but {} were given", pairs.len()),
        });
    }
    if directed {
        DirectedGraph::from_arcs(n, &pairs).map(EdgeList::Directed)
    } else {
        Graph::from_edges(n, &pairs).map(EdgeList::Undirected)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a nonnegative integer: {tok:?}"),
        })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse { line, msg: "trailing tokens".into() });
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let text = "4 4\n0 1\n0 3\n1 2\n2 3\n";
        let g = read_graph(text).unwrap();
        assert_eq!(write_graph(&g), text);
    }

    #[test]
    fn directed_round_trip() {
        let text = "directed\n3 3\n0 1\n1 2\n2 0\n";
        let parsed = parse(text).unwrap();
        assert!(matches!(parsed, EdgeList::Directed(_)));
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(read_graph("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("3 2\n0 1\n0 1\n"), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(read_graph("3 1\n0 3\n"), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(read_graph("3 1\n2 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("3 1\n1 1\n"), Err(Error::SelfLoop(1))));
        assert!(matches!(read_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("x 1\n"), Err(Error::Parse { line: 1, .. })));
    }
}
