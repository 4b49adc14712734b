//! Edge-list and graph6 readers/writers.
//!
//! Edge list: a header line `N M`, then `M` lines `u v` with 1-based
//! endpoints. `#` starts a comment. A `;` is accepted as a line break so that
//! graphs can be passed inline on a command line.
//!
//! graph6: the standard printable encoding (upper triangle, column-major,
//! six bits per byte offset by 63), optionally prefixed by `>>graph6<<`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, MAX_VERTICES};
use crate::error::GraphError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format {other:?}")),
        }
    }
}

/// Parses a graph. Disconnected graphs are accepted; use
/// [`parse_connected_graph`] at analysis entry points.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

/// Parses a graph and rejects it unless it is connected.
pub fn parse_connected_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    let g = parse_graph(text, format)?;
    let comps = g.components().len();
    if comps > 1 {
        return Err(GraphError::Disconnected(comps));
    }
    Ok(g)
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse().map_err(|_| GraphError::Malformed {
        line,
        message: format!("expected a non-negative integer, found {tok:?}"),
    })
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .split(['\n', ';'])
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        message: "missing header line \"N M\"".into(),
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(GraphError::Malformed {
            line: hline,
            message: format!("header must be \"N M\", found {header:?}"),
        });
    }
    let n = parse_usize(toks[0], hline)?;
    let m = parse_usize(toks[1], hline)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::VertexCount(n));
    }

    let mut g = Graph::empty(n)?;
    let mut found = 0usize;
    for (lno, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(GraphError::Malformed {
                line: lno,
                message: format!("edge line must be \"u v\", found {l:?}"),
            });
        }
        let u = parse_usize(toks[0], lno)?;
        let v = parse_usize(toks[1], lno)?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if g.has_edge(u - 1, v - 1) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        g.toggle_edge(u - 1, v - 1);
        found += 1;
    }
    if found != m {
        return Err(GraphError::EdgeCount { declared: m, found });
    }
    Ok(g)
}

fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] < 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(GraphError::Graph6("unsupported size prefix".into()));
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::VertexCount(n));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(GraphError::Graph6(format!(
            "expected {need} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.toggle_edge(i, j);
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if k % 6 != 0 && (body[need - 1] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(GraphError::Graph6("non-zero padding bits".into()));
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = if n <= 62 {
        vec![(n as u8) + 63]
    } else {
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    };
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (a, b) in edges {
        s.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    s
}
