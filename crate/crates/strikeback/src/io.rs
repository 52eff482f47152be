//! Text input formats: graph6, edge lists and hypergraph incidence lists.

use std::fs;
use std::path::Path;

use strikeback_core::graph6::{parse_graph6, to_graph6};
use strikeback_core::{Graph, GraphError, Hypergraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> InputError {
    InputError::Syntax { line, msg: msg.into() }
}

/// Non-blank lines with `#` comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, InputError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found {t:?}"))))
        .collect()
}

/// Numbered content lines after the header.
type Body<'a> = Vec<(usize, &'a str)>;

/// Parses the header line "n m" and returns the remaining lines.
fn header(text: &str) -> Result<(usize, usize, Body<'_>), InputError> {
    let mut lines = content_lines(text);
    let (at, first) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let head = numbers(at, first)?;
    let [n, m] = head[..] else {
        return Err(syntax(at, "header must be \"n m\""));
    };
    let rest: Vec<_> = lines.collect();
    if rest.len() != m {
        let line = rest.last().map_or(at, |l| l.0);
        return Err(syntax(line, format!("header announces {m} lines, found {}", rest.len())));
    }
    Ok((n, m, rest))
}

/// Edge-list text: first line "n m", then `m` lines "u v".
pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let (n, _, rest) = header(text)?;
    let mut edges = Vec::with_capacity(rest.len());
    for (line, body) in rest {
        match numbers(line, body)?[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(syntax(line, "edge line must be \"u v\"")),
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Hypergraph text: first line "n m", then one line of vertices per
/// hyperedge.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, InputError> {
    let (n, _, rest) = header(text)?;
    let mut edges = Vec::with_capacity(rest.len());
    for (line, body) in rest {
        let mut e = numbers(line, body)?;
        e.sort_unstable();
        edges.push(e);
    }
    Ok(Hypergraph::new(n, edges)?)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.order(), h.edges().len());
    for e in h.edges() {
        let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

/// Reads a graph file. A first line of two integers means an edge list,
/// anything else is taken as graph6 (first graph in the file).
pub fn parse_graph_text(text: &str) -> Result<Graph, InputError> {
    let (line, first) = content_lines(text).next().ok_or_else(|| syntax(1, "empty input"))?;
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.bytes().all(|b| b.is_ascii_digit())) {
        parse_edge_list(text)
    } else {
        parse_graph6(first).map_err(|e| syntax(line, e.to_string()))
    }
}

pub fn read_file(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Read { path: path.display().to_string(), source })
}

/// graph6 for reports; graphs too large for the format get an empty
/// string.
pub fn graph6_or_empty(g: &Graph) -> String {
    to_graph6(g).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use strikeback_core::generate::{cycle, petersen};

    #[test]
    fn edge_list_round_trip() {
        let g = petersen();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph_text(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_file() {
        assert_eq!(parse_graph_text("# pentagon\nDhc\n").unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(InputError::Syntax { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(InputError::Syntax { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(InputError::Graph(GraphError::VertexOutOfRange { .. }))));
        assert!(matches!(parse_edge_list(""), Err(InputError::Syntax { .. })));
    }

    #[test]
    fn hypergraph_round_trip() {
        let text = "7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h.properties().uniform_k, Some(3));
        assert_eq!(write_hypergraph(&h), text);
        assert!(parse_hypergraph("3 1\n0\n").is_err());
    }
}
