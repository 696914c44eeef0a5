//! The PLG text format.
//!
//! ```text
//! PLG 1
//! n=4
//! 0: 1 3 2
//! 1: 2 3 0
//! 2: 0 3 1
//! 3: 0 1 2
//! outer: 0 1 2
//! ```
//!
//! Vertex lines appear in label order and list neighbors clockwise. `#`
//! starts a comment that runs to the end of the line; blank lines are
//! ignored. Labels are plain decimal without sign or leading zeros.

use thiserror::Error;

use super::plane::{EmbedError, PlaneGraph};

/// Upper bound on the declared vertex count; guards allocation on hostile input.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlgError {
    #[error("line {line}: input is not ASCII")]
    NonAscii { line: usize },
    #[error("line {line}: expected header `PLG 1`")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected `n=<count>`")]
    MalformedCount { line: usize },
    #[error("line {line}: expected `{expected}: <neighbors>`")]
    MalformedVertexLine { line: usize, expected: usize },
    #[error("line {line}: bad label `{token}`")]
    BadLabel { line: usize, token: String },
    #[error("line {line}: label out of range: {label} (n={n})")]
    LabelOutOfRange { line: usize, label: usize, n: usize },
    #[error("line {line}: vertex {vertex} lists itself")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: repeated neighbor {neighbor} of vertex {vertex}")]
    RepeatedNeighbor { line: usize, vertex: usize, neighbor: usize },
    #[error("line {line}: asymmetric adjacency: {vertex} lists {neighbor} but not conversely")]
    AsymmetricAdjacency { line: usize, vertex: usize, neighbor: usize },
    #[error("line {line}: disconnected graph: vertex {vertex} unreachable from 0")]
    Disconnected { line: usize, vertex: usize },
    #[error("rotation system is not a sphere embedding (v - e + f = {euler})")]
    NotPlanar { euler: i64 },
    #[error("line {line}: outer walk is not a face")]
    OuterNotFacial { line: usize },
    #[error("line {line}: unexpected content after the vertex lines")]
    TrailingContent { line: usize },
    #[error("missing vertex lines: expected {expected}, found {found}")]
    MissingVertices { expected: usize, found: usize },
    #[error("empty graph (n=0)")]
    Empty,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_label(line: usize, tok: &str) -> Result<usize, PlgError> {
    let bad = || PlgError::BadLabel { line, token: tok.to_string() };
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) || (tok.len() > 1 && tok.starts_with('0')) {
        return Err(bad());
    }
    tok.parse::<usize>().map_err(|_| bad())
}

/// Parses PLG text into a validated plane graph.
pub fn parse_plg(text: &[u8]) -> Result<PlaneGraph, PlgError> {
    if let Some(pos) = text.iter().position(|b| !b.is_ascii()) {
        let line = text[..pos].iter().filter(|&&b| b == b'\n').count() + 1;
        return Err(PlgError::NonAscii { line });
    }
    let text = std::str::from_utf8(text).expect("ascii is utf-8");
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hl, header) = lines.next().ok_or(PlgError::MalformedHeader { line: 1 })?;
    if header.split_ascii_whitespace().collect::<Vec<_>>() != ["PLG", "1"] {
        return Err(PlgError::MalformedHeader { line: hl });
    }
    let (cl, count) = lines.next().ok_or(PlgError::MalformedCount { line: hl + 1 })?;
    let n = count
        .strip_prefix("n=")
        .ok_or(PlgError::MalformedCount { line: cl })
        .and_then(|s| parse_label(cl, s).map_err(|_| PlgError::MalformedCount { line: cl }))?;
    if n == 0 {
        return Err(PlgError::Empty);
    }
    if n > MAX_VERTICES {
        return Err(PlgError::MalformedCount { line: cl });
    }

    let mut rotation: Vec<Vec<usize>> = Vec::new();
    let mut line_of: Vec<usize> = Vec::new();
    let mut outer: Option<(usize, Vec<usize>)> = None;
    for (ln, l) in lines {
        if outer.is_some() {
            return Err(PlgError::TrailingContent { line: ln });
        }
        let (head, rest) = match l.split_once(':') {
            Some(x) => x,
            None if rotation.len() < n => {
                return Err(PlgError::MalformedVertexLine { line: ln, expected: rotation.len() })
            }
            None => return Err(PlgError::TrailingContent { line: ln }),
        };
        let head = head.trim();
        let labels = rest
            .split_ascii_whitespace()
            .map(|t| parse_label(ln, t))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(&bad) = labels.iter().find(|&&w| w >= n) {
            return Err(PlgError::LabelOutOfRange { line: ln, label: bad, n });
        }
        if head == "outer" {
            if rotation.len() < n {
                return Err(PlgError::MissingVertices { expected: n, found: rotation.len() });
            }
            outer = Some((ln, labels));
            continue;
        }
        let v = parse_label(ln, head)?;
        if rotation.len() >= n {
            return Err(PlgError::TrailingContent { line: ln });
        }
        if v != rotation.len() {
            return Err(PlgError::MalformedVertexLine { line: ln, expected: rotation.len() });
        }
        let mut seen = std::collections::HashSet::new();
        for &w in &labels {
            if w == v {
                return Err(PlgError::SelfLoop { line: ln, vertex: v });
            }
            if !seen.insert(w) {
                return Err(PlgError::RepeatedNeighbor { line: ln, vertex: v, neighbor: w });
            }
        }
        rotation.push(labels);
        line_of.push(ln);
    }
    if rotation.len() < n {
        return Err(PlgError::MissingVertices { expected: n, found: rotation.len() });
    }
    let outer_line = outer.as_ref().map(|(l, _)| *l).unwrap_or(0);
    PlaneGraph::new(rotation, outer.map(|(_, w)| w)).map_err(|e| match e {
        EmbedError::Asymmetric { vertex, neighbor } => {
            PlgError::AsymmetricAdjacency { line: line_of[vertex], vertex, neighbor }
        }
        EmbedError::Disconnected(vertex) => PlgError::Disconnected { line: line_of[vertex], vertex },
        EmbedError::NotPlanar(euler) => PlgError::NotPlanar { euler },
        EmbedError::OuterNotFacial => PlgError::OuterNotFacial { line: outer_line },
        EmbedError::LabelOutOfRange { vertex, label } => {
            PlgError::LabelOutOfRange { line: line_of[vertex], label, n }
        }
        EmbedError::SelfLoop(vertex) => PlgError::SelfLoop { line: line_of[vertex], vertex },
        EmbedError::RepeatedNeighbor { vertex, neighbor } => {
            PlgError::RepeatedNeighbor { line: line_of[vertex], vertex, neighbor }
        }
        EmbedError::Empty => PlgError::Empty,
        EmbedError::NoSuchDart(..) => unreachable!("no dart designation while parsing"),
    })
}

/// Serializes a plane graph as PLG text (LF line endings, trailing newline).
pub fn serialize_plg(g: &PlaneGraph) -> String {
    let mut out = String::from("PLG 1\n");
    out.push_str(&format!("n={}\n", g.n()));
    for v in 0..g.n() {
        out.push_str(&format!("{}:", v));
        for w in g.rotation(v) {
            out.push_str(&format!(" {}", w));
        }
        out.push('\n');
    }
    if let Some(outer) = g.outer() {
        out.push_str("outer:");
        for v in outer {
            out.push_str(&format!(" {}", v));
        }
        out.push('\n');
    }
    out
}

/// Lexical normal form of PLG text: comments and blank lines dropped,
/// whitespace collapsed, and `label: a b c` spacing around colons.
pub fn normalize_plg(text: &str) -> String {
    let mut out = String::new();
    for line in text.split('\n') {
        let line = strip_comment(line).trim();
        if line.is_empty() {
            continue;
        }
        match line.split_once(':') {
            Some((head, rest)) => {
                out.push_str(head.trim());
                out.push(':');
                for tok in rest.split_ascii_whitespace() {
                    out.push(' ');
                    out.push_str(tok);
                }
            }
            None => out.push_str(&line.split_ascii_whitespace().collect::<Vec<_>>().join(" ")),
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "PLG 1\nn=4\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\nouter: 0 1 2\n";

    #[test]
    fn parses_k4() {
        let g = parse_plg(K4.as_bytes()).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(serialize_plg(&g), K4);
    }

    #[test]
    fn comments_and_whitespace() {
        let messy = "# a tetrahedron\nPLG   1\n\nn=4   # four\n0:1 3 2\n 1 : 2 3 0\n2: 0  3 1\n3: 0 1 2\nouter: 0 1 2";
        let g = parse_plg(messy.as_bytes()).unwrap();
        assert_eq!(serialize_plg(&g), normalize_plg(messy));
    }

    #[test]
    fn label_out_of_range() {
        let bad = "PLG 1\nn=4\n0: 1 5 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n";
        let err = parse_plg(bad.as_bytes()).unwrap_err();
        assert_eq!(err, PlgError::LabelOutOfRange { line: 3, label: 5, n: 4 });
        assert!(err.to_string().contains("label out of range"));
    }

    #[test]
    fn distinct_errors() {
        let header = "PLG 2\nn=1\n0:\n";
        assert_eq!(parse_plg(header.as_bytes()), Err(PlgError::MalformedHeader { line: 1 }));
        let asym = "PLG 1\nn=3\n0: 1\n1: 0 2\n2:\n";
        assert_eq!(
            parse_plg(asym.as_bytes()),
            Err(PlgError::AsymmetricAdjacency { line: 4, vertex: 1, neighbor: 2 })
        );
        let rep = "PLG 1\nn=2\n0: 1 1\n1: 0\n";
        assert_eq!(
            parse_plg(rep.as_bytes()),
            Err(PlgError::RepeatedNeighbor { line: 3, vertex: 0, neighbor: 1 })
        );
        let disc = "PLG 1\nn=4\n0: 1\n1: 0\n2: 3\n3: 2\n";
        assert_eq!(parse_plg(disc.as_bytes()), Err(PlgError::Disconnected { line: 5, vertex: 2 }));
        let order = "PLG 1\nn=2\n1: 0\n0: 1\n";
        assert_eq!(
            parse_plg(order.as_bytes()),
            Err(PlgError::MalformedVertexLine { line: 3, expected: 0 })
        );
        let outer = "PLG 1\nn=4\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\nouter: 0 1 3 2\n";
        assert_eq!(parse_plg(outer.as_bytes()), Err(PlgError::OuterNotFacial { line: 7 }));
        assert_eq!(parse_plg(b"PLG 1\nn=01\n0:\n"), Err(PlgError::MalformedCount { line: 2 }));
        assert_eq!(parse_plg(b"PLG 1\nn=2\n0: 1\n"), Err(PlgError::MissingVertices { expected: 2, found: 1 }));
    }
}
