//! Graph files: a plain edge list and a subset of GML.
//!
//! The edge list holds the vertex count on the first line, then one
//! 0-indexed `u v` pair per line. `#` starts a comment.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{EdgeSet, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingHeader,
    #[error("expected {0}")]
    Syntax(&'static str),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{u}, {v}}} repeats the edge on line {first_line}")]
    Duplicate { u: usize, v: usize, first_line: usize },
    #[error("unknown node id {0}")]
    UnknownNode(i64),
    #[error("node id {0} defined twice")]
    DuplicateNode(i64),
    #[error("unexpected end of input")]
    UnexpectedEnd,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("{0}: cannot tell the format from the extension (use .el or .gml)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Gml,
}

impl Format {
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "el" | "txt" | "edges" => Some(Format::EdgeList),
            "gml" => Some(Format::Gml),
            _ => None,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edge_list" | "el" => Ok(Format::EdgeList),
            "gml" => Ok(Format::Gml),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

/// Builds a graph, reporting loops and repeated edges at `lines[i]`.
fn checked_graph(n: usize, edges: Vec<(VertexId, VertexId)>, lines: &[usize]) -> Result<Graph, ParseError> {
    let mut first: std::collections::HashMap<(usize, usize), usize> = Default::default();
    for (i, &(u, v)) in edges.iter().enumerate() {
        for x in [u, v] {
            if x >= n {
                return Err(err(lines[i], ParseErrorKind::VertexOutOfRange { vertex: x, vertex_count: n }));
            }
        }
        if u == v {
            return Err(err(lines[i], ParseErrorKind::SelfLoop(u)));
        }
        if let Some(&first_line) = first.get(&(u.min(v), u.max(v))) {
            return Err(err(lines[i], ParseErrorKind::Duplicate { u, v, first_line }));
        }
        first.insert((u.min(v), u.max(v)), lines[i]);
    }
    Ok(Graph::new(n, edges).expect("validated above"))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut fields = body.split_whitespace();
        match n {
            None => {
                let count = fields
                    .next()
                    .and_then(|f| f.parse().ok())
                    .ok_or(err(line, ParseErrorKind::Syntax("a vertex count")))?;
                if fields.next().is_some() {
                    return Err(err(line, ParseErrorKind::Syntax("a single vertex count")));
                }
                n = Some(count);
            }
            Some(_) => {
                let mut endpoint = || -> Result<usize, ParseError> {
                    fields
                        .next()
                        .and_then(|f| f.parse().ok())
                        .ok_or(err(line, ParseErrorKind::Syntax("two vertex ids")))
                };
                let (u, v) = (endpoint()?, endpoint()?);
                if fields.next().is_some() {
                    return Err(err(line, ParseErrorKind::Syntax("two vertex ids")));
                }
                edges.push((u, v));
                lines.push(line);
            }
        }
    }
    let n = n.ok_or(err(text.lines().count().max(1), ParseErrorKind::MissingHeader))?;
    checked_graph(n, edges, &lines)
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
    Str(&'a str),
}

fn tokenize(text: &str) -> Result<Vec<(Token<'_>, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut line = 1;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'\n' => {
                line += 1;
                i += 1;
            }
            b'[' => {
                out.push((Token::Open, line));
                i += 1;
            }
            b']' => {
                out.push((Token::Close, line));
                i += 1;
            }
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'"' => {
                let start = i + 1;
                let at = line;
                i += 1;
                while i < bytes.len() && bytes[i] != b'"' {
                    if bytes[i] == b'\n' {
                        line += 1;
                    }
                    i += 1;
                }
                if i == bytes.len() {
                    return Err(err(at, ParseErrorKind::UnexpectedEnd));
                }
                out.push((Token::Str(&text[start..i]), at));
                i += 1;
            }
            c if c.is_ascii_whitespace() => i += 1,
            _ => {
                let start = i;
                while i < bytes.len() && !bytes[i].is_ascii_whitespace() && !matches!(bytes[i], b'[' | b']' | b'"') {
                    i += 1;
                }
                out.push((Token::Word(&text[start..i]), line));
            }
        }
    }
    Ok(out)
}

struct GmlReader<'a> {
    tokens: Vec<(Token<'a>, usize)>,
    pos: usize,
}

impl<'a> GmlReader<'a> {
    fn line(&self) -> usize {
        self.tokens
            .get(self.pos)
            .or(self.tokens.last())
            .map_or(1, |t| t.1)
    }

    fn next(&mut self) -> Result<(Token<'a>, usize), ParseError> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or(err(self.line(), ParseErrorKind::UnexpectedEnd))?;
        self.pos += 1;
        Ok(t)
    }

    /// Skips one value: a scalar or a bracketed list.
    fn skip_value(&mut self) -> Result<(), ParseError> {
        let (t, line) = self.next()?;
        match t {
            Token::Open => {
                let mut depth = 1;
                while depth > 0 {
                    match self.next()?.0 {
                        Token::Open => depth += 1,
                        Token::Close => depth -= 1,
                        _ => {}
                    }
                }
                Ok(())
            }
            Token::Close => Err(err(line, ParseErrorKind::Syntax("a value"))),
            _ => Ok(()),
        }
    }

    fn expect_open(&mut self) -> Result<(), ParseError> {
        match self.next()? {
            (Token::Open, _) => Ok(()),
            (_, line) => Err(err(line, ParseErrorKind::Syntax("`[`"))),
        }
    }

    fn int(&mut self) -> Result<(i64, usize), ParseError> {
        match self.next()? {
            (Token::Word(w), line) => w
                .parse()
                .map(|v| (v, line))
                .map_err(|_| err(line, ParseErrorKind::Syntax("an integer"))),
            (_, line) => Err(err(line, ParseErrorKind::Syntax("an integer"))),
        }
    }

    /// Reads the keys of a `[ ... ]` block, returning the integer values of
    /// `wanted` keys; everything else is skipped.
    fn block(&mut self, wanted: &[&str]) -> Result<(Vec<Option<i64>>, usize), ParseError> {
        let start = self.line();
        self.expect_open()?;
        let mut values = vec![None; wanted.len()];
        loop {
            match self.next()? {
                (Token::Close, _) => return Ok((values, start)),
                (Token::Word(key), line) => {
                    if let Some(k) = wanted.iter().position(|w| *w == key) {
                        if values[k].is_some() {
                            return Err(err(line, ParseErrorKind::Syntax("each key once per block")));
                        }
                        values[k] = Some(self.int()?.0);
                    } else {
                        self.skip_value()?;
                    }
                }
                (_, line) => Err(err(line, ParseErrorKind::Syntax("a key")))?,
            }
        }
    }
}

/// Reads `graph [ node [ id .. ] edge [ source .. target .. ] ]`. Node ids
/// may be any integers; vertices are numbered in order of appearance.
/// Other keys are ignored.
pub fn parse_gml(text: &str) -> Result<Graph, ParseError> {
    let mut r = GmlReader {
        tokens: tokenize(text)?,
        pos: 0,
    };
    loop {
        match r.next()? {
            (Token::Word("graph"), _) => break,
            (Token::Word(_), _) => r.skip_value()?,
            (_, line) => return Err(err(line, ParseErrorKind::Syntax("`graph`"))),
        }
    }
    r.expect_open()?;
    let mut ids: std::collections::HashMap<i64, usize> = Default::default();
    let mut raw_edges: Vec<(i64, i64, usize)> = Vec::new();
    loop {
        match r.next()? {
            (Token::Close, _) => break,
            (Token::Word("node"), _) => {
                let (v, line) = r.block(&["id"])?;
                let id = v[0].ok_or(err(line, ParseErrorKind::Syntax("a node id")))?;
                let next = ids.len();
                if ids.insert(id, next).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateNode(id)));
                }
            }
            (Token::Word("edge"), _) => {
                let (v, line) = r.block(&["source", "target"])?;
                let (Some(s), Some(t)) = (v[0], v[1]) else {
                    return Err(err(line, ParseErrorKind::Syntax("edge source and target")));
                };
                raw_edges.push((s, t, line));
            }
            (Token::Word(_), _) => r.skip_value()?,
            (_, line) => return Err(err(line, ParseErrorKind::Syntax("a key"))),
        }
    }
    let mut edges = Vec::with_capacity(raw_edges.len());
    let mut lines = Vec::with_capacity(raw_edges.len());
    for (s, t, line) in raw_edges {
        let lookup = |x: i64| ids.get(&x).copied().ok_or(err(line, ParseErrorKind::UnknownNode(x)));
        edges.push((lookup(s)?, lookup(t)?));
        lines.push(line);
    }
    checked_graph(ids.len(), edges, &lines)
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Gml => parse_gml(text),
    }
}

pub fn edge_list_text(g: &Graph) -> String {
    subgraph_text(g, &g.edge_set())
}

/// Edge list of the edges in `kept`, keeping all vertices.
pub fn subgraph_text(g: &Graph, kept: &EdgeSet) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for e in kept.iter() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn gml_text(g: &Graph) -> String {
    let mut out = String::from("graph [\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  node [ id {v} ]");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  edge [ source {u} target {v} ]");
    }
    out.push_str("]\n");
    out
}

/// Reads a graph, taking the format from the extension unless given.
pub fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph, IoError> {
    let shown = path.display().to_string();
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| IoError::UnknownFormat(shown.clone()))?;
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Io {
        path: shown.clone(),
        source,
    })?;
    parse(&text, format).map_err(|source| IoError::Parse { path: shown, source })
}

fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    std::fs::write(path, text).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes `g` as GML if the path ends in `.gml`, otherwise as an edge list.
pub fn write_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    match Format::from_path(path) {
        Some(Format::Gml) => write_text(path, &gml_text(g)),
        _ => write_text(path, &edge_list_text(g)),
    }
}

pub fn write_subgraph(path: &Path, g: &Graph, kept: &EdgeSet) -> Result<(), IoError> {
    write_text(path, &subgraph_text(g, kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gml_tokens_track_lines() {
        let toks = tokenize("a [\n b \"x\ny\" ]\n c").unwrap();
        let lines: Vec<usize> = toks.iter().map(|t| t.1).collect();
        assert_eq!(lines, vec![1, 1, 2, 2, 3, 4]);
    }
}
