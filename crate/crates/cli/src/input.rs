use std::path::Path;

use graphspark::graph::{parse_graph6, FamilySpec, Graph, VertexSet};
use graphspark::linalg::{io, Rational, RationalMatrix};

/// A graph argument: a family spec such as `path:5`, a graph6 string, or a
/// file of graph6 lines.
pub enum GraphSource {
    One(Graph),
    /// `(line number, graph or error message)` per nonblank line.
    Lines(Vec<(usize, Result<Graph, String>)>),
}

pub fn graph_source(arg: &str) -> Result<GraphSource, String> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        return Ok(GraphSource::Lines(graph_lines(&text)));
    }
    parse_graph(arg).map(GraphSource::One)
}

pub fn graph_lines(text: &str) -> Vec<(usize, Result<Graph, String>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| (i + 1, parse_graph(l.trim())))
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, String> {
    if text.contains(':') || text == "q3" || text == "hypercube3" {
        let spec: FamilySpec = text.parse().map_err(|e| format!("{text}: {e}"))?;
        return spec.generate().map_err(|e| format!("{text}: {e}"));
    }
    parse_graph6(text).map_err(|e| format!("{text}: {e}"))
}

pub fn single_graph(arg: &str) -> Result<Graph, String> {
    match graph_source(arg)? {
        GraphSource::One(g) => Ok(g),
        GraphSource::Lines(mut lines) if lines.len() == 1 => lines.remove(0).1,
        GraphSource::Lines(_) => Err(format!("{arg}: expected a single graph; use `batch` for files")),
    }
}

pub fn vertex_set(text: &str, g: &Graph) -> Result<VertexSet, String> {
    let mut out = VertexSet::EMPTY;
    for t in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = t.parse().map_err(|_| format!("bad vertex {t:?}"))?;
        if v >= g.order() {
            return Err(format!("vertex {v} out of range 0..{}", g.order()));
        }
        out.insert(v);
    }
    Ok(out)
}

pub fn vector(text: &str) -> Result<Vec<Rational>, String> {
    io::parse_vector(text).map_err(|e| e.to_string())
}

/// Reads a matrix file in the text format, or a JSON array of rows when the
/// content starts with `[`.
pub fn matrix_file(path: &str) -> Result<RationalMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let parsed = if text.trim_start().starts_with('[') {
        serde_json::from_str(&text)
            .map_err(|e| graphspark::Error::Domain(e.to_string()))
            .and_then(|v| io::matrix_from_json(&v))
    } else {
        io::parse_matrix(&text)
    };
    parsed.map_err(|e| format!("{path}: {e}"))
}
