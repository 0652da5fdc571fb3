//! graph6 encoding as used by nauty/geng: a size header followed by the
//! upper triangle of the adjacency matrix in column order, six bits per
//! printable byte offset by 63.

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn data_byte(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        None => Err(Error::parse(at, "unexpected end of input")),
        Some(&b) if (OFFSET..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(Error::parse(
            at,
            format!("byte 0x{b:02x} is outside the printable range 63..=126"),
        )),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (data_byte(bytes, 0).map_err(|e| shift(e, base))? as usize, 1)
    } else if bytes.get(1) == Some(&126) {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | data_byte(bytes, i).map_err(|e| shift(e, base))? as usize;
        }
        (n, 8)
    } else {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | data_byte(bytes, i).map_err(|e| shift(e, base))? as usize;
        }
        (n, 4)
    };

    if n == 0 {
        return Err(Error::parse(base, "graph6 encodes a graph with no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "graph6 header declares {n} vertices; at most {MAX_VERTICES} are supported"
        )));
    }

    let pairs = n * (n - 1) / 2;
    let body_len = pairs.div_ceil(6);
    if bytes.len() < pos + body_len {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "truncated adjacency body: expected {body_len} bytes, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() > pos + body_len {
        return Err(Error::parse(
            base + pos + body_len,
            "trailing bytes after adjacency body",
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    let mut word = 0u8;
    'outer: for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                word = data_byte(bytes, pos).map_err(|e| shift(e, base))?;
                pos += 1;
            }
            let bit = (word >> (5 - k % 6)) & 1;
            if bit == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    Graph::from_adjacency(adj)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// Canonical graph6 string (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut word = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(word + OFFSET);
                word = 0;
            }
        }
    }
    if k % 6 != 0 {
        word <<= 6 - k % 6;
        out.push(word + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
