//! Text formats: the graph6 encoding for simple graphs and a plain
//! edge-list format that also covers multigraphs.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by
//! column into 6-bit groups offset by 63, after a variable-length vertex
//! count header. Parsing is strict: every byte must be in `63..=126`,
//! the data length must match the vertex count exactly, and padding bits
//! must be zero, so encoding round-trips bit for bit.
//!
//! The edge-list format is one `n <vertex_count>` header line followed by
//! one `u v` line per edge instance; repeating a line raises the edge's
//! multiplicity, and `v v` denotes a loop.

use crate::graph::{Graph, VertexId};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 data truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("unexpected trailing graph6 data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final graph6 byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("vertex count {0} exceeds the supported graph6 range")]
    VertexCountOverflow(u64),
    #[error("graph6 cannot represent this graph: {reason}")]
    NotGraph6Representable { reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

const OFFSET: u8 = 63;

/// Parses a graph6 string (optionally prefixed with `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.strip_prefix(">>graph6<<").unwrap_or(text).as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(FormatError::InvalidByte { offset, byte: b });
        }
    }
    let (n, header_len) = parse_vertex_count(bytes)?;
    // Length check before any allocation: the bit count can exceed u64 for
    // adversarial headers, so size it in u128.
    let bit_count = (n as u128) * (n as u128).saturating_sub(1) / 2;
    let expected = (bit_count.div_ceil(6)) as usize;
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(FormatError::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(FormatError::TrailingData { offset: header_len + expected });
    }
    let n = n as usize;
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[bit_index / 6] - OFFSET;
            if byte & (1 << (5 - bit_index % 6)) != 0 {
                edges.push((u, v));
            }
            bit_index += 1;
        }
    }
    // Trailing pad bits must be zero for a canonical encoding.
    if !bit_index.is_multiple_of(6) {
        let last = data[bit_index / 6] - OFFSET;
        let pad_mask = (1u8 << (6 - bit_index % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(FormatError::NonzeroPadding { offset: header_len + bit_index / 6 });
        }
    }
    Ok(Graph::from_edges(n, edges).expect("indices below n by construction"))
}

fn parse_vertex_count(bytes: &[u8]) -> Result<(u64, usize), FormatError> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as u64, 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(FormatError::Truncated { expected: 4, found: bytes.len() });
        }
        let n = field(&bytes[1..4]);
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(FormatError::Truncated { expected: 8, found: bytes.len() });
    }
    Ok((field(&bytes[2..8]), 8))
}

fn field(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0u64, |acc, &b| (acc << 6) | (b - OFFSET) as u64)
}

/// Encodes a simple graph as graph6. Loops and parallel edges have no
/// representation and produce an error naming the offending edge.
pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    for &(u, v) in g.edges() {
        if u == v {
            return Err(FormatError::NotGraph6Representable {
                reason: format!("loop at vertex {u}"),
            });
        }
        if g.multiplicity(u, v) > 1 {
            return Err(FormatError::NotGraph6Representable {
                reason: format!("parallel edges between {u} and {v}"),
            });
        }
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    match n as u64 {
        0..=62 => out.push(n as u8 + OFFSET),
        63..=258_047 => {
            out.push(126);
            out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + OFFSET));
        }
        258_048..=68_719_476_735 => {
            out.extend([126, 126]);
            out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + OFFSET));
        }
        bigger => return Err(FormatError::VertexCountOverflow(bigger)),
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("bytes in 63..=126 are ASCII"))
}

/// Parses the `n <count>` / `u v` edge-list format. Blank lines are
/// ignored; repeated `u v` lines accumulate multiplicity.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::Empty)?;
    let mut parts = header.split_whitespace();
    let vertex_count = match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| {
            FormatError::EdgeList { line, reason: format!("bad vertex count {count:?}") }
        })?,
        _ => {
            return Err(FormatError::EdgeList {
                line,
                reason: format!("expected header \"n <vertex_count>\", found {header:?}"),
            })
        }
    };
    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| FormatError::EdgeList {
                        line,
                        reason: format!("bad vertex label {s:?}"),
                    })
                };
                (parse(u)?, parse(v)?)
            }
            _ => {
                return Err(FormatError::EdgeList {
                    line,
                    reason: format!("expected \"u v\", found {text:?}"),
                })
            }
        };
        for w in [u, v] {
            if w >= vertex_count {
                return Err(FormatError::EdgeList {
                    line,
                    reason: format!("vertex {w} out of range for {vertex_count} vertices"),
                });
            }
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(vertex_count, edges).expect("range checked per line"))
}

/// Writes the edge-list format with edges in sorted order, so output is
/// canonical for a fixed labeling.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// JSON form of a graph: {"vertices": n, "edges": [[u, v], ...]}.
// Deserialization funnels through the validating constructor.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("vertices", &self.vertex_count())?;
        s.serialize_field("edges", self.edges())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            vertices: usize,
            edges: Vec<(VertexId, VertexId)>,
        }
        let wire = Wire::deserialize(deserializer)?;
        Graph::from_edges(wire.vertices, wire.edges).map_err(D::Error::custom)
    }
}
