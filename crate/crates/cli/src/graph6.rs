//! graph6 encoding, compatible with nauty's `geng`/`showg`.
//!
//! A graph on `n` vertices is written as `N(n)` followed by the upper
//! triangle of its adjacency matrix in column order `(0,1), (0,2), (1,2),
//! (0,3), ...`, six bits per byte, most significant bit first, each byte
//! offset by 63. `N(n)` is the single byte `n + 63` for `n <= 62` and `~`
//! followed by three 6-bit bytes otherwise.

use subcubic_core::{Graph, VertexSet, MAX_VERTICES};
use thiserror::Error;

/// Optional header some tools put on the first line.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("expected {expected} adjacency bytes for {n} vertices, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in the last byte")]
    NonzeroPadding,
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 string. Surrounding whitespace and a leading
/// [`HEADER`] are ignored.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    let (n, body) = if bytes[0] != b'~' {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.get(1) == Some(&b'~') {
        // Eight-byte form, only for n >= 258048.
        if bytes.len() < 8 {
            return Err(Graph6Error::Length {
                n: 0,
                expected: 8,
                found: bytes.len(),
            });
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Length {
                n: 0,
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { n });
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: body.len(),
        });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    if total % 6 != 0 {
        let pad = 6 - total % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric and loop-free"))
}
