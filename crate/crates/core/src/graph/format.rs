use std::fmt::Write;

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 size header encodes more than {MAX_VERTICES} vertices")]
    SizeOverflow,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("nonzero padding bits in graph6 body")]
    NonzeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// graph6 encoding: `n + 63`, then the upper triangle column by column
/// (x01, x02, x12, x03, ...) packed big-endian into 6-bit groups offset by 63.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode_graph6(s: impl AsRef<[u8]>) -> Result<Graph, Graph6Error> {
    let bytes = s.as_ref();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { byte, offset });
        }
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::SizeOverflow);
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::empty(n).expect("n checked above");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad_bits = 6 - k % 6;
        let last = body[body.len() - 1] - 63;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

/// DOT text: `graph G { 0 -- 1; ... }` with `u < v`, ascending. Isolated
/// vertices are declared first so that they survive the export.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {");
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            write!(s, " {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        write!(s, " {u} -- {v};").unwrap();
    }
    s.push_str(" }\n");
    s
}
