//! graph6 encoding.
//!
//! A graph6 string is `N(n) R(x)`. `N(n)` is one byte `n + 63` for
//! `n <= 62`, otherwise `~` followed by three bytes carrying `n` as 18 bits,
//! six per byte, most significant first. `R(x)` packs the upper triangle of
//! the adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`
//! six bits per byte (value + 63), zero-padded to a whole byte.

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest order expressible with the 4-byte size prefix.
pub const MAX_ORDER: usize = 258_047;

const SHORT_LIMIT: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 string ends at offset {offset}; expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph orders above {MAX_ORDER} are not supported (offset {offset})")]
    OrderTooLarge { offset: usize },
    #[error("the graph6 encoding of a graph with no vertices is not a valid graph")]
    NoVertices,
}

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// line terminators are ignored; offsets in errors count from the first byte
/// after the header.
pub fn parse_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim_end_matches(['\n', '\r']);
    let bytes = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    let sixes = |range: std::ops::Range<usize>| -> Result<Vec<u8>, Graph6Error> {
        range
            .map(|offset| match bytes.get(offset) {
                None => Err(Graph6Error::Truncated { offset, expected: 0 }),
                Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
                Some(&byte) => Err(Graph6Error::InvalidByte { offset, byte }),
            })
            .collect()
    };

    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let (n, header_len) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Graph6Error::OrderTooLarge { offset: 0 });
        }
        let digits = sixes(1..4).map_err(|e| with_expected(e, 4))?;
        let n = digits.iter().fold(0usize, |acc, &d| (acc << 6) | d as usize);
        (n, 4)
    } else {
        (sixes(0..1)?[0] as usize, 1)
    };
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }

    let bits = bit_count(n);
    let data_len = bits.div_ceil(6);
    let total = header_len + data_len;
    let data = sixes(header_len..total).map_err(|e| with_expected(e, total))?;
    if bytes.len() > total {
        return Err(Graph6Error::TrailingData { offset: total });
    }
    if let Some(&last) = data.last() {
        let padding = data_len * 6 - bits;
        if last & ((1u8 << padding) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: total - 1 });
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if data[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

fn with_expected(e: Graph6Error, expected: usize) -> Graph6Error {
    match e {
        Graph6Error::Truncated { offset, .. } => Graph6Error::Truncated { offset, expected },
        other => other,
    }
}

/// Encodes `g` in the shortest graph6 form, without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + bit_count(n).div_ceil(6));
    if n <= SHORT_LIMIT {
        out.push(n as u8 + 63);
    } else if n <= MAX_ORDER {
        out.push(126);
        out.extend([12, 6, 0].map(|shift| ((n >> shift) & 63) as u8 + 63));
    } else {
        return Err(Graph6Error::OrderTooLarge { offset: 0 });
    }

    let mut packed = vec![0u8; bit_count(n).div_ceil(6)];
    // Column-major upper triangle: edge (u, v), u < v, sits at v(v-1)/2 + u.
    for &(u, v) in g.edges() {
        let k = v * (v - 1) / 2 + u;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(packed.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
