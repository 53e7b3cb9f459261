//! The graph6 text format for simple undirected graphs.
//!
//! Bits of the upper triangle are emitted column by column (`x(0,1)`,
//! `x(0,2)`, `x(1,2)`, `x(0,3)`, ...), packed six per byte and offset by 63.

use core::fmt;

use alloc::vec::Vec;

use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    InvalidByte {
        position: usize,
        byte: u8,
    },
    /// The body does not have the length required by the vertex count.
    WrongLength {
        expected: usize,
        found: usize,
    },
    /// Padding bits of the final byte must be zero.
    NonzeroPadding,
    TooLarge {
        vertices: u64,
    },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidByte { position, byte } => {
                write!(f, "invalid graph6 byte {byte:#04x} at position {position}")
            }
            Graph6Error::WrongLength { expected, found } => {
                write!(f, "graph6 body has {found} bytes, expected {expected}")
            }
            Graph6Error::NonzeroPadding => write!(f, "graph6 padding bits are not zero"),
            Graph6Error::TooLarge { vertices } => {
                write!(f, "graph6 vertex count {vertices} is too large")
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes from an upper-triangle predicate.
pub(crate) fn encode_with<F: Fn(usize, usize) -> bool>(n: usize, adjacent: F) -> Vec<u8> {
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adjacent(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    out
}

/// graph6 bytes for `g`, without header or trailing newline.
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut adj = alloc::vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
    }
    encode_with(n, |i, j| adj[i * n + j])
}

/// Parses one graph6 record. An optional `>>graph6<<` header and surrounding
/// ASCII whitespace are accepted.
pub fn decode(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = bytes.trim_ascii();
    let bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::WrongLength {
                expected: 8,
                found: bytes.len(),
            });
        }
        let n = bytes[2..8]
            .iter()
            .fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::WrongLength {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
        (n, 4)
    };
    // Dense adjacency below is quadratic; graphs here are small.
    if n > 4096 {
        return Err(Graph6Error::TooLarge { vertices: n });
    }
    let n = n as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    // Pairs are in range, loop-free and distinct by construction.
    Ok(Graph::new(n, &pairs).expect("graph6 decoding yields a simple graph"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::complete(4).unwrap()), b"C~");
        assert_eq!(encode(&Graph::path(2).unwrap()), b"A_");
        assert_eq!(encode(&Graph::empty()), b"?");
        // P3: x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000 = 40 -> 'g'.
        assert_eq!(encode(&Graph::path(3).unwrap()), b"Bg");
        // C5: bits x01 x02 x12 x03 x13 x23 | x04 x14 x24 x34
        //       1   0   1   0   0   1   |  1   0   0   1
        //  -> 101001 = 41 'h', 1001 00 = 36 'c'
        assert_eq!(encode(&Graph::cycle(5).unwrap()), b"Dhc");
    }

    #[test]
    fn roundtrip_families() {
        let gs = [
            Graph::complete(7).unwrap(),
            Graph::complete_bipartite(4, 3).unwrap(),
            Graph::spider(5).unwrap(),
            Graph::banner(),
            Graph::cycle(63).unwrap(),
            Graph::path(100).unwrap(),
        ];
        for g in gs {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn header_and_errors() {
        assert_eq!(
            decode(b">>graph6<<C~\n").unwrap(),
            Graph::complete(4).unwrap()
        );
        assert_eq!(decode(b""), Err(Graph6Error::Empty));
        assert!(matches!(
            decode(b"C~~"),
            Err(Graph6Error::WrongLength { .. })
        ));
        assert!(matches!(
            decode(b"C\x01"),
            Err(Graph6Error::InvalidByte { .. })
        ));
        // Two vertices use one bit; any further bit is padding.
        assert_eq!(decode(b"A`"), Err(Graph6Error::NonzeroPadding));
    }
}
