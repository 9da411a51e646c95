//! graph6 encoding: 6-bit groups offset by 63, upper triangle in column order.
//!
//! Orders up to 62 use the one-byte size field; 63 and 64 use the `~` +
//! three-byte field. The optional `>>graph6<<` header is tolerated on
//! input and never emitted.

use crate::error::Graph6Error;
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_VERTICES);
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // 126 '~' then 18-bit big-endian order in three 6-bit groups
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            group = (group << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte(b));
    }
    let (n, data) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::BadHeader); // 8-byte tier unsupported
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage);
    }
    let mut b = GraphBuilder::new(n);
    let mut bit_idx = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = data[bit_idx / 6] - 63;
            if byte >> (5 - bit_idx % 6) & 1 == 1 {
                b.add_edge(row, col);
            }
            bit_idx += 1;
        }
    }
    // padding bits must be zero
    for pad in nbits..expected * 6 {
        let byte = data[pad / 6] - 63;
        if byte >> (5 - pad % 6) & 1 == 1 {
            return Err(Graph6Error::TrailingGarbage);
        }
    }
    Ok(b.build())
}
