//! graph6 encoding (McKay). Only the graph6 flavour is handled; sparse6 and
//! digraph6 inputs are rejected as malformed.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per
//! byte, most significant bit first, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_VERTICES: usize = 10_000;

fn check_byte(offset: usize, b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::at_byte(offset, format!("byte 0x{b:02x} outside 63..=126")))
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let first = *bytes
        .first()
        .ok_or_else(|| Error::at_byte(0, "empty input"))?;

    let (n, header_len) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::at_byte(
                1,
                format!("8-byte size header exceeds the {MAX_GRAPH6_VERTICES}-vertex limit"),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::at_byte(bytes.len(), "truncated size header"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | check_byte(i + 1, b)? as usize;
        }
        (n, 4)
    } else {
        (check_byte(0, first)? as usize, 1)
    };
    if n == 0 {
        return Err(Error::at_byte(0, "graph6 encodes zero vertices"));
    }
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::at_byte(0, format!("{n} vertices exceeds {MAX_GRAPH6_VERTICES}")));
    }

    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < needed {
        return Err(Error::at_byte(
            header_len + body.len(),
            format!("truncated bit field: expected {needed} bytes, found {}", body.len()),
        ));
    }
    if body.len() > needed {
        return Err(Error::at_byte(header_len + needed, "trailing bytes after bit field"));
    }

    let mut edges = Vec::new();
    let mut idx = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let offset = header_len + idx / 6;
            let chunk = check_byte(offset, body[idx / 6])?;
            if chunk >> (5 - idx % 6) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
            if idx == bits {
                break 'outer;
            }
        }
    }
    // Padding bits must be zero for the encoding to be canonical.
    if bits % 6 != 0 {
        let last = header_len + needed - 1;
        let chunk = check_byte(last, bytes[last])?;
        let pad = 6 - bits % 6;
        if chunk & ((1 << pad) - 1) != 0 {
            return Err(Error::at_byte(last, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// graph6 string for `g` under its current labeling (no canonical relabeling).
///
/// Panics if `g` has more than [`MAX_GRAPH6_VERTICES`] vertices.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_GRAPH6_VERTICES, "graph6 output limited to {MAX_GRAPH6_VERTICES} vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let bits = n * (n - 1) / 2;
    let mut field = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        let idx = v * (v - 1) / 2 + u;
        field[idx / 6] |= 1 << (5 - idx % 6);
    }
    out.extend(field.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
