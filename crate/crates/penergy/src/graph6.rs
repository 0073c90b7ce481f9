//! graph6 text encoding: size byte n+63, upper-triangle adjacency bits
//! in column-major order packed big-endian into 6-bit groups, each
//! offset by 63. Single-byte size form only (n <= 62).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable in the single-byte size form.
pub const GRAPH6_MAX_N: usize = 62;

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::OrderOutOfRange { n, cap: GRAPH6_MAX_N });
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for i in 1..n {
        for j in 0..i {
            group = (group << 1) | u8::from(g.has_edge(j, i));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

/// Decodes a graph6 line.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if bytes[0] == b'~' {
        return Err(Error::Graph6("multi-byte size form not supported (n > 62)".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside printable range 63..=126")));
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("order zero".into()));
    }
    let bit_count = n * (n - 1) / 2;
    let data_len = bit_count.div_ceil(6);
    if bytes.len() != 1 + data_len {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {n}, got {}",
            data_len,
            bytes.len() - 1
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    let mut pairs = (1..n).flat_map(|i| (0..i).map(move |j| (j, i)));
    for &b in &bytes[1..] {
        let group = b - 63;
        for k in (0..6).rev() {
            let bit = group >> k & 1;
            if bit_index < bit_count {
                let (j, i) = pairs.next().expect("pair iterator covers bit_count");
                if bit == 1 {
                    g.add_edge(j, i)?;
                }
                bit_index += 1;
            } else if bit == 1 {
                return Err(Error::Graph6("nonzero trailing padding bits".into()));
            }
        }
    }
    Ok(g)
}

/// Parses a graph6 file: one graph per line, blank lines skipped.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}
