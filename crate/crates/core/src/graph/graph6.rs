//! graph6 encoding (as distributed with nauty's `formats.txt`).

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    // upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let val = |b: u8| (b - BIAS) as usize;
    let (n, body) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order".into()));
        }
        ((val(bytes[1]) << 12) | (val(bytes[2]) << 6) | val(bytes[3]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated order".into()));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | val(b));
        (n, &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(body[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = val(body[need - 1]);
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
