// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Headerless graph6 coding.
//!
//! The vertex count `N(p)` is one byte `p + 63` for `p ≤ 62`, otherwise the
//! byte `126` followed by three 6-bit groups. The upper triangle follows in
//! column-major order `(0,1), (0,2), (1,2), (0,3), …`, packed six bits per
//! byte, most significant bit first, zero padded, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_ORDER};

/// Reasons a graph6 token fails to decode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// The data section is shorter than the vertex count requires.
    Truncated {
        expected: usize,
        found: usize,
    },
    /// A byte outside `63..=126`.
    ByteOutOfRange {
        position: usize,
        byte: u8,
    },
    /// Bytes left over after the data section.
    TrailingBytes {
        position: usize,
    },
    /// Padding bits in the last byte are not zero.
    NonZeroPadding,
    /// Vertex count above [`MAX_ORDER`].
    OrderTooLarge(usize),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => f.write_str("empty input"),
            Graph6Error::Truncated { expected, found } => {
                write!(f, "expected {expected} bytes, found {found}")
            }
            Graph6Error::ByteOutOfRange { position, byte } => {
                write!(f, "byte {byte} at position {position} is outside 63..=126")
            }
            Graph6Error::TrailingBytes { position } => {
                write!(f, "unexpected trailing bytes from position {position}")
            }
            Graph6Error::NonZeroPadding => f.write_str("non-zero padding bits"),
            Graph6Error::OrderTooLarge(p) => {
                write!(f, "order {p} exceeds the supported maximum {MAX_ORDER}")
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

/// Encodes `g` as a headerless graph6 string.
pub fn encode(g: &Graph) -> String {
    let p = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (p * p.saturating_sub(1) / 2).div_ceil(6));
    if p <= 62 {
        out.push(p as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((p >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..p {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one headerless graph6 token. Surrounding whitespace is not
/// accepted; callers reading lines should trim first.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { position, byte });
        }
    }
    let (p, header) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == 126 {
            // 8-byte form, only used for p > 258047
            return Err(Graph6Error::OrderTooLarge(usize::MAX));
        }
        let p = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (p, 4)
    };
    if p > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(p));
    }
    let pairs = p * p.saturating_sub(1) / 2;
    let expected = header + pairs.div_ceil(6);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingBytes { position: expected });
    }
    let data = &bytes[header..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut rows = alloc::vec![0u64; p];
    let mut k = 0;
    for j in 1..p {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if (pairs..data.len() * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// Bit-string encoder written straight from the format description.
    fn reference_encode(g: &Graph) -> String {
        let p = g.order();
        let mut s = String::new();
        assert!(p <= 62);
        s.push((p as u8 + 63) as char);
        let mut bits = String::new();
        for j in 0..p {
            for i in 0..j {
                bits.push(if g.has_edge(i, j) { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(core::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_encodings() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::complete(1)), "@");
        assert_eq!(reference_encode(&Graph::complete(1)), "@");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn matches_reference_encoder() {
        for g in [
            Graph::petersen(),
            Graph::cycle(7),
            Graph::complete(9),
            Graph::path(13),
        ] {
            assert_eq!(encode(&g), reference_encode(&g));
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_order_form() {
        let g = Graph::cycle(64);
        let s = encode(&g);
        assert_eq!(&s[..4], "~?@?");
        assert_eq!(decode(&s).unwrap(), g);
        let g = Graph::complete(63);
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode("C"),
            Err(Graph6Error::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            decode("C~~"),
            Err(Graph6Error::TrailingBytes { position: 2 })
        );
        assert_eq!(
            decode("C~ "),
            Err(Graph6Error::ByteOutOfRange {
                position: 2,
                byte: b' '
            })
        );
        assert_eq!(decode("A~"), Err(Graph6Error::NonZeroPadding));
        assert!(matches!(
            decode("~?@B"),
            Err(Graph6Error::OrderTooLarge(67))
        ));
        assert!(matches!(decode("~?"), Err(Graph6Error::Truncated { .. })));
        assert_eq!(
            decode(">>graph6<<C~").unwrap_err().to_string(),
            "byte 62 at position 0 is outside 63..=126"
        );
    }
}
