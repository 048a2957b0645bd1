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

use core::fmt;

use crate::graph6::Graph6Error;

/// Errors raised by the core crate.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Vertex count above [`crate::MAX_ORDER`].
    OrderTooLarge(usize),
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
    /// `add_edge` on a loop.
    Loop(usize),
    /// `add_edge` on a pair that is already adjacent.
    EdgeExists(usize, usize),
    /// An operation that needs a non-edge received an edge.
    NotANonEdge(usize, usize),
    /// Adjacency rows that disagree about a pair.
    Asymmetric(usize, usize),
    /// Vertex sets that must be disjoint overlap.
    Overlap,
    InvalidBipartition(&'static str),
    InvalidMatching(&'static str),
    /// `α = 0` or a non-finite exponent.
    InvalidAlpha,
    /// `0^α` with `α < 0`.
    IsolatedVertex {
        vertex: usize,
    },
    /// Parameters outside the range where a construction or theorem applies.
    Parameters(&'static str),
    Graph6(Graph6Error),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::OrderTooLarge(p) => {
                write!(
                    f,
                    "order {p} exceeds the supported maximum {}",
                    crate::MAX_ORDER
                )
            }
            CoreError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            CoreError::Loop(v) => write!(f, "loop at vertex {v}"),
            CoreError::EdgeExists(u, v) => write!(f, "edge {u}-{v} already present"),
            CoreError::NotANonEdge(u, v) => write!(f, "pair {u}-{v} is not a non-edge"),
            CoreError::Asymmetric(u, v) => write!(f, "adjacency of {u} and {v} is not symmetric"),
            CoreError::Overlap => f.write_str("vertex sets overlap"),
            CoreError::InvalidBipartition(why) => write!(f, "invalid bipartition: {why}"),
            CoreError::InvalidMatching(why) => write!(f, "invalid matching: {why}"),
            CoreError::InvalidAlpha => f.write_str("alpha must be finite and non-zero"),
            CoreError::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} is isolated and alpha is negative")
            }
            CoreError::Parameters(why) => write!(f, "parameters out of range: {why}"),
            CoreError::Graph6(e) => write!(f, "graph6: {e}"),
        }
    }
}

impl core::error::Error for CoreError {}

impl From<Graph6Error> for CoreError {
    fn from(e: Graph6Error) -> Self {
        CoreError::Graph6(e)
    }
}
