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

//! Matching extendability of small graphs measured against the zeroth-order
//! general Randić index `⁰R_α(G) = Σ_v d(v)^α`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation: graph construction, graph6 coding, isomorphism, maximum
//! matching, decision procedures for perfect matching, `k`-extendability,
//! `k`-factor-criticality and `(n, k, d)`-graphs, the extremal families that
//! characterize the maximal graphs lacking each property, and threshold
//! evaluation. Parallel sweeps, file streams and the command line live in the
//! `matchext` crate.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod census;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod iso;
pub mod matching;
pub mod properties;
pub mod thresholds;

pub use error::CoreError;
pub use extremal::ExtremalSpec;
pub use graph::{Bipartition, Graph, MAX_ORDER};
pub use indices::Alpha;
pub use matching::{Deficiency, Matching};
pub use properties::PropertyKind;
pub use thresholds::{TheoremId, ThresholdReport};
