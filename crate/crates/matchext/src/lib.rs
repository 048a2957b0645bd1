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

//! Exhaustive verification of index thresholds for matching extendability.
//!
//! [`harness`] enumerates small graphs and checks threshold theorems,
//! characterizations of maximal graphs and edge monotonicity against
//! [`matchext_core`]. [`report`] holds the serializable results, [`io`]
//! reads and writes graph6 streams and [`cli`] is the command-line front end.

pub mod cli;
pub mod harness;
pub mod io;
pub mod report;

pub use harness::{
    enumerate_bipartite, enumerate_graphs, verify_characterization, verify_monotonicity,
    verify_theorem, GraphClassFilter, Source,
};
pub use report::{Verdict, VerificationReport};
