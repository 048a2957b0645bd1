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

//! Decision procedures for the matching-extendability properties and for
//! maximality among graphs lacking them.
//!
//! * perfect matching: `ν(G) = p/2`;
//! * `k`-extendable: connected, has a perfect matching, and every
//!   `k`-matching lies in a perfect matching;
//! * `k`-factor-critical: `G − S` has a perfect matching for every `S` with
//!   `|S| = k`;
//! * `(n, k, d)`-graph: `p ≥ n + 2k + d + 2`, `p − n − d` even, and after
//!   deleting any `n` vertices the rest has a `k`-matching and every
//!   `k`-matching extends to a matching missing exactly `d` vertices.
//!
//! The extendability and `(n, k, d)` checkers return `false` on disconnected
//! graphs.

use core::fmt;
use core::str::FromStr;

use crate::error::CoreError;
use crate::graph::{full_mask, Bipartition, Graph};
use crate::matching::{matching_number, matching_number_within, residual_reaches, KMatchings};

/// One target property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyKind {
    /// Has a perfect matching.
    PerfectMatching,
    /// `k`-extendable.
    Extendable(usize),
    /// `k`-extendable, with maximality taken over cross edges of a fixed
    /// bipartition only.
    BipExtendable(usize),
    /// `k`-factor-critical.
    FactorCritical(usize),
    /// `(n, k, d)`-graph.
    Nkd { n: usize, k: usize, d: usize },
}

impl PropertyKind {
    /// Whether `g` has the property.
    pub fn holds(&self, g: &Graph) -> bool {
        match *self {
            PropertyKind::PerfectMatching => has_perfect_matching(g),
            PropertyKind::Extendable(k) | PropertyKind::BipExtendable(k) => is_k_extendable(g, k),
            PropertyKind::FactorCritical(k) => is_k_factor_critical(g, k),
            PropertyKind::Nkd { n, k, d } => is_nkd_graph(g, n, k, d),
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self, PropertyKind::BipExtendable(_))
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyKind::PerfectMatching => f.write_str("pm"),
            PropertyKind::Extendable(k) => write!(f, "ext:{k}"),
            PropertyKind::BipExtendable(k) => write!(f, "bipext:{k}"),
            PropertyKind::FactorCritical(k) => write!(f, "fc:{k}"),
            PropertyKind::Nkd { n, k, d } => write!(f, "nkd:{n},{k},{d}"),
        }
    }
}

impl FromStr for PropertyKind {
    type Err = CoreError;

    /// `pm | ext:K | bipext:K | fc:K | nkd:N,K,D`
    fn from_str(s: &str) -> Result<Self, CoreError> {
        const BAD: CoreError =
            CoreError::Parameters("expected pm | ext:K | bipext:K | fc:K | nkd:N,K,D");
        let num = |t: &str| t.parse::<usize>().map_err(|_| BAD);
        if s == "pm" {
            return Ok(PropertyKind::PerfectMatching);
        }
        let (tag, rest) = s.split_once(':').ok_or(BAD)?;
        match tag {
            "ext" => Ok(PropertyKind::Extendable(num(rest)?)),
            "bipext" => Ok(PropertyKind::BipExtendable(num(rest)?)),
            "fc" => Ok(PropertyKind::FactorCritical(num(rest)?)),
            "nkd" => {
                let mut it = rest.split(',');
                let (Some(n), Some(k), Some(d), None) =
                    (it.next(), it.next(), it.next(), it.next())
                else {
                    return Err(BAD);
                };
                Ok(PropertyKind::Nkd {
                    n: num(n)?,
                    k: num(k)?,
                    d: num(d)?,
                })
            }
            _ => Err(BAD),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for PropertyKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Visits every `r`-subset of `0..p` as a bit mask; stops early when `f`
/// returns `false`. Returns whether every call returned `true`.
pub(crate) fn all_subsets(p: usize, r: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    if r > p {
        return true;
    }
    if r == 0 {
        return f(0);
    }
    let limit = 1u128 << p;
    let mut s: u128 = (1u128 << r) - 1;
    while s < limit {
        if !f(s as u64) {
            return false;
        }
        // next subset with the same popcount
        let c = s & s.wrapping_neg();
        let r2 = s + c;
        s = (((r2 ^ s) >> 2) / c) | r2;
    }
    true
}

/// `G` has a perfect matching.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * matching_number(g) == g.order()
}

/// `G` is connected, has a perfect matching, and every `k`-matching lies in a
/// perfect matching. `k = 0` reduces to connected with a perfect matching.
pub fn is_k_extendable(g: &Graph, k: usize) -> bool {
    if !g.is_connected() || !has_perfect_matching(g) {
        return false;
    }
    let full = g.vertex_mask();
    let mut it = KMatchings::within(g, full, k);
    while it.advance() {
        if !residual_reaches(g, full & !it.current_mask(), 0) {
            return false;
        }
    }
    true
}

/// `G − S` has a perfect matching for every `k`-subset `S`. `false` when
/// `k > p` or `p − k` is odd.
pub fn is_k_factor_critical(g: &Graph, k: usize) -> bool {
    let p = g.order();
    if k > p || !(p - k).is_multiple_of(2) {
        return false;
    }
    let full = g.vertex_mask();
    all_subsets(p, k, |s| residual_reaches(g, full & !s, 0))
}

/// `G` is an `(n, k, d)`-graph. `false` when the order or parity condition
/// fails or `G` is disconnected.
pub fn is_nkd_graph(g: &Graph, n: usize, k: usize, d: usize) -> bool {
    let p = g.order();
    if p < n + 2 * k + d + 2 || !(p - n - d).is_multiple_of(2) || !g.is_connected() {
        return false;
    }
    let full = full_mask(p);
    all_subsets(p, n, |s| {
        let active = full & !s;
        if matching_number_within(g, active) < k {
            return false;
        }
        let mut it = KMatchings::within(g, active, k);
        while it.advance() {
            if !residual_reaches(g, active & !it.current_mask(), d) {
                return false;
            }
        }
        true
    })
}

/// `G` lacks `prop` but `G + e` has it for every admissible non-edge `e`.
///
/// For [`PropertyKind::BipExtendable`] a bipartition is required and only
/// non-edges between its parts are admissible; other properties ignore it.
pub fn is_maximal_non_p(
    g: &Graph,
    prop: PropertyKind,
    bipartition: Option<&Bipartition>,
) -> Result<bool, CoreError> {
    if prop.is_bipartite() {
        let b = bipartition.ok_or(CoreError::InvalidBipartition(
            "bipartite property needs a bipartition",
        ))?;
        b.validate(g)?;
        if prop.holds(g) {
            return Ok(false);
        }
        return Ok(b
            .cross_non_edges(g)
            .all(|(u, v)| prop.holds(&g.with_edge(u, v))));
    }
    if prop.holds(g) {
        return Ok(false);
    }
    Ok(g.non_edges().all(|(u, v)| prop.holds(&g.with_edge(u, v))))
}
