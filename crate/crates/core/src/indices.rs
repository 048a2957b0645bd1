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

//! The zeroth-order general Randić index `⁰R_α(G) = Σ_v d(v)^α`.
//!
//! `α = 2` gives the first Zagreb index, `α = 3` the forgotten index and
//! `α = 1` twice the edge count. For `α > 0` an isolated vertex contributes
//! `0^α = 0`; for `α < 0` it is a domain error.

use crate::error::CoreError;
use crate::graph::Graph;

/// Largest integer exponent routed through exact integer arithmetic.
const MAX_EXACT_EXPONENT: u32 = 20;

/// A finite, non-zero exponent.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self, CoreError> {
        if value == 0.0 || !value.is_finite() {
            Err(CoreError::InvalidAlpha)
        } else {
            Ok(Alpha(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0.0
    }

    /// The exponent as a small positive integer, when it is one.
    pub fn as_exact_exponent(self) -> Option<u32> {
        let v = self.0;
        if v >= 1.0 && v <= MAX_EXACT_EXPONENT as f64 && libm::trunc(v) == v {
            Some(v as u32)
        } else {
            None
        }
    }
}

impl TryFrom<f64> for Alpha {
    type Error = CoreError;

    fn try_from(value: f64) -> Result<Self, CoreError> {
        Alpha::new(value)
    }
}

/// `base^α` with `0^α = 0` for `α > 0`; `None` for `0^α` with `α < 0`.
pub fn power(base: u64, a: Alpha) -> Option<f64> {
    if base == 0 {
        return a.is_positive().then_some(0.0);
    }
    if let Some(e) = a.as_exact_exponent() {
        if let Some(v) = (base as u128).checked_pow(e) {
            return Some(v as f64);
        }
    }
    Some(libm::pow(base as f64, a.value()))
}

/// `⁰R_α(G)`.
pub fn zeroth_order_randic(g: &Graph, a: Alpha) -> Result<f64, CoreError> {
    if let Some(e) = a.as_exact_exponent() {
        if let Some(exact) = zeroth_order_randic_exact(g, e) {
            return Ok(exact as f64);
        }
    }
    zeroth_order_randic_float(g, a)
}

/// `⁰R_α(G)` through floating point only, whatever the exponent.
pub fn zeroth_order_randic_float(g: &Graph, a: Alpha) -> Result<f64, CoreError> {
    let mut sum = 0.0;
    for v in 0..g.order() {
        let d = g.degree(v);
        sum += match d {
            0 if a.is_positive() => 0.0,
            0 => return Err(CoreError::IsolatedVertex { vertex: v }),
            _ => libm::pow(d as f64, a.value()),
        };
    }
    Ok(sum)
}

/// `Σ_v d(v)^e` in integer arithmetic, `None` on overflow.
pub fn zeroth_order_randic_exact(g: &Graph, exponent: u32) -> Option<u128> {
    (0..g.order()).try_fold(0u128, |acc, v| {
        (g.degree(v) as u128)
            .checked_pow(exponent)
            .and_then(|t| acc.checked_add(t))
    })
}

/// `⁰R_α(G + uv) − ⁰R_α(G)` for a non-edge `uv`.
pub fn index_delta_for_edge(g: &Graph, u: usize, v: usize, a: Alpha) -> Result<f64, CoreError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || g.has_edge(u, v) {
        return Err(CoreError::NotANonEdge(u, v));
    }
    let (du, dv) = (g.degree(u) as u64, g.degree(v) as u64);
    if let Some(e) = a.as_exact_exponent() {
        let t = |d: u64| (d as i128).checked_pow(e);
        if let (Some(a1), Some(a2), Some(b1), Some(b2)) = (t(du + 1), t(dv + 1), t(du), t(dv)) {
            return Ok((a1 + a2 - b1 - b2) as f64);
        }
    }
    let term = |d: u64, vertex: usize| power(d, a).ok_or(CoreError::IsolatedVertex { vertex });
    Ok(term(du + 1, u)? + term(dv + 1, v)? - term(du, u)? - term(dv, v)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn alpha_rejects_zero_and_non_finite() {
        assert_eq!(Alpha::new(0.0), Err(CoreError::InvalidAlpha));
        assert_eq!(Alpha::new(-0.0), Err(CoreError::InvalidAlpha));
        assert_eq!(Alpha::new(f64::NAN), Err(CoreError::InvalidAlpha));
        assert_eq!(Alpha::new(f64::INFINITY), Err(CoreError::InvalidAlpha));
        assert_eq!(alpha(2.0).as_exact_exponent(), Some(2));
        assert_eq!(alpha(2.5).as_exact_exponent(), None);
        assert_eq!(alpha(-1.0).as_exact_exponent(), None);
    }

    #[test]
    fn index_examples() {
        assert_eq!(
            zeroth_order_randic(&Graph::complete(4), alpha(2.0)).unwrap(),
            36.0
        );
        assert_eq!(
            zeroth_order_randic(&Graph::path(3), alpha(1.0)).unwrap(),
            4.0
        );
        let (star, _) = Graph::complete_bipartite(1, 3);
        let r = zeroth_order_randic(&star, alpha(-1.0)).unwrap();
        assert!((r - (3.0 + 1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::complete(2).union(&Graph::empty(1));
        assert_eq!(zeroth_order_randic(&g, alpha(0.5)).unwrap(), 2.0);
        assert_eq!(
            zeroth_order_randic(&g, alpha(-0.5)),
            Err(CoreError::IsolatedVertex { vertex: 2 })
        );
    }

    #[test]
    fn exact_and_float_paths_agree() {
        let g = Graph::petersen().join(&Graph::cycle(7));
        for e in 1..=6u32 {
            let exact = zeroth_order_randic_exact(&g, e).unwrap() as f64;
            let float = zeroth_order_randic_float(&g, alpha(e as f64)).unwrap();
            assert!((exact - float).abs() <= 1e-12 * exact, "e = {e}");
        }
        assert_eq!(
            zeroth_order_randic_exact(&Graph::complete(64), 20),
            Some(64 * 63u128.pow(20))
        );
    }

    #[test]
    fn delta_examples() {
        let g = Graph::empty(2);
        assert_eq!(index_delta_for_edge(&g, 0, 1, alpha(1.0)).unwrap(), 2.0);
        assert_eq!(index_delta_for_edge(&g, 0, 1, alpha(2.0)).unwrap(), 2.0);
        let p3 = Graph::path(3);
        assert_eq!(index_delta_for_edge(&p3, 0, 2, alpha(-1.0)).unwrap(), -1.0);
        assert_eq!(
            index_delta_for_edge(&p3, 0, 1, alpha(1.0)),
            Err(CoreError::NotANonEdge(0, 1))
        );
        assert_eq!(
            index_delta_for_edge(&p3, 1, 1, alpha(1.0)),
            Err(CoreError::NotANonEdge(1, 1))
        );
        assert!(index_delta_for_edge(&g, 0, 1, alpha(-1.0)).is_err());
    }

    #[test]
    fn delta_matches_difference() {
        let g = Graph::cycle(6);
        for a in [0.5, 1.5, 2.0, -0.7, 3.0] {
            let a = alpha(a);
            for (u, v) in g.non_edges() {
                let d = index_delta_for_edge(&g, u, v, a).unwrap();
                let before = zeroth_order_randic(&g, a).unwrap();
                let after = zeroth_order_randic(&g.add_edge(u, v).unwrap(), a).unwrap();
                assert!((d - (after - before)).abs() <= 1e-12 * after.abs().max(1.0));
            }
        }
    }
}
