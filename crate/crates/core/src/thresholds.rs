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

//! Index thresholds above which a graph must have a property.
//!
//! Since `⁰R_α` strictly increases with every added edge when `α > 0`, a
//! graph lacking a property has index at most the largest index among the
//! maximal graphs lacking it. [`exact_threshold`] computes that maximum by
//! building every member of the characterizing family; [`closed_threshold`]
//! evaluates the published closed forms, which are kept as cross-checks.
//! [`closed_branches`] and [`corollary_check`] compare each closed-form
//! branch with the family member it stands for, so typos surface as
//! non-zero discrepancies.

use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::error::CoreError;
use crate::extremal::{build_extremal, enumerate_family_classes, ExtremalSpec};
use crate::indices::{power, zeroth_order_randic, Alpha};
use crate::properties::PropertyKind;

/// Relative tolerance for threshold comparisons.
pub const REL_TOL: f64 = 1e-9;

/// `a` and `b` agree within [`REL_TOL`] relative to the larger magnitude
/// (absolute below 1).
pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

/// `value ≥ threshold` up to [`REL_TOL`].
pub fn at_least(value: f64, threshold: f64) -> bool {
    value >= threshold || approx_eq(value, threshold)
}

/// A threshold theorem together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(tag = "name"))]
pub enum TheoremId {
    /// Balanced bipartite, order `2n`, perfect matching.
    BipExtendK0 { n: usize },
    /// Balanced bipartite, order `2n`, `k`-extendable, `1 ≤ k ≤ n − 1`.
    BipExtend { n: usize, k: usize },
    /// Connected with a perfect matching, order `2n`, `k`-extendable.
    ExtendPm { n: usize, k: usize },
    /// Connected, order `2n`, perfect matching.
    PerfectMatching { n: usize },
    /// Connected, order `p`, `k`-factor-critical.
    FactorCritical { p: usize, k: usize },
    /// Connected, order `p`, `(n, k, d)`-graph.
    Nkd {
        p: usize,
        n: usize,
        k: usize,
        d: usize,
    },
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TheoremId::BipExtendK0 { n } => write!(f, "bipext:0 (n={n})"),
            TheoremId::BipExtend { n, k } => write!(f, "bipext:{k} (n={n})"),
            TheoremId::ExtendPm { n, k } => write!(f, "ext:{k} (n={n})"),
            TheoremId::PerfectMatching { n } => write!(f, "pm (n={n})"),
            TheoremId::FactorCritical { p, k } => write!(f, "fc:{k} (p={p})"),
            TheoremId::Nkd { p, n, k, d } => write!(f, "nkd:{n},{k},{d} (p={p})"),
        }
    }
}

impl TheoremId {
    /// The theorem about `prop` on graphs of order `p`.
    pub fn from_property(prop: PropertyKind, p: usize) -> Result<Self, CoreError> {
        let half = || {
            if p.is_multiple_of(2) {
                Ok(p / 2)
            } else {
                Err(CoreError::Parameters("this theorem needs even order"))
            }
        };
        let t = match prop {
            PropertyKind::PerfectMatching => TheoremId::PerfectMatching { n: half()? },
            PropertyKind::Extendable(k) => TheoremId::ExtendPm { n: half()?, k },
            PropertyKind::BipExtendable(0) => TheoremId::BipExtendK0 { n: half()? },
            PropertyKind::BipExtendable(k) => TheoremId::BipExtend { n: half()?, k },
            PropertyKind::FactorCritical(k) => TheoremId::FactorCritical { p, k },
            PropertyKind::Nkd { n, k, d } => TheoremId::Nkd { p, n, k, d },
        };
        t.check()?;
        Ok(t)
    }

    /// Checks the theorem's hypotheses on the parameters.
    pub fn check(&self) -> Result<(), CoreError> {
        let ok = match *self {
            TheoremId::BipExtendK0 { n } => n >= 3,
            TheoremId::BipExtend { n, k } => n >= 3 && k >= 1 && k < n,
            TheoremId::ExtendPm { n, k } => n >= 2 && k >= 1 && k < n,
            TheoremId::PerfectMatching { n } => n >= 2,
            TheoremId::FactorCritical { p, k } => {
                p >= 4 && k >= 1 && k + 2 <= p && (p - k) % 2 == 0
            }
            TheoremId::Nkd { p, n, k, d } => {
                n >= 1 && k >= 1 && d >= 1 && p >= n + 2 * k + d + 2 && (p + n + d) % 2 == 0
            }
        };
        if !ok {
            return Err(CoreError::Parameters("theorem hypotheses not met"));
        }
        if self.order() > crate::MAX_ORDER {
            return Err(CoreError::OrderTooLarge(self.order()));
        }
        Ok(())
    }

    /// Order of the graphs the theorem speaks about.
    pub fn order(&self) -> usize {
        match *self {
            TheoremId::BipExtendK0 { n }
            | TheoremId::BipExtend { n, .. }
            | TheoremId::ExtendPm { n, .. }
            | TheoremId::PerfectMatching { n } => 2 * n,
            TheoremId::FactorCritical { p, .. } | TheoremId::Nkd { p, .. } => p,
        }
    }

    /// The property the theorem concludes.
    pub fn property(&self) -> PropertyKind {
        match *self {
            TheoremId::BipExtendK0 { .. } => PropertyKind::BipExtendable(0),
            TheoremId::BipExtend { k, .. } => PropertyKind::BipExtendable(k),
            TheoremId::ExtendPm { k, .. } => PropertyKind::Extendable(k),
            TheoremId::PerfectMatching { .. } => PropertyKind::PerfectMatching,
            TheoremId::FactorCritical { k, .. } => PropertyKind::FactorCritical(k),
            TheoremId::Nkd { n, k, d, .. } => PropertyKind::Nkd { n, k, d },
        }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(
            self,
            TheoremId::BipExtendK0 { .. } | TheoremId::BipExtend { .. }
        )
    }

    /// Whether the graphs in scope must already have a perfect matching.
    pub fn assumes_perfect_matching(&self) -> bool {
        matches!(self, TheoremId::ExtendPm { .. })
    }

    /// `(n, k, d)` regime condition: `α ≥ 1`, or `0 < α < 1` with
    /// `d ≤ (2n + 4k)/(1 − α) − 1`. Other theorems only need `α > 0`.
    pub fn alpha_admissible(&self, a: Alpha) -> bool {
        let v = a.value();
        match *self {
            TheoremId::Nkd { n, k, d, .. } => {
                v >= 1.0 || (v > 0.0 && d as f64 <= (2 * n + 4 * k) as f64 / (1.0 - v) - 1.0)
            }
            _ => v > 0.0,
        }
    }
}

fn pw(base: usize, a: Alpha) -> f64 {
    power(base as u64, a).expect("threshold terms use positive alpha")
}

fn require_positive(a: Alpha) -> Result<(), CoreError> {
    if a.is_positive() {
        Ok(())
    } else {
        Err(CoreError::Parameters(
            "thresholds are defined for alpha > 0",
        ))
    }
}

/// One closed-form branch next to the family member it stands for.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Branch {
    pub name: &'static str,
    pub printed: f64,
    /// Member whose index the branch is meant to equal, if it exists.
    pub member: Option<ExtremalSpec>,
    pub member_value: Option<f64>,
    /// `printed − member_value`.
    pub discrepancy: Option<f64>,
}

fn branch(
    name: &'static str,
    printed: f64,
    member: Option<ExtremalSpec>,
    a: Alpha,
) -> Result<Branch, CoreError> {
    let member_value = match &member {
        Some(spec) => Some(zeroth_order_randic(&build_extremal(spec)?.graph, a)?),
        None => None,
    };
    Ok(Branch {
        name,
        printed,
        member,
        member_value,
        discrepancy: member_value.map(|v| printed - v),
    })
}

fn hub(hub: usize, halves: Vec<usize>) -> Option<ExtremalSpec> {
    Some(ExtremalSpec::HubJoinOddCliques { hub, halves })
}

/// The closed-form branches of a theorem, each paired with its endpoint
/// family member.
///
/// For the bipartite `k ≥ 1` theorem both the stated threshold (the `s = 2`
/// profile) and the proof's endpoint value `φ₁(1)` are listed.
pub fn closed_branches(t: TheoremId, a: Alpha) -> Result<Vec<Branch>, CoreError> {
    t.check()?;
    require_positive(a)?;
    let out = match t {
        TheoremId::BipExtendK0 { n } => {
            let printed = (n - 1) as f64 * pw(n, a) + (n - 1) as f64 * pw(n - 2, a) + 2.0;
            let member = Some(ExtremalSpec::BipartiteDeleted { n, s: 2, t: n - 1 });
            alloc::vec![branch("statement", printed, member, a)?]
        }
        TheoremId::BipExtend { n, k } => {
            let statement = (n + k - 1) as f64 * pw(n, a)
                + 2.0 * pw(k + 1, a)
                + (n - k - 1) as f64 * pw(n - 2, a);
            let s2 = (k + 2 <= n).then_some(ExtremalSpec::BipartiteDeleted {
                n,
                s: 2,
                t: n - k - 1,
            });
            let endpoint = (n + k - 1) as f64 * pw(n, a) + (n - k) as f64 * pw(n - 1, a) + pw(k, a);
            let s1 = Some(ExtremalSpec::BipartiteDeleted { n, s: 1, t: n - k });
            alloc::vec![
                branch("statement", statement, s2, a)?,
                branch("phi1(1)", endpoint, s1, a)?
            ]
        }
        TheoremId::ExtendPm { n, k } => {
            let beta =
                (n + k - 1) as f64 * pw(2 * n - 1, a) + (n - k + 1) as f64 * pw(n + k - 1, a);
            let zeta = (2 * k) as f64 * pw(2 * n - 1, a)
                + pw(2 * k, a)
                + (2 * n - 2 * k - 1) as f64 * pw(2 * n - 2, a);
            alloc::vec![
                branch("beta1", beta, hub(n + k - 1, alloc::vec![0; n - k + 1]), a)?,
                branch("zeta1", zeta, hub(2 * k, alloc::vec![n - k - 1, 0]), a)?,
            ]
        }
        TheoremId::PerfectMatching { n } => {
            let beta = pw(2 * n - 1, a) + (2 * n - 3) as f64 * pw(2 * n - 4, a) + 2.0;
            let zeta = (n - 1) as f64 * pw(2 * n - 1, a) + (n + 1) as f64 * pw(n - 1, a);
            alloc::vec![
                branch("beta", beta, hub(1, alloc::vec![n - 2, 0, 0]), a)?,
                branch("zeta", zeta, hub(n - 1, alloc::vec![0; n + 1]), a)?,
            ]
        }
        TheoremId::FactorCritical { p, k } => {
            let (up, down) = ((p + k) / 2 - 1, (p - k) / 2 + 1);
            let beta = up as f64 * pw(p - 1, a) + down as f64 * pw(up, a);
            let zeta = k as f64 * pw(p - 1, a) + pw(k, a) + (p - k - 1) as f64 * pw(p - 2, a);
            alloc::vec![
                branch("beta2", beta, hub(up, alloc::vec![0; down]), a)?,
                branch("zeta2", zeta, hub(k, alloc::vec![(p - k) / 2 - 1, 0]), a)?,
            ]
        }
        TheoremId::Nkd { p, n, k, d } => {
            let h = (p - n - 2 * k - d) / 2;
            let member = |s: usize| {
                let mut halves = alloc::vec![h - s - 1];
                halves.extend(core::iter::repeat_n(0, s + d + 1));
                hub(n + 2 * k + s, halves)
            };
            alloc::vec![
                branch("l(0)", nkd_l(p, n, k, d, 0, a), member(0), a)?,
                branch("l(max)", nkd_l(p, n, k, d, h - 1, a), member(h - 1), a)?,
            ]
        }
    };
    Ok(out)
}

/// `l_α(s) = (n+2k+s)(p−1)^α + (s+d+1)(n+2k+s)^α + (p−n−2k−d−2s−1)(p−d−s−2)^α`.
fn nkd_l(p: usize, n: usize, k: usize, d: usize, s: usize, a: Alpha) -> f64 {
    let q = n + 2 * k + s;
    q as f64 * pw(p - 1, a)
        + (s + d + 1) as f64 * pw(q, a)
        + (p - q - d - s - 1) as f64 * pw(p - d - s - 2, a)
}

/// The published threshold: the larger closed-form branch (for the
/// bipartite theorems, the stated formula).
pub fn closed_threshold(t: TheoremId, a: Alpha) -> Result<f64, CoreError> {
    if !t.alpha_admissible(a) {
        return Err(CoreError::Parameters("alpha outside the theorem's regime"));
    }
    let branches = closed_branches(t, a)?;
    Ok(match t {
        TheoremId::BipExtendK0 { .. } | TheoremId::BipExtend { .. } => branches[0].printed,
        _ => branches
            .iter()
            .map(|b| b.printed)
            .fold(f64::NEG_INFINITY, f64::max),
    })
}

/// Exact threshold for one theorem and exponent.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ThresholdReport {
    /// [`closed_threshold`], absent when `α` is outside the theorem's regime.
    pub closed_form: Option<f64>,
    /// Largest `⁰R_α` over the maximal non-`P` family.
    pub exact: f64,
    /// A member attaining `exact`.
    pub argmax_spec: ExtremalSpec,
    /// `closed_form − exact`.
    pub discrepancy: Option<f64>,
}

/// Maximum of `⁰R_α` over the family characterizing maximal graphs that
/// lack the theorem's property.
pub fn exact_threshold(t: TheoremId, a: Alpha) -> Result<ThresholdReport, CoreError> {
    t.check()?;
    require_positive(a)?;
    let family = enumerate_family_classes(t.property(), t.order())?;
    let mut best: Option<(f64, ExtremalSpec)> = None;
    for spec in family {
        let value = zeroth_order_randic(&build_extremal(&spec)?.graph, a)?;
        // ties within tolerance keep the earlier member
        if best
            .as_ref()
            .is_none_or(|(b, _)| value > *b && !approx_eq(value, *b))
        {
            best = Some((value, spec));
        }
    }
    let (exact, argmax_spec) = best.ok_or(CoreError::Parameters("empty family"))?;
    let closed_form = closed_threshold(t, a).ok();
    Ok(ThresholdReport {
        closed_form,
        exact,
        argmax_spec,
        discrepancy: closed_form.map(|c| c - exact),
    })
}

/// The `α = 1` edge-count corollary of a theorem, compared with the exact
/// threshold at `α = 1` (which is twice an edge count).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CorollaryCheck {
    /// Printed lower bound on `|E(G)|`.
    pub edge_bound: f64,
    /// Exact threshold at `α = 1`, halved.
    pub exact_edges: f64,
    /// `edge_bound − exact_edges`.
    pub discrepancy: f64,
}

/// Evaluates the printed `α = 1` edge bound, if the theorem has one.
pub fn corollary_edge_bound(t: TheoremId) -> Option<f64> {
    let f = |x: usize| x as f64;
    match t {
        TheoremId::ExtendPm { n, k } => Some(2.0 * f(n * n) - 3.0 * f(n) + 2.0 * f(k) + 1.0),
        TheoremId::PerfectMatching { n } => Some(if n == 3 || n == 4 {
            3.0 * f(n * (n - 1))
        } else {
            f(2 * n - 3) * (f(n) - 2.0) + 2.0
        }),
        TheoremId::FactorCritical { p, k } => Some(0.5 * f(p * p) - 1.5 * f(p) + f(k) + 1.0),
        TheoremId::Nkd { p, n, k, d } => {
            let (p, n, k, d) = (f(p), f(n), f(k), f(d));
            Some(if p < 5.0 * d + 2.0 * k + n + 4.0 {
                3.0 * p * p / 8.0
                    + (2.0 * k - d + n - 3.0) * p / 4.0
                    + (2.0 * k - d + n) * (d - 2.0 * k - n + 2.0) / 8.0
            } else {
                p * p / 2.0
                    + (-d - 1.5) * p
                    + (1.5 * d + 2.0 * k + n + 2.0 * d * k + d * n + d * d / 2.0 + 1.0)
            })
        }
        TheoremId::BipExtendK0 { .. } | TheoremId::BipExtend { .. } => None,
    }
}

/// [`corollary_edge_bound`] against the exact threshold at `α = 1`.
pub fn corollary_check(t: TheoremId) -> Result<Option<CorollaryCheck>, CoreError> {
    let Some(edge_bound) = corollary_edge_bound(t) else {
        return Ok(None);
    };
    let exact_edges = exact_threshold(t, Alpha::new(1.0)?)?.exact / 2.0;
    Ok(Some(CorollaryCheck {
        edge_bound,
        exact_edges,
        discrepancy: edge_bound - exact_edges,
    }))
}

/// The single-variable functions whose convexity reduces each family
/// maximum to its interval endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(tag = "phi"))]
pub enum PhiFunction {
    /// `x(k+x−1)^α + (n+k−1)n^α + (n−k−x+1)(n−x)^α`, bipartite.
    Phi1 { n: usize, k: usize },
    /// `(x+2k)(2n−1)^α + (x+1)(x+2k)^α + (2n−2k−2x−1)(2n−x−2)^α`.
    Phi2 { n: usize, k: usize },
    /// `x(2n−1)^α + (x+1)x^α + (2n−2x−1)(2n−x−2)^α`.
    Phi3 { n: usize },
    /// `(x+k)(p−1)^α + (x+1)(x+k)^α + (p−k−2x−1)(p−x−2)^α`.
    Phi4 { p: usize, k: usize },
    /// `l_α(x)` of the `(n, k, d)` theorem.
    NkdL {
        p: usize,
        n: usize,
        k: usize,
        d: usize,
    },
}

impl PhiFunction {
    /// The function behind a theorem's family maximum.
    pub fn for_theorem(t: TheoremId) -> Self {
        match t {
            TheoremId::BipExtendK0 { n } => PhiFunction::Phi1 { n, k: 0 },
            TheoremId::BipExtend { n, k } => PhiFunction::Phi1 { n, k },
            TheoremId::ExtendPm { n, k } => PhiFunction::Phi2 { n, k },
            TheoremId::PerfectMatching { n } => PhiFunction::Phi3 { n },
            TheoremId::FactorCritical { p, k } => PhiFunction::Phi4 { p, k },
            TheoremId::Nkd { p, n, k, d } => PhiFunction::NkdL { p, n, k, d },
        }
    }

    /// Integer domain `[lo, hi]`: the range of `s` in the family.
    pub fn interval(&self) -> RangeInclusive<usize> {
        match *self {
            PhiFunction::Phi1 { n, k: 0 } => 2..=n - 1,
            PhiFunction::Phi1 { n, k } => 1..=n - k,
            PhiFunction::Phi2 { n, k } => 0..=n - k - 1,
            PhiFunction::Phi3 { n } => 1..=n - 1,
            PhiFunction::Phi4 { p, k } => 0..=(p - k) / 2 - 1,
            PhiFunction::NkdL { p, n, k, d } => 0..=(p - n - 2 * k - d) / 2 - 1,
        }
    }

    /// Value at an integer point of the interval.
    pub fn eval(&self, x: usize, a: Alpha) -> f64 {
        let f = |v: usize| v as f64;
        match *self {
            PhiFunction::Phi1 { n, k } => {
                f(x) * pw(k + x - 1, a) + f(n + k - 1) * pw(n, a) + f(n + 1 - k - x) * pw(n - x, a)
            }
            PhiFunction::Phi2 { n, k } => {
                f(x + 2 * k) * pw(2 * n - 1, a)
                    + f(x + 1) * pw(x + 2 * k, a)
                    + f(2 * n - 2 * k - 2 * x - 1) * pw(2 * n - x - 2, a)
            }
            PhiFunction::Phi3 { n } => {
                f(x) * pw(2 * n - 1, a)
                    + f(x + 1) * pw(x, a)
                    + f(2 * n - 2 * x - 1) * pw(2 * n - x - 2, a)
            }
            PhiFunction::Phi4 { p, k } => {
                f(x + k) * pw(p - 1, a)
                    + f(x + 1) * pw(x + k, a)
                    + f(p - k - 2 * x - 1) * pw(p - x - 2, a)
            }
            PhiFunction::NkdL { p, n, k, d } => nkd_l(p, n, k, d, x, a),
        }
    }
}

/// Discrete convexity of a φ function over an integer grid.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConvexityDiagnostic {
    pub lo: usize,
    pub hi: usize,
    pub values: Vec<f64>,
    /// `φ(x+1) − 2φ(x) + φ(x−1)` at interior points.
    pub second_differences: Vec<f64>,
    /// Every second difference is `≥ 0` (to [`REL_TOL`] of the largest value).
    pub convex: bool,
    /// A grid point where the maximum is attained.
    pub argmax: usize,
    /// The maximum is attained at `lo` or `hi`.
    pub endpoint_max: bool,
}

/// Checks second differences and the endpoint maximum of `phi` on `grid`,
/// which must lie inside [`PhiFunction::interval`].
pub fn phi_convexity_check(
    phi: PhiFunction,
    a: Alpha,
    grid: RangeInclusive<usize>,
) -> Result<ConvexityDiagnostic, CoreError> {
    require_positive(a)?;
    let domain = phi.interval();
    let (lo, hi) = (*grid.start(), *grid.end());
    if lo > hi || lo < *domain.start() || hi > *domain.end() {
        return Err(CoreError::Parameters(
            "grid outside the function's interval",
        ));
    }
    let values: Vec<f64> = (lo..=hi).map(|x| phi.eval(x, a)).collect();
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let second_differences: Vec<f64> = values
        .windows(3)
        .map(|w| w[2] - 2.0 * w[1] + w[0])
        .collect();
    let convex = second_differences.iter().all(|&d| d >= -REL_TOL * scale);
    let (argmax, max) = values.iter().enumerate().fold(
        (0, f64::NEG_INFINITY),
        |(i, m), (j, &v)| if v > m { (j, v) } else { (i, m) },
    );
    let endpoint_max = approx_eq(values[0], max) || approx_eq(values[values.len() - 1], max);
    Ok(ConvexityDiagnostic {
        lo,
        hi,
        values,
        second_differences,
        convex,
        argmax: lo + argmax,
        endpoint_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::exceptional_specs;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn closed_examples() {
        let a1 = alpha(1.0);
        let t = TheoremId::ExtendPm { n: 4, k: 1 };
        let b = closed_branches(t, a1).unwrap();
        assert_eq!((b[0].printed, b[1].printed), (44.0, 46.0));
        assert_eq!(closed_threshold(t, a1).unwrap(), 46.0);

        let t = TheoremId::PerfectMatching { n: 3 };
        let b = closed_branches(t, a1).unwrap();
        assert_eq!((b[0].printed, b[1].printed), (13.0, 18.0));
        assert_eq!(closed_threshold(t, a1).unwrap(), 18.0);

        let t = TheoremId::Nkd {
            p: 8,
            n: 1,
            k: 1,
            d: 1,
        };
        let b = closed_branches(t, a1).unwrap();
        assert_eq!((b[0].printed, b[1].printed), (42.0, 44.0));
        assert_eq!(closed_threshold(t, a1).unwrap(), 44.0);
    }

    #[test]
    fn closed_rejects_bad_hypotheses() {
        let a = alpha(1.0);
        assert!(closed_threshold(TheoremId::ExtendPm { n: 3, k: 3 }, a).is_err());
        assert!(closed_threshold(TheoremId::FactorCritical { p: 7, k: 2 }, a).is_err());
        assert!(closed_threshold(TheoremId::PerfectMatching { n: 3 }, alpha(-1.0)).is_err());
        // d = 7 > (2 + 4)/(1 - 0.5) - 1 = 11 is false, so 0.5 is fine; 0.1 is not
        let t = TheoremId::Nkd {
            p: 16,
            n: 1,
            k: 1,
            d: 7,
        };
        assert!(closed_threshold(t, alpha(0.5)).is_ok());
        assert!(closed_threshold(t, alpha(0.1)).is_err());
        assert!(exact_threshold(t, alpha(0.1))
            .unwrap()
            .closed_form
            .is_none());
    }

    #[test]
    fn exact_examples() {
        let a1 = alpha(1.0);
        let r = exact_threshold(TheoremId::ExtendPm { n: 3, k: 1 }, a1).unwrap();
        assert_eq!(r.exact, 24.0);
        assert_eq!(r.closed_form, Some(24.0));
        assert_eq!(r.discrepancy, Some(0.0));

        let r = exact_threshold(TheoremId::PerfectMatching { n: 3 }, a1).unwrap();
        assert_eq!(r.exact, 18.0);
        assert_eq!(
            r.argmax_spec,
            ExtremalSpec::HubJoinOddCliques {
                hub: 2,
                halves: alloc::vec![0; 4]
            }
        );
        let b = closed_branches(TheoremId::PerfectMatching { n: 3 }, a1).unwrap();
        assert_eq!(b[0].member_value, Some(16.0));
        assert_eq!(b[0].discrepancy, Some(-3.0));
        assert_eq!(b[1].discrepancy, Some(0.0));

        let r = exact_threshold(
            TheoremId::Nkd {
                p: 8,
                n: 1,
                k: 1,
                d: 1,
            },
            a1,
        )
        .unwrap();
        assert_eq!(r.exact, 44.0);

        // n = 3, k = 2 has the single member K₄ ∨ 2K₁
        let r = exact_threshold(TheoremId::ExtendPm { n: 3, k: 2 }, a1).unwrap();
        assert_eq!(r.exact, 28.0);
    }

    #[test]
    fn corollary_anchors() {
        for n in 2..=10 {
            for k in 1..n {
                let t = TheoremId::ExtendPm { n, k };
                let zeta = closed_branches(t, alpha(1.0)).unwrap()[1].printed;
                assert_eq!(zeta, 2.0 * corollary_edge_bound(t).unwrap());
            }
        }
        let c = corollary_check(TheoremId::PerfectMatching { n: 3 })
            .unwrap()
            .unwrap();
        assert_eq!((c.edge_bound, c.exact_edges), (18.0, 9.0));
        let c = corollary_check(TheoremId::Nkd {
            p: 8,
            n: 1,
            k: 1,
            d: 1,
        })
        .unwrap()
        .unwrap();
        assert_eq!(c.discrepancy, 0.0);
        assert!(corollary_check(TheoremId::BipExtendK0 { n: 3 })
            .unwrap()
            .is_none());
    }

    #[test]
    fn phi_endpoints_match_members() {
        for a in [0.5, 1.0, 2.0] {
            let a = alpha(a);
            let t = TheoremId::PerfectMatching { n: 5 };
            let phi = PhiFunction::for_theorem(t);
            let ex = exceptional_specs(t).unwrap();
            assert!(approx_eq(phi.eval(4, a), ex[0].profile_index(a).unwrap()));
            assert!(approx_eq(phi.eval(1, a), ex[1].profile_index(a).unwrap()));

            let t = TheoremId::BipExtend { n: 5, k: 2 };
            let phi = PhiFunction::for_theorem(t);
            for s in phi.interval() {
                let spec = ExtremalSpec::BipartiteDeleted {
                    n: 5,
                    s,
                    t: 5 - 2 - s + 1,
                };
                assert!(approx_eq(phi.eval(s, a), spec.profile_index(a).unwrap()));
            }
        }
    }

    #[test]
    fn convexity_examples() {
        let d = phi_convexity_check(PhiFunction::Phi2 { n: 5, k: 1 }, alpha(1.0), 0..=3).unwrap();
        assert!(d.convex);
        assert!(d.second_differences.iter().all(|&x| x >= 0.0));
        let d = phi_convexity_check(PhiFunction::Phi3 { n: 4 }, alpha(2.0), 1..=3).unwrap();
        assert!(d.endpoint_max);
        assert!(d.argmax == 1 || d.argmax == 3);
        let d = phi_convexity_check(PhiFunction::Phi3 { n: 4 }, alpha(2.0), 2..=3).unwrap();
        assert!(d.second_differences.is_empty() && d.convex);
        assert!(phi_convexity_check(PhiFunction::Phi3 { n: 4 }, alpha(2.0), 0..=3).is_err());
    }

    #[test]
    fn from_property_round_trip() {
        let t = TheoremId::from_property(PropertyKind::Nkd { n: 1, k: 1, d: 1 }, 8).unwrap();
        assert_eq!(
            t,
            TheoremId::Nkd {
                p: 8,
                n: 1,
                k: 1,
                d: 1
            }
        );
        assert_eq!(t.property(), PropertyKind::Nkd { n: 1, k: 1, d: 1 });
        assert_eq!(
            TheoremId::from_property(PropertyKind::BipExtendable(0), 8).unwrap(),
            TheoremId::BipExtendK0 { n: 4 }
        );
        assert!(TheoremId::from_property(PropertyKind::PerfectMatching, 7).is_err());
        assert!(TheoremId::from_property(PropertyKind::Nkd { n: 2, k: 1, d: 1 }, 8).is_err());
    }
}
