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

//! Exhaustive small-graph enumeration and verification runs.
//!
//! Enumeration grows graphs one vertex at a time and keeps one canonical
//! representative per isomorphism class, so each class is checked once.
//! All runs use the ambient rayon pool; results are merged in graph6 order
//! and do not depend on the number of workers.

use std::collections::BTreeMap;

use rayon::prelude::*;

use matchext_core::census::{balanced_bipartite_labeled, canonical_extensions, sort_by_graph6};
use matchext_core::extremal::{build_extremal, enumerate_family_classes, exceptional_graphs};
use matchext_core::graph6;
use matchext_core::indices::{index_delta_for_edge, zeroth_order_randic};
use matchext_core::iso::{are_isomorphic, canonical_form};
use matchext_core::properties::{has_perfect_matching, is_maximal_non_p};
use matchext_core::thresholds::{
    approx_eq, at_least, closed_branches, exact_threshold, PhiFunction,
};
use matchext_core::{Alpha, Bipartition, CoreError, Graph, PropertyKind, TheoremId, MAX_ORDER};

use crate::report::{
    BipartiteAdjudication, CharacterizationOutcome, Detail, MonotonicityOutcome, TheoremOutcome,
    ThresholdScan, Verdict, VerificationReport,
};

/// Largest order of the built-in generator.
pub const BUILTIN_MAX_ORDER: usize = 9;

/// Largest part size of the built-in balanced bipartite generator.
pub const BIPARTITE_MAX_PART: usize = 4;

#[derive(Debug)]
pub enum HarnessError {
    Core(CoreError),
    /// Order beyond the built-in generator; use a graph6 stream instead.
    BuiltinOrder(usize),
    Alpha(&'static str),
}

impl std::fmt::Display for HarnessError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HarnessError::Core(e) => e.fmt(f),
            HarnessError::BuiltinOrder(p) => {
                write!(f, "order {p} is beyond the built-in generator (max {BUILTIN_MAX_ORDER}); supply a graph6 stream")
            }
            HarnessError::Alpha(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for HarnessError {}

impl From<CoreError> for HarnessError {
    fn from(e: CoreError) -> Self {
        HarnessError::Core(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Conjunction of hypothesis clauses on the scanned graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClassFilter {
    pub order: usize,
    pub connected: bool,
    pub perfect_matching: bool,
    /// Bipartite with equal parts.
    pub balanced_bipartite: bool,
    /// Parity of the order.
    pub parity: Option<Parity>,
}

impl GraphClassFilter {
    /// Every graph of order `p`.
    pub fn order(p: usize) -> Self {
        GraphClassFilter {
            order: p,
            connected: false,
            perfect_matching: false,
            balanced_bipartite: false,
            parity: None,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn with_perfect_matching(mut self) -> Self {
        self.perfect_matching = true;
        self
    }

    pub fn balanced_bipartite(mut self) -> Self {
        self.balanced_bipartite = true;
        self
    }

    pub fn parity(mut self, parity: Parity) -> Self {
        self.parity = Some(parity);
        self
    }

    /// Graphs a characterization of maximal non-`prop` graphs speaks about.
    pub fn for_property(prop: PropertyKind, p: usize) -> Self {
        let base = GraphClassFilter::order(p).connected();
        match prop {
            PropertyKind::PerfectMatching => base.parity(Parity::Even),
            PropertyKind::Extendable(_) => base.parity(Parity::Even).with_perfect_matching(),
            PropertyKind::BipExtendable(_) => base.parity(Parity::Even).balanced_bipartite(),
            PropertyKind::FactorCritical(k) => base.parity(if k % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            }),
            PropertyKind::Nkd { n, d, .. } => base.parity(if (n + d) % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            }),
        }
    }

    /// Hypotheses of a threshold theorem.
    pub fn for_theorem(t: TheoremId) -> Self {
        GraphClassFilter::for_property(t.property(), t.order())
    }

    fn parity_ok(&self) -> bool {
        match self.parity {
            None => true,
            Some(Parity::Even) => self.order.is_multiple_of(2),
            Some(Parity::Odd) => self.order % 2 == 1,
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() == self.order
            && self.parity_ok()
            && (!self.connected || g.is_connected())
            && (!self.balanced_bipartite || g.bipartition().is_some_and(|b| b.is_balanced()))
            && (!self.perfect_matching || has_perfect_matching(g))
    }
}

/// One canonical representative per isomorphism class of order `p`, in
/// graph6 order.
fn classes(p: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for _ in 0..p {
        let mut next: Vec<Graph> = level
            .par_iter()
            .flat_map_iter(canonical_extensions)
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    sort_by_graph6(level)
}

/// Every graph passing `filter`, one per isomorphism class, sorted by graph6.
pub fn enumerate_graphs(filter: &GraphClassFilter) -> Result<Vec<Graph>, HarnessError> {
    if filter.order > MAX_ORDER {
        return Err(CoreError::OrderTooLarge(filter.order).into());
    }
    if !filter.parity_ok() {
        return Ok(Vec::new());
    }
    if filter.balanced_bipartite {
        let n = filter.order / 2;
        return Ok(enumerate_bipartite(n)?
            .into_iter()
            .map(|(g, _)| g)
            .filter(|g| filter.accepts(g))
            .collect());
    }
    if filter.order > BUILTIN_MAX_ORDER {
        return Err(HarnessError::BuiltinOrder(filter.order));
    }
    Ok(classes(filter.order)
        .into_par_iter()
        .filter(|g| filter.accepts(g))
        .collect())
}

/// Connected graphs with all edges between `X = 0..n` and `Y = n..2n`, one
/// per isomorphism class, each with the bipartition it was generated with.
/// The representative of a class is its first labeled member in edge-mask
/// order; the list is sorted by graph6.
pub fn enumerate_bipartite(n: usize) -> Result<Vec<(Graph, Bipartition)>, HarnessError> {
    if n == 0 || n > BIPARTITE_MAX_PART {
        return Err(HarnessError::BuiltinOrder(2 * n));
    }
    let labeled: Vec<(Graph, Bipartition)> = balanced_bipartite_labeled(n).collect();
    let keyed: Vec<Option<Graph>> = labeled
        .par_iter()
        .map(|(g, _)| g.is_connected().then(|| canonical_form(g)))
        .collect();
    let mut first: BTreeMap<Graph, usize> = BTreeMap::new();
    for (i, key) in keyed.into_iter().enumerate() {
        if let Some(key) = key {
            first.entry(key).or_insert(i);
        }
    }
    let mut reps: Vec<(String, (Graph, Bipartition))> = first
        .into_values()
        .map(|i| (graph6::encode(&labeled[i].0), labeled[i].clone()))
        .collect();
    reps.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(reps.into_iter().map(|(_, x)| x).collect())
}

/// Graphs scanned by [`verify_theorem`].
#[derive(Debug, Clone)]
pub enum Source {
    /// The built-in generator under the theorem's hypotheses.
    BuiltIn,
    /// Externally supplied graphs; those violating the hypotheses are
    /// dropped.
    Graphs(Vec<Graph>),
}

fn require_positive(alphas: &[Alpha]) -> Result<(), HarnessError> {
    if alphas.iter().all(|a| a.is_positive()) {
        Ok(())
    } else {
        Err(HarnessError::Alpha("threshold theorems need alpha > 0"))
    }
}

fn sorted_unique(mut v: Vec<String>) -> Vec<String> {
    v.sort_unstable();
    v.dedup();
    v
}

struct Facts {
    index: Vec<f64>,
    lacks: bool,
    exceptional: bool,
}

struct Thresholds {
    report: matchext_core::ThresholdReport,
    statement: Option<f64>,
    proof_endpoint: Option<f64>,
}

fn scan(facts: &[Facts], g6: &[String], at: usize, threshold: f64) -> ThresholdScan {
    let mut above = 0;
    let mut exceptional = 0;
    let mut counterexamples = Vec::new();
    for (f, s) in facts.iter().zip(g6) {
        if !at_least(f.index[at], threshold) {
            continue;
        }
        above += 1;
        if f.lacks {
            if f.exceptional {
                exceptional += 1;
            } else {
                counterexamples.push(s.clone());
            }
        }
    }
    let counterexamples = sorted_unique(counterexamples);
    let verdict = Verdict::from_counterexamples(facts.len(), &counterexamples);
    ThresholdScan {
        threshold,
        graphs_above_threshold: above,
        exceptional_matches: exceptional,
        counterexamples,
        verdict,
    }
}

/// Checks that every graph in scope with `⁰R_α` at least the threshold has
/// the theorem's property or is one of its exempted graphs, for each `α`.
///
/// The exact threshold decides the verdict; the printed closed form is
/// scanned in the same pass and reported alongside.
pub fn verify_theorem(
    t: TheoremId,
    alphas: &[Alpha],
    source: Source,
) -> Result<VerificationReport, HarnessError> {
    t.check()?;
    require_positive(alphas)?;
    let filter = GraphClassFilter::for_theorem(t);
    let graphs = match source {
        Source::BuiltIn => enumerate_graphs(&filter)?,
        Source::Graphs(gs) => gs.into_par_iter().filter(|g| filter.accepts(g)).collect(),
    };
    let prop = t.property();
    let exceptional = exceptional_graphs(t)?;

    let mut levels = Vec::with_capacity(alphas.len());
    for &a in alphas {
        let report = exact_threshold(t, a)?;
        let (statement, proof_endpoint) = if t.is_bipartite() {
            let phi = PhiFunction::for_theorem(t);
            let (lo, hi) = (*phi.interval().start(), *phi.interval().end());
            let endpoint = phi.eval(lo, a).max(phi.eval(hi, a));
            (Some(closed_branches(t, a)?[0].printed), Some(endpoint))
        } else {
            (None, None)
        };
        levels.push(Thresholds {
            report,
            statement,
            proof_endpoint,
        });
    }
    let lowest: Vec<f64> = levels
        .iter()
        .map(|l| {
            [Some(l.report.exact), l.report.closed_form, l.statement]
                .into_iter()
                .flatten()
                .fold(f64::INFINITY, f64::min)
        })
        .collect();

    let facts: Vec<Facts> = graphs
        .par_iter()
        .map(|g| {
            let index = alphas
                .iter()
                .map(|&a| zeroth_order_randic(g, a))
                .collect::<Result<Vec<_>, _>>()?;
            let needed = index.iter().zip(&lowest).any(|(&r, &low)| at_least(r, low));
            let lacks = needed && !prop.holds(g);
            let exceptional = lacks && exceptional.iter().any(|e| are_isomorphic(g, e));
            Ok(Facts {
                index,
                lacks,
                exceptional,
            })
        })
        .collect::<Result<_, CoreError>>()?;
    let g6: Vec<String> = graphs.par_iter().map(graph6::encode).collect();

    let mut results = Vec::with_capacity(alphas.len());
    let mut verdict = Verdict::Vacuous;
    let mut all = Vec::new();
    for (i, (&a, level)) in alphas.iter().zip(levels).enumerate() {
        let exact = scan(&facts, &g6, i, level.report.exact);
        let closed_form = level.report.closed_form.map(|c| scan(&facts, &g6, i, c));
        let bipartite = match (level.statement, level.proof_endpoint, &closed_form) {
            (Some(statement), Some(proof_endpoint), Some(closed)) => Some(BipartiteAdjudication {
                statement,
                proof_endpoint,
                statement_is_sharp: approx_eq(statement, level.report.exact),
                proof_endpoint_is_sharp: approx_eq(proof_endpoint, level.report.exact),
                statement_survives: closed.verdict != Verdict::Fails,
            }),
            _ => None,
        };
        verdict = verdict.merge(exact.verdict);
        all.extend(exact.counterexamples.iter().cloned());
        results.push(TheoremOutcome {
            alpha: a.value(),
            threshold: level.report,
            exact,
            closed_form,
            bipartite,
        });
    }
    if graphs.is_empty() {
        verdict = Verdict::Vacuous;
    }
    Ok(VerificationReport {
        subject: t.to_string(),
        order: t.order(),
        alphas: alphas.iter().map(|a| a.value()).collect(),
        graphs_scanned: graphs.len(),
        verdict,
        counterexamples: sorted_unique(all),
        detail: Detail::Theorem {
            theorem: t,
            results,
        },
        wall_time_ms: None,
    })
}

/// Compares the maximal non-`prop` graphs of order `p` found by exhaustive
/// search with the characterizing family, up to isomorphism.
pub fn verify_characterization(
    prop: PropertyKind,
    p: usize,
) -> Result<VerificationReport, HarnessError> {
    let family_specs = enumerate_family_classes(prop, p)?;
    let filter = GraphClassFilter::for_property(prop, p);
    let scanned: Vec<(Graph, Option<Bipartition>)> = if prop.is_bipartite() {
        enumerate_bipartite(p / 2)?
            .into_iter()
            .map(|(g, b)| (g, Some(b)))
            .collect()
    } else {
        enumerate_graphs(&filter)?
            .into_iter()
            .map(|g| (g, None))
            .collect()
    };
    let maximal: Vec<bool> = scanned
        .par_iter()
        .map(|(g, b)| is_maximal_non_p(g, prop, b.as_ref()))
        .collect::<Result<_, _>>()?;
    let found: Vec<&Graph> = scanned
        .iter()
        .zip(&maximal)
        .filter(|(_, &m)| m)
        .map(|((g, _), _)| g)
        .collect();

    let mut family: Vec<Graph> = Vec::new();
    for spec in &family_specs {
        let g = build_extremal(spec)?.graph;
        if !family.iter().any(|h| are_isomorphic(h, &g)) {
            family.push(g);
        }
    }
    let unexpected: Vec<String> = found
        .iter()
        .filter(|g| !family.iter().any(|h| are_isomorphic(g, h)))
        .map(|g| graph6::encode(g))
        .collect();
    let missing: Vec<String> = family
        .iter()
        .filter(|h| !found.iter().any(|g| are_isomorphic(g, h)))
        .map(graph6::encode)
        .collect();

    let counterexamples = sorted_unique(missing.iter().chain(&unexpected).cloned().collect());
    let verdict = Verdict::from_counterexamples(scanned.len(), &counterexamples);
    Ok(VerificationReport {
        subject: format!("maximal non-{prop} (p={p})"),
        order: p,
        alphas: Vec::new(),
        graphs_scanned: scanned.len(),
        verdict,
        counterexamples,
        detail: Detail::Characterization(CharacterizationOutcome {
            property: prop,
            maximal_found: sorted_unique(found.iter().map(|g| graph6::encode(g)).collect()),
            family: sorted_unique(family.iter().map(graph6::encode).collect()),
            missing: sorted_unique(missing),
            unexpected: sorted_unique(unexpected),
        }),
        wall_time_ms: None,
    })
}

/// Checks the sign of `⁰R_α(G + uv) − ⁰R_α(G)` over every graph of order
/// `p` and every non-edge: positive for `α > 0` (exactly 2 at `α = 1`),
/// negative for `α < 0`. For `α < 0` non-edges at an isolated vertex are
/// skipped since `0^α` is undefined.
pub fn verify_monotonicity(alphas: &[Alpha], p: usize) -> Result<VerificationReport, HarnessError> {
    let graphs = enumerate_graphs(&GraphClassFilter::order(p))?;
    let g6: Vec<String> = graphs.par_iter().map(graph6::encode).collect();
    let mut results = Vec::with_capacity(alphas.len());
    let mut verdict = Verdict::Vacuous;
    let mut all = Vec::new();
    for &a in alphas {
        let v = a.value();
        let expected = if v == 1.0 {
            "plus_two"
        } else if v > 0.0 {
            "increasing"
        } else {
            "decreasing"
        };
        let ok = |d: f64| match expected {
            "plus_two" => d == 2.0,
            "increasing" => d > 0.0,
            _ => d < 0.0,
        };
        // (checked, skipped, min, max, violated)
        let per_graph: Vec<(usize, usize, f64, f64, bool)> = graphs
            .par_iter()
            .map(|g| {
                let mut acc = (0, 0, f64::INFINITY, f64::NEG_INFINITY, false);
                for (x, y) in g.non_edges() {
                    if v < 0.0 && (g.degree(x) == 0 || g.degree(y) == 0) {
                        acc.1 += 1;
                        continue;
                    }
                    let d = index_delta_for_edge(g, x, y, a)?;
                    acc.0 += 1;
                    acc.2 = acc.2.min(d);
                    acc.3 = acc.3.max(d);
                    acc.4 |= !ok(d);
                }
                Ok(acc)
            })
            .collect::<Result<_, CoreError>>()?;
        let mut out = MonotonicityOutcome {
            alpha: v,
            expected,
            pairs_checked: 0,
            pairs_skipped: 0,
            min_delta: None,
            max_delta: None,
            counterexamples: Vec::new(),
            verdict: Verdict::Vacuous,
        };
        for ((checked, skipped, lo, hi, bad), s) in per_graph.into_iter().zip(&g6) {
            out.pairs_checked += checked;
            out.pairs_skipped += skipped;
            if checked > 0 {
                out.min_delta = Some(out.min_delta.map_or(lo, |m: f64| m.min(lo)));
                out.max_delta = Some(out.max_delta.map_or(hi, |m: f64| m.max(hi)));
            }
            if bad {
                out.counterexamples.push(s.clone());
            }
        }
        out.verdict = Verdict::from_counterexamples(out.pairs_checked, &out.counterexamples);
        verdict = verdict.merge(out.verdict);
        all.extend(out.counterexamples.iter().cloned());
        results.push(out);
    }
    Ok(VerificationReport {
        subject: format!("edge monotonicity (p={p})"),
        order: p,
        alphas: alphas.iter().map(|a| a.value()).collect(),
        graphs_scanned: graphs.len(),
        verdict,
        counterexamples: sorted_unique(all),
        detail: Detail::Monotonicity { results },
        wall_time_ms: None,
    })
}
