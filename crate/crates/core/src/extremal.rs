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

//! The maximal graphs lacking each property, and the exceptional graphs
//! named by the threshold theorems.
//!
//! Two shapes cover every family:
//!
//! * `K_{n,n} − S×T`: the complete balanced bipartite graph with every edge
//!   between `S ⊆ X` and `T ⊆ Y` removed;
//! * `K_q ∨ (K_{2t₁+1} ∪ … ∪ K_{2t_m+1})`: a hub clique joined to a union of
//!   odd cliques.
//!
//! Labeling: for the bipartite shape `X = 0..n`, `Y = n..2n`, `S` is the
//! first `s` vertices of `X` and `T` the first `t` of `Y`. For the hub shape
//! the hub is `0..q`, followed by the cliques in non-increasing size.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::graph::{Bipartition, Graph, MAX_ORDER};
use crate::indices::{power, Alpha};
use crate::properties::PropertyKind;
use crate::thresholds::TheoremId;

/// Parameters of one family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ExtremalSpec {
    /// `K_{n,n}` minus all edges between `|S| = s` and `|T| = t`.
    BipartiteDeleted { n: usize, s: usize, t: usize },
    /// `K_hub ∨ ⋃ K_{2tᵢ+1}` with `halves = (t₁, …, t_m)`.
    HubJoinOddCliques { hub: usize, halves: Vec<usize> },
}

impl ExtremalSpec {
    /// Checks the shape invariants.
    pub fn validate(&self) -> Result<(), CoreError> {
        match self {
            &ExtremalSpec::BipartiteDeleted { n, s, t } => {
                if s < 1 || s + 1 > n {
                    return Err(CoreError::Parameters("need 1 <= s <= n - 1"));
                }
                // t = n - k - s + 1 with k >= 0 and 2 <= k + s <= n
                if t < 1 || t + 1 > n || t > n - s + 1 {
                    return Err(CoreError::Parameters(
                        "need 1 <= t <= min(n - 1, n - s + 1)",
                    ));
                }
                if 2 * n > MAX_ORDER {
                    return Err(CoreError::OrderTooLarge(2 * n));
                }
                Ok(())
            }
            ExtremalSpec::HubJoinOddCliques { halves, .. } => {
                if halves.len() < 2 {
                    return Err(CoreError::Parameters("need at least two odd cliques"));
                }
                let p = self.order();
                if p > MAX_ORDER {
                    return Err(CoreError::OrderTooLarge(p));
                }
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        match self {
            ExtremalSpec::BipartiteDeleted { n, .. } => 2 * n,
            ExtremalSpec::HubJoinOddCliques { hub, halves } => {
                hub + halves.iter().map(|t| 2 * t + 1).sum::<usize>()
            }
        }
    }

    /// The same member with clique half-sizes in non-increasing order.
    pub fn canonical(&self) -> Self {
        match self {
            ExtremalSpec::HubJoinOddCliques { hub, halves } => {
                let mut halves = halves.clone();
                halves.sort_unstable_by(|a, b| b.cmp(a));
                ExtremalSpec::HubJoinOddCliques { hub: *hub, halves }
            }
            other => other.clone(),
        }
    }

    /// `k` for which a bipartite member is maximal non-`k`-extendable.
    pub fn bipartite_k(&self) -> Option<usize> {
        match *self {
            ExtremalSpec::BipartiteDeleted { n, s, t } => Some(n + 1 - s - t),
            _ => None,
        }
    }

    /// `⁰R_α` from the degree profile, without building the graph.
    ///
    /// Hub vertices have degree `p − 1` and the vertices of `K_{2t+1}`
    /// degree `2t + q`; in `K_{n,n} − S×T` the degrees are `n − t` on `S`,
    /// `n − s` on `T` and `n` elsewhere.
    pub fn profile_index(&self, a: Alpha) -> Option<f64> {
        let pw = |d: usize| power(d as u64, a);
        match self {
            &ExtremalSpec::BipartiteDeleted { n, s, t } => Some(
                (2 * n - s - t) as f64 * pw(n)? + s as f64 * pw(n - t)? + t as f64 * pw(n - s)?,
            ),
            ExtremalSpec::HubJoinOddCliques { hub, halves } => {
                let p = self.order();
                let mut sum = *hub as f64 * pw(p - 1)?;
                for &t in halves {
                    sum += (2 * t + 1) as f64 * pw(2 * t + hub)?;
                }
                Some(sum)
            }
        }
    }
}

/// A built family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalGraph {
    pub graph: Graph,
    /// Present for the bipartite shape.
    pub bipartition: Option<Bipartition>,
}

/// Builds the graph described by `spec`.
pub fn build_extremal(spec: &ExtremalSpec) -> Result<ExtremalGraph, CoreError> {
    spec.validate()?;
    match spec.canonical() {
        ExtremalSpec::BipartiteDeleted { n, s, t } => {
            let (k, b) = Graph::complete_bipartite(n, n);
            let sv: Vec<usize> = (0..s).collect();
            let tv: Vec<usize> = (n..n + t).collect();
            Ok(ExtremalGraph {
                graph: k.delete_biclique(&sv, &tv)?,
                bipartition: Some(b),
            })
        }
        ExtremalSpec::HubJoinOddCliques { hub, halves } => {
            let cliques = halves.iter().fold(Graph::empty(0), |acc, &t| {
                acc.union(&Graph::complete(2 * t + 1))
            });
            Ok(ExtremalGraph {
                graph: Graph::complete(hub).join(&cliques),
                bipartition: None,
            })
        }
    }
}

/// Compositions of `total` into `parts` non-negative parts, largest first
/// part first.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    } else if total == 0 {
        out.push(Vec::new());
    }
    out
}

/// Non-increasing `parts`-tuples summing to `total`, in reverse
/// lexicographic order.
pub fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(
        total: usize,
        parts: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // the remaining parts cannot exceed `cap`
        if total > cap * parts {
            return;
        }
        for first in (total.div_ceil(parts)..=total.min(cap)).rev() {
            prefix.push(first);
            go(total - first, parts - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(
        total,
        parts,
        total,
        &mut Vec::with_capacity(parts),
        &mut out,
    );
    out
}

/// Hub size, clique count and half-size total for each `s`.
struct HubFamily {
    rows: Vec<(usize, usize, usize)>,
}

fn hub_family(prop: PropertyKind, p: usize) -> Result<HubFamily, CoreError> {
    let mut rows = Vec::new();
    match prop {
        PropertyKind::PerfectMatching | PropertyKind::FactorCritical(0) => {
            if !p.is_multiple_of(2) {
                return Err(CoreError::Parameters(
                    "perfect matching family needs even order",
                ));
            }
            let n = p / 2;
            for s in 1..n {
                rows.push((s, s + 2, n - s - 1));
            }
        }
        PropertyKind::Extendable(k) => {
            if !p.is_multiple_of(2) {
                return Err(CoreError::Parameters("extendable family needs even order"));
            }
            let n = p / 2;
            if k < 1 || k + 1 > n {
                return Err(CoreError::Parameters(
                    "extendable family needs 1 <= k <= n - 1",
                ));
            }
            for s in 0..n - k {
                rows.push((2 * k + s, s + 2, n - k - s - 1));
            }
        }
        PropertyKind::FactorCritical(k) => {
            if k > p || !(p - k).is_multiple_of(2) {
                return Err(CoreError::Parameters(
                    "factor-critical family needs k <= p of the same parity",
                ));
            }
            let h = (p - k) / 2;
            for s in 0..h {
                rows.push((k + s, s + 2, h - s - 1));
            }
        }
        PropertyKind::Nkd { n, k, d } => {
            if n == 0 || k == 0 || d == 0 {
                return Err(CoreError::Parameters(
                    "(n,k,d) family needs positive n, k, d",
                ));
            }
            if p < n + 2 * k + d + 2 || !(p + n + d).is_multiple_of(2) {
                return Err(CoreError::Parameters(
                    "(n,k,d) family needs p >= n+2k+d+2 and p+n+d even",
                ));
            }
            let h = (p - n - 2 * k - d) / 2;
            for s in 0..h {
                rows.push((n + 2 * k + s, s + d + 2, h - s - 1));
            }
        }
        PropertyKind::BipExtendable(_) => unreachable!("handled by bipartite_family"),
    }
    if p > MAX_ORDER {
        return Err(CoreError::OrderTooLarge(p));
    }
    Ok(HubFamily { rows })
}

fn bipartite_family(k: usize, p: usize) -> Result<Vec<ExtremalSpec>, CoreError> {
    if !p.is_multiple_of(2) || p > MAX_ORDER {
        return Err(CoreError::Parameters(
            "bipartite family needs even order <= 64",
        ));
    }
    let n = p / 2;
    if k + 1 > n {
        return Err(CoreError::Parameters("bipartite family needs k <= n - 1"));
    }
    Ok((1..n)
        .filter(|&s| k + s >= 2 && k + s <= n)
        .map(|s| ExtremalSpec::BipartiteDeleted {
            n,
            s,
            t: n - k - s + 1,
        })
        .collect())
}

/// Every member of the family characterizing maximal non-`prop` graphs of
/// order `p`, one per `s` and ordered composition of the clique half-sizes.
pub fn enumerate_family(prop: PropertyKind, p: usize) -> Result<Vec<ExtremalSpec>, CoreError> {
    if let PropertyKind::BipExtendable(k) = prop {
        return bipartite_family(k, p);
    }
    let fam = hub_family(prop, p)?;
    Ok(fam
        .rows
        .iter()
        .flat_map(|&(hub, m, total)| {
            compositions(total, m)
                .into_iter()
                .map(move |halves| ExtremalSpec::HubJoinOddCliques { hub, halves })
        })
        .collect())
}

/// Like [`enumerate_family`] but with one member per multiset of clique
/// sizes (canonical, non-increasing half-sizes).
pub fn enumerate_family_classes(
    prop: PropertyKind,
    p: usize,
) -> Result<Vec<ExtremalSpec>, CoreError> {
    if let PropertyKind::BipExtendable(k) = prop {
        return bipartite_family(k, p);
    }
    let fam = hub_family(prop, p)?;
    Ok(fam
        .rows
        .iter()
        .flat_map(|&(hub, m, total)| {
            partitions(total, m)
                .into_iter()
                .map(move |halves| ExtremalSpec::HubJoinOddCliques { hub, halves })
        })
        .collect())
}

/// The exceptional graphs exempted by a threshold theorem, as specs.
pub fn exceptional_specs(theorem: TheoremId) -> Result<Vec<ExtremalSpec>, CoreError> {
    theorem.check()?;
    let hub = |hub: usize, halves: Vec<usize>| ExtremalSpec::HubJoinOddCliques { hub, halves };
    let mut specs = match theorem {
        TheoremId::BipExtendK0 { n } => vec![ExtremalSpec::BipartiteDeleted { n, s: 2, t: n - 1 }],
        TheoremId::BipExtend { n, k } => vec![ExtremalSpec::BipartiteDeleted { n, s: 1, t: n - k }],
        // K_{n+k-1} ∨ (n-k+1)K₁ and K_{2k} ∨ (K₁ ∪ K_{2n-2k-1})
        TheoremId::ExtendPm { n, k } => vec![
            hub(n + k - 1, vec![0; n - k + 1]),
            hub(2 * k, vec![n - k - 1, 0]),
        ],
        // K_{n-1} ∨ (n+1)K₁ and K₁ ∨ (2K₁ ∪ K_{2n-3})
        TheoremId::PerfectMatching { n } => {
            vec![hub(n - 1, vec![0; n + 1]), hub(1, vec![n - 2, 0, 0])]
        }
        // K_{(p+k)/2-1} ∨ ((p-k)/2+1)K₁ and K_k ∨ (K₁ ∪ K_{p-k-1})
        TheoremId::FactorCritical { p, k } => {
            let h = (p - k) / 2;
            vec![hub((p + k) / 2 - 1, vec![0; h + 1]), hub(k, vec![h - 1, 0])]
        }
        // K_{(p+n+2k-d)/2-1} ∨ ((p-n-2k+d)/2+1)K₁ and K_{n+2k} ∨ ((d+1)K₁ ∪ K_{p-n-2k-d-1})
        TheoremId::Nkd { p, n, k, d } => {
            let h = (p - n - 2 * k - d) / 2;
            let mut halves = vec![h - 1];
            halves.extend(core::iter::repeat_n(0, d + 1));
            vec![
                hub((p + n + 2 * k - d) / 2 - 1, vec![0; h + d + 1]),
                hub(n + 2 * k, halves),
            ]
        }
    };
    specs.dedup();
    Ok(specs)
}

/// The exceptional graphs exempted by a threshold theorem.
pub fn exceptional_graphs(theorem: TheoremId) -> Result<Vec<Graph>, CoreError> {
    exceptional_specs(theorem)?
        .iter()
        .map(|s| build_extremal(s).map(|e| e.graph))
        .collect()
}

/// A composition together with `Σ g(nᵢ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Composition {
    pub parts: Vec<usize>,
    pub value: f64,
}

fn check_composition_args(parts: usize, total: usize) -> Result<(), CoreError> {
    if parts < 2 || total == 0 {
        return Err(CoreError::Parameters(
            "need at least two parts and a positive total",
        ));
    }
    Ok(())
}

/// Maximizes `Σ g(nᵢ)` over compositions of `total` into `parts` parts by
/// the adjustment method: starting from an even split, keep moving one unit
/// from a smaller part onto the largest part while that strictly increases
/// the sum. For strictly convex `g` this ends at `(total, 0, …, 0)`.
pub fn adjust_maximize(
    g: impl Fn(usize) -> f64,
    parts: usize,
    total: usize,
) -> Result<Composition, CoreError> {
    check_composition_args(parts, total)?;
    let mut n: Vec<usize> = (0..parts)
        .map(|i| total / parts + usize::from(i < total % parts))
        .collect();
    loop {
        let mut moved = false;
        for i in 1..parts {
            while n[i] > 0 {
                let gain = g(n[0] + 1) + g(n[i] - 1) - g(n[0]) - g(n[i]);
                if gain > 0.0 {
                    n[0] += 1;
                    n[i] -= 1;
                    moved = true;
                } else {
                    break;
                }
            }
        }
        if !moved {
            break;
        }
    }
    let value = n.iter().map(|&x| g(x)).sum();
    Ok(Composition { parts: n, value })
}

/// Exhaustive maximum of `Σ g(nᵢ)` over all compositions; the first
/// maximizer in [`compositions`] order is returned.
pub fn brute_force_maximize(
    g: impl Fn(usize) -> f64,
    parts: usize,
    total: usize,
) -> Result<Composition, CoreError> {
    check_composition_args(parts, total)?;
    let mut best: Option<Composition> = None;
    for c in compositions(total, parts) {
        let value = c.iter().map(|&x| g(x)).sum();
        // summation order perturbs exact ties; keep the first maximizer
        if best
            .as_ref()
            .is_none_or(|b| value > b.value && !crate::thresholds::approx_eq(value, b.value))
        {
            best = Some(Composition { parts: c, value });
        }
    }
    Ok(best.expect("at least one composition"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::zeroth_order_randic;

    fn hub(hub: usize, halves: &[usize]) -> ExtremalSpec {
        ExtremalSpec::HubJoinOddCliques {
            hub,
            halves: halves.to_vec(),
        }
    }

    #[test]
    fn build_examples() {
        let g = build_extremal(&hub(3, &[0, 0, 0])).unwrap().graph;
        assert_eq!(g.degrees(), [5, 5, 5, 3, 3, 3]);

        let g = build_extremal(&hub(1, &[0, 1, 0])).unwrap().graph;
        assert_eq!(g.degrees(), [5, 3, 3, 3, 1, 1]);

        let e = build_extremal(&ExtremalSpec::BipartiteDeleted { n: 3, s: 1, t: 2 }).unwrap();
        assert_eq!(e.graph.edge_count(), 7);
        e.bipartition.unwrap().validate(&e.graph).unwrap();
    }

    #[test]
    fn spec_validation() {
        assert!(build_extremal(&ExtremalSpec::BipartiteDeleted { n: 3, s: 0, t: 2 }).is_err());
        assert!(build_extremal(&ExtremalSpec::BipartiteDeleted { n: 3, s: 3, t: 1 }).is_err());
        assert!(build_extremal(&ExtremalSpec::BipartiteDeleted { n: 3, s: 1, t: 3 }).is_err());
        assert!(build_extremal(&ExtremalSpec::BipartiteDeleted { n: 4, s: 3, t: 3 }).is_err());
        assert!(build_extremal(&hub(2, &[3])).is_err());
        assert!(build_extremal(&hub(40, &[10, 5])).is_err());
    }

    #[test]
    fn family_examples() {
        let fam = enumerate_family(PropertyKind::Extendable(1), 6).unwrap();
        assert_eq!(fam, [hub(2, &[1, 0]), hub(2, &[0, 1]), hub(3, &[0, 0, 0])]);

        let fam = enumerate_family(PropertyKind::PerfectMatching, 4).unwrap();
        assert_eq!(fam, [hub(1, &[0, 0, 0])]);
        let star = build_extremal(&fam[0]).unwrap().graph;
        assert!(crate::iso::are_isomorphic(
            &star,
            &Graph::complete_bipartite(1, 3).0
        ));

        let fam = enumerate_family(PropertyKind::BipExtendable(2), 6).unwrap();
        assert_eq!(fam, [ExtremalSpec::BipartiteDeleted { n: 3, s: 1, t: 1 }]);

        let fam = enumerate_family(PropertyKind::BipExtendable(1), 6).unwrap();
        assert_eq!(fam.len(), 2);

        let fam = enumerate_family(PropertyKind::Nkd { n: 1, k: 1, d: 1 }, 8).unwrap();
        assert_eq!(
            fam,
            [
                hub(3, &[1, 0, 0]),
                hub(3, &[0, 1, 0]),
                hub(3, &[0, 0, 1]),
                hub(4, &[0, 0, 0, 0])
            ]
        );

        assert!(enumerate_family(PropertyKind::Extendable(0), 6).is_err());
        assert!(enumerate_family(PropertyKind::FactorCritical(2), 7).is_err());
        assert!(enumerate_family(PropertyKind::Nkd { n: 2, k: 1, d: 1 }, 8).is_err());
    }

    #[test]
    fn classes_collapse_compositions() {
        let classes = enumerate_family_classes(PropertyKind::Extendable(1), 6).unwrap();
        assert_eq!(classes, [hub(2, &[1, 0]), hub(3, &[0, 0, 0])]);
        let all = enumerate_family(PropertyKind::PerfectMatching, 10).unwrap();
        let classes = enumerate_family_classes(PropertyKind::PerfectMatching, 10).unwrap();
        let mut canon: Vec<_> = all.iter().map(|s| s.canonical()).collect();
        canon.sort();
        canon.dedup();
        let mut sorted = classes.clone();
        sorted.sort();
        assert_eq!(canon, sorted);
    }

    #[test]
    fn compositions_and_partitions() {
        assert_eq!(compositions(1, 2), [[1, 0], [0, 1]]);
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 3), [[0, 0, 0]]);
        assert_eq!(
            partitions(4, 3),
            [vec![4, 0, 0], vec![3, 1, 0], vec![2, 2, 0], vec![2, 1, 1]]
        );
        assert_eq!(partitions(0, 2), [[0, 0]]);
        assert_eq!(partitions(5, 1), [[5]]);
    }

    #[test]
    fn exceptional_examples() {
        let iso = crate::iso::are_isomorphic;
        let gs = exceptional_graphs(TheoremId::PerfectMatching { n: 3 }).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(iso(&gs[0], &Graph::complete(2).join(&Graph::empty(4))));
        assert!(iso(
            &gs[1],
            &Graph::complete(1).join(&Graph::empty(2).union(&Graph::complete(3)))
        ));

        let gs = exceptional_graphs(TheoremId::ExtendPm { n: 3, k: 1 }).unwrap();
        assert!(iso(&gs[0], &Graph::complete(3).join(&Graph::empty(3))));
        assert!(iso(
            &gs[1],
            &Graph::complete(2).join(&Graph::empty(1).union(&Graph::complete(3)))
        ));

        let gs = exceptional_graphs(TheoremId::Nkd {
            p: 8,
            n: 1,
            k: 1,
            d: 1,
        })
        .unwrap();
        assert!(iso(&gs[0], &Graph::complete(4).join(&Graph::empty(4))));
        assert!(iso(
            &gs[1],
            &Graph::complete(3).join(&Graph::empty(2).union(&Graph::complete(3)))
        ));

        let gs = exceptional_graphs(TheoremId::FactorCritical { p: 7, k: 3 }).unwrap();
        assert!(iso(&gs[0], &Graph::complete(4).join(&Graph::empty(3))));
        assert!(iso(
            &gs[1],
            &Graph::complete(3).join(&Graph::empty(1).union(&Graph::complete(3)))
        ));

        assert!(exceptional_graphs(TheoremId::ExtendPm { n: 3, k: 3 }).is_err());
    }

    #[test]
    fn profile_index_matches_built_graph() {
        for spec in enumerate_family(PropertyKind::Nkd { n: 1, k: 1, d: 2 }, 11)
            .unwrap()
            .into_iter()
            .chain(enumerate_family(PropertyKind::BipExtendable(1), 10).unwrap())
        {
            let g = build_extremal(&spec).unwrap().graph;
            for a in [0.5, 1.0, 2.0, 3.0] {
                let a = Alpha::new(a).unwrap();
                let built = zeroth_order_randic(&g, a).unwrap();
                let profile = spec.profile_index(a).unwrap();
                assert!((built - profile).abs() <= 1e-9 * built, "{spec:?}");
            }
        }
    }

    #[test]
    fn adjustment_examples() {
        let sq = |x: usize| (x * x) as f64;
        let c = adjust_maximize(sq, 3, 5).unwrap();
        assert_eq!(
            c,
            Composition {
                parts: vec![5, 0, 0],
                value: 25.0
            }
        );
        let c = adjust_maximize(sq, 2, 2).unwrap();
        assert_eq!(c.parts, [2, 0]);
        assert!(c.value > 2.0);

        let f = |x: usize| ((2 * x + 1) * (2 * x + 3) * (2 * x + 3)) as f64;
        let c = adjust_maximize(f, 3, 4).unwrap();
        let b = brute_force_maximize(f, 3, 4).unwrap();
        assert_eq!(c.parts, [4, 0, 0]);
        assert_eq!(b.parts, [4, 0, 0]);
        assert_eq!(c.value, b.value);

        assert!(adjust_maximize(sq, 1, 3).is_err());
        assert!(adjust_maximize(sq, 3, 0).is_err());
    }
}
