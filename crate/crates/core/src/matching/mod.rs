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

//! Maximum matchings, deficiency, `k`-matching enumeration and extension
//! tests.
//!
//! [`maximum_matching`] runs the blossom algorithm and works on any graph;
//! [`bipartite_maximum_matching`] is the layered augmenting-path variant for
//! graphs with a known bipartition. [`oracle`] holds exhaustive reference
//! implementations for tests.

mod bipartite;
mod blossom;
pub mod oracle;

use alloc::vec::Vec;

use crate::error::CoreError;
use crate::graph::{bits, Bipartition, Graph};

pub(crate) use blossom::matching_number_within;
use blossom::NONE;

/// A set of pairwise vertex-disjoint edges of some host graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Checks that every pair is an edge of `host` and that no vertex is
    /// used twice.
    pub fn new(host: &Graph, edges: &[(usize, usize)]) -> Result<Self, CoreError> {
        let mut used = 0u64;
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            host.check_vertex(u)?;
            host.check_vertex(v)?;
            if !host.has_edge(u, v) {
                return Err(CoreError::InvalidMatching(
                    "pair is not an edge of the host",
                ));
            }
            let m = 1u64 << u | 1u64 << v;
            if used & m != 0 {
                return Err(CoreError::InvalidMatching("edges share a vertex"));
            }
            used |= m;
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    fn from_mates(mate: &[usize], active: u64) -> Self {
        let edges = bits(active)
            .filter(|&v| mate[v] != NONE && v < mate[v])
            .map(|v| (v, mate[v]))
            .collect();
        Matching { edges }
    }

    /// Number of edges `k`.
    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Mask of saturated vertices.
    pub fn vertex_mask(&self) -> u64 {
        self.edges.iter().fold(0, |m, &(u, v)| m | 1 << u | 1 << v)
    }

    pub fn saturates(&self, v: usize) -> bool {
        v < 64 && self.vertex_mask() >> v & 1 == 1
    }

    /// Unsaturated vertex count in `host`; `2k + def = |V|`.
    pub fn deficiency(&self, host: &Graph) -> Deficiency {
        Deficiency(host.order() - 2 * self.len())
    }

    /// Every edge lies in `g`.
    pub fn is_matching_of(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// Number of vertices a matching leaves unsaturated. Always congruent to the
/// host order modulo 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Deficiency(usize);

impl Deficiency {
    #[inline]
    pub fn value(self) -> usize {
        self.0
    }
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let active = g.vertex_mask();
    Matching::from_mates(&blossom::maximum_mates(g, active), active)
}

/// Size of a maximum matching of `g`.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_within(g, g.vertex_mask())
}

/// Maximum matching of a bipartite graph with the given bipartition.
pub fn bipartite_maximum_matching(g: &Graph, b: &Bipartition) -> Result<Matching, CoreError> {
    b.validate(g)?;
    let mate = bipartite::hopcroft_karp_mates(g, b);
    Ok(Matching::from_mates(&mate, g.vertex_mask()))
}

/// `p − 2ν(G)`.
pub fn min_deficiency(g: &Graph) -> Deficiency {
    Deficiency(g.order() - 2 * matching_number(g))
}

/// Whether `m` extends to a matching of `g` leaving exactly `d` vertices
/// unsaturated.
///
/// Returns `false` when `p − 2|m| − d` is negative or odd, or when `m` is
/// not a matching of `g`.
pub fn extends_to_deficiency(g: &Graph, m: &Matching, d: usize) -> bool {
    if !m.is_matching_of(g) {
        return false;
    }
    let p = g.order();
    let Some(rest) = p.checked_sub(2 * m.len() + d) else {
        return false;
    };
    if rest % 2 != 0 {
        return false;
    }
    residual_reaches(g, g.vertex_mask() & !m.vertex_mask(), d)
}

/// Whether `g[active]` has a matching missing at most `d` of its vertices;
/// with matching parity this means exactly `d`.
#[inline]
pub(crate) fn residual_reaches(g: &Graph, active: u64, d: usize) -> bool {
    let size = active.count_ones() as usize;
    2 * matching_number_within(g, active) + d >= size
}

/// Every `k`-matching of `g`, each exactly once, in lexicographic order of
/// the sorted edge-index tuples.
pub fn enumerate_k_matchings(g: &Graph, k: usize) -> KMatchings {
    KMatchings::within(g, g.vertex_mask(), k)
}

/// Depth-first enumerator of `k`-matchings of an induced subgraph.
#[derive(Debug, Clone)]
pub struct KMatchings {
    edges: Vec<(usize, usize)>,
    k: usize,
    stack: Vec<usize>,
    used: u64,
    free: u64,
    next: usize,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl KMatchings {
    /// `k`-matchings of `g[active]`.
    pub fn within(g: &Graph, active: u64, k: usize) -> Self {
        let active = active & g.vertex_mask();
        let edges = g
            .edges()
            .filter(|&(u, v)| active >> u & 1 == 1 && active >> v & 1 == 1)
            .collect();
        KMatchings {
            edges,
            k,
            stack: Vec::with_capacity(k),
            used: 0,
            free: active,
            next: 0,
            state: State::Fresh,
        }
    }

    fn push(&mut self, j: usize) {
        let (u, v) = self.edges[j];
        self.used |= 1 << u | 1 << v;
        self.stack.push(j);
        self.next = j + 1;
    }

    fn pop(&mut self) -> bool {
        match self.stack.pop() {
            Some(j) => {
                let (u, v) = self.edges[j];
                self.used &= !(1 << u | 1 << v);
                self.next = j + 1;
                true
            }
            None => false,
        }
    }

    /// Moves to the next `k`-matching. Returns `false` when exhausted; the
    /// current matching's vertex set is then [`Self::current_mask`].
    pub fn advance(&mut self) -> bool {
        match self.state {
            State::Done => return false,
            State::Fresh => {
                self.state = State::Running;
                if self.k == 0 {
                    return true;
                }
                if 2 * self.k > self.free.count_ones() as usize {
                    self.state = State::Done;
                    return false;
                }
            }
            State::Running => {
                if self.k == 0 || !self.pop() {
                    self.state = State::Done;
                    return false;
                }
            }
        }
        loop {
            let need = self.k - self.stack.len();
            let available = (self.free & !self.used).count_ones() as usize;
            let found = if self.edges.len() - self.next.min(self.edges.len()) < need
                || 2 * need > available
            {
                None
            } else {
                (self.next..self.edges.len()).find(|&j| {
                    let (u, v) = self.edges[j];
                    self.used >> u & 1 == 0 && self.used >> v & 1 == 0
                })
            };
            match found {
                Some(j) => {
                    self.push(j);
                    if self.stack.len() == self.k {
                        return true;
                    }
                }
                None => {
                    if !self.pop() {
                        self.state = State::Done;
                        return false;
                    }
                }
            }
        }
    }

    /// Vertices saturated by the current matching.
    #[inline]
    pub fn current_mask(&self) -> u64 {
        self.used
    }

    fn current(&self) -> Matching {
        let mut edges: Vec<_> = self.stack.iter().map(|&j| self.edges[j]).collect();
        edges.sort_unstable();
        Matching { edges }
    }
}

impl Iterator for KMatchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.advance().then(|| self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_bridged() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
    }

    #[test]
    fn maximum_matching_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(maximum_matching(&c5).len(), 2);
        assert_eq!(min_deficiency(&c5).value(), 1);

        let pet = Graph::petersen();
        let m = maximum_matching(&pet);
        assert_eq!(m.len(), 5);
        assert_eq!(oracle::brute_force_matching_number(&pet), 5);
        assert!(m.is_matching_of(&pet));
        assert_eq!(min_deficiency(&pet).value(), 0);

        let g = two_triangles_bridged();
        assert_eq!(maximum_matching(&g).len(), 3);
        assert_eq!(oracle::brute_force_matching_number(&g), 3);
    }

    #[test]
    fn blossom_needs_contraction() {
        // odd cycle 0..5 with a pendant path hanging off vertex 4; the
        // greedy start leaves an augmenting path through the blossom
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (4, 5),
                (5, 6),
                (0, 7),
            ],
        )
        .unwrap();
        assert_eq!(matching_number(&g), oracle::brute_force_matching_number(&g));
        assert_eq!(matching_number(&g), 4);
    }

    #[test]
    fn bipartite_examples() {
        let (k33, b) = Graph::complete_bipartite(3, 3);
        assert_eq!(bipartite_maximum_matching(&k33, &b).unwrap().len(), 3);

        let minus_pm = k33.delete_biclique(&[0], &[3]).unwrap();
        let minus_pm = minus_pm.delete_biclique(&[1], &[4]).unwrap();
        let minus_pm = minus_pm.delete_biclique(&[2], &[5]).unwrap();
        assert_eq!(minus_pm.edge_count(), 6);
        assert_eq!(bipartite_maximum_matching(&minus_pm, &b).unwrap().len(), 3);
        assert_eq!(oracle::brute_force_matching_number(&minus_pm), 3);

        let (star, sb) = Graph::complete_bipartite(1, 4);
        assert_eq!(bipartite_maximum_matching(&star, &sb).unwrap().len(), 1);

        let wrong = Bipartition::new(6, &[0, 1, 3], &[2, 4, 5]).unwrap();
        assert!(bipartite_maximum_matching(&k33, &wrong).is_err());
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(min_deficiency(&Graph::complete(4)).value(), 0);
        assert_eq!(min_deficiency(&Graph::empty(3)).value(), 3);
        let g = Graph::complete(1).join(&Graph::empty(2).union(&Graph::complete(3)));
        assert_eq!(g.order(), 6);
        assert_eq!(min_deficiency(&g).value(), 2);
        assert_eq!(oracle::brute_force_matching_number(&g), 2);
    }

    #[test]
    fn k_matching_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(enumerate_k_matchings(&k4, 2).count(), 3);
        let all: Vec<_> = enumerate_k_matchings(&Graph::petersen(), 0).collect();
        assert_eq!(all, [Matching::empty()]);
        assert_eq!(enumerate_k_matchings(&Graph::empty(0), 0).count(), 1);
        assert_eq!(enumerate_k_matchings(&Graph::cycle(6), 1).count(), 6);
        assert_eq!(enumerate_k_matchings(&Graph::cycle(6), 4).count(), 0);
        assert_eq!(enumerate_k_matchings(&Graph::complete(8), 4).count(), 105);
    }

    #[test]
    fn k_matchings_are_lexicographic_and_valid() {
        let g = Graph::petersen();
        let ms: Vec<_> = enumerate_k_matchings(&g, 3).collect();
        assert_eq!(
            ms.len() as u64,
            oracle::brute_force_count_k_matchings(&g, 3)
        );
        for m in &ms {
            assert_eq!(Matching::new(&g, m.edges()).unwrap(), *m);
        }
        assert!(ms.windows(2).all(|w| w[0].edges() < w[1].edges()));
    }

    #[test]
    fn extension_examples() {
        let k4 = Graph::complete(4);
        for m in enumerate_k_matchings(&k4, 1) {
            assert!(extends_to_deficiency(&k4, &m, 0));
        }
        let c5 = Graph::cycle(5);
        let e = Matching::new(&c5, &[(0, 1)]).unwrap();
        assert!(extends_to_deficiency(&c5, &e, 1));
        assert!(!extends_to_deficiency(&c5, &e, 0));
        assert!(extends_to_deficiency(&c5, &e, 3));
        assert!(!extends_to_deficiency(&c5, &e, 5));

        let star = Graph::complete_bipartite(1, 3).0;
        assert!(!extends_to_deficiency(&star, &Matching::empty(), 0));
        assert!(extends_to_deficiency(&k4, &Matching::empty(), 0));

        let foreign = Matching::new(&k4, &[(0, 1)]).unwrap();
        assert!(!extends_to_deficiency(&Graph::empty(4), &foreign, 2));
    }

    #[test]
    fn matching_validation() {
        let g = Graph::path(4);
        assert!(Matching::new(&g, &[(0, 1), (1, 2)]).is_err());
        assert!(Matching::new(&g, &[(0, 2)]).is_err());
        let m = Matching::new(&g, &[(3, 2), (1, 0)]).unwrap();
        assert_eq!(m.edges(), [(0, 1), (2, 3)]);
        assert_eq!(m.deficiency(&g).value(), 0);
        assert!(m.saturates(3));
    }
}
