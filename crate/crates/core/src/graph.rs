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

//! Simple undirected graphs on the dense vertex set `0..p`.
//!
//! Adjacency is stored as one `u64` bit row per vertex, which caps the order
//! at [`MAX_ORDER`]. Every operation that "modifies" a graph returns a new
//! value; graphs are immutable once built and can be shared freely between
//! threads.

use alloc::vec::Vec;
use core::fmt;

use crate::error::CoreError;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Iterates the set bits of `mask` from least to most significant.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Bit mask with the low `p` bits set.
#[inline]
pub fn full_mask(p: usize) -> u64 {
    if p >= 64 {
        u64::MAX
    } else {
        (1u64 << p) - 1
    }
}

pub(crate) fn mask_of(p: usize, vertices: &[usize]) -> Result<u64, CoreError> {
    let mut m = 0u64;
    for &v in vertices {
        if v >= p {
            return Err(CoreError::VertexOutOfRange {
                vertex: v,
                order: p,
            });
        }
        m |= 1 << v;
    }
    Ok(m)
}

/// Simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph `p·K₁`.
    ///
    /// # Panics
    /// If `p > MAX_ORDER`.
    pub fn empty(p: usize) -> Self {
        assert!(p <= MAX_ORDER, "order {p} exceeds {MAX_ORDER}");
        Graph {
            order: p,
            rows: alloc::vec![0; p],
        }
    }

    /// Builds a graph from rows without validation; rows must be symmetric,
    /// loop free and confined to `0..p`.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ORDER);
        Graph {
            order: rows.len(),
            rows,
        }
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, CoreError> {
        let p = rows.len();
        if p > MAX_ORDER {
            return Err(CoreError::OrderTooLarge(p));
        }
        let full = full_mask(p);
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(CoreError::VertexOutOfRange { vertex, order: p });
            }
            if row >> u & 1 == 1 {
                return Err(CoreError::Loop(u));
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(CoreError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { order: p, rows })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Result<Self, CoreError> {
        if p > MAX_ORDER {
            return Err(CoreError::OrderTooLarge(p));
        }
        let mut rows = alloc::vec![0u64; p];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= p {
                    return Err(CoreError::VertexOutOfRange {
                        vertex: w,
                        order: p,
                    });
                }
            }
            if u == v {
                return Err(CoreError::Loop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { order: p, rows })
    }

    /// Complete graph `K_p`.
    pub fn complete(p: usize) -> Self {
        assert!(p <= MAX_ORDER, "order {p} exceeds {MAX_ORDER}");
        let full = full_mask(p);
        Graph {
            order: p,
            rows: (0..p).map(|v| full & !(1 << v)).collect(),
        }
    }

    /// Complete bipartite graph `K_{a,b}` with `X = 0..a`, `Y = a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> (Self, Bipartition) {
        let p = a + b;
        assert!(p <= MAX_ORDER, "order {p} exceeds {MAX_ORDER}");
        let x = full_mask(a);
        let y = full_mask(p) & !x;
        let rows = (0..p).map(|v| if v < a { y } else { x }).collect();
        (Graph { order: p, rows }, Bipartition { order: p, x, y })
    }

    /// Cycle `C_p` on `0..p` (for `p ≥ 3`).
    pub fn cycle(p: usize) -> Self {
        assert!(p >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..p).map(|i| (i, (i + 1) % p)).collect();
        Self::from_edges(p, &edges).expect("valid cycle")
    }

    /// Path `P_p` on `0..p`.
    pub fn path(p: usize) -> Self {
        let edges: Vec<_> = (1..p).map(|i| (i - 1, i)).collect();
        Self::from_edges(p, &edges).expect("valid path")
    }

    /// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("valid petersen graph")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order)
    }

    /// Adjacency row of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| bits(self.rows[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let full = self.vertex_mask();
        (0..self.order).flat_map(move |u| {
            let missing = !self.rows[u] & full & !full_mask(u + 1);
            bits(missing).map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order).map(|v| self.degree(v)).min()
    }

    /// Complement `Ḡ`.
    pub fn complement(&self) -> Self {
        let full = self.vertex_mask();
        let rows = (0..self.order)
            .map(|v| !self.rows[v] & full & !(1 << v))
            .collect();
        Graph {
            order: self.order,
            rows,
        }
    }

    /// Disjoint union; vertices of `h` follow those of `self`.
    pub fn union(&self, h: &Graph) -> Self {
        let p = self.order + h.order;
        assert!(p <= MAX_ORDER, "order {p} exceeds {MAX_ORDER}");
        let shift = self.order;
        let mut rows = self.rows.clone();
        rows.extend(h.rows.iter().map(|r| r << shift));
        Graph { order: p, rows }
    }

    /// Join `G ∨ H`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Self {
        let shift = self.order;
        let mut g = self.union(h);
        let left = full_mask(self.order);
        let right = full_mask(g.order) & !left;
        for v in 0..g.order {
            g.rows[v] |= if v < shift { right } else { left };
        }
        g
    }

    /// Returns `G + uv`. Fails on loops and existing edges.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, CoreError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(CoreError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(CoreError::EdgeExists(u, v));
        }
        Ok(self.with_edge(u, v))
    }

    /// `G + uv` without checks.
    #[inline]
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.rows[u] |= 1 << v;
        g.rows[v] |= 1 << u;
        g
    }

    /// Removes every edge with one end in `s` and the other in `t`.
    pub fn delete_biclique(&self, s: &[usize], t: &[usize]) -> Result<Self, CoreError> {
        let sm = mask_of(self.order, s)?;
        let tm = mask_of(self.order, t)?;
        if sm & tm != 0 {
            return Err(CoreError::Overlap);
        }
        let mut g = self.clone();
        for v in 0..g.order {
            if sm >> v & 1 == 1 {
                g.rows[v] &= !tm;
            } else if tm >> v & 1 == 1 {
                g.rows[v] &= !sm;
            }
        }
        Ok(g)
    }

    /// Induced subgraph `G − S`, remaining vertices relabeled in order.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<Self, CoreError> {
        let sm = mask_of(self.order, s)?;
        Ok(self.induced(self.vertex_mask() & !sm))
    }

    /// Subgraph induced by `keep`, vertices relabeled in increasing order.
    pub fn induced(&self, keep: u64) -> Self {
        let kept: Vec<usize> = bits(keep & self.vertex_mask()).collect();
        let rows = kept
            .iter()
            .map(|&u| {
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.rows[u] >> w & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph {
            order: kept.len(),
            rows,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        let mut rows = alloc::vec![0u64; self.order];
        for u in 0..self.order {
            let mut r = 0u64;
            for w in bits(self.rows[u]) {
                r |= 1 << perm[w];
            }
            rows[perm[u]] = r;
        }
        Graph {
            order: self.order,
            rows,
        }
    }

    /// Vertices reachable from `v` within `active`.
    pub fn component_of(&self, v: usize, active: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.rows[u];
            }
            next &= active & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// The empty graph and `K₁` count as connected.
    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.component_of(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut left = self.vertex_mask();
        let mut count = 0;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            left &= !self.component_of(v, left);
            count += 1;
        }
        count
    }

    /// A proper 2-colouring, if one exists. In each component the colour
    /// class containing the smallest vertex goes to `X`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let full = self.vertex_mask();
        let (mut x, mut y) = (0u64, 0u64);
        let mut left = full;
        while left != 0 {
            let root = left.trailing_zeros() as usize;
            let (mut side_a, mut side_b) = (1u64 << root, 0u64);
            let mut frontier = side_a;
            let mut on_a = true;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.rows[u];
                }
                let (same, other) = if on_a {
                    (side_a, side_b)
                } else {
                    (side_b, side_a)
                };
                if next & same != 0 {
                    return None;
                }
                next &= !other;
                if on_a {
                    side_b |= next;
                } else {
                    side_a |= next;
                }
                frontier = next;
                on_a = !on_a;
            }
            x |= side_a;
            y |= side_b;
            left &= !(side_a | side_b);
        }
        Some(Bipartition {
            order: self.order,
            x,
            y,
        })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), CoreError> {
        if v < self.order {
            Ok(())
        } else {
            Err(CoreError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }
}

/// Partition `(X, Y)` of the vertex set of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bipartition {
    order: usize,
    x: u64,
    y: u64,
}

impl Bipartition {
    /// Checks that `x` and `y` partition `0..p`.
    pub fn new(p: usize, x: &[usize], y: &[usize]) -> Result<Self, CoreError> {
        let xm = mask_of(p, x)?;
        let ym = mask_of(p, y)?;
        Self::from_masks(p, xm, ym)
    }

    pub fn from_masks(p: usize, x: u64, y: u64) -> Result<Self, CoreError> {
        if p > MAX_ORDER {
            return Err(CoreError::OrderTooLarge(p));
        }
        if x & y != 0 {
            return Err(CoreError::InvalidBipartition("parts overlap"));
        }
        if x | y != full_mask(p) {
            return Err(CoreError::InvalidBipartition(
                "parts do not cover the vertex set",
            ));
        }
        Ok(Bipartition { order: p, x, y })
    }

    /// Checks that every edge of `g` crosses the partition.
    pub fn validate(&self, g: &Graph) -> Result<(), CoreError> {
        if g.order() != self.order {
            return Err(CoreError::InvalidBipartition("order mismatch"));
        }
        for v in bits(self.x) {
            if g.neighbors(v) & self.x != 0 {
                return Err(CoreError::InvalidBipartition("edge inside X"));
            }
        }
        for v in bits(self.y) {
            if g.neighbors(v) & self.y != 0 {
                return Err(CoreError::InvalidBipartition("edge inside Y"));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn x_mask(&self) -> u64 {
        self.x
    }

    #[inline]
    pub fn y_mask(&self) -> u64 {
        self.y
    }

    pub fn x(&self) -> Vec<usize> {
        bits(self.x).collect()
    }

    pub fn y(&self) -> Vec<usize> {
        bits(self.y).collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.x.count_ones() == self.y.count_ones()
    }

    /// Pairs `(x, y)` with `x ∈ X`, `y ∈ Y` that are not edges of `g`.
    pub fn cross_non_edges<'a>(
        &'a self,
        g: &'a Graph,
    ) -> impl Iterator<Item = (usize, usize)> + 'a {
        bits(self.x).flat_map(move |u| bits(self.y & !g.neighbors(u)).map(move |v| (u, v)))
    }
}
