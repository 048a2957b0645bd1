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

//! Exhaustive reference implementations. Exponential; for tests only.

use crate::graph::Graph;

/// Matching number by trying, for the lowest remaining vertex, to leave it
/// unmatched or to match it with each remaining neighbour.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, left: u64) -> usize {
        if left.count_ones() < 2 {
            return 0;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let mut best = go(g, rest);
        let mut nbrs = g.neighbors(v) & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let rest_u = rest & !(1 << u);
            if best > rest_u.count_ones() as usize / 2 {
                break;
            }
            best = best.max(1 + go(g, rest_u));
        }
        best
    }
    go(g, g.vertex_mask())
}

/// Number of `k`-element edge subsets that are matchings.
pub fn brute_force_count_k_matchings(g: &Graph, k: usize) -> u64 {
    fn go(edges: &[(usize, usize)], k: usize, used: u64) -> u64 {
        if k == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                total += go(&edges[i + 1..], k - 1, used | 1 << u | 1 << v);
            }
        }
        total
    }
    let edges: alloc::vec::Vec<_> = g.edges().collect();
    go(&edges, k, 0)
}
