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

//! Edmonds' blossom algorithm on bit-row adjacency.
//!
//! Each augmenting-path search grows an alternating forest from one free
//! root; an edge closing an odd cycle contracts the cycle by pointing every
//! vertex of it at a common base. The search runs on the subgraph induced by
//! an `active` vertex mask so callers can delete vertices without relabeling.

use crate::graph::{bits, Graph, MAX_ORDER};

pub(crate) const NONE: usize = usize::MAX;

struct Search<'g> {
    g: &'g Graph,
    active: u64,
    mate: [usize; MAX_ORDER],
    parent: [usize; MAX_ORDER],
    base: [usize; MAX_ORDER],
    queue: [usize; MAX_ORDER],
}

impl Search<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, blossom: &mut u64) {
        while self.base[v] != b {
            *blossom |= 1 << self.base[v] | 1 << self.base[self.mate[v]];
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`, or `NONE`.
    fn find_path(&mut self, root: usize) -> usize {
        for v in bits(self.active) {
            self.parent[v] = NONE;
            self.base[v] = v;
        }
        let mut used = 1u64 << root;
        self.queue[0] = root;
        let (mut head, mut tail) = (0, 1);
        while head < tail {
            let v = self.queue[head];
            head += 1;
            for to in bits(self.g.neighbors(v) & self.active) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    let mut blossom = 0u64;
                    self.mark_path(v, cur, to, &mut blossom);
                    self.mark_path(to, cur, v, &mut blossom);
                    for i in bits(self.active) {
                        if blossom >> self.base[i] & 1 == 1 {
                            self.base[i] = cur;
                            if used >> i & 1 == 0 {
                                used |= 1 << i;
                                self.queue[tail] = i;
                                tail += 1;
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    used |= 1 << next;
                    self.queue[tail] = next;
                    tail += 1;
                }
            }
        }
        NONE
    }
}

/// Mate array of a maximum matching of `g[active]`; entries outside
/// `active` and unmatched vertices hold `NONE`.
pub(crate) fn maximum_mates(g: &Graph, active: u64) -> [usize; MAX_ORDER] {
    let active = active & g.vertex_mask();
    let mut s = Search {
        g,
        active,
        mate: [NONE; MAX_ORDER],
        parent: [NONE; MAX_ORDER],
        base: [0; MAX_ORDER],
        queue: [0; MAX_ORDER],
    };
    // greedy start
    let mut free = active;
    for v in bits(active) {
        if free >> v & 1 == 0 {
            continue;
        }
        let candidates = g.neighbors(v) & free;
        if candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            s.mate[v] = u;
            s.mate[u] = v;
            free &= !(1 << u | 1 << v);
        }
    }
    for root in bits(free) {
        if s.mate[root] != NONE {
            continue;
        }
        let mut w = s.find_path(root);
        while w != NONE {
            let pv = s.parent[w];
            let next = s.mate[pv];
            s.mate[w] = pv;
            s.mate[pv] = w;
            w = next;
        }
    }
    s.mate
}

/// Size of a maximum matching of `g[active]`.
pub(crate) fn matching_number_within(g: &Graph, active: u64) -> usize {
    let mate = maximum_mates(g, active);
    bits(active & g.vertex_mask())
        .filter(|&v| mate[v] != NONE)
        .count()
        / 2
}
