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

//! Hopcroft–Karp: phases of breadth-first layering from the free `X`
//! vertices followed by depth-first augmentation along the layers.

use super::blossom::NONE;
use crate::graph::{bits, Bipartition, Graph, MAX_ORDER};

struct Layers<'g> {
    g: &'g Graph,
    y: u64,
    mate: [usize; MAX_ORDER],
    dist: [usize; MAX_ORDER],
}

impl Layers<'_> {
    fn bfs(&mut self, x: u64) -> bool {
        let mut queue = [0usize; MAX_ORDER];
        let (mut head, mut tail) = (0, 0);
        for u in bits(x) {
            if self.mate[u] == NONE {
                self.dist[u] = 0;
                queue[tail] = u;
                tail += 1;
            } else {
                self.dist[u] = NONE;
            }
        }
        let mut found = false;
        while head < tail {
            let u = queue[head];
            head += 1;
            for v in bits(self.g.neighbors(u) & self.y) {
                let w = self.mate[v];
                if w == NONE {
                    found = true;
                } else if self.dist[w] == NONE {
                    self.dist[w] = self.dist[u] + 1;
                    queue[tail] = w;
                    tail += 1;
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        for v in bits(self.g.neighbors(u) & self.y) {
            let w = self.mate[v];
            if w == NONE || (self.dist[w] == self.dist[u] + 1 && self.dfs(w)) {
                self.mate[u] = v;
                self.mate[v] = u;
                return true;
            }
        }
        self.dist[u] = NONE;
        false
    }
}

/// Mate array of a maximum matching; `b` must already be validated.
pub(crate) fn hopcroft_karp_mates(g: &Graph, b: &Bipartition) -> [usize; MAX_ORDER] {
    let mut l = Layers {
        g,
        y: b.y_mask(),
        mate: [NONE; MAX_ORDER],
        dist: [NONE; MAX_ORDER],
    };
    while l.bfs(b.x_mask()) {
        for u in bits(b.x_mask()) {
            if l.mate[u] == NONE {
                l.dfs(u);
            }
        }
    }
    l.mate
}
