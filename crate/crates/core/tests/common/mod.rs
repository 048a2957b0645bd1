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

#![allow(dead_code)]

use matchext_core::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(p, q)` with independent edges.
pub fn random_graph(rng: &mut impl Rng, p: usize, q: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..p {
        for u in 0..v {
            if rng.gen_bool(q) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(p, &edges).unwrap()
}

/// Graph on `p` vertices from the low `C(p, 2)` bits of `mask`.
pub fn graph_from_bits(p: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..p {
        for u in 0..v {
            if mask.get(i).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(p, &edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, p: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..p).collect();
    perm.shuffle(rng);
    perm
}
