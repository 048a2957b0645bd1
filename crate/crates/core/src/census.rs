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

//! Small-graph generators: labeled edge-subset enumeration, one-vertex
//! extension, isomorphism-class enumeration and balanced bipartite graphs.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{full_mask, Bipartition, Graph};
use crate::graph6;
use crate::iso::canonical_form;

/// Largest order for which [`labeled_graphs`] is offered.
pub const MAX_LABELED_ORDER: usize = 8;

/// All `2^C(p,2)` labeled graphs on `0..p`, ordered by edge bit mask over
/// the pairs `(0,1), (0,2), (1,2), (0,3), …`.
///
/// # Panics
/// If `p > MAX_LABELED_ORDER`.
pub fn labeled_graphs(p: usize) -> impl Iterator<Item = Graph> {
    assert!(
        p <= MAX_LABELED_ORDER,
        "labeled enumeration is limited to order {MAX_LABELED_ORDER}"
    );
    let pairs: Vec<(usize, usize)> = (1..p).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut rows = alloc::vec![0u64; p];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        Graph::from_rows_unchecked(rows)
    })
}

/// The `2^p` graphs obtained from `h` by adding vertex `p` joined to each
/// subset of `V(h)`.
pub fn vertex_extensions(h: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let p = h.order();
    (0u64..=full_mask(p)).map(move |nbrs| {
        let mut rows: Vec<u64> = h.rows().to_vec();
        for (v, row) in rows.iter_mut().enumerate() {
            *row |= (nbrs >> v & 1) << p;
        }
        rows.push(nbrs);
        Graph::from_rows_unchecked(rows)
    })
}

/// Canonical forms of the one-vertex extensions of `h`, deduplicated.
pub fn canonical_extensions(h: &Graph) -> BTreeSet<Graph> {
    vertex_extensions(h).map(|g| canonical_form(&g)).collect()
}

/// One canonical representative per isomorphism class of graphs of order
/// `p`, sorted by graph6 string.
pub fn graphs_up_to_iso(p: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = alloc::vec![Graph::empty(0)];
    for _ in 0..p {
        let mut next = BTreeSet::new();
        for h in &level {
            next.extend(canonical_extensions(h));
        }
        level = next.into_iter().collect();
    }
    sort_by_graph6(level)
}

/// Sorts graphs by their graph6 strings.
pub fn sort_by_graph6(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> = graphs
        .into_iter()
        .map(|g| (graph6::encode(&g), g))
        .collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Every labeled graph whose edges lie in `X × Y` with `X = 0..n`,
/// `Y = n..2n`, ordered by edge bit mask.
///
/// # Panics
/// If `n > 4`.
pub fn balanced_bipartite_labeled(n: usize) -> impl Iterator<Item = (Graph, Bipartition)> {
    assert!(n <= 4, "bipartite labeled enumeration is limited to n = 4");
    let (_, b) = Graph::complete_bipartite(n, n);
    (0u64..1 << (n * n)).map(move |mask| {
        let mut rows = alloc::vec![0u64; 2 * n];
        for x in 0..n {
            for y in 0..n {
                if mask >> (x * n + y) & 1 == 1 {
                    rows[x] |= 1 << (n + y);
                    rows[n + y] |= 1 << x;
                }
            }
        }
        (Graph::from_rows_unchecked(rows), b)
    })
}
