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

//! Isomorphism testing and canonical labeling for small graphs.
//!
//! [`are_isomorphic`] is a plain backtracking search over degree-compatible
//! vertex maps. [`canonical_form`] refines an ordered vertex partition by
//! neighbour counts, individualizes vertices of the first non-trivial cell
//! in turn, and keeps the lexicographically largest relabeled adjacency
//! matrix over all leaves of that search. No automorphism pruning is done,
//! so highly symmetric graphs cost up to `p!` leaves.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bits, Graph};

/// Whether `g` and `h` are isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A map `φ` with `uv ∈ E(g) ⇔ φ(u)φ(v) ∈ E(h)`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let p = g.order();
    if p != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let dg = g.degrees();
    let dh = h.degrees();
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    // high degrees first
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(dg[v]));

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        h: &Graph,
        dg: &[usize],
        dh: &[usize],
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        taken: u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        for w in bits(h.vertex_mask() & !taken) {
            if dh[w] != dg[u] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&x| g.has_edge(u, x) == h.has_edge(w, map[x]));
            if consistent {
                map[u] = w;
                if extend(g, h, dg, dh, order, depth + 1, map, taken | 1 << w) {
                    return true;
                }
            }
        }
        false
    }

    let mut map = vec![usize::MAX; p];
    extend(g, h, &dg, &dh, &order, 0, &mut map, 0).then_some(map)
}

/// Refines `cells` until every cell is equitable with respect to every other.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut i = 0;
            while i < cells.len() {
                if cells[i].len() > 1 {
                    let count = |v: usize| (g.neighbors(v) & splitter).count_ones();
                    let first = count(cells[i][0]);
                    if cells[i].iter().any(|&v| count(v) != first) {
                        let mut cell = core::mem::take(&mut cells[i]);
                        cell.sort_by_key(|&v| (count(v), v));
                        let mut parts: Vec<Vec<usize>> = Vec::new();
                        let mut last = None;
                        for v in cell {
                            let c = count(v);
                            if last != Some(c) {
                                parts.push(Vec::new());
                                last = Some(c);
                            }
                            parts.last_mut().unwrap().push(v);
                        }
                        let n = parts.len();
                        cells.splice(i..=i, parts);
                        i += n;
                        changed = true;
                        continue;
                    }
                }
                i += 1;
            }
            w += 1;
        }
    }
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    refine(g, &mut cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut perm = vec![0; g.order()];
            for (i, c) in cells.iter().enumerate() {
                perm[c[0]] = i;
            }
            let code = g.permute(&perm).rows().to_vec();
            if best.as_ref().is_none_or(|b| code > *b) {
                *best = Some(code);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = cells.clone();
                let rest: Vec<usize> = cells[i].iter().copied().filter(|&u| u != v).collect();
                next.splice(i..=i, [vec![v], rest]);
                search(g, next, best);
            }
        }
    }
}

/// A relabeling of `g` that is identical for all graphs isomorphic to `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    if g.order() == 0 {
        return g.clone();
    }
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    Graph::from_rows_unchecked(best.expect("search reaches at least one leaf"))
}
