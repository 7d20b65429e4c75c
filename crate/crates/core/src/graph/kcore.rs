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

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Graph, VertexSet};

/// Result of peeling, with the removal sequence kept for diagnostics.
#[derive(Debug, Clone)]
pub struct CoreTrace {
    pub core: VertexSet,
    /// `(vertex, degree at removal)` in removal order.
    pub removed: Vec<(usize, usize)>,
}

/// The k-core of `g`: the largest vertex set whose induced subgraph has
/// minimum degree at least `k`. Empty when no such nonempty set exists.
pub fn k_core(g: &Graph, k: usize) -> VertexSet {
    k_core_with_trace(g, k).core
}

/// Peels vertices of degree `< k`, always removing the smallest-index vertex
/// among those of current minimum degree.
pub fn k_core_with_trace(g: &Graph, k: usize) -> CoreTrace {
    assert!(k >= 1, "k must be positive");
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..n)
        .filter(|&v| deg[v] < k)
        .map(|v| Reverse((deg[v], v)))
        .collect();
    let mut removed = Vec::new();

    while let Some(Reverse((d, v))) = heap.pop() {
        // stale entry
        if !alive[v] || d != deg[v] {
            continue;
        }
        alive[v] = false;
        removed.push((v, d));
        for &u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] < k {
                    heap.push(Reverse((deg[u], u)));
                }
            }
        }
    }

    CoreTrace {
        core: VertexSet::from_mask(alive),
        removed,
    }
}
