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

use std::collections::{BTreeMap, VecDeque};

use super::{pair_index, MatchingFamily};
use crate::graph::VertexSet;

/// Which pairs of graphs matched one particular vertex. Nodes are graph
/// indices; adjacency is a bitmask per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metagraph {
    adj: Vec<u32>,
}

impl Metagraph {
    pub fn new(num_graphs: usize) -> Self {
        Metagraph {
            adj: vec![0; num_graphs],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(num_graphs: usize, edges: I) -> Self {
        let mut m = Metagraph::new(num_graphs);
        for (i, j) in edges {
            m.add_edge(i, j);
        }
        m
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "metagraph has no self-loops");
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn num_graphs(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << j) != 0
    }

    /// Neighbors of `i` as a bitmask.
    pub fn neighbor_mask(&self, i: usize) -> u32 {
        self.adj[i]
    }

    /// Bitmask of the nodes reachable from `start`.
    pub fn component(&self, start: usize) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[i];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let k = self.adj.len();
        k <= 1 || self.component(0).count_ones() as usize == k
    }

    /// Shortest path from `i` to `j`, lexicographically smallest among the
    /// shortest ones. BFS over ascending neighbors with the parent fixed at
    /// first discovery yields exactly that path.
    pub fn shortest_path(&self, i: usize, j: usize) -> Option<Vec<usize>> {
        let k = self.adj.len();
        let mut parent = vec![usize::MAX; k];
        parent[i] = i;
        let mut queue = VecDeque::from([i]);
        while let Some(x) = queue.pop_front() {
            if x == j {
                break;
            }
            let mut nb = self.adj[x];
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[j] == usize::MAX {
            return None;
        }
        let mut path = vec![j];
        while *path.last().unwrap() != i {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        Some(path)
    }

    /// Edge set as a bitmask over [`pair_index`].
    pub fn pair_mask(&self) -> u128 {
        let k = self.adj.len();
        let mut mask = 0u128;
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(i, j) {
                    mask |= 1 << pair_index(i, j, k);
                }
            }
        }
        mask
    }
}

/// Metagraph of `v` (in `G1` labels): edge `{i, j}` iff `mu_ij` matched `v`.
pub fn build_metagraph(v: usize, fam: &MatchingFamily) -> Metagraph {
    let k = fam.num_graphs();
    let mut m = Metagraph::new(k);
    for (i, j) in fam.pairs() {
        if fam.anchored(i, j).contains(v) {
            m.add_edge(i, j);
        }
    }
    m
}

/// Good vertices have a connected metagraph. For each bad vertex the
/// component holding `G1` is recorded; it and its complement are the two
/// sides of a cut no metagraph edge crosses.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexClass {
    pub good: VertexSet,
    pub bad: VertexSet,
    num_graphs: usize,
    first_side: BTreeMap<usize, u32>,
}

impl VertexClass {
    /// `(side containing G1, the rest)` for a bad vertex.
    pub fn gamma(&self, v: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let mask = *self.first_side.get(&v)?;
        let (a, b): (Vec<usize>, Vec<usize>) =
            (0..self.num_graphs).partition(|&i| mask & (1 << i) != 0);
        Some((a, b))
    }

    pub fn is_good(&self, v: usize) -> bool {
        self.good.contains(v)
    }
}

pub fn classify_good_bad(fam: &MatchingFamily) -> VertexClass {
    let n = fam.n();
    let mut good = VertexSet::empty(n);
    let mut bad = VertexSet::empty(n);
    let mut first_side = BTreeMap::new();
    for v in 0..n {
        let mg = build_metagraph(v, fam);
        if mg.is_connected() {
            good.insert(v);
        } else {
            bad.insert(v);
            first_side.insert(v, mg.component(0));
        }
    }
    VertexClass {
        good,
        bad,
        num_graphs: fam.num_graphs(),
        first_side,
    }
}

/// Image of `v` (in `G1` labels) in graph `j`, reached from graph `i` along
/// the lexicographic shortest path of `v`'s metagraph. `None` when the
/// metagraph separates `i` from `j`.
pub fn compose_matching_along_path(
    v: usize,
    i: usize,
    j: usize,
    fam: &MatchingFamily,
) -> Option<usize> {
    let path = build_metagraph(v, fam).shortest_path(i, j)?;
    compose_along(v, &path, fam)
}

/// Follows the matchings along an explicit node sequence, starting from
/// `v`'s copy in graph `path[0]`.
pub fn compose_along(v: usize, path: &[usize], fam: &MatchingFamily) -> Option<usize> {
    let mut x = fam.anchor(*path.first()?).apply(v);
    for w in path.windows(2) {
        x = fam.get(w[0], w[1]).get(x)?;
    }
    Some(x)
}
