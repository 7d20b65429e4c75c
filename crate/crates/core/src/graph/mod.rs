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

//! Undirected simple graphs and the matched-graph algebra built on them.
//!
//! Graphs are immutable compressed adjacency lists: neighbor lists are sorted,
//! so iteration is O(degree) and edge lookup is a binary search over one list.
//! Derived graphs (intersection, union, difference, induced) keep the vertex
//! labels of the graph they were computed from and carry their vertex set
//! alongside in a [`Subgraph`].

mod algebra;
pub mod io;
mod kcore;
mod matching;

pub use algebra::{difference_graph, intersection_graph, neighborhood_majority, union_graph};
pub use kcore::{k_core, k_core_with_trace, CoreTrace};
pub use matching::{PartialMatching, Permutation};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    adj: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            offsets: vec![0; n + 1],
            adj: Vec::new(),
        }
    }

    /// Builds a graph from unordered pairs. Duplicates (in either orientation)
    /// collapse to one edge; self-loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u, v));
            pairs.push((v, u));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self::from_sorted_arcs(n, &pairs))
    }

    /// `arcs` must be sorted, deduplicated and symmetric.
    fn from_sorted_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in arcs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let adj = arcs.iter().map(|&(_, v)| v).collect();
        Graph { n, offsets, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Subgraph induced on `set`, keeping this graph's labels.
    pub fn induced(&self, set: &VertexSet) -> Subgraph {
        let edges = self
            .edges()
            .filter(|&(u, v)| set.contains(u) && set.contains(v));
        Subgraph {
            vertices: set.clone(),
            graph: Graph::from_edges(self.n, edges).expect("edges come from a valid graph"),
        }
    }

    /// Graph with every vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &Permutation) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation size must match graph");
        Graph::from_edges(
            self.n,
            self.edges().map(|(u, v)| (perm.apply(u), perm.apply(v))),
        )
        .expect("relabeling preserves validity")
    }
}

/// A subset of `0..universe`, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    mask: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            mask: vec![false; universe],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            mask: vec![true; universe],
            len: universe,
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(
        universe: usize,
        members: I,
    ) -> Result<Self> {
        let mut set = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let len = mask.iter().filter(|&&b| b).count();
        VertexSet { mask, len }
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        if self.mask[v] {
            return false;
        }
        self.mask[v] = true;
        self.len += 1;
        true
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if !self.mask[v] {
            return false;
        }
        self.mask[v] = false;
        self.len -= 1;
        true
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.then_some(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self::from_mask(
            self.mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a && b)
                .collect(),
        )
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        Self::from_mask(
            self.mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a || b)
                .collect(),
        )
    }

    pub fn complement(&self) -> VertexSet {
        Self::from_mask(self.mask.iter().map(|&a| !a).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn as_mask(&self) -> &[bool] {
        &self.mask
    }
}

/// A graph together with the vertex set it is defined on. Vertices outside
/// `vertices` are present in `graph` only as isolated labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: VertexSet,
    pub graph: Graph,
}

impl Subgraph {
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges()
    }

    pub fn edge_set(&self) -> std::collections::BTreeSet<(usize, usize)> {
        self.graph.edges().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric_and_deduplicated() {
        let g = Graph::from_edges(4, [(0, 1), (1, 0), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.degree(3), 0);
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn rejects_self_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn relabel_moves_edges() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        let h = g.relabel(&p);
        assert!(h.has_edge(2, 0));
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from_members(5, [0, 1, 2]).unwrap();
        let b = VertexSet::from_members(5, [2, 3]).unwrap();
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.complement().to_vec(), vec![3, 4]);
        assert!(VertexSet::from_members(2, [2]).is_err());
    }
}
