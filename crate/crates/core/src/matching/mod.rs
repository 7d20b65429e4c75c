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

//! k-core matchings between correlated graphs, and what they say per vertex.
//!
//! Graph indices here are 0-based: graph `0` is `G1`. Anything that needs to
//! talk about "the same vertex" across several graphs does so in `G1` labels,
//! mapping into graph `i` through the ground-truth `pi_star[i]`.

mod exact;
mod family;
mod metagraph;

pub use exact::{
    degree_lemma_check, exact_matching_estimator, exact_matching_from_family, DegreeLemmaReport,
    ExactMatchOutcome,
};
pub use family::{all_pairwise_matchings, pair_index, MatchMode, MatchingFamily};
pub use metagraph::{
    build_metagraph, classify_good_bad, compose_along, compose_matching_along_path, Metagraph,
    VertexClass,
};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{k_core, Graph, PartialMatching, Permutation, VertexSet};

/// Largest `n` for which [`kcore_matching_bruteforce`] will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 9;

/// Exhaustive maximal k-core matching: over all `n!` permutations, the one
/// whose intersection graph has the largest k-core, restricted to that core.
/// Ties go to the lexicographically smallest permutation.
pub fn kcore_matching_bruteforce(g: &Graph, h: &Graph, k: usize) -> Result<PartialMatching> {
    let n = g.n();
    if h.n() != n {
        return Err(Error::MatchingShape(format!(
            "graphs on {n} and {} vertices",
            h.n()
        )));
    }
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLargeForBruteForce {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best: Option<(usize, Vec<usize>, VertexSet)> = None;
    // itertools yields permutations of a sorted input in lexicographic order
    for image in (0..n).permutations(n) {
        let kept = edges
            .iter()
            .copied()
            .filter(|&(u, v)| h.has_edge(image[u], image[v]));
        let core = k_core(&Graph::from_edges(n, kept)?, k);
        if best.as_ref().is_none_or(|b| core.len() > b.0) {
            best = Some((core.len(), image, core));
        }
    }
    Ok(match best {
        Some((size, image, core)) if size > 0 => Permutation::new(image)?.restrict(&core),
        _ => PartialMatching::empty(n, n),
    })
}

/// The ground-truth permutation restricted to the k-core of the intersection
/// graph it induces.
pub fn kcore_matching_seeded(
    g: &Graph,
    h: &Graph,
    k: usize,
    pi_true: &Permutation,
) -> Result<PartialMatching> {
    let n = g.n();
    if h.n() != n || pi_true.len() != n {
        return Err(Error::MatchingShape(format!(
            "graphs on {n} and {} vertices with a permutation of {}",
            h.n(),
            pi_true.len()
        )));
    }
    let kept = g
        .edges()
        .filter(|&(u, v)| h.has_edge(pi_true.apply(u), pi_true.apply(v)));
    let core = k_core(&Graph::from_edges(n, kept)?, k);
    Ok(pi_true.restrict(&core))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn brute_force_triangle_is_identity() {
        let t = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let mu = kcore_matching_bruteforce(&t, &t, 2).unwrap();
        assert_eq!(mu, Permutation::identity(3).restrict(&VertexSet::full(3)));
    }

    #[test]
    fn brute_force_single_edge() {
        let e = graph(2, &[(0, 1)]);
        let mu = kcore_matching_bruteforce(&e, &e, 1).unwrap();
        assert_eq!(mu.pairs().collect::<Vec<_>>(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn brute_force_empty_and_guard() {
        let mu = kcore_matching_bruteforce(&Graph::empty(4), &graph(4, &[(0, 1)]), 1).unwrap();
        assert!(mu.is_empty());
        let big = Graph::empty(10);
        assert!(matches!(
            kcore_matching_bruteforce(&big, &big, 1),
            Err(Error::TooLargeForBruteForce { n: 10, limit: 9 })
        ));
    }

    #[test]
    fn brute_force_finds_hidden_relabeling() {
        // h is g relabeled by a fixed permutation; the core is the triangle
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let pi = Permutation::new(vec![4, 2, 0, 1, 3]).unwrap();
        let h = g.relabel(&pi);
        let mu = kcore_matching_bruteforce(&g, &h, 2).unwrap();
        assert_eq!(mu.domain().to_vec(), vec![0, 1, 2]);
        let core_edges = intersect_edges(&g, &h, &mu);
        assert_eq!(core_edges, 3);
    }

    fn intersect_edges(g: &Graph, h: &Graph, mu: &PartialMatching) -> usize {
        crate::graph::intersection_graph(g, h, mu)
            .unwrap()
            .graph
            .edge_count()
    }

    #[test]
    fn seeded_examples() {
        assert!(kcore_matching_seeded(
            &Graph::empty(5),
            &Graph::empty(5),
            1,
            &Permutation::identity(5)
        )
        .unwrap()
        .is_empty());

        let k5 = graph(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        );
        let mu = kcore_matching_seeded(&k5, &k5, 4, &Permutation::identity(5)).unwrap();
        assert_eq!(mu.to_permutation(), Some(Permutation::identity(5)));

        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let pi = Permutation::new(vec![3, 1, 0, 2]).unwrap();
        let mu = kcore_matching_seeded(&g, &g.relabel(&pi), 2, &pi).unwrap();
        assert_eq!(mu.domain().to_vec(), vec![0, 1, 2]);
        assert!(mu.pairs().all(|(v, w)| pi.apply(v) == w));
    }
}
