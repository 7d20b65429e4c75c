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

use std::collections::BTreeMap;

use super::{vote, LabelEstimate, Provenance};
use crate::error::Result;
use crate::gen::CorrelatedInstance;
use crate::graph::{
    difference_graph, neighborhood_majority, union_graph, Graph, PartialMatching, Subgraph,
    VertexSet,
};
use crate::matching::{build_metagraph, compose_along, MatchingFamily, VertexClass};

#[derive(Debug, Clone, PartialEq)]
pub struct GoodStep {
    /// Good vertices carry their new label; every other vertex keeps the
    /// incoming one.
    pub estimate: LabelEstimate,
    pub disagreements: Option<usize>,
}

/// Union of all graphs on `candidate`, pulled back to `G1` labels. Graph `c`
/// is reached from `G1` along `routes[c - 1]`; vertices where some route
/// is undefined are dropped from the vertex set.
fn pulled_back_union(
    inst: &CorrelatedInstance,
    fam: &MatchingFamily,
    routes: &[Vec<usize>],
    candidate: &VertexSet,
) -> Result<Subgraph> {
    let n = inst.n();
    let images: Vec<Vec<Option<usize>>> = routes
        .iter()
        .map(|r| {
            (0..n)
                .map(|v| {
                    if candidate.contains(v) {
                        compose_along(v, r, fam)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let domain = VertexSet::from_mask(
        (0..n)
            .map(|v| candidate.contains(v) && images.iter().all(|im| im[v].is_some()))
            .collect(),
    );
    let mut graphs: Vec<&Graph> = vec![&inst.children[0]];
    let mut maps = vec![PartialMatching::identity_on(&domain)];
    for (r, im) in routes.iter().zip(&images) {
        graphs.push(&inst.children[*r.last().expect("nonempty route")]);
        let pairs = domain
            .iter()
            .map(|v| (v, im[v].expect("defined on domain")));
        maps.push(PartialMatching::from_pairs(n, n, pairs)?);
    }
    union_graph(&graphs, &maps)
}

/// Votes on `union` for the members of `voters` that lie in its vertex set.
fn vote_on(
    union: &Subgraph,
    voters: impl IntoIterator<Item = usize>,
    init: &[i8],
    assortative: bool,
) -> Vec<(usize, i8)> {
    voters
        .into_iter()
        .filter(|&v| union.vertices.contains(v))
        .map(|v| {
            let m = neighborhood_majority(&union.graph, init, v, &union.vertices);
            (v, vote(m, assortative, init[v]))
        })
        .collect()
}

/// Re-votes every good vertex on the union graph of its metagraph.
///
/// With three graphs this runs the three cases `M13 ∩ M32`, `M12 ∩ M23`,
/// `M13 ∩ M12` in that order, later cases overwriting earlier ones, and
/// counts how often a vertex in all three got conflicting votes. Otherwise
/// good vertices are grouped by metagraph: each group votes on the union
/// over the vertices matched by every pair its metagraph uses, with `G_j`
/// reached along the lexicographically first shortest metagraph path.
pub fn label_good_vertices(
    inst: &CorrelatedInstance,
    fam: &MatchingFamily,
    class: &VertexClass,
    init: &LabelEstimate,
) -> Result<GoodStep> {
    let n = inst.n();
    let assortative = inst.params.a >= inst.params.b;
    let base = init.labels.as_slice();
    let mut estimate = init.clone();
    let write = |est: &mut LabelEstimate, v: usize, label: i8| {
        debug_assert!(class.good.contains(v));
        est.labels.set(v, label);
        est.provenance[v] = Provenance::GoodStep;
    };

    if fam.num_graphs() == 3 {
        let cases: [(Vec<Vec<usize>>, VertexSet); 3] = [
            (
                vec![vec![0, 2, 1], vec![0, 2]],
                fam.anchored(0, 2).intersection(fam.anchored(1, 2)),
            ),
            (
                vec![vec![0, 1], vec![0, 1, 2]],
                fam.anchored(0, 1).intersection(fam.anchored(1, 2)),
            ),
            (
                vec![vec![0, 1], vec![0, 2]],
                fam.anchored(0, 1).intersection(fam.anchored(0, 2)),
            ),
        ];
        let mut case_votes: Vec<Vec<Option<i8>>> = Vec::new();
        for (routes, candidate) in &cases {
            let union = pulled_back_union(inst, fam, routes, candidate)?;
            let mut votes = vec![None; n];
            for (v, label) in vote_on(&union, union.vertices.iter(), base, assortative) {
                write(&mut estimate, v, label);
                votes[v] = Some(label);
            }
            case_votes.push(votes);
        }
        let disagreements = (0..n)
            .filter(
                |&v| match (case_votes[0][v], case_votes[1][v], case_votes[2][v]) {
                    (Some(x), Some(y), Some(z)) => !(x == y && y == z),
                    _ => false,
                },
            )
            .count();
        return Ok(GoodStep {
            estimate,
            disagreements: Some(disagreements),
        });
    }

    let mut groups: BTreeMap<u128, Vec<usize>> = BTreeMap::new();
    for v in class.good.iter() {
        groups
            .entry(build_metagraph(v, fam).pair_mask())
            .or_default()
            .push(v);
    }
    for members in groups.values() {
        let mg = build_metagraph(members[0], fam);
        let routes: Vec<Vec<usize>> = (1..fam.num_graphs())
            .map(|c| {
                mg.shortest_path(0, c)
                    .expect("good vertices have connected metagraphs")
            })
            .collect();
        let mut candidate = VertexSet::full(n);
        for (i, j) in fam.pairs() {
            if mg.has_edge(i, j) {
                candidate = candidate.intersection(fam.anchored(i, j));
            }
        }
        let union = pulled_back_union(inst, fam, &routes, &candidate)?;
        for (v, label) in vote_on(&union, members.iter().copied(), base, assortative) {
            write(&mut estimate, v, label);
        }
    }
    Ok(GoodStep {
        estimate,
        disagreements: None,
    })
}

/// Re-votes every bad vertex `v` on `G1` minus each `G_j` that `v` is matched
/// with (`{1, j}` an edge of its metagraph), counting only neighbors matched
/// between `G1` and every other graph.
pub fn label_bad_vertices(
    inst: &CorrelatedInstance,
    fam: &MatchingFamily,
    class: &VertexClass,
    current: &LabelEstimate,
) -> Result<LabelEstimate> {
    let n = inst.n();
    let assortative = inst.params.a >= inst.params.b;
    let mut matched_everywhere = VertexSet::full(n);
    for j in 1..fam.num_graphs() {
        matched_everywhere = matched_everywhere.intersection(fam.anchored(0, j));
    }
    let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in class.bad.iter() {
        let phi = build_metagraph(v, fam).neighbor_mask(0);
        groups.entry(phi).or_default().push(v);
    }

    let labels = current.labels.as_slice();
    let mut out = current.clone();
    for (&phi, members) in &groups {
        let subtracted: Vec<(&Graph, &PartialMatching)> = (1..fam.num_graphs())
            .filter(|&j| phi & (1 << j) != 0)
            .map(|j| (&inst.children[j], fam.get(0, j)))
            .collect();
        let mut restrict = matched_everywhere.clone();
        for &v in members {
            restrict.insert(v);
        }
        let diff = difference_graph(&inst.children[0], &subtracted, &restrict)?;
        for &v in members {
            debug_assert!(!class.good.contains(v));
            let m = neighborhood_majority(&diff.graph, labels, v, &matched_everywhere);
            out.labels.set(v, vote(m, assortative, labels[v]));
            out.provenance[v] = Provenance::BadStep;
        }
    }
    Ok(out)
}
