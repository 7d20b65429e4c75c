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

use serde::Serialize;

use super::{
    all_pairwise_matchings, classify_good_bad, compose_matching_along_path, MatchMode,
    MatchingFamily,
};
use crate::error::Result;
use crate::gen::CorrelatedInstance;
use crate::graph::{intersection_graph, k_core, Permutation};

#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatchOutcome {
    /// `pi_hat[j-1]` maps `G1` to graph `j`, for `j = 1..K`. `None` when some
    /// vertex is bad or a composed map fails to be a bijection.
    pub estimate: Option<Vec<Permutation>>,
    pub bad_count: usize,
    /// The estimate exists and equals the ground truth everywhere.
    pub success: bool,
}

/// Runs the seeded matcher on every pair, then composes along metagraph
/// paths from `G1`.
pub fn exact_matching_estimator(inst: &CorrelatedInstance, k: usize) -> Result<ExactMatchOutcome> {
    let fam = all_pairwise_matchings(inst, k, MatchMode::Seeded)?;
    Ok(exact_matching_from_family(inst, &fam))
}

pub fn exact_matching_from_family(
    inst: &CorrelatedInstance,
    fam: &MatchingFamily,
) -> ExactMatchOutcome {
    let class = classify_good_bad(fam);
    let bad_count = class.bad.len();
    if bad_count > 0 {
        return ExactMatchOutcome {
            estimate: None,
            bad_count,
            success: false,
        };
    }
    let n = fam.n();
    let mut estimate = Vec::with_capacity(fam.num_graphs().saturating_sub(1));
    for j in 1..fam.num_graphs() {
        let image: Option<Vec<usize>> = (0..n)
            .map(|v| compose_matching_along_path(v, 0, j, fam))
            .collect();
        match image.and_then(|im| Permutation::new(im).ok()) {
            Some(p) => estimate.push(p),
            None => {
                return ExactMatchOutcome {
                    estimate: None,
                    bad_count,
                    success: false,
                }
            }
        }
    }
    let success = estimate
        .iter()
        .zip(&inst.pi_star[1..])
        .all(|(hat, truth)| hat == truth);
    ExactMatchOutcome {
        estimate: Some(estimate),
        bad_count,
        success,
    }
}

/// High-degree vertices the k-core missed, per pair of children.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeLemmaReport {
    pub pair: (usize, usize),
    /// `ceil(2 / (s^2 (a + b))) + 1`; `None` when `s^2 (a + b) = 0`.
    pub m: Option<usize>,
    /// Vertices of degree `> m + k` in the true intersection graph that lie
    /// outside its k-core.
    pub outside: usize,
}

impl DegreeLemmaReport {
    pub fn flagged(&self) -> bool {
        self.outside > 0
    }
}

pub fn degree_lemma_check(inst: &CorrelatedInstance, k: usize) -> Result<Vec<DegreeLemmaReport>> {
    let p = &inst.params;
    let rate = p.s * p.s * (p.a + p.b);
    let m = (rate > 0.0).then(|| (2.0 / rate).ceil() as usize + 1);
    let num_graphs = inst.num_graphs();
    let mut out = Vec::new();
    for i in 0..num_graphs {
        for j in i + 1..num_graphs {
            let truth = inst
                .pi_between(i, j)
                .restrict(&crate::graph::VertexSet::full(inst.n()));
            let inter = intersection_graph(&inst.children[i], &inst.children[j], &truth)?.graph;
            let core = k_core(&inter, k);
            let outside = match m {
                Some(m) => (0..inst.n())
                    .filter(|&v| inter.degree(v) > m + k && !core.contains(v))
                    .count(),
                None => 0,
            };
            out.push(DegreeLemmaReport {
                pair: (i, j),
                m,
                outside,
            });
        }
    }
    Ok(out)
}
