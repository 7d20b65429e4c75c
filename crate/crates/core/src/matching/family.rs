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

use serde::{Deserialize, Serialize};

use super::{kcore_matching_bruteforce, kcore_matching_seeded};
use crate::error::{Error, Result};
use crate::gen::CorrelatedInstance;
use crate::graph::{PartialMatching, Permutation, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MatchMode {
    #[default]
    Seeded,
    BruteForce,
}

impl std::str::FromStr for MatchMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seeded" => Ok(MatchMode::Seeded),
            "bruteforce" | "brute-force" => Ok(MatchMode::BruteForce),
            other => Err(Error::Parse(format!("unknown matching mode {other:?}"))),
        }
    }
}

/// Position of unordered pair `i < j` among `K choose 2`, row-major.
pub fn pair_index(i: usize, j: usize, num_graphs: usize) -> usize {
    debug_assert!(i < j && j < num_graphs);
    i * num_graphs - i * (i + 1) / 2 + (j - i - 1)
}

/// One partial matching `mu_ij: G_i -> G_j` per unordered pair `i < j`.
///
/// `anchored(i, j)` is `mu_ij`'s domain pulled back to `G1` labels:
/// `v` is in it iff `pi_star[i](v)` is matched.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingFamily {
    n: usize,
    num_graphs: usize,
    anchors: Vec<Permutation>,
    forward: Vec<PartialMatching>,
    backward: Vec<PartialMatching>,
    anchored: Vec<VertexSet>,
}

impl MatchingFamily {
    /// `anchors[i]` maps `G1` labels to graph `i` (so `anchors[0]` is the
    /// identity). Every unordered pair must appear exactly once, in either
    /// orientation.
    pub fn new<I>(anchors: Vec<Permutation>, matchings: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), PartialMatching)>,
    {
        let num_graphs = anchors.len();
        let n = anchors.first().map_or(0, Permutation::len);
        if anchors.iter().any(|a| a.len() != n) {
            return Err(Error::MatchingShape("anchors of different sizes".into()));
        }
        let pairs = num_graphs * num_graphs.saturating_sub(1) / 2;
        let mut slots: Vec<Option<PartialMatching>> = vec![None; pairs];
        for ((i, j), mu) in matchings {
            if i == j || i >= num_graphs || j >= num_graphs {
                return Err(Error::MatchingShape(format!(
                    "pair ({i}, {j}) with {num_graphs} graphs"
                )));
            }
            if mu.source_n() != n || mu.target_n() != n {
                return Err(Error::MatchingShape(format!(
                    "matching {}→{} among graphs on {n} vertices",
                    mu.source_n(),
                    mu.target_n()
                )));
            }
            let (lo, hi, mu) = if i < j {
                (i, j, mu)
            } else {
                (j, i, mu.inverse())
            };
            let slot = &mut slots[pair_index(lo, hi, num_graphs)];
            if slot.is_some() {
                return Err(Error::MatchingShape(format!(
                    "pair ({lo}, {hi}) given twice"
                )));
            }
            *slot = Some(mu);
        }
        let forward = slots
            .into_iter()
            .enumerate()
            .map(|(idx, m)| m.ok_or_else(|| Error::MatchingShape(format!("missing pair #{idx}"))))
            .collect::<Result<Vec<_>>>()?;
        let backward = forward.iter().map(PartialMatching::inverse).collect();
        let mut anchored = Vec::with_capacity(pairs);
        for i in 0..num_graphs {
            for j in i + 1..num_graphs {
                let mu = &forward[pair_index(i, j, num_graphs)];
                let a = &anchors[i];
                anchored.push(VertexSet::from_mask(
                    (0..n).map(|v| mu.contains(a.apply(v))).collect(),
                ));
            }
        }
        Ok(MatchingFamily {
            n,
            num_graphs,
            anchors,
            forward,
            backward,
            anchored,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_graphs(&self) -> usize {
        self.num_graphs
    }

    pub fn anchor(&self, i: usize) -> &Permutation {
        &self.anchors[i]
    }

    /// `mu_ij` in the requested orientation.
    pub fn get(&self, i: usize, j: usize) -> &PartialMatching {
        if i < j {
            &self.forward[pair_index(i, j, self.num_graphs)]
        } else {
            &self.backward[pair_index(j, i, self.num_graphs)]
        }
    }

    /// Matched vertices of pair `{i, j}`, in `G1` labels.
    pub fn anchored(&self, i: usize, j: usize) -> &VertexSet {
        let (lo, hi) = (i.min(j), i.max(j));
        &self.anchored[pair_index(lo, hi, self.num_graphs)]
    }

    /// Unmatched vertices `F_ij`, in `G1` labels.
    pub fn unmatched(&self, i: usize, j: usize) -> VertexSet {
        self.anchored(i, j).complement()
    }

    /// `(i, j)` with `i < j`, in [`pair_index`] order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.num_graphs;
        (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j)))
    }

    /// Fraction of vertices matched by each pair, in [`pair_index`] order.
    pub fn matched_fractions(&self) -> Vec<f64> {
        self.anchored
            .iter()
            .map(|s| {
                if self.n == 0 {
                    0.0
                } else {
                    s.len() as f64 / self.n as f64
                }
            })
            .collect()
    }
}

/// `mu_ij` for every pair of children of `inst`.
pub fn all_pairwise_matchings(
    inst: &CorrelatedInstance,
    k: usize,
    mode: MatchMode,
) -> Result<MatchingFamily> {
    let num_graphs = inst.num_graphs();
    let mut out = Vec::new();
    for i in 0..num_graphs {
        for j in i + 1..num_graphs {
            let (g, h) = (&inst.children[i], &inst.children[j]);
            let mu = match mode {
                MatchMode::Seeded => kcore_matching_seeded(g, h, k, &inst.pi_between(i, j))?,
                MatchMode::BruteForce => kcore_matching_bruteforce(g, h, k)?,
            };
            out.push(((i, j), mu));
        }
    }
    MatchingFamily::new(inst.pi_star.clone(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{sample_instance, Params};
    use crate::graph::k_core;

    #[test]
    fn pair_indices_are_dense() {
        for k in 1..8 {
            let mut want = 0;
            for i in 0..k {
                for j in i + 1..k {
                    assert_eq!(pair_index(i, j, k), want);
                    want += 1;
                }
            }
        }
    }

    #[test]
    fn sizes_by_graph_count() {
        let p = Params::new(300, 9.0, 1.0, 0.6, 1).unwrap();
        let fam =
            all_pairwise_matchings(&sample_instance(&p, 1).unwrap(), 2, MatchMode::Seeded).unwrap();
        assert_eq!(fam.pairs().count(), 0);

        let p = Params::new(300, 9.0, 1.0, 0.6, 2).unwrap();
        let inst = sample_instance(&p, 1).unwrap();
        let fam = all_pairwise_matchings(&inst, 2, MatchMode::Seeded).unwrap();
        let direct =
            kcore_matching_seeded(&inst.children[0], &inst.children[1], 2, &inst.pi_star[1])
                .unwrap();
        assert_eq!(fam.get(0, 1), &direct);
        assert_eq!(fam.get(1, 0), &direct.inverse());
    }

    #[test]
    fn full_subsampling_matches_everything() {
        let p = Params::new(400, 40.0, 30.0, 1.0, 3).unwrap();
        let inst = sample_instance(&p, 2).unwrap();
        assert_eq!(k_core(&inst.parent, 3).len(), 400);
        let fam = all_pairwise_matchings(&inst, 3, MatchMode::Seeded).unwrap();
        for (i, j) in fam.pairs() {
            assert_eq!(fam.get(i, j).to_permutation(), Some(inst.pi_between(i, j)));
        }
    }

    #[test]
    fn seeded_restricts_truth_and_is_symmetric() {
        let p = Params::new(400, 9.0, 1.0, 0.5, 4).unwrap();
        let inst = sample_instance(&p, 3).unwrap();
        let fam = all_pairwise_matchings(&inst, 2, MatchMode::Seeded).unwrap();
        for (i, j) in fam.pairs() {
            let truth = inst.pi_between(i, j);
            assert!(fam.get(i, j).pairs().all(|(v, w)| truth.apply(v) == w));
            // anchored domain agrees from either side
            for v in 0..400 {
                let from_j = fam.get(j, i).contains(inst.pi_star[j].apply(v));
                assert_eq!(fam.anchored(i, j).contains(v), from_j);
            }
        }
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let p = Params::new(200, 9.0, 1.0, 0.5, 3).unwrap();
        let inst = sample_instance(&p, 4).unwrap();
        let fam = all_pairwise_matchings(&inst, 1, MatchMode::Seeded).unwrap();
        let mut items: Vec<_> = fam
            .pairs()
            .map(|(i, j)| ((j, i), fam.get(j, i).clone()))
            .collect();
        items.reverse();
        let again = MatchingFamily::new(inst.pi_star.clone(), items).unwrap();
        assert_eq!(again, fam);
    }
}
