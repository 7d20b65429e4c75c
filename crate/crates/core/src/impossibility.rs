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

//! Certificates that a labeling is information-theoretically lost.
//!
//! Everything here is in `G1` labels. `H` is the union of children `2..K`
//! pulled back to `G1` through the true permutations.
//!
//! * `R*`: vertices with no edge in `G1 ∧ H`.
//! * `S*`: vertices of `R*` with no `G1` neighbor in `R*`, whose `G1`
//!   neighbors also have no `H` neighbor in `R*`.
//!
//! A vertex of `S*` carries no information beyond its `G1` edges to
//! `[n] \ S*`, so once two vertices of `S*` from opposite communities have
//! their neighbor sums in the wrong order, no estimator can tell them apart.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gen::CorrelatedInstance;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq)]
pub struct SingletonReport {
    pub r_star: VertexSet,
    pub s_star: VertexSet,
    /// `sum_j A_ij sigma*(j)` over `G1`, for each `i` in `S*`. Empty until
    /// [`map_failure_witness`] fills it.
    pub maj: BTreeMap<usize, i64>,
    /// `None` from [`singleton_sets`], which does not look for a witness.
    pub witness_found: Option<bool>,
}

/// Union of children `2..K`, relabeled into `G1` labels.
pub fn pulled_back_union(inst: &CorrelatedInstance) -> Result<Graph> {
    if inst.num_graphs() < 2 {
        return Err(Error::InvalidParams(format!(
            "singleton sets need K >= 2, got K = {}",
            inst.num_graphs()
        )));
    }
    let edges = inst.children[1..]
        .iter()
        .zip(&inst.pi_star[1..])
        .flat_map(|(g, pi)| {
            let back = pi.inverse();
            g.edges()
                .map(move |(u, v)| (back.apply(u), back.apply(v)))
                .collect::<Vec<_>>()
        });
    Graph::from_edges(inst.n(), edges)
}

pub fn singleton_sets(inst: &CorrelatedInstance) -> Result<SingletonReport> {
    let h = pulled_back_union(inst)?;
    let (r_star, s_star) = singleton_sets_of(&inst.children[0], &h)?;
    Ok(SingletonReport {
        r_star,
        s_star,
        maj: BTreeMap::new(),
        witness_found: None,
    })
}

/// `(R*, S*)` for `G1` and an `H` already in `G1` labels.
pub fn singleton_sets_of(g1: &Graph, h: &Graph) -> Result<(VertexSet, VertexSet)> {
    if g1.n() != h.n() {
        return Err(Error::LengthMismatch(g1.n(), h.n()));
    }
    let n = g1.n();
    let r_star = VertexSet::from_mask(
        (0..n)
            .map(|i| g1.neighbors(i).iter().all(|&j| !h.has_edge(i, j)))
            .collect(),
    );
    // vertices with an H neighbor in R*
    let touches_r = VertexSet::from_mask(
        (0..n)
            .map(|v| h.neighbors(v).iter().any(|&w| r_star.contains(w)))
            .collect(),
    );
    let s_star = VertexSet::from_mask(
        (0..n)
            .map(|i| {
                r_star.contains(i)
                    && g1
                        .neighbors(i)
                        .iter()
                        .all(|&j| !r_star.contains(j) && !touches_r.contains(j))
            })
            .collect(),
    );
    Ok((r_star, s_star))
}

/// Singleton sets plus the crossing-pair check on `S*`.
///
/// With `a > b` a witness is `i` in `S* ∩ V+` and `j` in `S* ∩ V-` with
/// `maj(i) < maj(j)`; with `a < b` the inequality is reversed.
pub fn map_failure_witness(inst: &CorrelatedInstance) -> Result<SingletonReport> {
    let p = &inst.params;
    if p.p == p.q {
        return Err(Error::UndefinedDirection);
    }
    let mut report = singleton_sets(inst)?;
    let g1 = &inst.children[0];
    let sigma = inst.sigma_star.as_slice();
    let outside = report.s_star.complement();
    for i in report.s_star.iter() {
        let over_all: i64 = g1.neighbors(i).iter().map(|&j| i64::from(sigma[j])).sum();
        let over_rest: i64 = g1
            .neighbors(i)
            .iter()
            .filter(|&&j| outside.contains(j))
            .map(|&j| i64::from(sigma[j]))
            .sum();
        assert_eq!(
            over_all, over_rest,
            "vertex {i} of S* has a G1 neighbor in S*"
        );
        report.maj.insert(i, over_all);
    }

    let side = |label: i8| {
        report
            .maj
            .iter()
            .filter(move |(&i, _)| sigma[i] == label)
            .map(|(_, &m)| m)
    };
    let found = if p.p > p.q {
        matches!((side(1).min(), side(-1).max()), (Some(lo), Some(hi)) if lo < hi)
    } else {
        matches!((side(1).max(), side(-1).min()), (Some(hi), Some(lo)) if hi > lo)
    };
    report.witness_found = Some(found);
    Ok(report)
}
