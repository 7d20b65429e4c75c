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

//! Community recovery from `K` correlated graphs.
//!
//! 1. [`almost_exact_label`] labels `G1` alone, getting most vertices right.
//! 2. [`label_good_vertices`] re-votes every good vertex on the union of all
//!    graphs, pulled back to `G1` through the matchings.
//! 3. [`label_bad_vertices`] re-votes every bad vertex on `G1` minus the
//!    graphs it is matched with, counting only neighbors matched everywhere.
//!
//! Every vote is a neighbor majority (minority when `a < b`) that keeps the
//! incoming label on a tie and never counts the voter itself.

mod refine;
mod spectral;

pub use refine::{label_bad_vertices, label_good_vertices, GoodStep};
pub use spectral::{almost_exact_label, InitialLabeling, POWER_ITERATIONS, POWER_TOLERANCE};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gen::CorrelatedInstance;
use crate::labels::CommunityLabels;
use crate::matching::{all_pairwise_matchings, classify_good_bad, MatchMode, MatchingFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Initial,
    GoodStep,
    BadStep,
}

/// Labels with the step that last wrote each one.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelEstimate {
    pub labels: CommunityLabels,
    pub provenance: Vec<Provenance>,
}

impl LabelEstimate {
    pub fn uniform(labels: CommunityLabels, tag: Provenance) -> Self {
        let provenance = vec![tag; labels.len()];
        LabelEstimate { labels, provenance }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn count(&self, tag: Provenance) -> usize {
        self.provenance.iter().filter(|&&p| p == tag).count()
    }
}

/// `|sum_i sigma(i) sigma_hat(i)| / n`.
pub fn overlap(sigma_star: &CommunityLabels, estimate: &CommunityLabels) -> Result<f64> {
    if sigma_star.len() != estimate.len() {
        return Err(Error::LengthMismatch(sigma_star.len(), estimate.len()));
    }
    if sigma_star.is_empty() {
        return Ok(1.0);
    }
    let dot: i64 = sigma_star
        .as_slice()
        .iter()
        .zip(estimate.as_slice())
        .map(|(&x, &y)| i64::from(x) * i64::from(y))
        .sum();
    Ok(dot.unsigned_abs() as f64 / sigma_star.len() as f64)
}

/// Sign of a vote margin, flipped for disassortative models; ties keep
/// `incoming`.
pub(crate) fn vote(margin: i64, assortative: bool, incoming: i8) -> i8 {
    let m = if assortative { margin } else { -margin };
    match m.signum() {
        1 => 1,
        -1 => -1,
        _ => incoming,
    }
}

/// Everything one pass of the pipeline produced.
#[derive(Debug, Clone)]
pub struct RecoveryRun {
    pub estimate: LabelEstimate,
    pub family: MatchingFamily,
    pub good_count: usize,
    pub bad_count: usize,
    pub spectral_converged: bool,
    /// The pipeline ran on a fallback somewhere (currently: the initial
    /// labeling did not converge).
    pub degraded: bool,
    /// `K = 3` only: vertices in all three good cases whose case votes
    /// disagreed.
    pub disagreements: Option<usize>,
    /// `eps` satisfies the bound the initial labeling analysis asks for.
    pub eps_within_bound: bool,
}

/// Seeded matchings, initial labeling of `G1`, good step, bad step.
pub fn full_recovery(inst: &CorrelatedInstance, k: usize, eps: f64) -> Result<RecoveryRun> {
    let family = all_pairwise_matchings(inst, k, MatchMode::Seeded)?;
    recover_with_family(inst, family, eps)
}

/// The pipeline from an already computed matching family.
pub fn recover_with_family(
    inst: &CorrelatedInstance,
    family: MatchingFamily,
    eps: f64,
) -> Result<RecoveryRun> {
    let p = &inst.params;
    let init = almost_exact_label(&inst.children[0], p.s * p.a, p.s * p.b, eps, inst.seed);
    if !init.converged {
        log::debug!("seed {}: initial labeling did not converge", inst.seed);
    }
    let class = classify_good_bad(&family);
    let good = label_good_vertices(inst, &family, &class, &init.estimate)?;
    let estimate = label_bad_vertices(inst, &family, &class, &good.estimate)?;
    let eps_within_bound = p
        .clone()
        .with_eps(eps)
        .map(|q| q.eps_within_bound())
        .unwrap_or(false);
    Ok(RecoveryRun {
        estimate,
        good_count: class.good.len(),
        bad_count: class.bad.len(),
        family,
        spectral_converged: init.converged,
        degraded: !init.converged,
        disagreements: good.disagreements,
        eps_within_bound,
    })
}
