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

//! Monte Carlo drivers: single trials, sweeps, scaling fits, region grids.
//!
//! A trial is fully determined by `(Params, seed)`. Sweeps derive each
//! trial's seed from the master seed, the cell's parameter values and the
//! trial index (see [`crate::rng::derive_seed`]), so the output does not
//! depend on cell order or on how rayon schedules the work.

mod regions;
mod scaling;
mod sweep;

pub use regions::{region_grid_export, RegionGrid};
pub use scaling::{fit_exponent, scaling_experiment, ExponentFit, ScalingPoint, ScalingReport};
pub use sweep::{
    cell_key, sweep, write_summary_csv, write_trials_csv, CellSummary, Experiment, SweepConfig,
    SweepOutput, TrialRecord,
};

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::Result;
use crate::gen::{sample_instance, Params};
use crate::impossibility::map_failure_witness;
use crate::matching::{
    all_pairwise_matchings, classify_good_bad, exact_matching_from_family, MatchMode,
};
use crate::recovery::{overlap, recover_with_family};

/// Which parts of the pipeline a trial runs. Sampling and pairwise matching
/// always run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialOptions {
    pub recover: bool,
    pub matching: bool,
    /// Skipped (recorded as `None`) when `K < 2` or `a = b`.
    pub witness: bool,
    pub mode: MatchMode,
    pub timing: bool,
}

impl TrialOptions {
    pub fn all() -> Self {
        TrialOptions {
            recover: true,
            matching: true,
            witness: true,
            mode: MatchMode::Seeded,
            timing: false,
        }
    }

    pub fn none() -> Self {
        TrialOptions {
            recover: false,
            matching: false,
            witness: false,
            mode: MatchMode::Seeded,
            timing: false,
        }
    }
}

impl Default for TrialOptions {
    fn default() -> Self {
        TrialOptions::all()
    }
}

#[derive(Debug, Clone)]
pub struct TrialResult {
    pub params: Params,
    pub seed: u64,
    pub overlap: Option<f64>,
    /// `overlap == 1` exactly.
    pub recovery_success: Option<bool>,
    pub matching_success: Option<bool>,
    pub bad_count: usize,
    /// `|F_ij|` for `i < j`, 0-based graph indices.
    pub unmatched_sizes: BTreeMap<(usize, usize), usize>,
    /// `|F_0i ∩ F_0j|` for `1 <= i < j`.
    pub intersect_sizes: BTreeMap<(usize, usize), usize>,
    pub witness_found: Option<bool>,
    pub r_star_size: Option<usize>,
    /// The initial labeling fell back to all `+1`.
    pub degraded: bool,
    pub wall_ms: Option<f64>,
}

impl TrialResult {
    /// `|F_12|` in one-based naming.
    pub fn f12(&self) -> Option<usize> {
        self.unmatched_sizes.get(&(0, 1)).copied()
    }

    /// `|F_12 ∩ F_13|` in one-based naming.
    pub fn f12_cap_f13(&self) -> Option<usize> {
        self.intersect_sizes.get(&(1, 2)).copied()
    }
}

/// Equality ignores `wall_ms`.
impl PartialEq for TrialResult {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
            && self.seed == other.seed
            && self.overlap == other.overlap
            && self.recovery_success == other.recovery_success
            && self.matching_success == other.matching_success
            && self.bad_count == other.bad_count
            && self.unmatched_sizes == other.unmatched_sizes
            && self.intersect_sizes == other.intersect_sizes
            && self.witness_found == other.witness_found
            && self.r_star_size == other.r_star_size
            && self.degraded == other.degraded
    }
}

/// Runs every experiment on one instance.
pub fn run_trial(params: &Params, seed: u64) -> Result<TrialResult> {
    run_trial_with(params, seed, &TrialOptions::all())
}

pub fn run_trial_with(params: &Params, seed: u64, opts: &TrialOptions) -> Result<TrialResult> {
    let start = Instant::now();
    let inst = sample_instance(params, seed)?;
    let family = all_pairwise_matchings(&inst, params.core_k, opts.mode)?;
    let num_graphs = inst.num_graphs();

    let unmatched_sizes = family
        .pairs()
        .map(|(i, j)| ((i, j), family.unmatched(i, j).len()))
        .collect();
    let mut intersect_sizes = BTreeMap::new();
    for i in 1..num_graphs {
        for j in i + 1..num_graphs {
            let both = family.unmatched(0, i).intersection(&family.unmatched(0, j));
            intersect_sizes.insert((i, j), both.len());
        }
    }
    let bad_count = classify_good_bad(&family).bad.len();
    let matching_success = opts
        .matching
        .then(|| exact_matching_from_family(&inst, &family).success);

    let (mut witness_found, mut r_star_size) = (None, None);
    if opts.witness && num_graphs >= 2 && params.p != params.q {
        let rep = map_failure_witness(&inst)?;
        witness_found = rep.witness_found;
        r_star_size = Some(rep.r_star.len());
    }

    let (mut ov, mut degraded) = (None, false);
    if opts.recover {
        let run = recover_with_family(&inst, family, params.eps)?;
        if run.degraded {
            log::warn!("seed {seed}: degraded recovery run (initial labeling fell back)");
        }
        degraded = run.degraded;
        ov = Some(overlap(&inst.sigma_star, &run.estimate.labels)?);
    }

    Ok(TrialResult {
        params: params.clone(),
        seed,
        overlap: ov,
        recovery_success: ov.map(|x| x == 1.0),
        matching_success,
        bad_count,
        unmatched_sizes,
        intersect_sizes,
        witness_found,
        r_star_size,
        degraded,
        wall_ms: opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}
