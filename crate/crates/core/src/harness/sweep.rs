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

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;

use super::{run_trial_with, TrialOptions, TrialResult};
use crate::error::{Error, Result};
use crate::gen::{Params, DEFAULT_CORE_K, DEFAULT_EPS};
use crate::matching::MatchMode;
use crate::rng::{derive_seed, fold_key};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Experiment {
    Recover,
    Match,
    Witness,
    /// Fills the `mean_F12` and `mean_F12capF13` columns.
    Scaling,
}

/// A grid sweep, usually read from TOML:
///
/// ```toml
/// master_seed = 7
/// trials = 30
/// n = [3000]
/// a = [9.0]
/// b = [1.0]
/// s = [0.2, 0.4]
/// K = [1, 2, 3]
/// k = [13]                          # optional, default [13]
/// experiments = ["recover", "match"] # optional, default recover + match
/// ```
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub master_seed: u64,
    pub trials: usize,
    pub n: Vec<usize>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub s: Vec<f64>,
    #[serde(rename = "K")]
    pub num_graphs: Vec<usize>,
    #[serde(rename = "k", default = "default_k")]
    pub core_k: Vec<usize>,
    #[serde(default = "default_eps")]
    pub eps: f64,
    #[serde(default = "default_experiments")]
    pub experiments: Vec<Experiment>,
    #[serde(default)]
    pub mode: MatchMode,
    /// Record wall time per trial. Makes `mean_ms` nondeterministic.
    #[serde(default)]
    pub timing: bool,
}

fn default_k() -> Vec<usize> {
    vec![DEFAULT_CORE_K]
}

fn default_eps() -> f64 {
    DEFAULT_EPS
}

fn default_experiments() -> Vec<Experiment> {
    vec![Experiment::Recover, Experiment::Match]
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    fn has(&self, e: Experiment) -> bool {
        self.experiments.contains(&e)
    }

    pub fn trial_options(&self) -> TrialOptions {
        TrialOptions {
            recover: self.has(Experiment::Recover),
            matching: self.has(Experiment::Match),
            witness: self.has(Experiment::Witness),
            mode: self.mode,
            timing: self.timing,
        }
    }

    /// Every grid cell, validated, sorted by `(n, a, b, s, K, k)` with
    /// duplicates removed.
    pub fn cells(&self) -> Result<Vec<Params>> {
        let mut out = Vec::new();
        for &n in &self.n {
            for &a in &self.a {
                for &b in &self.b {
                    for &s in &self.s {
                        for &num_graphs in &self.num_graphs {
                            for &k in &self.core_k {
                                out.push(
                                    Params::new(n, a, b, s, num_graphs)?
                                        .with_core_k(k)?
                                        .with_eps(self.eps)?,
                                );
                            }
                        }
                    }
                }
            }
        }
        out.sort_by(cell_order);
        out.dedup();
        Ok(out)
    }
}

fn cell_order(x: &Params, y: &Params) -> std::cmp::Ordering {
    x.n.cmp(&y.n)
        .then(x.a.total_cmp(&y.a))
        .then(x.b.total_cmp(&y.b))
        .then(x.s.total_cmp(&y.s))
        .then(x.num_graphs.cmp(&y.num_graphs))
        .then(x.core_k.cmp(&y.core_k))
}

/// Stable key of a cell's parameter values; part of the seed derivation.
pub fn cell_key(p: &Params) -> u64 {
    fold_key([
        p.n as u64,
        p.a.to_bits(),
        p.b.to_bits(),
        p.s.to_bits(),
        p.num_graphs as u64,
        p.core_k as u64,
        p.eps.to_bits(),
    ])
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub outcome: std::result::Result<TrialResult, String>,
}

/// Aggregates over the trials of one cell that did not error. A field is
/// `None` when its experiment did not run (or no trial produced it).
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub params: Params,
    pub trials: usize,
    pub failures: usize,
    pub success_rate: Option<f64>,
    pub match_rate: Option<f64>,
    pub mean_overlap: Option<f64>,
    pub mean_bad: Option<f64>,
    pub mean_f12: Option<f64>,
    pub mean_f12_cap_f13: Option<f64>,
    pub witness_rate: Option<f64>,
    pub mean_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub cells: Vec<CellSummary>,
    /// Per cell, in the same order as `cells`.
    pub trials: Vec<Vec<TrialRecord>>,
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepOutput> {
    let cells = cfg.cells()?;
    let opts = cfg.trial_options();
    let jobs: Vec<(usize, u64)> = (0..cells.len())
        .flat_map(|c| (0..cfg.trials as u64).map(move |t| (c, t)))
        .collect();
    let records: Vec<(usize, TrialRecord)> = jobs
        .into_par_iter()
        .map(|(c, trial)| {
            let seed = derive_seed(cfg.master_seed, cell_key(&cells[c]), trial);
            let outcome = run_trial_with(&cells[c], seed, &opts).map_err(|e| e.to_string());
            if let Err(e) = &outcome {
                log::warn!("cell {c} trial {trial}: {e}");
            }
            (
                c,
                TrialRecord {
                    trial,
                    seed,
                    outcome,
                },
            )
        })
        .collect();

    let mut per_cell: Vec<Vec<TrialRecord>> = vec![Vec::new(); cells.len()];
    for (c, rec) in records {
        per_cell[c].push(rec);
    }
    let scaling = cfg.has(Experiment::Scaling);
    let summaries = cells
        .iter()
        .zip(&per_cell)
        .map(|(p, recs)| summarize(p, recs, scaling))
        .collect();
    Ok(SweepOutput {
        cells: summaries,
        trials: per_cell,
    })
}

fn mean<I: Iterator<Item = f64>>(it: I) -> Option<f64> {
    let (sum, count) = it.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

fn rate(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn summarize(params: &Params, recs: &[TrialRecord], scaling: bool) -> CellSummary {
    let ok: Vec<&TrialResult> = recs
        .iter()
        .filter_map(|r| r.outcome.as_ref().ok())
        .collect();
    let f = |g: &dyn Fn(&TrialResult) -> Option<f64>| mean(ok.iter().filter_map(|r| g(r)));
    CellSummary {
        params: params.clone(),
        trials: recs.len(),
        failures: recs.len() - ok.len(),
        success_rate: f(&|r| r.recovery_success.map(rate)),
        match_rate: f(&|r| r.matching_success.map(rate)),
        mean_overlap: f(&|r| r.overlap),
        mean_bad: f(&|r| Some(r.bad_count as f64)),
        mean_f12: if scaling {
            f(&|r| r.f12().map(|x| x as f64))
        } else {
            None
        },
        mean_f12_cap_f13: if scaling {
            f(&|r| r.f12_cap_f13().map(|x| x as f64))
        } else {
            None
        },
        witness_rate: f(&|r| r.witness_found.map(rate)),
        mean_ms: f(&|r| r.wall_ms),
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub const SUMMARY_HEADER: [&str; 15] = [
    "n",
    "a",
    "b",
    "s",
    "K",
    "k",
    "trials",
    "success_rate",
    "match_rate",
    "mean_overlap",
    "mean_bad",
    "mean_F12",
    "mean_F12capF13",
    "witness_rate",
    "mean_ms",
];

pub fn write_summary_csv<W: Write>(cells: &[CellSummary], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_HEADER)?;
    for c in cells {
        let p = &c.params;
        w.write_record([
            p.n.to_string(),
            p.a.to_string(),
            p.b.to_string(),
            p.s.to_string(),
            p.num_graphs.to_string(),
            p.core_k.to_string(),
            c.trials.to_string(),
            opt(c.success_rate),
            opt(c.match_rate),
            opt(c.mean_overlap),
            opt(c.mean_bad),
            opt(c.mean_f12),
            opt(c.mean_f12_cap_f13),
            opt(c.witness_rate),
            opt(c.mean_ms),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_trials_csv<W: Write>(out: &SweepOutput, sink: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([
        "n",
        "a",
        "b",
        "s",
        "K",
        "k",
        "trial",
        "seed",
        "overlap",
        "recovery_success",
        "matching_success",
        "bad_count",
        "F12",
        "F12capF13",
        "witness_found",
        "R_star",
        "wall_ms",
        "error",
    ])?;
    for (cell, recs) in out.cells.iter().zip(&out.trials) {
        let p = &cell.params;
        for rec in recs {
            let mut row = vec![
                p.n.to_string(),
                p.a.to_string(),
                p.b.to_string(),
                p.s.to_string(),
                p.num_graphs.to_string(),
                p.core_k.to_string(),
                rec.trial.to_string(),
                rec.seed.to_string(),
            ];
            match &rec.outcome {
                Ok(r) => row.extend([
                    opt(r.overlap),
                    opt(r.recovery_success),
                    opt(r.matching_success),
                    r.bad_count.to_string(),
                    opt(r.f12()),
                    opt(r.f12_cap_f13()),
                    opt(r.witness_found),
                    opt(r.r_star_size),
                    opt(r.wall_ms),
                    String::new(),
                ]),
                Err(e) => {
                    row.extend(std::iter::repeat_n(String::new(), 9));
                    row.push(e.clone());
                }
            }
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}
