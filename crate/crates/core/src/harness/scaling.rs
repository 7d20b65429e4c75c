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

use rayon::prelude::*;

use super::{cell_key, run_trial_with, TrialOptions};
use crate::error::{Error, Result};
use crate::gen::Params;
use crate::rng::derive_seed;
use crate::thresholds::connectivity_param;

/// Trial means at one `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingPoint {
    pub n: usize,
    pub trials: usize,
    pub mean_f12: f64,
    /// `K >= 3` only.
    pub mean_f12_cap_f13: Option<f64>,
    /// Needs `a != b`.
    pub mean_r_star: Option<f64>,
}

/// Least-squares slope of `ln(mean)` against `ln n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentFit {
    /// `None` with fewer than two usable points.
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    /// `n` values whose mean was zero and so were left out.
    pub dropped: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub points: Vec<ScalingPoint>,
    pub f12: ExponentFit,
    pub f12_cap_f13: Option<ExponentFit>,
    pub r_star: Option<ExponentFit>,
    /// `1 - s^2 T_c`.
    pub theory_f12: f64,
    /// `1 - s (1 - (1-s)^2) T_c`.
    pub theory_f12_cap_f13: f64,
    /// `1 - s (1 - (1-s)^(K-1)) T_c`.
    pub theory_r_star: f64,
}

pub fn fit_exponent(points: &[(usize, f64)]) -> ExponentFit {
    let mut dropped = Vec::new();
    let mut xy = Vec::new();
    for &(n, m) in points {
        if m > 0.0 {
            xy.push(((n as f64).ln(), m.ln()));
        } else {
            log::warn!("mean size is 0 at n = {n}; dropped from the exponent fit");
            dropped.push(n);
        }
    }
    if xy.len() < 2 {
        log::warn!("only {} usable point(s); no exponent fitted", xy.len());
        return ExponentFit {
            slope: None,
            intercept: None,
            dropped,
        };
    }
    let len = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / len;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = xy.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xy.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    ExponentFit {
        slope: Some(slope),
        intercept: Some(my - slope * mx),
        dropped,
    }
}

/// Averages `|F_12|`, `|F_12 ∩ F_13|` and `|R*|` over `trials` instances at
/// each `n` (other parameters from `base`), then fits their exponents.
pub fn scaling_experiment(
    base: &Params,
    n_list: &[usize],
    trials: usize,
    master_seed: u64,
) -> Result<ScalingReport> {
    if n_list.len() < 4 || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParams(
            "n_list must be strictly ascending with at least 4 points".into(),
        ));
    }
    if base.num_graphs < 2 {
        return Err(Error::InvalidParams("scaling needs K >= 2".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidParams("trials must be positive".into()));
    }
    let opts = TrialOptions {
        witness: true,
        ..TrialOptions::none()
    };
    let cells = n_list
        .iter()
        .map(|&n| {
            Params::new(n, base.a, base.b, base.s, base.num_graphs)?
                .with_core_k(base.core_k)?
                .with_eps(base.eps)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut points = Vec::with_capacity(cells.len());
    for p in &cells {
        let key = cell_key(p);
        let results = (0..trials as u64)
            .into_par_iter()
            .map(|t| run_trial_with(p, derive_seed(master_seed, key, t), &opts))
            .collect::<Result<Vec<_>>>()?;
        let avg = |f: &dyn Fn(&super::TrialResult) -> Option<usize>| -> Option<f64> {
            let vals: Option<Vec<usize>> = results.iter().map(f).collect();
            vals.map(|v| v.iter().sum::<usize>() as f64 / v.len() as f64)
        };
        points.push(ScalingPoint {
            n: p.n,
            trials,
            mean_f12: avg(&|r| r.f12()).expect("K >= 2"),
            mean_f12_cap_f13: avg(&|r| r.f12_cap_f13()),
            mean_r_star: avg(&|r| r.r_star_size),
        });
    }

    let fit_of = |f: &dyn Fn(&ScalingPoint) -> Option<f64>| -> Option<ExponentFit> {
        let pts: Option<Vec<(usize, f64)>> =
            points.iter().map(|p| f(p).map(|m| (p.n, m))).collect();
        pts.map(|v| fit_exponent(&v))
    };
    let tc = connectivity_param(base.a, base.b)?;
    let s = base.s;
    Ok(ScalingReport {
        f12: fit_of(&|p| Some(p.mean_f12)).expect("always present"),
        f12_cap_f13: fit_of(&|p| p.mean_f12_cap_f13),
        r_star: fit_of(&|p| p.mean_r_star),
        points,
        theory_f12: 1.0 - s * s * tc,
        theory_f12_cap_f13: 1.0 - s * (1.0 - (1.0 - s).powi(2)) * tc,
        theory_r_star: 1.0 - s * (1.0 - (1.0 - s).powi(base.num_graphs as i32 - 1)) * tc,
    })
}
