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

use rand::Rng;

use super::{vote, LabelEstimate, Provenance};
use crate::graph::{Graph, VertexSet};
use crate::labels::CommunityLabels;
use crate::rng::{stream_rng, Stream};

pub const POWER_ITERATIONS: usize = 200;
pub const POWER_TOLERANCE: f64 = 1e-8;

/// Outcome of the initial labeling.
#[derive(Debug, Clone, PartialEq)]
pub struct InitialLabeling {
    pub estimate: LabelEstimate,
    /// `false` when power iteration missed the tolerance (or the graph had no
    /// edges); the labels are then all `+1`.
    pub converged: bool,
    pub iterations: usize,
}

/// Spectral labels of `g1` followed by one round of neighborhood voting.
///
/// The spectral part takes the dominant eigenvector of the centered
/// adjacency `A - (d/n) J` by power iteration from a random start, and rounds
/// it by sign. The voting round then relabels every vertex whose vote margin
/// is at least `eps ln n` (majority if `a_eff >= b_eff`, minority otherwise).
pub fn almost_exact_label(
    g1: &Graph,
    a_eff: f64,
    b_eff: f64,
    eps: f64,
    seed: u64,
) -> InitialLabeling {
    let n = g1.n();
    let failed = |iterations| InitialLabeling {
        estimate: LabelEstimate::uniform(CommunityLabels::all_plus(n), Provenance::Initial),
        converged: false,
        iterations,
    };
    if g1.edge_count() == 0 {
        return failed(0);
    }
    let Some((vector, iterations)) = dominant_eigenvector(g1, seed) else {
        return failed(POWER_ITERATIONS);
    };
    let spectral: Vec<i8> = vector
        .iter()
        .map(|&x| if x >= 0.0 { 1 } else { -1 })
        .collect();

    let assortative = a_eff >= b_eff;
    let margin = eps * (n as f64).ln();
    let everyone = VertexSet::full(n);
    let refined: Vec<i8> = (0..n)
        .map(|v| {
            let m = crate::graph::neighborhood_majority(g1, &spectral, v, &everyone);
            if (m.unsigned_abs() as f64) < margin {
                spectral[v]
            } else {
                vote(m, assortative, spectral[v])
            }
        })
        .collect();
    InitialLabeling {
        estimate: LabelEstimate::uniform(
            CommunityLabels::new(refined).expect("votes are ±1"),
            Provenance::Initial,
        ),
        converged: true,
        iterations,
    }
}

/// Power iteration on `A - (d/n) J`. Returns the unit vector and the number
/// of iterations used, or `None` without convergence.
fn dominant_eigenvector(g: &Graph, seed: u64) -> Option<(Vec<f64>, usize)> {
    let n = g.n();
    let mean_degree = 2.0 * g.edge_count() as f64 / n as f64;
    let shift = mean_degree / n as f64;
    let mut rng = stream_rng(seed, Stream::SpectralStart);
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    normalize(&mut x)?;
    let mut y = vec![0.0; n];
    for it in 1..=POWER_ITERATIONS {
        let total: f64 = x.iter().sum();
        for (v, yv) in y.iter_mut().enumerate() {
            *yv = g.neighbors(v).iter().map(|&u| x[u]).sum::<f64>() - shift * total;
        }
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        if lambda == 0.0 || !lambda.is_finite() {
            return None;
        }
        let residual = x
            .iter()
            .zip(&y)
            .map(|(xv, yv)| (yv - lambda * xv).powi(2))
            .sum::<f64>()
            .sqrt();
        std::mem::swap(&mut x, &mut y);
        normalize(&mut x)?;
        if residual / lambda.abs() < POWER_TOLERANCE {
            return Some((x, it));
        }
    }
    None
}

fn normalize(x: &mut [f64]) -> Option<()> {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return None;
    }
    x.iter_mut().for_each(|v| *v /= norm);
    Some(())
}
