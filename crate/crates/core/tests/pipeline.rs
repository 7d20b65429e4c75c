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

//! End-to-end runs of matching and recovery on sampled instances.

use rayon::prelude::*;

use csbm::gen::{sample_instance, Params};
use csbm::harness::run_trial;
use csbm::matching::{all_pairwise_matchings, MatchMode};
use csbm::recovery::{almost_exact_label, full_recovery, overlap};

fn rate(hits: usize, total: usize) -> f64 {
    hits as f64 / total as f64
}

#[test]
fn spectral_labeling_above_single_graph_threshold() {
    let p = Params::new(4000, 18.0, 2.0, 0.4, 1).unwrap();
    let overlaps: Vec<f64> = (0..20u64)
        .into_par_iter()
        .map(|seed| {
            let inst = sample_instance(&p, seed).unwrap();
            let init = almost_exact_label(&inst.children[0], 7.2, 0.8, p.eps, seed);
            overlap(&inst.sigma_star, &init.estimate.labels).unwrap()
        })
        .collect();
    let mean = overlaps.iter().sum::<f64>() / overlaps.len() as f64;
    assert!(mean >= 0.95, "mean overlap {mean}");
}

#[test]
fn full_subsampling_recovers_at_default_core() {
    let p = Params::new(2000, 18.0, 2.0, 1.0, 3).unwrap();
    let hits = (0..20u64)
        .into_par_iter()
        .filter(|&seed| run_trial(&p, seed).unwrap().recovery_success == Some(true))
        .count();
    assert!(rate(hits, 20) >= 0.9, "{hits}/20");
}

#[test]
fn disassortative_mirror() {
    let p = Params::new(2000, 2.0, 18.0, 1.0, 2).unwrap();
    let hits = (0..10u64)
        .into_par_iter()
        .filter(|&seed| run_trial(&p, seed).unwrap().recovery_success == Some(true))
        .count();
    assert!(rate(hits, 10) >= 0.9, "{hits}/10");
}

#[test]
fn empty_subsample_never_recovers() {
    let p = Params::new(1000, 9.0, 1.0, 0.0, 3).unwrap();
    let misses = (0..20u64)
        .filter(|&seed| run_trial(&p, seed).unwrap().overlap.unwrap() < 1.0)
        .count();
    assert!(rate(misses, 20) >= 0.9);
}

#[test]
fn single_graph_is_one_vote_after_spectral() {
    // Oracle: redo the good step by hand on G1 from the initial labels.
    let p = Params::new(1500, 9.0, 1.0, 0.6, 1).unwrap();
    for seed in 0..3 {
        let inst = sample_instance(&p, seed).unwrap();
        let g1 = &inst.children[0];
        let init = almost_exact_label(g1, 5.4, 0.6, p.eps, inst.seed)
            .estimate
            .labels;
        let want: Vec<i8> = (0..g1.n())
            .map(|v| {
                let m: i64 = g1
                    .neighbors(v)
                    .iter()
                    .map(|&u| i64::from(init.get(u)))
                    .sum();
                match m.signum() {
                    0 => init.get(v),
                    x => x as i8,
                }
            })
            .collect();
        let run = full_recovery(&inst, 13, p.eps).unwrap();
        assert_eq!(run.bad_count, 0);
        assert_eq!(run.estimate.labels.as_slice(), &want[..]);
    }
}

#[test]
fn matchings_never_disagree_with_truth() {
    let p = Params::new(1500, 9.0, 1.0, 0.5, 4).unwrap();
    let inst = sample_instance(&p, 8).unwrap();
    for k in [1, 2, 13] {
        let fam = all_pairwise_matchings(&inst, k, MatchMode::Seeded).unwrap();
        for (i, j) in fam.pairs() {
            let truth = inst.pi_between(i, j);
            assert!(fam.get(i, j).pairs().all(|(v, w)| truth.apply(v) == w));
        }
    }
}

#[test]
fn more_graphs_help_at_small_core() {
    let base = |num_graphs| {
        Params::new(3000, 9.0, 1.0, 0.4, num_graphs)
            .unwrap()
            .with_core_k(1)
            .unwrap()
    };
    let rate_for = |num_graphs| {
        let p = base(num_graphs);
        let hits = (0..20u64)
            .into_par_iter()
            .filter(|&seed| run_trial(&p, 500 + seed).unwrap().recovery_success == Some(true))
            .count();
        rate(hits, 20)
    };
    let (one, three) = (rate_for(1), rate_for(3));
    assert!(three >= one + 0.3, "K=1 {one}, K=3 {three}");
}
