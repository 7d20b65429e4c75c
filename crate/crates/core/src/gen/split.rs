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

use super::pattern_probability;
use super::sample::draw_pattern;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{stream_rng, Stream};

/// Law of the child pattern of an edge known to be present in at least one
/// of `K-1` children: `s^|P| (1-s)^(K-1-|P|) / (1 - (1-s)^(K-1))` for
/// nonzero `P`.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternWeights {
    bits: usize,
    weights: Vec<f64>,
}

impl PatternWeights {
    pub fn new(s: f64, num_graphs: usize) -> Result<Self> {
        if num_graphs < 2 {
            return Err(Error::InvalidParams(format!(
                "splitting needs K >= 2, got {num_graphs}"
            )));
        }
        if !(s > 0.0 && s <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "splitting needs s in (0, 1], got {s}"
            )));
        }
        let bits = num_graphs - 1;
        let norm = 1.0 - (1.0 - s).powi(bits as i32);
        let weights = (0..1u32 << bits)
            .map(|pat| {
                if pat == 0 {
                    0.0
                } else {
                    pattern_probability(pat, bits, s) / norm
                }
            })
            .collect();
        Ok(PatternWeights { bits, weights })
    }

    /// Number of child bits, `K-1`.
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Weight of pattern `pat`; bit `c` stands for child `c + 2`.
    pub fn weight(&self, pat: u32) -> f64 {
        self.weights[pat as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .skip(1)
            .map(|(p, &w)| (p as u32, w))
    }

    fn cdf(&self) -> Vec<f64> {
        let mut acc = 0.0;
        let mut cdf: Vec<f64> = self
            .weights
            .iter()
            .map(|w| {
                acc += w;
                acc
            })
            .collect();
        *cdf.last_mut().expect("at least two patterns") = f64::INFINITY;
        cdf
    }
}

/// Splits `h` into `K-1` graphs on `h`'s labels: each edge draws a nonzero
/// pattern from [`PatternWeights`] and goes to exactly the marked graphs.
pub fn split_union_graph(h: &Graph, s: f64, num_graphs: usize, seed: u64) -> Result<Vec<Graph>> {
    let weights = PatternWeights::new(s, num_graphs)?;
    let cdf = weights.cdf();
    let mut rng = stream_rng(seed, Stream::UnionSplit);
    let mut parts = vec![Vec::new(); weights.bits];
    for (u, v) in h.edges() {
        let pat = draw_pattern(&mut rng, &cdf);
        for (c, part) in parts.iter_mut().enumerate() {
            if pat & (1 << c) != 0 {
                part.push((u, v));
            }
        }
    }
    parts
        .into_iter()
        .map(|edges| Graph::from_edges(h.n(), edges))
        .collect()
}
