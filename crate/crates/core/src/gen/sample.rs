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

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{pattern_probability, Params};
use crate::error::Result;
use crate::graph::{Graph, Permutation};
use crate::labels::CommunityLabels;
use crate::rng::{stream_rng, Stream};

/// `K` correlated children of one parent SBM, with the ground truth.
///
/// `children[0]` is `G1` and shares the parent's labels. `pi_star[i]` maps
/// `G1` labels to `children[i]` labels; `pi_star[0]` is the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelatedInstance {
    pub params: Params,
    pub seed: u64,
    pub parent: Graph,
    pub sigma_star: CommunityLabels,
    pub children: Vec<Graph>,
    pub pi_star: Vec<Permutation>,
    pub partition: PartitionRecord,
}

impl CorrelatedInstance {
    pub fn num_graphs(&self) -> usize {
        self.children.len()
    }

    pub fn n(&self) -> usize {
        self.parent.n()
    }

    /// Ground-truth map from child `i`'s labels to child `j`'s labels.
    pub fn pi_between(&self, i: usize, j: usize) -> Permutation {
        self.pi_star[i].inverse().then(&self.pi_star[j])
    }
}

/// Presence patterns of the parent's edges and, for the partition
/// construction, the per-vertex pair counts.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PartitionRecord {
    /// `(u, v, pattern)` for each parent edge, in `parent.edges()` order.
    pub edge_patterns: Vec<(usize, usize, u32)>,
    pub pair_counts: Option<PairPatternCounts>,
}

/// For each vertex `i` and pattern `P`, the number of vertices `j != i` whose
/// pair `{i, j}` got pattern `P`, split by whether `j` shares `i`'s community.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairPatternCounts {
    pub num_graphs: usize,
    counts: Vec<u32>,
}

impl PairPatternCounts {
    fn new(n: usize, num_graphs: usize) -> Self {
        PairPatternCounts {
            num_graphs,
            counts: vec![0; n << (num_graphs + 1)],
        }
    }

    fn index(&self, v: usize, pattern: u32, same: bool) -> usize {
        (((v << self.num_graphs) | pattern as usize) << 1) | usize::from(same)
    }

    pub fn get(&self, v: usize, pattern: u32, same: bool) -> u32 {
        self.counts[self.index(v, pattern, same)]
    }

    fn bump(&mut self, v: usize, pattern: u32, same: bool) {
        let i = self.index(v, pattern, same);
        self.counts[i] += 1;
    }
}

/// Labels and parent graph of an `SBM(n, p, q)`.
pub fn sample_parent(params: &Params, seed: u64) -> Result<(Graph, CommunityLabels)> {
    params.validate()?;
    let n = params.n;
    let mut label_rng = stream_rng(seed, Stream::Labels);
    let labels: Vec<i8> = (0..n)
        .map(|_| if label_rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    let plus: Vec<usize> = (0..n).filter(|&v| labels[v] == 1).collect();
    let minus: Vec<usize> = (0..n).filter(|&v| labels[v] == -1).collect();

    let mut rng = stream_rng(seed, Stream::ParentEdges);
    let mut edges = Vec::new();
    for block in [&plus, &minus] {
        let m = block.len() as u64;
        for t in skip_sample(&mut rng, m * m.saturating_sub(1) / 2, params.p) {
            let (i, j) = unrank_triangular(t);
            edges.push((block[i as usize], block[j as usize]));
        }
    }
    let cols = minus.len() as u64;
    for t in skip_sample(&mut rng, plus.len() as u64 * cols, params.q) {
        edges.push((plus[(t / cols) as usize], minus[(t % cols) as usize]));
    }
    let g = Graph::from_edges(n, edges)?;
    Ok((g, CommunityLabels::new(labels)?))
}

/// Parent, then independent `s`-subsampling per child, then relabeling of
/// children `2..=K`.
pub fn sample_instance(params: &Params, seed: u64) -> Result<CorrelatedInstance> {
    let (parent, sigma_star) = sample_parent(params, seed)?;
    let k = params.num_graphs;
    let mut rng = stream_rng(seed, Stream::Subsample);
    let edge_patterns: Vec<(usize, usize, u32)> = parent
        .edges()
        .map(|(u, v)| {
            let mut pattern = 0u32;
            for c in 0..k {
                if rng.gen_bool(params.s) {
                    pattern |= 1 << c;
                }
            }
            (u, v, pattern)
        })
        .collect();
    build_children(
        params,
        seed,
        parent,
        sigma_star,
        PartitionRecord {
            edge_patterns,
            pair_counts: None,
        },
    )
}

/// Pattern first for every vertex pair, then edges. Same law as
/// [`sample_instance`], but `O(n^2)` since it visits every pair.
pub fn sample_instance_partition(params: &Params, seed: u64) -> Result<CorrelatedInstance> {
    // Edge presence is independent of the pair's pattern, so the parent can
    // come from the sparse sampler and the patterns from their own stream.
    let (parent, sigma_star) = sample_parent(params, seed)?;
    let n = params.n;
    let k = params.num_graphs;
    let cdf = pattern_cdf(k, params.s);
    let mut rng = stream_rng(seed, Stream::Partition);
    let mut counts = PairPatternCounts::new(n, k);
    let mut edge_patterns = Vec::with_capacity(parent.edge_count());
    let labels = sigma_star.as_slice();
    for u in 0..n {
        let nbrs = parent.neighbors(u);
        let mut cursor = nbrs.partition_point(|&x| x <= u);
        for v in u + 1..n {
            let pattern = draw_pattern(&mut rng, &cdf);
            let same = labels[u] == labels[v];
            counts.bump(u, pattern, same);
            counts.bump(v, pattern, same);
            if cursor < nbrs.len() && nbrs[cursor] == v {
                edge_patterns.push((u, v, pattern));
                cursor += 1;
            }
        }
    }
    build_children(
        params,
        seed,
        parent,
        sigma_star,
        PartitionRecord {
            edge_patterns,
            pair_counts: Some(counts),
        },
    )
}

fn build_children(
    params: &Params,
    seed: u64,
    parent: Graph,
    sigma_star: CommunityLabels,
    partition: PartitionRecord,
) -> Result<CorrelatedInstance> {
    let n = params.n;
    let k = params.num_graphs;
    let mut rng = stream_rng(seed, Stream::Permutations);
    let mut pi_star = vec![Permutation::identity(n)];
    for _ in 1..k {
        let mut image: Vec<usize> = (0..n).collect();
        image.shuffle(&mut rng);
        pi_star.push(Permutation::new(image)?);
    }
    let mut children = Vec::with_capacity(k);
    for (c, pi) in pi_star.iter().enumerate() {
        let edges = partition
            .edge_patterns
            .iter()
            .filter(|&&(_, _, pat)| pat & (1 << c) != 0)
            .map(|&(u, v, _)| (pi.apply(u), pi.apply(v)));
        children.push(Graph::from_edges(n, edges)?);
    }
    Ok(CorrelatedInstance {
        params: params.clone(),
        seed,
        parent,
        sigma_star,
        children,
        pi_star,
        partition,
    })
}

/// Cumulative distribution over all `2^bits` patterns.
pub(crate) fn pattern_cdf(bits: usize, s: f64) -> Vec<f64> {
    let mut acc = 0.0;
    let mut cdf: Vec<f64> = (0..1u32 << bits)
        .map(|pat| {
            acc += pattern_probability(pat, bits, s);
            acc
        })
        .collect();
    if let Some(last) = cdf.last_mut() {
        *last = f64::INFINITY;
    }
    cdf
}

pub(crate) fn draw_pattern(rng: &mut ChaCha8Rng, cdf: &[f64]) -> u32 {
    let u: f64 = rng.gen();
    cdf.partition_point(|&c| c <= u) as u32
}

/// Indices in `0..total` kept independently with probability `p`, by
/// geometric jumps between successes.
fn skip_sample(rng: &mut ChaCha8Rng, total: u64, p: f64) -> Vec<u64> {
    let mut out = Vec::new();
    if total == 0 || p <= 0.0 {
        return out;
    }
    if p >= 1.0 {
        out.extend(0..total);
        return out;
    }
    let log_q = (-p).ln_1p();
    let mut next: u64 = 0;
    loop {
        let u = 1.0 - rng.gen::<f64>();
        let jump = (u.ln() / log_q).floor();
        if jump >= (total - next) as f64 {
            break;
        }
        next += jump as u64;
        out.push(next);
        next += 1;
        if next >= total {
            break;
        }
    }
    out
}

/// `t`-th pair `(i, j)`, `i < j`, in the order `(0,1), (0,2), (1,2), (0,3), ...`.
fn unrank_triangular(t: u64) -> (u64, u64) {
    let mut j = ((1.0 + (1.0 + 8.0 * t as f64).sqrt()) / 2.0).floor() as u64;
    while j * (j - 1) / 2 > t {
        j -= 1;
    }
    while (j + 1) * j / 2 <= t {
        j += 1;
    }
    (t - j * (j - 1) / 2, j)
}
