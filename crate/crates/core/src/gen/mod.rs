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

//! Sampling of correlated stochastic block models.
//!
//! Two constructions produce the same joint law:
//!
//! * [`sample_instance`] draws a parent SBM, keeps each parent edge in each
//!   child independently with probability `s`, and relabels children
//!   `2..=K` by independent uniform permutations.
//! * [`sample_instance_partition`] first assigns every vertex pair a presence
//!   pattern in `{0,1}^K`, then realizes edges. It visits all `n(n-1)/2`
//!   pairs, and is the only construction that records pair-level pattern
//!   counts (needed by [`balance_diagnostic`]).
//!
//! Pattern bit `c` (least significant first) means "present in child `c`",
//! with child 0 being `G1`.

mod balance;
pub mod io;
mod params;
mod sample;
mod split;

pub use balance::{balance_diagnostic, BalanceReport, BalanceViolation};
pub use params::{Params, DEFAULT_CORE_K, DEFAULT_EPS, MAX_GRAPHS};
pub use sample::{
    sample_instance, sample_instance_partition, sample_parent, CorrelatedInstance,
    PairPatternCounts, PartitionRecord,
};
pub use split::{split_union_graph, PatternWeights};

/// Probability of one presence pattern over `bits` independent `s`-coins.
pub fn pattern_probability(pattern: u32, bits: usize, s: f64) -> f64 {
    let ones = pattern.count_ones() as i32;
    s.powi(ones) * (1.0 - s).powi(bits as i32 - ones)
}
