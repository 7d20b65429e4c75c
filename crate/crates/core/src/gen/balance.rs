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

use serde::Serialize;

use super::{pattern_probability, CorrelatedInstance};
use crate::error::{Error, Result};

/// Outcome of the balance check. `violations` holds at most
/// [`MAX_REPORTED`] entries; `violation_count` is the full tally.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalanceReport {
    pub passed: bool,
    pub plus: usize,
    pub minus: usize,
    pub size_ok: bool,
    pub violation_count: usize,
    pub violations: Vec<BalanceViolation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalanceViolation {
    pub vertex: usize,
    pub pattern: u32,
    pub same_community: bool,
    pub count: u32,
    pub low: f64,
    pub high: f64,
}

pub const MAX_REPORTED: usize = 64;

/// Community sizes within `n/2 ± n^(3/4)`, and every vertex's per-pattern
/// pair counts within `s_P (|V^±| ± n^(3/4))`.
pub fn balance_diagnostic(inst: &CorrelatedInstance) -> Result<BalanceReport> {
    let counts = inst
        .partition
        .pair_counts
        .as_ref()
        .ok_or(Error::MissingPartition)?;
    let n = inst.n();
    let k = counts.num_graphs;
    let slack = (n as f64).powf(0.75);
    let half = n as f64 / 2.0;
    let (plus, minus) = inst.sigma_star.community_sizes();
    let size_ok = [plus, minus]
        .iter()
        .all(|&c| (c as f64 - half).abs() <= slack);

    let mut violations = Vec::new();
    let mut violation_count = 0;
    for v in 0..n {
        let (own, other) = if inst.sigma_star.get(v) == 1 {
            (plus, minus)
        } else {
            (minus, plus)
        };
        for pattern in 0..1u32 << k {
            let weight = pattern_probability(pattern, k, inst.params.s);
            for (same, size) in [(true, own), (false, other)] {
                let count = counts.get(v, pattern, same);
                let low = weight * (size as f64 - slack);
                let high = weight * (size as f64 + slack);
                if (count as f64) < low || (count as f64) > high {
                    violation_count += 1;
                    if violations.len() < MAX_REPORTED {
                        violations.push(BalanceViolation {
                            vertex: v,
                            pattern,
                            same_community: same,
                            count,
                            low,
                            high,
                        });
                    }
                }
            }
        }
    }
    Ok(BalanceReport {
        passed: size_ok && violation_count == 0,
        plus,
        minus,
        size_ok,
        violation_count,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{sample_instance, sample_instance_partition, Params};
    use crate::labels::CommunityLabels;

    #[test]
    fn tiny_balanced_instance_passes() {
        let p = Params::from_probabilities(4, 0.5, 0.5, 0.5, 1).unwrap();
        let inst = (0..200)
            .map(|seed| sample_instance_partition(&p, seed).unwrap())
            .find(|i| i.sigma_star.as_slice() == [1, 1, -1, -1])
            .expect("some seed gives (+,+,-,-)");
        let r = balance_diagnostic(&inst).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn requires_pair_counts() {
        let p = Params::from_probabilities(10, 0.5, 0.5, 0.5, 2).unwrap();
        let inst = sample_instance(&p, 0).unwrap();
        assert!(matches!(
            balance_diagnostic(&inst),
            Err(Error::MissingPartition)
        ));
    }

    #[test]
    fn one_sided_labels_fail() {
        let p = Params::from_probabilities(400, 0.01, 0.01, 0.5, 1).unwrap();
        let mut inst = sample_instance_partition(&p, 2).unwrap();
        inst.sigma_star = CommunityLabels::all_plus(400);
        let r = balance_diagnostic(&inst).unwrap();
        assert!(!r.size_ok && !r.passed);
    }
}
