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

//! Closed-form thresholds for recovery and matching, and the `K = 3` phase
//! regions built from them.
//!
//! Every condition is "some value exceeds 1"; [`Condition`] keeps the value
//! so callers can see the margin.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

/// `(sqrt(a) - sqrt(b))^2 / 2`.
pub fn chernoff_hellinger(a: f64, b: f64) -> Result<f64> {
    check_nonneg(a, b)?;
    let d = a.sqrt() - b.sqrt();
    Ok(d * d / 2.0)
}

/// `(a + b) / 2`.
pub fn connectivity_param(a: f64, b: f64) -> Result<f64> {
    check_nonneg(a, b)?;
    Ok((a + b) / 2.0)
}

fn check_nonneg(a: f64, b: f64) -> Result<()> {
    if !(a >= 0.0 && b >= 0.0) {
        return Err(Error::InvalidParams(format!(
            "intensities must be nonnegative (a={a}, b={b})"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdPoint {
    pub a: f64,
    pub b: f64,
    pub s: f64,
    #[serde(rename = "K")]
    pub num_graphs: usize,
}

impl ThresholdPoint {
    pub fn new(a: f64, b: f64, s: f64, num_graphs: usize) -> Result<Self> {
        check_nonneg(a, b)?;
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::InvalidParams(format!("s = {s} is outside [0, 1]")));
        }
        if num_graphs == 0 {
            return Err(Error::InvalidParams("K must be positive".into()));
        }
        Ok(ThresholdPoint {
            a,
            b,
            s,
            num_graphs,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Condition {
    pub value: f64,
    pub holds: bool,
}

impl Condition {
    fn of(value: f64) -> Self {
        Condition {
            value,
            holds: value > 1.0,
        }
    }

    fn near_one(&self, tol: f64) -> bool {
        (self.value - 1.0).abs() < tol
    }
}

/// All recovery and matching conditions at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionSet {
    /// `s D+ > 1`: recovery from `G1` alone.
    pub single: Condition,
    /// `s^2 Tc > 1`: exact matching of two graphs.
    pub pair_match: Condition,
    /// `(1 - (1-s)^K) D+ > 1`: recovery from the union of all `K` graphs.
    pub union_k: Condition,
    /// `s^2 Tc + s(1-s) D+ > 1`.
    pub rec2: Condition,
    /// `(1 - (1-s)^2) D+ > 1`.
    pub union2: Condition,
    /// `s (1 - (1-s)^(K-1)) Tc > 1`: exact matching of `K` graphs.
    pub match_k: Condition,
    /// `s (1 - (1-s)^(K-1)) Tc + s (1-s)^(K-1) D+ > 1`.
    pub rec_k: Condition,
}

impl ConditionSet {
    /// Two-graph recovery: both `rec2` and `union2`.
    pub fn recoverable2(&self) -> bool {
        self.rec2.holds && self.union2.holds
    }

    /// `K`-graph recovery: both `rec_k` and `union_k`.
    pub fn recoverable_k(&self) -> bool {
        self.rec_k.holds && self.union_k.holds
    }

    fn all(&self) -> [Condition; 7] {
        [
            self.single,
            self.pair_match,
            self.union_k,
            self.rec2,
            self.union2,
            self.match_k,
            self.rec_k,
        ]
    }
}

pub fn condition_set(p: &ThresholdPoint) -> ConditionSet {
    let (a, b, s) = (p.a, p.b, p.s);
    let k = p.num_graphs as i32;
    let d = chernoff_hellinger(a, b).unwrap_or(f64::NAN);
    let t = connectivity_param(a, b).unwrap_or(f64::NAN);
    let r = 1.0 - s;
    let miss_rest = r.powi(k - 1);
    ConditionSet {
        single: Condition::of(s * d),
        pair_match: Condition::of(s * s * t),
        union_k: Condition::of((1.0 - r.powi(k)) * d),
        rec2: Condition::of(s * s * t + s * r * d),
        union2: Condition::of((1.0 - r * r) * d),
        match_k: Condition::of(s * (1.0 - miss_rest) * t),
        rec_k: Condition::of(s * (1.0 - miss_rest) * t + s * miss_rest * d),
    }
}

/// Phase regions for three graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    /// Recovery from `G1` alone.
    Green,
    /// Two graphs suffice and can be exactly matched.
    Cyan,
    /// Two graphs suffice without exact matching.
    DarkBlue,
    /// Two graphs fail only on the `rec2` side; three graphs suffice.
    Pink,
    /// The union of two would suffice but three graphs fall short.
    Violet,
    /// Three graphs needed; two can already be matched.
    LightGreen,
    /// Three graphs needed and matched exactly, pairs cannot be.
    Grey,
    /// Three graphs suffice though even three cannot be matched exactly.
    Yellow,
    /// The union of three would suffice, recovery still impossible.
    Orange,
    /// Even the union of three is below threshold.
    Red,
    /// Some condition sits within tolerance of its threshold.
    Boundary,
}

impl Region {
    pub const ALL: [Region; 11] = [
        Region::Green,
        Region::Cyan,
        Region::DarkBlue,
        Region::Pink,
        Region::Violet,
        Region::LightGreen,
        Region::Grey,
        Region::Yellow,
        Region::Orange,
        Region::Red,
        Region::Boundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Region::Green => "Green",
            Region::Cyan => "Cyan",
            Region::DarkBlue => "DarkBlue",
            Region::Pink => "Pink",
            Region::Violet => "Violet",
            Region::LightGreen => "LightGreen",
            Region::Grey => "Grey",
            Region::Yellow => "Yellow",
            Region::Orange => "Orange",
            Region::Red => "Red",
            Region::Boundary => "Boundary",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Each region's defining predicate, in decision-list order. The predicates
/// are mutually exclusive, so order only matters as documentation.
fn region_predicates(c: &ConditionSet) -> [(Region, bool); 10] {
    let u2 = c.recoverable2();
    let u3 = c.recoverable_k();
    [
        (Region::Green, c.single.holds),
        (Region::Cyan, !c.single.holds && c.pair_match.holds && u2),
        (
            Region::DarkBlue,
            !c.single.holds && !c.pair_match.holds && u2,
        ),
        (Region::Pink, !u2 && c.union2.holds && u3),
        (Region::Violet, c.union2.holds && !u3),
        (
            Region::LightGreen,
            !c.union2.holds && c.pair_match.holds && u3,
        ),
        (
            Region::Grey,
            !c.union2.holds && !c.pair_match.holds && c.match_k.holds && u3,
        ),
        (Region::Yellow, !c.union2.holds && !c.match_k.holds && u3),
        (Region::Orange, !u3 && c.union_k.holds && !c.union2.holds),
        (Region::Red, !c.union_k.holds),
    ]
}

/// Every region whose predicate holds, ignoring tolerance. Exactly one for
/// any point; exposed so that claim can be tested.
pub fn matching_regions(a: f64, b: f64, s: f64) -> Vec<Region> {
    let c = condition_set(&ThresholdPoint {
        a,
        b,
        s,
        num_graphs: 3,
    });
    region_predicates(&c)
        .into_iter()
        .filter(|&(_, hit)| hit)
        .map(|(r, _)| r)
        .collect()
}

/// Region of `(a, b, s)` with `K = 3`. `Boundary` when a condition value is
/// strictly within `tol` of 1, so `tol = 0` never yields it.
pub fn classify_region(a: f64, b: f64, s: f64, tol: f64) -> Region {
    let c = condition_set(&ThresholdPoint {
        a,
        b,
        s,
        num_graphs: 3,
    });
    if c.all().iter().any(|x| x.near_one(tol)) {
        return Region::Boundary;
    }
    region_predicates(&c)
        .into_iter()
        .find(|&(_, hit)| hit)
        .map_or(Region::Boundary, |(r, _)| r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: f64, y: f64) -> bool {
        (x - y).abs() < 1e-12
    }

    #[test]
    fn divergences() {
        assert_eq!(chernoff_hellinger(3.0, 3.0).unwrap(), 0.0);
        assert!(close(chernoff_hellinger(18.0, 2.0).unwrap(), 4.0));
        assert!(close(chernoff_hellinger(9.0, 1.0).unwrap(), 2.0));
        assert!(chernoff_hellinger(-1.0, 1.0).is_err());
        assert_eq!(connectivity_param(0.0, 0.0).unwrap(), 0.0);
        assert_eq!(connectivity_param(9.0, 1.0).unwrap(), 5.0);
        assert_eq!(connectivity_param(40.0, 5.0).unwrap(), 22.5);
        assert!(connectivity_param(1.0, -2.0).is_err());
    }

    #[test]
    fn reference_condition_values() {
        let c = condition_set(&ThresholdPoint::new(9.0, 1.0, 0.4, 3).unwrap());
        assert!(close(c.single.value, 0.8) && !c.single.holds);
        assert!(close(c.pair_match.value, 0.8) && !c.pair_match.holds);
        assert!(close(c.match_k.value, 1.28) && c.match_k.holds);
        assert!(close(c.rec_k.value, 1.568) && c.rec_k.holds);
        assert!(close(c.union_k.value, 1.568) && c.union_k.holds);
        assert!(close(c.union2.value, 1.28));
        assert!(close(c.rec2.value, 1.28));
    }

    #[test]
    fn zero_and_full_subsampling() {
        let c = condition_set(&ThresholdPoint::new(30.0, 2.0, 0.0, 3).unwrap());
        assert!(c.all().iter().all(|x| !x.holds));
        let c = condition_set(&ThresholdPoint::new(30.0, 2.0, 1.0, 3).unwrap());
        let d = chernoff_hellinger(30.0, 2.0).unwrap();
        let t = connectivity_param(30.0, 2.0).unwrap();
        assert_eq!(c.single.value, d);
        assert_eq!(c.union_k.value, d);
        assert_eq!(c.rec_k.value, t);
        assert_eq!(c.pair_match.value, t);
        assert_eq!(c.match_k.value, t);
    }

    #[test]
    fn reference_regions() {
        assert_eq!(classify_region(40.0, 5.0, 0.25, DEFAULT_TOL), Region::Green);
        assert_eq!(
            classify_region(9.0, 1.0, 0.4, DEFAULT_TOL),
            Region::DarkBlue
        );
        assert_eq!(classify_region(7.0, 7.0, 1.0, DEFAULT_TOL), Region::Red);
        assert_eq!(classify_region(7.0, 7.0, 1.0, 0.0), Region::Red);
    }

    #[test]
    fn boundary_needs_positive_tolerance() {
        // s D+ = 1 exactly at a=9, b=1, s=0.5
        assert_eq!(classify_region(9.0, 1.0, 0.5, 1e-9), Region::Boundary);
        assert_ne!(classify_region(9.0, 1.0, 0.5, 0.0), Region::Boundary);
    }
}
