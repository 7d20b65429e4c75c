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

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_CORE_K: usize = 13;
pub const DEFAULT_EPS: f64 = 0.05;
/// Pattern bitmasks and metagraph masks are machine words.
pub const MAX_GRAPHS: usize = 16;

/// Model and algorithm parameters for one correlated-SBM experiment.
///
/// `a` and `b` are the logarithmic-regime intensities; `p` and `q` are the
/// resulting edge probabilities `a ln n / n` and `b ln n / n`. Instances built
/// with [`Params::from_probabilities`] carry the back-converted `a`, `b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub a: f64,
    pub b: f64,
    pub p: f64,
    pub q: f64,
    pub s: f64,
    #[serde(rename = "K")]
    pub num_graphs: usize,
    #[serde(rename = "k")]
    pub core_k: usize,
    pub eps: f64,
}

// Slack for `a = n / ln n` style inputs that land a few ulps above 1.
const PROB_SLACK: f64 = 1e-12;

impl Params {
    pub fn new(n: usize, a: f64, b: f64, s: f64, num_graphs: usize) -> Result<Self> {
        let scale = if n >= 2 {
            (n as f64).ln() / n as f64
        } else {
            0.0
        };
        let p = snap(a * scale);
        let q = snap(b * scale);
        let params = Params {
            n,
            a,
            b,
            p,
            q,
            s,
            num_graphs,
            core_k: DEFAULT_CORE_K,
            eps: DEFAULT_EPS,
        };
        params.validate()?;
        Ok(params)
    }

    /// Fixed (non-logarithmic) edge probabilities.
    pub fn from_probabilities(n: usize, p: f64, q: f64, s: f64, num_graphs: usize) -> Result<Self> {
        let inv = if n >= 2 {
            n as f64 / (n as f64).ln()
        } else {
            0.0
        };
        let params = Params {
            n,
            a: p * inv,
            b: q * inv,
            p,
            q,
            s,
            num_graphs,
            core_k: DEFAULT_CORE_K,
            eps: DEFAULT_EPS,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_core_k(mut self, k: usize) -> Result<Self> {
        self.core_k = k;
        self.validate()?;
        Ok(self)
    }

    pub fn with_eps(mut self, eps: f64) -> Result<Self> {
        self.eps = eps;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if !(self.a >= 0.0 && self.b >= 0.0) {
            return bad(format!(
                "a, b must be nonnegative (a={}, b={})",
                self.a, self.b
            ));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return bad(format!("p = a ln n / n = {} is outside [0, 1]", self.p));
        }
        if !(0.0..=1.0).contains(&self.q) {
            return bad(format!("q = b ln n / n = {} is outside [0, 1]", self.q));
        }
        if !(0.0..=1.0).contains(&self.s) {
            return bad(format!("s = {} is outside [0, 1]", self.s));
        }
        if self.num_graphs == 0 || self.num_graphs > MAX_GRAPHS {
            return bad(format!(
                "K = {} must be in 1..={MAX_GRAPHS}",
                self.num_graphs
            ));
        }
        if self.core_k == 0 {
            return bad("k must be positive".into());
        }
        if self.eps.is_nan() || self.eps <= 0.0 {
            return bad(format!("eps = {} must be positive", self.eps));
        }
        Ok(())
    }

    /// Largest `eps` the almost-exact labeling analysis allows,
    /// `s D+(a, b) / (4 |ln(a/b)|)`; `None` when `a == b` or either is zero.
    pub fn eps_bound(&self) -> Option<f64> {
        if self.a == self.b || self.a <= 0.0 || self.b <= 0.0 {
            return None;
        }
        let d_plus = crate::thresholds::chernoff_hellinger(self.a, self.b).ok()?;
        Some(self.s * d_plus / (4.0 * (self.a / self.b).ln().abs()))
    }

    pub fn eps_within_bound(&self) -> bool {
        self.eps_bound().is_none_or(|bound| self.eps <= bound)
    }
}

fn snap(x: f64) -> f64 {
    if x > 1.0 && x <= 1.0 + PROB_SLACK {
        1.0
    } else {
        x
    }
}
