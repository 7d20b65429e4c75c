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

//! Simulation of exact community recovery and graph matching across several
//! edge-correlated stochastic block models.
//!
//! The usual flow is [`gen::sample_instance`] to draw `K` correlated graphs,
//! [`matching::all_pairwise_matchings`] to align them, and
//! [`recovery::full_recovery`] to label the vertices. [`thresholds`] gives
//! the closed-form conditions under which each step is expected to work,
//! and [`harness`] runs the Monte Carlo experiments around them.

pub mod error;
pub mod gen;
pub mod graph;
pub mod harness;
pub mod impossibility;
pub mod labels;
pub mod matching;
pub mod recovery;
pub mod rng;
pub mod thresholds;

pub use error::{Error, Result};
