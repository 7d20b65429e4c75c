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

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("matching is not injective: vertices {first} and {second} both map to {image}")]
    NotInjective {
        first: usize,
        second: usize,
        image: usize,
    },

    #[error("matching size mismatch: {0}")]
    MatchingShape(String),

    #[error("matchings do not share a common domain")]
    InconsistentDomains,

    #[error("restriction set is empty")]
    EmptyRestriction,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("brute-force matching needs n <= {limit}, got n = {n}")]
    TooLargeForBruteForce { n: usize, limit: usize },

    #[error("instance carries no pair-level partition record")]
    MissingPartition,

    #[error("witness direction undefined when a == b")]
    UndefinedDirection,

    #[error("label vectors differ in length: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
