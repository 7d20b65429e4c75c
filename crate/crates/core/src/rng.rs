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

//! Seeded random streams.
//!
//! Every random object is drawn from a `ChaCha8Rng` keyed by the instance
//! seed, with a distinct ChaCha stream id per purpose. Two purposes never
//! share keystream, so adding draws to one (say, more subsampling bits)
//! leaves every other stream untouched.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream ids. These are part of the reproducibility contract; do not renumber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    Labels = 1,
    ParentEdges = 2,
    Subsample = 3,
    Permutations = 4,
    Partition = 5,
    UnionSplit = 6,
    SpectralStart = 7,
}

pub fn stream_rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial seed from `(master, cell, trial)`. Frozen: CSVs produced on
/// different machines are comparable only while this stays unchanged.
pub fn derive_seed(master: u64, cell_key: u64, trial: u64) -> u64 {
    mix64(mix64(mix64(master) ^ cell_key) ^ trial.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

/// Folds a sequence of words into one 64-bit key.
pub fn fold_key<I: IntoIterator<Item = u64>>(words: I) -> u64 {
    words
        .into_iter()
        .fold(0x243F_6A88_85A3_08D3, |acc, w| mix64(acc ^ w))
}
