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

//! k-core matching of two small graphs, by exhaustive search and by the
//! seeded shortcut that knows the true permutation.
//!
//! ```text
//! cargo run --release --example kcore_matching
//! ```

use csbm::gen::{sample_instance, Params};
use csbm::matching::{kcore_matching_bruteforce, kcore_matching_seeded};

fn main() -> csbm::Result<()> {
    let params = Params::from_probabilities(8, 0.8, 0.3, 0.8, 2)?;
    let inst = sample_instance(&params, 5)?;
    let (g1, g2) = (&inst.children[0], &inst.children[1]);
    let truth = inst.pi_between(0, 1);
    println!("G1 edges {:?}", g1.edges().collect::<Vec<_>>());
    println!("G2 edges {:?}", g2.edges().collect::<Vec<_>>());
    println!("true map {:?}", truth.as_slice());

    for k in 1..=2 {
        let seeded = kcore_matching_seeded(g1, g2, k, &truth)?;
        let brute = kcore_matching_bruteforce(g1, g2, k)?;
        println!("k = {k}");
        println!(
            "  seeded  matches {} vertices: {:?}",
            seeded.len(),
            seeded.pairs().collect::<Vec<_>>()
        );
        println!(
            "  search  matches {} vertices: {:?}",
            brute.len(),
            brute.pairs().collect::<Vec<_>>()
        );
    }
    Ok(())
}
