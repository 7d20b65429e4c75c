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

//! Exact matching of three graphs by composing pairwise matchings through
//! each vertex's metagraph.
//!
//! ```text
//! cargo run --release --example exact_matching
//! ```

use csbm::gen::{sample_instance, Params};
use csbm::matching::{
    all_pairwise_matchings, classify_good_bad, exact_matching_from_family, MatchMode,
};

fn main() -> csbm::Result<()> {
    let k = 1;
    for num_graphs in [2, 3] {
        let params = Params::new(3000, 9.0, 1.0, 0.4, num_graphs)?.with_core_k(k)?;
        let inst = sample_instance(&params, 7)?;
        let fam = all_pairwise_matchings(&inst, k, MatchMode::Seeded)?;
        for (i, j) in fam.pairs() {
            println!(
                "K = {num_graphs}: G{}-G{} leaves {} unmatched",
                i + 1,
                j + 1,
                fam.unmatched(i, j).len()
            );
        }
        let class = classify_good_bad(&fam);
        let out = exact_matching_from_family(&inst, &fam);
        println!(
            "K = {num_graphs}: {} good, {} bad, exact matching {}",
            class.good.len(),
            class.bad.len(),
            out.success
        );
    }
    Ok(())
}
