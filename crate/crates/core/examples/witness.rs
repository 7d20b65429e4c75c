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

//! Certificates that recovery is impossible: the singleton sets and a
//! pair of vertices no estimator can label correctly.
//!
//! ```text
//! cargo run --release --example witness
//! ```

use csbm::gen::{sample_instance, Params};
use csbm::impossibility::map_failure_witness;

fn main() -> csbm::Result<()> {
    for s in [0.15, 0.6] {
        let params = Params::new(5000, 9.0, 1.0, s, 3)?;
        let mut found = 0;
        for seed in 0..20 {
            let rep = map_failure_witness(&sample_instance(&params, seed)?)?;
            found += usize::from(rep.witness_found == Some(true));
            if seed == 0 {
                println!(
                    "s = {s}: |R*| = {}, |S*| = {}",
                    rep.r_star.len(),
                    rep.s_star.len()
                );
                let shown: Vec<_> = rep.maj.iter().take(8).collect();
                println!("  maj on S*: {shown:?}");
            }
        }
        println!("s = {s}: witness in {found}/20");
    }
    Ok(())
}
