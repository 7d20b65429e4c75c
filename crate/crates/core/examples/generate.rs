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

//! Sample three correlated graphs and look at what they share.
//!
//! ```text
//! cargo run --release --example generate [out_dir]
//! ```

use csbm::gen::{io, sample_instance, Params};
use csbm::graph::{intersection_graph, VertexSet};

fn main() -> csbm::Result<()> {
    let params = Params::new(2000, 9.0, 1.0, 0.5, 3)?;
    let inst = sample_instance(&params, 42)?;

    let (plus, minus) = inst.sigma_star.community_sizes();
    println!("n = {}, communities {plus} / {minus}", inst.n());
    println!("p = {:.5}, q = {:.5}", params.p, params.q);
    println!("parent: {} edges", inst.parent.edge_count());
    for (i, g) in inst.children.iter().enumerate() {
        println!("G{}: {} edges", i + 1, g.edge_count());
    }

    // Aligning G1 and G2 with the true permutation shows the shared edges,
    // about s^2 of the parent's.
    let truth = inst.pi_between(0, 1).restrict(&VertexSet::full(inst.n()));
    let common = intersection_graph(&inst.children[0], &inst.children[1], &truth)?;
    println!(
        "G1 ∧ G2: {} edges ({:.3} of parent)",
        common.graph.edge_count(),
        common.graph.edge_count() as f64 / inst.parent.edge_count() as f64
    );

    if let Some(dir) = std::env::args().nth(1) {
        io::write_instance(&inst, std::path::Path::new(&dir))?;
        println!("written to {dir}");
    }
    Ok(())
}
