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

//! Growth of the unmatched sets with `n`, against the predicted exponents.
//!
//! ```text
//! cargo run --release --example scaling
//! ```

use csbm::gen::Params;
use csbm::harness::scaling_experiment;

fn main() -> csbm::Result<()> {
    let base = Params::new(1024, 6.0, 2.0, 0.35, 3)?.with_core_k(1)?;
    let rep = scaling_experiment(&base, &[1024, 2048, 4096, 8192], 20, 7)?;
    println!(
        "{:>6} {:>10} {:>12} {:>8}",
        "n", "|F12|", "|F12∩F13|", "|R*|"
    );
    for p in &rep.points {
        println!(
            "{:>6} {:>10.2} {:>12.2} {:>8.2}",
            p.n,
            p.mean_f12,
            p.mean_f12_cap_f13.unwrap_or(f64::NAN),
            p.mean_r_star.unwrap_or(f64::NAN)
        );
    }
    let show = |x: Option<f64>| x.map_or("none".to_string(), |v| format!("{v:.3}"));
    println!(
        "F12       exponent {} (predicted {:.3})",
        show(rep.f12.slope),
        rep.theory_f12
    );
    if let Some(f) = &rep.f12_cap_f13 {
        println!(
            "F12∩F13   exponent {} (predicted {:.3})",
            show(f.slope),
            rep.theory_f12_cap_f13
        );
    }
    Ok(())
}
