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

//! Which of the ten `K = 3` regions each `(a, b)` falls in, as a coarse
//! text map.
//!
//! ```text
//! cargo run --release --example phase_regions [s]
//! ```

use csbm::harness::region_grid_export;
use csbm::thresholds::Region;

fn glyph(r: Region) -> char {
    match r {
        Region::Green => 'G',
        Region::Cyan => 'C',
        Region::DarkBlue => 'D',
        Region::Pink => 'P',
        Region::Violet => 'V',
        Region::LightGreen => 'L',
        Region::Grey => '.',
        Region::Yellow => 'Y',
        Region::Orange => 'O',
        Region::Red => ' ',
        Region::Boundary => '+',
    }
}

fn main() -> csbm::Result<()> {
    let s: f64 = std::env::args()
        .nth(1)
        .and_then(|x| x.parse().ok())
        .unwrap_or(0.25);
    let step = 1.0;
    let grid = region_grid_export(s, (0.0, 60.0), (0.0, 20.0), step)?;
    println!("s = {s}; rows b = 20 down to 0, columns a = 0..60");
    for bi in (0..=20).rev() {
        let b = bi as f64 * step;
        let line: String = grid
            .rows
            .iter()
            .filter(|r| r.1 == b)
            .map(|r| glyph(r.2))
            .collect();
        println!("{b:>4} |{line}");
    }
    for (r, c) in grid.counts() {
        println!("{:<10} {c}", r.name());
    }
    Ok(())
}
