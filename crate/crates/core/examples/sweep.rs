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

//! A small parameter sweep written as CSV to stdout.
//!
//! ```text
//! cargo run --release --example sweep
//! ```

use csbm::harness::{sweep, write_summary_csv, SweepConfig};

const CONFIG: &str = r#"
master_seed = 2024
trials = 10
n = [2000]
a = [9.0]
b = [1.0]
s = [0.3, 0.4, 0.6]
K = [1, 2, 3]
k = [1]
experiments = ["recover", "match", "witness", "scaling"]
"#;

fn main() -> csbm::Result<()> {
    let cfg = SweepConfig::from_toml(CONFIG)?;
    let out = sweep(&cfg)?;
    write_summary_csv(&out.cells, std::io::stdout().lock())
}
