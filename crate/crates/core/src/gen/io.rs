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

//! Instance directories.
//!
//! ```text
//! parent.edges        edge list of G0
//! child_<i>.edges     edge list of G_i, i = 1..=K, in its own labels
//! sigma.txt           one ±1 per line, G1 labels
//! pi_<i>.txt          image of v under G1 -> G_i, one per line, i = 2..=K
//! meta.json           {"params": {...}, "seed": ...}
//! ```

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CorrelatedInstance, Params, PartitionRecord};
use crate::error::{Error, Result};
use crate::graph::io::{read_edge_list, write_edge_list};
use crate::graph::{Graph, Permutation};
use crate::labels::CommunityLabels;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Meta {
    pub params: Params,
    pub seed: u64,
}

pub fn write_instance(inst: &CorrelatedInstance, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    write_graph(&inst.parent, &dir.join("parent.edges"))?;
    for (i, child) in inst.children.iter().enumerate() {
        write_graph(child, &dir.join(format!("child_{}.edges", i + 1)))?;
    }
    write_lines(&dir.join("sigma.txt"), inst.sigma_star.as_slice().iter())?;
    for (i, pi) in inst.pi_star.iter().enumerate().skip(1) {
        write_lines(&dir.join(format!("pi_{}.txt", i + 1)), pi.as_slice().iter())?;
    }
    let meta = Meta {
        params: inst.params.clone(),
        seed: inst.seed,
    };
    let mut f = BufWriter::new(File::create(dir.join("meta.json"))?);
    serde_json::to_writer_pretty(&mut f, &meta)?;
    writeln!(f)?;
    f.flush()?;
    Ok(())
}

pub fn read_instance(dir: &Path) -> Result<CorrelatedInstance> {
    let meta: Meta = serde_json::from_reader(BufReader::new(File::open(dir.join("meta.json"))?))?;
    meta.params.validate()?;
    let n = meta.params.n;
    let k = meta.params.num_graphs;
    let parent = read_graph(&dir.join("parent.edges"), n)?;
    let children = (1..=k)
        .map(|i| read_graph(&dir.join(format!("child_{i}.edges")), n))
        .collect::<Result<Vec<_>>>()?;
    let sigma_star = CommunityLabels::new(read_lines(&dir.join("sigma.txt"), n)?)?;
    let mut pi_star = vec![Permutation::identity(n)];
    for i in 2..=k {
        pi_star.push(Permutation::new(read_lines(
            &dir.join(format!("pi_{i}.txt")),
            n,
        )?)?);
    }
    let edge_patterns = parent
        .edges()
        .map(|(u, v)| {
            let mut pat = 0u32;
            for (c, (g, pi)) in children.iter().zip(&pi_star).enumerate() {
                if g.has_edge(pi.apply(u), pi.apply(v)) {
                    pat |= 1 << c;
                }
            }
            (u, v, pat)
        })
        .collect();
    Ok(CorrelatedInstance {
        params: meta.params,
        seed: meta.seed,
        parent,
        sigma_star,
        children,
        pi_star,
        partition: PartitionRecord {
            edge_patterns,
            pair_counts: None,
        },
    })
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<()> {
    let mut f = BufWriter::new(File::create(path)?);
    write_edge_list(g, &mut f)?;
    f.flush()?;
    Ok(())
}

pub fn read_graph(path: &Path, n: usize) -> Result<Graph> {
    let g = read_edge_list(BufReader::new(File::open(path)?))?;
    if g.n() != n {
        return Err(Error::Parse(format!(
            "{}: {} vertices, expected {n}",
            path.display(),
            g.n()
        )));
    }
    Ok(g)
}

fn write_lines<T: std::fmt::Display>(path: &Path, items: impl Iterator<Item = T>) -> Result<()> {
    let mut f = BufWriter::new(File::create(path)?);
    for x in items {
        writeln!(f, "{x}")?;
    }
    f.flush()?;
    Ok(())
}

pub fn read_lines<T: std::str::FromStr>(path: &Path, n: usize) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    let mut out = Vec::with_capacity(n);
    for line in BufReader::new(File::open(path)?).lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(
            line.parse()
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        );
    }
    if out.len() != n {
        return Err(Error::LengthMismatch(out.len(), n));
    }
    Ok(out)
}
