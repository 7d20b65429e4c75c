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

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use csbm::gen::{
    io as gen_io, sample_instance, sample_instance_partition, CorrelatedInstance, Params,
};
use csbm::harness::{
    region_grid_export, scaling_experiment, sweep, write_summary_csv, write_trials_csv, SweepConfig,
};
use csbm::impossibility::map_failure_witness;
use csbm::matching::{all_pairwise_matchings, exact_matching_from_family, MatchMode};
use csbm::recovery::{overlap, recover_with_family};
use csbm::rng::derive_seed;

#[derive(Parser)]
#[command(version, about = "Correlated SBM recovery and matching experiments")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Model {
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 9.0)]
    a: f64,
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    #[arg(long, default_value_t = 0.5)]
    s: f64,
    /// Number of correlated graphs.
    #[arg(long = "K", default_value_t = 3)]
    num_graphs: usize,
    /// Core order for the k-core matchings.
    #[arg(long = "k", default_value_t = csbm::gen::DEFAULT_CORE_K)]
    core_k: usize,
    #[arg(long, default_value_t = csbm::gen::DEFAULT_EPS)]
    eps: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl Model {
    fn params(&self) -> Result<Params> {
        Ok(
            Params::new(self.n, self.a, self.b, self.s, self.num_graphs)?
                .with_core_k(self.core_k)?
                .with_eps(self.eps)?,
        )
    }
}

#[derive(Args)]
struct Source {
    #[command(flatten)]
    model: Model,
    /// Read the instance written by `gen` instead of sampling one.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Independent instances, seeded from `--seed`. Ignored with `--input`.
    #[arg(long, default_value_t = 1)]
    trials: u64,
}

impl Source {
    fn instances(&self) -> Result<Vec<CorrelatedInstance>> {
        if let Some(dir) = &self.input {
            let mut inst = gen_io::read_instance(dir)
                .with_context(|| format!("reading instance from {}", dir.display()))?;
            inst.params = inst
                .params
                .with_core_k(self.model.core_k)?
                .with_eps(self.model.eps)?;
            return Ok(vec![inst]);
        }
        let p = self.model.params()?;
        (0..self.trials)
            .map(|t| {
                let seed = if self.trials == 1 {
                    self.model.seed
                } else {
                    derive_seed(self.model.seed, 0, t)
                };
                Ok(sample_instance(&p, seed)?)
            })
            .collect()
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample an instance and write it to a directory.
    Gen {
        #[command(flatten)]
        model: Model,
        #[arg(long)]
        out: PathBuf,
        /// Use the pattern-partition construction.
        #[arg(long)]
        partition: bool,
    },
    /// Run the recovery pipeline.
    Recover {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        csv: bool,
    },
    /// Pairwise k-core matchings and the composed exact matching.
    Match {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value = "seeded")]
        mode: MatchMode,
        #[arg(long)]
        json: bool,
    },
    /// Singleton sets and the crossing-pair witness.
    Witness {
        #[command(flatten)]
        src: Source,
    },
    /// Grid sweep from a TOML config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Aggregated CSV; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-trial CSV.
        #[arg(long)]
        trials_out: Option<PathBuf>,
    },
    /// Fit the growth exponents of unmatched sets in n.
    Scaling {
        #[command(flatten)]
        model: Model,
        #[arg(long, value_delimiter = ',', default_value = "1024,2048,4096,8192")]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Region of every (a, b) on a grid, K = 3.
    Regions {
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 0.0)]
        amin: f64,
        #[arg(long, default_value_t = 50.0)]
        amax: f64,
        #[arg(long, default_value_t = 0.0)]
        bmin: f64,
        #[arg(long, default_value_t = 50.0)]
        bmax: f64,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-region counts.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
}

fn sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().cmd {
        Cmd::Gen {
            model,
            out,
            partition,
        } => {
            let p = model.params()?;
            let inst = if partition {
                sample_instance_partition(&p, model.seed)?
            } else {
                sample_instance(&p, model.seed)?
            };
            gen_io::write_instance(&inst, &out)?;
            let sizes: Vec<String> = inst
                .children
                .iter()
                .map(|g| g.edge_count().to_string())
                .collect();
            println!(
                "wrote {} (parent {} edges, children {})",
                out.display(),
                inst.parent.edge_count(),
                sizes.join(" ")
            );
        }
        Cmd::Recover { src, csv } => {
            let mut out = io::stdout().lock();
            if csv {
                writeln!(out, "seed,overlap,success,good,bad,converged")?;
            }
            for inst in src.instances()? {
                let fam = all_pairwise_matchings(&inst, inst.params.core_k, MatchMode::Seeded)?;
                let run = recover_with_family(&inst, fam, inst.params.eps)?;
                let ov = overlap(&inst.sigma_star, &run.estimate.labels)?;
                if csv {
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        inst.seed,
                        ov,
                        ov == 1.0,
                        run.good_count,
                        run.bad_count,
                        run.spectral_converged
                    )?;
                } else {
                    writeln!(
                        out,
                        "seed {:<20} overlap {:.6}  exact {:<5}  good {:<6} bad {:<6}{}",
                        inst.seed,
                        ov,
                        ov == 1.0,
                        run.good_count,
                        run.bad_count,
                        if run.degraded { "  (degraded)" } else { "" }
                    )?;
                }
            }
        }
        Cmd::Match { src, mode, json } => {
            for inst in src.instances()? {
                let fam = all_pairwise_matchings(&inst, inst.params.core_k, mode)?;
                let exact = exact_matching_from_family(&inst, &fam);
                let pairs: Vec<_> = fam
                    .pairs()
                    .map(|(i, j)| {
                        let mu = fam.get(i, j);
                        let correct = inst.pi_between(i, j);
                        let wrong = mu.pairs().filter(|&(v, w)| correct.apply(v) != w).count();
                        (i + 1, j + 1, mu.len(), fam.unmatched(i, j).len(), wrong)
                    })
                    .collect();
                if json {
                    let rows: Vec<_> = pairs
                        .iter()
                        .map(|&(i, j, m, f, w)| json!({"i": i, "j": j, "matched": m, "unmatched": f, "wrong": w}))
                        .collect();
                    let doc = json!({
                        "seed": inst.seed,
                        "pairs": rows,
                        "bad_count": exact.bad_count,
                        "success": exact.success,
                    });
                    println!("{doc}");
                } else {
                    println!("seed {}", inst.seed);
                    for (i, j, m, f, w) in pairs {
                        println!("  G{i}-G{j}: matched {m:<7} unmatched {f:<7} wrong {w}");
                    }
                    println!(
                        "  bad vertices {}  exact matching {}",
                        exact.bad_count, exact.success
                    );
                }
            }
        }
        Cmd::Witness { src } => {
            for inst in src.instances()? {
                let rep = map_failure_witness(&inst)?;
                println!(
                    "seed {:<20} |R*| {:<6} |S*| {:<6} witness {}",
                    inst.seed,
                    rep.r_star.len(),
                    rep.s_star.len(),
                    rep.witness_found.unwrap_or(false)
                );
            }
        }
        Cmd::Sweep {
            config,
            out,
            trials_out,
        } => {
            let cfg = SweepConfig::load(&config)
                .with_context(|| format!("loading {}", config.display()))?;
            let res = sweep(&cfg)?;
            write_summary_csv(&res.cells, sink(out.as_ref())?)?;
            if let Some(path) = trials_out {
                write_trials_csv(&res, sink(Some(&path))?)?;
            }
            let failed: usize = res.cells.iter().map(|c| c.failures).sum();
            if failed > 0 {
                bail!("{failed} trial(s) failed; see the per-trial CSV");
            }
        }
        Cmd::Scaling {
            model,
            n_list,
            trials,
        } => {
            let rep = scaling_experiment(&model.params()?, &n_list, trials, model.seed)?;
            let opt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.3}"));
            println!("n,trials,mean_F12,mean_F12capF13,mean_Rstar");
            for p in &rep.points {
                println!(
                    "{},{},{},{},{}",
                    p.n,
                    p.trials,
                    p.mean_f12,
                    p.mean_f12_cap_f13
                        .map(|x| x.to_string())
                        .unwrap_or_default(),
                    p.mean_r_star.map(|x| x.to_string()).unwrap_or_default()
                );
            }
            println!(
                "# F12        fitted {}  theory {:.4}",
                opt(rep.f12.slope),
                rep.theory_f12
            );
            if let Some(f) = &rep.f12_cap_f13 {
                println!(
                    "# F12capF13  fitted {}  theory {:.4}",
                    opt(f.slope),
                    rep.theory_f12_cap_f13
                );
            }
            if let Some(f) = &rep.r_star {
                println!(
                    "# Rstar      fitted {}  theory {:.4}",
                    opt(f.slope),
                    rep.theory_r_star
                );
            }
        }
        Cmd::Regions {
            s,
            amin,
            amax,
            bmin,
            bmax,
            step,
            out,
            summary,
        } => {
            let grid = region_grid_export(s, (amin, amax), (bmin, bmax), step)?;
            grid.write_csv(sink(out.as_ref())?)?;
            if let Some(path) = summary {
                grid.write_summary_csv(sink(Some(&path))?)?;
            }
        }
    }
    Ok(())
}
