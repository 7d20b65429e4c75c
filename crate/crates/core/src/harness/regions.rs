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

use std::collections::BTreeMap;
use std::io::Write;

use crate::error::{Error, Result};
use crate::thresholds::{classify_region, Region};

/// `K = 3` region of every `(a, b)` on a grid at fixed `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid {
    pub s: f64,
    pub rows: Vec<(f64, f64, Region)>,
}

impl RegionGrid {
    pub fn counts(&self) -> BTreeMap<Region, usize> {
        let mut out = BTreeMap::new();
        for &(_, _, r) in &self.rows {
            *out.entry(r).or_insert(0) += 1;
        }
        out
    }

    pub fn get(&self, a: f64, b: f64) -> Option<Region> {
        self.rows
            .iter()
            .find(|&&(x, y, _)| (x - a).abs() < 1e-9 && (y - b).abs() < 1e-9)
            .map(|&(_, _, r)| r)
    }

    /// `a,b,region` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["a", "b", "region"])?;
        for &(a, b, r) in &self.rows {
            w.write_record([a.to_string(), b.to_string(), r.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }

    /// `region,count` rows, in region order.
    pub fn write_summary_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["region", "count"])?;
        for (r, c) in self.counts() {
            w.write_record([r.to_string(), c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Grid values `lo, lo + step, ...` up to `hi` inclusive, rounded to 9
/// decimals so that CSV output stays readable.
fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    (0..count)
        .map(|i| ((lo + i as f64 * step) * 1e9).round() / 1e9)
        .collect()
}

/// Classifies every grid point with zero tolerance, so no row is
/// `Boundary`.
pub fn region_grid_export(
    s: f64,
    a_range: (f64, f64),
    b_range: (f64, f64),
    step: f64,
) -> Result<RegionGrid> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "step must be positive, got {step}"
        )));
    }
    for (name, (lo, hi)) in [("a", a_range), ("b", b_range)] {
        if !(lo >= 0.0 && lo <= hi && hi.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "bad {name} range [{lo}, {hi}]"
            )));
        }
    }
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::InvalidParams(format!("s = {s} is outside [0, 1]")));
    }
    let bs = axis(b_range.0, b_range.1, step);
    let rows = axis(a_range.0, a_range.1, step)
        .into_iter()
        .flat_map(|a| {
            bs.iter()
                .map(move |&b| (a, b, classify_region(a, b, s, 0.0)))
        })
        .collect();
    Ok(RegionGrid { s, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_cell_and_no_boundary() {
        let g = region_grid_export(0.25, (0.0, 50.0), (0.0, 50.0), 0.5).unwrap();
        assert_eq!(g.rows.len(), 101 * 101);
        assert_eq!(g.get(40.0, 5.0), Some(Region::Green));
        assert!(g.rows.iter().all(|r| r.2 != Region::Boundary));
        assert_eq!(g.counts().values().sum::<usize>(), g.rows.len());
    }

    #[test]
    fn zero_subsampling_is_all_red() {
        let g = region_grid_export(0.0, (0.0, 20.0), (0.0, 20.0), 1.0).unwrap();
        assert_eq!(
            g.counts().into_iter().collect::<Vec<_>>(),
            vec![(Region::Red, 441)]
        );
    }

    #[test]
    fn csv_shape() {
        let g = region_grid_export(0.15, (1.0, 2.0), (0.0, 0.3), 0.1).unwrap();
        assert_eq!(g.rows.len(), 11 * 4);
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("a,b,region"));
        assert!(text.contains("\n1.1,0.3,"));
    }

    #[test]
    fn rejects_bad_step() {
        assert!(region_grid_export(0.2, (0.0, 1.0), (0.0, 1.0), 0.0).is_err());
        assert!(region_grid_export(0.2, (2.0, 1.0), (0.0, 1.0), 0.5).is_err());
    }
}
