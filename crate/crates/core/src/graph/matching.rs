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

use serde::{Deserialize, Serialize};

use super::VertexSet;
use crate::error::{Error, Result};

/// A bijection of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![usize::MAX; n];
        for (v, &w) in image.iter().enumerate() {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if seen[w] != usize::MAX {
                return Err(Error::NotInjective {
                    first: seen[w],
                    second: v,
                    image: w,
                });
            }
            seen[w] = v;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: self.image.iter().map(|&w| other.image[w]).collect(),
        }
    }

    pub fn restrict(&self, domain: &VertexSet) -> PartialMatching {
        PartialMatching {
            map: (0..self.image.len())
                .map(|v| domain.contains(v).then(|| self.image[v]))
                .collect(),
            target_n: self.image.len(),
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

/// An injective map from a subset of one graph's vertices into another's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialMatching {
    map: Vec<Option<usize>>,
    target_n: usize,
}

impl PartialMatching {
    pub fn new(map: Vec<Option<usize>>, target_n: usize) -> Result<Self> {
        let mut seen = vec![usize::MAX; target_n];
        for (v, w) in map.iter().enumerate() {
            if let Some(w) = *w {
                if w >= target_n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        n: target_n,
                    });
                }
                if seen[w] != usize::MAX {
                    return Err(Error::NotInjective {
                        first: seen[w],
                        second: v,
                        image: w,
                    });
                }
                seen[w] = v;
            }
        }
        Ok(PartialMatching { map, target_n })
    }

    pub fn from_pairs<I>(source_n: usize, target_n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut map = vec![None; source_n];
        for (v, w) in pairs {
            if v >= source_n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: source_n,
                });
            }
            map[v] = Some(w);
        }
        Self::new(map, target_n)
    }

    pub fn empty(source_n: usize, target_n: usize) -> Self {
        PartialMatching {
            map: vec![None; source_n],
            target_n,
        }
    }

    pub fn identity_on(domain: &VertexSet) -> Self {
        Permutation::identity(domain.universe()).restrict(domain)
    }

    pub fn source_n(&self) -> usize {
        self.map.len()
    }

    pub fn target_n(&self) -> usize {
        self.target_n
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.map.get(v).copied().flatten()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.get(v).is_some()
    }

    pub fn len(&self) -> usize {
        self.map.iter().filter(|w| w.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn domain(&self) -> VertexSet {
        VertexSet::from_mask(self.map.iter().map(Option::is_some).collect())
    }

    pub fn image(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.target_n);
        for w in self.map.iter().flatten() {
            s.insert(*w);
        }
        s
    }

    /// `(v, μ(v))` in ascending `v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(v, w)| w.map(|w| (v, w)))
    }

    pub fn inverse(&self) -> PartialMatching {
        let mut inv = vec![None; self.target_n];
        for (v, w) in self.pairs() {
            inv[w] = Some(v);
        }
        PartialMatching {
            map: inv,
            target_n: self.map.len(),
        }
    }

    /// `other ∘ self`, defined where `self(v)` lies in `other`'s domain.
    pub fn then(&self, other: &PartialMatching) -> PartialMatching {
        PartialMatching {
            map: self
                .map
                .iter()
                .map(|w| w.and_then(|w| other.get(w)))
                .collect(),
            target_n: other.target_n,
        }
    }

    pub fn restrict(&self, domain: &VertexSet) -> PartialMatching {
        PartialMatching {
            map: self
                .map
                .iter()
                .enumerate()
                .map(|(v, w)| if domain.contains(v) { *w } else { None })
                .collect(),
            target_n: self.target_n,
        }
    }

    /// The full permutation, if this matching is total on a square domain.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.map.len() != self.target_n {
            return None;
        }
        let image: Option<Vec<usize>> = self.map.iter().copied().collect();
        image.and_then(|im| Permutation::new(im).ok())
    }
}
