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

use crate::error::{Error, Result};

/// A ±1 community assignment, one entry per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct CommunityLabels(Vec<i8>);

impl CommunityLabels {
    pub fn new(labels: Vec<i8>) -> Result<Self> {
        if let Some(pos) = labels.iter().position(|&x| x != 1 && x != -1) {
            return Err(Error::InvalidParams(format!(
                "label at {pos} is {}, expected ±1",
                labels[pos]
            )));
        }
        Ok(CommunityLabels(labels))
    }

    pub fn all_plus(n: usize) -> Self {
        CommunityLabels(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> i8 {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, label: i8) {
        assert!(label == 1 || label == -1);
        self.0[v] = label;
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        CommunityLabels(self.0.iter().map(|&x| -x).collect())
    }

    /// `(|V+|, |V-|)`.
    pub fn community_sizes(&self) -> (usize, usize) {
        let plus = self.0.iter().filter(|&&x| x == 1).count();
        (plus, self.0.len() - plus)
    }
}

impl TryFrom<Vec<i8>> for CommunityLabels {
    type Error = Error;
    fn try_from(v: Vec<i8>) -> Result<Self> {
        CommunityLabels::new(v)
    }
}

impl From<CommunityLabels> for Vec<i8> {
    fn from(l: CommunityLabels) -> Self {
        l.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_sign_entries() {
        assert!(CommunityLabels::new(vec![1, 0, -1]).is_err());
        let l = CommunityLabels::new(vec![1, -1, -1]).unwrap();
        assert_eq!(l.community_sizes(), (1, 2));
        assert_eq!(l.negated().as_slice(), &[-1, 1, 1]);
    }
}
