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

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::permutation::VertexPermutation;

/// The (out-degree, in-degree) pair prescribed for one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreePair {
    pub out_deg: usize,
    pub in_deg: usize,
}

impl DegreePair {
    pub const fn new(out_deg: usize, in_deg: usize) -> Self {
        Self { out_deg, in_deg }
    }

    /// True when `self` may precede `next` in positive lexicographic order.
    fn precedes(&self, next: &DegreePair) -> bool {
        self.out_deg > next.out_deg
            || (self.out_deg == next.out_deg && self.in_deg >= next.in_deg)
    }
}

impl From<(usize, usize)> for DegreePair {
    fn from((out_deg, in_deg): (usize, usize)) -> Self {
        Self { out_deg, in_deg }
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.out_deg, self.in_deg)
    }
}

/// An ordered list of degree pairs, one per vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence {
    pairs: Vec<DegreePair>,
}

impl DegreeSequence {
    pub fn new(pairs: Vec<DegreePair>) -> Self {
        Self { pairs }
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self {
            pairs: pairs.into_iter().map(DegreePair::from).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[DegreePair] {
        &self.pairs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DegreePair> {
        self.pairs.iter()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.out_deg).collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.in_deg).collect()
    }

    pub fn out_total(&self) -> usize {
        self.pairs.iter().map(|p| p.out_deg).sum()
    }

    pub fn in_total(&self) -> usize {
        self.pairs.iter().map(|p| p.in_deg).sum()
    }

    /// Every entry is at most `n - 1`.
    pub fn degrees_in_range(&self) -> bool {
        let n = self.len();
        self.pairs.iter().all(|p| p.out_deg < n && p.in_deg < n)
    }

    /// First position `i` such that pair `i` must not precede pair `i + 1`.
    pub fn positive_lex_violation(&self) -> Option<usize> {
        self.pairs
            .windows(2)
            .position(|w| !w[0].precedes(&w[1]))
    }

    pub fn is_positive_lex(&self) -> bool {
        self.positive_lex_violation().is_none()
    }

    /// First position `i` with `out_deg[i] < out_deg[i + 1]`.
    pub fn out_increase(&self) -> Option<usize> {
        self.pairs
            .windows(2)
            .position(|w| w[0].out_deg < w[1].out_deg)
    }

    /// Sequence with entry `p(i)` taken from entry `i` of `self`.
    pub fn permuted(&self, p: &VertexPermutation) -> DegreeSequence {
        assert_eq!(p.len(), self.len(), "permutation size mismatch");
        let mut pairs = self.pairs.clone();
        for (i, pair) in self.pairs.iter().enumerate() {
            pairs[p.image(i)] = *pair;
        }
        DegreeSequence { pairs }
    }
}

impl From<Vec<DegreePair>> for DegreeSequence {
    fn from(pairs: Vec<DegreePair>) -> Self {
        Self { pairs }
    }
}

impl FromIterator<DegreePair> for DegreeSequence {
    fn from_iter<T: IntoIterator<Item = DegreePair>>(iter: T) -> Self {
        Self {
            pairs: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a DegreeSequence {
    type Item = &'a DegreePair;
    type IntoIter = std::slice::Iter<'a, DegreePair>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Row sums and column sums of the adjacency matrix, in the digraph's own
/// vertex order.
pub fn degree_sequence_of(g: &Digraph) -> DegreeSequence {
    let outs = g.out_degrees();
    let ins = g.in_degrees();
    outs.into_iter()
        .zip(ins)
        .map(|(o, i)| DegreePair::new(o, i))
        .collect()
}

/// Stable sort into positive lexicographic order: out-degree nonincreasing,
/// ties broken by in-degree nonincreasing.
///
/// The returned permutation sends each original position to its position in
/// the sorted sequence, so `s.permuted(&p) == sorted`.
pub fn positive_lex_sort(s: &DegreeSequence) -> (DegreeSequence, VertexPermutation) {
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (s.pairs[a], s.pairs[b]);
        pb.out_deg
            .cmp(&pa.out_deg)
            .then(pb.in_deg.cmp(&pa.in_deg))
    });
    let sorted = order.iter().map(|&i| s.pairs[i]).collect();
    // order[new] = old; invert it.
    let mut map = vec![0; s.len()];
    for (new, &old) in order.iter().enumerate() {
        map[old] = new;
    }
    let perm = VertexPermutation::new(map).expect("sort order is a bijection");
    (sorted, perm)
}
