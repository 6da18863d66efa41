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

use thiserror::Error;

use crate::realization::FcVerdict;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("permutation has size {found}, digraph has {expected} vertices")]
    SizeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),

    #[error("adjacency matrix row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("nonzero diagonal entry at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency entry ({row}, {col}) is {value}, expected 0 or 1")]
    InvalidEntry { row: usize, col: usize, value: u64 },

    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("row bound {k} exceeds vertex count {n}")]
    RowBoundOutOfRange { k: usize, n: usize },

    #[error("sequence is not in positive lexicographic order at position {0}")]
    NotPositiveLex(usize),

    #[error("out-degrees increase at position {0}")]
    OutDegreesIncreasing(usize),

    #[error("beta value {value} at position {index} outside [0, {max}]")]
    BetaOutOfRange {
        index: usize,
        value: usize,
        max: usize,
    },

    #[error("digraph is not threshold")]
    NotThreshold,

    #[error("digraph has no arcs")]
    NoArc,

    #[error("digraph is complete")]
    Complete,

    #[error("sequence is not digraphical")]
    NotDigraphical(FcVerdict),

    #[error("n = {n} exceeds the limit of {max} for this operation")]
    TooLarge { n: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
