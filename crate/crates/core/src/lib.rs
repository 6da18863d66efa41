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

//! Degree sequences of simple labeled digraphs.
//!
//! The crate decides whether a sequence of (out, in) degree pairs is
//! digraphical using the Fulkerson-Chen inequalities, builds realizations by
//! moving ones down the columns of a threshold adjacency matrix, and
//! recognizes threshold digraphs (digraphs that are the unique labeled
//! realization of their degree sequence) through four equivalent tests.
//! The [`oracle`] module provides brute-force ground truth for small `n`.
//!
//! Vertex indices are 0-based throughout the library API. Text, JSON and DOT
//! renderings produced by the command-line tool are 1-based.

pub mod digraph;
pub mod error;
pub mod format;
pub mod oracle;
pub mod order;
pub mod permutation;
pub mod realization;
pub mod sequence;
pub mod threshold;

pub use digraph::{Arc, Digraph};
pub use error::{Error, Result};
pub use oracle::{
    census_threshold, count_realizations, enumerate_digraphs, unique_realization,
    verify_equivalence, CensusReport, EquivalenceReport,
};
pub use order::dominance_leq;
pub use permutation::{apply_permutation, VertexPermutation};
pub use realization::{
    check_fulkerson_chen, check_relaxed, column_prefix_count, realize, realize_with_history,
    FcVerdict, RealizationStep, RealizationTrace,
};
pub use sequence::{degree_sequence_of, positive_lex_sort, DegreePair, DegreeSequence};
pub use threshold::{
    check_adjacency_condition, check_fulkerson_chen_equality, construct_from_beta,
    find_forbidden_configuration, grow_arc, is_threshold, shrink_arc, BetaSequence,
    ForbiddenConfig,
};

/// Default cap on the vertex count accepted by the text parsers.
pub const DEFAULT_MAX_VERTICES: usize = 50_000;
