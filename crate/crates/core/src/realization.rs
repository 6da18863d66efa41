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

//! Digraphicality via the Fulkerson-Chen inequalities, and the constructive
//! realizer that walks down the dominance order from a threshold matrix.

use serde::{Deserialize, Serialize};

use crate::digraph::{first_difference, Digraph};
use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;
use crate::threshold::{construct_from_beta, BetaSequence};

/// Number of ones among the first `k` rows of column `i`.
pub fn column_prefix_count(g: &Digraph, i: usize, k: usize) -> Result<usize> {
    let n = g.n();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if k > n {
        return Err(Error::RowBoundOutOfRange { k, n });
    }
    Ok((0..k).filter(|&j| g.has_arc(j, i)).count())
}

/// Left-hand sides of the Fulkerson-Chen inequalities for `k = 1..=n`
/// (entry `k - 1`):
///
/// `sum_{i<=k} min(in_i, k-1) + sum_{i>k} min(in_i, k)`.
///
/// Evaluated in `O(n log n)` as `sum_i min(in_i, k) - #{i <= k : in_i >= k}`.
pub fn fulkerson_chen_lhs(in_degrees: &[usize]) -> Vec<u64> {
    let n = in_degrees.len();
    // at_least[v] = #{i : in_i >= v} for v in 1..=n.
    let mut hist = vec![0u64; n + 2];
    for &d in in_degrees {
        hist[d.min(n + 1)] += 1;
    }
    let mut at_least = vec![0u64; n + 2];
    at_least[n + 1] = hist[n + 1];
    for v in (0..=n).rev() {
        at_least[v] = at_least[v + 1] + hist[v];
    }
    let mut fenwick = Fenwick::new(n + 1);
    let mut clipped = 0u64;
    let mut lhs = Vec::with_capacity(n);
    for k in 1..=n {
        clipped += at_least[k];
        fenwick.add(in_degrees[k - 1].min(n));
        let early_at_least_k = k as u64 - fenwick.prefix(k - 1);
        lhs.push(clipped - early_at_least_k);
    }
    lhs
}

/// Direct double sum; reference for [`fulkerson_chen_lhs`].
pub fn fulkerson_chen_lhs_naive(in_degrees: &[usize]) -> Vec<u64> {
    let n = in_degrees.len();
    (1..=n)
        .map(|k| {
            in_degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| {
                    let cap = if i < k { k - 1 } else { k };
                    d.min(cap) as u64
                })
                .sum()
        })
        .collect()
}

/// Counts over values `0..len`.
struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    fn new(len: usize) -> Self {
        Self {
            tree: vec![0; len + 1],
        }
    }

    fn add(&mut self, value: usize) {
        let mut i = value + 1;
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Number of inserted values `<= value`.
    fn prefix(&self, value: usize) -> u64 {
        let mut i = (value + 1).min(self.tree.len() - 1);
        let mut total = 0;
        while i > 0 {
            total += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        total
    }
}

/// Outcome of a Fulkerson-Chen test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FcVerdict {
    pub digraphical: bool,
    /// Least `k` in `1..n` whose inequality fails.
    pub failing_k: Option<usize>,
    /// Total out-degree differs from total in-degree.
    pub sum_mismatch: bool,
    /// Some degree is at least `n`.
    pub degree_out_of_range: bool,
}

fn evaluate(s: &DegreeSequence) -> FcVerdict {
    let n = s.len();
    let lhs = fulkerson_chen_lhs(&s.in_degrees());
    let mut prefix = 0u64;
    let mut failing_k = None;
    for (k, pair) in s.iter().enumerate().take(n.saturating_sub(1)) {
        prefix += pair.out_deg as u64;
        if lhs[k] < prefix {
            failing_k = Some(k + 1);
            break;
        }
    }
    let sum_mismatch = s.out_total() != s.in_total();
    let degree_out_of_range = !s.degrees_in_range();
    FcVerdict {
        digraphical: failing_k.is_none() && !sum_mismatch && !degree_out_of_range,
        failing_k,
        sum_mismatch,
        degree_out_of_range,
    }
}

/// Tests digraphicality of a sequence in positive lexicographic order:
/// equal totals and, for `1 <= k < n`,
/// `sum_{i<=k} min(in_i, k-1) + sum_{i>k} min(in_i, k) >= sum_{i<=k} out_i`.
///
/// Unsorted input is rejected rather than sorted; see [`crate::positive_lex_sort`].
pub fn check_fulkerson_chen(s: &DegreeSequence) -> Result<FcVerdict> {
    if let Some(i) = s.positive_lex_violation() {
        return Err(Error::NotPositiveLex(i));
    }
    Ok(evaluate(s))
}

/// The same inequalities evaluated on a sequence whose out-degrees are merely
/// nonincreasing; ties in out-degree may list in-degrees in any order.
pub fn check_relaxed(s: &DegreeSequence) -> Result<FcVerdict> {
    if let Some(i) = s.out_increase() {
        return Err(Error::OutDegreesIncreasing(i));
    }
    Ok(evaluate(s))
}

/// One column move: the one at `(r1, column)` moves down to `(r2, column)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RealizationStep {
    pub r1: usize,
    pub r2: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationTrace {
    /// Half the L1 distance between the target out-degrees and the row sums
    /// of the starting threshold matrix.
    pub t_max: usize,
    pub steps: Vec<RealizationStep>,
    /// Row sums before each step and after the last, when requested.
    pub beta_history: Option<Vec<Vec<usize>>>,
}

/// Builds a realization of a digraphical sequence in positive lexicographic
/// order.
///
/// Starts from the threshold matrix of the in-degrees, whose row sums
/// dominate the target out-degrees, and repeatedly moves a one down a column:
/// from the first row whose sum is too large (`r1`) to the first later row
/// where the prefix sums meet again (`r2`), through the smallest column with
/// a one in `r1`, a zero in `r2`, and not equal to `r2`.
pub fn realize(s: &DegreeSequence) -> Result<(Digraph, RealizationTrace)> {
    run_realizer(s, false)
}

/// [`realize`], additionally recording every intermediate row-sum sequence.
pub fn realize_with_history(s: &DegreeSequence) -> Result<(Digraph, RealizationTrace)> {
    run_realizer(s, true)
}

fn run_realizer(s: &DegreeSequence, keep_history: bool) -> Result<(Digraph, RealizationTrace)> {
    let verdict = check_fulkerson_chen(s)?;
    if !verdict.digraphical {
        return Err(Error::NotDigraphical(verdict));
    }
    let target = s.out_degrees();
    let beta = BetaSequence::new(s.in_degrees()).expect("in-degrees checked in range");
    let mut g = construct_from_beta(&beta);
    let mut rows = g.out_degrees();

    let distance: usize = target.iter().zip(&rows).map(|(&a, &b)| a.abs_diff(b)).sum();
    let t_max = distance / 2;
    let mut steps = Vec::with_capacity(t_max);
    let mut history = keep_history.then(|| vec![rows.clone()]);

    // Rows before r1 always match the target, so r1 only moves forward.
    let mut r1 = 0;
    for _ in 0..t_max {
        while rows[r1] <= target[r1] {
            r1 += 1;
        }
        let mut surplus = rows[r1] - target[r1];
        let mut r2 = r1 + 1;
        loop {
            surplus = surplus + rows[r2] - target[r2];
            if surplus == 0 {
                break;
            }
            r2 += 1;
        }
        let column = first_difference(g.row(r1), g.row(r2), r2)
            .expect("row r1 exceeds row r2 by at least two");
        g.remove_arc(r1, column)?;
        g.insert_arc(r2, column)?;
        rows[r1] -= 1;
        rows[r2] += 1;
        steps.push(RealizationStep { r1, r2, column });
        if let Some(h) = history.as_mut() {
            h.push(rows.clone());
        }
    }
    debug_assert_eq!(rows, target);

    Ok((
        g,
        RealizationTrace {
            t_max,
            steps,
            beta_history: history,
        },
    ))
}
