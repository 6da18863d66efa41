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

//! Brute-force ground truth for small vertex counts.
//!
//! Everything here enumerates labeled digraphs or vertex permutations
//! directly and never consults the inequality-based checks, so it can be used
//! to validate them.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::permutation::apply_permutation;
use crate::sequence::{degree_sequence_of, positive_lex_sort, DegreeSequence};
use crate::threshold::{
    check_adjacency_condition, check_fulkerson_chen_equality, construct_from_beta,
    find_forbidden_configuration, BetaSequence,
};

/// Largest `n` accepted by [`enumerate_digraphs`], [`count_realizations`]
/// and [`census_threshold`].
pub const MAX_ENUMERATION_N: usize = 5;

/// Largest `n` accepted by [`verify_equivalence`].
pub const MAX_EQUIVALENCE_N: usize = 4;

fn guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// Every loop-free digraph on `n` vertices, ordered by the bit pattern that
/// packs the off-diagonal entries in row-major order (entry `(0, 1)` is the
/// least significant bit).
#[derive(Debug, Clone)]
pub struct DigraphEnumerator {
    n: usize,
    slots: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl DigraphEnumerator {
    pub fn len(&self) -> u64 {
        self.end
    }

    pub fn is_empty(&self) -> bool {
        self.end == 0
    }

    /// The digraph with the given packed pattern.
    pub fn decode(&self, pattern: u64) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for (bit, &(i, j)) in self.slots.iter().enumerate() {
            if pattern >> bit & 1 == 1 {
                g.insert_arc(i, j).expect("off-diagonal slot");
            }
        }
        g
    }
}

impl Iterator for DigraphEnumerator {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.decode(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for DigraphEnumerator {}

pub fn enumerate_digraphs(n: usize) -> Result<DigraphEnumerator> {
    guard(n, MAX_ENUMERATION_N)?;
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    Ok(DigraphEnumerator {
        n,
        end: 1 << slots.len(),
        slots,
        next: 0,
    })
}

/// Number of labeled digraphs whose degree sequence is exactly `s`.
pub fn count_realizations(s: &DegreeSequence) -> Result<u64> {
    let n = s.len();
    guard(n, MAX_ENUMERATION_N)?;
    if !s.degrees_in_range() || s.out_total() != s.in_total() {
        return Ok(0);
    }
    Ok(enumerate_digraphs(n)?
        .filter(|g| degree_sequence_of(g) == *s)
        .count() as u64)
}

pub fn unique_realization(s: &DegreeSequence) -> Result<bool> {
    Ok(count_realizations(s)? == 1)
}

/// Realization counts for every degree sequence that occurs on `n` vertices,
/// built with a single pass over all digraphs.
#[derive(Debug, Clone)]
pub struct RealizationIndex {
    n: usize,
    counts: HashMap<DegreeSequence, u64>,
}

impl RealizationIndex {
    pub fn build(n: usize) -> Result<Self> {
        let mut counts = HashMap::new();
        for g in enumerate_digraphs(n)? {
            *counts.entry(degree_sequence_of(&g)).or_insert(0) += 1;
        }
        Ok(Self { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Realization count of `s`; zero for sequences of another length.
    pub fn count(&self, s: &DegreeSequence) -> u64 {
        self.counts.get(s).copied().unwrap_or(0)
    }

    /// Distinct degree sequences that have at least one realization.
    pub fn sequences(&self) -> impl Iterator<Item = (&DegreeSequence, u64)> {
        self.counts.iter().map(|(s, &c)| (s, c))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Isomorphism-invariant key: the smallest row-major packing of the adjacency
/// matrix over all relabelings. Requires `n <= 8`.
pub fn canonical_key(g: &Digraph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    assert!(n <= 8, "canonical_key packs n^2 bits into a u64");
    let arcs: Vec<(usize, usize)> = g.arcs().map(|a| (a.from, a.to)).collect();
    perms
        .iter()
        .map(|p| {
            arcs.iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << (p[u] * n + p[v]))
        })
        .min()
        .unwrap_or(0)
}

/// Groups digraphs of a common size into isomorphism classes, preserving the
/// order of first appearance. Returns indices into `graphs`.
pub fn isomorphism_classes(graphs: &[Digraph]) -> Vec<Vec<usize>> {
    let Some(first) = graphs.first() else {
        return Vec::new();
    };
    let perms = all_permutations(first.n());
    let mut by_key: HashMap<u64, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        assert_eq!(g.n(), first.n(), "mixed vertex counts");
        let key = canonical_key(g, &perms);
        let slot = *by_key.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(i);
    }
    classes
}

/// Threshold digraph counts on `n` vertices, generated from every beta
/// sequence, against the bounds `n^n / n! <= TD(n) <= n^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    /// Distinct labeled digraphs among all `n^n` beta constructions.
    pub labeled_count: u64,
    /// Isomorphism classes among them.
    pub class_count: u64,
    /// `n^n`, numerator of the lower bound.
    pub lower_bound_numerator: u64,
    /// `n!`, denominator of the lower bound.
    pub lower_bound_denominator: u64,
    pub lower_bound: f64,
    pub upper_bound: u64,
    /// `lower_bound <= class_count <= labeled_count <= upper_bound`.
    pub bounds_ok: bool,
}

pub fn census_threshold(n: usize) -> Result<CensusReport> {
    guard(n, MAX_ENUMERATION_N)?;
    let upper = (n as u64).pow(n as u32);
    let factorial: u64 = (1..=n as u64).product();
    let perms = all_permutations(n);

    let mut labeled: HashSet<Digraph> = HashSet::new();
    let mut classes: HashSet<u64> = HashSet::new();
    let mut beta = vec![0usize; n];
    for _ in 0..upper {
        let g = construct_from_beta(&BetaSequence::new(beta.clone())?);
        classes.insert(canonical_key(&g, &perms));
        labeled.insert(g);
        // Odometer over [0, n-1]^n, last position fastest.
        for pos in (0..n).rev() {
            beta[pos] += 1;
            if beta[pos] < n {
                break;
            }
            beta[pos] = 0;
        }
    }

    let labeled_count = labeled.len() as u64;
    let class_count = classes.len() as u64;
    let bounds_ok = class_count * factorial >= upper
        && class_count <= labeled_count
        && labeled_count <= upper;
    Ok(CensusReport {
        n,
        labeled_count,
        class_count,
        lower_bound_numerator: upper,
        lower_bound_denominator: factorial,
        lower_bound: upper as f64 / factorial as f64,
        upper_bound: upper,
        bounds_ok,
    })
}

impl CensusReport {
    /// Two-column text table.
    pub fn to_table(&self) -> String {
        let rows = [
            ("n", self.n.to_string()),
            ("labeled_count", self.labeled_count.to_string()),
            ("class_count", self.class_count.to_string()),
            (
                "lower_bound",
                format!(
                    "{}/{} = {:.4}",
                    self.lower_bound_numerator, self.lower_bound_denominator, self.lower_bound
                ),
            ),
            ("upper_bound", self.upper_bound.to_string()),
            ("bounds_ok", self.bounds_ok.to_string()),
        ];
        rows.iter()
            .map(|(k, v)| format!("{k:<15} {v}\n"))
            .collect()
    }
}

/// The four threshold predicates evaluated on one digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub unique_realization: bool,
    pub no_forbidden_configuration: bool,
    pub adjacency_condition: bool,
    pub fulkerson_chen_equality: bool,
}

impl Predicates {
    pub fn agree(&self) -> bool {
        let v = self.unique_realization;
        self.no_forbidden_configuration == v
            && self.adjacency_condition == v
            && self.fulkerson_chen_equality == v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    /// Packed bit pattern of the witness (see [`DigraphEnumerator`]).
    pub pattern: u64,
    pub digraph: Digraph,
    pub predicates: Predicates,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub n: usize,
    pub digraphs_checked: u64,
    pub threshold_count: u64,
    pub disagreement: Option<Disagreement>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.disagreement.is_none()
    }
}

/// Evaluates the four predicates with vertices canonicalized by a stable
/// positive lexicographic sort.
pub fn threshold_predicates(g: &Digraph, index: &RealizationIndex) -> Predicates {
    let (sorted, p) = positive_lex_sort(&degree_sequence_of(g));
    let canonical = apply_permutation(g, &p).expect("permutation matches vertex count");
    Predicates {
        unique_realization: index.count(&sorted) == 1,
        no_forbidden_configuration: find_forbidden_configuration(g).is_none(),
        adjacency_condition: check_adjacency_condition(&canonical),
        fulkerson_chen_equality: check_fulkerson_chen_equality(&sorted)
            .expect("sorted sequence is in positive lexicographic order"),
    }
}

/// Checks that the four threshold characterizations agree on every digraph
/// with `n` vertices. Stops at the first disagreement.
pub fn verify_equivalence(n: usize) -> Result<EquivalenceReport> {
    guard(n, MAX_EQUIVALENCE_N)?;
    let index = RealizationIndex::build(n)?;
    let mut report = EquivalenceReport {
        n,
        digraphs_checked: 0,
        threshold_count: 0,
        disagreement: None,
    };
    for (pattern, g) in enumerate_digraphs(n)?.enumerate() {
        let predicates = threshold_predicates(&g, &index);
        report.digraphs_checked += 1;
        if !predicates.agree() {
            report.disagreement = Some(Disagreement {
                pattern: pattern as u64,
                digraph: g,
                predicates,
            });
            break;
        }
        report.threshold_count += predicates.unique_realization as u64;
    }
    Ok(report)
}
