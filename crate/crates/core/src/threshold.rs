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

//! Threshold digraphs: recognition, forbidden configurations, the
//! beta-sequence constructor, and single-arc moves that stay threshold.
//!
//! A digraph is threshold when it is the unique labeled realization of its
//! degree sequence. With vertices in positive lexicographic order of their
//! degree pairs, the following are equivalent:
//!
//! 1. the digraph is the unique labeled realization of its degrees;
//! 2. it contains no 2-switch and no induced directed 3-cycle;
//! 3. for all distinct `i < j` and `k`, `a[j][k] = 1` implies `a[i][k] = 1`;
//! 4. every Fulkerson-Chen inequality holds with equality.

use std::fmt;

use crate::digraph::{first_difference, Arc, Digraph};
use crate::error::{Error, Result};
use crate::permutation::apply_permutation;
use crate::realization::fulkerson_chen_lhs;
use crate::sequence::{degree_sequence_of, positive_lex_sort, DegreeSequence};

/// A located obstruction to unique realizability. Vertices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForbiddenConfig {
    /// `w->x` and `y->z` present, `w->z` and `y->x` absent.
    TwoSwitch { w: usize, x: usize, y: usize, z: usize },
    /// `x->y`, `y->z`, `z->x` present, the reverse arcs absent.
    InducedThreeCycle { x: usize, y: usize, z: usize },
}

impl ForbiddenConfig {
    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            ForbiddenConfig::TwoSwitch { w, x, y, z } => vec![w, x, y, z],
            ForbiddenConfig::InducedThreeCycle { x, y, z } => vec![x, y, z],
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ForbiddenConfig::TwoSwitch { .. } => "TwoSwitch",
            ForbiddenConfig::InducedThreeCycle { .. } => "InducedThreeCycle",
        }
    }

    /// Whether the configuration is actually present in `g`.
    pub fn holds_in(&self, g: &Digraph) -> bool {
        let a = |u: usize, v: usize| g.has_arc(u, v);
        match *self {
            ForbiddenConfig::TwoSwitch { w, x, y, z } => {
                let mut vs = [w, x, y, z];
                vs.sort_unstable();
                vs.windows(2).all(|p| p[0] != p[1])
                    && a(w, x)
                    && a(y, z)
                    && !a(w, z)
                    && !a(y, x)
            }
            ForbiddenConfig::InducedThreeCycle { x, y, z } => {
                x != y
                    && y != z
                    && x != z
                    && a(x, y)
                    && a(y, z)
                    && a(z, x)
                    && !a(y, x)
                    && !a(z, y)
                    && !a(x, z)
            }
        }
    }

    /// The digraph obtained by swapping present and absent arcs of the
    /// configuration. It has the same degree sequence as `g`.
    pub fn switched(&self, g: &Digraph) -> Digraph {
        let mut h = g.clone();
        let (remove, add) = match *self {
            ForbiddenConfig::TwoSwitch { w, x, y, z } => {
                (vec![(w, x), (y, z)], vec![(w, z), (y, x)])
            }
            ForbiddenConfig::InducedThreeCycle { x, y, z } => {
                (vec![(x, y), (y, z), (z, x)], vec![(y, x), (z, y), (x, z)])
            }
        };
        for (u, v) in remove {
            h.remove_arc(u, v).expect("vertex in range");
        }
        for (u, v) in add {
            h.insert_arc(u, v).expect("distinct vertices");
        }
        h
    }
}

impl fmt::Display for ForbiddenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{}({})", self.kind(), vs.join(","))
    }
}

/// Column recipe for a threshold adjacency matrix: `values[j]` is the
/// in-degree of vertex `j`, each in `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSequence {
    values: Vec<usize>,
}

impl BetaSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let max = values.len().saturating_sub(1);
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v > max) {
            return Err(Error::BetaOutOfRange { index, value, max });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl TryFrom<Vec<usize>> for BetaSequence {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

/// First 2-switch in lexicographic `(w, x, y, z)` order, else the first
/// induced directed 3-cycle in lexicographic `(x, y, z)` order.
pub fn find_forbidden_configuration(g: &Digraph) -> Option<ForbiddenConfig> {
    find_two_switch(g).or_else(|| find_induced_three_cycle(g))
}

fn find_two_switch(g: &Digraph) -> Option<ForbiddenConfig> {
    let n = g.n();
    for w in 0..n {
        for x in g.successors(w) {
            for y in 0..n {
                if y == w || y == x || g.has_arc(y, x) {
                    continue;
                }
                // z ranges over out(y) \ out(w), minus w itself; x and y are
                // excluded already (a[w][x] = 1, a[y][y] = 0).
                if let Some(z) = first_difference(g.row(y), g.row(w), w) {
                    return Some(ForbiddenConfig::TwoSwitch { w, x, y, z });
                }
            }
        }
    }
    None
}

fn find_induced_three_cycle(g: &Digraph) -> Option<ForbiddenConfig> {
    let n = g.n();
    let t = g.transpose();
    for x in 0..n {
        for y in g.successors(x) {
            if g.has_arc(y, x) {
                continue;
            }
            // z: y->z, z->x, not x->z, not z->y.
            let hit = g
                .successors(y)
                .find(|&z| t.has_arc(x, z) && !g.has_arc(x, z) && !t.has_arc(y, z));
            if let Some(z) = hit {
                return Some(ForbiddenConfig::InducedThreeCycle { x, y, z });
            }
        }
    }
    None
}

/// For all distinct `i < j` and `k`: `a[j][k] = 1` implies `a[i][k] = 1`,
/// evaluated in the digraph's given vertex order.
///
/// Equivalently the ones of every column form a prefix of the rows once the
/// diagonal row is skipped, so only rows adjacent in that skipped order need
/// comparing: `(i, i + 1)` for columns other than `i`, and `(k - 1, k + 1)`
/// for column `k`.
pub fn check_adjacency_condition(g: &Digraph) -> bool {
    let n = g.n();
    for i in 1..n {
        // Row i may only add column i - 1 over row i - 1.
        if first_difference(g.row(i), g.row(i - 1), i - 1).is_some() {
            return false;
        }
    }
    (1..n.saturating_sub(1)).all(|k| !g.has_arc(k + 1, k) || g.has_arc(k - 1, k))
}

/// Every Fulkerson-Chen inequality, `k = 1..=n`, holds with equality.
/// Requires `s` in positive lexicographic order.
pub fn check_fulkerson_chen_equality(s: &DegreeSequence) -> Result<bool> {
    if let Some(i) = s.positive_lex_violation() {
        return Err(Error::NotPositiveLex(i));
    }
    let lhs = fulkerson_chen_lhs(&s.in_degrees());
    let mut prefix = 0u64;
    for (k, pair) in s.iter().enumerate() {
        prefix += pair.out_deg as u64;
        if lhs[k] != prefix {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order-free threshold test: stably sort the vertices into positive
/// lexicographic order of their degree pairs, then check the adjacency
/// condition.
pub fn is_threshold(g: &Digraph) -> bool {
    let (_, p) = positive_lex_sort(&degree_sequence_of(g));
    let canonical = apply_permutation(g, &p).expect("permutation matches vertex count");
    check_adjacency_condition(&canonical)
}

/// The threshold digraph whose column `j` holds ones in the first `beta[j]`
/// rows other than row `j`.
pub fn construct_from_beta(b: &BetaSequence) -> Digraph {
    let n = b.len();
    let mut g = Digraph::empty(n);
    for (j, &beta) in b.values().iter().enumerate() {
        // Rows above the diagonal: i < beta; below: i <= beta.
        for i in (0..n).filter(|&i| i != j).take(beta) {
            g.insert_arc(i, j).expect("off-diagonal");
        }
    }
    g
}

/// Removes the lexicographically first arc whose removal leaves a threshold
/// digraph.
pub fn shrink_arc(g: &Digraph) -> Result<(Arc, Digraph)> {
    if !is_threshold(g) {
        return Err(Error::NotThreshold);
    }
    if g.arc_count() == 0 {
        return Err(Error::NoArc);
    }
    g.arcs()
        .find_map(|e| {
            let mut h = g.clone();
            h.remove_arc(e.from, e.to).expect("arc in range");
            is_threshold(&h).then_some((e, h))
        })
        .ok_or(Error::NotThreshold)
}

/// Adds the lexicographically first absent arc whose addition leaves a
/// threshold digraph.
pub fn grow_arc(g: &Digraph) -> Result<(Arc, Digraph)> {
    if !is_threshold(g) {
        return Err(Error::NotThreshold);
    }
    if g.is_complete() {
        return Err(Error::Complete);
    }
    g.non_arcs()
        .find_map(|e| {
            let mut h = g.clone();
            h.insert_arc(e.from, e.to).expect("non-arc is off-diagonal");
            is_threshold(&h).then_some((e, h))
        })
        .ok_or(Error::NotThreshold)
}
