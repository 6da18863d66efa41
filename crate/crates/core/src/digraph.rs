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

//! Simple labeled digraphs stored as bit-packed adjacency rows.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A directed arc `from -> to` (0-based vertices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
}

impl Arc {
    pub const fn new(from: usize, to: usize) -> Self {
        Self { from, to }
    }
}

/// Renders 1-based, e.g. `(1,2)`.
impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.from + 1, self.to + 1)
    }
}

/// A loop-free digraph on vertices `0..n` with at most one arc per ordered
/// pair. Row `i` of the adjacency matrix is a bitset of out-neighbors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(WORD);
        Self {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            let row = g.row_mut(i);
            for v in 0..n {
                row[v / WORD] |= 1 << (v % WORD);
            }
            row[i / WORD] &= !(1 << (i % WORD));
        }
        g
    }

    /// Builds a digraph from a 0/1 matrix, rejecting non-square input,
    /// entries other than 0 and 1, and nonzero diagonal entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &value) in row.iter().enumerate() {
                match value {
                    0 => {}
                    1 if i == j => return Err(Error::SelfLoop(i)),
                    1 => g.set(i, j),
                    v => {
                        return Err(Error::InvalidEntry {
                            row: i,
                            col: j,
                            value: v as u64,
                        })
                    }
                }
            }
        }
        Ok(g)
    }

    /// Builds a digraph from 0-based `(from, to)` pairs. Duplicates collapse.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in arcs {
            g.insert_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_index(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / WORD] |= 1 << (j % WORD);
    }

    #[inline]
    fn clear(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / WORD] &= !(1 << (j % WORD));
    }

    /// `a_ij`. Panics if either index is out of range.
    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "vertex out of range");
        self.bits[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    /// Adds `u -> v`; returns whether the arc was absent before.
    pub fn insert_arc(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_index(u)?;
        self.check_index(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = !self.has_arc(u, v);
        self.set(u, v);
        Ok(fresh)
    }

    /// Removes `u -> v`; returns whether the arc was present.
    pub fn remove_arc(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_index(u)?;
        self.check_index(v)?;
        let present = self.has_arc(u, v);
        self.clear(u, v);
        Ok(present)
    }

    pub fn arc_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.arc_count() == self.n * self.n.saturating_sub(1)
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.out_degree(i)).collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut ins = vec![0; self.n];
        for i in 0..self.n {
            for j in ones(self.row(i)) {
                ins[j] += 1;
            }
        }
        ins
    }

    /// Out-neighbors of `i` in increasing order.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(i))
    }

    /// All arcs in lexicographic `(from, to)` order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n).flat_map(move |i| ones(self.row(i)).map(move |j| Arc::new(i, j)))
    }

    /// Absent arcs `(i, j)`, `i != j`, in lexicographic order.
    pub fn non_arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n)
                .filter(move |&j| j != i && !self.has_arc(i, j))
                .map(move |j| Arc::new(i, j))
        })
    }

    /// The digraph with every arc reversed.
    pub fn transpose(&self) -> Digraph {
        let mut t = Digraph::empty(self.n);
        for a in self.arcs() {
            t.set(a.to, a.from);
        }
        t
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.has_arc(i, j) as u8).collect())
            .collect()
    }

    /// Graphviz rendering with vertices named `v1..vn`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n");
        for i in 0..self.n {
            s.push_str(&format!("  v{};\n", i + 1));
        }
        for a in self.arcs() {
            s.push_str(&format!("  v{} -> v{};\n", a.from + 1, a.to + 1));
        }
        s.push_str("}\n");
        s
    }
}

/// Indices of set bits in a row, ascending.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * WORD + b)
            }
        })
    })
}

/// Lowest set bit of `a & !b`, skipping `skip`.
pub(crate) fn first_difference(a: &[u64], b: &[u64], skip: usize) -> Option<usize> {
    a.iter().zip(b).enumerate().find_map(|(w, (&x, &y))| {
        let mut word = x & !y;
        if skip / WORD == w {
            word &= !(1 << (skip % WORD));
        }
        (word != 0).then(|| w * WORD + word.trailing_zeros() as usize)
    })
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().map(|a| (a.from, a.to)).collect::<Vec<_>>())
            .finish()
    }
}

/// The plain-text matrix format: `n` on the first line, then `n` rows.
impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.has_arc(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_matrices() {
        assert_eq!(
            Digraph::from_rows(&[vec![1u8, 0], vec![0, 0]]),
            Err(Error::SelfLoop(0))
        );
        assert_eq!(
            Digraph::from_rows(&[vec![0u8, 2], vec![0, 0]]),
            Err(Error::InvalidEntry { row: 0, col: 1, value: 2 })
        );
        assert!(matches!(
            Digraph::from_rows(&[vec![0u8, 1], vec![0]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert_eq!(Digraph::from_arcs(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(Digraph::from_arcs(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn complete_and_empty() {
        for n in [0, 1, 2, 5, 63, 64, 65, 130] {
            let k = Digraph::complete(n);
            assert_eq!(k.arc_count(), n * n.saturating_sub(1));
            assert!(k.is_complete());
            assert_eq!(k.non_arcs().count(), 0);
            assert_eq!(Digraph::empty(n).arc_count(), 0);
            assert!((0..n).all(|i| !k.has_arc(i, i)));
        }
    }

    #[test]
    fn wide_rows() {
        let mut g = Digraph::empty(130);
        g.insert_arc(3, 129).unwrap();
        g.insert_arc(129, 64).unwrap();
        g.insert_arc(0, 63).unwrap();
        assert_eq!(
            g.arcs().collect::<Vec<_>>(),
            vec![Arc::new(0, 63), Arc::new(3, 129), Arc::new(129, 64)]
        );
        assert_eq!(g.in_degrees()[64], 1);
        assert_eq!(g.out_degree(129), 1);
        assert_eq!(g.transpose().arcs().next(), Some(Arc::new(63, 0)));
    }

    #[test]
    fn first_difference_skips() {
        let a = [0b1011u64];
        let b = [0b0001u64];
        assert_eq!(first_difference(&a, &b, 1), Some(3));
        assert_eq!(first_difference(&a, &b, 0), Some(1));
        assert_eq!(first_difference(&b, &a, 0), None);
    }

    #[test]
    fn text_and_dot() {
        let g = Digraph::from_arcs(3, &[(0, 1), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.to_string(), "3\n0 1 0\n1 0 0\n1 0 0\n");
        assert_eq!(
            g.to_dot(),
            "digraph G {\n  v1;\n  v2;\n  v3;\n  v1 -> v2;\n  v2 -> v1;\n  v3 -> v1;\n}\n"
        );
        assert_eq!(Arc::new(0, 1).to_string(), "(1,2)");
    }
}
