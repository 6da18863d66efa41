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

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A bijection on vertex indices. `image(i)` is the new label of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    map: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if v >= map.len() || seen[v] {
                return Err(Error::NotPermutation(map));
            }
            seen[v] = true;
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Self { map: inv }
    }
}

/// Relabels `g` so that vertex `i` becomes vertex `p.image(i)`.
///
/// Arc `(u, v)` is present in the result iff `(p⁻¹(u), p⁻¹(v))` is present
/// in `g`.
pub fn apply_permutation(g: &Digraph, p: &VertexPermutation) -> Result<Digraph> {
    if p.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: p.len(),
        });
    }
    let mut out = Digraph::empty(g.n());
    for arc in g.arcs() {
        out.insert_arc(p.image(arc.from), p.image(arc.to))
            .expect("relabeling preserves loop-freeness");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::degree_sequence_of;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(VertexPermutation::new(vec![0, 0]).is_err());
        assert!(VertexPermutation::new(vec![0, 2]).is_err());
        assert!(VertexPermutation::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn identity_and_swap() {
        let g = Digraph::from_arcs(3, &[(0, 1), (2, 0)]).unwrap();
        assert_eq!(apply_permutation(&g, &VertexPermutation::identity(3)).unwrap(), g);

        let single = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let swap = VertexPermutation::new(vec![1, 0]).unwrap();
        let swapped = apply_permutation(&single, &swap).unwrap();
        assert_eq!(swapped, Digraph::from_arcs(2, &[(1, 0)]).unwrap());
    }

    #[test]
    fn size_mismatch() {
        let g = Digraph::empty(3);
        assert_eq!(
            apply_permutation(&g, &VertexPermutation::identity(2)),
            Err(Error::SizeMismatch { expected: 3, found: 2 })
        );
    }

    fn digraph_and_perm() -> impl Strategy<Value = (Digraph, VertexPermutation)> {
        (0usize..8).prop_flat_map(|n| {
            (
                prop::collection::vec(any::<bool>(), n * n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
                .prop_map(move |(bits, map)| {
                    let mut g = Digraph::empty(n);
                    for i in 0..n {
                        for j in 0..n {
                            if i != j && bits[i * n + j] {
                                g.insert_arc(i, j).unwrap();
                            }
                        }
                    }
                    (g, VertexPermutation::new(map).unwrap())
                })
        })
    }

    proptest! {
        #[test]
        fn relabeling_permutes_degrees((g, p) in digraph_and_perm()) {
            let h = apply_permutation(&g, &p).unwrap();
            prop_assert_eq!(degree_sequence_of(&h), degree_sequence_of(&g).permuted(&p));
            prop_assert_eq!(apply_permutation(&h, &p.inverse()).unwrap(), g);
        }
    }
}
