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

//! The dominance (majorization) partial order on integer sequences.

use crate::error::{Error, Result};

/// `a ⪯ b`: every proper prefix sum of `a` is at most the matching prefix
/// sum of `b`, and the totals agree.
pub fn dominance_leq(a: &[usize], b: &[usize]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let (mut sa, mut sb) = (0u64, 0u64);
    for (&x, &y) in a.iter().zip(b) {
        sa += x as u64;
        sb += y as u64;
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(sa == sb)
}

/// `a ≺ b`: `a ⪯ b` and `a != b`.
pub fn dominance_lt(a: &[usize], b: &[usize]) -> Result<bool> {
    Ok(dominance_leq(a, b)? && a != b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(dominance_leq(&[1, 1, 1, 1], &[3, 1, 0, 0]), Ok(true));
        assert_eq!(dominance_leq(&[3, 1, 0, 0], &[1, 1, 1, 1]), Ok(false));
        assert_eq!(dominance_leq(&[2, 0], &[1, 2]), Ok(false));
        assert_eq!(dominance_leq(&[], &[]), Ok(true));
        assert!(dominance_leq(&[1], &[1, 0]).is_err());
        assert_eq!(dominance_lt(&[2, 2], &[2, 2]), Ok(false));
        assert_eq!(dominance_lt(&[1, 3], &[2, 2]), Ok(true));
    }

    fn triple() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<usize>)> {
        (0usize..7).prop_flat_map(|n| {
            let v = || prop::collection::vec(0usize..4, n);
            (v(), v(), v())
        })
    }

    proptest! {
        #[test]
        fn reflexive((a, _, _) in triple()) {
            prop_assert!(dominance_leq(&a, &a).unwrap());
        }

        #[test]
        fn transitive((a, b, c) in triple()) {
            if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
                prop_assert!(dominance_leq(&a, &c).unwrap());
            }
        }

        #[test]
        fn antisymmetric((a, b, _) in triple()) {
            if dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
                prop_assert_eq!(a, b);
            }
        }
    }
}
