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

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdigraph::realization::fulkerson_chen_lhs_naive;
use tdigraph::realization::fulkerson_chen_lhs;
use tdigraph::{
    check_fulkerson_chen, construct_from_beta, degree_sequence_of, is_threshold,
    positive_lex_sort, realize, BetaSequence, DegreeSequence, Digraph,
};

fn random_digraph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Digraph {
    let mut g = Digraph::empty(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(density) {
                g.insert_arc(i, j).unwrap();
            }
        }
    }
    g
}

#[test]
fn realizes_a_thousand_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = random_digraph(&mut rng, 1000, 0.3);
    let s = positive_lex_sort(&degree_sequence_of(&g)).0;
    let (h, trace) = realize(&s).unwrap();
    assert_eq!(degree_sequence_of(&h), s);
    assert_eq!(trace.steps.len(), trace.t_max);
}

#[test]
fn fast_inequalities_match_naive_at_scale() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [1, 2, 63, 64, 65, 500] {
        let ins: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n + 3)).collect();
        assert_eq!(fulkerson_chen_lhs(&ins), fulkerson_chen_lhs_naive(&ins), "n = {n}");
    }
}

#[test]
fn wide_threshold_digraph() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let n = 300;
    let beta = BetaSequence::new((0..n).map(|_| rng.gen_range(0..n)).collect()).unwrap();
    let g = construct_from_beta(&beta);
    assert!(is_threshold(&g));
    let s = positive_lex_sort(&degree_sequence_of(&g)).0;
    let (_, trace) = realize(&s).unwrap();
    assert_eq!(trace.t_max, 0);
}

#[test]
fn degenerate_sizes() {
    for n in 0..=1 {
        let s = DegreeSequence::from_pairs(vec![(0, 0); n]);
        assert!(check_fulkerson_chen(&s).unwrap().digraphical);
        let (g, trace) = realize(&s).unwrap();
        assert_eq!(g, Digraph::empty(n));
        assert_eq!(trace.t_max, 0);
        assert!(is_threshold(&g));
    }
}
