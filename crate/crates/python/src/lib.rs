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

//! Python bindings. Vertex indices are 0-based, matching the Rust API.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::tdigraph as td;

fn value_error(e: td::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sequence(pairs: Vec<(usize, usize)>) -> td::DegreeSequence {
    td::DegreeSequence::from_pairs(pairs)
}

fn pairs(s: &td::DegreeSequence) -> Vec<(usize, usize)> {
    s.iter().map(|p| (p.out_deg, p.in_deg)).collect()
}

/// A loop-free labeled digraph.
#[pyclass(name = "Digraph", module = "pytdigraph", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDigraph {
    inner: td::Digraph,
}

impl From<td::Digraph> for PyDigraph {
    fn from(inner: td::Digraph) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyDigraph {
    /// Builds a digraph from a square 0/1 matrix with zero diagonal.
    #[new]
    fn new(matrix: Vec<Vec<u8>>) -> PyResult<Self> {
        td::Digraph::from_rows(&matrix).map(Self::from).map_err(value_error)
    }

    #[staticmethod]
    fn from_arcs(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        td::Digraph::from_arcs(n, &arcs).map(Self::from).map_err(value_error)
    }

    /// The threshold digraph whose column j has beta[j] ones.
    #[staticmethod]
    fn from_beta(beta: Vec<usize>) -> PyResult<Self> {
        let beta = td::BetaSequence::new(beta).map_err(value_error)?;
        Ok(td::construct_from_beta(&beta).into())
    }

    #[staticmethod]
    fn empty(n: usize) -> Self {
        td::Digraph::empty(n).into()
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        td::Digraph::complete(n).into()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    fn has_arc(&self, u: usize, v: usize) -> PyResult<bool> {
        let n = self.inner.n();
        if u >= n || v >= n {
            return Err(PyValueError::new_err(format!("vertex out of range for {n} vertices")));
        }
        Ok(self.inner.has_arc(u, v))
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().map(|a| (a.from, a.to)).collect()
    }

    fn matrix(&self) -> Vec<Vec<u8>> {
        self.inner.to_rows()
    }

    fn degree_sequence(&self) -> Vec<(usize, usize)> {
        pairs(&td::degree_sequence_of(&self.inner))
    }

    fn is_threshold(&self) -> bool {
        td::is_threshold(&self.inner)
    }

    /// The adjacency condition in the current vertex order.
    fn check_adjacency_condition(&self) -> bool {
        td::check_adjacency_condition(&self.inner)
    }

    /// `(kind, vertices)` of the first forbidden configuration, or None.
    fn forbidden_configuration(&self) -> Option<(&'static str, Vec<usize>)> {
        td::find_forbidden_configuration(&self.inner).map(|c| (c.kind(), c.vertices()))
    }

    fn shrink_arc(&self) -> PyResult<((usize, usize), PyDigraph)> {
        let (e, h) = td::shrink_arc(&self.inner).map_err(value_error)?;
        Ok(((e.from, e.to), h.into()))
    }

    fn grow_arc(&self) -> PyResult<((usize, usize), PyDigraph)> {
        let (e, h) = td::grow_arc(&self.inner).map_err(value_error)?;
        Ok(((e.from, e.to), h.into()))
    }

    /// Relabels vertex i as perm[i].
    fn permute(&self, perm: Vec<usize>) -> PyResult<PyDigraph> {
        let p = td::VertexPermutation::new(perm).map_err(value_error)?;
        td::apply_permutation(&self.inner, &p)
            .map(Self::from)
            .map_err(value_error)
    }

    fn column_prefix_count(&self, column: usize, rows: usize) -> PyResult<usize> {
        td::column_prefix_count(&self.inner, column, rows).map_err(value_error)
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={:?})", self.inner.n(), self.arcs())
    }
}

fn verdict_dict<'py>(py: Python<'py>, v: &td::FcVerdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("digraphical", v.digraphical)?;
    d.set_item("failing_k", v.failing_k)?;
    d.set_item("sum_mismatch", v.sum_mismatch)?;
    d.set_item("degree_out_of_range", v.degree_out_of_range)?;
    Ok(d)
}

/// Stable positive lexicographic sort; returns (sorted, perm) with
/// `sorted[perm[i]] == pairs[i]`.
#[pyfunction]
fn positive_lex_sort(seq: Vec<(usize, usize)>) -> (Vec<(usize, usize)>, Vec<usize>) {
    let (sorted, p) = td::positive_lex_sort(&sequence(seq));
    (pairs(&sorted), p.as_slice().to_vec())
}

#[pyfunction]
fn dominance_leq(a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
    td::dominance_leq(&a, &b).map_err(value_error)
}

#[pyfunction]
fn check_fulkerson_chen<'py>(
    py: Python<'py>,
    seq: Vec<(usize, usize)>,
) -> PyResult<Bound<'py, PyDict>> {
    let v = td::check_fulkerson_chen(&sequence(seq)).map_err(value_error)?;
    verdict_dict(py, &v)
}

#[pyfunction]
fn check_relaxed<'py>(py: Python<'py>, seq: Vec<(usize, usize)>) -> PyResult<Bound<'py, PyDict>> {
    let v = td::check_relaxed(&sequence(seq)).map_err(value_error)?;
    verdict_dict(py, &v)
}

#[pyfunction]
fn check_fulkerson_chen_equality(seq: Vec<(usize, usize)>) -> PyResult<bool> {
    td::check_fulkerson_chen_equality(&sequence(seq)).map_err(value_error)
}

/// Realizes a digraphical sequence in positive lexicographic order.
/// Returns `(digraph, trace)`; trace steps are `(r1, r2, column)`.
#[pyfunction]
#[pyo3(signature = (seq, history = false))]
fn realize<'py>(
    py: Python<'py>,
    seq: Vec<(usize, usize)>,
    history: bool,
) -> PyResult<(PyDigraph, Bound<'py, PyDict>)> {
    let s = sequence(seq);
    let result = if history {
        td::realize_with_history(&s)
    } else {
        td::realize(&s)
    };
    let (g, trace) = result.map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("t_max", trace.t_max)?;
    let steps: Vec<(usize, usize, usize)> =
        trace.steps.iter().map(|s| (s.r1, s.r2, s.column)).collect();
    d.set_item("steps", steps)?;
    d.set_item("beta_history", trace.beta_history)?;
    Ok((g.into(), d))
}

#[pyfunction]
fn count_realizations(seq: Vec<(usize, usize)>) -> PyResult<u64> {
    td::count_realizations(&sequence(seq)).map_err(value_error)
}

#[pyfunction]
fn unique_realization(seq: Vec<(usize, usize)>) -> PyResult<bool> {
    td::unique_realization(&sequence(seq)).map_err(value_error)
}

#[pyfunction]
fn census_threshold(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyDict>> {
    let r = td::census_threshold(n).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("labeled_count", r.labeled_count)?;
    d.set_item("class_count", r.class_count)?;
    d.set_item("lower_bound_numerator", r.lower_bound_numerator)?;
    d.set_item("lower_bound_denominator", r.lower_bound_denominator)?;
    d.set_item("lower_bound", r.lower_bound)?;
    d.set_item("upper_bound", r.upper_bound)?;
    d.set_item("bounds_ok", r.bounds_ok)?;
    Ok(d)
}

#[pyfunction]
fn verify_equivalence(n: usize) -> PyResult<bool> {
    td::verify_equivalence(n).map(|r| r.holds()).map_err(value_error)
}

#[pymodule]
fn pytdigraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(positive_lex_sort, m)?)?;
    m.add_function(wrap_pyfunction!(dominance_leq, m)?)?;
    m.add_function(wrap_pyfunction!(check_fulkerson_chen, m)?)?;
    m.add_function(wrap_pyfunction!(check_relaxed, m)?)?;
    m.add_function(wrap_pyfunction!(check_fulkerson_chen_equality, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(count_realizations, m)?)?;
    m.add_function(wrap_pyfunction!(unique_realization, m)?)?;
    m.add_function(wrap_pyfunction!(census_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(verify_equivalence, m)?)?;
    Ok(())
}
