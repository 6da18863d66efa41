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

//! JSON and text renderings. All vertex indices are 1-based here.

use serde_json::{json, Value};
use tdigraph::oracle::{CensusReport, EquivalenceReport};
use tdigraph::{Arc, DegreeSequence, Digraph, FcVerdict, ForbiddenConfig, RealizationTrace};

pub fn arc(a: Arc) -> Value {
    json!([a.from + 1, a.to + 1])
}

pub fn digraph(g: &Digraph) -> Value {
    json!({
        "n": g.n(),
        "arcs": g.arcs().map(arc).collect::<Vec<_>>(),
        "matrix": g.to_rows(),
    })
}

pub fn degrees(s: &DegreeSequence) -> Value {
    s.iter().map(|p| json!([p.out_deg, p.in_deg])).collect()
}

pub fn degrees_text(s: &DegreeSequence) -> String {
    s.iter().map(|p| format!("{} {}\n", p.out_deg, p.in_deg)).collect()
}

pub fn verdict(v: &FcVerdict) -> Value {
    json!({
        "digraphical": v.digraphical,
        "failing_k": v.failing_k,
        "sum_mismatch": v.sum_mismatch,
        "degree_out_of_range": v.degree_out_of_range,
    })
}

pub fn verdict_text(v: &FcVerdict) -> String {
    if v.digraphical {
        return "digraphical".into();
    }
    let mut reasons = Vec::new();
    if v.degree_out_of_range {
        reasons.push("a degree is at least n".to_string());
    }
    if v.sum_mismatch {
        reasons.push("out-degree and in-degree totals differ".to_string());
    }
    if let Some(k) = v.failing_k {
        reasons.push(format!("inequality fails at k = {k}"));
    }
    format!("not digraphical: {}", reasons.join("; "))
}

pub fn witness(c: &ForbiddenConfig) -> Value {
    json!({
        "kind": c.kind(),
        "vertices": c.vertices().iter().map(|v| v + 1).collect::<Vec<_>>(),
    })
}

/// Trace indices refer to the sorted vertex order.
pub fn trace(t: &RealizationTrace) -> Value {
    json!({
        "t_max": t.t_max,
        "steps": t.steps.iter().map(|s| json!({
            "r1": s.r1 + 1,
            "r2": s.r2 + 1,
            "column": s.column + 1,
        })).collect::<Vec<_>>(),
    })
}

pub fn trace_text(t: &RealizationTrace) -> String {
    let mut s = format!("# t_max = {}\n", t.t_max);
    for (i, step) in t.steps.iter().enumerate() {
        s.push_str(&format!(
            "# step {}: r1 = {}, r2 = {}, column = {}\n",
            i + 1,
            step.r1 + 1,
            step.r2 + 1,
            step.column + 1
        ));
    }
    s
}

pub fn census(r: &CensusReport) -> Value {
    serde_json::to_value(r).expect("census report serializes")
}

pub fn equivalence(r: &EquivalenceReport) -> Value {
    json!({
        "n": r.n,
        "holds": r.holds(),
        "digraphs_checked": r.digraphs_checked,
        "threshold_count": r.threshold_count,
        "disagreement": r.disagreement.as_ref().map(|d| json!({
            "pattern": d.pattern,
            "digraph": digraph(&d.digraph),
            "predicates": d.predicates,
        })),
    })
}

pub fn equivalence_text(r: &EquivalenceReport) -> String {
    match &r.disagreement {
        None => format!(
            "equivalence holds for n = {} ({} digraphs, {} threshold)\n",
            r.n, r.digraphs_checked, r.threshold_count
        ),
        Some(d) => format!(
            "disagreement at pattern {}: {:?}\n{}",
            d.pattern, d.predicates, d.digraph
        ),
    }
}
