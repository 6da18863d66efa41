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

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tdigraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tdigraph");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn check_digraphical() {
    let o = run(&["check", "--format", "json"], "1 1\n1 1\n1 1\n1 1\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["digraphical"], Value::Bool(true));
}

#[test]
fn check_not_digraphical() {
    let o = run(&["check", "-f", "json"], "2 0\n1 2\n0 1\n");
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["digraphical"], Value::Bool(false));
    assert_eq!(v["failing_k"], 2);
    let o = run(&["check"], "2 0\n1 2\n0 1\n");
    assert_eq!(stdout(&o), "not digraphical: inequality fails at k = 2\n");
}

#[test]
fn check_sorts_unsorted_input() {
    let o = run(&["check"], "0 1\n1 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sorted"));
    let o = run(&["check", "--relaxed", "-f", "json"], "1 0\n1 2\n1 1\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stderr.is_empty());
}

#[test]
fn from_beta_dot() {
    let o = run(&["from-beta", "--format", "dot"], "2 1 0\n");
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    for arc in ["v1 -> v2;", "v2 -> v1;", "v3 -> v1;"] {
        assert!(dot.contains(arc), "{dot}");
    }
    assert_eq!(dot.matches("->").count(), 3);
}

#[test]
fn from_beta_out_of_range() {
    let o = run(&["from-beta"], "3 1 0\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_report_line() {
    let o = run(&["check"], "1 1\n1 one\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = run(&["threshold-check"], "2\n1 0\n0 0\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unreadable_file() {
    let o = run(&["check", "/nonexistent/sequence.txt"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_rejected_for_verdict_commands() {
    let o = run(&["check", "-f", "dot"], "0 0\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn realize_round_trip() {
    let input = "0 1\n2 1\n1 1\n1 2\n1 0\n";
    let o = run(&["realize"], input);
    assert_eq!(o.status.code(), Some(0));
    let back = run(&["threshold-check", "--degrees"], &stdout(&o));
    let degrees: String = stdout(&back)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(degrees, input);
}

#[test]
fn realize_trace_json() {
    let o = run(&["realize", "--trace", "-f", "json"], "1 1\n1 1\n1 1\n1 1\n");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["trace"]["t_max"], 2);
    assert_eq!(
        v["trace"]["steps"],
        serde_json::json!([
            {"r1": 1, "r2": 4, "column": 2},
            {"r1": 1, "r2": 3, "column": 4}
        ])
    );
    assert_eq!(v["digraph"]["arcs"], serde_json::json!([[1, 3], [2, 1], [3, 4], [4, 2]]));
}

#[test]
fn realize_rejects_non_digraphical() {
    let o = run(&["realize", "-f", "json"], "2 0\n1 2\n0 1\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["failing_k"], 2);
}

#[test]
fn threshold_check_witness() {
    let o = run(&["threshold-check", "-f", "json"], "4\n0 1 0 0\n0 0 0 0\n0 0 0 1\n0 0 0 0\n");
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["threshold"], Value::Bool(false));
    assert_eq!(v["witness"]["kind"], "TwoSwitch");
    assert_eq!(v["witness"]["vertices"], serde_json::json!([1, 2, 3, 4]));

    let o = run(&["threshold-check"], "3\n0 1 0\n1 0 0\n1 0 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "threshold\n");
}

#[test]
fn shrink_and_grow() {
    let g = "3\n0 1 0\n1 0 0\n1 0 0\n";
    let o = run(&["shrink"], g);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "# removed arc (1,2)\n3\n0 0 0\n1 0 0\n1 0 0\n");
    let o = run(&["grow", "-f", "json"], g);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["action"], "added");

    let o = run(&["shrink"], "2\n0 0\n0 0\n");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["grow"], "2\n0 1\n1 0\n");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["grow"], "4\n0 1 0 0\n0 0 0 0\n0 0 0 1\n0 0 0 0\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn census_and_verify() {
    let o = run(&["census", "3", "-f", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["labeled_count"], 27);
    assert_eq!(v["upper_bound"], 27);
    assert_eq!(v["bounds_ok"], Value::Bool(true));

    let o = run(&["verify", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("equivalence holds for n = 3"));

    assert_eq!(run(&["census", "9"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "5"], "").status.code(), Some(2));
}

#[test]
fn json_is_deterministic() {
    let input = "3 2\n2 2\n2 1\n1 2\n1 2\n0 0\n";
    let a = run(&["realize", "--trace", "-f", "json"], input);
    let b = run(&["realize", "--trace", "-f", "json"], input);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reads_file_argument() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# two vertices\n1 1\n1 1").unwrap();
    let o = run(&["check", file.path().to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "digraphical\n");
}

#[test]
fn max_vertices_guard() {
    let o = run(&["check", "--max-vertices", "2"], "0 0\n0 0\n0 0\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_command_is_usage_error() {
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}
