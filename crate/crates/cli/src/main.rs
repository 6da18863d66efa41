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

//! `tdigraph`: degree-sequence and threshold-digraph tool.
//!
//! Exit status: 0 affirmative verdict or successful construction, 1 negative
//! verdict, 2 usage, input or parse error.

mod render;

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tdigraph::format::{parse_beta_with_limit, parse_digraph_with_limit, parse_sequence_with_limit};
use tdigraph::{
    apply_permutation, census_threshold, check_fulkerson_chen, check_relaxed, construct_from_beta,
    degree_sequence_of, find_forbidden_configuration, grow_arc, is_threshold, positive_lex_sort,
    realize_with_history, shrink_arc, verify_equivalence, DegreeSequence, Digraph, Error,
    DEFAULT_MAX_VERTICES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "tdigraph", version, about = "Digraph degree sequences and threshold digraphs")]
struct Cli {
    /// Output format; dot is accepted by commands that produce a digraph.
    #[arg(long, short = 'f', value_enum, default_value = "text", global = true)]
    format: OutputFormat,

    /// Largest vertex count accepted from input files.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES, global = true)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether a degree sequence is digraphical.
    Check {
        #[arg(default_value = "-")]
        input: String,
        /// Only require nonincreasing out-degrees instead of full positive
        /// lexicographic order.
        #[arg(long)]
        relaxed: bool,
    },
    /// Construct a digraph realizing a degree sequence.
    Realize {
        #[arg(default_value = "-")]
        input: String,
        /// Include the column-move trace.
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether a digraph is threshold.
    ThresholdCheck {
        #[arg(default_value = "-")]
        input: String,
        /// Also print the digraph's degree sequence.
        #[arg(long)]
        degrees: bool,
    },
    /// Build the threshold digraph of a beta sequence.
    FromBeta {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Remove one arc from a threshold digraph, keeping it threshold.
    Shrink {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Add one arc to a threshold digraph, keeping it threshold.
    Grow {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Count threshold digraphs on n vertices and check the TD(n) bounds.
    Census { n: usize },
    /// Exhaustively check that the threshold characterizations agree.
    Verify { n: usize },
}

impl Command {
    fn produces_digraph(&self) -> bool {
        matches!(
            self,
            Command::Realize { .. } | Command::FromBeta { .. } | Command::Shrink { .. } | Command::Grow { .. }
        )
    }
}

/// Errors that map to exit status 2.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String, io::Error),
    Input(String, Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Io(path, e) => write!(f, "{path}: {e}"),
            Failure::Input(path, e) if path == "-" => write!(f, "<stdin>: {e}"),
            Failure::Input(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

struct Outcome {
    affirmative: bool,
    output: String,
}

impl Outcome {
    fn yes(output: String) -> Self {
        Self { affirmative: true, output }
    }

    fn no(output: String) -> Self {
        Self { affirmative: false, output }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io("<stdin>".into(), e))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(path.into(), e))
    }
}

fn json_line(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("json value serializes");
    s.push('\n');
    s
}

fn render_digraph(g: &Digraph, format: OutputFormat, header: &str, extra: Value) -> String {
    match format {
        OutputFormat::Text => format!("{header}{g}"),
        OutputFormat::Dot => g.to_dot(),
        OutputFormat::Json => {
            let mut v = extra;
            v["digraph"] = render::digraph(g);
            json_line(v)
        }
    }
}

struct Runner {
    format: OutputFormat,
    max_vertices: usize,
}

impl Runner {
    fn sequence(&self, path: &str) -> Result<DegreeSequence, Failure> {
        parse_sequence_with_limit(&read_input(path)?, self.max_vertices)
            .map_err(|e| Failure::Input(path.into(), e))
    }

    fn digraph(&self, path: &str) -> Result<Digraph, Failure> {
        parse_digraph_with_limit(&read_input(path)?, self.max_vertices)
            .map_err(|e| Failure::Input(path.into(), e))
    }

    fn run(&self, command: &Command) -> Result<Outcome, Failure> {
        match command {
            Command::Check { input, relaxed } => self.check(input, *relaxed),
            Command::Realize { input, trace } => self.realize(input, *trace),
            Command::ThresholdCheck { input, degrees } => self.threshold_check(input, *degrees),
            Command::FromBeta { input } => {
                let beta = parse_beta_with_limit(&read_input(input)?, self.max_vertices)
                    .map_err(|e| Failure::Input(input.clone(), e))?;
                let g = construct_from_beta(&beta);
                Ok(Outcome::yes(render_digraph(&g, self.format, "", json!({}))))
            }
            Command::Shrink { input } => self.arc_move(input, true),
            Command::Grow { input } => self.arc_move(input, false),
            Command::Census { n } => {
                let r = census_threshold(*n).map_err(|e| Failure::Usage(e.to_string()))?;
                let output = match self.format {
                    OutputFormat::Json => json_line(render::census(&r)),
                    _ => r.to_table(),
                };
                Ok(Outcome { affirmative: r.bounds_ok, output })
            }
            Command::Verify { n } => {
                let r = verify_equivalence(*n).map_err(|e| Failure::Usage(e.to_string()))?;
                let output = match self.format {
                    OutputFormat::Json => json_line(render::equivalence(&r)),
                    _ => render::equivalence_text(&r),
                };
                Ok(Outcome { affirmative: r.holds(), output })
            }
        }
    }

    fn check(&self, input: &str, relaxed: bool) -> Result<Outcome, Failure> {
        let mut s = self.sequence(input)?;
        let needs_sort = if relaxed {
            s.out_increase().is_some()
        } else {
            !s.is_positive_lex()
        };
        if needs_sort {
            eprintln!("note: input sorted into positive lexicographic order");
            s = positive_lex_sort(&s).0;
        }
        let verdict = if relaxed {
            check_relaxed(&s)
        } else {
            check_fulkerson_chen(&s)
        }
        .expect("input ordered above");
        let output = match self.format {
            OutputFormat::Json => json_line(render::verdict(&verdict)),
            _ => format!("{}\n", render::verdict_text(&verdict)),
        };
        Ok(Outcome { affirmative: verdict.digraphical, output })
    }

    fn realize(&self, input: &str, with_trace: bool) -> Result<Outcome, Failure> {
        let s = self.sequence(input)?;
        let (sorted, p) = positive_lex_sort(&s);
        let verdict = check_fulkerson_chen(&sorted).expect("sorted");
        if !verdict.digraphical {
            let output = match self.format {
                OutputFormat::Json => json_line(render::verdict(&verdict)),
                _ => format!("{}\n", render::verdict_text(&verdict)),
            };
            return Ok(Outcome::no(output));
        }
        let (h, trace) = realize_with_history(&sorted).expect("digraphical");
        // Back to the input's vertex order.
        let g = apply_permutation(&h, &p.inverse()).expect("sizes match");
        let (header, extra) = if with_trace {
            let order: Vec<usize> = (0..s.len()).map(|i| p.image(i) + 1).collect();
            let mut t = render::trace(&trace);
            t["sorted_position"] = json!(order);
            t["beta_history"] = json!(trace.beta_history);
            (render::trace_text(&trace), json!({ "trace": t }))
        } else {
            (String::new(), json!({}))
        };
        Ok(Outcome::yes(render_digraph(&g, self.format, &header, extra)))
    }

    fn threshold_check(&self, input: &str, with_degrees: bool) -> Result<Outcome, Failure> {
        let g = self.digraph(input)?;
        let threshold = is_threshold(&g);
        let witness = find_forbidden_configuration(&g);
        debug_assert_eq!(threshold, witness.is_none());
        let s = degree_sequence_of(&g);
        let output = match self.format {
            OutputFormat::Json => {
                let mut v = json!({
                    "threshold": threshold,
                    "witness": witness.as_ref().map(render::witness),
                });
                if with_degrees {
                    v["degrees"] = render::degrees(&s);
                }
                json_line(v)
            }
            _ => {
                let verdict = match &witness {
                    None => "threshold".to_string(),
                    Some(c) => format!("not threshold: {c}"),
                };
                if with_degrees {
                    format!("# {verdict}\n{}", render::degrees_text(&s))
                } else {
                    format!("{verdict}\n")
                }
            }
        };
        Ok(Outcome { affirmative: threshold, output })
    }

    fn arc_move(&self, input: &str, shrink: bool) -> Result<Outcome, Failure> {
        let g = self.digraph(input)?;
        let result = if shrink { shrink_arc(&g) } else { grow_arc(&g) };
        match result {
            Ok((e, h)) => {
                let verb = if shrink { "removed" } else { "added" };
                let header = format!("# {verb} arc {e}\n");
                let extra = json!({ "arc": render::arc(e), "action": verb });
                Ok(Outcome::yes(render_digraph(&h, self.format, &header, extra)))
            }
            Err(e @ (Error::NotThreshold | Error::NoArc | Error::Complete)) => {
                let output = match self.format {
                    OutputFormat::Json => json_line(json!({ "error": e.to_string() })),
                    _ => format!("{e}\n"),
                };
                Ok(Outcome::no(output))
            }
            Err(e) => Err(Failure::Input(input.into(), e)),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.format == OutputFormat::Dot && !cli.command.produces_digraph() {
        eprintln!("error: --format dot is only valid for commands that produce a digraph");
        return ExitCode::from(2);
    }
    let runner = Runner {
        format: cli.format,
        max_vertices: cli.max_vertices,
    };
    match runner.run(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(if outcome.affirmative { 0 } else { 1 })
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(2)
        }
    }
}
