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

//! Plain-text input formats.
//!
//! * Degree sequence: one vertex per line, `out in`.
//! * Digraph: a line holding `n`, then `n` rows of `n` entries in `{0, 1}`.
//! * Beta sequence: whitespace-separated integers, any line layout.
//!
//! In all three, blank lines and lines starting with `#` are skipped.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::sequence::{DegreePair, DegreeSequence};
use crate::threshold::BetaSequence;
use crate::DEFAULT_MAX_VERTICES;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_uint(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a nonnegative integer, found {token:?}"),
    })
}

fn check_limit(n: usize, max: usize, line: usize) -> Result<()> {
    if n > max {
        Err(Error::Parse {
            line,
            message: format!("{n} vertices exceeds the limit of {max}"),
        })
    } else {
        Ok(())
    }
}

pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    parse_sequence_with_limit(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_sequence_with_limit(text: &str, max_vertices: usize) -> Result<DegreeSequence> {
    let mut pairs = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected \"out in\", found {} fields", tokens.len()),
            });
        }
        pairs.push(DegreePair::new(
            parse_uint(tokens[0], line)?,
            parse_uint(tokens[1], line)?,
        ));
        check_limit(pairs.len(), max_vertices, line)?;
    }
    Ok(DegreeSequence::new(pairs))
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    parse_digraph_with_limit(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_digraph_with_limit(text: &str, max_vertices: usize) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let Some((first, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        });
    };
    let n = parse_uint(header, first)?;
    check_limit(n, max_vertices, first)?;
    let mut g = Digraph::empty(n);
    let mut last = first;
    for i in 0..n {
        let Some((line, content)) = lines.next() else {
            return Err(Error::Parse {
                line: last + 1,
                message: format!("expected {n} matrix rows, found {i}"),
            });
        };
        last = line;
        let mut count = 0;
        for (j, token) in content.split_whitespace().enumerate() {
            count += 1;
            if j >= n {
                continue;
            }
            match token {
                "0" => {}
                "1" if i == j => {
                    return Err(Error::Parse {
                        line,
                        message: format!("self-loop at vertex {}", i + 1),
                    })
                }
                "1" => {
                    g.insert_arc(i, j)?;
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected 0 or 1, found {other:?}"),
                    })
                }
            }
        }
        if count != n {
            return Err(Error::Parse {
                line,
                message: format!("expected {n} entries, found {count}"),
            });
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: format!("trailing content after {n} matrix rows"),
        });
    }
    Ok(g)
}

pub fn parse_beta(text: &str) -> Result<BetaSequence> {
    parse_beta_with_limit(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_beta_with_limit(text: &str, max_vertices: usize) -> Result<BetaSequence> {
    let mut values = Vec::new();
    for (line, content) in content_lines(text) {
        for token in content.split_whitespace() {
            values.push(parse_uint(token, line)?);
            check_limit(values.len(), max_vertices, line)?;
        }
    }
    BetaSequence::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        let s = parse_sequence("# header\n1 1\n\n  2 0  \n").unwrap();
        assert_eq!(s, DegreeSequence::from_pairs([(1, 1), (2, 0)]));
        assert_eq!(parse_sequence("").unwrap().len(), 0);
        assert_eq!(
            parse_sequence("1 1\n1\n"),
            Err(Error::Parse {
                line: 2,
                message: "expected \"out in\", found 1 fields".into()
            })
        );
        assert!(matches!(parse_sequence("1 -1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_sequence_with_limit("0 0\n0 0\n0 0\n", 2),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn digraphs() {
        let g = parse_digraph("3\n0 1 0\n1 0 0\n1 0 0\n").unwrap();
        assert_eq!(g.to_string(), "3\n0 1 0\n1 0 0\n1 0 0\n");
        assert_eq!(parse_digraph(&g.to_string()).unwrap(), g);
        assert_eq!(parse_digraph("0\n").unwrap().n(), 0);
        assert!(matches!(parse_digraph("2\n1 0\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("2\n0 2\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("2\n0 1 0\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("2\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_digraph("1\n0\n0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_digraph(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn betas() {
        assert_eq!(parse_beta("2 1 0").unwrap().values(), &[2, 1, 0]);
        assert_eq!(parse_beta("2\n1\n0\n").unwrap().values(), &[2, 1, 0]);
        assert!(matches!(parse_beta("3 1 0"), Err(Error::BetaOutOfRange { index: 0, .. })));
    }
}
