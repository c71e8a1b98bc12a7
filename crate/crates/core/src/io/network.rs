//! Line-oriented network format.
//!
//! ```text
//! # comment
//! node RTK            # optional explicit declaration
//! RTK -> RAS          # activation
//! AKT -| FOXO3        # inhibition
//! clamp RTK = -1      # constant vertex
//! ```
//!
//! Vertices are ordered by first appearance, whether in a `node` line or an
//! edge. Clamps may refer to any vertex of the document.

use std::fmt::Write as _;

use crate::error::{Result, SrgError};
use crate::graph::{GraphBuilder, RegulatoryGraph, Sign};
use crate::ternary::Ternary;

fn parse_err(line: usize, message: impl Into<String>) -> SrgError {
    SrgError::Parse {
        line,
        message: message.into(),
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn identifier(token: &str, line: usize) -> Result<&str> {
    let token = token.trim();
    if is_identifier(token) {
        Ok(token)
    } else if token.is_empty() {
        Err(parse_err(line, "missing vertex name"))
    } else {
        Err(parse_err(line, format!("invalid vertex name `{token}`")))
    }
}

fn find_arrow(line: &str) -> Option<(usize, Sign)> {
    let act = line.find("->").map(|i| (i, Sign::Activation));
    let inh = line.find("-|").map(|i| (i, Sign::Inhibition));
    match (act, inh) {
        (Some(a), Some(b)) => Some(if a.0 < b.0 { a } else { b }),
        (a, b) => a.or(b),
    }
}

/// Parses a clamp value: `-1` or `1` (`+1` accepted).
fn clamp_value(token: &str, line: usize) -> Result<Ternary> {
    match token.trim() {
        "-1" => Ok(Ternary::Inactive),
        "1" | "+1" => Ok(Ternary::Active),
        other => Err(parse_err(
            line,
            format!("clamp value must be -1 or 1, found `{other}`"),
        )),
    }
}

/// Parses the network text format into a graph.
pub fn parse_network(text: &str) -> Result<RegulatoryGraph> {
    let mut builder = GraphBuilder::new();
    let mut clamps: Vec<(usize, String, Ternary)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }

        if let Some((pos, sign)) = find_arrow(line) {
            let source = identifier(&line[..pos], line_no)?;
            let target = identifier(&line[pos + 2..], line_no)?;
            builder.add_edge_at(source, sign, target, line_no)?;
            continue;
        }

        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "node" => {
                let name = identifier(rest, line_no)?;
                if builder.contains(name) {
                    return Err(parse_err(
                        line_no,
                        format!("vertex `{name}` declared twice"),
                    ));
                }
                builder.ensure_vertex(name);
            }
            "clamp" => {
                let (name, value) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err(line_no, "expected `clamp NAME = -1|1`"))?;
                let name = identifier(name, line_no)?;
                clamps.push((line_no, name.to_string(), clamp_value(value, line_no)?));
            }
            _ => {
                return Err(parse_err(
                    line_no,
                    format!("unrecognized statement `{line}`"),
                ))
            }
        }
    }

    for (line_no, name, value) in clamps {
        builder.clamp(&name, value).map_err(|e| match e {
            SrgError::UnknownVertex(n) => {
                parse_err(line_no, format!("clamp on unknown vertex `{n}`"))
            }
            SrgError::ConflictingClamp(n) => {
                parse_err(line_no, format!("conflicting clamps on `{n}`"))
            }
            other => other,
        })?;
    }

    let graph = builder.build();
    if graph.vertex_count() == 0 {
        return Err(parse_err(0, "network declares no vertices"));
    }
    Ok(graph)
}

/// Writes a graph in the network format. `parse_network` inverts this exactly.
pub fn format_network(graph: &RegulatoryGraph) -> String {
    let mut out = String::new();
    for name in graph.names() {
        let _ = writeln!(out, "node {name}");
    }
    for e in graph.edges() {
        let _ = writeln!(
            out,
            "{} {} {}",
            graph.name(e.source),
            e.sign.arrow(),
            graph.name(e.target)
        );
    }
    for (v, value) in graph.clamps() {
        let _ = writeln!(out, "clamp {} = {}", graph.name(v), value);
    }
    out
}
