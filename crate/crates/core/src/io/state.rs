use crate::error::{Result, SrgError};
use crate::graph::{RegulatoryGraph, VertexId};
use crate::ternary::{Ternary, TernaryState};

fn parse_err(message: impl Into<String>) -> SrgError {
    SrgError::Parse {
        line: 1,
        message: message.into(),
    }
}

pub(crate) fn ternary_value(token: &str) -> Result<Ternary> {
    match token.trim() {
        "-1" => Ok(Ternary::Inactive),
        "0" => Ok(Ternary::Ambiguous),
        "1" | "+1" => Ok(Ternary::Active),
        other => Err(parse_err(format!("`{other}` is not one of -1, 0, 1"))),
    }
}

/// Parses `NAME=VALUE` pairs separated by commas. Names must be distinct.
pub fn parse_assignments(text: &str, graph: &RegulatoryGraph) -> Result<Vec<(VertexId, Ternary)>> {
    let mut out: Vec<(VertexId, Ternary)> = Vec::new();
    let text = text.trim();
    if text.is_empty() {
        return Ok(out);
    }
    for item in text.split(',') {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| parse_err(format!("expected NAME=VALUE, found `{}`", item.trim())))?;
        let v = graph
            .vertex(name.trim())
            .map_err(|_| parse_err(format!("unknown vertex `{}`", name.trim())))?;
        if out.iter().any(|(u, _)| *u == v) {
            return Err(parse_err(format!(
                "vertex `{}` assigned twice",
                name.trim()
            )));
        }
        out.push((v, ternary_value(value)?));
    }
    Ok(out)
}

/// Parses a state in tuple form `(-1,1,0)` (declaration order) or named form
/// `A=-1,B=1,C=0` covering every vertex.
pub fn parse_state(text: &str, graph: &RegulatoryGraph) -> Result<TernaryState> {
    let text = text.trim();
    let n = graph.vertex_count();
    if text.contains('=') {
        let pairs = parse_assignments(text, graph)?;
        if pairs.len() != n {
            let missing: Vec<&str> = graph
                .vertices()
                .filter(|v| !pairs.iter().any(|(u, _)| u == v))
                .map(|v| graph.name(v))
                .collect();
            return Err(parse_err(format!(
                "named state must cover every vertex; missing {}",
                missing.join(", ")
            )));
        }
        let mut values = vec![Ternary::Ambiguous; n];
        for (v, value) in pairs {
            values[v.index()] = value;
        }
        return Ok(TernaryState::new(values));
    }

    let inner = match (text.strip_prefix('('), text.strip_suffix(')')) {
        (Some(_), Some(_)) if text.len() >= 2 => &text[1..text.len() - 1],
        (None, None) => text,
        _ => return Err(parse_err("unbalanced parentheses")),
    };
    let values: Vec<Ternary> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(ternary_value).collect::<Result<_>>()?
    };
    if values.len() != n {
        return Err(parse_err(format!(
            "expected {n} values, found {}",
            values.len()
        )));
    }
    Ok(TernaryState::new(values))
}

/// Tuple form in declaration order.
pub fn format_state(state: &TernaryState) -> String {
    state.to_string()
}

/// Named form, e.g. `A=-1,B=1`.
pub fn format_state_named(state: &TernaryState, graph: &RegulatoryGraph) -> String {
    graph
        .vertices()
        .zip(state.values())
        .map(|(v, value)| format!("{}={}", graph.name(v), value))
        .collect::<Vec<_>>()
        .join(",")
}
