use std::fmt::Write as _;

use crate::dynamics::TransitionSystem;
use crate::graph::{RegulatoryGraph, Sign};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the regulatory graph: activation edges with `normal` arrowheads,
/// inhibition edges with `tee`. Clamped vertices are drawn as double octagons.
pub fn graph_to_dot(graph: &RegulatoryGraph) -> String {
    let mut out = String::from("digraph srg {\n  node [shape=box];\n");
    for v in graph.vertices() {
        let name = graph.name(v);
        match graph.clamp(v) {
            Some(c) => {
                let _ = writeln!(
                    out,
                    "  {} [label={}, shape=doubleoctagon];",
                    quote(name),
                    quote(&format!("{name} = {c}"))
                );
            }
            None => {
                let _ = writeln!(out, "  {};", quote(name));
            }
        }
    }
    for e in graph.edges() {
        let (head, color) = match e.sign {
            Sign::Activation => ("normal", "darkgreen"),
            Sign::Inhibition => ("tee", "red"),
        };
        let _ = writeln!(
            out,
            "  {} -> {} [arrowhead={head}, color={color}];",
            quote(graph.name(e.source)),
            quote(graph.name(e.target))
        );
    }
    out.push_str("}\n");
    out
}

/// Renders the state-transition graph, one node per state labelled by its tuple.
pub fn sts_to_dot(sts: &TransitionSystem) -> String {
    let mut out = String::from("digraph sts {\n  node [shape=plaintext];\n");
    for i in 0..sts.size() {
        let _ = writeln!(out, "  {};", quote(&sts.state(i).to_string()));
    }
    for (from, to) in sts.transitions() {
        let _ = writeln!(
            out,
            "  {} -> {};",
            quote(&from.to_string()),
            quote(&to.to_string())
        );
    }
    out.push_str("}\n");
    out
}
