//! Machine-readable analysis reports.
//!
//! Every report is a JSON object with `command`, `graph` (vertices, edges,
//! clamps) and `result`. Vertices are referred to by name and states are
//! arrays of `-1/0/1` in declaration order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::boolenc::EquivalenceReport;
use crate::dynamics::{Attractor, Trajectory};
use crate::graph::{RegulatoryGraph, Sign, VertexId};
use crate::phenotype::{DecisionMode, PhenotypeDecision, Rule, WitnessOutcome};
use crate::ternary::{Ternary, TernaryState};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub source: String,
    pub sign: Sign,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub vertex: String,
    pub value: Ternary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    pub clamps: Vec<Assignment>,
}

impl GraphSummary {
    pub fn new(graph: &RegulatoryGraph) -> Self {
        GraphSummary {
            vertices: graph.names().to_vec(),
            edges: graph
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    source: graph.name(e.source).to_string(),
                    sign: e.sign,
                    target: graph.name(e.target).to_string(),
                })
                .collect(),
            clamps: graph
                .clamps()
                .map(|(v, value)| Assignment {
                    vertex: graph.name(v).to_string(),
                    value,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttractorRecord {
    pub period: usize,
    /// Cycle order, starting from the least state.
    pub states: Vec<TernaryState>,
}

impl From<&Attractor> for AttractorRecord {
    fn from(a: &Attractor) -> Self {
        AttractorRecord {
            period: a.period(),
            states: a.states().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub rule: Rule,
    pub from: String,
    pub to: String,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Steps {
        states: Vec<TernaryState>,
    },
    Trajectory {
        transient: Vec<TernaryState>,
        cycle: Vec<TernaryState>,
    },
    Attractors {
        state_count: u64,
        attractors: Vec<AttractorRecord>,
    },
    Decision {
        /// `paths`, `literal` or `oracle`.
        mode: String,
        admissible: bool,
        violations: Vec<ViolationRecord>,
        /// Matching attractors, for the oracle mode only.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        attractors: Option<Vec<AttractorRecord>>,
    },
    Witness {
        admissible: bool,
        marking: Vec<Assignment>,
        conflict: Option<String>,
        transient: Vec<TernaryState>,
        attractor: Option<AttractorRecord>,
    },
    Equivalence {
        states_checked: u64,
        success: bool,
        invalid_code_seen: bool,
        counterexample: Option<TernaryState>,
    },
}

fn name(graph: &RegulatoryGraph, v: VertexId) -> String {
    graph.name(v).to_string()
}

impl ReportResult {
    pub fn trajectory(t: &Trajectory) -> Self {
        ReportResult::Trajectory {
            transient: t.transient.clone(),
            cycle: t.cycle.clone(),
        }
    }

    pub fn attractors(state_count: u64, attractors: &[Attractor]) -> Self {
        ReportResult::Attractors {
            state_count,
            attractors: attractors.iter().map(AttractorRecord::from).collect(),
        }
    }

    pub fn decision(graph: &RegulatoryGraph, d: &PhenotypeDecision) -> Self {
        let mode = mode_name(d);
        ReportResult::Decision {
            mode,
            admissible: d.admissible,
            violations: d
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    rule: v.rule,
                    from: name(graph, v.from),
                    to: name(graph, v.to),
                    path: v.path.iter().map(|&x| name(graph, x)).collect(),
                })
                .collect(),
            attractors: None,
        }
    }

    pub fn oracle(attractors: &[Attractor]) -> Self {
        ReportResult::Decision {
            mode: "oracle".into(),
            admissible: !attractors.is_empty(),
            violations: Vec::new(),
            attractors: Some(attractors.iter().map(AttractorRecord::from).collect()),
        }
    }

    pub fn witness(graph: &RegulatoryGraph, w: &WitnessOutcome) -> Self {
        let marks = |m: &[(VertexId, Ternary)]| {
            m.iter()
                .map(|&(v, value)| Assignment {
                    vertex: name(graph, v),
                    value,
                })
                .collect()
        };
        match w {
            WitnessOutcome::Found {
                marking,
                trajectory,
                attractor,
            } => ReportResult::Witness {
                admissible: true,
                marking: marks(&marking.marked),
                conflict: None,
                transient: trajectory.transient.clone(),
                attractor: Some(attractor.into()),
            },
            WitnessOutcome::Inadmissible { marking, conflict } => ReportResult::Witness {
                admissible: false,
                marking: marks(&marking.marked),
                conflict: Some(name(graph, *conflict)),
                transient: Vec::new(),
                attractor: None,
            },
        }
    }

    pub fn equivalence(r: &EquivalenceReport) -> Self {
        ReportResult::Equivalence {
            states_checked: r.states_checked,
            success: r.success(),
            invalid_code_seen: r.invalid_code_seen,
            counterexample: r.counterexample.as_ref().map(|c| c.state.clone()),
        }
    }
}

fn mode_name(d: &PhenotypeDecision) -> String {
    match d.mode {
        DecisionMode::Paths => "paths".into(),
        DecisionMode::Literal => "literal".into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub command: String,
    pub graph: GraphSummary,
    pub result: ReportResult,
}

fn states_block(out: &mut String, label: &str, states: &[TernaryState]) {
    for s in states {
        let _ = writeln!(out, "  {label}{s}");
    }
}

impl AnalysisReport {
    pub fn new(command: &str, graph: &RegulatoryGraph, result: ReportResult) -> Self {
        AnalysisReport {
            command: command.to_string(),
            graph: GraphSummary::new(graph),
            result,
        }
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let order = self.graph.vertices.join(",");
        match &self.result {
            ReportResult::Steps { states } => {
                let _ = writeln!(out, "order ({order})");
                for (i, s) in states.iter().enumerate() {
                    let _ = writeln!(out, "{i:>4}  {s}");
                }
            }
            ReportResult::Trajectory { transient, cycle } => {
                let _ = writeln!(out, "order ({order})");
                let _ = writeln!(out, "transient: {} state(s)", transient.len());
                states_block(&mut out, "", transient);
                let _ = writeln!(out, "cycle: period {}", cycle.len());
                states_block(&mut out, "", cycle);
            }
            ReportResult::Attractors {
                state_count,
                attractors,
            } => {
                let _ = writeln!(
                    out,
                    "order ({order}); {state_count} states, {} attractor(s)",
                    attractors.len()
                );
                for (i, a) in attractors.iter().enumerate() {
                    let states: Vec<String> = a.states.iter().map(|s| s.to_string()).collect();
                    let _ = writeln!(out, "#{i} period {}: {}", a.period, states.join(" -> "));
                }
            }
            ReportResult::Decision {
                mode,
                admissible,
                violations,
                attractors,
            } => {
                let verdict = if *admissible {
                    "admissible"
                } else {
                    "inadmissible"
                };
                let _ = writeln!(out, "{verdict} ({mode})");
                for v in violations {
                    let rule = match v.rule {
                        Rule::ActivatesInactive => "activates inactive target",
                        Rule::InhibitsActive => "inhibits active target",
                    };
                    let _ = writeln!(out, "  {} {rule} {}: {}", v.from, v.to, v.path.join(" "));
                }
                if let Some(atts) = attractors {
                    let _ = writeln!(out, "{} matching attractor(s), order ({order})", atts.len());
                    for a in atts {
                        let states: Vec<String> = a.states.iter().map(|s| s.to_string()).collect();
                        let _ = writeln!(out, "  period {}: {}", a.period, states.join(" -> "));
                    }
                }
            }
            ReportResult::Witness {
                admissible,
                marking,
                conflict,
                transient,
                attractor,
            } => {
                let marks: Vec<String> = marking
                    .iter()
                    .map(|m| format!("{}={}", m.vertex, m.value))
                    .collect();
                let _ = writeln!(out, "marking: {}", marks.join(","));
                if *admissible {
                    let _ = writeln!(out, "order ({order})");
                    let _ = writeln!(out, "transient: {} state(s)", transient.len());
                    states_block(&mut out, "", transient);
                    if let Some(a) = attractor {
                        let _ = writeln!(out, "attractor: period {}", a.period);
                        states_block(&mut out, "", &a.states);
                    }
                } else {
                    let _ = writeln!(
                        out,
                        "inadmissible: conflicting marks on {}",
                        conflict.as_deref().unwrap_or("?")
                    );
                }
            }
            ReportResult::Equivalence {
                states_checked,
                success,
                invalid_code_seen,
                counterexample,
            } => {
                let verdict = if *success { "equivalent" } else { "MISMATCH" };
                let _ = writeln!(out, "{verdict}: {states_checked} state(s) checked");
                if *invalid_code_seen {
                    let _ = writeln!(out, "invalid (1,1) code produced");
                }
                if let Some(s) = counterexample {
                    let _ = writeln!(out, "counterexample: {s}");
                }
            }
        }
        out
    }
}
