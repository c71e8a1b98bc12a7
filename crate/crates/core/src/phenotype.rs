//! Phenotype attractors: deciding whether some attractor holds a fixed
//! active/inactive assignment on a target set, and constructing one.
//!
//! The structural decision works on the unclamped graph alone. An attractor
//! with phenotype `p` exists iff
//!
//! * (a) no activation path of length >= 1 leads from an active target to an
//!   inactive target, and
//! * (b) no activation path of length >= 0 followed by one inhibition edge
//!   leads from an active target to an active target.
//!
//! [`DecisionMode::Literal`] instead checks the weaker, target-local form of
//! (b) in which only direct inhibition predecessors inside the target set are
//! considered. It is kept for diagnostics; it admits phenotypes that have no
//! attractor (see the tests).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::dynamics::{enumerate_attractors, simulate, Attractor, Trajectory};
use crate::error::{Result, SrgError};
use crate::graph::{RegulatoryGraph, VertexId};
use crate::io::parse_assignments;
use crate::ternary::{Ternary, TernaryState};

/// An active/inactive assignment on a set of target vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phenotype {
    assignment: Vec<(VertexId, Ternary)>,
}

impl Phenotype {
    pub fn new(graph: &RegulatoryGraph, assignment: Vec<(VertexId, Ternary)>) -> Result<Self> {
        for (i, &(v, value)) in assignment.iter().enumerate() {
            graph.check_vertex(v)?;
            if value == Ternary::Ambiguous {
                return Err(SrgError::InvalidPhenotype(format!(
                    "target `{}` must be -1 or 1",
                    graph.name(v)
                )));
            }
            if assignment[..i].iter().any(|(u, _)| *u == v) {
                return Err(SrgError::InvalidPhenotype(format!(
                    "target `{}` listed twice",
                    graph.name(v)
                )));
            }
        }
        Ok(Phenotype { assignment })
    }

    /// The empty phenotype.
    pub fn empty() -> Self {
        Phenotype {
            assignment: Vec::new(),
        }
    }

    /// Parses `A=1,B=-1`.
    pub fn parse(text: &str, graph: &RegulatoryGraph) -> Result<Self> {
        Self::new(graph, parse_assignments(text, graph)?)
    }

    pub fn assignment(&self) -> &[(VertexId, Ternary)] {
        &self.assignment
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn value(&self, v: VertexId) -> Option<Ternary> {
        self.assignment
            .iter()
            .find(|(u, _)| *u == v)
            .map(|&(_, value)| value)
    }

    pub fn targets(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.assignment.iter().map(|&(v, _)| v)
    }

    fn with_value(&self, value: Ternary) -> impl Iterator<Item = VertexId> + '_ {
        self.assignment
            .iter()
            .filter(move |&&(_, x)| x == value)
            .map(|&(v, _)| v)
    }

    pub fn active_targets(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.with_value(Ternary::Active)
    }

    pub fn inactive_targets(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.with_value(Ternary::Inactive)
    }

    /// True iff `state` agrees with the phenotype on every target.
    pub fn matches(&self, state: &TernaryState) -> bool {
        self.assignment
            .iter()
            .all(|&(v, value)| state.get(v.index()) == Some(value))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    Backward,
}

fn activation_neighbours(graph: &RegulatoryGraph, v: usize, direction: Direction) -> &[usize] {
    match direction {
        Direction::Forward => graph.activation_successors(VertexId(v)),
        Direction::Backward => graph.activators(VertexId(v)),
    }
}

/// Breadth-first search over activation edges, returning parent pointers.
/// Sources are their own parents.
fn activation_bfs(
    graph: &RegulatoryGraph,
    sources: &[VertexId],
    direction: Direction,
) -> Vec<Option<usize>> {
    let mut parent = vec![None; graph.vertex_count()];
    let mut queue = VecDeque::new();
    for s in sources {
        if parent[s.index()].is_none() {
            parent[s.index()] = Some(s.index());
            queue.push_back(s.index());
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in activation_neighbours(graph, x, direction) {
            if parent[y].is_none() {
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    parent
}

fn path_to(parent: &[Option<usize>], end: usize) -> Vec<VertexId> {
    let mut path = vec![VertexId(end)];
    let mut x = end;
    while let Some(p) = parent[x] {
        if p == x {
            break;
        }
        path.push(VertexId(p));
        x = p;
    }
    path.reverse();
    path
}

/// Vertices joined to `sources` by activation paths of length >= 0, in
/// ascending order. `Forward` follows edges out of the sources, `Backward`
/// finds the activation-ancestors of the sources.
pub fn activation_reachable(
    graph: &RegulatoryGraph,
    sources: &[VertexId],
    direction: Direction,
) -> Result<Vec<VertexId>> {
    sources.iter().try_for_each(|&s| graph.check_vertex(s))?;
    Ok(activation_bfs(graph, sources, direction)
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_some())
        .map(|(i, _)| VertexId(i))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionMode {
    /// Path conditions over arbitrary intermediate vertices (authoritative).
    Paths,
    /// Target-local reading of the conditions.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// An activation path from an active target reaches an inactive target.
    ActivatesInactive,
    /// An active target inhibits an active target, directly or at the end of
    /// an activation path.
    InhibitsActive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    /// The active target the offending influence starts from.
    pub from: VertexId,
    /// The target whose phenotype value cannot be kept.
    pub to: VertexId,
    /// Shortest witnessing path from `from` to `to`. All edges are
    /// activations, except the last one for [`Rule::InhibitsActive`].
    pub path: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhenotypeDecision {
    pub mode: DecisionMode,
    pub admissible: bool,
    pub violations: Vec<Violation>,
}

fn require_unclamped(graph: &RegulatoryGraph) -> Result<()> {
    if graph.has_clamps() {
        Err(SrgError::Unsupported(
            "structural phenotype decisions assume an unclamped graph".into(),
        ))
    } else {
        Ok(())
    }
}

/// Decides whether an attractor with the given phenotype exists.
pub fn decide_phenotype(
    graph: &RegulatoryGraph,
    phenotype: &Phenotype,
    mode: DecisionMode,
) -> Result<PhenotypeDecision> {
    require_unclamped(graph)?;
    phenotype
        .targets()
        .try_for_each(|v| graph.check_vertex(v))?;

    let mut violations = Vec::new();
    for s in phenotype.active_targets() {
        let parent = activation_bfs(graph, &[s], Direction::Forward);

        // (a): an inactive target reached by a non-empty activation path
        for t in phenotype.inactive_targets() {
            if parent[t.index()].is_some() {
                violations.push(Violation {
                    rule: Rule::ActivatesInactive,
                    from: s,
                    to: t,
                    path: path_to(&parent, t.index()),
                });
            }
        }

        // (b)
        for t in phenotype.active_targets() {
            let via = match mode {
                DecisionMode::Paths => graph
                    .inhibitors(t)
                    .iter()
                    .copied()
                    .filter(|&x| parent[x].is_some())
                    .min_by_key(|&x| (path_to(&parent, x).len(), x)),
                DecisionMode::Literal => graph
                    .inhibitors(t)
                    .contains(&s.index())
                    .then_some(s.index()),
            };
            if let Some(x) = via {
                let mut path = path_to(&parent, x);
                path.push(t);
                violations.push(Violation {
                    rule: Rule::InhibitsActive,
                    from: s,
                    to: t,
                    path,
                });
            }
        }
    }
    violations.sort_by_key(|v| (v.rule, v.from, v.to));
    Ok(PhenotypeDecision {
        mode,
        admissible: violations.is_empty(),
        violations,
    })
}

/// Backward marking closure seeded by a phenotype.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMarking {
    /// Marked vertices with their forced value, in marking order.
    pub marked: Vec<(VertexId, Ternary)>,
    /// First vertex that would have received both 1 and -1.
    pub conflict: Option<VertexId>,
}

impl WitnessMarking {
    pub fn value(&self, v: VertexId) -> Option<Ternary> {
        self.marked.iter().find(|(u, _)| *u == v).map(|&(_, x)| x)
    }
}

/// Marks targets with their phenotype values, then repeatedly marks every
/// inhibition-predecessor of a 1-marked vertex and every
/// activation-predecessor of a -1-marked vertex with -1.
pub fn marking_closure(graph: &RegulatoryGraph, phenotype: &Phenotype) -> Result<WitnessMarking> {
    phenotype
        .targets()
        .try_for_each(|v| graph.check_vertex(v))?;
    let mut marks: Vec<Option<Ternary>> = vec![None; graph.vertex_count()];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    for &(v, value) in phenotype.assignment() {
        marks[v.index()] = Some(value);
        order.push((v, value));
        queue.push_back(v.index());
    }
    while let Some(x) = queue.pop_front() {
        let preds = match marks[x] {
            Some(Ternary::Active) => graph.inhibitors(VertexId(x)),
            _ => graph.activators(VertexId(x)),
        };
        for &u in preds {
            match marks[u] {
                Some(Ternary::Active) => {
                    return Ok(WitnessMarking {
                        marked: order,
                        conflict: Some(VertexId(u)),
                    })
                }
                Some(_) => {}
                None => {
                    marks[u] = Some(Ternary::Inactive);
                    order.push((VertexId(u), Ternary::Inactive));
                    queue.push_back(u);
                }
            }
        }
    }
    Ok(WitnessMarking {
        marked: order,
        conflict: None,
    })
}

/// How unmarked vertices are filled in the witness start state.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum Completion {
    #[default]
    AllMinusOne,
    AllZero,
    AllOne,
    Given(TernaryState),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found {
        marking: WitnessMarking,
        trajectory: Trajectory,
        attractor: Attractor,
    },
    Inadmissible {
        marking: WitnessMarking,
        conflict: VertexId,
    },
}

impl WitnessOutcome {
    pub fn attractor(&self) -> Option<&Attractor> {
        match self {
            WitnessOutcome::Found { attractor, .. } => Some(attractor),
            WitnessOutcome::Inadmissible { .. } => None,
        }
    }
}

/// Builds a phenotype attractor from the marking closure, or reports the
/// vertex where the closure conflicts.
pub fn phenotype_witness(
    graph: &RegulatoryGraph,
    phenotype: &Phenotype,
    completion: &Completion,
) -> Result<WitnessOutcome> {
    require_unclamped(graph)?;
    let marking = marking_closure(graph, phenotype)?;
    if let Some(conflict) = marking.conflict {
        return Ok(WitnessOutcome::Inadmissible { marking, conflict });
    }

    let n = graph.vertex_count();
    let mut start = match completion {
        Completion::AllMinusOne => TernaryState::uniform(n, Ternary::Inactive),
        Completion::AllZero => TernaryState::uniform(n, Ternary::Ambiguous),
        Completion::AllOne => TernaryState::uniform(n, Ternary::Active),
        Completion::Given(state) => {
            graph.check_state(state)?;
            state.clone()
        }
    };
    for &(v, value) in &marking.marked {
        start.set(v.index(), value);
    }

    let trajectory = simulate(graph, &start, u64::MAX)?;
    let attractor = trajectory.attractor();
    for state in attractor.states() {
        assert!(
            marking
                .marked
                .iter()
                .all(|&(v, value)| state[v.index()] == value),
            "marked vertices stay frozen along the witness trajectory"
        );
    }
    Ok(WitnessOutcome::Found {
        marking,
        trajectory,
        attractor,
    })
}

/// Brute force: every attractor all of whose states carry the phenotype.
/// Works on clamped graphs.
pub fn attractors_with_phenotype(
    graph: &RegulatoryGraph,
    phenotype: &Phenotype,
    state_limit: u64,
) -> Result<Vec<Attractor>> {
    phenotype
        .targets()
        .try_for_each(|v| graph.check_vertex(v))?;
    Ok(enumerate_attractors(graph, state_limit)?
        .into_iter()
        .filter(|a| a.states().iter().all(|s| phenotype.matches(s)))
        .collect())
}
