//! Single-step synchronous update of a strong regulatory graph.
//!
//! A vertex becomes active only when every potentially active regulator
//! agrees on activation (or it was already active and nothing potentially
//! inhibits it), symmetrically for inactive, and ambiguous otherwise.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{RegulatoryGraph, Sign, VertexId};
use crate::ternary::{Ternary, TernaryState};

/// A subset of `{0, 1}`: the statuses of the potentially active regulators
/// of one sign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegSet {
    pub contains_one: bool,
    pub contains_zero: bool,
}

impl RegSet {
    pub const EMPTY: RegSet = RegSet {
        contains_one: false,
        contains_zero: false,
    };
    pub const ZERO: RegSet = RegSet {
        contains_one: false,
        contains_zero: true,
    };
    pub const ONE: RegSet = RegSet {
        contains_one: true,
        contains_zero: false,
    };
    pub const BOTH: RegSet = RegSet {
        contains_one: true,
        contains_zero: true,
    };

    pub fn is_empty(self) -> bool {
        !self.contains_one && !self.contains_zero
    }

    /// Adds a regulator status; inactive regulators are not recorded.
    pub fn insert(&mut self, value: Ternary) {
        match value {
            Ternary::Active => self.contains_one = true,
            Ternary::Ambiguous => self.contains_zero = true,
            Ternary::Inactive => {}
        }
    }

    pub fn union(self, other: RegSet) -> RegSet {
        RegSet {
            contains_one: self.contains_one || other.contains_one,
            contains_zero: self.contains_zero || other.contains_zero,
        }
    }
}

fn collect(state: &[Ternary], sources: &[usize]) -> RegSet {
    let mut set = RegSet::EMPTY;
    for &u in sources {
        set.insert(state[u]);
        if set.contains_one && set.contains_zero {
            break;
        }
    }
    set
}

/// Statuses of the potentially active regulators of `v` with the given sign.
pub fn regulators(
    graph: &RegulatoryGraph,
    state: &TernaryState,
    v: VertexId,
    sign: Sign,
) -> Result<RegSet> {
    graph.check_vertex(v)?;
    graph.check_state(state)?;
    Ok(collect(state.values(), graph.predecessors(v, sign)))
}

/// [`regulators`] extended with the vertex's own status: an active or
/// ambiguous vertex counts towards its activators, and an inactive or
/// ambiguous vertex contributes its negation towards its inhibitors.
pub fn regulators_reflexive(
    graph: &RegulatoryGraph,
    state: &TernaryState,
    v: VertexId,
    sign: Sign,
) -> Result<RegSet> {
    let mut set = regulators(graph, state, v, sign)?;
    let own = state[v.0];
    match sign {
        Sign::Activation => set.insert(own),
        Sign::Inhibition => set.insert(own.negate()),
    }
    Ok(set)
}

#[inline]
fn rule(current: Ternary, activators: RegSet, inhibitors: RegSet) -> Ternary {
    if inhibitors.is_empty() && (activators.contains_one || current == Ternary::Active) {
        Ternary::Active
    } else if activators.is_empty() && (inhibitors.contains_one || current == Ternary::Inactive) {
        Ternary::Inactive
    } else {
        Ternary::Ambiguous
    }
}

#[inline]
fn next_value(graph: &RegulatoryGraph, state: &[Ternary], v: usize) -> Ternary {
    let id = VertexId(v);
    rule(
        state[v],
        collect(state, graph.activators(id)),
        collect(state, graph.inhibitors(id)),
    )
}

/// The update rule for one vertex, ignoring clamps.
pub fn update_vertex(
    graph: &RegulatoryGraph,
    state: &TernaryState,
    v: VertexId,
) -> Result<Ternary> {
    graph.check_vertex(v)?;
    graph.check_state(state)?;
    Ok(next_value(graph, state.values(), v.0))
}

/// Writes the synchronous successor of `current` into `next`, clamps applied.
///
/// Both slices must have the graph's vertex count.
pub(crate) fn step_into(graph: &RegulatoryGraph, current: &[Ternary], next: &mut [Ternary]) {
    debug_assert_eq!(current.len(), graph.vertex_count());
    for (v, slot) in next.iter_mut().enumerate() {
        *slot = match graph.clamp_values()[v] {
            Some(c) => c,
            None => next_value(graph, current, v),
        };
    }
}

/// Synchronous successor: every vertex is updated from `state`, then every
/// clamped vertex is overwritten with its clamp value.
pub fn step(graph: &RegulatoryGraph, state: &TernaryState) -> Result<TernaryState> {
    graph.check_state(state)?;
    let mut next = vec![Ternary::Ambiguous; state.len()];
    step_into(graph, state.values(), &mut next);
    Ok(TernaryState::new(next))
}

/// Overwrites clamped vertices with their clamp values.
pub fn apply_clamps(graph: &RegulatoryGraph, state: &TernaryState) -> Result<TernaryState> {
    graph.check_state(state)?;
    let mut out = state.clone();
    for (v, value) in graph.clamps() {
        out.set(v.0, value);
    }
    Ok(out)
}

/// True when every clamped vertex carries its clamp value.
pub fn satisfies_clamps(graph: &RegulatoryGraph, state: &TernaryState) -> bool {
    graph
        .clamps()
        .all(|(v, value)| state.get(v.0) == Some(value))
}
