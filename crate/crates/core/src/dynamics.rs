//! Trajectories, explicit transition systems and attractor enumeration.
//!
//! Under synchronous update every state has exactly one successor, so the
//! transition system is a functional graph and its minimal trap sets are
//! precisely its cycles.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SrgError};
use crate::graph::RegulatoryGraph;
use crate::space::StateSpace;
use crate::ternary::{Ternary, TernaryState};
use crate::update::{apply_clamps, step, step_into};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    /// States visited before the cycle is entered.
    pub transient: Vec<TernaryState>,
    /// The recurrent part, in visiting order.
    pub cycle: Vec<TernaryState>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.transient.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All states in visiting order.
    pub fn states(&self) -> impl Iterator<Item = &TernaryState> {
        self.transient.iter().chain(self.cycle.iter())
    }

    pub fn attractor(&self) -> Attractor {
        Attractor::from_cycle(self.cycle.clone())
    }
}

/// A cycle of the synchronous transition system.
///
/// States are stored in cycle order, rotated so that the canonically least
/// state comes first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Attractor {
    states: Vec<TernaryState>,
}

impl Attractor {
    /// Normalizes a cycle given in visiting order. Panics on an empty cycle.
    pub fn from_cycle(mut cycle: Vec<TernaryState>) -> Self {
        assert!(!cycle.is_empty(), "attractor cycles are non-empty");
        let least = cycle
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        cycle.rotate_left(least);
        Attractor { states: cycle }
    }

    pub fn states(&self) -> &[TernaryState] {
        &self.states
    }

    pub fn period(&self) -> usize {
        self.states.len()
    }

    pub fn is_fixed_point(&self) -> bool {
        self.states.len() == 1
    }

    pub fn least_state(&self) -> &TernaryState {
        &self.states[0]
    }

    pub fn contains(&self, state: &TernaryState) -> bool {
        self.states.contains(state)
    }

    /// States sorted canonically.
    pub fn sorted_states(&self) -> Vec<TernaryState> {
        let mut s = self.states.clone();
        s.sort();
        s
    }
}

/// Iterates `step` from `start` (after applying clamps) until a state repeats.
///
/// Fails with [`SrgError::BudgetExceeded`] when no repeat occurs within
/// `max_steps` steps; a budget of 3^n steps always suffices.
pub fn simulate(
    graph: &RegulatoryGraph,
    start: &TernaryState,
    max_steps: u64,
) -> Result<Trajectory> {
    let mut current = apply_clamps(graph, start)?;
    let mut seen: HashMap<TernaryState, usize> = HashMap::new();
    let mut path = Vec::new();
    let mut steps = 0u64;
    loop {
        if let Some(&first) = seen.get(&current) {
            let cycle = path.split_off(first);
            return Ok(Trajectory {
                transient: path,
                cycle,
            });
        }
        if steps == max_steps {
            return Err(SrgError::BudgetExceeded(max_steps));
        }
        seen.insert(current.clone(), path.len());
        let next = step(graph, &current)?;
        path.push(std::mem::replace(&mut current, next));
        steps += 1;
    }
}

/// Explicit successor table over the clamp-consistent state space.
#[derive(Debug, Clone)]
pub struct TransitionSystem {
    space: StateSpace,
    successor: Vec<u32>,
}

/// Attractors together with the basin each state falls into.
#[derive(Debug, Clone)]
pub struct Basins {
    pub attractors: Vec<Attractor>,
    /// For each state index, the position of its attractor in `attractors`.
    pub basin_of: Vec<u32>,
}

impl TransitionSystem {
    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn size(&self) -> u64 {
        self.space.size()
    }

    pub fn state(&self, index: u64) -> TernaryState {
        self.space.decode(index)
    }

    pub fn successor_index(&self, index: u64) -> u64 {
        self.successor[index as usize] as u64
    }

    pub fn successor(&self, state: &TernaryState) -> Option<TernaryState> {
        let i = self.space.encode(state)?;
        Some(self.state(self.successor_index(i)))
    }

    pub fn successor_table(&self) -> &[u32] {
        &self.successor
    }

    /// `(state, successor)` pairs in canonical order.
    pub fn transitions(&self) -> impl Iterator<Item = (TernaryState, TernaryState)> + '_ {
        (0..self.size()).map(move |i| (self.state(i), self.state(self.successor_index(i))))
    }

    /// Finds every cycle with white/gray/black colouring; linear in the state count.
    pub fn basins(&self) -> Basins {
        const WHITE: u32 = u32::MAX;
        const GRAY: u32 = u32::MAX - 1;
        let n = self.successor.len();
        // basin id once black; WHITE/GRAY sentinels otherwise
        let mut mark = vec![WHITE; n];
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut path: Vec<u32> = Vec::new();
        for start in 0..n {
            if mark[start] != WHITE {
                continue;
            }
            path.clear();
            let mut s = start as u32;
            while mark[s as usize] == WHITE {
                mark[s as usize] = GRAY;
                path.push(s);
                s = self.successor[s as usize];
            }
            let id = if mark[s as usize] == GRAY {
                let from = path
                    .iter()
                    .position(|&p| p == s)
                    .expect("gray state is on the path");
                cycles.push(path[from..].to_vec());
                (cycles.len() - 1) as u32
            } else {
                mark[s as usize]
            };
            for &p in &path {
                mark[p as usize] = id;
            }
        }

        // deterministic ids: order attractors by their least state
        let mut order: Vec<usize> = (0..cycles.len()).collect();
        let least: Vec<u32> = cycles.iter().map(|c| *c.iter().min().unwrap()).collect();
        order.sort_by_key(|&i| least[i]);
        let mut remap = vec![0u32; cycles.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        let attractors = order
            .iter()
            .map(|&i| {
                Attractor::from_cycle(cycles[i].iter().map(|&s| self.state(s as u64)).collect())
            })
            .collect();
        let basin_of = mark.into_iter().map(|id| remap[id as usize]).collect();
        Basins {
            attractors,
            basin_of,
        }
    }

    pub fn attractors(&self) -> Vec<Attractor> {
        self.basins().attractors
    }
}

/// Builds the explicit successor table of the clamp-consistent state space.
pub fn build_sts(graph: &RegulatoryGraph, state_limit: u64) -> Result<TransitionSystem> {
    let space = StateSpace::new(graph, state_limit)?;
    let n = graph.vertex_count();
    let size = space.size() as usize;
    const CHUNK: usize = 4096;
    let mut successor = vec![0u32; size];
    successor
        .par_chunks_mut(CHUNK)
        .enumerate()
        .for_each(|(chunk, out)| {
            let mut cur = vec![Ternary::Inactive; n];
            let mut next = vec![Ternary::Inactive; n];
            let base = (chunk * CHUNK) as u64;
            for (offset, slot) in out.iter_mut().enumerate() {
                space.decode_into(base + offset as u64, &mut cur);
                step_into(graph, &cur, &mut next);
                *slot = space.encode_slice(&next) as u32;
            }
        });
    Ok(TransitionSystem { space, successor })
}

/// All attractors of the clamp-consistent state space, sorted by least state.
pub fn enumerate_attractors(graph: &RegulatoryGraph, state_limit: u64) -> Result<Vec<Attractor>> {
    Ok(build_sts(graph, state_limit)?.attractors())
}

fn check_states(graph: &RegulatoryGraph, states: &[TernaryState]) -> Result<()> {
    states.iter().try_for_each(|s| graph.check_state(s))
}

/// True iff `states` is closed under `step`. The empty set is not a trap set.
pub fn is_trap_set(graph: &RegulatoryGraph, states: &[TernaryState]) -> Result<bool> {
    check_states(graph, states)?;
    if states.is_empty() {
        return Ok(false);
    }
    let set: HashSet<&TernaryState> = states.iter().collect();
    for s in states {
        if !set.contains(&step(graph, s)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `states` is a minimal trap set, i.e. exactly one cycle of `step`.
pub fn is_attractor(graph: &RegulatoryGraph, states: &[TernaryState]) -> Result<bool> {
    check_states(graph, states)?;
    let set: HashSet<&TernaryState> = states.iter().collect();
    let Some(first) = states.first() else {
        return Ok(false);
    };
    let mut visited = 0usize;
    let mut current = first.clone();
    loop {
        visited += 1;
        current = step(graph, &current)?;
        if !set.contains(&current) {
            return Ok(false);
        }
        if current == *first {
            return Ok(visited == set.len());
        }
        if visited > set.len() {
            return Ok(false);
        }
    }
}
