//! Test oracles written independently of the library's update and
//! enumeration code, plus random graph generation.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srg::{GraphBuilder, RegulatoryGraph, Sign, Ternary, TernaryState, VertexId};

pub type Tuple = Vec<i8>;

/// Regulator value sets computed literally as sets of integers.
pub fn reg_set(graph: &RegulatoryGraph, state: &[i8], v: usize, sign: Sign) -> BTreeSet<i8> {
    graph
        .edges()
        .iter()
        .filter(|e| e.target.index() == v && e.sign == sign)
        .map(|e| state[e.source.index()])
        .filter(|x| *x == 0 || *x == 1)
        .collect()
}

pub fn reg_set_reflexive(
    graph: &RegulatoryGraph,
    state: &[i8],
    v: usize,
    sign: Sign,
) -> BTreeSet<i8> {
    let mut set = reg_set(graph, state, v, sign);
    let own = state[v];
    match sign {
        Sign::Activation if own == 0 || own == 1 => {
            set.insert(own);
        }
        Sign::Inhibition if own == -1 || own == 0 => {
            set.insert(-own);
        }
        _ => {}
    }
    set
}

/// Three-case update rule evaluated on integer sets, clamps applied after.
pub fn naive_step(graph: &RegulatoryGraph, state: &[i8]) -> Tuple {
    (0..state.len())
        .map(|v| {
            if let Some(c) = graph.clamp(VertexId(v)) {
                return c.as_i8();
            }
            let plus = reg_set(graph, state, v, Sign::Activation);
            let minus = reg_set(graph, state, v, Sign::Inhibition);
            if reg_set_reflexive(graph, state, v, Sign::Activation).contains(&1) && minus.is_empty()
            {
                1
            } else if reg_set_reflexive(graph, state, v, Sign::Inhibition).contains(&1)
                && plus.is_empty()
            {
                -1
            } else {
                0
            }
        })
        .collect()
}

/// Every tuple over {-1,0,1}^n consistent with the clamps, via odometer counting.
pub fn all_states(graph: &RegulatoryGraph) -> Vec<Tuple> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    let mut cur: Tuple = (0..n)
        .map(|v| graph.clamp(VertexId(v)).map_or(-1, |c| c.as_i8()))
        .collect();
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if graph.clamp(VertexId(i)).is_some() {
                continue;
            }
            if cur[i] < 1 {
                cur[i] += 1;
                break;
            }
            cur[i] = -1;
        }
    }
}

/// Attractors found by iterating the naive step from every state long enough
/// to land on a cycle, then walking the cycle. Each attractor is returned as
/// a sorted set of tuples.
pub fn brute_attractors(graph: &RegulatoryGraph) -> BTreeSet<BTreeSet<Tuple>> {
    let states = all_states(graph);
    let mut found = BTreeSet::new();
    for s in &states {
        let mut x = s.clone();
        for _ in 0..states.len() {
            x = naive_step(graph, &x);
        }
        let mut cycle = BTreeSet::new();
        let mut y = x.clone();
        loop {
            cycle.insert(y.clone());
            y = naive_step(graph, &y);
            if y == x {
                break;
            }
        }
        found.insert(cycle);
    }
    found
}

pub fn attractor_sets(atts: &[srg::Attractor]) -> BTreeSet<BTreeSet<Tuple>> {
    atts.iter()
        .map(|a| a.states().iter().map(|s| s.to_i8s()).collect())
        .collect()
}

pub fn tuple(values: &[i8]) -> TernaryState {
    TernaryState::from_i8s(values).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on `n` vertices: each ordered pair (self-loops included)
/// gets an edge with probability `density`, with a random sign.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> RegulatoryGraph {
    let mut b = GraphBuilder::new();
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    for name in &names {
        b.add_vertex(name).unwrap();
    }
    for s in &names {
        for t in &names {
            if rng.gen_bool(density) {
                let sign = if rng.gen_bool(0.5) {
                    Sign::Activation
                } else {
                    Sign::Inhibition
                };
                b.add_edge(s, sign, t).unwrap();
            }
        }
    }
    b.build()
}

pub fn random_state(rng: &mut impl Rng, n: usize) -> TernaryState {
    TernaryState::new(
        (0..n)
            .map(|_| Ternary::from_digit(rng.gen_range(0..3)))
            .collect(),
    )
}

/// Random phenotype over a random subset of at most `n` targets.
pub fn random_phenotype(rng: &mut impl Rng, graph: &RegulatoryGraph) -> srg::phenotype::Phenotype {
    let n = graph.vertex_count();
    let k = rng.gen_range(0..=n.min(4));
    let mut chosen = HashSet::new();
    let mut assignment = Vec::new();
    while assignment.len() < k {
        let v = rng.gen_range(0..n);
        if chosen.insert(v) {
            let value = if rng.gen_bool(0.5) {
                Ternary::Active
            } else {
                Ternary::Inactive
            };
            assignment.push((VertexId(v), value));
        }
    }
    srg::phenotype::Phenotype::new(graph, assignment).unwrap()
}
