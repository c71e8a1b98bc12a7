//! Two-bit Boolean encoding of a strong regulatory graph.
//!
//! Each vertex `v` becomes an "active" bit `a_v` and an "inactive" bit `b_v`:
//! active = (1,0), inactive = (0,1), ambiguous = (0,0). The code (1,1) is
//! never produced from a valid state. The update rules are
//!
//! ```text
//! a_v' = (a_v | OR{a_u : u activates v}) & AND{b_u : u inhibits v}
//! b_v' = (b_v | OR{a_u : u inhibits v})  & AND{b_u : u activates v}
//! ```
//!
//! and a clamped vertex gets constant rules.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SrgError};
use crate::graph::{RegulatoryGraph, VertexId};
use crate::space::StateSpace;
use crate::ternary::{Ternary, TernaryState};
use crate::update::{apply_clamps, step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bit {
    Active,
    Inactive,
}

/// One Boolean variable of the encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitVar {
    pub vertex: VertexId,
    pub bit: Bit,
}

impl BitVar {
    pub fn active(v: usize) -> Self {
        BitVar {
            vertex: VertexId(v),
            bit: Bit::Active,
        }
    }

    pub fn inactive(v: usize) -> Self {
        BitVar {
            vertex: VertexId(v),
            bit: Bit::Inactive,
        }
    }

    /// Position in a [`BooleanState`]: `a_v` at `2v`, `b_v` at `2v + 1`.
    pub fn index(self) -> usize {
        2 * self.vertex.index()
            + match self.bit {
                Bit::Active => 0,
                Bit::Inactive => 1,
            }
    }
}

/// A conjunction of disjunctions of positive literals. No clauses is `true`;
/// an empty clause is `false`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Formula {
    pub clauses: Vec<Vec<BitVar>>,
}

impl Formula {
    pub fn constant(value: bool) -> Self {
        Formula {
            clauses: if value { Vec::new() } else { vec![Vec::new()] },
        }
    }

    pub fn eval(&self, bits: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|clause| clause.iter().any(|x| bits[x.index()]))
    }
}

/// Boolean network with `2n` variables simulating an SRG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanNetwork {
    names: Vec<String>,
    rules: Vec<Formula>,
}

/// Bits laid out as `[a_0, b_0, a_1, b_1, ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BooleanState(Vec<bool>);

impl BooleanState {
    pub fn new(bits: Vec<bool>) -> Self {
        BooleanState(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, var: BitVar) -> bool {
        self.0[var.index()]
    }

    /// True if some pair carries the invalid code (1,1).
    pub fn has_invalid_code(&self) -> bool {
        self.0.chunks(2).any(|p| p.len() == 2 && p[0] && p[1])
    }
}

impl fmt::Display for BooleanState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pair in self.0.chunks(2) {
            let bit = |b: bool| if b { '1' } else { '0' };
            write!(
                f,
                "[{}{}]",
                bit(pair[0]),
                pair.get(1).map_or('?', |&b| bit(b))
            )?;
        }
        Ok(())
    }
}

pub fn encode_network(graph: &RegulatoryGraph) -> BooleanNetwork {
    let mut rules = Vec::with_capacity(2 * graph.vertex_count());
    for v in graph.vertices() {
        if let Some(c) = graph.clamp(v) {
            rules.push(Formula::constant(c == Ternary::Active));
            rules.push(Formula::constant(c == Ternary::Inactive));
            continue;
        }
        let act = graph.activators(v);
        let inh = graph.inhibitors(v);

        let mut a_clauses = vec![std::iter::once(BitVar::active(v.index()))
            .chain(act.iter().map(|&u| BitVar::active(u)))
            .collect::<Vec<_>>()];
        a_clauses.extend(inh.iter().map(|&u| vec![BitVar::inactive(u)]));

        let mut b_clauses = vec![std::iter::once(BitVar::inactive(v.index()))
            .chain(inh.iter().map(|&u| BitVar::active(u)))
            .collect::<Vec<_>>()];
        b_clauses.extend(act.iter().map(|&u| vec![BitVar::inactive(u)]));

        rules.push(Formula { clauses: a_clauses });
        rules.push(Formula { clauses: b_clauses });
    }
    BooleanNetwork {
        names: graph.names().to_vec(),
        rules,
    }
}

impl BooleanNetwork {
    pub fn variable_count(&self) -> usize {
        self.rules.len()
    }

    /// Update rule of one bit variable.
    pub fn rule(&self, var: BitVar) -> &Formula {
        &self.rules[var.index()]
    }

    pub fn variable_name(&self, var: BitVar) -> String {
        let suffix = match var.bit {
            Bit::Active => "act",
            Bit::Inactive => "inh",
        };
        format!("{}_{suffix}", self.names[var.vertex.index()])
    }

    fn var_at(index: usize) -> BitVar {
        if index.is_multiple_of(2) {
            BitVar::active(index / 2)
        } else {
            BitVar::inactive(index / 2)
        }
    }

    pub fn decode(&self, state: &BooleanState) -> Result<TernaryState> {
        decode_with(state, |v| self.names[v].clone())
    }

    fn render(&self, formula: &Formula) -> String {
        if formula.clauses.is_empty() {
            return "1".into();
        }
        if formula.clauses.iter().any(Vec::is_empty) {
            return "0".into();
        }
        let many = formula.clauses.len() > 1;
        formula
            .clauses
            .iter()
            .map(|clause| {
                let inner = clause
                    .iter()
                    .map(|&x| self.variable_name(x))
                    .collect::<Vec<_>>()
                    .join(" | ");
                if many && clause.len() > 1 {
                    format!("({inner})")
                } else {
                    inner
                }
            })
            .collect::<Vec<_>>()
            .join(" & ")
    }

    /// BoolNet-style rule listing: a `targets, factors` header, then one
    /// `target, expression` line per bit variable.
    pub fn to_boolnet(&self) -> String {
        let mut out = String::from("targets, factors\n");
        for (i, formula) in self.rules.iter().enumerate() {
            let _ = writeln!(
                out,
                "{}, {}",
                self.variable_name(Self::var_at(i)),
                self.render(formula)
            );
        }
        out
    }
}

/// Encodes a ternary state: 1 -> (1,0), -1 -> (0,1), 0 -> (0,0).
pub fn encode_state(state: &TernaryState) -> BooleanState {
    let mut bits = Vec::with_capacity(2 * state.len());
    for &v in state.values() {
        bits.push(v == Ternary::Active);
        bits.push(v == Ternary::Inactive);
    }
    BooleanState(bits)
}

fn decode_with(state: &BooleanState, name: impl Fn(usize) -> String) -> Result<TernaryState> {
    if !state.0.len().is_multiple_of(2) {
        return Err(SrgError::StateArity {
            expected: state.0.len() + 1,
            found: state.0.len(),
        });
    }
    state
        .0
        .chunks(2)
        .enumerate()
        .map(|(v, pair)| match (pair[0], pair[1]) {
            (true, false) => Ok(Ternary::Active),
            (false, true) => Ok(Ternary::Inactive),
            (false, false) => Ok(Ternary::Ambiguous),
            (true, true) => Err(SrgError::InvalidCode(name(v))),
        })
        .collect::<Result<Vec<_>>>()
        .map(TernaryState::new)
}

/// Inverse of [`encode_state`]; rejects the (1,1) code.
pub fn decode_state(state: &BooleanState) -> Result<TernaryState> {
    decode_with(state, |v| format!("#{v}"))
}

/// One synchronous step of the Boolean network.
pub fn bn_step(network: &BooleanNetwork, state: &BooleanState) -> Result<BooleanState> {
    if state.0.len() != network.rules.len() {
        return Err(SrgError::StateArity {
            expected: network.rules.len(),
            found: state.0.len(),
        });
    }
    Ok(BooleanState(
        network.rules.iter().map(|f| f.eval(&state.0)).collect(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    /// Every clamp-consistent state, refusing spaces above `limit`.
    Exhaustive { limit: u64 },
    /// `samples` uniformly drawn clamp-consistent states.
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub state: TernaryState,
    pub expected: BooleanState,
    pub actual: BooleanState,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub states_checked: u64,
    pub counterexample: Option<Counterexample>,
    /// Whether any Boolean successor carried the (1,1) code.
    pub invalid_code_seen: bool,
}

impl EquivalenceReport {
    pub fn success(&self) -> bool {
        self.counterexample.is_none() && !self.invalid_code_seen
    }
}

/// Checks `encode(step(s)) == bn_step(encode(s))` on the requested states,
/// stopping at the first counterexample.
pub fn check_simulation_equivalence(
    graph: &RegulatoryGraph,
    coverage: Coverage,
) -> Result<EquivalenceReport> {
    let network = encode_network(graph);
    let mut report = EquivalenceReport {
        states_checked: 0,
        counterexample: None,
        invalid_code_seen: false,
    };
    let mut check = |state: TernaryState| -> Result<bool> {
        let expected = encode_state(&step(graph, &state)?);
        let actual = bn_step(&network, &encode_state(&state))?;
        report.states_checked += 1;
        report.invalid_code_seen |= actual.has_invalid_code();
        if expected != actual {
            report.counterexample = Some(Counterexample {
                state,
                expected,
                actual,
            });
            return Ok(false);
        }
        Ok(true)
    };

    match coverage {
        Coverage::Exhaustive { limit } => {
            let space = StateSpace::new(graph, limit)?;
            for state in space.states() {
                if !check(state)? {
                    break;
                }
            }
        }
        Coverage::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = graph.vertex_count();
            for _ in 0..samples {
                let raw = TernaryState::new(
                    (0..n)
                        .map(|_| Ternary::from_digit(rng.gen_range(0..3)))
                        .collect(),
                );
                if !check(apply_clamps(graph, &raw)?)? {
                    break;
                }
            }
        }
    }
    Ok(report)
}
