mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use srg::boolenc::{bn_step, decode_state, encode_network, encode_state};
use srg::io::{format_network, format_state, parse_network, parse_state};
use srg::phenotype::{
    attractors_with_phenotype, decide_phenotype, marking_closure, phenotype_witness, Completion,
    DecisionMode, Phenotype, WitnessOutcome,
};
use srg::update::satisfies_clamps;
use srg::{
    apply_clamps, build_sts, enumerate_attractors, is_attractor, is_trap_set, regulators,
    regulators_reflexive, simulate, step, GraphBuilder, RegSet, RegulatoryGraph, Sign, Ternary,
    TernaryState, VertexId,
};

const LIMIT: u64 = 100_000;

fn ternary() -> impl Strategy<Value = Ternary> {
    prop_oneof![
        Just(Ternary::Inactive),
        Just(Ternary::Ambiguous),
        Just(Ternary::Active)
    ]
}

/// Graphs on up to `max_n` vertices; each ordered pair carries no edge, an
/// activation or an inhibition. Optionally some vertices are clamped.
fn graph(max_n: usize, clamps: bool) -> impl Strategy<Value = RegulatoryGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                Just(n),
                prop::collection::vec(0u8..6, n * n),
                prop::collection::vec(0u8..if clamps { 6 } else { 1 }, n),
            )
        })
        .prop_map(|(n, edges, clamp_codes)| {
            let mut b = GraphBuilder::new();
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            for name in &names {
                b.add_vertex(name).unwrap();
            }
            for (k, code) in edges.into_iter().enumerate() {
                let sign = match code {
                    0 => Sign::Activation,
                    1 => Sign::Inhibition,
                    _ => continue,
                };
                b.add_edge(&names[k / n], sign, &names[k % n]).unwrap();
            }
            for (v, code) in clamp_codes.into_iter().enumerate() {
                match code {
                    1 => b.clamp(&names[v], Ternary::Active).unwrap(),
                    2 => b.clamp(&names[v], Ternary::Inactive).unwrap(),
                    _ => {}
                }
            }
            b.build()
        })
}

fn graph_and_state(
    max_n: usize,
    clamps: bool,
) -> impl Strategy<Value = (RegulatoryGraph, TernaryState)> {
    graph(max_n, clamps).prop_flat_map(|g| {
        let n = g.vertex_count();
        (
            Just(g),
            prop::collection::vec(ternary(), n).prop_map(TernaryState::new),
        )
    })
}

fn graph_state_vertex(
    max_n: usize,
) -> impl Strategy<Value = (RegulatoryGraph, TernaryState, VertexId)> {
    graph_and_state(max_n, false).prop_flat_map(|(g, s)| {
        let n = g.vertex_count();
        (Just(g), Just(s), (0..n).prop_map(VertexId))
    })
}

fn graph_and_phenotype(max_n: usize) -> impl Strategy<Value = (RegulatoryGraph, Phenotype)> {
    graph(max_n, false).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(0u8..3, n)).prop_map(|(g, codes)| {
            let assignment = codes
                .into_iter()
                .enumerate()
                .filter_map(|(v, c)| match c {
                    1 => Some((VertexId(v), Ternary::Active)),
                    2 => Some((VertexId(v), Ternary::Inactive)),
                    _ => None,
                })
                .collect();
            let p = Phenotype::new(&g, assignment).unwrap();
            (g, p)
        })
    })
}

fn regs(g: &RegulatoryGraph, s: &TernaryState, v: VertexId) -> (RegSet, RegSet, RegSet, RegSet) {
    (
        regulators(g, s, v, Sign::Activation).unwrap(),
        regulators(g, s, v, Sign::Inhibition).unwrap(),
        regulators_reflexive(g, s, v, Sign::Activation).unwrap(),
        regulators_reflexive(g, s, v, Sign::Inhibition).unwrap(),
    )
}

fn as_regset(set: &BTreeSet<i8>) -> RegSet {
    RegSet {
        contains_one: set.contains(&1),
        contains_zero: set.contains(&0),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn regulator_sets_match_literal_sets((g, s, v) in graph_state_vertex(6)) {
        let raw = s.to_i8s();
        for sign in [Sign::Activation, Sign::Inhibition] {
            prop_assert_eq!(
                regulators(&g, &s, v, sign).unwrap(),
                as_regset(&reg_set(&g, &raw, v.index(), sign))
            );
            prop_assert_eq!(
                regulators_reflexive(&g, &s, v, sign).unwrap(),
                as_regset(&reg_set_reflexive(&g, &raw, v.index(), sign))
            );
        }
    }

    #[test]
    fn step_matches_naive_oracle((g, s) in graph_and_state(7, true)) {
        prop_assert_eq!(step(&g, &s).unwrap().to_i8s(), naive_step(&g, &s.to_i8s()));
    }

    #[test]
    fn inertia((g, s, v) in graph_state_vertex(6)) {
        let (plus, minus, _, _) = regs(&g, &s, v);
        if plus.is_empty() && minus.is_empty() {
            prop_assert_eq!(step(&g, &s).unwrap()[v.index()], s[v.index()]);
        }
    }

    #[test]
    fn ambiguity_characterization((g, s, v) in graph_state_vertex(6)) {
        let (plus, minus, plus_r, minus_r) = regs(&g, &s, v);
        prop_assume!(!(plus.is_empty() && minus.is_empty()));
        let ambiguous = step(&g, &s).unwrap()[v.index()] == Ternary::Ambiguous;
        let expected = (!plus.is_empty() && !minus.is_empty())
            || (plus_r == RegSet::ZERO && minus.is_empty())
            || (minus_r == RegSet::ZERO && plus.is_empty());
        prop_assert_eq!(ambiguous, expected);
    }

    #[test]
    fn case_lemma((g, s, v) in graph_state_vertex(6)) {
        let (plus, minus, _, _) = regs(&g, &s, v);
        let own = s[v.index()];
        let next = step(&g, &s).unwrap()[v.index()];
        if (own == Ternary::Active && minus.is_empty())
            || (own == Ternary::Inactive && plus.is_empty())
            || (own == Ternary::Ambiguous && !plus.contains_one && !minus.contains_one)
        {
            prop_assert_eq!(next, own);
        }
        if plus.contains_one && minus.is_empty() {
            prop_assert_eq!(next, Ternary::Active);
        }
        if minus.contains_one && plus.is_empty() {
            prop_assert_eq!(next, Ternary::Inactive);
        }
        if !plus.is_empty() && !minus.is_empty() {
            prop_assert_eq!(next, Ternary::Ambiguous);
        }
    }

    #[test]
    fn clamps_are_idempotent_and_respected((g, s) in graph_and_state(6, true)) {
        let once = apply_clamps(&g, &s).unwrap();
        prop_assert_eq!(apply_clamps(&g, &once).unwrap(), once.clone());
        prop_assert!(satisfies_clamps(&g, &step(&g, &s).unwrap()));
        prop_assert_eq!(step(&g, &s).unwrap(), step(&g, &s).unwrap());
    }

    #[test]
    fn boolean_encoding_commutes((g, s) in graph_and_state(7, true)) {
        let bn = encode_network(&g);
        let image = bn_step(&bn, &encode_state(&s)).unwrap();
        prop_assert!(!image.has_invalid_code());
        prop_assert_eq!(decode_state(&image).unwrap(), step(&g, &s).unwrap());
        prop_assert_eq!(decode_state(&encode_state(&s)).unwrap(), s);
    }

    #[test]
    fn network_and_state_text_round_trip((g, s) in graph_and_state(6, true)) {
        let back = parse_network(&format_network(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(parse_state(&format_state(&s), &g).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn attractors_partition_the_space(g in graph(5, true)) {
        let sts = build_sts(&g, LIMIT).unwrap();
        let basins = sts.basins();
        prop_assert_eq!(basins.basin_of.len() as u64, sts.size());
        let space_size = sts.size() as usize;
        for (k, a) in basins.attractors.iter().enumerate() {
            prop_assert!(is_trap_set(&g, a.states()).unwrap());
            prop_assert!(is_attractor(&g, a.states()).unwrap());
            prop_assert!(a.period() <= space_size);
            for s in a.states() {
                let i = sts.space().encode(s).unwrap() as usize;
                prop_assert_eq!(basins.basin_of[i] as usize, k);
            }
        }
        // simulate lands in the attractor of the basin the state was assigned
        for i in 0..sts.size() {
            let t = simulate(&g, &sts.state(i), sts.size()).unwrap();
            prop_assert_eq!(&t.attractor(), &basins.attractors[basins.basin_of[i as usize] as usize]);
        }
        // fixed points are exactly the singleton attractors
        let fixed: Vec<_> = sts
            .transitions()
            .filter(|(a, b)| a == b)
            .map(|(a, _)| a)
            .collect();
        let singles: Vec<_> = basins
            .attractors
            .iter()
            .filter(|a| a.is_fixed_point())
            .map(|a| a.least_state().clone())
            .collect();
        prop_assert_eq!(fixed, singles);
    }

    #[test]
    fn enumeration_matches_brute_force(g in graph(5, true)) {
        let atts = enumerate_attractors(&g, LIMIT).unwrap();
        prop_assert_eq!(attractor_sets(&atts), brute_attractors(&g));
    }

    #[test]
    fn structural_decision_matches_oracle((g, p) in graph_and_phenotype(5)) {
        let paths = decide_phenotype(&g, &p, DecisionMode::Paths).unwrap();
        let literal = decide_phenotype(&g, &p, DecisionMode::Literal).unwrap();
        let found = attractors_with_phenotype(&g, &p, LIMIT).unwrap();
        prop_assert_eq!(paths.admissible, !found.is_empty());
        prop_assert_eq!(paths.admissible, paths.violations.is_empty());
        // the path conditions are the stronger ones
        if paths.admissible {
            prop_assert!(literal.admissible);
        }
    }

    #[test]
    fn witness_is_sound_and_complete((g, p) in graph_and_phenotype(5)) {
        let admissible = decide_phenotype(&g, &p, DecisionMode::Paths).unwrap().admissible;
        let marking = marking_closure(&g, &p).unwrap();
        // only targets ever carry a 1-mark
        for &(v, value) in &marking.marked {
            if value == Ternary::Active {
                prop_assert_eq!(p.value(v), Some(Ternary::Active));
            }
        }
        for completion in [Completion::AllMinusOne, Completion::AllZero, Completion::AllOne] {
            match phenotype_witness(&g, &p, &completion).unwrap() {
                WitnessOutcome::Found { marking, attractor, .. } => {
                    prop_assert!(admissible);
                    prop_assert!(attractor.states().iter().all(|s| p.matches(s)));
                    for s in attractor.states() {
                        for &(v, value) in &marking.marked {
                            prop_assert_eq!(s[v.index()], value);
                        }
                    }
                    let all = attractors_with_phenotype(&g, &p, LIMIT).unwrap();
                    prop_assert!(all.contains(&attractor));
                }
                WitnessOutcome::Inadmissible { conflict, .. } => {
                    prop_assert!(!admissible);
                    prop_assert_eq!(p.value(conflict), Some(Ternary::Active));
                }
            }
        }
    }
}
