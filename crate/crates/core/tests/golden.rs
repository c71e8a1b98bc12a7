//! Reference transitions and frozen attractor sets.

mod common;

use common::*;
use srg::bundled;
use srg::{enumerate_attractors, simulate, step, Ternary, DEFAULT_STATE_LIMIT};

#[test]
fn oracle_agrees_on_reference_transitions() {
    let g = bundled::fig1a();
    assert_eq!(naive_step(&g, &[-1, 1, 1]), vec![0, 1, 1]);
    assert_eq!(naive_step(&g, &[0, 1, 1]), vec![0, 1, 1]);
    let g = bundled::fig1b();
    assert_eq!(naive_step(&g, &[1, -1, 1]), vec![-1, 1, 1]);
}

#[test]
fn fig1a_attractors_frozen() {
    // computed with `brute_attractors`
    let expected: Vec<Vec<i8>> = vec![
        vec![-1, -1, -1],
        vec![-1, 0, -1],
        vec![-1, 1, -1],
        vec![0, 0, -1],
        vec![0, 0, 0],
        vec![0, 0, 1],
        vec![0, 1, 0],
        vec![0, 1, 1],
    ];
    let g = bundled::fig1a();
    let atts = enumerate_attractors(&g, DEFAULT_STATE_LIMIT).unwrap();
    assert!(atts.iter().all(|a| a.is_fixed_point()));
    let got: Vec<Vec<i8>> = atts.iter().map(|a| a.least_state().to_i8s()).collect();
    assert_eq!(got, expected);
    assert_eq!(attractor_sets(&atts), brute_attractors(&g));
}

#[test]
fn fig1b_attractors_match_oracle() {
    let g = bundled::fig1b();
    let atts = enumerate_attractors(&g, DEFAULT_STATE_LIMIT).unwrap();
    assert_eq!(atts.len(), 9);
    assert_eq!(attractor_sets(&atts), brute_attractors(&g));
}

#[test]
fn mapk_attractor_count_frozen() {
    let g = bundled::mapk();
    let atts = enumerate_attractors(&g, DEFAULT_STATE_LIMIT).unwrap();
    // 35 fixed points over the 3^6 clamp-consistent states
    assert_eq!(atts.len(), 35);
    assert!(atts.iter().all(|a| a.is_fixed_point()));
    assert_eq!(attractor_sets(&atts), brute_attractors(&g));
    for s in [
        [-1, -1, -1, 1, -1, -1, -1],
        [-1, -1, -1, -1, -1, 1, -1],
        [-1, 1, 1, 1, 1, -1, 1],
    ] {
        assert!(atts.iter().any(|a| a.states() == [tuple(&s)]), "{s:?}");
    }
}

#[test]
fn mapk_pi3k_mutants() {
    let g = bundled::mapk();
    let pi3k = g.vertex("PI3K").unwrap();

    let on = g.with_clamp(pi3k, Ternary::Active).unwrap();
    let s4 = tuple(&[-1, -1, 1, 1, 1, -1, 1]);
    assert_eq!(step(&on, &s4).unwrap(), s4);
    let atts = enumerate_attractors(&on, DEFAULT_STATE_LIMIT).unwrap();
    assert_eq!(attractor_sets(&atts), brute_attractors(&on));
    // every attractor of the constitutively active mutant has FOXO3=-1, AKT=1
    assert!(atts
        .iter()
        .flat_map(|a| a.states())
        .all(|s| s.to_i8s()[5..] == [-1, 1]));

    let off = g.with_clamp(pi3k, Ternary::Inactive).unwrap();
    let t = simulate(&off, &tuple(&[-1, -1, -1, -1, 1, 1, -1]), 100).unwrap();
    assert_eq!(
        t.transient,
        vec![
            tuple(&[-1, -1, -1, -1, 1, 1, -1]),
            tuple(&[-1, -1, -1, 1, 1, 1, 1]),
        ]
    );
    assert_eq!(t.cycle, vec![tuple(&[-1, -1, -1, 1, 1, -1, 1])]);
    let t = simulate(&off, &tuple(&[-1, -1, -1, -1, -1, 1, -1]), 100).unwrap();
    assert!(t.transient.is_empty());
    let t = simulate(&off, &tuple(&[-1, -1, -1, 1, -1, 1, -1]), 100).unwrap();
    assert_eq!(t.transient.len(), 1);
    assert_eq!(t.cycle, vec![tuple(&[-1, -1, -1, 1, -1, -1, -1])]);
}
