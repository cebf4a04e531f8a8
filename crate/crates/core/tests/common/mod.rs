#![allow(dead_code)]

use std::collections::BTreeSet;

use msca::oracle::{random_msca, RandomConfig};
use msca::{compose, ActionVector, Flavor, Modality, Msca, StateVector, Transition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Row<'a> = (&'a [&'a str], &'a [&'a str], &'a [&'a str], Modality);

pub fn sv(labels: &[&str]) -> StateVector {
    StateVector::new(labels.iter().copied())
}

pub fn build(
    name: &str,
    flavor: Flavor,
    initial: &[&str],
    finals: &[&[&str]],
    rows: &[Row],
) -> Msca {
    let mut states: BTreeSet<StateVector> = finals.iter().map(|q| sv(q)).collect();
    states.insert(sv(initial));
    let transitions: Vec<Transition> = rows
        .iter()
        .map(|(s, l, t, m)| {
            let label = ActionVector::new(l.iter().map(|e| e.parse().unwrap()).collect());
            Transition::new(sv(s), label, sv(t), *m)
        })
        .collect();
    for t in &transitions {
        states.insert(t.source.clone());
        states.insert(t.target.clone());
    }
    Msca::checked(
        name,
        initial.len(),
        flavor,
        states,
        sv(initial),
        finals.iter().map(|q| sv(q)),
        transitions,
    )
    .unwrap()
}

pub const S0: &[&str] = &["q0", "b0", "c0"];
pub const X1: &[&str] = &["q1", "b1", "c0"];
pub const X2: &[&str] = &["q1", "b0", "c1"];
pub const S1: &[&str] = &["q0", "b2", "c2"];
pub const Y: &[&str] = &["q1", "b3", "c2"];

/// Alice may send a necessary `a` to Bob or to Carol from the initial state,
/// or only to Bob after Bob and Carol exchanged `c`. With `bob_succeeds`
/// the initial send to Bob ends well; otherwise only the late send does.
pub fn alice_bob_carol(bob_succeeds: bool) -> Msca {
    let finals: &[&[&str]] = if bob_succeeds { &[X1, Y] } else { &[Y] };
    build(
        "AliceBobCarol",
        Flavor::Choreography,
        S0,
        finals,
        &[
            (S0, &["!a", "?a", "-"], X1, Modality::Necessary),
            (S0, &["!a", "-", "?a"], X2, Modality::Necessary),
            (S0, &["-", "!c", "?c"], S1, Modality::Permitted),
            (S1, &["!a", "?a", "-"], Y, Modality::Necessary),
        ],
    )
}

/// A necessary request `a` of the first principal, served either at once or
/// after the second principal moves with `b`.
pub fn two_principals() -> Msca {
    let p = Msca::principal(
        "P",
        Flavor::Orchestration,
        "p0",
        &["p1"],
        &[("p0", "?a", "p1", Modality::Necessary)],
    )
    .unwrap();
    let q = Msca::principal(
        "Q",
        Flavor::Orchestration,
        "q0",
        &["q1", "q3"],
        &[
            ("q0", "!a", "q1", Modality::Permitted),
            ("q0", "!b", "q2", Modality::Permitted),
            ("q2", "!a", "q3", Modality::Permitted),
        ],
    )
    .unwrap();
    compose(&[p, q]).unwrap()
}

/// Deterministic random automata: an orchestration-flavored and a
/// choreography-flavored one per seed.
pub fn corpus(seeds: std::ops::Range<u64>) -> impl Iterator<Item = (u64, Msca, Msca)> {
    let config = RandomConfig::default();
    seeds.map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let orc = random_msca(&mut rng, Flavor::Orchestration, &config);
        let chor = random_msca(&mut rng, Flavor::Choreography, &config);
        (seed, orc, chor)
    })
}
