//! Invariants of synthesis, analysis and the file format on random inputs.

mod common;

use std::collections::BTreeSet;

use common::corpus;
use msca::analysis::{
    admits_agreement, admits_strong_agreement, branching_violations, dangling, is_safe,
    is_strongly_safe, is_sub_automaton,
};
use msca::io::{parse, serialize};
use msca::oracle::{random_msca, RandomConfig};
use msca::synthesis::{
    abstract_synthesize, abstract_synthesize_observed, choreography, choreography_input, mpc,
    mpc_input, orchestration, orchestration_input, Controller, MpcProperty, PredicatePair,
    SynthesisInput, TieBreak,
};
use msca::{ActionKind, Flavor, Msca, StateVector, Transition};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random(seed: u64, flavor: Flavor) -> Msca {
    random_msca(
        &mut ChaCha8Rng::seed_from_u64(seed),
        flavor,
        &RandomConfig::default(),
    )
}

fn assert_monotone<P: PredicatePair>(input: &SynthesisInput<P>) -> Result<(), TestCaseError> {
    let mut snapshots = Vec::new();
    let outcome = abstract_synthesize_observed(input, |s| snapshots.push(s.clone())).unwrap();
    let a = &input.automaton;
    prop_assert!(outcome.iterations <= a.transitions().len() + a.states().len() + 1);
    prop_assert_eq!(snapshots.len(), outcome.iterations);
    for w in snapshots.windows(2) {
        prop_assert!(w[1].k.transitions().is_subset(w[0].k.transitions()));
        prop_assert!(w[0].r.is_subset(&w[1].r));
    }
    prop_assert_eq!(&snapshots.last().unwrap().r, &outcome.bad_states);
    Ok(())
}

fn idempotent(c: &Controller, again: impl Fn(&Msca) -> Controller) -> bool {
    match c {
        Controller::Empty => true,
        Controller::Automaton(a) => again(a) == *c,
    }
}

// Every run from the initial state to a final one, of at most `bound`
// transitions, as a sequence of transitions.
fn runs(a: &Msca, bound: usize) -> Vec<Vec<&Transition>> {
    let mut out = Vec::new();
    let mut stack: Vec<(&StateVector, Vec<&Transition>)> = vec![(a.initial(), vec![])];
    while let Some((q, path)) = stack.pop() {
        if a.is_final(q) {
            out.push(path.clone());
        }
        if path.len() == bound {
            continue;
        }
        for t in a.transitions().iter().filter(|t| &t.source == q) {
            let mut next = path.clone();
            next.push(t);
            stack.push((&t.target, next));
        }
    }
    out
}

fn tiny(seed: u64) -> Msca {
    let config = RandomConfig {
        max_rank: 2,
        max_states: 5,
        alphabet: 2,
        necessary: 0.3,
    };
    random_msca(
        &mut ChaCha8Rng::seed_from_u64(seed),
        Flavor::Orchestration,
        &config,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn fixpoint_iterates_are_monotone(seed in any::<u64>()) {
        let orc = random(seed, Flavor::Orchestration);
        let chor = random(seed, Flavor::Choreography);
        assert_monotone(&mpc_input(&orc, &MpcProperty::Agreement).unwrap())?;
        assert_monotone(&orchestration_input(&orc).unwrap())?;
        assert_monotone(&choreography_input(&chor, TieBreak::LexMin).unwrap())?;
        assert_monotone(&choreography_input(&chor, TieBreak::LexMax).unwrap())?;
    }

    #[test]
    fn synthesis_is_idempotent(seed in any::<u64>()) {
        let orc = random(seed, Flavor::Orchestration);
        let chor = random(seed, Flavor::Choreography);
        let m = mpc(&orc, &MpcProperty::Agreement).unwrap();
        prop_assert!(idempotent(&m, |a| mpc(a, &MpcProperty::Agreement).unwrap()));
        let o = orchestration(&orc).unwrap();
        prop_assert!(idempotent(&o, |a| orchestration(a).unwrap()));
        for tb in [TieBreak::LexMin, TieBreak::LexMax] {
            let c = choreography(&chor, tb).unwrap();
            prop_assert!(idempotent(&c, |a| choreography(a, tb).unwrap()));
        }
    }

    #[test]
    fn synthesis_is_deterministic(seed in any::<u64>()) {
        let chor = random(seed, Flavor::Choreography);
        let orc = random(seed, Flavor::Orchestration);
        prop_assert_eq!(orchestration(&orc).unwrap(), orchestration(&orc.clone()).unwrap());
        for tb in [TieBreak::LexMin, TieBreak::LexMax] {
            let input = choreography_input(&chor, tb).unwrap();
            let first = abstract_synthesize(&input).unwrap();
            let second = abstract_synthesize(&input).unwrap();
            prop_assert_eq!(first.controller, second.controller);
            prop_assert_eq!(first.iterations, second.iterations);
        }
    }

    #[test]
    fn outputs_satisfy_their_guarantees(seed in any::<u64>()) {
        let orc = random(seed, Flavor::Orchestration);
        let chor = random(seed, Flavor::Choreography);

        let input = mpc_input(&orc, &MpcProperty::Agreement).unwrap();
        let outcome = abstract_synthesize(&input).unwrap();
        if let Some(k) = outcome.controller.automaton() {
            prop_assert!(dangling(k).is_empty());
            prop_assert!(k.transitions().iter().all(|t| !outcome.bad_states.contains(&t.target)));
            for q in &input.forbidden_states {
                prop_assert!(!k.states().contains(q) || k.is_final(q));
                prop_assert!(k.transitions().iter().all(|t| &t.source != q));
            }
            prop_assert!(is_safe(k));
            prop_assert!(is_sub_automaton(k, &input.automaton, false).unwrap());
        }

        if let Some(o) = orchestration(&orc).unwrap().automaton() {
            prop_assert!(is_safe(o));
            prop_assert!(dangling(o).is_empty());
            prop_assert!(o.transitions().iter().all(|t| t.kind() != Some(ActionKind::Request)));
            // Every necessary request a surviving principal state may issue
            // is served by some necessary match of the orchestration.
            for t in orc.necessary_transitions().filter(|t| o.states().contains(&t.source)) {
                let i = t.label.request_index().unwrap();
                prop_assert!(o.transitions().iter().any(|w| w.is_necessary()
                    && w.kind() == Some(ActionKind::Match)
                    && w.source.get(i) == t.source.get(i)
                    && w.label.get(i) == t.label.get(i)), "{}", t);
            }
            prop_assert!(is_sub_automaton(o, &orc, false).unwrap());
        }

        for tb in [TieBreak::LexMin, TieBreak::LexMax] {
            if let Some(c) = choreography(&chor, tb).unwrap().automaton() {
                prop_assert!(is_strongly_safe(c));
                prop_assert!(dangling(c).is_empty());
                prop_assert!(branching_violations(c, &BTreeSet::new()).is_empty());
                prop_assert!(c.transitions().iter().all(|t| t.kind() == Some(ActionKind::Match)));
                prop_assert!(is_sub_automaton(c, &chor, false).unwrap());
            }
        }
    }

    #[test]
    fn sub_automaton_is_a_partial_order(seed in any::<u64>(), keep in 0.0f64..1.0) {
        let a = random(seed, Flavor::Orchestration);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        use rand::Rng;
        let kept: BTreeSet<Transition> = a.transitions().iter().filter(|_| rng.gen_bool(keep)).cloned().collect();
        let b = a.clone().retain_transitions(|t| kept.contains(t));
        let c = b.clone().retain_transitions(|t| t.is_necessary());
        prop_assert!(is_sub_automaton(&a, &a, false).unwrap());
        prop_assert!(is_sub_automaton(&b, &a, false).unwrap());
        prop_assert!(is_sub_automaton(&c, &b, false).unwrap());
        prop_assert!(is_sub_automaton(&c, &a, false).unwrap());
        if is_sub_automaton(&a, &b, false).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        let relaxed = a.clone().map_modalities(|_| msca::Modality::Permitted);
        prop_assert!(is_sub_automaton(&relaxed, &a, true).unwrap());
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>(), choreography in any::<bool>()) {
        let flavor = if choreography { Flavor::Choreography } else { Flavor::Orchestration };
        let a = random(seed, flavor);
        let text = serialize(&a);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn agreement_checks_match_bounded_runs(seed in any::<u64>()) {
        let a = tiny(seed);
        // Any run through an offending transition has a simple prefix and
        // suffix, so twice the state count bounds the witnesses needed.
        let all = runs(&a, 2 * a.states().len());
        let request = |t: &&Transition| t.kind() == Some(ActionKind::Request);
        let unmatched = |t: &&Transition| t.kind() != Some(ActionKind::Match);
        prop_assert_eq!(admits_agreement(&a), all.iter().any(|r| !r.iter().any(request)));
        prop_assert_eq!(is_safe(&a), all.iter().all(|r| !r.iter().any(request)));
        prop_assert_eq!(admits_strong_agreement(&a), all.iter().any(|r| !r.iter().any(unmatched)));
        prop_assert_eq!(is_strongly_safe(&a), all.iter().all(|r| !r.iter().any(unmatched)));
    }

    #[test]
    fn dangling_matches_bounded_runs(seed in any::<u64>()) {
        let a = tiny(seed);
        let all = runs(&a, 2 * a.states().len());
        let mut live: BTreeSet<&StateVector> = BTreeSet::new();
        for r in &all {
            live.insert(a.initial());
            for t in r {
                live.insert(&t.target);
            }
        }
        let expected: BTreeSet<StateVector> = a.states().iter().filter(|q| !live.contains(q)).cloned().collect();
        prop_assert_eq!(dangling(&a), expected);
    }
}

#[test]
fn corpus_outputs_are_trim() {
    for (_, orc, chor) in corpus(0..200) {
        for c in [
            mpc(&orc, &MpcProperty::StrongAgreement).unwrap(),
            orchestration(&orc).unwrap(),
            choreography(&chor, TieBreak::LexMin).unwrap(),
        ] {
            if let Some(a) = c.automaton() {
                assert!(dangling(a).is_empty());
                assert!(a.validate().is_empty());
            }
        }
    }
}
