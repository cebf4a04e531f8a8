//! Random well-formed automata for property tests.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::model::{ActionVector, BasicAction, Flavor, Modality, Msca, StateVector, Transition};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomConfig {
    pub max_rank: usize,
    pub max_states: usize,
    /// Action names are drawn from the first `alphabet` lowercase letters.
    pub alphabet: usize,
    /// Probability that a transition allowed to be necessary is necessary.
    pub necessary: f64,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig {
            max_rank: 3,
            max_states: 30,
            alphabet: 3,
            necessary: 0.3,
        }
    }
}

fn name(i: usize) -> String {
    char::from(b'a' + i as u8).to_string()
}

/// A valid automaton of the given flavor with at least one final state.
///
/// Rank-1 automata draw request and offer names from disjoint halves of the
/// alphabet so that the principal condition holds.
pub fn random_msca<R: Rng + ?Sized>(rng: &mut R, flavor: Flavor, config: &RandomConfig) -> Msca {
    let rank = rng.gen_range(1..=config.max_rank.max(1));
    let target_states = rng.gen_range(1..=config.max_states.max(1));
    // Enough local labels per principal to reach the target state count.
    let mut locals: usize = 2;
    while locals.pow(rank as u32) < target_states {
        locals += 1;
    }
    let local = |rng: &mut R| format!("s{}", rng.gen_range(0..locals));

    let initial = StateVector::new(vec!["s0".to_string(); rank]);
    let mut states: BTreeSet<StateVector> = [initial.clone()].into();
    for _ in 0..target_states * 4 {
        if states.len() >= target_states {
            break;
        }
        states.insert(StateVector::new((0..rank).map(|_| local(rng))));
    }
    let pool: Vec<StateVector> = states.iter().cloned().collect();

    let alphabet = config.alphabet.max(2);
    let mut triples = BTreeSet::new();
    let mut transitions = Vec::new();
    let attempts = rng.gen_range(pool.len()..=3 * pool.len() + 2);
    for _ in 0..attempts {
        let source = pool.choose(rng).expect("non-empty").clone();
        let mut elements = vec![BasicAction::Idle; rank];
        let is_match = rank > 1 && rng.gen_bool(0.6);
        if is_match {
            let a = name(rng.gen_range(0..alphabet));
            let mut idx: Vec<usize> = (0..rank).collect();
            idx.shuffle(rng);
            elements[idx[0]] = BasicAction::Offer(a.clone());
            elements[idx[1]] = BasicAction::Request(a);
        } else {
            let i = rng.gen_range(0..rank);
            let request = rng.gen_bool(0.5);
            let n = if rank == 1 {
                let half = alphabet / 2;
                if request {
                    rng.gen_range(0..half.max(1))
                } else {
                    rng.gen_range(half.max(1)..alphabet)
                }
            } else {
                rng.gen_range(0..alphabet)
            };
            elements[i] = if request {
                BasicAction::Request(name(n))
            } else {
                BasicAction::Offer(name(n))
            };
        }

        // Idle principals keep their local state.
        let fits: Vec<&StateVector> = pool
            .iter()
            .filter(|q| (0..rank).all(|i| !elements[i].is_idle() || q.get(i) == source.get(i)))
            .collect();
        let target = (*fits.choose(rng).expect("the source itself fits")).clone();

        let label = ActionVector::new(elements);
        let kind = label.classify().expect("generated labels are well formed");
        let may_be_necessary = match flavor {
            Flavor::Orchestration => kind != crate::model::ActionKind::Offer,
            Flavor::Choreography => kind != crate::model::ActionKind::Request,
        };
        let modality = if may_be_necessary && rng.gen_bool(config.necessary) {
            Modality::Necessary
        } else {
            Modality::Permitted
        };
        if triples.insert((source.clone(), label.clone(), target.clone())) {
            transitions.push(Transition::new(source, label, target, modality));
        }
    }

    let mut finals: BTreeSet<StateVector> =
        pool.iter().filter(|_| rng.gen_bool(0.3)).cloned().collect();
    if finals.is_empty() {
        finals.insert(pool.choose(rng).expect("non-empty").clone());
    }

    let a = Msca::new("random", rank, flavor, pool, initial, finals, transitions);
    debug_assert!(a.validate().is_empty(), "{:?}", a.validate());
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_automata_are_valid_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let config = RandomConfig::default();
        for k in 0..300 {
            let flavor = if k % 2 == 0 {
                Flavor::Orchestration
            } else {
                Flavor::Choreography
            };
            let a = random_msca(&mut rng, flavor, &config);
            assert!(a.validate().is_empty(), "{:?}", a.validate());
            assert!(a.rank() <= 3);
            assert!(a.states().len() <= 30);
            assert!(!a.finals().is_empty());
        }
    }

    #[test]
    fn same_seed_same_automaton() {
        let config = RandomConfig::default();
        let a = random_msca(
            &mut ChaCha8Rng::seed_from_u64(3),
            Flavor::Choreography,
            &config,
        );
        let b = random_msca(
            &mut ChaCha8Rng::seed_from_u64(3),
            Flavor::Choreography,
            &config,
        );
        assert_eq!(a, b);
    }
}
