//! The three concrete synthesis functions, transcribed one by one.
//!
//! Nothing here goes through the engine or [`crate::graph::Graph`]: iterates
//! are plain sets of transitions and states, and semi-controllability is
//! judged against the freshly pruned `Ki` rather than `Ki-1`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::model::{ActionKind, Flavor, Msca, StateVector, Transition};
use crate::synthesis::{Controller, MpcPredicates, SynthesisInput, TieBreak};

type Transitions = BTreeSet<Transition>;
type States = BTreeSet<StateVector>;

fn closure<'a>(
    roots: impl IntoIterator<Item = &'a StateVector>,
    step: &HashMap<&'a StateVector, Vec<&'a StateVector>>,
) -> BTreeSet<&'a StateVector> {
    let mut seen: BTreeSet<&StateVector> = BTreeSet::new();
    let mut queue: VecDeque<&StateVector> = VecDeque::new();
    for r in roots {
        if seen.insert(r) {
            queue.push_back(r);
        }
    }
    while let Some(q) = queue.pop_front() {
        for &next in step.get(q).into_iter().flatten() {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// States of `a` not on any path from the initial state to a final state
/// using only `ts`.
pub(crate) fn dangling_under(a: &Msca, ts: &Transitions) -> States {
    let mut forward: HashMap<&StateVector, Vec<&StateVector>> = HashMap::new();
    let mut backward: HashMap<&StateVector, Vec<&StateVector>> = HashMap::new();
    for t in ts {
        forward.entry(&t.source).or_default().push(&t.target);
        backward.entry(&t.target).or_default().push(&t.source);
    }
    let reached = closure([a.initial()], &forward);
    let productive = closure(a.finals(), &backward);
    a.states()
        .iter()
        .filter(|q| !(reached.contains(q) && productive.contains(q)))
        .cloned()
        .collect()
}

fn fixpoint(
    a: &Msca,
    mut f: impl FnMut(&Transitions, &States) -> (Transitions, States),
) -> Result<(Transitions, States)> {
    let mut k = a.transitions().clone();
    let mut r = dangling_under(a, &k);
    let bound = a.transitions().len() + a.states().len() + 1;
    for _ in 0..bound {
        let (k_next, r_next) = f(&k, &r);
        if k_next == k && r_next == r {
            return Ok((k, r));
        }
        k = k_next;
        r = r_next;
    }
    Err(Error::NonMonotonePredicate { iterations: bound })
}

fn extract(a: &Msca, k: &Transitions, r: &States) -> Controller {
    if r.contains(a.initial()) {
        return Controller::Empty;
    }
    Controller::Automaton(Msca::new(
        a.name(),
        a.rank(),
        a.flavor(),
        a.states().difference(r).cloned(),
        a.initial().clone(),
        a.finals().difference(r).cloned(),
        k.iter()
            .filter(|t| !r.contains(&t.source) && !r.contains(&t.target))
            .cloned(),
    ))
}

fn expect_flavor(a: &Msca, flavor: Flavor) -> Result<()> {
    a.ensure_valid()?;
    if a.flavor() != flavor {
        return Err(Error::FlavorMismatch {
            expected: flavor,
            found: a.flavor(),
        });
    }
    Ok(())
}

/// Standard synthesis: necessary transitions are uncontrollable, the states
/// of `input.forbidden_states` must be avoided.
pub fn direct_mpc(input: &SynthesisInput<MpcPredicates>) -> Result<Controller> {
    let a = &input.automaton;
    a.ensure_valid()?;
    let forbidden = &input.forbidden_states;
    if let Some(q) = forbidden.difference(a.states()).next() {
        return Err(Error::UnknownState(q.clone()));
    }
    let (k, r) = fixpoint(a, |k, r| {
        let k_next: Transitions = k
            .iter()
            .filter(|t| !(r.contains(&t.target) || forbidden.contains(&t.source)))
            .cloned()
            .collect();
        let mut r_next = r.clone();
        for t in a.necessary_transitions() {
            if r.contains(&t.target) {
                r_next.insert(t.source.clone());
            }
        }
        r_next.extend(dangling_under(a, &k_next));
        (k_next, r_next)
    })?;
    Ok(extract(a, &k, &r))
}

// A necessary request or match stays controllable in `k` if some necessary
// match of `k` between non-dangling states has the same principal, in the
// same local state, performing the same request.
fn orchestration_uncontrollable(t: &Transition, k: &Transitions, dangling: &States) -> bool {
    let Some(i) = t.label.elements().iter().position(|e| e.is_request()) else {
        return false;
    };
    !k.iter().any(|w| {
        w.is_necessary()
            && w.kind() == Some(ActionKind::Match)
            && !dangling.contains(&w.source)
            && !dangling.contains(&w.target)
            && w.source.get(i) == t.source.get(i)
            && w.label.get(i) == t.label.get(i)
    })
}

pub fn direct_orchestration(a: &Msca) -> Result<Controller> {
    expect_flavor(a, Flavor::Orchestration)?;
    let (k, r) = fixpoint(a, |k, r| {
        let k_next: Transitions = k
            .iter()
            .filter(|t| !(r.contains(&t.target) || t.kind() == Some(ActionKind::Request)))
            .cloned()
            .collect();
        let d = dangling_under(a, &k_next);
        let mut r_next = r.clone();
        for t in a.necessary_transitions() {
            if orchestration_uncontrollable(t, &k_next, &d) {
                r_next.insert(t.source.clone());
            }
        }
        r_next.extend(d);
        (k_next, r_next)
    })?;
    Ok(extract(a, &k, &r))
}

fn sender(t: &Transition) -> Option<usize> {
    t.label.elements().iter().position(|e| e.is_offer())
}

// A necessary offer or match stays controllable in `k` if, from the same
// source, some necessary match of `k` into a non-dangling state has the same
// principal sending the same offer.
fn choreography_uncontrollable(t: &Transition, k: &Transitions, dangling: &States) -> bool {
    let Some(i) = sender(t) else {
        return false;
    };
    dangling.contains(&t.source)
        || !k.iter().any(|w| {
            w.source == t.source
                && w.is_necessary()
                && w.kind() == Some(ActionKind::Match)
                && !dangling.contains(&w.target)
                && w.label.get(i) == t.label.get(i)
        })
}

/// Matches of `k` from a state outside `r` such that some other state
/// outside `r`, agreeing on the sender's local state, lacks the same label.
pub(crate) fn branching_set(a: &Msca, k: &Transitions, r: &States) -> Vec<Transition> {
    let mut enabled: BTreeSet<(&StateVector, &crate::model::ActionVector)> = BTreeSet::new();
    for t in k {
        enabled.insert((&t.source, &t.label));
    }
    let candidates: Vec<&StateVector> = a.states().iter().filter(|q| !r.contains(*q)).collect();
    k.iter()
        .filter(|t| t.kind() == Some(ActionKind::Match) && !r.contains(&t.source))
        .filter(|t| {
            let j = sender(t).expect("matches have a sender");
            candidates
                .iter()
                .any(|q2| q2.get(j) == t.source.get(j) && !enabled.contains(&(*q2, &t.label)))
        })
        .cloned()
        .collect()
}

pub fn direct_choreography(a: &Msca, tiebreak: TieBreak) -> Result<Controller> {
    expect_flavor(a, Flavor::Choreography)?;
    let (k, r) = fixpoint(a, |k, r| {
        let violations = branching_set(a, k, r);
        let picked = match tiebreak {
            TieBreak::LexMin => violations.first(),
            TieBreak::LexMax => violations.last(),
        };
        let k_next: Transitions = k
            .iter()
            .filter(|t| {
                !(r.contains(&t.target)
                    || t.kind() != Some(ActionKind::Match)
                    || Some(*t) == picked)
            })
            .cloned()
            .collect();
        let d = dangling_under(a, &k_next);
        let mut r_next = r.clone();
        for t in a.necessary_transitions() {
            if choreography_uncontrollable(t, &k_next, &d) {
                r_next.insert(t.source.clone());
            }
        }
        r_next.extend(d);
        (k_next, r_next)
    })?;
    debug_assert!(branching_set(a, &k, &r).is_empty());
    Ok(extract(a, &k, &r))
}
