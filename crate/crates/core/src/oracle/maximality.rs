//! Brute-force maximality: no transition dropped by a synthesis can be put
//! back without breaking what the synthesis guarantees.

use std::collections::BTreeSet;

use super::direct::{branching_set, dangling_under};
use crate::error::{Error, Result};
use crate::model::{ActionKind, Msca, StateVector, Transition};
use crate::synthesis::{mpc_input, Controller, MpcProperty};

/// Largest input [`maximality_check`] accepts.
pub const MAXIMALITY_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynthesisKind {
    Mpc(MpcProperty),
    Orchestration,
    Choreography,
}

/// Re-adds, one at a time, every transition of `a` missing from
/// `controller`, trims the result to its non-dangling part and checks that
/// it breaks a property the synthesis must guarantee. Returns the first
/// transition whose re-addition breaks nothing.
///
/// Re-additions that the trimming discards again are skipped: they do not
/// enlarge the controller.
pub fn maximality_check(
    a: &Msca,
    controller: &Controller,
    kind: &SynthesisKind,
) -> Result<Option<Transition>> {
    if a.transitions().len() > MAXIMALITY_LIMIT {
        return Err(Error::TooLarge {
            transitions: a.transitions().len(),
            limit: MAXIMALITY_LIMIT,
        });
    }
    let (base, forbidden) = match kind {
        SynthesisKind::Mpc(property) => {
            let input = mpc_input(a, property)?;
            (input.automaton, input.forbidden_states)
        }
        _ => (a.clone(), BTreeSet::new()),
    };

    let (states, transitions) = match controller {
        Controller::Automaton(k) => (k.states().clone(), k.transitions().clone()),
        Controller::Empty => ([base.initial().clone()].into(), BTreeSet::new()),
    };

    for t in base.transitions().difference(&transitions) {
        let mut ts = transitions.clone();
        ts.insert(t.clone());
        let mut qs = states.clone();
        qs.insert(t.source.clone());
        qs.insert(t.target.clone());
        let enlarged = trim(&base, qs, ts);
        if !enlarged.transitions().contains(t) {
            continue;
        }
        let broken = match kind {
            SynthesisKind::Mpc(_) => breaks_mpc(&base, &enlarged, &forbidden),
            SynthesisKind::Orchestration => breaks_orchestration(&base, &enlarged),
            SynthesisKind::Choreography => breaks_choreography(&base, &enlarged),
        };
        if !broken {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

fn trim(a: &Msca, states: BTreeSet<StateVector>, transitions: BTreeSet<Transition>) -> Msca {
    let candidate = Msca::new(
        a.name(),
        a.rank(),
        a.flavor(),
        states,
        a.initial().clone(),
        a.finals().iter().cloned(),
        transitions,
    );
    let dead = dangling_under(&candidate, candidate.transitions());
    Msca::new(
        a.name(),
        a.rank(),
        a.flavor(),
        candidate.states().difference(&dead).cloned(),
        a.initial().clone(),
        candidate
            .finals()
            .iter()
            .filter(|q| candidate.states().contains(*q) && !dead.contains(*q))
            .cloned(),
        candidate
            .transitions()
            .iter()
            .filter(|t| !dead.contains(&t.source) && !dead.contains(&t.target))
            .cloned(),
    )
}

// Some necessary transition of `a` leaves `e`.
fn escapes(a: &Msca, e: &Msca, uncontrollable: impl Fn(&Transition) -> bool) -> bool {
    a.necessary_transitions()
        .any(|t| e.states().contains(&t.source) && uncontrollable(t))
}

fn breaks_mpc(a: &Msca, e: &Msca, forbidden: &BTreeSet<StateVector>) -> bool {
    e.transitions()
        .iter()
        .any(|t| forbidden.contains(&t.source))
        || escapes(a, e, |t| !e.transitions().contains(t))
}

fn breaks_orchestration(a: &Msca, e: &Msca) -> bool {
    let witnessed = |t: &Transition| {
        let Some(i) = t.label.elements().iter().position(|x| x.is_request()) else {
            return true;
        };
        e.transitions().iter().any(|w| {
            w.is_necessary()
                && w.kind() == Some(ActionKind::Match)
                && w.source.get(i) == t.source.get(i)
                && w.label.get(i) == t.label.get(i)
        })
    };
    e.transitions()
        .iter()
        .any(|t| t.kind() == Some(ActionKind::Request))
        || escapes(a, e, |t| !witnessed(t))
}

fn breaks_choreography(a: &Msca, e: &Msca) -> bool {
    let witnessed = |t: &Transition| {
        let Some(i) = t.label.elements().iter().position(|x| x.is_offer()) else {
            return true;
        };
        e.transitions().iter().any(|w| {
            w.source == t.source
                && w.is_necessary()
                && w.kind() == Some(ActionKind::Match)
                && w.label.get(i) == t.label.get(i)
        })
    };
    e.transitions()
        .iter()
        .any(|t| t.kind() != Some(ActionKind::Match))
        || !branching_set(e, e.transitions(), &BTreeSet::new()).is_empty()
        || escapes(a, e, |t| !witnessed(t))
}
