//! Reachability-based analyses over a single automaton.
//!
//! Agreement properties are decided structurally: a trace property fails on
//! some accepting run exactly when an offending transition is both reachable
//! from the initial state and co-reachable to a final state.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{ActionKind, Msca, StateVector, Transition};

/// States unreachable from the initial state or unable to reach a final one.
pub fn dangling(a: &Msca) -> BTreeSet<StateVector> {
    let g = Graph::new(a);
    let dangling = g.dangling(&g.all_alive());
    g.states
        .iter()
        .zip(dangling)
        .filter(|(_, d)| *d)
        .map(|(q, _)| (*q).clone())
        .collect()
}

fn forbidden_for(strong: bool) -> impl Fn(Option<ActionKind>) -> bool {
    move |kind| match kind {
        Some(ActionKind::Match) => false,
        Some(ActionKind::Offer) => strong,
        _ => true,
    }
}

// Some accepting run uses only allowed transitions.
fn admits(a: &Msca, forbidden: impl Fn(Option<ActionKind>) -> bool) -> bool {
    let g = Graph::new(a);
    let alive: Vec<bool> = g.kind.iter().map(|&k| !forbidden(k)).collect();
    let reach = g.reachable(&alive);
    (0..g.state_count()).any(|q| reach[q] && g.is_final[q])
}

// No accepting run uses a forbidden transition.
fn safe(a: &Msca, forbidden: impl Fn(Option<ActionKind>) -> bool) -> bool {
    let g = Graph::new(a);
    let all = g.all_alive();
    let reach = g.reachable(&all);
    let coreach = g.coreachable(&all);
    (0..g.transition_count())
        .filter(|&t| forbidden(g.kind[t]))
        .all(|t| !(reach[g.source[t]] && coreach[g.target[t]]))
}

/// Some accepting run contains no request action.
pub fn admits_agreement(a: &Msca) -> bool {
    admits(a, forbidden_for(false))
}

/// Every accepting run contains no request action.
pub fn is_safe(a: &Msca) -> bool {
    safe(a, forbidden_for(false))
}

/// Some accepting run consists of matches only.
pub fn admits_strong_agreement(a: &Msca) -> bool {
    admits(a, forbidden_for(true))
}

/// Every accepting run consists of matches only.
pub fn is_strongly_safe(a: &Msca) -> bool {
    safe(a, forbidden_for(true))
}

/// Match transitions violating the branching condition, ignoring the states
/// in `excluded` as well as every dangling state.
pub fn branching_violations(a: &Msca, excluded: &BTreeSet<StateVector>) -> BTreeSet<Transition> {
    let g = Graph::new(a);
    let alive = g.all_alive();
    let mut skip = g.dangling(&alive);
    for (q, s) in g.states.iter().zip(skip.iter_mut()) {
        *s |= excluded.contains(*q);
    }
    g.branching_violations(&alive, &skip)
        .into_iter()
        .map(|t| g.transitions[t].clone())
        .collect()
}

/// Componentwise inclusion with equal initial states.
pub fn is_sub_automaton(smaller: &Msca, larger: &Msca, ignore_modality: bool) -> Result<bool> {
    if smaller.rank() != larger.rank() {
        return Err(Error::RankMismatch {
            left: smaller.rank(),
            right: larger.rank(),
        });
    }
    let transitions_included = if ignore_modality {
        let triples: BTreeSet<_> = larger
            .transitions()
            .iter()
            .map(Transition::triple)
            .collect();
        smaller
            .transitions()
            .iter()
            .all(|t| triples.contains(&t.triple()))
    } else {
        smaller.transitions().is_subset(larger.transitions())
    };
    Ok(smaller.initial() == larger.initial()
        && smaller.states().is_subset(larger.states())
        && smaller.finals().is_subset(larger.finals())
        && transitions_included)
}
