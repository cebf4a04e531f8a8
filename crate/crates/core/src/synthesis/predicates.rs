//! Predicate pairs for the most permissive controller, the orchestration and
//! the choreography.

use std::collections::{BTreeSet, HashSet};

use super::engine::{PredicatePair, SynthesisView};
use crate::model::{ActionKind, BasicAction, Msca, StateVector, Transition};

/// Standard supervisory control: necessary transitions are uncontrollable.
///
/// Prunes transitions entering a bad state or leaving a forbidden one; the
/// source of a necessary transition entering a bad state becomes bad.
#[derive(Debug, Clone, Copy, Default)]
pub struct MpcPredicates;

pub fn mpc_predicates() -> MpcPredicates {
    MpcPredicates
}

impl PredicatePair for MpcPredicates {
    type Round = ();

    fn prepare(&self, _: &SynthesisView) {}

    fn prune(&self, _: &(), view: &SynthesisView, t: usize) -> bool {
        view.bad[view.graph.target[t]] || view.forbidden[view.graph.source[t]]
    }

    fn forbid(&self, _: &(), view: &SynthesisView, t: usize) -> bool {
        view.bad[view.graph.target[t]]
    }
}

/// Orchestration: requests are pruned, necessary requests are
/// semi-controllable.
///
/// A necessary request stays controllable while `K` still holds a necessary
/// match, between non-dangling states, in which the same principal in the
/// same local state performs the same request.
#[derive(Debug, Clone, Copy, Default)]
pub struct OrchestrationPredicates;

pub fn orchestration_predicates() -> OrchestrationPredicates {
    OrchestrationPredicates
}

impl PredicatePair for OrchestrationPredicates {
    /// (requesting principal, its local state, the request) of every witness.
    type Round = HashSet<(usize, String, BasicAction)>;

    fn prepare(&self, view: &SynthesisView) -> Self::Round {
        let g = view.graph;
        necessary_matches(view)
            .filter_map(|t| {
                let label = &g.transitions[t].label;
                let i = label.request_index()?;
                let local = g.states[g.source[t]].get(i)?;
                Some((i, local.to_string(), label.elements()[i].clone()))
            })
            .collect()
    }

    fn prune(&self, _: &Self::Round, view: &SynthesisView, t: usize) -> bool {
        view.graph.kind[t] == Some(ActionKind::Request) || view.bad[view.graph.target[t]]
    }

    fn forbid(&self, witnesses: &Self::Round, view: &SynthesisView, t: usize) -> bool {
        let g = view.graph;
        let label = &g.transitions[t].label;
        let Some(i) = label.request_index() else {
            // Only requests and matches on requests are semi-controllable here.
            return false;
        };
        let Some(local) = g.states[g.source[t]].get(i) else {
            return false;
        };
        !witnesses.contains(&(i, local.to_string(), label.elements()[i].clone()))
    }
}

/// How the choreography synthesis picks the branching violation to prune in
/// a round: the least or the greatest in canonical transition order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LexMin,
    LexMax,
}

/// Choreography: only matches survive, one branching violation is pruned per
/// round, and necessary offers are semi-controllable.
///
/// A necessary offer stays controllable while `K` still holds, from the same
/// source state, a necessary match between non-dangling states in which the
/// same principal sends the same offer.
#[derive(Debug, Clone, Copy, Default)]
pub struct ChoreographyPredicates {
    pub tiebreak: TieBreak,
}

pub fn choreography_predicates(tiebreak: TieBreak) -> ChoreographyPredicates {
    ChoreographyPredicates { tiebreak }
}

pub struct ChoreographyRound {
    /// (source state, sender, offer) of every witness.
    witnesses: HashSet<(usize, usize, BasicAction)>,
    selected: Option<usize>,
}

impl PredicatePair for ChoreographyPredicates {
    type Round = ChoreographyRound;

    fn prepare(&self, view: &SynthesisView) -> ChoreographyRound {
        let g = view.graph;
        let witnesses = necessary_matches(view)
            .map(|t| {
                let label = &g.transitions[t].label;
                let j = label.offer_index().expect("matches have a sender");
                (g.source[t], j, label.elements()[j].clone())
            })
            .collect();
        let excluded: Vec<bool> = view
            .bad
            .iter()
            .zip(view.dangling)
            .map(|(&b, &d)| b || d)
            .collect();
        let violations = g.branching_violations(view.alive, &excluded);
        let selected = match self.tiebreak {
            TieBreak::LexMin => violations.first().copied(),
            TieBreak::LexMax => violations.last().copied(),
        };
        ChoreographyRound {
            witnesses,
            selected,
        }
    }

    fn prune(&self, round: &ChoreographyRound, view: &SynthesisView, t: usize) -> bool {
        view.graph.kind[t] != Some(ActionKind::Match)
            || view.bad[view.graph.target[t]]
            || round.selected == Some(t)
    }

    fn forbid(&self, round: &ChoreographyRound, view: &SynthesisView, t: usize) -> bool {
        let g = view.graph;
        let label = &g.transitions[t].label;
        let Some(j) = label.offer_index() else {
            return false;
        };
        !round
            .witnesses
            .contains(&(g.source[t], j, label.elements()[j].clone()))
    }
}

// Live necessary matches whose endpoints are not dangling in K.
fn necessary_matches<'v>(view: &'v SynthesisView) -> impl Iterator<Item = usize> + 'v {
    let g = view.graph;
    (0..g.transition_count()).filter(move |&t| {
        view.alive[t]
            && g.kind[t] == Some(ActionKind::Match)
            && g.transitions[t].is_necessary()
            && !view.dangling[g.source[t]]
            && !view.dangling[g.target[t]]
    })
}

type Predicate = dyn Fn(&Transition, &Msca, &BTreeSet<StateVector>) -> bool;

/// Predicates given as plain functions of `(t, K, R)`.
///
/// `K` and `R` are materialised once per round, which makes this adapter
/// slow on large automata; it exists for experimentation and for checking
/// the optimised instantiations against their textbook form.
pub struct FnPredicates {
    pub prune: Box<Predicate>,
    pub forbid: Box<Predicate>,
}

impl FnPredicates {
    pub fn new(
        prune: impl Fn(&Transition, &Msca, &BTreeSet<StateVector>) -> bool + 'static,
        forbid: impl Fn(&Transition, &Msca, &BTreeSet<StateVector>) -> bool + 'static,
    ) -> Self {
        FnPredicates {
            prune: Box::new(prune),
            forbid: Box::new(forbid),
        }
    }
}

impl PredicatePair for FnPredicates {
    type Round = (Msca, BTreeSet<StateVector>);

    fn prepare(&self, view: &SynthesisView) -> Self::Round {
        (view.current_automaton(), view.bad_states())
    }

    fn prune(&self, (k, r): &Self::Round, view: &SynthesisView, t: usize) -> bool {
        (self.prune)(view.graph.transitions[t], k, r)
    }

    fn forbid(&self, (k, r): &Self::Round, view: &SynthesisView, t: usize) -> bool {
        (self.forbid)(view.graph.transitions[t], k, r)
    }
}
