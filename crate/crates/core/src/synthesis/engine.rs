//! The parametric fixed-point engine.
//!
//! Starting from `(K0, R0) = (A, Dangling(A))`, each round computes
//!
//! ```text
//! T(Ki) = T(Ki-1) \ { t in T(Ki-1) | prune(t, Ki-1, Ri-1) }
//! Ri    = Ri-1 ∪ { source(t) | t necessary in A, forbid(t, Ki-1, Ri-1) } ∪ Dangling(Ki)
//! ```
//!
//! until nothing changes. The controller is `Ks` without the states of `Rs`,
//! or empty when the initial state is bad.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{Msca, StateVector};

/// What a predicate sees of the current iterate `(K, R)`.
pub struct SynthesisView<'g, 'a> {
    pub graph: &'g Graph<'a>,
    /// Transitions of `K`, indexed like `graph.transitions`.
    pub alive: &'g [bool],
    /// The bad-state set `R`, indexed like `graph.states`.
    pub bad: &'g [bool],
    /// `Dangling(K)`.
    pub dangling: &'g [bool],
    /// States marked forbidden in the input.
    pub forbidden: &'g [bool],
}

impl SynthesisView<'_, '_> {
    /// `K` as a standalone automaton (same states as the input).
    pub fn current_automaton(&self) -> Msca {
        restrict(self.graph, self.alive)
    }

    pub fn bad_states(&self) -> BTreeSet<StateVector> {
        states_where(self.graph, self.bad)
    }
}

/// The pruning and forbidden predicates instantiating the engine.
///
/// `prepare` runs once per round, before either predicate is evaluated, and
/// may precompute anything that depends only on `(K, R)`. Both predicates must
/// be pure functions of the round and the transition.
pub trait PredicatePair {
    type Round;

    fn prepare(&self, view: &SynthesisView) -> Self::Round;

    /// True when transition `t` (a live transition of `K`) must be pruned.
    fn prune(&self, round: &Self::Round, view: &SynthesisView, t: usize) -> bool;

    /// True when the source of `t` (a necessary transition of the input)
    /// becomes bad.
    fn forbid(&self, round: &Self::Round, view: &SynthesisView, t: usize) -> bool;
}

pub struct SynthesisInput<P> {
    pub automaton: Msca,
    pub forbidden_states: BTreeSet<StateVector>,
    pub predicates: P,
}

impl<P> SynthesisInput<P> {
    pub fn new(automaton: Msca, predicates: P) -> Self {
        SynthesisInput {
            automaton,
            forbidden_states: BTreeSet::new(),
            predicates,
        }
    }

    pub fn with_forbidden(mut self, forbidden: BTreeSet<StateVector>) -> Self {
        self.forbidden_states = forbidden;
        self
    }
}

/// One iterate `(K, R)` of the fixed-point computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisSnapshot {
    pub k: Msca,
    pub r: BTreeSet<StateVector>,
}

/// Result of a synthesis: a controller, or the empty automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Controller {
    Empty,
    Automaton(Msca),
}

impl Controller {
    pub fn is_empty(&self) -> bool {
        matches!(self, Controller::Empty)
    }

    pub fn automaton(&self) -> Option<&Msca> {
        match self {
            Controller::Empty => None,
            Controller::Automaton(a) => Some(a),
        }
    }

    pub fn into_automaton(self) -> Option<Msca> {
        match self {
            Controller::Empty => None,
            Controller::Automaton(a) => Some(a),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SynthesisOutcome {
    pub controller: Controller,
    /// The bad states `Rs` at the fixed point.
    pub bad_states: BTreeSet<StateVector>,
    /// Rounds applied, including the final one that confirmed the fixed point.
    pub iterations: usize,
}

pub fn abstract_synthesize<P: PredicatePair>(
    input: &SynthesisInput<P>,
) -> Result<SynthesisOutcome> {
    run(input, None)
}

/// Like [`abstract_synthesize`], handing every iterate (starting with
/// `(K0, R0)`) to `observe`.
pub fn abstract_synthesize_observed<P: PredicatePair>(
    input: &SynthesisInput<P>,
    mut observe: impl FnMut(&SynthesisSnapshot),
) -> Result<SynthesisOutcome> {
    run(input, Some(&mut observe))
}

fn run<P: PredicatePair>(
    input: &SynthesisInput<P>,
    mut observe: Option<&mut dyn FnMut(&SynthesisSnapshot)>,
) -> Result<SynthesisOutcome> {
    let a = &input.automaton;
    a.ensure_valid()?;
    if let Some(q) = input
        .forbidden_states
        .iter()
        .find(|q| !a.states().contains(*q))
    {
        return Err(Error::UnknownState(q.clone()));
    }

    let g = Graph::new(a);
    let forbidden: Vec<bool> = g
        .states
        .iter()
        .map(|q| input.forbidden_states.contains(*q))
        .collect();
    let necessary: Vec<usize> = (0..g.transition_count())
        .filter(|&t| g.transitions[t].is_necessary())
        .collect();
    let limit = g.transition_count() + g.state_count() + 1;

    let mut alive = g.all_alive();
    let mut dangling = g.dangling(&alive);
    let mut bad = dangling.clone();
    let mut iterations = 0;

    loop {
        if let Some(observe) = observe.as_deref_mut() {
            observe(&snapshot(&g, &alive, &bad));
        }
        iterations += 1;
        if iterations > limit {
            return Err(Error::NonMonotonePredicate { iterations });
        }

        let view = SynthesisView {
            graph: &g,
            alive: &alive,
            bad: &bad,
            dangling: &dangling,
            forbidden: &forbidden,
        };
        let round = input.predicates.prepare(&view);

        let next_alive: Vec<bool> = (0..g.transition_count())
            .map(|t| alive[t] && !input.predicates.prune(&round, &view, t))
            .collect();
        let next_dangling = g.dangling(&next_alive);
        let mut next_bad: Vec<bool> = bad
            .iter()
            .zip(&next_dangling)
            .map(|(&b, &d)| b || d)
            .collect();
        for &t in &necessary {
            if input.predicates.forbid(&round, &view, t) {
                next_bad[g.source[t]] = true;
            }
        }

        if next_alive == alive && next_bad == bad {
            break;
        }
        alive = next_alive;
        bad = next_bad;
        dangling = next_dangling;
    }

    Ok(SynthesisOutcome {
        controller: extract(&g, &alive, &bad),
        bad_states: states_where(&g, &bad),
        iterations,
    })
}

fn states_where(g: &Graph, mask: &[bool]) -> BTreeSet<StateVector> {
    g.states
        .iter()
        .zip(mask)
        .filter(|(_, &m)| m)
        .map(|(q, _)| (*q).clone())
        .collect()
}

fn restrict(g: &Graph, alive: &[bool]) -> Msca {
    let kept: BTreeSet<_> = (0..g.transition_count())
        .filter(|&t| alive[t])
        .map(|t| g.transitions[t])
        .collect();
    g.msca.clone().retain_transitions(|t| kept.contains(t))
}

fn snapshot(g: &Graph, alive: &[bool], bad: &[bool]) -> SynthesisSnapshot {
    SynthesisSnapshot {
        k: restrict(g, alive),
        r: states_where(g, bad),
    }
}

// Drops the bad states and every transition touching them.
fn extract(g: &Graph, alive: &[bool], bad: &[bool]) -> Controller {
    if bad[g.initial] {
        return Controller::Empty;
    }
    let a = g.msca;
    let keep = |q: &StateVector| !bad[g.state_index(q).expect("indexed")];
    let transitions = (0..g.transition_count())
        .filter(|&t| alive[t] && !bad[g.source[t]] && !bad[g.target[t]])
        .map(|t| g.transitions[t].clone());
    Controller::Automaton(Msca::new(
        a.name(),
        a.rank(),
        a.flavor(),
        a.states().iter().filter(|q| keep(q)).cloned(),
        a.initial().clone(),
        a.finals().iter().filter(|q| keep(q)).cloned(),
        transitions,
    ))
}
