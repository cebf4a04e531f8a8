//! Controller synthesis as instances of one fixed-point engine.

mod engine;
mod predicates;

use std::collections::BTreeSet;

pub use engine::{
    abstract_synthesize, abstract_synthesize_observed, Controller, PredicatePair, SynthesisInput,
    SynthesisOutcome, SynthesisSnapshot, SynthesisView,
};
pub use predicates::{
    choreography_predicates, mpc_predicates, orchestration_predicates, ChoreographyPredicates,
    ChoreographyRound, FnPredicates, MpcPredicates, OrchestrationPredicates, TieBreak,
};

use crate::error::{Error, Result};
use crate::model::{ActionKind, Flavor, Msca, StateVector};

/// The invariant enforced by [`mpc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MpcProperty {
    /// Every request is matched.
    Agreement,
    /// Every request and every offer is matched.
    StrongAgreement,
    /// Avoid the given states; the automaton is used as is.
    ExplicitForbidden(BTreeSet<StateVector>),
}

fn require_flavor(a: &Msca, expected: Flavor) -> Result<()> {
    if a.flavor() == expected {
        Ok(())
    } else {
        Err(Error::FlavorMismatch {
            expected,
            found: a.flavor(),
        })
    }
}

fn prepare(a: &Msca, unwanted: impl Fn(ActionKind) -> bool) -> SynthesisInput<MpcPredicates> {
    let is_unwanted = |t: &crate::model::Transition| t.kind().is_some_and(&unwanted);
    let forbidden = a
        .transitions()
        .iter()
        .filter(|t| t.is_necessary() && is_unwanted(t))
        .map(|t| t.source.clone())
        .collect();
    let automaton = a
        .clone()
        .retain_transitions(|t| t.is_necessary() || !is_unwanted(t));
    SynthesisInput::new(automaton, mpc_predicates()).with_forbidden(forbidden)
}

/// Encodes agreement as forbidden states: permitted requests are removed and
/// every state with an outgoing necessary request is forbidden.
pub fn prepare_agreement(a: &Msca) -> Result<SynthesisInput<MpcPredicates>> {
    require_flavor(a, Flavor::Orchestration)?;
    Ok(prepare(a, |k| k == ActionKind::Request))
}

/// Strong agreement counterpart of [`prepare_agreement`]: permitted requests
/// and offers are removed, and states with an outgoing necessary request or
/// offer are forbidden.
pub fn prepare_strong_agreement(a: &Msca) -> SynthesisInput<MpcPredicates> {
    prepare(a, |k| k != ActionKind::Match)
}

pub fn mpc_input(a: &Msca, property: &MpcProperty) -> Result<SynthesisInput<MpcPredicates>> {
    match property {
        MpcProperty::Agreement => prepare_agreement(a),
        MpcProperty::StrongAgreement => Ok(prepare_strong_agreement(a)),
        MpcProperty::ExplicitForbidden(states) => {
            Ok(SynthesisInput::new(a.clone(), mpc_predicates()).with_forbidden(states.clone()))
        }
    }
}

/// The most permissive controller, treating necessary transitions as
/// uncontrollable.
pub fn mpc(a: &Msca, property: &MpcProperty) -> Result<Controller> {
    Ok(abstract_synthesize(&mpc_input(a, property)?)?.controller)
}

pub fn orchestration_input(a: &Msca) -> Result<SynthesisInput<OrchestrationPredicates>> {
    require_flavor(a, Flavor::Orchestration)?;
    Ok(SynthesisInput::new(a.clone(), orchestration_predicates()))
}

/// The orchestration: the largest safe, non-blocking sub-automaton in which
/// every necessary request is matched on some run.
pub fn orchestration(a: &Msca) -> Result<Controller> {
    Ok(abstract_synthesize(&orchestration_input(a)?)?.controller)
}

pub fn choreography_input(
    a: &Msca,
    tiebreak: TieBreak,
) -> Result<SynthesisInput<ChoreographyPredicates>> {
    require_flavor(a, Flavor::Choreography)?;
    Ok(SynthesisInput::new(
        a.clone(),
        choreography_predicates(tiebreak),
    ))
}

/// A choreography: a strongly safe, non-blocking sub-automaton satisfying the
/// branching condition. Different tie-breaks may yield different ones.
pub fn choreography(a: &Msca, tiebreak: TieBreak) -> Result<Controller> {
    Ok(abstract_synthesize(&choreography_input(a, tiebreak)?)?.controller)
}
