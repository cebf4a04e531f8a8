use std::fmt;

use thiserror::Error;

use crate::model::{Flavor, StateVector, Violation};

/// Why an action vector is not a request, an offer or a match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InvalidAction {
    #[error("every element is idle")]
    AllIdle,
    #[error("the two active elements are not a complementary request/offer pair")]
    NotComplementary,
    #[error("{0} active elements, at most two allowed")]
    TooManyActive(usize),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid automaton:{}", ViolationList(.0))]
    Validation(Vec<Violation>),

    #[error("operands mix orchestration and choreography flavors")]
    MixedFlavor,

    #[error("composition needs at least one operand")]
    EmptyOperandList,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("expected a {expected} automaton, got a {found} one")]
    FlavorMismatch { expected: Flavor, found: Flavor },

    #[error("state {0} is not a state of the automaton")]
    UnknownState(StateVector),

    #[error(
        "synthesis did not converge after {iterations} iterations; the predicates are not monotone"
    )]
    NonMonotonePredicate { iterations: usize },

    #[error("automaton has {transitions} transitions, brute-force limit is {limit}")]
    TooLarge { transitions: usize, limit: usize },

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

struct ViolationList<'a>(&'a [Violation]);

impl fmt::Display for ViolationList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.0 {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
