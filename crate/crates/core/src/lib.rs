//! Modal service contract automata: composition, analysis and controller
//! synthesis for orchestrations and choreographies.

pub mod analysis;
pub mod composition;
pub mod error;
pub mod graph;
pub mod io;
pub mod model;
pub mod oracle;
pub mod synthesis;

pub use composition::compose;
pub use error::{Error, InvalidAction, Result};
pub use model::{
    ActionKind, ActionVector, BasicAction, Flavor, Modality, Msca, StateVector, Transition,
    Violation,
};
pub use synthesis::{choreography, mpc, orchestration, Controller, MpcProperty, TieBreak};
