//! Reference implementations and brute-force checkers for validating the
//! synthesis engine on small inputs.

mod direct;
mod maximality;
mod random;

pub use direct::{direct_choreography, direct_mpc, direct_orchestration};
pub use maximality::{maximality_check, SynthesisKind, MAXIMALITY_LIMIT};
pub use random::{random_msca, RandomConfig};
