//! The JSON automaton format, DOT export and the bundled fixtures.
//!
//! A document looks like
//!
//! ```json
//! {
//!   "name": "Client",
//!   "rank": 1,
//!   "flavor": "orchestration",
//!   "states": [["c0"], ["c1"]],
//!   "initial": ["c0"],
//!   "finals": [["c0"]],
//!   "transitions": [
//!     { "from": ["c0"], "label": ["!qry"], "to": ["c1"], "modality": "permitted" }
//!   ]
//! }
//! ```
//!
//! Serialization is canonical: every array is sorted, so equal automata
//! serialize to identical text.

mod dot;
mod fixtures;

pub use dot::{controller_to_dot, to_dot};
pub use fixtures::{
    a1_operands, a2_operands, broker, client, fixtures, hotel, privileged_client, privileged_hotel,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ActionVector, BasicAction, Flavor, Modality, Msca, StateVector, Transition};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    name: String,
    rank: usize,
    flavor: String,
    states: Vec<Vec<String>>,
    initial: Vec<String>,
    finals: Vec<Vec<String>>,
    transitions: Vec<TransitionDocument>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransitionDocument {
    from: Vec<String>,
    label: Vec<String>,
    to: Vec<String>,
    modality: String,
}

fn flavor_name(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::Orchestration => "orchestration",
        Flavor::Choreography => "choreography",
    }
}

fn modality_name(modality: Modality) -> &'static str {
    match modality {
        Modality::Permitted => "permitted",
        Modality::Necessary => "necessary",
    }
}

fn parse_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        message: message.into(),
    }
}

/// Reads a document and validates the automaton it describes.
pub fn parse(text: &str) -> Result<Msca> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        parse_error(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;

    let flavor = match doc.flavor.as_str() {
        "orchestration" => Flavor::Orchestration,
        "choreography" => Flavor::Choreography,
        other => {
            return Err(parse_error(
                "flavor",
                format!("expected \"orchestration\" or \"choreography\", got {other:?}"),
            ))
        }
    };

    let mut transitions = Vec::with_capacity(doc.transitions.len());
    for (k, t) in doc.transitions.into_iter().enumerate() {
        let label = t
            .label
            .iter()
            .enumerate()
            .map(|(i, e)| {
                e.parse::<BasicAction>()
                    .map_err(|msg| parse_error(format!("transitions[{k}].label[{i}]"), msg))
            })
            .collect::<Result<Vec<_>>>()?;
        let modality = match t.modality.as_str() {
            "permitted" => Modality::Permitted,
            "necessary" => Modality::Necessary,
            other => {
                return Err(parse_error(
                    format!("transitions[{k}].modality"),
                    format!("expected \"permitted\" or \"necessary\", got {other:?}"),
                ))
            }
        };
        transitions.push(Transition::new(
            StateVector::new(t.from),
            ActionVector::new(label),
            StateVector::new(t.to),
            modality,
        ));
    }

    Msca::checked(
        doc.name,
        doc.rank,
        flavor,
        doc.states.into_iter().map(StateVector::new),
        StateVector::new(doc.initial),
        doc.finals.into_iter().map(StateVector::new),
        transitions,
    )
}

/// Canonical pretty-printed document.
pub fn serialize(a: &Msca) -> String {
    let labels = |q: &StateVector| q.labels().to_vec();
    let doc = Document {
        name: a.name().to_string(),
        rank: a.rank(),
        flavor: flavor_name(a.flavor()).to_string(),
        states: a.states().iter().map(labels).collect(),
        initial: labels(a.initial()),
        finals: a.finals().iter().map(labels).collect(),
        transitions: a
            .transitions()
            .iter()
            .map(|t| TransitionDocument {
                from: labels(&t.source),
                label: t.label.elements().iter().map(ToString::to_string).collect(),
                to: labels(&t.target),
                modality: modality_name(t.modality).to_string(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("documents always serialize");
    text.push('\n');
    text
}
