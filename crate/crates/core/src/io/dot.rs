//! Graphviz rendering.

use std::fmt::Write;

use crate::model::Msca;
use crate::synthesis::Controller;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// One node per state (finals get a double border), one labelled edge per
/// transition, and an arrow from a point node into the initial state.
pub fn to_dot(a: &Msca) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(a.name())).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    let index = |q| a.states().iter().position(|s| s == q).expect("state");
    for (k, q) in a.states().iter().enumerate() {
        let border = if a.is_final(q) { ", peripheries=2" } else { "" };
        writeln!(out, "  n{k} [label={}{border}];", quote(&q.to_string())).unwrap();
    }
    writeln!(out, "  init [shape=point];").unwrap();
    writeln!(out, "  init -> n{};", index(a.initial())).unwrap();
    for t in a.transitions() {
        let label = format!("{}{}", t.label, t.modality.symbol());
        writeln!(
            out,
            "  n{} -> n{} [label={}];",
            index(&t.source),
            index(&t.target),
            quote(&label)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Like [`to_dot`]; the empty controller becomes a single `EMPTY` box.
pub fn controller_to_dot(c: &Controller) -> String {
    match c {
        Controller::Automaton(a) => to_dot(a),
        Controller::Empty => {
            "digraph \"empty\" {\n  empty [shape=box, label=\"EMPTY\"];\n}\n".to_string()
        }
    }
}
