//! Product composition of contract automata with match forcing.
//!
//! From every reachable composed state, each operand transition either
//! synchronises with a complementary pending action of another operand (a
//! match) or, when no such partner is enabled, moves alone while every other
//! operand stays idle. Matches already present inside an operand are never
//! rearranged.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::model::{ActionVector, BasicAction, Modality, Msca, StateVector, Transition};

struct Operand<'a> {
    offset: usize,
    states: Vec<&'a StateVector>,
    moves: Vec<Vec<Move<'a>>>,
}

struct Move<'a> {
    transition: &'a Transition,
    target: usize,
    pending: Option<&'a BasicAction>,
}

impl<'a> Operand<'a> {
    fn new(msca: &'a Msca, offset: usize) -> Self {
        let states: Vec<&StateVector> = msca.states().iter().collect();
        let index: HashMap<&StateVector, usize> =
            states.iter().enumerate().map(|(i, q)| (*q, i)).collect();
        let mut moves: Vec<Vec<Move>> = states.iter().map(|_| Vec::new()).collect();
        for t in msca.transitions() {
            moves[index[&t.source]].push(Move {
                transition: t,
                target: index[&t.target],
                pending: t.label.pending().map(|(_, a)| a),
            });
        }
        Operand {
            offset,
            states,
            moves,
        }
    }

    fn state_index(&self, q: &StateVector) -> usize {
        self.states
            .binary_search(&q)
            .expect("validated initial state")
    }
}

/// Composes `operands` left to right into a single automaton of summed rank.
///
/// Only the part reachable from the composed initial state is generated.
pub fn compose(operands: &[Msca]) -> Result<Msca> {
    let first = operands.first().ok_or(Error::EmptyOperandList)?;
    if operands.iter().any(|a| a.flavor() != first.flavor()) {
        return Err(Error::MixedFlavor);
    }
    for a in operands {
        a.ensure_valid()?;
    }

    let mut offset = 0;
    let parts: Vec<Operand> = operands
        .iter()
        .map(|a| {
            let op = Operand::new(a, offset);
            offset += a.rank();
            op
        })
        .collect();
    let rank = offset;

    let initial: Vec<usize> = parts
        .iter()
        .zip(operands)
        .map(|(p, a)| p.state_index(a.initial()))
        .collect();

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(initial.clone());
    let mut frontier = vec![initial.clone()];
    let mut edges: Vec<(Vec<usize>, ActionVector, Vec<usize>, Modality)> = Vec::new();

    // Breadth-first, one sorted layer at a time.
    while !frontier.is_empty() {
        let mut next_layer = BTreeSet::new();
        for state in &frontier {
            for (label, target, modality) in successors(&parts, state, rank) {
                if seen.insert(target.clone()) {
                    next_layer.insert(target.clone());
                }
                edges.push((state.clone(), label, target, modality));
            }
        }
        frontier = next_layer.into_iter().collect();
    }

    let vector =
        |local: &[usize]| StateVector::concat(parts.iter().zip(local).map(|(p, &i)| p.states[i]));
    let is_final = |local: &[usize]| {
        parts
            .iter()
            .zip(operands)
            .zip(local)
            .all(|((p, a), &i)| a.is_final(p.states[i]))
    };

    let name = operands
        .iter()
        .map(Msca::name)
        .collect::<Vec<_>>()
        .join(" ⊗ ");
    let finals: Vec<StateVector> = seen
        .iter()
        .filter(|q| is_final(q))
        .map(|q| vector(q))
        .collect();
    let transitions: Vec<Transition> = edges
        .iter()
        .map(|(s, l, d, m)| Transition::new(vector(s), l.clone(), vector(d), *m))
        .collect();
    Ok(Msca::new(
        name,
        rank,
        first.flavor(),
        seen.iter().map(|q| vector(q)),
        vector(&initial),
        finals,
        transitions,
    ))
}

fn successors(
    parts: &[Operand],
    state: &[usize],
    rank: usize,
) -> Vec<(ActionVector, Vec<usize>, Modality)> {
    let enabled: Vec<&[Move]> = parts
        .iter()
        .zip(state)
        .map(|(p, &q)| p.moves[q].as_slice())
        .collect();

    let has_partner = |i: usize, action: &BasicAction| {
        enabled.iter().enumerate().any(|(j, moves)| {
            j != i
                && moves
                    .iter()
                    .any(|m| m.pending.is_some_and(|p| p.complements(action)))
        })
    };

    let mut out = Vec::new();
    for (i, moves) in enabled.iter().enumerate() {
        for m in moves.iter() {
            match m.pending {
                Some(action) if has_partner(i, action) => {
                    // Emit each match once, from its request side.
                    if !action.is_request() {
                        continue;
                    }
                    for (j, partners) in enabled.iter().enumerate() {
                        if j == i {
                            continue;
                        }
                        for p in partners
                            .iter()
                            .filter(|p| p.pending.is_some_and(|o| o.complements(action)))
                        {
                            let mut label = vec![BasicAction::Idle; rank];
                            place(&mut label, &parts[i], &m.transition.label);
                            place(&mut label, &parts[j], &p.transition.label);
                            let mut target = state.to_vec();
                            target[i] = m.target;
                            target[j] = p.target;
                            let modality = m.transition.modality.max(p.transition.modality);
                            out.push((ActionVector::new(label), target, modality));
                        }
                    }
                }
                _ => {
                    let mut label = vec![BasicAction::Idle; rank];
                    place(&mut label, &parts[i], &m.transition.label);
                    let mut target = state.to_vec();
                    target[i] = m.target;
                    out.push((ActionVector::new(label), target, m.transition.modality));
                }
            }
        }
    }
    out
}

fn place(label: &mut [BasicAction], operand: &Operand, local: &ActionVector) {
    for (k, a) in local.elements().iter().enumerate() {
        if !a.is_idle() {
            label[operand.offset + k] = a.clone();
        }
    }
}
