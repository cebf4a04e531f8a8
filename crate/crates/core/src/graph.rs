//! Integer-indexed view of an automaton used by the analyses and the engine.
//!
//! States and transitions are numbered in their canonical (sorted) order, so
//! "least transition" and "least index" coincide.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::model::{ActionKind, ActionVector, Msca, StateVector, Transition};

pub struct Graph<'a> {
    pub msca: &'a Msca,
    pub states: Vec<&'a StateVector>,
    pub transitions: Vec<&'a Transition>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub kind: Vec<Option<ActionKind>>,
    pub initial: usize,
    pub is_final: Vec<bool>,
    pub outgoing: Vec<Vec<usize>>,
    pub incoming: Vec<Vec<usize>>,
    index: HashMap<&'a StateVector, usize>,
}

impl<'a> Graph<'a> {
    pub fn new(msca: &'a Msca) -> Self {
        // Endpoints outside the state set are tolerated so the analyses stay
        // total on unvalidated input.
        let mut all: Vec<&StateVector> = msca.states().iter().collect();
        all.push(msca.initial());
        all.extend(msca.finals());
        for t in msca.transitions() {
            all.push(&t.source);
            all.push(&t.target);
        }
        all.sort();
        all.dedup();

        let index: HashMap<&StateVector, usize> =
            all.iter().enumerate().map(|(i, q)| (*q, i)).collect();
        let transitions: Vec<&Transition> = msca.transitions().iter().collect();
        let source: Vec<usize> = transitions.iter().map(|t| index[&t.source]).collect();
        let target: Vec<usize> = transitions.iter().map(|t| index[&t.target]).collect();
        let mut outgoing = vec![Vec::new(); all.len()];
        let mut incoming = vec![Vec::new(); all.len()];
        for (t, (&s, &d)) in source.iter().zip(&target).enumerate() {
            outgoing[s].push(t);
            incoming[d].push(t);
        }
        let is_final = all.iter().map(|q| msca.is_final(q)).collect();
        Graph {
            msca,
            initial: index[msca.initial()],
            kind: transitions.iter().map(|t| t.kind()).collect(),
            states: all,
            transitions,
            source,
            target,
            is_final,
            outgoing,
            incoming,
            index,
        }
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn state_index(&self, q: &StateVector) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn all_alive(&self) -> Vec<bool> {
        vec![true; self.transition_count()]
    }

    /// States reachable from the initial state along `alive` transitions.
    pub fn reachable(&self, alive: &[bool]) -> Vec<bool> {
        self.search([self.initial], &self.outgoing, &self.target, alive)
    }

    /// States from which some final state is reachable along `alive` transitions.
    pub fn coreachable(&self, alive: &[bool]) -> Vec<bool> {
        let finals = (0..self.state_count()).filter(|&q| self.is_final[q]);
        self.search(finals, &self.incoming, &self.source, alive)
    }

    /// Dangling states: unreachable, or unable to reach a final state.
    pub fn dangling(&self, alive: &[bool]) -> Vec<bool> {
        let fwd = self.reachable(alive);
        let bwd = self.coreachable(alive);
        fwd.iter().zip(&bwd).map(|(&f, &b)| !(f && b)).collect()
    }

    fn search(
        &self,
        roots: impl IntoIterator<Item = usize>,
        edges: &[Vec<usize>],
        endpoint: &[usize],
        alive: &[bool],
    ) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::new();
        for r in roots {
            if !seen[r] {
                seen[r] = true;
                queue.push_back(r);
            }
        }
        while let Some(q) = queue.pop_front() {
            for &t in &edges[q] {
                let next = endpoint[t];
                if alive[t] && !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Match transitions violating the branching condition.
    ///
    /// A live match `t` from `q1` with sender `j` violates it when some other
    /// state `q2`, sharing `q1`'s local state at `j`, has no live transition
    /// with the same label. Both states must be outside `excluded`. Returned
    /// in canonical transition order.
    pub fn branching_violations(&self, alive: &[bool], excluded: &[bool]) -> Vec<usize> {
        // (sender index, sender local state) -> number of candidate states.
        let mut sharing: HashMap<(usize, &str), usize> = HashMap::new();
        for (q, state) in self.states.iter().enumerate() {
            if excluded[q] {
                continue;
            }
            for (j, local) in state.labels().iter().enumerate() {
                *sharing.entry((j, local.as_str())).or_default() += 1;
            }
        }

        // (label, sender local state) -> number of candidate states enabling it.
        let mut enabling: HashMap<(&ActionVector, &str), usize> = HashMap::new();
        let mut counted: HashSet<(usize, &ActionVector)> = HashSet::new();
        for (t, _) in alive.iter().enumerate().filter(|(_, &a)| a) {
            if self.kind[t] != Some(ActionKind::Match) {
                continue;
            }
            let q = self.source[t];
            let label = &self.transitions[t].label;
            if excluded[q] || !counted.insert((q, label)) {
                continue;
            }
            let j = label.offer_index().expect("matches have a sender");
            if let Some(local) = self.states[q].get(j) {
                *enabling.entry((label, local)).or_default() += 1;
            }
        }

        (0..self.transition_count())
            .filter(|&t| alive[t] && self.kind[t] == Some(ActionKind::Match))
            .filter(|&t| !excluded[self.source[t]])
            .filter(|&t| {
                let label = &self.transitions[t].label;
                let j = label.offer_index().expect("matches have a sender");
                match self.states[self.source[t]].get(j) {
                    Some(local) => sharing[&(j, local)] > enabling[&(label, local)],
                    None => false,
                }
            })
            .collect()
    }
}
