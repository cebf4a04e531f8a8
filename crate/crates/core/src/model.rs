//! Actions, state vectors, transitions and the automaton itself.
//!
//! All types here are plain immutable values. Ordering is structural and
//! lexicographic everywhere, so iterating a [`Msca`] is deterministic and
//! matches the order of its serialized form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, InvalidAction};

/// A single principal's contribution to an action.
///
/// The variant order (`Offer < Idle < Request`) mirrors the byte order of the
/// textual encoding (`!a` < `-` < `?a`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicAction {
    Offer(String),
    Idle,
    Request(String),
}

impl BasicAction {
    /// The complementary action: requests and offers swap, idle stays idle.
    pub fn co(&self) -> BasicAction {
        match self {
            BasicAction::Request(a) => BasicAction::Offer(a.clone()),
            BasicAction::Offer(a) => BasicAction::Request(a.clone()),
            BasicAction::Idle => BasicAction::Idle,
        }
    }

    pub fn is_idle(&self) -> bool {
        matches!(self, BasicAction::Idle)
    }

    pub fn is_request(&self) -> bool {
        matches!(self, BasicAction::Request(_))
    }

    pub fn is_offer(&self) -> bool {
        matches!(self, BasicAction::Offer(_))
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            BasicAction::Request(a) | BasicAction::Offer(a) => Some(a),
            BasicAction::Idle => None,
        }
    }

    /// True when `self` and `other` are a request/offer pair on the same name.
    pub fn complements(&self, other: &BasicAction) -> bool {
        !self.is_idle() && self.co() == *other
    }
}

impl fmt::Display for BasicAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicAction::Request(a) => write!(f, "?{a}"),
            BasicAction::Offer(a) => write!(f, "!{a}"),
            BasicAction::Idle => f.write_str("-"),
        }
    }
}

impl FromStr for BasicAction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "-" => Ok(BasicAction::Idle),
            "" => Err("empty label element".into()),
            _ => {
                let (head, name) = s.split_at(1);
                if name.is_empty() {
                    return Err(format!("label element {s:?} has no action name"));
                }
                match head {
                    "?" => Ok(BasicAction::Request(name.to_string())),
                    "!" => Ok(BasicAction::Offer(name.to_string())),
                    _ => Err(format!(
                        "label element {s:?} must be \"-\", \"?name\" or \"!name\""
                    )),
                }
            }
        }
    }
}

/// Classification of a well-formed action vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionKind {
    Request,
    Offer,
    Match,
}

/// A rank-length vector of basic actions labelling a transition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionVector(Vec<BasicAction>);

impl ActionVector {
    pub fn new(elements: Vec<BasicAction>) -> Self {
        ActionVector(elements)
    }

    /// A vector of `rank` idle elements with `action` at `index`.
    pub fn single(rank: usize, index: usize, action: BasicAction) -> Self {
        let mut v = vec![BasicAction::Idle; rank];
        v[index] = action;
        ActionVector(v)
    }

    pub fn elements(&self) -> &[BasicAction] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&BasicAction> {
        self.0.get(index)
    }

    pub fn classify(&self) -> Result<ActionKind, InvalidAction> {
        let active: Vec<&BasicAction> = self.0.iter().filter(|a| !a.is_idle()).collect();
        match active.as_slice() {
            [] => Err(InvalidAction::AllIdle),
            [a] if a.is_request() => Ok(ActionKind::Request),
            [_] => Ok(ActionKind::Offer),
            [a, b] if a.complements(b) => Ok(ActionKind::Match),
            [_, _] => Err(InvalidAction::NotComplementary),
            _ => Err(InvalidAction::TooManyActive(active.len())),
        }
    }

    pub fn is_request(&self) -> bool {
        self.classify() == Ok(ActionKind::Request)
    }

    pub fn is_offer(&self) -> bool {
        self.classify() == Ok(ActionKind::Offer)
    }

    pub fn is_match(&self) -> bool {
        self.classify() == Ok(ActionKind::Match)
    }

    /// Index of the requesting principal, if any.
    pub fn request_index(&self) -> Option<usize> {
        self.0.iter().position(BasicAction::is_request)
    }

    /// Index of the offering principal (the sender), if any.
    pub fn offer_index(&self) -> Option<usize> {
        self.0.iter().position(BasicAction::is_offer)
    }

    /// The single unmatched element of a request or offer action.
    ///
    /// Matches have no pending element and can never be matched again.
    pub fn pending(&self) -> Option<(usize, &BasicAction)> {
        match self.classify() {
            Ok(ActionKind::Request) | Ok(ActionKind::Offer) => {
                self.0.iter().enumerate().find(|(_, a)| !a.is_idle())
            }
            _ => None,
        }
    }
}

impl fmt::Display for ActionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// A global state: one local state label per principal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateVector(Vec<String>);

impl StateVector {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        StateVector(labels.into_iter().map(Into::into).collect())
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&str> {
        self.0.get(index).map(String::as_str)
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a StateVector>) -> Self {
        StateVector(
            parts
                .into_iter()
                .flat_map(|p| p.0.iter().cloned())
                .collect(),
        )
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Modality {
    Permitted,
    Necessary,
}

impl Modality {
    pub fn symbol(self) -> char {
        match self {
            Modality::Permitted => '◇',
            Modality::Necessary => '□',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: StateVector,
    pub label: ActionVector,
    pub target: StateVector,
    pub modality: Modality,
}

impl Transition {
    pub fn new(
        source: StateVector,
        label: ActionVector,
        target: StateVector,
        modality: Modality,
    ) -> Self {
        Transition {
            source,
            label,
            target,
            modality,
        }
    }

    pub fn is_necessary(&self) -> bool {
        self.modality == Modality::Necessary
    }

    pub fn kind(&self) -> Option<ActionKind> {
        self.label.classify().ok()
    }

    /// The transition without its modality, for modality-blind comparisons.
    pub fn triple(&self) -> (&StateVector, &ActionVector, &StateVector) {
        (&self.source, &self.label, &self.target)
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -{}{}-> {}",
            self.source,
            self.label,
            self.modality.symbol(),
            self.target
        )
    }
}

/// Which modality rules an automaton follows.
///
/// Orchestration automata may only have necessary requests (and matches);
/// choreography automata may only have necessary offers (and matches).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    Orchestration,
    Choreography,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Orchestration => "orchestration",
            Flavor::Choreography => "choreography",
        })
    }
}

/// A modal service contract automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Msca {
    name: String,
    rank: usize,
    flavor: Flavor,
    states: BTreeSet<StateVector>,
    initial: StateVector,
    finals: BTreeSet<StateVector>,
    transitions: BTreeSet<Transition>,
}

/// A well-formedness violation reported by [`Msca::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroRank,
    StateRank(StateVector),
    EmptyStateLabel(StateVector),
    InitialNotAState,
    FinalNotAState(StateVector),
    LabelRank(Transition),
    InvalidAction(Transition, InvalidAction),
    EndpointNotAState(Transition),
    IdleMoved {
        transition: Transition,
        index: usize,
    },
    DuplicateModality(Transition),
    FlavorModality(Transition, Flavor),
    Principal(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroRank => f.write_str("rank must be positive"),
            Violation::StateRank(q) => write!(f, "state {q} does not have the automaton rank"),
            Violation::EmptyStateLabel(q) => write!(f, "state {q} has an empty local label"),
            Violation::InitialNotAState => f.write_str("initial state is not a state"),
            Violation::FinalNotAState(q) => write!(f, "final state {q} is not a state"),
            Violation::LabelRank(t) => write!(f, "label of {t} does not have the automaton rank"),
            Violation::InvalidAction(t, why) => write!(f, "invalid action on {t}: {why}"),
            Violation::EndpointNotAState(t) => write!(f, "endpoint of {t} is not a state"),
            Violation::IdleMoved { transition, index } => {
                write!(
                    f,
                    "principal {index} is idle on {transition} but changes state"
                )
            }
            Violation::DuplicateModality(t) => {
                write!(f, "{t} occurs as both permitted and necessary")
            }
            Violation::FlavorModality(t, flavor) => {
                write!(f, "{t} may not be necessary in a {flavor} automaton")
            }
            Violation::Principal(a) => {
                write!(f, "principal both requests and offers action {a:?}")
            }
        }
    }
}

impl Msca {
    /// Builds an automaton without checking it; see [`Msca::validate`].
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        flavor: Flavor,
        states: impl IntoIterator<Item = StateVector>,
        initial: StateVector,
        finals: impl IntoIterator<Item = StateVector>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Self {
        Msca {
            name: name.into(),
            rank,
            flavor,
            states: states.into_iter().collect(),
            initial,
            finals: finals.into_iter().collect(),
            transitions: transitions.into_iter().collect(),
        }
    }

    /// Builds and validates.
    pub fn checked(
        name: impl Into<String>,
        rank: usize,
        flavor: Flavor,
        states: impl IntoIterator<Item = StateVector>,
        initial: StateVector,
        finals: impl IntoIterator<Item = StateVector>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self, Error> {
        let a = Msca::new(name, rank, flavor, states, initial, finals, transitions);
        a.ensure_valid()?;
        Ok(a)
    }

    /// Builds a rank-1 principal from `(source, label, target, modality)`
    /// rows, with labels in the `?name` / `!name` encoding. States are the
    /// initial state, the finals and every transition endpoint.
    pub fn principal(
        name: &str,
        flavor: Flavor,
        initial: &str,
        finals: &[&str],
        rows: &[(&str, &str, &str, Modality)],
    ) -> Result<Self, Error> {
        let q = |s: &str| StateVector::new([s]);
        let mut states: BTreeSet<StateVector> = finals.iter().map(|s| q(s)).collect();
        states.insert(q(initial));
        let mut transitions = Vec::with_capacity(rows.len());
        for &(from, label, to, modality) in rows {
            let action: BasicAction = label.parse().map_err(|msg| Error::Parse {
                path: format!("{name}: {from} -{label}-> {to}"),
                message: msg,
            })?;
            states.insert(q(from));
            states.insert(q(to));
            transitions.push(Transition::new(
                q(from),
                ActionVector::new(vec![action]),
                q(to),
                modality,
            ));
        }
        Msca::checked(
            name,
            1,
            flavor,
            states,
            q(initial),
            finals.iter().map(|s| q(s)),
            transitions,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn states(&self) -> &BTreeSet<StateVector> {
        &self.states
    }

    pub fn initial(&self) -> &StateVector {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateVector> {
        &self.finals
    }

    pub fn transitions(&self) -> &BTreeSet<Transition> {
        &self.transitions
    }

    pub fn is_final(&self, q: &StateVector) -> bool {
        self.finals.contains(q)
    }

    pub fn necessary_transitions(&self) -> impl Iterator<Item = &Transition> {
        self.transitions.iter().filter(|t| t.is_necessary())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The same automaton re-tagged with another flavor. The caller is
    /// responsible for re-validating when modalities clash with the new flavor.
    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }

    /// The same automaton with every transition's modality decided by `f`.
    pub fn map_modalities(mut self, f: impl Fn(&Transition) -> Modality) -> Self {
        self.transitions = std::mem::take(&mut self.transitions)
            .into_iter()
            .map(|mut t| {
                t.modality = f(&t);
                t
            })
            .collect();
        self
    }

    /// The same automaton keeping only the transitions accepted by `keep`.
    pub fn retain_transitions(mut self, keep: impl Fn(&Transition) -> bool) -> Self {
        self.transitions.retain(|t| keep(t));
        self
    }

    /// Names requested on permitted transitions.
    pub fn permitted_requests(&self) -> BTreeSet<&str> {
        self.request_names(Modality::Permitted)
    }

    /// Names requested on necessary transitions.
    pub fn necessary_requests(&self) -> BTreeSet<&str> {
        self.request_names(Modality::Necessary)
    }

    fn request_names(&self, modality: Modality) -> BTreeSet<&str> {
        self.transitions
            .iter()
            .filter(|t| t.modality == modality)
            .flat_map(|t| t.label.elements().iter())
            .filter(|a| a.is_request())
            .filter_map(BasicAction::name)
            .collect()
    }

    /// Names offered anywhere in the automaton.
    pub fn offers(&self) -> BTreeSet<&str> {
        self.transitions
            .iter()
            .flat_map(|t| t.label.elements().iter())
            .filter(|a| a.is_offer())
            .filter_map(BasicAction::name)
            .collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.rank == 0 {
            out.push(Violation::ZeroRank);
        }
        for q in &self.states {
            if q.len() != self.rank {
                out.push(Violation::StateRank(q.clone()));
            }
            if q.labels().iter().any(String::is_empty) {
                out.push(Violation::EmptyStateLabel(q.clone()));
            }
        }
        if !self.states.contains(&self.initial) {
            out.push(Violation::InitialNotAState);
        }
        for q in self.finals.difference(&self.states) {
            out.push(Violation::FinalNotAState(q.clone()));
        }

        let mut modalities: BTreeMap<_, Modality> = BTreeMap::new();
        for t in &self.transitions {
            if t.label.len() != self.rank {
                out.push(Violation::LabelRank(t.clone()));
                continue;
            }
            if !self.states.contains(&t.source) || !self.states.contains(&t.target) {
                out.push(Violation::EndpointNotAState(t.clone()));
            }
            let kind = match t.label.classify() {
                Ok(kind) => kind,
                Err(why) => {
                    out.push(Violation::InvalidAction(t.clone(), why));
                    continue;
                }
            };
            for (i, a) in t.label.elements().iter().enumerate() {
                if a.is_idle() && t.source.get(i) != t.target.get(i) {
                    out.push(Violation::IdleMoved {
                        transition: t.clone(),
                        index: i,
                    });
                }
            }
            if let Some(previous) = modalities.insert(t.triple(), t.modality) {
                if previous != t.modality {
                    out.push(Violation::DuplicateModality(t.clone()));
                }
            }
            if t.is_necessary() {
                let allowed = match self.flavor {
                    Flavor::Orchestration => kind != ActionKind::Offer,
                    Flavor::Choreography => kind != ActionKind::Request,
                };
                if !allowed {
                    out.push(Violation::FlavorModality(t.clone(), self.flavor));
                }
            }
        }

        if self.rank == 1 {
            let requested: BTreeSet<&str> = self
                .transitions
                .iter()
                .flat_map(|t| t.label.elements().iter())
                .filter(|a| a.is_request())
                .filter_map(BasicAction::name)
                .collect();
            for name in requested.intersection(&self.offers()) {
                out.push(Violation::Principal(name.to_string()));
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<(), Error> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(violations))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(a: &str) -> BasicAction {
        BasicAction::Request(a.into())
    }

    fn off(a: &str) -> BasicAction {
        BasicAction::Offer(a.into())
    }

    use BasicAction::Idle;

    #[test]
    fn co_swaps_requests_and_offers() {
        assert_eq!(req("qry").co(), off("qry"));
        assert_eq!(off("bk").co(), req("bk"));
        assert_eq!(Idle.co(), Idle);
    }

    #[test]
    fn classify_examples() {
        let m = ActionVector::new(vec![off("qry"), Idle, req("qry"), Idle, Idle]);
        assert_eq!(m.classify(), Ok(ActionKind::Match));
        assert_eq!(m.offer_index(), Some(0));
        assert_eq!(m.request_index(), Some(2));
        assert_eq!(m.pending(), None);

        let r = ActionVector::new(vec![Idle, Idle, Idle, Idle, req("bk")]);
        assert_eq!(r.classify(), Ok(ActionKind::Request));
        assert_eq!(r.pending(), Some((4, &req("bk"))));

        assert_eq!(
            ActionVector::new(vec![Idle, Idle]).classify(),
            Err(InvalidAction::AllIdle)
        );
        assert_eq!(
            ActionVector::new(vec![req("a"), req("a")]).classify(),
            Err(InvalidAction::NotComplementary)
        );
        assert_eq!(
            ActionVector::new(vec![off("a"), req("b")]).classify(),
            Err(InvalidAction::NotComplementary)
        );
        assert_eq!(
            ActionVector::new(vec![off("a"), req("a"), req("a")]).classify(),
            Err(InvalidAction::TooManyActive(3))
        );
    }

    #[test]
    fn label_encoding_parses() {
        assert_eq!("-".parse::<BasicAction>(), Ok(Idle));
        assert_eq!("?bk".parse::<BasicAction>(), Ok(req("bk")));
        assert_eq!("!bk".parse::<BasicAction>(), Ok(off("bk")));
        assert!("?".parse::<BasicAction>().is_err());
        assert!("bk".parse::<BasicAction>().is_err());
        assert!("".parse::<BasicAction>().is_err());
    }

    #[test]
    fn basic_action_order_matches_encoding_order() {
        let mut actions = [req("a"), Idle, off("b"), off("a"), req("b")];
        let mut encoded: Vec<String> = actions.iter().map(ToString::to_string).collect();
        actions.sort();
        encoded.sort();
        let resorted: Vec<String> = actions.iter().map(ToString::to_string).collect();
        assert_eq!(resorted, encoded);
    }

    #[test]
    fn principal_condition_is_checked() {
        let bad = Msca::principal(
            "bad",
            Flavor::Orchestration,
            "q0",
            &["q2"],
            &[
                ("q0", "?a", "q1", Modality::Permitted),
                ("q1", "!a", "q2", Modality::Permitted),
            ],
        );
        match bad {
            Err(Error::Validation(v)) => {
                assert_eq!(v, vec![Violation::Principal("a".into())]);
            }
            other => panic!("expected a principal violation, got {other:?}"),
        }
    }

    #[test]
    fn idle_principal_must_not_move() {
        let q = |a: &str, b: &str| StateVector::new([a, b]);
        let t = Transition::new(
            q("p0", "q0"),
            ActionVector::new(vec![req("a"), Idle]),
            q("p1", "q1"),
            Modality::Permitted,
        );
        let a = Msca::new(
            "moved",
            2,
            Flavor::Orchestration,
            [q("p0", "q0"), q("p1", "q1")],
            q("p0", "q0"),
            [q("p1", "q1")],
            [t.clone()],
        );
        assert_eq!(
            a.validate(),
            vec![Violation::IdleMoved {
                transition: t,
                index: 1
            }]
        );
    }

    #[test]
    fn flavor_restricts_necessary_kinds() {
        let necessary_offer = [("q0", "!a", "q1", Modality::Necessary)];
        assert!(
            Msca::principal("p", Flavor::Choreography, "q0", &["q1"], &necessary_offer).is_ok()
        );
        assert!(matches!(
            Msca::principal("p", Flavor::Orchestration, "q0", &["q1"], &necessary_offer),
            Err(Error::Validation(_))
        ));
        let necessary_request = [("q0", "?a", "q1", Modality::Necessary)];
        assert!(Msca::principal(
            "p",
            Flavor::Orchestration,
            "q0",
            &["q1"],
            &necessary_request
        )
        .is_ok());
        assert!(matches!(
            Msca::principal("p", Flavor::Choreography, "q0", &["q1"], &necessary_request),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn structural_violations_are_all_reported() {
        let q = |a: &str| StateVector::new([a]);
        let a = Msca::new(
            "broken",
            1,
            Flavor::Orchestration,
            [q("q0"), StateVector::new(["x", "y"])],
            q("nowhere"),
            [q("gone")],
            [Transition::new(
                q("q0"),
                ActionVector::new(vec![Idle]),
                q("q9"),
                Modality::Permitted,
            )],
        );
        let v = a.validate();
        assert!(v.contains(&Violation::InitialNotAState));
        assert!(v.contains(&Violation::FinalNotAState(q("gone"))));
        assert!(v.contains(&Violation::StateRank(StateVector::new(["x", "y"]))));
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::InvalidAction(_, InvalidAction::AllIdle))));
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::EndpointNotAState(_))));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn basic_action() -> impl Strategy<Value = BasicAction> {
            prop_oneof![
                Just(BasicAction::Idle),
                "[ab]".prop_map(BasicAction::Request),
                "[ab]".prop_map(BasicAction::Offer),
            ]
        }

        // Direct reading of the three admissible shapes.
        fn shape_oracle(v: &[BasicAction]) -> Option<ActionKind> {
            let active: Vec<_> = v.iter().filter(|a| !a.is_idle()).collect();
            if active.len() == 1 {
                return Some(if active[0].is_request() {
                    ActionKind::Request
                } else {
                    ActionKind::Offer
                });
            }
            if active.len() == 2 {
                let (x, y) = (active[0], active[1]);
                let pair = (x.is_request() && y.is_offer()) || (x.is_offer() && y.is_request());
                if pair && x.name() == y.name() {
                    return Some(ActionKind::Match);
                }
            }
            None
        }

        proptest! {
            #[test]
            fn co_is_an_involution(a in basic_action()) {
                prop_assert_eq!(a.co().co(), a);
            }

            #[test]
            fn classify_agrees_with_shapes(v in prop::collection::vec(basic_action(), 1..5)) {
                let got = ActionVector::new(v.clone()).classify().ok();
                prop_assert_eq!(got, shape_oracle(&v));
            }
        }
    }
}
