//! Executable checks of the bounds relating the classic cop number, the
//! attacking cop number and other invariants.
//!
//! Each check produces a [`CheckOutcome`] carrying every quantity needed to
//! reproduce its verdict by hand.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::cell::OnceCell;

use crate::error::{GameError, GraphError};
use crate::game::{cop_number, SolveOptions, Variant};
use crate::generate::Family;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::domination_number;

mod checks;
pub mod shadow;

pub use checks::*;
pub use shadow::{shadow_strategy_exhaustive, ShadowFrame, ShadowReport, ShadowTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Sandwich,
    CycleFormula,
    GirthBound,
    Cc1Cc2,
    BipartiteBound,
    ShadowStrategy,
    K1mDiameter2,
    Outerplanar,
    HyperLower,
    PathGuarding,
    OneGuardWitness,
    OracleEquivalence,
    /// A specific value claimed for a named graph.
    KnownValue,
}

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            CheckId::Sandwich => "sandwich",
            CheckId::CycleFormula => "cycle_formula",
            CheckId::GirthBound => "girth_bound",
            CheckId::Cc1Cc2 => "cc1_cc2",
            CheckId::BipartiteBound => "bipartite_bound",
            CheckId::ShadowStrategy => "shadow_strategy",
            CheckId::K1mDiameter2 => "k1m_diam2",
            CheckId::Outerplanar => "outerplanar",
            CheckId::HyperLower => "hyper_lower",
            CheckId::PathGuarding => "path_guarding",
            CheckId::OneGuardWitness => "one_guard_witness",
            CheckId::OracleEquivalence => "oracle_equivalence",
            CheckId::KnownValue => "known_value",
        }
    }

    pub const ALL: [CheckId; 13] = [
        CheckId::Sandwich,
        CheckId::CycleFormula,
        CheckId::GirthBound,
        CheckId::Cc1Cc2,
        CheckId::BipartiteBound,
        CheckId::ShadowStrategy,
        CheckId::K1mDiameter2,
        CheckId::Outerplanar,
        CheckId::HyperLower,
        CheckId::PathGuarding,
        CheckId::OneGuardWitness,
        CheckId::OracleEquivalence,
        CheckId::KnownValue,
    ];

    pub fn from_name(name: &str) -> Option<CheckId> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Report-only checks never fail a verification run.
    pub fn asserts(self) -> bool {
        self != CheckId::GirthBound
    }

    /// Checks that take a single graph as their only input.
    pub fn is_per_graph(self) -> bool {
        !matches!(
            self,
            CheckId::CycleFormula | CheckId::HyperLower | CheckId::OneGuardWitness | CheckId::KnownValue
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Violation,
    Skipped,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Violation => "VIOLATION",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

/// A measured quantity; girth and diameter may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Finite(u64),
    Infinite,
    Flag(bool),
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Finite(v as u64)
    }
}

impl From<Option<usize>> for Quantity {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Quantity::Infinite, Quantity::from)
    }
}

impl From<bool> for Quantity {
    fn from(v: bool) -> Self {
        Quantity::Flag(v)
    }
}

/// Where a checked graph came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub family: Option<Family>,
    pub seed: Option<u64>,
    /// Free-form origin for graphs outside the named families.
    pub label: Option<String>,
    pub graph6: String,
}

impl Instance {
    pub fn of(g: &Graph) -> Self {
        Instance { family: None, seed: None, label: None, graph6: to_graph6(g).unwrap_or_default() }
    }

    pub fn from_family(family: Family, seed: u64, g: &Graph) -> Self {
        Instance {
            family: Some(family),
            seed: family.is_random().then_some(seed),
            ..Self::of(g)
        }
    }

    pub fn labelled(label: &str, g: &Graph) -> Self {
        Instance { label: Some(label.into()), ..Self::of(g) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub check: CheckId,
    pub instance: Instance,
    pub quantities: BTreeMap<&'static str, Quantity>,
    pub verdict: Verdict,
    pub note: String,
}

impl CheckOutcome {
    pub fn new(check: CheckId, instance: Instance) -> Self {
        CheckOutcome { check, instance, quantities: BTreeMap::new(), verdict: Verdict::Pass, note: String::new() }
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Quantity>) -> Self {
        self.quantities.insert(key, value.into());
        self
    }

    pub fn set(&mut self, key: &'static str, value: impl Into<Quantity>) {
        self.quantities.insert(key, value.into());
    }

    pub fn verdict(mut self, pass: bool) -> Self {
        self.verdict = if pass { Verdict::Pass } else { Verdict::Violation };
        self
    }

    pub fn skipped(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped;
        self.note = why.into();
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// A violation that counts against a verification run.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Violation && self.check.asserts()
    }

    pub fn get(&self, key: &str) -> Option<Quantity> {
        self.quantities.get(key).copied()
    }
}

/// Lazily computed cop numbers and domination number of one graph.
pub struct Profile<'a> {
    pub graph: &'a Graph,
    pub opts: SolveOptions,
    classic: OnceCell<Result<usize, GameError>>,
    attacking: OnceCell<Result<usize, GameError>>,
    gamma: OnceCell<Result<usize, GraphError>>,
}

impl<'a> Profile<'a> {
    pub fn new(graph: &'a Graph, opts: SolveOptions) -> Self {
        Profile { graph, opts, classic: OnceCell::new(), attacking: OnceCell::new(), gamma: OnceCell::new() }
    }

    /// c(G).
    pub fn c(&self) -> Result<usize, GameError> {
        self.classic.get_or_init(|| cop_number(self.graph, Variant::Classic, &self.opts).map(|c| c.value)).clone()
    }

    /// cc(G).
    pub fn cc(&self) -> Result<usize, GameError> {
        self.attacking.get_or_init(|| cop_number(self.graph, Variant::Attacking, &self.opts).map(|c| c.value)).clone()
    }

    /// γ(G).
    pub fn gamma(&self) -> Result<usize, GraphError> {
        self.gamma.get_or_init(|| domination_number(self.graph).map(|d| d.0)).clone()
    }
}
