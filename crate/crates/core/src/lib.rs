//! A workbench for right-sided classical propositional sequent calculi.
//!
//! The crate is organised bottom-up:
//!
//! * [`formula`] and [`syntax`]: formulas with negation pushed to the
//!   literals, sequents as lists of occurrences, the text grammar.
//! * [`semantics`]: truth-table validity, minimal sequents and bounded
//!   enumeration of formulas and sequents.
//! * [`calculus`]: rules, systems, derivations and the derivation checker.
//! * [`prover`]: the constructive procedure that derives every minimal
//!   sequent in the minimal calculus `(wedge, plus, par)`, plus a general
//!   bounded backward search for any system.
//! * [`metatheory`]: derived-rule closure, containment, elaboration of
//!   derivations between systems, the completeness census and degree reports.
//! * [`cli`]: the `minseq` command-line front end.

pub mod calculus;
pub mod cli;
pub mod formula;
pub mod metatheory;
pub mod prover;
pub mod semantics;
pub mod syntax;

pub use calculus::{
    check_derivation, check_step, parse_derivation, Axiom, CheckReport, Derivation, Rule, RuleId,
    RuleSet, System,
};
pub use formula::{Connective, Formula, Measure, Sequent, Var};
pub use prover::{
    prove_formula, prove_minimal, search, split_context, Policy, SearchBounds, SearchOutcome,
};
pub use semantics::{is_minimal, is_valid, minimize, EnumerationBounds};
pub use syntax::{parse_formula, parse_sequent, ParseError};
