//! Derived rules, containment between systems, elaboration of derivations,
//! the completeness census and degrees of completeness.
//!
//! A rule is treated as derived in a system when it is in the closure of
//! the system's rules under the [`SCHEMAS`] table. Each schema comes with an
//! executable expansion, so every containment claim can be turned into
//! actual derivations by [`elaborate`] and re-checked.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::calculus::{
    check_derivation, check_step, Axiom, Derivation, Rule, RuleId, RuleSet, StepMatch, System,
    Violation,
};
use crate::formula::{Formula, Sequent};
use crate::prover::{prove_formula, prove_minimal, search, ProveError, SearchBounds, SearchOutcome};
use crate::semantics::{
    enumerate_formulas, enumerate_sequents, is_minimal, is_valid, literals, minimize_indices,
    EnumerationBounds, SemanticsError,
};
use crate::syntax::parse_formula;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetaError {
    #[error("rule {0} is not derivable in the target system")]
    NotContained(RuleId),
    #[error("derivation step does not check: {0}")]
    InvalidStep(Violation),
    #[error(transparent)]
    Prove(#[from] ProveError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// A derived-rule schema: `derived` can be simulated by `requires`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schema {
    pub name: &'static str,
    pub derived: Rule,
    pub requires: RuleSet,
}

const fn set2(a: Rule, b: Rule) -> RuleSet {
    RuleSet::EMPTY.with(a).with(b)
}

/// The schema table, in the order closure applies it.
pub const SCHEMAS: [Schema; 8] = [
    Schema {
        name: "tensor <- with w",
        derived: Rule::Tensor,
        requires: set2(Rule::With, Rule::Weaken),
    },
    Schema {
        name: "with <- tensor c",
        derived: Rule::With,
        requires: set2(Rule::Tensor, Rule::Contract),
    },
    Schema {
        name: "plus <- par w",
        derived: Rule::Plus,
        requires: set2(Rule::Par, Rule::Weaken),
    },
    Schema {
        name: "par <- plus c",
        derived: Rule::Par,
        requires: set2(Rule::Plus, Rule::Contract),
    },
    Schema {
        name: "wedge <- tensor c",
        derived: Rule::Wedge,
        requires: set2(Rule::Tensor, Rule::Contract),
    },
    Schema {
        name: "wedge <- with w",
        derived: Rule::Wedge,
        requires: set2(Rule::With, Rule::Weaken),
    },
    Schema {
        name: "tensor <- wedge",
        derived: Rule::Tensor,
        requires: RuleSet::EMPTY.with(Rule::Wedge),
    },
    Schema {
        name: "with <- wedge",
        derived: Rule::With,
        requires: RuleSet::EMPTY.with(Rule::Wedge),
    },
];

/// A rule-derivation skeleton: leaves refer to the premises of the step
/// being expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    Premise(usize),
    Step {
        rule: RuleId,
        conclusion: Sequent,
        premises: Vec<Expansion>,
    },
}

impl Expansion {
    fn step(rule: RuleId, conclusion: Vec<Formula>, premises: Vec<Expansion>) -> Expansion {
        Expansion::Step {
            rule,
            conclusion: Sequent::new(conclusion).expect("non-empty"),
            premises,
        }
    }

    pub fn conclusion<'a>(&'a self, premises: &'a [&'a Sequent]) -> &'a Sequent {
        match self {
            Expansion::Premise(i) => premises[*i],
            Expansion::Step { conclusion, .. } => conclusion,
        }
    }

    /// Calls `visit` on every generated step with its premises' conclusions.
    pub fn for_each_step<'a>(
        &'a self,
        premises: &'a [&'a Sequent],
        visit: &mut impl FnMut(RuleId, &'a Sequent, Vec<&'a Sequent>),
    ) {
        if let Expansion::Step {
            rule,
            conclusion,
            premises: subs,
        } = self
        {
            for s in subs {
                s.for_each_step(premises, visit);
            }
            let ps = subs.iter().map(|s| s.conclusion(premises)).collect();
            visit(*rule, conclusion, ps);
        }
    }
}

/// Adds `extra` to the end one weakening at a time.
fn weaken_chain(base: Expansion, mut current: Vec<Formula>, extra: &[Formula]) -> Expansion {
    let mut e = base;
    for f in extra {
        current.push(f.clone());
        e = Expansion::step(RuleId::Weaken, current.clone(), vec![e]);
    }
    e
}

/// Removes the trailing `count` occurrences one contraction at a time.
fn contract_chain(base: Expansion, mut current: Vec<Formula>, count: usize) -> Expansion {
    let mut e = base;
    for _ in 0..count {
        current.pop();
        e = Expansion::step(RuleId::Contract, current.clone(), vec![e]);
    }
    e
}

impl Schema {
    /// Expands one instance of the derived rule. `m` is the match found by
    /// the checker for `rule` at `conclusion`.
    pub fn expand(
        &self,
        rule: RuleId,
        conclusion: &Sequent,
        premises: &[&Sequent],
        m: &StepMatch,
    ) -> Expansion {
        let concl = conclusion.formulas().to_vec();
        let principal = m.principal.map(|p| &concl[p]);
        let children = || principal.and_then(|f| f.as_node()).expect("logical rule");
        match (self.derived, self.requires.contains(Rule::Wedge)) {
            (Rule::Tensor, true) | (Rule::With, true) => Expansion::step(
                RuleId::Wedge,
                concl,
                vec![Expansion::Premise(0), Expansion::Premise(1)],
            ),
            (Rule::Tensor, false) => {
                // Pad each side with the other side's context, then share.
                let left = weaken_chain(
                    Expansion::Premise(0),
                    premises[0].formulas().to_vec(),
                    &m.right,
                );
                let right = weaken_chain(
                    Expansion::Premise(1),
                    premises[1].formulas().to_vec(),
                    &m.left,
                );
                Expansion::step(RuleId::With, concl, vec![left, right])
            }
            (Rule::Wedge, _) if self.requires.contains(Rule::Weaken) => {
                let left = weaken_chain(
                    Expansion::Premise(0),
                    premises[0].formulas().to_vec(),
                    &m.right,
                );
                let right = weaken_chain(
                    Expansion::Premise(1),
                    premises[1].formulas().to_vec(),
                    &m.left,
                );
                Expansion::step(RuleId::With, concl, vec![left, right])
            }
            (Rule::With, false) | (Rule::Wedge, _) => {
                // Split with the shared context duplicated, then contract it.
                let mut doubled = concl.clone();
                doubled.extend(m.shared.iter().cloned());
                let split = Expansion::step(
                    RuleId::Tensor,
                    doubled.clone(),
                    vec![Expansion::Premise(0), Expansion::Premise(1)],
                );
                contract_chain(split, doubled, m.shared.len())
            }
            (Rule::Plus, _) => {
                let (_, a1, a2) = children();
                let other = if rule == RuleId::Plus1 { a2 } else { a1 };
                let padded = weaken_chain(
                    Expansion::Premise(0),
                    premises[0].formulas().to_vec(),
                    std::slice::from_ref(other),
                );
                Expansion::step(RuleId::Par, concl, vec![padded])
            }
            (Rule::Par, _) => {
                let (_, a, _) = children();
                let disj = principal.expect("principal").clone();
                let mut s1 = m.shared.clone();
                s1.push(a.clone());
                s1.push(disj.clone());
                let mut s2 = m.shared.clone();
                s2.push(disj.clone());
                s2.push(disj);
                let right_done = Expansion::step(RuleId::Plus2, s1, vec![Expansion::Premise(0)]);
                let both = Expansion::step(RuleId::Plus1, s2, vec![right_done]);
                Expansion::step(RuleId::Contract, concl, vec![both])
            }
            (Rule::Weaken, _) | (Rule::Contract, _) => {
                unreachable!("structural rules are never derived")
            }
        }
    }

    /// The rule ids this schema expands.
    pub fn derived_ids(&self) -> &'static [RuleId] {
        match self.derived {
            Rule::Tensor => &[RuleId::Tensor],
            Rule::With => &[RuleId::With],
            Rule::Wedge => &[RuleId::Wedge],
            Rule::Plus => &[RuleId::Plus1, RuleId::Plus2],
            Rule::Par => &[RuleId::Par],
            Rule::Weaken | Rule::Contract => &[],
        }
    }
}

/// The closure of `rules` under [`SCHEMAS`], with the schema that first
/// produced each derived rule.
pub fn closure_with_provenance(rules: RuleSet) -> (RuleSet, BTreeMap<Rule, &'static Schema>) {
    let mut current = rules;
    let mut via = BTreeMap::new();
    loop {
        let mut changed = false;
        for schema in &SCHEMAS {
            if !current.contains(schema.derived) && schema.requires.is_subset(current) {
                current = current.with(schema.derived);
                via.insert(schema.derived, schema);
                changed = true;
            }
        }
        if !changed {
            return (current, via);
        }
    }
}

pub fn closure(sys: &System) -> RuleSet {
    closure_with_provenance(sys.rules).0
}

/// `s` contains `t`: every rule of `t` is derived in `s`, and the axiom of
/// `t` is available in `s`. The context axiom is available as the plain
/// axiom followed by weakenings.
pub fn contains(s: &System, t: &System) -> bool {
    let axiom_ok = match (t.axiom, s.axiom) {
        (Axiom::Plain, _) | (Axiom::WithContext, Axiom::WithContext) => true,
        (Axiom::WithContext, Axiom::Plain) => s.has(Rule::Weaken),
    };
    axiom_ok && t.rules.is_subset(closure(s))
}

/// Both contain each other.
pub fn equivalent(s: &System, t: &System) -> bool {
    contains(s, t) && contains(t, s)
}

fn universal() -> System {
    System {
        axiom: Axiom::WithContext,
        rules: RuleSet::of(&Rule::ALL),
    }
}

/// Rewrites `d` to use only the rules of `target`, replacing each other
/// step by its schema expansion. The root conclusion is unchanged.
pub fn elaborate(d: &Derivation, target: &System) -> Result<Derivation, MetaError> {
    let (_, via) = closure_with_provenance(target.rules);
    let e = Elaborator {
        target: *target,
        via,
        universal: universal(),
    };
    e.node(d)
}

struct Elaborator {
    target: System,
    via: BTreeMap<Rule, &'static Schema>,
    universal: System,
}

impl Elaborator {
    fn node(&self, d: &Derivation) -> Result<Derivation, MetaError> {
        let premises = d
            .premises
            .iter()
            .map(|p| self.node(p))
            .collect::<Result<Vec<_>, _>>()?;
        self.emit(d.rule, d.conclusion.clone(), premises)
    }

    fn emit(
        &self,
        rule: RuleId,
        conclusion: Sequent,
        premises: Vec<Derivation>,
    ) -> Result<Derivation, MetaError> {
        let refs: Vec<&Sequent> = premises.iter().map(|p| &p.conclusion).collect();
        let m = check_step(&self.universal, rule, &conclusion, &refs).map_err(MetaError::InvalidStep)?;
        let Some(member) = rule.member() else {
            return self.axiom(conclusion);
        };
        if self.target.has(member) {
            return Ok(Derivation::new(rule, conclusion, premises));
        }
        let schema = self.via.get(&member).ok_or(MetaError::NotContained(rule))?;
        let exp = schema.expand(rule, &conclusion, &refs, &m);
        let mut slots: Vec<Option<Derivation>> = premises.into_iter().map(Some).collect();
        self.realize(exp, &mut slots)
    }

    fn realize(
        &self,
        exp: Expansion,
        slots: &mut [Option<Derivation>],
    ) -> Result<Derivation, MetaError> {
        match exp {
            Expansion::Premise(i) => Ok(slots[i].take().expect("premise used once")),
            Expansion::Step {
                rule,
                conclusion,
                premises,
            } => {
                let subs = premises
                    .into_iter()
                    .map(|e| self.realize(e, slots))
                    .collect::<Result<Vec<_>, _>>()?;
                self.emit(rule, conclusion, subs)
            }
        }
    }

    fn axiom(&self, conclusion: Sequent) -> Result<Derivation, MetaError> {
        let plain = System::plain(RuleSet::EMPTY);
        if self.target.axiom == Axiom::WithContext
            || check_step(&plain, RuleId::Ax, &conclusion, &[]).is_ok()
        {
            return Ok(Derivation::axiom(conclusion));
        }
        if !self.target.has(Rule::Weaken) {
            return Err(MetaError::NotContained(RuleId::Ax));
        }
        // Context axiom: the complementary pair, then weaken in the rest.
        let fs = conclusion.formulas();
        let (i, j) = (0..fs.len())
            .flat_map(|i| (i + 1..fs.len()).map(move |j| (i, j)))
            .find(|&(i, j)| {
                fs[i].is_literal() && fs[j] == fs[i].negate()
            })
            .expect("checked as a context axiom");
        let mut current = vec![fs[i].clone(), fs[j].clone()];
        let mut d = Derivation::axiom(Sequent::new(current.clone()).expect("pair"));
        for (k, f) in fs.iter().enumerate() {
            if k != i && k != j {
                current.push(f.clone());
                d = Derivation::new(
                    RuleId::Weaken,
                    Sequent::new(current.clone()).expect("non-empty"),
                    vec![d],
                );
            }
        }
        d.conclusion = conclusion;
        Ok(d)
    }
}

/// Derives `s` in `sys`: by elaborating the minimal-calculus construction
/// when `sys` contains it (finishing with weakenings for non-minimal valid
/// sequents when weakening is available), by backward search otherwise.
/// Any derivation returned has been checked in `sys`.
pub fn derive_in(sys: &System, s: &Sequent) -> Result<SearchOutcome, MetaError> {
    if contains(sys, &System::mp()) {
        if is_minimal(s)? {
            let d = elaborate(&prove_minimal(s)?, sys)?;
            return checked(sys, d);
        }
        if sys.has(Rule::Weaken) && is_valid(s)? {
            let kept = minimize_indices(s.formulas())?;
            let core = Sequent::new(kept.iter().map(|&i| s.formulas()[i].clone()).collect())
                .expect("non-empty");
            let mut d = elaborate(&prove_minimal(&core)?, sys)?;
            let mut present = vec![false; s.len()];
            for &i in &kept {
                present[i] = true;
            }
            for i in 0..s.len() {
                if !present[i] {
                    present[i] = true;
                    let c = (0..s.len())
                        .filter(|&k| present[k])
                        .map(|k| s.formulas()[k].clone())
                        .collect();
                    d = Derivation::new(RuleId::Weaken, Sequent::new(c).expect("non-empty"), vec![d]);
                }
            }
            return checked(sys, d);
        }
    }
    match search(sys, s, &SearchBounds::for_goal(s)) {
        SearchOutcome::Derivable(d) => checked(sys, d),
        other => Ok(other),
    }
}

fn checked(sys: &System, d: Derivation) -> Result<SearchOutcome, MetaError> {
    let report = check_derivation(sys, &d);
    match report.violations.into_iter().next() {
        None => Ok(SearchOutcome::Derivable(d)),
        Some(v) => Err(MetaError::InvalidStep(Violation::RuleMismatch {
            rule: d.rule,
            reason: v.to_string(),
        })),
    }
}

/// The valid formulas at a bound together with their minimal-calculus
/// derivations, shared by every system of a census.
pub struct ValidCorpus {
    pub bounds: EnumerationBounds,
    pub formulas: Vec<Formula>,
    pub proofs: Vec<Derivation>,
}

impl ValidCorpus {
    pub fn build(bounds: &EnumerationBounds) -> Result<ValidCorpus, MetaError> {
        let all: Vec<Formula> = enumerate_formulas(bounds)?.collect();
        let proved: Vec<(Formula, Derivation)> = all
            .into_par_iter()
            .filter_map(|f| match prove_formula(&f) {
                Ok(d) => Some(Ok((f, d))),
                Err(ProveError::NotValid) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_, _>>()?;
        let (formulas, proofs) = proved.into_iter().unzip();
        Ok(ValidCorpus {
            bounds: *bounds,
            formulas,
            proofs,
        })
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    /// Whether `f` lies within the enumeration bound.
    fn covers(&self, f: &Formula) -> bool {
        let lits = literals(self.bounds.var_count);
        let mut inside = true;
        f.for_each_var(&mut |v| {
            inside &= lits.iter().any(|l| matches!(l, Formula::Lit { var, .. } if var == v))
        });
        inside && f.connectives() <= self.bounds.max_connectives
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusBounds {
    pub formulas: EnumerationBounds,
    /// Formulas of the corpus also proved by raw search in complete systems.
    pub spot_checks: usize,
}

impl Default for CensusBounds {
    fn default() -> Self {
        CensusBounds {
            formulas: EnumerationBounds::formulas(2, 4),
            spot_checks: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Empirical {
    /// Every valid formula at the bound was derived and checked.
    CompleteAtBound { formulas: usize },
    /// A valid formula with the search verdict for it.
    WitnessFound {
        witness: Formula,
        reason: String,
        outcome: SearchOutcome,
        /// The table's witness, when search derived it and this witness
        /// was found by sweeping the corpus instead.
        refuted: Option<Formula>,
    },
}

impl Empirical {
    pub fn is_complete(&self) -> bool {
        matches!(self, Empirical::CompleteAtBound { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub system: System,
    pub predicted_complete: bool,
    pub empirical: Empirical,
}

impl Classification {
    /// Prediction and experiment agree, and no witness turned out derivable.
    pub fn consistent(&self) -> bool {
        let witness_ok = match &self.empirical {
            Empirical::WitnessFound { outcome, .. } => !outcome.is_derivable(),
            Empirical::CompleteAtBound { .. } => true,
        };
        witness_ok && self.predicted_complete == self.empirical.is_complete()
    }
}

/// The witness of incompleteness for a system not containing the minimal
/// calculus, chosen by which capability its rule closure lacks.
pub fn witness_for(sys: &System) -> Option<(Formula, &'static str)> {
    if contains(sys, &System::mp()) {
        return None;
    }
    let cl = closure(sys);
    let w = sys.has(Rule::Weaken);
    let c = sys.has(Rule::Contract);
    let (text, reason) = if !cl.has_conjunction() {
        ("P | (~P & ~P)", "no rule introduces a conjunction")
    } else if !cl.has_disjunction() {
        ("P | ~P", "no rule introduces a disjunction")
    } else if !c && !cl.contains(Rule::Par) {
        ("P | ~P", "contraction-free without par")
    } else if !c && !cl.contains(Rule::With) {
        ("P | (~P & ~P)", "contraction-free without with")
    } else if !w && !cl.contains(Rule::Plus) {
        ("(P | ~P) | Q", "weakening-free without plus")
    } else if !w && !cl.contains(Rule::Tensor) {
        ("P | (Q | (~P & ~Q))", "weakening-free without tensor")
    } else {
        (
            "((P & Q) | (~Q & P)) | ~P",
            "no structural rules and no blended conjunction",
        )
    };
    Some((parse_formula(text).expect("table formula"), reason))
}

/// Classifies one system against its own corpus.
pub fn classify_system(sys: &System, bounds: &CensusBounds) -> Result<Classification, MetaError> {
    let corpus = ValidCorpus::build(&bounds.formulas)?;
    classify_with(sys, &corpus, bounds)
}

/// Classifies one system against a prebuilt corpus.
pub fn classify_with(
    sys: &System,
    corpus: &ValidCorpus,
    bounds: &CensusBounds,
) -> Result<Classification, MetaError> {
    let predicted = contains(sys, &System::mp());
    let empirical = if predicted {
        complete_by_elaboration(sys, corpus, bounds.spot_checks)?
    } else {
        let (witness, reason) = witness_for(sys).expect("not predicted complete");
        if corpus.covers(&witness) {
            let s = Sequent::singleton(witness.clone());
            match search(sys, &s, &SearchBounds::for_goal(&s)) {
                SearchOutcome::Derivable(d) if check_derivation(sys, &d).ok() => {
                    sweep_by_search(sys, corpus, Some(witness))
                }
                outcome => Empirical::WitnessFound {
                    witness,
                    reason: reason.to_string(),
                    outcome,
                    refuted: None,
                },
            }
        } else {
            sweep_by_search(sys, corpus, None)
        }
    };
    Ok(Classification {
        system: *sys,
        predicted_complete: predicted,
        empirical,
    })
}

fn complete_by_elaboration(
    sys: &System,
    corpus: &ValidCorpus,
    spot_checks: usize,
) -> Result<Empirical, MetaError> {
    let failure = (0..corpus.len()).into_par_iter().find_map_first(|i| {
        let f = &corpus.formulas[i];
        let ok = elaborate(&corpus.proofs[i], sys).map(|d| {
            check_derivation(sys, &d).ok() && d.conclusion == Sequent::singleton(f.clone())
        });
        match ok {
            Ok(true) => None,
            Ok(false) => Some((f.clone(), "elaborated derivation fails the checker".to_string())),
            Err(e) => Some((f.clone(), e.to_string())),
        }
    });
    let failure = failure.or_else(|| {
        corpus.formulas.iter().take(spot_checks).find_map(|f| {
            let s = Sequent::singleton(f.clone());
            match search(sys, &s, &SearchBounds::for_goal(&s)) {
                SearchOutcome::Derivable(d) if check_derivation(sys, &d).ok() => None,
                SearchOutcome::Derivable(_) => {
                    Some((f.clone(), "search derivation fails the checker".to_string()))
                }
                SearchOutcome::Underivable { definitive: true } => {
                    Some((f.clone(), "search refutes an elaborated formula".to_string()))
                }
                // Caps may hide the proof; the elaborated derivation stands.
                _ => None,
            }
        })
    });
    Ok(match failure {
        None => Empirical::CompleteAtBound {
            formulas: corpus.len(),
        },
        Some((witness, reason)) => Empirical::WitnessFound {
            witness,
            reason,
            outcome: SearchOutcome::Exhausted,
            refuted: None,
        },
    })
}

fn sweep_by_search(sys: &System, corpus: &ValidCorpus, refuted: Option<Formula>) -> Empirical {
    let failure = corpus.formulas.par_iter().find_map_first(|f| {
        let s = Sequent::singleton(f.clone());
        let out = search(sys, &s, &SearchBounds::for_goal(&s));
        match &out {
            SearchOutcome::Derivable(d) if check_derivation(sys, d).ok() => None,
            _ => Some((f.clone(), out)),
        }
    });
    match failure {
        None => Empirical::CompleteAtBound {
            formulas: corpus.len(),
        },
        Some((witness, outcome)) => Empirical::WitnessFound {
            witness,
            reason: "first formula at the bound without a proof".to_string(),
            outcome,
            refuted,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Standard,
    Extended,
}

impl Family {
    pub fn systems(self) -> Vec<System> {
        match self {
            Family::Standard => System::standard_family(),
            Family::Extended => System::extended_family(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Standard => "standard",
            Family::Extended => "extended",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub representative: System,
    pub members: Vec<System>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub family: Family,
    pub bounds: CensusBounds,
    pub corpus_size: usize,
    pub rows: Vec<Classification>,
    /// Empirically complete systems grouped by mutual containment.
    pub classes: Vec<EquivalenceClass>,
}

impl CensusReport {
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(Classification::consistent)
    }

    pub fn class_of(&self, sys: &System) -> Option<&EquivalenceClass> {
        self.classes.iter().find(|c| c.members.contains(sys))
    }

    /// One CSV row per system.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rules,predicted,empirical,class,witness,outcome,refuted\n");
        for row in &self.rows {
            let rules = row.system.rules.to_string().replace(',', "+");
            let predicted = if row.predicted_complete {
                "complete"
            } else {
                "incomplete"
            };
            let class = self
                .class_of(&row.system)
                .map(|c| c.representative.to_string())
                .unwrap_or_else(|| "-".into());
            let dash = || "-".to_string();
            let (empirical, witness, outcome, refuted) = match &row.empirical {
                Empirical::CompleteAtBound { formulas } => {
                    (format!("complete-at-bound({formulas})"), dash(), dash(), dash())
                }
                Empirical::WitnessFound {
                    witness,
                    outcome,
                    refuted,
                    ..
                } => (
                    "witness-found".to_string(),
                    witness.to_string(),
                    outcome.summary().to_string(),
                    refuted.as_ref().map_or_else(dash, Formula::to_string),
                ),
            };
            out.push_str(&format!(
                "{rules},{predicted},{empirical},{class},{witness},{outcome},{refuted}\n"
            ));
        }
        out
    }
}

/// Classifies every system of `family` and groups the complete ones.
pub fn census(family: Family, bounds: &CensusBounds) -> Result<CensusReport, MetaError> {
    let corpus = ValidCorpus::build(&bounds.formulas)?;
    let rows = family
        .systems()
        .par_iter()
        .map(|s| classify_with(s, &corpus, bounds))
        .collect::<Result<Vec<_>, _>>()?;
    let mut classes: Vec<EquivalenceClass> = Vec::new();
    for row in rows.iter().filter(|r| r.empirical.is_complete()) {
        match classes
            .iter_mut()
            .find(|c| equivalent(&c.members[0], &row.system))
        {
            Some(c) => c.members.push(row.system),
            None => classes.push(EquivalenceClass {
                representative: row.system,
                members: vec![row.system],
            }),
        }
    }
    for c in &mut classes {
        if let Some(p) = c.members.iter().find(|s| s.preset_name().is_some()) {
            c.representative = *p;
        }
    }
    Ok(CensusReport {
        family,
        bounds: *bounds,
        corpus_size: corpus.len(),
        rows,
        classes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeBounds {
    pub formulas: EnumerationBounds,
    pub sequents: EnumerationBounds,
}

impl Default for DegreeBounds {
    fn default() -> Self {
        DegreeBounds {
            formulas: EnumerationBounds::formulas(2, 4),
            sequents: EnumerationBounds::sequents(2, 4, 3).distinct(true),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Pass { checked: usize },
    Fail { witness: Sequent, outcome: String },
}

impl Evidence {
    pub fn passed(&self) -> bool {
        matches!(self, Evidence::Pass { .. })
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Pass { checked } => write!(f, "pass-at-bound ({checked} checked)"),
            Evidence::Fail { witness, outcome } => write!(f, "fail: [{witness}] {outcome}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub system: System,
    pub formula_complete: Evidence,
    pub minimal_complete: Evidence,
    pub sequent_complete: Evidence,
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system: {}", self.system.label())?;
        writeln!(f, "formula-complete: {}", self.formula_complete)?;
        writeln!(f, "minimal-complete: {}", self.minimal_complete)?;
        write!(f, "sequent-complete: {}", self.sequent_complete)
    }
}

const SWEEP_CHUNK: usize = 1 << 14;

/// First sequent (in stream order) accepted by `wanted` that `sys` fails to derive.
fn sweep(
    sys: &System,
    items: impl Iterator<Item = Sequent>,
    wanted: impl Fn(&Sequent) -> bool + Sync,
) -> Evidence {
    let mut items = items.peekable();
    let mut checked = 0usize;
    while items.peek().is_some() {
        let chunk: Vec<Sequent> = items.by_ref().take(SWEEP_CHUNK).collect();
        let chosen: Vec<&Sequent> = chunk.par_iter().filter(|s| wanted(s)).collect();
        let failure = chosen.par_iter().find_map_first(|s| match derive_in(sys, s) {
            Ok(SearchOutcome::Derivable(_)) => None,
            Ok(other) => Some(((*s).clone(), other.summary().to_string())),
            Err(e) => Some(((*s).clone(), e.to_string())),
        });
        if let Some((witness, outcome)) = failure {
            return Evidence::Fail { witness, outcome };
        }
        checked += chosen.len();
    }
    Evidence::Pass { checked }
}

/// Formula-, minimal- and sequent-completeness of `sys` at the bounds.
pub fn degree_report(sys: &System, bounds: &DegreeBounds) -> Result<DegreeReport, MetaError> {
    let formulas = enumerate_formulas(&bounds.formulas)?.map(Sequent::singleton);
    let formula_complete = sweep(sys, formulas, |s| is_valid(s).unwrap_or(false));
    let minimal_complete = sweep(sys, enumerate_sequents(&bounds.sequents)?, |s| {
        is_minimal(s).unwrap_or(false)
    });
    let sequent_complete = sweep(sys, enumerate_sequents(&bounds.sequents)?, |s| {
        is_valid(s).unwrap_or(false)
    });
    Ok(DegreeReport {
        system: *sys,
        formula_complete,
        minimal_complete,
        sequent_complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::parse_derivation;
    use crate::syntax::parse_sequent;

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn closure_examples() {
        let pp = closure(&System::pp());
        for r in [Rule::Wedge, Rule::Par, Rule::With] {
            assert!(pp.contains(r), "{r:?}");
        }
        assert!(!pp.contains(Rule::Weaken));
        let np = closure(&System::np());
        for r in [Rule::Wedge, Rule::Plus, Rule::Tensor] {
            assert!(np.contains(r), "{r:?}");
        }
        let plain = System::new(&[Rule::With, Rule::Plus]);
        assert_eq!(closure(&plain), plain.rules);
        assert_eq!(closure(&System::mp_minus()), System::mp_minus().rules);
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&System::gs1p(), &System::mp()));
        assert!(contains(&System::gs1p(), &System::pp()));
        assert!(contains(&System::gs1p(), &System::np()));
        assert!(!contains(&System::mp_minus(), &System::mp()));
        for (_, s) in System::presets() {
            assert!(contains(&s, &s));
        }
        assert!(contains(&System::mp(), &System::mp_minus()));
        // the context axiom needs weakening
        assert!(!contains(&System::mp(), &System::gs3p()));
        assert!(contains(&System::gs1p(), &System::gs3p()));
    }

    #[test]
    fn elaborate_axiom_only() {
        let d = Derivation::axiom(seq("P, ~P"));
        assert_eq!(elaborate(&d, &System::pp()).unwrap(), d);
    }

    #[test]
    fn elaborate_wedge_into_pp() {
        let d = prove_minimal(&seq("P&Q, ~Q&P, ~P")).unwrap();
        let e = elaborate(&d, &System::pp()).unwrap();
        assert_eq!(e.conclusion, d.conclusion);
        assert!(check_derivation(&System::pp(), &e).ok());
        // one shared occurrence (~P) is contracted after the tensor
        assert_eq!(e.rule, RuleId::Contract);
        assert_eq!(e.premises[0].rule, RuleId::Tensor);
        assert_eq!(e.premises[0].conclusion.len(), 4);
    }

    #[test]
    fn elaborate_not_contained() {
        let d = parse_derivation("(par [P | ~P] (ax [P, ~P]))").unwrap();
        assert_eq!(
            elaborate(&d, &System::new(&[Rule::Plus])),
            Err(MetaError::NotContained(RuleId::Par))
        );
    }

    #[test]
    fn elaborate_context_axiom() {
        let d = parse_derivation("(ax [Q, P, ~P])").unwrap();
        let e = elaborate(&d, &System::np()).unwrap();
        assert!(check_derivation(&System::np(), &e).ok());
        assert_eq!(e.conclusion, seq("Q, P, ~P"));
        assert_eq!(
            elaborate(&d, &System::mp()),
            Err(MetaError::NotContained(RuleId::Ax))
        );
    }

    #[test]
    fn witness_table() {
        let w = |s: System| witness_for(&s).map(|(f, _)| f.to_string());
        assert_eq!(w(System::mp_minus()).unwrap(), "(P & Q | ~Q & P) | ~P");
        assert_eq!(w(System::new(&[Rule::Par, Rule::Contract])).unwrap(), "P | ~P & ~P");
        assert_eq!(w(System::mp()), None);
        assert_eq!(w(System::gs1p()), None);
    }

    #[test]
    fn table_witness_derivable_with_contraction() {
        let sys = System::new(&[Rule::With, Rule::Plus, Rule::Contract]);
        let (w, _) = witness_for(&sys).unwrap();
        assert_eq!(w.to_string(), "P | Q | ~P & ~Q");
        let s = Sequent::singleton(w);
        let out = search(&sys, &s, &SearchBounds::for_goal(&s));
        assert!(check_derivation(&sys, out.derivation().unwrap()).ok());
    }

    #[test]
    fn classify_small_bound() {
        let bounds = CensusBounds {
            formulas: EnumerationBounds::formulas(2, 2),
            spot_checks: 4,
        };
        let c = classify_system(&System::np(), &bounds).unwrap();
        assert!(c.predicted_complete && c.empirical.is_complete());
        // the witness (4 connectives) exceeds the bound, so search sweeps the corpus
        let c = classify_system(&System::mp_minus(), &bounds).unwrap();
        assert!(!c.predicted_complete);
        assert!(c.empirical.is_complete());
        assert!(!c.consistent());
    }

    #[test]
    fn census_vacuous_at_zero() {
        let bounds = CensusBounds {
            formulas: EnumerationBounds::formulas(2, 0),
            spot_checks: 0,
        };
        let r = census(Family::Standard, &bounds).unwrap();
        assert_eq!(r.corpus_size, 0);
        assert!(r.rows.iter().all(|row| row.empirical.is_complete()
            || matches!(row.empirical, Empirical::WitnessFound { .. })));
    }

    #[test]
    fn derive_in_weakens_non_minimal() {
        let s = seq("Q, P, ~P");
        match derive_in(&System::np(), &s).unwrap() {
            SearchOutcome::Derivable(d) => {
                assert_eq!(d.conclusion, s);
                assert!(check_derivation(&System::np(), &d).ok());
            }
            other => panic!("{other:?}"),
        }
        assert!(!derive_in(&System::mp(), &s).unwrap().is_derivable());
    }
}
