//! Rules, systems, derivations and the derivation checker.
//!
//! A derivation is a tree whose nodes carry a rule and the conclusion
//! sequent of that rule instance. The checker does not trust the tree: at
//! every node it searches for an instantiation of the rule schema that
//! matches the node's conclusion against its premises' conclusions.
//!
//! Matching is done on multisets. Formula occurrences that are
//! structurally equal are interchangeable in every rule, so a context
//! partition exists iff the per-formula occurrence counts admit one. This
//! finds every instance an exhaustive search over occurrence partitions
//! would find.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::formula::{Connective, Formula, Sequent};
use crate::syntax::{parse_sequent, ParseError};

/// A rule that a system may include. `Plus` stands for both disjunction
/// rules `plus1` and `plus2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// Context-splitting conjunction.
    Tensor,
    /// Context-sharing conjunction.
    With,
    /// Blended conjunction: shared context plus split contexts.
    Wedge,
    /// One-sided disjunction, either side.
    Plus,
    /// Two-sided disjunction.
    Par,
    Weaken,
    Contract,
}

impl Rule {
    pub const ALL: [Rule; 7] = [
        Rule::Tensor,
        Rule::With,
        Rule::Wedge,
        Rule::Plus,
        Rule::Par,
        Rule::Weaken,
        Rule::Contract,
    ];

    /// The rules of a standard system, in toggling order.
    pub const STANDARD: [Rule; 6] = [
        Rule::Tensor,
        Rule::With,
        Rule::Plus,
        Rule::Par,
        Rule::Weaken,
        Rule::Contract,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Tensor => "tensor",
            Rule::With => "with",
            Rule::Wedge => "wedge",
            Rule::Plus => "plus",
            Rule::Par => "par",
            Rule::Weaken => "w",
            Rule::Contract => "c",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }

    const fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// Whether the rule introduces a conjunction.
    pub fn is_conjunction(self) -> bool {
        matches!(self, Rule::Tensor | Rule::With | Rule::Wedge)
    }

    pub fn is_disjunction(self) -> bool {
        matches!(self, Rule::Plus | Rule::Par)
    }
}

/// A set of [`Rule`]s.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RuleSet(u8);

impl RuleSet {
    pub const EMPTY: RuleSet = RuleSet(0);

    pub fn of(rules: &[Rule]) -> RuleSet {
        rules.iter().fold(RuleSet::EMPTY, |s, &r| s.with(r))
    }

    pub fn contains(self, rule: Rule) -> bool {
        self.0 & rule.bit() != 0
    }

    pub const fn with(self, rule: Rule) -> RuleSet {
        RuleSet(self.0 | rule.bit())
    }

    pub fn without(self, rule: Rule) -> RuleSet {
        RuleSet(self.0 & !rule.bit())
    }

    pub fn is_subset(self, other: RuleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RuleSet) -> RuleSet {
        RuleSet(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Rule> {
        Rule::ALL.into_iter().filter(move |r| self.contains(*r))
    }

    pub fn has_conjunction(self) -> bool {
        self.iter().any(Rule::is_conjunction)
    }

    pub fn has_disjunction(self) -> bool {
        self.iter().any(Rule::is_disjunction)
    }
}

impl fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("none");
        }
        let names: Vec<&str> = self.iter().map(Rule::name).collect();
        f.write_str(&names.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Exactly `P, ~P`.
    Plain,
    /// `Gamma, P, ~P` for any context.
    WithContext,
}

/// An axiom variant together with a set of rules.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct System {
    pub axiom: Axiom,
    pub rules: RuleSet,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown system '{0}': expected a preset (gs1p, gs3p, mp, mp-, pp, np) or a comma list of tensor, with, wedge, plus, par, w, c")]
pub struct SystemParseError(pub String);

impl System {
    pub fn new(rules: &[Rule]) -> System {
        System {
            axiom: Axiom::Plain,
            rules: RuleSet::of(rules),
        }
    }

    pub fn plain(rules: RuleSet) -> System {
        System {
            axiom: Axiom::Plain,
            rules,
        }
    }

    /// Right-sided Gentzen calculus `(with, plus, w, c)`.
    pub fn gs1p() -> System {
        System::new(&[Rule::With, Rule::Plus, Rule::Weaken, Rule::Contract])
    }

    /// `(with, par)` with the context axiom.
    pub fn gs3p() -> System {
        System {
            axiom: Axiom::WithContext,
            rules: RuleSet::of(&[Rule::With, Rule::Par]),
        }
    }

    /// Minimal sequent calculus `(wedge, plus, par)`.
    pub fn mp() -> System {
        System::new(&[Rule::Wedge, Rule::Plus, Rule::Par])
    }

    /// `(tensor, with, plus, par)`, which is incomplete.
    pub fn mp_minus() -> System {
        System::new(&[Rule::Tensor, Rule::With, Rule::Plus, Rule::Par])
    }

    /// Positive calculus `(tensor, plus, c)`.
    pub fn pp() -> System {
        System::new(&[Rule::Tensor, Rule::Plus, Rule::Contract])
    }

    /// Negative calculus `(with, par, w)`.
    pub fn np() -> System {
        System::new(&[Rule::With, Rule::Par, Rule::Weaken])
    }

    pub fn presets() -> [(&'static str, System); 6] {
        [
            ("gs1p", System::gs1p()),
            ("gs3p", System::gs3p()),
            ("mp", System::mp()),
            ("mp-", System::mp_minus()),
            ("pp", System::pp()),
            ("np", System::np()),
        ]
    }

    pub fn preset_name(&self) -> Option<&'static str> {
        System::presets()
            .into_iter()
            .find(|(_, s)| s == self)
            .map(|(n, _)| n)
    }

    pub fn parse(text: &str) -> Result<System, SystemParseError> {
        let t = text.trim().to_ascii_lowercase();
        if let Some((_, s)) = System::presets().into_iter().find(|(n, _)| *n == t) {
            return Ok(s);
        }
        if t == "none" {
            return Ok(System::plain(RuleSet::EMPTY));
        }
        let mut rules = RuleSet::EMPTY;
        for part in t.split(',') {
            let name = part.trim();
            match Rule::from_name(name) {
                Some(r) => rules = rules.with(r),
                None => return Err(SystemParseError(text.to_string())),
            }
        }
        Ok(System::plain(rules))
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.rules.contains(rule)
    }

    /// Whether the rules of the system belong to the standard family.
    pub fn is_standard(&self) -> bool {
        self.axiom == Axiom::Plain && !self.rules.contains(Rule::Wedge)
    }

    pub fn allows(&self, rule: RuleId) -> bool {
        match rule.member() {
            None => true,
            Some(r) => self.rules.contains(r),
        }
    }

    pub fn label(&self) -> String {
        match self.axiom {
            Axiom::Plain => format!("({})", self.rules),
            Axiom::WithContext => format!("({};context-axiom)", self.rules),
        }
    }

    /// The 64 standard systems, in bitmask order over [`Rule::STANDARD`].
    pub fn standard_family() -> Vec<System> {
        family(&Rule::STANDARD)
    }

    /// The 128 extended systems, in bitmask order over [`Rule::ALL`].
    pub fn extended_family() -> Vec<System> {
        family(&Rule::ALL)
    }
}

fn family(rules: &[Rule]) -> Vec<System> {
    (0u32..1 << rules.len())
        .map(|mask| {
            let set = rules
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(RuleSet::EMPTY, |s, (_, &r)| s.with(r));
            System::plain(set)
        })
        .collect()
}

impl fmt::Debug for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset_name() {
            Some(n) => write!(f, "{n}{}", self.label()),
            None => f.write_str(&self.label()),
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset_name() {
            Some(n) => f.write_str(n),
            None => f.write_str(&self.label()),
        }
    }
}

/// The label on a derivation node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Ax,
    Tensor,
    With,
    Wedge,
    Plus1,
    Plus2,
    Par,
    Weaken,
    Contract,
}

impl RuleId {
    pub const ALL: [RuleId; 9] = [
        RuleId::Ax,
        RuleId::Tensor,
        RuleId::With,
        RuleId::Wedge,
        RuleId::Plus1,
        RuleId::Plus2,
        RuleId::Par,
        RuleId::Weaken,
        RuleId::Contract,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Ax => "ax",
            RuleId::Tensor => "tensor",
            RuleId::With => "with",
            RuleId::Wedge => "wedge",
            RuleId::Plus1 => "plus1",
            RuleId::Plus2 => "plus2",
            RuleId::Par => "par",
            RuleId::Weaken => "w",
            RuleId::Contract => "c",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleId> {
        RuleId::ALL.into_iter().find(|r| r.name() == name)
    }

    pub fn arity(self) -> usize {
        match self {
            RuleId::Ax => 0,
            RuleId::Tensor | RuleId::With | RuleId::Wedge => 2,
            _ => 1,
        }
    }

    /// The system member that licenses this rule; `None` for the axiom.
    pub fn member(self) -> Option<Rule> {
        Some(match self {
            RuleId::Ax => return None,
            RuleId::Tensor => Rule::Tensor,
            RuleId::With => Rule::With,
            RuleId::Wedge => Rule::Wedge,
            RuleId::Plus1 | RuleId::Plus2 => Rule::Plus,
            RuleId::Par => Rule::Par,
            RuleId::Weaken => Rule::Weaken,
            RuleId::Contract => Rule::Contract,
        })
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A derivation tree. Every node records its conclusion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    pub rule: RuleId,
    /// Optional pinned principal occurrence (index into `conclusion`).
    pub principal: Option<usize>,
    pub conclusion: Sequent,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn new(rule: RuleId, conclusion: Sequent, premises: Vec<Derivation>) -> Derivation {
        Derivation {
            rule,
            principal: None,
            conclusion,
            premises,
        }
    }

    pub fn axiom(conclusion: Sequent) -> Derivation {
        Derivation::new(RuleId::Ax, conclusion, Vec::new())
    }

    pub fn at(mut self, principal: usize) -> Derivation {
        self.principal = Some(principal);
        self
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(Derivation::depth).max().unwrap_or(0)
    }

    pub fn rules_used(&self) -> BTreeSet<RuleId> {
        let mut out = BTreeSet::new();
        self.walk(&mut |_, d| {
            out.insert(d.rule);
        });
        out
    }

    /// Preorder traversal with the path (premise indices) to each node.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&[usize], &'a Derivation)) {
        fn go<'a>(
            d: &'a Derivation,
            path: &mut Vec<usize>,
            visit: &mut impl FnMut(&[usize], &'a Derivation),
        ) {
            visit(path, d);
            for (i, p) in d.premises.iter().enumerate() {
                path.push(i);
                go(p, path, visit);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), visit)
    }

    pub fn node_mut(&mut self, path: &[usize]) -> Option<&mut Derivation> {
        let mut d = self;
        for &i in path {
            d = d.premises.get_mut(i)?;
        }
        Some(d)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.rule)?;
        if let Some(k) = self.principal {
            write!(f, "@{k}")?;
        }
        write!(f, " [{}]", self.conclusion)?;
        for p in &self.premises {
            write!(f, " {p}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DerivationParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("unknown rule '{name}' at byte {position}")]
    UnknownRule { name: String, position: usize },
}

/// Parses the derivation format:
///
/// ```text
/// node := "(" rulename ("@" index)? " [" sequent "]" node* ")"
/// ```
///
/// This is a structural parse; rules are not checked.
pub fn parse_derivation(text: &str) -> Result<Derivation, DerivationParseError> {
    let mut p = DerivParser {
        src: text,
        pos: 0,
    };
    let d = p.node()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(ParseError::new(p.pos, "trailing input after derivation").into());
    }
    Ok(d)
}

struct DerivParser<'a> {
    src: &'a str,
    pos: usize,
}

impl DerivParser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn node(&mut self) -> Result<Derivation, DerivationParseError> {
        self.expect(b'(')?;
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len()
            && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        if name.is_empty() {
            return Err(ParseError::new(start, "expected a rule name").into());
        }
        let rule = RuleId::from_name(name).ok_or_else(|| DerivationParseError::UnknownRule {
            name: name.to_string(),
            position: start,
        })?;
        let mut principal = None;
        if bytes.get(self.pos) == Some(&b'@') {
            self.pos += 1;
            let s = self.pos;
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let k = self.src[s..self.pos]
                .parse::<usize>()
                .map_err(|_| ParseError::new(s, "expected a principal index after '@'"))?;
            principal = Some(k);
        }
        self.expect(b'[')?;
        let open = self.pos;
        let close = self.src[open..]
            .find(']')
            .map(|i| open + i)
            .ok_or_else(|| ParseError::new(open, "unterminated '['"))?;
        let conclusion = parse_sequent(&self.src[open..close]).map_err(|e| e.shifted(open))?;
        self.pos = close + 1;
        let mut premises = Vec::new();
        while self.peek() == Some(b'(') {
            premises.push(self.node()?);
        }
        self.expect(b')')?;
        Ok(Derivation {
            rule,
            principal,
            conclusion,
            premises,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    RuleNotInSystem,
    RuleMismatch,
    ArityMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("rule {0} is not in the system")]
    RuleNotInSystem(RuleId),
    #[error("rule {rule} takes {expected} premises, found {found}")]
    ArityMismatch {
        rule: RuleId,
        expected: usize,
        found: usize,
    },
    #[error("no instance of {rule} matches: {reason}")]
    RuleMismatch { rule: RuleId, reason: String },
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::RuleNotInSystem(_) => ViolationKind::RuleNotInSystem,
            Violation::ArityMismatch { .. } => ViolationKind::ArityMismatch,
            Violation::RuleMismatch { .. } => ViolationKind::RuleMismatch,
        }
    }
}

/// How a rule instance matched.
///
/// For logical rules `principal` is the conclusion occurrence introduced by
/// the rule; for `w` it is the weakened occurrence and for `c` the
/// contracted one. The contexts follow the rule schema: `shared` is the
/// context common to all premises, `left` and `right` are the split parts
/// of a conjunction (empty otherwise).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StepMatch {
    pub principal: Option<usize>,
    pub shared: Vec<Formula>,
    pub left: Vec<Formula>,
    pub right: Vec<Formula>,
}

/// Checks one rule application against `sys`.
pub fn check_step(
    sys: &System,
    rule: RuleId,
    conclusion: &Sequent,
    premises: &[&Sequent],
) -> Result<StepMatch, Violation> {
    check_step_at(sys, rule, conclusion, premises, None)
}

/// [`check_step`] with an optional pinned principal occurrence.
pub fn check_step_at(
    sys: &System,
    rule: RuleId,
    conclusion: &Sequent,
    premises: &[&Sequent],
    principal: Option<usize>,
) -> Result<StepMatch, Violation> {
    if !sys.allows(rule) {
        return Err(Violation::RuleNotInSystem(rule));
    }
    if premises.len() != rule.arity() {
        return Err(Violation::ArityMismatch {
            rule,
            expected: rule.arity(),
            found: premises.len(),
        });
    }
    if let Some(k) = principal {
        if k >= conclusion.len() {
            return Err(Violation::RuleMismatch {
                rule,
                reason: format!("principal index {k} is out of range"),
            });
        }
    }
    match_rule(sys.axiom, rule, conclusion.formulas(), premises, principal).ok_or_else(|| {
        Violation::RuleMismatch {
            rule,
            reason: mismatch_reason(rule, conclusion, premises),
        }
    })
}

fn mismatch_reason(rule: RuleId, conclusion: &Sequent, premises: &[&Sequent]) -> String {
    let shown: Vec<String> = premises.iter().map(|p| format!("[{p}]")).collect();
    if premises.is_empty() {
        format!("[{conclusion}] is not an axiom instance")
    } else {
        format!("[{conclusion}] does not follow from {} by {rule}", shown.join(" "))
    }
}

fn complementary(a: &Formula, b: &Formula) -> bool {
    match (a, b) {
        (
            Formula::Lit { var: v, positive: p },
            Formula::Lit {
                var: w,
                positive: q,
            },
        ) => v == w && p != q,
        _ => false,
    }
}

fn sorted(v: &[Formula]) -> Vec<&Formula> {
    let mut out: Vec<&Formula> = v.iter().collect();
    out.sort();
    out
}

fn same_multiset(a: &[Formula], b: &[Formula]) -> bool {
    a.len() == b.len() && sorted(a) == sorted(b)
}

fn without(v: &[Formula], index: usize) -> Vec<Formula> {
    let mut out = v.to_vec();
    out.remove(index);
    out
}

fn plus(v: &[Formula], extra: &[&Formula]) -> Vec<Formula> {
    let mut out = v.to_vec();
    out.extend(extra.iter().map(|f| (*f).clone()));
    out
}

/// Removes one occurrence structurally equal to `f`.
fn remove_one(v: &[Formula], f: &Formula) -> Option<Vec<Formula>> {
    let i = v.iter().position(|g| g == f)?;
    Some(without(v, i))
}

fn counts<'a>(v: &'a [Formula], slot: usize, table: &mut BTreeMap<&'a Formula, [usize; 3]>) {
    for f in v {
        table.entry(f).or_insert([0; 3])[slot] += 1;
    }
}

/// Matches the blended conjunction contexts: `x = shared + left`,
/// `y = shared + right`, `rest = shared + left + right`.
fn blend(x: &[Formula], y: &[Formula], rest: &[Formula]) -> Option<StepMatch> {
    let mut table = BTreeMap::new();
    counts(x, 0, &mut table);
    counts(y, 1, &mut table);
    counts(rest, 2, &mut table);
    let mut m = StepMatch::default();
    for (f, [cx, cy, cr]) in table {
        // shared count g satisfies cr = cx + cy - g with 0 <= g <= min(cx, cy)
        if cr < cx.max(cy) || cr > cx + cy {
            return None;
        }
        let g = cx + cy - cr;
        m.shared.extend(std::iter::repeat_n(f.clone(), g));
        m.left.extend(std::iter::repeat_n(f.clone(), cx - g));
        m.right.extend(std::iter::repeat_n(f.clone(), cy - g));
    }
    Some(m)
}

fn match_rule(
    axiom: Axiom,
    rule: RuleId,
    conclusion: &[Formula],
    premises: &[&Sequent],
    principal: Option<usize>,
) -> Option<StepMatch> {
    let candidates: Vec<usize> = match principal {
        Some(k) => vec![k],
        None => (0..conclusion.len()).collect(),
    };
    match rule {
        RuleId::Ax => {
            let n = conclusion.len();
            let ok = match axiom {
                Axiom::Plain => n == 2 && complementary(&conclusion[0], &conclusion[1]),
                Axiom::WithContext => (0..n)
                    .any(|i| (i + 1..n).any(|j| complementary(&conclusion[i], &conclusion[j]))),
            };
            ok.then(StepMatch::default)
        }
        RuleId::Weaken => candidates.into_iter().find_map(|p| {
            let rest = without(conclusion, p);
            same_multiset(premises[0].formulas(), &rest).then(|| StepMatch {
                principal: Some(p),
                shared: rest,
                ..Default::default()
            })
        }),
        RuleId::Contract => candidates.into_iter().find_map(|p| {
            let expected = plus(conclusion, &[&conclusion[p]]);
            same_multiset(premises[0].formulas(), &expected).then(|| StepMatch {
                principal: Some(p),
                shared: without(conclusion, p),
                ..Default::default()
            })
        }),
        RuleId::Par | RuleId::Plus1 | RuleId::Plus2 => candidates.into_iter().find_map(|p| {
            let (conn, a, b) = conclusion[p].as_node()?;
            if conn != Connective::Or {
                return None;
            }
            let rest = without(conclusion, p);
            let expected = match rule {
                RuleId::Par => plus(&rest, &[a, b]),
                RuleId::Plus1 => plus(&rest, &[a]),
                _ => plus(&rest, &[b]),
            };
            same_multiset(premises[0].formulas(), &expected).then(|| StepMatch {
                principal: Some(p),
                shared: rest,
                ..Default::default()
            })
        }),
        RuleId::With | RuleId::Tensor | RuleId::Wedge => candidates.into_iter().find_map(|p| {
            let (conn, a, b) = conclusion[p].as_node()?;
            if conn != Connective::And {
                return None;
            }
            let rest = without(conclusion, p);
            let x = remove_one(premises[0].formulas(), a)?;
            let y = remove_one(premises[1].formulas(), b)?;
            let found = match rule {
                RuleId::With => (same_multiset(&x, &rest) && same_multiset(&y, &rest)).then(|| {
                    StepMatch {
                        principal: None,
                        shared: rest,
                        ..Default::default()
                    }
                }),
                RuleId::Tensor => {
                    let mut both = x.clone();
                    both.extend(y.iter().cloned());
                    same_multiset(&both, &rest).then(|| StepMatch {
                        principal: None,
                        shared: Vec::new(),
                        left: x,
                        right: y,
                    })
                }
                _ => blend(&x, &y, &rest),
            };
            found.map(|m| StepMatch {
                principal: Some(p),
                ..m
            })
        }),
    }
}

/// One failing node of a derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeViolation {
    /// Premise indices from the root to the node.
    pub path: Vec<usize>,
    pub kind: ViolationKind,
    pub message: String,
}

impl fmt::Display for NodeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(usize::to_string).collect();
        let path = if path.is_empty() {
            "root".to_string()
        } else {
            format!("root/{}", path.join("/"))
        };
        write!(f, "{path}: {:?}: {}", self.kind, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub violations: Vec<NodeViolation>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every node of `d` in `sys` and reports every failing node.
pub fn check_derivation(sys: &System, d: &Derivation) -> CheckReport {
    let mut report = CheckReport::default();
    d.walk(&mut |path, node| {
        let premises: Vec<&Sequent> = node.premises.iter().map(|p| &p.conclusion).collect();
        if let Err(v) = check_step_at(sys, node.rule, &node.conclusion, &premises, node.principal)
        {
            report.violations.push(NodeViolation {
                path: path.to_vec(),
                kind: v.kind(),
                message: v.to_string(),
            });
        }
    });
    report
}
