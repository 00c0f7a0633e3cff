//! Formulas, sequents and size measures.
//!
//! Negation is an operation, not a connective: a [`Formula`] is a binary
//! tree of `And`/`Or` nodes over signed literals. Tree shape matters,
//! `(A | B) | C` and `A | (B | C)` are different formulas and can differ in
//! derivability.

use std::fmt;
use std::sync::Arc;

/// A propositional variable name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Var {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Connective {
    And,
    Or,
}

impl Connective {
    pub fn dual(self) -> Connective {
        match self {
            Connective::And => Connective::Or,
            Connective::Or => Connective::And,
        }
    }
}

/// A formula in literal-negation form.
///
/// Subtrees are reference counted so that cloning a formula is cheap; the
/// value itself is immutable. The derived `Ord` is the total structural order
/// used for canonical sequent keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Lit {
        var: Var,
        positive: bool,
    },
    Node {
        conn: Connective,
        left: Arc<Formula>,
        right: Arc<Formula>,
    },
}

impl Formula {
    /// The positive literal `name`.
    pub fn atom(name: &str) -> Formula {
        Formula::Lit {
            var: Var::new(name),
            positive: true,
        }
    }

    pub fn lit(var: Var, positive: bool) -> Formula {
        Formula::Lit { var, positive }
    }

    pub fn node(conn: Connective, left: Formula, right: Formula) -> Formula {
        Formula::Node {
            conn,
            left: Arc::new(left),
            right: Arc::new(right),
        }
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::node(Connective::And, left, right)
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::node(Connective::Or, left, right)
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Formula::Lit { .. })
    }

    /// The connective and both children of a compound formula.
    pub fn as_node(&self) -> Option<(Connective, &Formula, &Formula)> {
        match self {
            Formula::Lit { .. } => None,
            Formula::Node { conn, left, right } => Some((*conn, left, right)),
        }
    }

    pub fn is_and(&self) -> bool {
        matches!(
            self,
            Formula::Node {
                conn: Connective::And,
                ..
            }
        )
    }

    pub fn is_or(&self) -> bool {
        matches!(
            self,
            Formula::Node {
                conn: Connective::Or,
                ..
            }
        )
    }

    /// De Morgan dual: literal polarities flipped, `And` and `Or` swapped.
    pub fn negate(&self) -> Formula {
        match self {
            Formula::Lit { var, positive } => Formula::Lit {
                var: var.clone(),
                positive: !positive,
            },
            Formula::Node { conn, left, right } => {
                Formula::node(conn.dual(), left.negate(), right.negate())
            }
        }
    }

    /// Number of `And`/`Or` nodes.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Lit { .. } => 0,
            Formula::Node { left, right, .. } => 1 + left.connectives() + right.connectives(),
        }
    }

    pub fn contains_connective(&self, wanted: Connective) -> bool {
        match self {
            Formula::Lit { .. } => false,
            Formula::Node { conn, left, right } => {
                *conn == wanted
                    || left.contains_connective(wanted)
                    || right.contains_connective(wanted)
            }
        }
    }

    /// Calls `visit` on every variable occurrence, left to right.
    pub fn for_each_var<'a>(&'a self, visit: &mut impl FnMut(&'a Var)) {
        match self {
            Formula::Lit { var, .. } => visit(var),
            Formula::Node { left, right, .. } => {
                left.for_each_var(visit);
                right.for_each_var(visit);
            }
        }
    }

    /// Distinct variables, sorted.
    pub fn vars(&self) -> Vec<Var> {
        vars_of(std::slice::from_ref(self))
    }
}

/// Distinct variables of a list of formulas, sorted.
pub fn vars_of(formulas: &[Formula]) -> Vec<Var> {
    let mut out: Vec<&Var> = Vec::new();
    for f in formulas {
        f.for_each_var(&mut |v| out.push(v));
    }
    out.sort();
    out.dedup();
    out.into_iter().cloned().collect()
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Returned when constructing a sequent from an empty list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("a sequent must contain at least one formula")]
pub struct EmptySequent;

/// A non-empty list of formula occurrences.
///
/// Occurrences are identified by position; two occurrences may be
/// structurally equal. All rules of the calculi are invariant under
/// permuting occurrences, so comparisons that ignore order go through
/// [`Sequent::canonical`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sequent(Vec<Formula>);

impl Sequent {
    pub fn new(formulas: Vec<Formula>) -> Result<Sequent, EmptySequent> {
        if formulas.is_empty() {
            Err(EmptySequent)
        } else {
            Ok(Sequent(formulas))
        }
    }

    pub fn singleton(formula: Formula) -> Sequent {
        Sequent(vec![formula])
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.0
    }

    pub fn into_formulas(self) -> Vec<Formula> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.0.iter()
    }

    pub fn measure(&self) -> Measure {
        Measure::of(&self.0)
    }

    /// Occurrences sorted by the structural order: equal for two sequents
    /// iff they are equal as multisets.
    pub fn canonical(&self) -> Vec<Formula> {
        let mut v = self.0.clone();
        v.sort();
        v
    }

    /// Multiset equality.
    pub fn same_multiset(&self, other: &Sequent) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    pub fn vars(&self) -> Vec<Var> {
        vars_of(&self.0)
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a Sequent {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Size of a sequent: the termination measure of backward search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Measure {
    pub connectives: usize,
    pub formulas: usize,
}

impl Measure {
    pub fn of(formulas: &[Formula]) -> Measure {
        Measure {
            connectives: formulas.iter().map(Formula::connectives).sum(),
            formulas: formulas.len(),
        }
    }
}
