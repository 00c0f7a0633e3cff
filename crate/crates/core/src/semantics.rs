//! Truth-table semantics, minimal sequents and bounded enumeration.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::formula::{vars_of, Connective, Formula, Sequent, Var};

/// Most variables a truth table is built for.
pub const MAX_VARS: usize = 24;
/// Ceiling on `max_connectives` for enumeration.
pub const MAX_ENUM_CONNECTIVES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("assignment has no value for variable {0}")]
    MissingVariable(Var),
    #[error("{found} variables exceed the truth-table limit of {MAX_VARS}")]
    VariableLimitExceeded { found: usize },
    #[error("sequent is not valid")]
    NotValid,
    #[error("enumeration bound too large: {0}")]
    BoundTooLarge(String),
}

/// A 0/1 assignment of variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<Var, bool>);

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn set(&mut self, var: Var, value: bool) -> &mut Self {
        self.0.insert(var, value);
        self
    }

    pub fn with(mut self, name: &str, value: bool) -> Self {
        self.0.insert(Var::new(name), value);
        self
    }

    pub fn get(&self, var: &Var) -> Option<bool> {
        self.0.get(var).copied()
    }
}

pub fn evaluate(f: &Formula, a: &Assignment) -> Result<bool, SemanticsError> {
    match f {
        Formula::Lit { var, positive } => a
            .get(var)
            .map(|v| v == *positive)
            .ok_or_else(|| SemanticsError::MissingVariable(var.clone())),
        Formula::Node { conn, left, right } => {
            let l = evaluate(left, a)?;
            let r = evaluate(right, a)?;
            Ok(match conn {
                Connective::And => l && r,
                Connective::Or => l || r,
            })
        }
    }
}

/// Truth tables of a list of formulas over their joint variables.
///
/// Row `r` assigns variable `i` the bit `(r >> i) & 1`. Tables are bitsets
/// of `2^n` rows packed into 64-bit words.
struct Tables {
    words_per_table: usize,
    /// Mask of live bits in the last word.
    last_mask: u64,
    data: Vec<u64>,
}

const SMALL_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

impl Tables {
    fn build(formulas: &[Formula]) -> Result<Tables, SemanticsError> {
        let vars = vars_of(formulas);
        if vars.len() > MAX_VARS {
            return Err(SemanticsError::VariableLimitExceeded { found: vars.len() });
        }
        let rows = 1usize << vars.len();
        let words = rows.div_ceil(64);
        let last_mask = if rows >= 64 { u64::MAX } else { (1u64 << rows) - 1 };
        let mut data = vec![0u64; words * formulas.len()];
        let mut scratch = Vec::new();
        for (i, f) in formulas.iter().enumerate() {
            let out = &mut data[i * words..(i + 1) * words];
            eval_table(f, &vars, out, &mut scratch);
        }
        Ok(Tables {
            words_per_table: words,
            last_mask,
            data,
        })
    }

    fn table(&self, i: usize) -> &[u64] {
        &self.data[i * self.words_per_table..(i + 1) * self.words_per_table]
    }

    /// Whether the disjunction of the selected tables is true on every row.
    fn covers(&self, selected: impl Fn(usize) -> bool, count: usize) -> bool {
        let words = self.words_per_table;
        (0..words).all(|w| {
            let mut acc = 0u64;
            for i in (0..count).filter(|&i| selected(i)) {
                acc |= self.table(i)[w];
            }
            let full = if w + 1 == words { self.last_mask } else { u64::MAX };
            acc & full == full
        })
    }
}

fn var_word(index: usize, word: usize) -> u64 {
    if index < 6 {
        SMALL_MASKS[index]
    } else if ((word * 64) >> index) & 1 == 1 {
        u64::MAX
    } else {
        0
    }
}

fn eval_table(f: &Formula, vars: &[Var], out: &mut [u64], scratch: &mut Vec<Vec<u64>>) {
    match f {
        Formula::Lit { var, positive } => {
            let index = vars.binary_search(var).expect("variable collected");
            for (w, slot) in out.iter_mut().enumerate() {
                let bits = var_word(index, w);
                *slot = if *positive { bits } else { !bits };
            }
        }
        Formula::Node { conn, left, right } => {
            eval_table(left, vars, out, scratch);
            let mut tmp = scratch.pop().unwrap_or_default();
            tmp.clear();
            tmp.resize(out.len(), 0);
            eval_table(right, vars, &mut tmp, scratch);
            for (o, r) in out.iter_mut().zip(&tmp) {
                match conn {
                    Connective::And => *o &= r,
                    Connective::Or => *o |= r,
                }
            }
            scratch.push(tmp);
        }
    }
}

/// Validity of a (possibly empty) list of occurrences read disjunctively.
/// The empty list is invalid.
pub fn is_valid_formulas(formulas: &[Formula]) -> Result<bool, SemanticsError> {
    if formulas.is_empty() {
        return Ok(false);
    }
    let t = Tables::build(formulas)?;
    Ok(t.covers(|_| true, formulas.len()))
}

pub fn is_valid(s: &Sequent) -> Result<bool, SemanticsError> {
    is_valid_formulas(s.formulas())
}

/// Minimality of a list of occurrences: valid, and invalid after deleting
/// any single occurrence. Single deletions suffice because validity is
/// monotone under adding occurrences.
pub fn is_minimal_formulas(formulas: &[Formula]) -> Result<bool, SemanticsError> {
    if formulas.is_empty() {
        return Ok(false);
    }
    let t = Tables::build(formulas)?;
    let n = formulas.len();
    if !t.covers(|_| true, n) {
        return Ok(false);
    }
    Ok((0..n).all(|skip| !t.covers(|i| i != skip, n)))
}

pub fn is_minimal(s: &Sequent) -> Result<bool, SemanticsError> {
    is_minimal_formulas(s.formulas())
}

/// Positions kept by greedy leftmost-first deletion.
///
/// A single left-to-right pass is enough: once deleting an occurrence
/// breaks validity, it keeps doing so after further deletions.
pub fn minimize_indices(formulas: &[Formula]) -> Result<Vec<usize>, SemanticsError> {
    let t = Tables::build(formulas)?;
    let n = formulas.len();
    if n == 0 || !t.covers(|_| true, n) {
        return Err(SemanticsError::NotValid);
    }
    let mut keep = vec![true; n];
    for i in 0..n {
        keep[i] = false;
        if !t.covers(|j| keep[j], n) {
            keep[i] = true;
        }
    }
    Ok((0..n).filter(|&i| keep[i]).collect())
}

/// A minimal subsequent, by greedy leftmost-first deletion.
pub fn minimize(s: &Sequent) -> Result<Sequent, SemanticsError> {
    let kept = minimize_indices(s.formulas())?;
    let formulas = kept.into_iter().map(|i| s.formulas()[i].clone()).collect();
    Ok(Sequent::new(formulas).expect("a valid sequent keeps an occurrence"))
}

/// Limits for formula and sequent enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub var_count: usize,
    pub max_connectives: usize,
    pub max_formulas_per_sequent: usize,
    /// Sequent enumeration skips sequents with structurally equal occurrences.
    pub distinct_occurrences: bool,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds {
            var_count: 2,
            max_connectives: 4,
            max_formulas_per_sequent: 1,
            distinct_occurrences: false,
        }
    }
}

impl EnumerationBounds {
    pub fn formulas(var_count: usize, max_connectives: usize) -> Self {
        EnumerationBounds {
            var_count,
            max_connectives,
            ..Default::default()
        }
    }

    pub fn sequents(var_count: usize, max_connectives: usize, max_formulas: usize) -> Self {
        EnumerationBounds {
            var_count,
            max_connectives,
            max_formulas_per_sequent: max_formulas,
            distinct_occurrences: false,
        }
    }

    pub fn distinct(mut self, yes: bool) -> Self {
        self.distinct_occurrences = yes;
        self
    }

    fn validate(&self) -> Result<(), SemanticsError> {
        if self.var_count == 0 || self.var_count > MAX_VARS {
            return Err(SemanticsError::BoundTooLarge(format!(
                "var_count must be in 1..={MAX_VARS}, got {}",
                self.var_count
            )));
        }
        if self.max_connectives > MAX_ENUM_CONNECTIVES {
            return Err(SemanticsError::BoundTooLarge(format!(
                "max_connectives must be at most {MAX_ENUM_CONNECTIVES}, got {}",
                self.max_connectives
            )));
        }
        if self.max_formulas_per_sequent == 0 {
            return Err(SemanticsError::BoundTooLarge(
                "max_formulas_per_sequent must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Name of the `i`-th enumeration variable: `P, Q, R, ...`, then `P11, P12, ...`.
pub fn var_name(i: usize) -> String {
    const NAMES: [&str; 10] = ["P", "Q", "R", "S", "T", "U", "V", "X", "Y", "Z"];
    match NAMES.get(i) {
        Some(n) => (*n).to_string(),
        None => format!("P{}", i + 1),
    }
}

/// Literals over the first `var_count` variables: `P, ~P, Q, ~Q, ...`.
pub fn literals(var_count: usize) -> Vec<Formula> {
    (0..var_count)
        .flat_map(|i| {
            let v = Var::new(&var_name(i));
            [Formula::lit(v.clone(), true), Formula::lit(v, false)]
        })
        .collect()
}

type FormulaIter = Box<dyn Iterator<Item = Formula> + Send>;

fn exact_size(n: usize, leaves: Arc<Vec<Formula>>) -> FormulaIter {
    if n == 0 {
        let v: Vec<Formula> = leaves.as_ref().clone();
        return Box::new(v.into_iter());
    }
    Box::new(
        [Connective::And, Connective::Or]
            .into_iter()
            .flat_map(move |conn| {
                let leaves = leaves.clone();
                (0..n).flat_map(move |left_size| {
                    let leaves = leaves.clone();
                    exact_size(left_size, leaves.clone()).flat_map(move |left| {
                        exact_size(n - 1 - left_size, leaves.clone())
                            .map(move |right| Formula::node(conn, left.clone(), right))
                    })
                })
            }),
    )
}

/// Every formula tree with at most `max_connectives` nodes over the
/// literals of the first `var_count` variables, by increasing size.
pub fn enumerate_formulas(
    b: &EnumerationBounds,
) -> Result<impl Iterator<Item = Formula> + Send, SemanticsError> {
    b.validate()?;
    let leaves = Arc::new(literals(b.var_count));
    let max = b.max_connectives;
    Ok((0..=max).flat_map(move |n| exact_size(n, leaves.clone())))
}

/// Every sequent of `1..=max_formulas_per_sequent` occurrences whose total
/// connective count is at most `max_connectives`, taken as multisets (or
/// sets, with `distinct_occurrences`). Ordered by total connectives, then
/// occurrence count, then lexicographically by formula enumeration order.
pub fn enumerate_sequents(b: &EnumerationBounds) -> Result<SequentStream, SemanticsError> {
    b.validate()?;
    let formulas: Vec<Formula> = enumerate_formulas(b)?.collect();
    let sizes: Vec<usize> = formulas.iter().map(Formula::connectives).collect();
    let bucket_start = (0..=b.max_connectives + 1)
        .map(|c| sizes.partition_point(|&s| s < c))
        .collect();
    Ok(SequentStream {
        formulas,
        sizes,
        bucket_start,
        max_total: b.max_connectives,
        max_len: b.max_formulas_per_sequent,
        strict: b.distinct_occurrences,
        total: 0,
        len: 1,
        idx: Vec::new(),
        fresh: true,
    })
}

/// Lazy stream produced by [`enumerate_sequents`].
pub struct SequentStream {
    formulas: Vec<Formula>,
    sizes: Vec<usize>,
    bucket_start: Vec<usize>,
    max_total: usize,
    max_len: usize,
    strict: bool,
    total: usize,
    len: usize,
    idx: Vec<usize>,
    fresh: bool,
}

impl SequentStream {
    /// Fill positions `pos..len`, with position `pos` starting its search at
    /// `start`, so that the remaining positions use exactly `rem` connectives.
    fn fill(&mut self, pos: usize, start: usize, rem: usize) -> bool {
        let n = self.formulas.len();
        if pos + 1 == self.len {
            // Last position: jump into the bucket of size `rem`.
            let lo = start.max(self.bucket_start[rem]);
            if lo < self.bucket_start[rem + 1] && lo < n {
                self.idx[pos] = lo;
                return true;
            }
            return false;
        }
        let mut i = start;
        while i < n && self.sizes[i] <= rem {
            self.idx[pos] = i;
            let next = if self.strict { i + 1 } else { i };
            if self.fill(pos + 1, next, rem - self.sizes[i]) {
                return true;
            }
            i += 1;
        }
        false
    }

    fn advance(&mut self) -> bool {
        for p in (0..self.len).rev() {
            let used: usize = self.idx[..p].iter().map(|&i| self.sizes[i]).sum();
            let rem = self.total - used;
            if self.fill(p, self.idx[p] + 1, rem) {
                return true;
            }
        }
        false
    }

    fn start_shape(&mut self) -> bool {
        loop {
            if self.total > self.max_total {
                return false;
            }
            self.idx = vec![0; self.len];
            if self.fill(0, 0, self.total) {
                return true;
            }
            self.next_shape();
        }
    }

    fn next_shape(&mut self) {
        if self.len < self.max_len {
            self.len += 1;
        } else {
            self.len = 1;
            self.total += 1;
        }
    }
}

impl Iterator for SequentStream {
    type Item = Sequent;

    fn next(&mut self) -> Option<Sequent> {
        if self.total > self.max_total {
            return None;
        }
        let found = if self.fresh {
            self.fresh = false;
            self.start_shape()
        } else if self.advance() {
            true
        } else {
            self.next_shape();
            self.start_shape()
        };
        if !found {
            self.total = self.max_total + 1;
            return None;
        }
        let formulas = self.idx.iter().map(|&i| self.formulas[i].clone()).collect();
        Some(Sequent::new(formulas).expect("len >= 1"))
    }
}

impl std::iter::FusedIterator for SequentStream {}
