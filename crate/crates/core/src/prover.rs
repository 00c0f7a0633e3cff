//! Proof construction.
//!
//! [`prove_minimal`] builds a derivation of any minimal sequent in the
//! minimal calculus `(wedge, plus, par)` by induction on connectives.
//! Premises stay minimal at every step:
//!
//! * a conjunction `A1 & A2` in context `D` splits `D` into the greedy
//!   minimal subsequents of `D, A1` and `D, A2`; together they cover `D`;
//! * a disjunction `A1 | A2` uses `plus1` (or `plus2`) when `D, A1` (or
//!   `D, A2`) is already valid, and `par` otherwise.
//!
//! [`search`] is a bounded backward proof search over the rules of any
//! system, memoized on the canonical (sorted) sequent.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::{Axiom, Derivation, Rule, RuleId, System};
use crate::formula::{Connective, Formula, Sequent};
use crate::semantics::{is_minimal, is_minimal_formulas, is_valid_formulas, minimize_indices, SemanticsError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProveError {
    #[error("sequent is not minimal")]
    NotMinimal,
    #[error("not valid")]
    NotValid,
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// Which compound occurrence becomes principal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Policy {
    #[default]
    Leftmost,
    Rightmost,
    /// Uniform choice from a seeded generator.
    Random(u64),
}

/// The three-way split of a conjunction context.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Split {
    pub shared: Vec<Formula>,
    pub left: Vec<Formula>,
    pub right: Vec<Formula>,
}

/// Splits the context of a minimal `delta, a1 & a2` into the occurrences
/// needed by both conjuncts, only by `a1`, and only by `a2`.
pub fn split_context(delta: &[Formula], a1: &Formula, a2: &Formula) -> Result<Split, ProveError> {
    let mut whole = delta.to_vec();
    whole.push(Formula::and(a1.clone(), a2.clone()));
    if !is_minimal_formulas(&whole)? {
        return Err(ProveError::NotMinimal);
    }
    let (shared, left, right) = split_indices(delta, a1, a2)?;
    let pick = |ix: Vec<usize>| ix.into_iter().map(|i| delta[i].clone()).collect();
    Ok(Split {
        shared: pick(shared),
        left: pick(left),
        right: pick(right),
    })
}

type Indices = Vec<usize>;

/// Context positions of the split. Assumes `delta, a1 & a2` is minimal.
fn split_indices(
    delta: &[Formula],
    a1: &Formula,
    a2: &Formula,
) -> Result<(Indices, Indices, Indices), SemanticsError> {
    let kept = |a: &Formula| -> Result<Vec<bool>, SemanticsError> {
        let mut v = delta.to_vec();
        v.push(a.clone());
        let mut mask = vec![false; delta.len()];
        // `delta` alone is invalid, so the conjunct itself is always kept.
        for i in minimize_indices(&v)? {
            if i < delta.len() {
                mask[i] = true;
            }
        }
        Ok(mask)
    };
    let in1 = kept(a1)?;
    let in2 = kept(a2)?;
    let mut out = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..delta.len() {
        match (in1[i], in2[i]) {
            (true, true) => out.0.push(i),
            (true, false) => out.1.push(i),
            (false, true) => out.2.push(i),
            (false, false) => unreachable!("context occurrence {i} covered by neither conjunct"),
        }
    }
    Ok(out)
}

/// Derives a minimal sequent in the minimal calculus with the leftmost policy.
pub fn prove_minimal(s: &Sequent) -> Result<Derivation, ProveError> {
    Prover::new(Policy::Leftmost).prove_minimal(s)
}

/// Derives a valid formula in the minimal calculus.
pub fn prove_formula(f: &Formula) -> Result<Derivation, ProveError> {
    Prover::new(Policy::Leftmost).prove_formula(f)
}

/// The completeness construction with a configurable principal policy.
pub struct Prover {
    policy: Policy,
    rng: Option<ChaCha8Rng>,
}

impl Prover {
    pub fn new(policy: Policy) -> Prover {
        let rng = match policy {
            Policy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Prover { policy, rng }
    }

    pub fn prove_formula(&mut self, f: &Formula) -> Result<Derivation, ProveError> {
        let s = Sequent::singleton(f.clone());
        if !is_valid_formulas(s.formulas())? {
            return Err(ProveError::NotValid);
        }
        // A valid singleton is minimal: its only proper subsequent is empty.
        self.build(s)
    }

    pub fn prove_minimal(&mut self, s: &Sequent) -> Result<Derivation, ProveError> {
        if !is_minimal(s)? {
            return Err(ProveError::NotMinimal);
        }
        self.build(s.clone())
    }

    fn choose(&mut self, compound: &[usize]) -> usize {
        match self.policy {
            Policy::Leftmost => compound[0],
            Policy::Rightmost => compound[compound.len() - 1],
            Policy::Random(_) => {
                let rng = self.rng.as_mut().expect("seeded");
                compound[rng.random_range(0..compound.len())]
            }
        }
    }

    fn build(&mut self, s: Sequent) -> Result<Derivation, ProveError> {
        let fs = s.formulas();
        let compound: Vec<usize> = (0..fs.len()).filter(|&i| !fs[i].is_literal()).collect();
        if compound.is_empty() {
            // A minimal sequent of literals is a complementary pair.
            debug_assert_eq!(fs.len(), 2);
            return Ok(Derivation::axiom(s));
        }
        let p = self.choose(&compound);
        let (conn, a1, a2) = fs[p].as_node().expect("compound");
        let rest: Vec<Formula> = fs
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != p)
            .map(|(_, f)| f.clone())
            .collect();
        // Premises keep the conclusion's order, with the principal replaced
        // in place by its immediate subformula(s).
        let replace = |keep: &dyn Fn(usize) -> bool, with: &[&Formula]| -> Sequent {
            let mut out = Vec::new();
            let mut j = 0;
            for (i, f) in fs.iter().enumerate() {
                if i == p {
                    out.extend(with.iter().map(|g| (*g).clone()));
                } else {
                    if keep(j) {
                        out.push(f.clone());
                    }
                    j += 1;
                }
            }
            Sequent::new(out).expect("non-empty premise")
        };
        match conn {
            Connective::And => {
                let (shared, left, right) = split_indices(&rest, a1, a2)?;
                let mut in1 = vec![false; rest.len()];
                let mut in2 = vec![false; rest.len()];
                for &i in &shared {
                    in1[i] = true;
                    in2[i] = true;
                }
                for &i in &left {
                    in1[i] = true;
                }
                for &i in &right {
                    in2[i] = true;
                }
                let p1 = replace(&|j| in1[j], &[a1]);
                let p2 = replace(&|j| in2[j], &[a2]);
                let d1 = self.build(p1)?;
                let d2 = self.build(p2)?;
                Ok(Derivation::new(RuleId::Wedge, s, vec![d1, d2]))
            }
            Connective::Or => {
                let with_a1 = plus(&rest, a1);
                let with_a2 = plus(&rest, a2);
                let (rule, premise) = if is_valid_formulas(&with_a1)? {
                    (RuleId::Plus1, replace(&|_| true, &[a1]))
                } else if is_valid_formulas(&with_a2)? {
                    (RuleId::Plus2, replace(&|_| true, &[a2]))
                } else {
                    (RuleId::Par, replace(&|_| true, &[a1, a2]))
                };
                let d = self.build(premise)?;
                Ok(Derivation::new(rule, s, vec![d]))
            }
        }
    }
}

fn plus(v: &[Formula], f: &Formula) -> Vec<Formula> {
    let mut out = v.to_vec();
    out.push(f.clone());
    out
}

/// Caps for [`search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Most occurrences in any sequent; only contraction can grow sequents.
    pub max_width: usize,
    pub max_depth: usize,
    /// Most sequents kept in the memo table. Exceeding it only disables caching.
    pub memo_limit: usize,
    /// Skip backward steps with an invalid premise. Sound because every rule
    /// of every system preserves validity.
    pub semantic_pruning: bool,
}

impl SearchBounds {
    pub fn for_goal(s: &Sequent) -> SearchBounds {
        SearchBounds {
            max_width: s.len() + 4,
            max_depth: 32,
            memo_limit: 1 << 20,
            semantic_pruning: true,
        }
    }

    pub fn syntactic(mut self) -> SearchBounds {
        self.semantic_pruning = false;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Derivable(Derivation),
    /// No derivation. `definitive` is set only for contraction-free
    /// systems, whose backward search space is finite and was fully explored.
    Underivable {
        definitive: bool,
    },
    /// No derivation was found, and a cap cut off at least one branch.
    Exhausted,
}

impl SearchOutcome {
    pub fn is_derivable(&self) -> bool {
        matches!(self, SearchOutcome::Derivable(_))
    }

    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            SearchOutcome::Derivable(d) => Some(d),
            _ => None,
        }
    }

    /// One-line summary used by the CLI and reports.
    pub fn summary(&self) -> &'static str {
        match self {
            SearchOutcome::Derivable(_) => "derivable",
            SearchOutcome::Underivable { definitive: true } => "underivable (definitive)",
            SearchOutcome::Underivable { definitive: false } => "underivable (within caps)",
            SearchOutcome::Exhausted => "no proof within caps",
        }
    }
}

/// Backward proof search for `s` in `sys`.
///
/// Tries the axiom, then every logical rule at every principal occurrence
/// (every context partition for `tensor` and `wedge`), then weakening and
/// contraction. In a contraction-free system the measure (connectives,
/// formulas) strictly decreases along every backward step, so a depth-first
/// search is exhaustive and an underivable verdict is definitive. With
/// contraction the width-bounded state graph may contain cycles; it is
/// explored breadth-first and derivability is computed as a least fixpoint.
pub fn search(sys: &System, s: &Sequent, b: &SearchBounds) -> SearchOutcome {
    let mut searcher = Searcher {
        sys: *sys,
        bounds: *b,
        memo: HashMap::new(),
        on_path: HashSet::new(),
        pruned: false,
    };
    let goal = s.canonical();
    let proof = if sys.has(Rule::Contract) {
        searcher.fixpoint(goal)
    } else {
        match searcher.prove(goal, b.max_depth) {
            Found::Proved(node) => Some(node),
            Found::Failed { .. } => None,
        }
    };
    match proof {
        Some(node) => {
            let mut d = node.to_derivation();
            d.conclusion = s.clone();
            SearchOutcome::Derivable(d)
        }
        None if searcher.pruned => SearchOutcome::Exhausted,
        None => SearchOutcome::Underivable {
            definitive: !sys.has(Rule::Contract),
        },
    }
}

struct ProofNode {
    rule: RuleId,
    conclusion: Vec<Formula>,
    premises: Vec<Rc<ProofNode>>,
}

impl ProofNode {
    fn to_derivation(&self) -> Derivation {
        Derivation::new(
            self.rule,
            Sequent::new(self.conclusion.clone()).expect("non-empty"),
            self.premises.iter().map(|p| p.to_derivation()).collect(),
        )
    }
}

enum Memo {
    Proved(Rc<ProofNode>),
    /// Failed with this much depth left, without depending on a cycle cut.
    Failed { depth: usize },
}

enum Found {
    Proved(Rc<ProofNode>),
    Failed {
        /// The failure depended on an ancestor still being open.
        cyclic: bool,
        /// The failure depended on the depth cap.
        depth_limited: bool,
    },
}

struct Searcher {
    sys: System,
    bounds: SearchBounds,
    memo: HashMap<Vec<Formula>, Memo>,
    on_path: HashSet<Vec<Formula>>,
    pruned: bool,
}

/// A backward step: the rule and its premises (canonical order).
type Move = (RuleId, Vec<Vec<Formula>>);

impl Searcher {
    fn prove(&mut self, goal: Vec<Formula>, depth: usize) -> Found {
        match self.memo.get(&goal) {
            Some(Memo::Proved(n)) => return Found::Proved(n.clone()),
            Some(Memo::Failed { depth: d }) if *d >= depth => {
                return Found::Failed {
                    cyclic: false,
                    depth_limited: false,
                }
            }
            _ => {}
        }
        if self.on_path.contains(&goal) {
            return Found::Failed {
                cyclic: true,
                depth_limited: false,
            };
        }
        if self.is_axiom(&goal) {
            return self.record(goal, RuleId::Ax, Vec::new());
        }
        if depth == 1 {
            self.pruned = true;
            return Found::Failed {
                cyclic: false,
                depth_limited: true,
            };
        }
        self.on_path.insert(goal.clone());
        let mut cyclic = false;
        let mut depth_limited = false;
        let mut result = None;
        'moves: for (rule, premises) in self.moves(&goal) {
            let mut proofs = Vec::with_capacity(premises.len());
            for p in premises {
                match self.prove(p, depth - 1) {
                    Found::Proved(n) => proofs.push(n),
                    Found::Failed {
                        cyclic: c,
                        depth_limited: l,
                    } => {
                        cyclic |= c;
                        depth_limited |= l;
                        continue 'moves;
                    }
                }
            }
            result = Some((rule, proofs));
            break;
        }
        self.on_path.remove(&goal);
        match result {
            Some((rule, proofs)) => self.record(goal, rule, proofs),
            None => {
                if !cyclic && self.memo.len() < self.bounds.memo_limit {
                    let d = if depth_limited { depth } else { usize::MAX };
                    self.memo.insert(goal, Memo::Failed { depth: d });
                }
                Found::Failed {
                    cyclic,
                    depth_limited,
                }
            }
        }
    }

    /// Explores every state reachable from `goal` within the caps, then
    /// propagates derivability from the axioms. A state is proved by the
    /// first move whose premises are all proved, so the chosen moves form a
    /// well-founded tree.
    fn fixpoint(&mut self, goal: Vec<Formula>) -> Option<Rc<ProofNode>> {
        let mut index: HashMap<Vec<Formula>, usize> = HashMap::new();
        let mut states: Vec<Vec<Formula>> = Vec::new();
        let mut moves: Vec<Vec<(RuleId, Vec<usize>)>> = Vec::new();
        let mut axioms = Vec::new();
        let mut level = Vec::new();
        index.insert(goal.clone(), 0);
        states.push(goal);
        level.push(1usize);
        let mut next = 0;
        while next < states.len() {
            let current = states[next].clone();
            let mut out = Vec::new();
            if self.is_axiom(&current) {
                axioms.push(next);
            } else if level[next] >= self.bounds.max_depth {
                self.pruned = true;
            } else {
                'moves: for (rule, premises) in self.moves(&current) {
                    let mut ids = Vec::with_capacity(premises.len());
                    for p in premises {
                        let id = match index.get(&p) {
                            Some(&id) => id,
                            None if states.len() >= self.bounds.memo_limit => {
                                self.pruned = true;
                                continue 'moves;
                            }
                            None => {
                                let id = states.len();
                                index.insert(p.clone(), id);
                                states.push(p);
                                level.push(level[next] + 1);
                                id
                            }
                        };
                        ids.push(id);
                    }
                    out.push((rule, ids));
                }
            }
            moves.push(out);
            next += 1;
        }
        // Reverse edges: premise occurrence -> (state, move).
        let mut users: Vec<Vec<(usize, usize)>> = vec![Vec::new(); states.len()];
        let mut missing: Vec<Vec<usize>> = Vec::with_capacity(states.len());
        for (s, ms) in moves.iter().enumerate() {
            missing.push(ms.iter().map(|(_, ps)| ps.len()).collect());
            for (m, (_, ps)) in ms.iter().enumerate() {
                for &p in ps {
                    users[p].push((s, m));
                }
            }
        }
        let mut chosen: Vec<Option<usize>> = vec![None; states.len()];
        let mut proved = vec![false; states.len()];
        let mut queue: std::collections::VecDeque<usize> = axioms.into_iter().collect();
        for &a in &queue {
            proved[a] = true;
        }
        while let Some(p) = queue.pop_front() {
            if proved[0] {
                break;
            }
            for &(s, m) in &users[p] {
                missing[s][m] -= 1;
                if missing[s][m] == 0 && !proved[s] {
                    proved[s] = true;
                    chosen[s] = Some(m);
                    queue.push_back(s);
                }
            }
        }
        if !proved[0] {
            return None;
        }
        fn build(
            s: usize,
            states: &[Vec<Formula>],
            moves: &[Vec<(RuleId, Vec<usize>)>],
            chosen: &[Option<usize>],
            done: &mut HashMap<usize, Rc<ProofNode>>,
        ) -> Rc<ProofNode> {
            if let Some(n) = done.get(&s) {
                return n.clone();
            }
            let node = match chosen[s] {
                None => ProofNode {
                    rule: RuleId::Ax,
                    conclusion: states[s].clone(),
                    premises: Vec::new(),
                },
                Some(m) => {
                    let (rule, ps) = &moves[s][m];
                    ProofNode {
                        rule: *rule,
                        conclusion: states[s].clone(),
                        premises: ps
                            .iter()
                            .map(|&p| build(p, states, moves, chosen, done))
                            .collect(),
                    }
                }
            };
            let node = Rc::new(node);
            done.insert(s, node.clone());
            node
        }
        Some(build(0, &states, &moves, &chosen, &mut HashMap::new()))
    }

    fn record(&mut self, goal: Vec<Formula>, rule: RuleId, premises: Vec<Rc<ProofNode>>) -> Found {
        let node = Rc::new(ProofNode {
            rule,
            conclusion: goal.clone(),
            premises,
        });
        if self.memo.len() < self.bounds.memo_limit {
            self.memo.insert(goal, Memo::Proved(node.clone()));
        }
        Found::Proved(node)
    }

    fn is_axiom(&self, goal: &[Formula]) -> bool {
        let comp = |a: &Formula, b: &Formula| match (a, b) {
            (Formula::Lit { var: v, positive: p }, Formula::Lit { var: w, positive: q }) => {
                v == w && p != q
            }
            _ => false,
        };
        match self.sys.axiom {
            Axiom::Plain => goal.len() == 2 && comp(&goal[0], &goal[1]),
            Axiom::WithContext => {
                (0..goal.len()).any(|i| (i + 1..goal.len()).any(|j| comp(&goal[i], &goal[j])))
            }
        }
    }

    fn admissible(&self, premise: &[Formula]) -> bool {
        !premise.is_empty()
            && (!self.bounds.semantic_pruning || is_valid_formulas(premise).unwrap_or(true))
    }

    fn push_move(&self, out: &mut Vec<Move>, rule: RuleId, premises: Vec<Vec<Formula>>) {
        if premises.iter().all(|p| self.admissible(p)) {
            let premises = premises
                .into_iter()
                .map(|mut p| {
                    p.sort();
                    p
                })
                .collect();
            out.push((rule, premises));
        }
    }

    fn moves(&mut self, goal: &[Formula]) -> Vec<Move> {
        let sys = self.sys;
        let mut unary = Vec::new();
        let mut binary = Vec::new();
        let mut structural = Vec::new();
        for (i, f) in goal.iter().enumerate() {
            if i > 0 && goal[i - 1] == *f {
                continue;
            }
            let rest: Vec<Formula> = without(goal, i);
            if let Some((conn, a, b)) = f.as_node() {
                match conn {
                    Connective::Or => {
                        if sys.has(Rule::Par) {
                            self.push_move(&mut unary, RuleId::Par, vec![extend(&rest, &[a, b])]);
                        }
                        if sys.has(Rule::Plus) {
                            self.push_move(&mut unary, RuleId::Plus1, vec![extend(&rest, &[a])]);
                            self.push_move(&mut unary, RuleId::Plus2, vec![extend(&rest, &[b])]);
                        }
                    }
                    Connective::And => {
                        if sys.has(Rule::With) {
                            self.push_move(
                                &mut binary,
                                RuleId::With,
                                vec![extend(&rest, &[a]), extend(&rest, &[b])],
                            );
                        }
                        let groups = group(&rest);
                        if sys.has(Rule::Tensor) {
                            for_each_split(&groups, false, &mut |_, l, r| {
                                self.push_move(
                                    &mut binary,
                                    RuleId::Tensor,
                                    vec![extend(l, &[a]), extend(r, &[b])],
                                );
                            });
                        }
                        if sys.has(Rule::Wedge) {
                            for_each_split(&groups, true, &mut |g, l, r| {
                                let mut left = g.to_vec();
                                left.extend_from_slice(l);
                                let mut right = g.to_vec();
                                right.extend_from_slice(r);
                                self.push_move(
                                    &mut binary,
                                    RuleId::Wedge,
                                    vec![extend(&left, &[a]), extend(&right, &[b])],
                                );
                            });
                        }
                    }
                }
            }
            if sys.has(Rule::Weaken) && goal.len() > 1 {
                self.push_move(&mut structural, RuleId::Weaken, vec![rest.clone()]);
            }
            if sys.has(Rule::Contract) {
                if goal.len() < self.bounds.max_width {
                    self.push_move(&mut structural, RuleId::Contract, vec![extend(goal, &[f])]);
                } else {
                    self.pruned = true;
                }
            }
        }
        unary.extend(binary);
        unary.extend(structural);
        unary
    }
}

fn without(v: &[Formula], i: usize) -> Vec<Formula> {
    let mut out = v.to_vec();
    out.remove(i);
    out
}

fn extend(v: &[Formula], extra: &[&Formula]) -> Vec<Formula> {
    let mut out = v.to_vec();
    out.extend(extra.iter().map(|f| (*f).clone()));
    out
}

/// Distinct formulas of a sorted list with their multiplicities.
fn group(sorted: &[Formula]) -> Vec<(&Formula, usize)> {
    let mut out: Vec<(&Formula, usize)> = Vec::new();
    for f in sorted {
        match out.last_mut() {
            Some((g, n)) if *g == f => *n += 1,
            _ => out.push((f, 1)),
        }
    }
    out
}

/// Every split of a multiset into `(shared, left, right)`; with
/// `three_way == false`, `shared` stays empty.
fn for_each_split(
    groups: &[(&Formula, usize)],
    three_way: bool,
    visit: &mut impl FnMut(&[Formula], &[Formula], &[Formula]),
) {
    fn go(
        groups: &[(&Formula, usize)],
        three_way: bool,
        acc: &mut [Vec<Formula>; 3],
        visit: &mut impl FnMut(&[Formula], &[Formula], &[Formula]),
    ) {
        let Some(((f, n), tail)) = groups.split_first() else {
            visit(&acc[0], &acc[1], &acc[2]);
            return;
        };
        let max_shared = if three_way { *n } else { 0 };
        for g in 0..=max_shared {
            for l in 0..=(*n - g) {
                let r = *n - g - l;
                let lens = [acc[0].len(), acc[1].len(), acc[2].len()];
                for (slot, k) in [(0, g), (1, l), (2, r)] {
                    acc[slot].extend(std::iter::repeat_n((*f).clone(), k));
                }
                go(tail, three_way, acc, visit);
                for (slot, len) in lens.into_iter().enumerate() {
                    acc[slot].truncate(len);
                }
            }
        }
    }
    let mut acc = [Vec::new(), Vec::new(), Vec::new()];
    go(groups, three_way, &mut acc, visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check_derivation;
    use crate::syntax::{parse_formula, parse_sequent};

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn split_context_example() {
        let delta = seq("~Q&P, ~P").into_formulas();
        let split = split_context(&delta, &Formula::atom("P"), &Formula::atom("Q")).unwrap();
        assert_eq!(split.shared, seq("~P").into_formulas());
        assert!(split.left.is_empty());
        assert_eq!(split.right, seq("~Q&P").into_formulas());
    }

    #[test]
    fn split_context_empty_and_not_minimal() {
        // P & P alone is not valid; P|~P & Q|~Q is.
        let a = parse_formula("P|~P").unwrap();
        let b = parse_formula("Q|~Q").unwrap();
        assert_eq!(split_context(&[], &a, &b).unwrap(), Split::default());
        let extra = vec![Formula::atom("R")];
        assert_eq!(split_context(&extra, &a, &b), Err(ProveError::NotMinimal));
    }

    #[test]
    fn axiom_base_case() {
        let d = prove_minimal(&seq("P, ~P")).unwrap();
        assert_eq!(d, Derivation::axiom(seq("P, ~P")));
    }

    #[test]
    fn excluded_middle() {
        let d = prove_formula(&parse_formula("P | ~P").unwrap()).unwrap();
        assert_eq!(d.to_string(), "(par [P | ~P] (ax [P, ~P]))");
    }

    #[test]
    fn wedge_example() {
        let s = seq("P&Q, ~Q&P, ~P");
        let d = prove_minimal(&s).unwrap();
        assert_eq!(d.rule, RuleId::Wedge);
        assert_eq!(d.conclusion, s);
        assert!(d.premises[0].conclusion.same_multiset(&seq("~P, P")));
        assert!(d.premises[1].conclusion.same_multiset(&seq("~P, ~Q&P, Q")));
        assert!(check_derivation(&System::mp(), &d).ok());
        d.walk(&mut |_, n| assert!(is_minimal(&n.conclusion).unwrap()));
    }

    #[test]
    fn witness_root_rules() {
        let d = prove_formula(&parse_formula("((P&Q)|(~Q&P))|~P").unwrap()).unwrap();
        assert_eq!(d.rule, RuleId::Par);
        assert_eq!(d.premises[0].rule, RuleId::Par);
        assert_eq!(d.premises[0].premises[0].rule, RuleId::Wedge);
        assert!(check_derivation(&System::mp(), &d).ok());
    }

    #[test]
    fn errors() {
        assert_eq!(prove_minimal(&seq("P, ~P, Q")), Err(ProveError::NotMinimal));
        assert_eq!(
            prove_formula(&parse_formula("P & ~P").unwrap()),
            Err(ProveError::NotValid)
        );
    }

    #[test]
    fn policies_all_check() {
        let s = seq("(P|~P)&(Q|~Q), R & ~R | S");
        let s = crate::semantics::minimize(&s).unwrap();
        for policy in [Policy::Leftmost, Policy::Rightmost, Policy::Random(7)] {
            let d = Prover::new(policy).prove_minimal(&s).unwrap();
            assert!(check_derivation(&System::mp(), &d).ok(), "{policy:?}");
        }
    }

    #[test]
    fn search_examples() {
        let w = seq("((P&Q)|(~Q&P))|~P");
        let b = SearchBounds::for_goal(&w);
        assert_eq!(
            search(&System::mp_minus(), &w, &b),
            SearchOutcome::Underivable { definitive: true }
        );
        assert!(search(&System::mp(), &w, &b).is_derivable());

        let s = seq("P, ~P, Q");
        let b = SearchBounds::for_goal(&s);
        assert_eq!(
            search(&System::mp(), &s, &b),
            SearchOutcome::Underivable { definitive: true }
        );
        let np = search(&System::np(), &s, &b);
        let d = np.derivation().expect("derivable in np");
        assert!(check_derivation(&System::np(), d).ok());
        assert_eq!(d.conclusion, s);
        assert!(!search(&System::pp(), &s, &b).is_derivable());
    }

    #[test]
    fn derivable_but_not_minimal() {
        let s = seq("~P, P|~P");
        assert!(!is_minimal(&s).unwrap());
        let out = search(&System::mp(), &s, &SearchBounds::for_goal(&s));
        assert!(check_derivation(&System::mp(), out.derivation().unwrap()).ok());
    }

    #[test]
    fn syntactic_search_agrees() {
        let s = seq("P&Q, ~Q&P, ~P");
        let b = SearchBounds::for_goal(&s).syntactic();
        assert!(search(&System::mp(), &s, &b).is_derivable());
        assert_eq!(
            search(&System::mp_minus(), &s, &b),
            SearchOutcome::Underivable { definitive: true }
        );
    }

    #[test]
    fn contraction_search_reports_caps() {
        let s = seq("P, ~P, Q");
        let small = SearchBounds {
            max_width: 4,
            ..SearchBounds::for_goal(&s)
        };
        assert_eq!(search(&System::pp(), &s, &small), SearchOutcome::Exhausted);
        // gs1p proves it with weakening even though contraction is present
        assert!(search(&System::gs1p(), &s, &small).is_derivable());
    }

    #[test]
    fn splits_enumerated() {
        let fs = seq("P, P, Q").canonical();
        let groups = group(&fs);
        let mut two = 0;
        for_each_split(&groups, false, &mut |g, _, _| {
            assert!(g.is_empty());
            two += 1;
        });
        // (0..=2) copies of P times (0..=1) copies of Q on the left
        assert_eq!(two, 6);
        let mut three = 0;
        for_each_split(&groups, true, &mut |_, _, _| three += 1);
        // compositions of 2 into 3 parts (6) times of 1 into 3 parts (3)
        assert_eq!(three, 18);
    }
}
