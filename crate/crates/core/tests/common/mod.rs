//! Random generators shared by the integration tests.

#![allow(dead_code)]

use minseq::{Axiom, Derivation, Formula, RuleId, Sequent, System, Var};
use rand::seq::IndexedRandom;
use rand::Rng;

pub const VARS: [&str; 3] = ["P", "Q", "R"];

pub fn random_literal(rng: &mut impl Rng, vars: &[&str]) -> Formula {
    let v = vars.choose(rng).expect("non-empty");
    Formula::lit(Var::new(v), rng.random_bool(0.5))
}

/// A random formula with at most `max_connectives` connectives.
pub fn random_formula(rng: &mut impl Rng, max_connectives: usize, vars: &[&str]) -> Formula {
    let n = rng.random_range(0..=max_connectives);
    sized_formula(rng, n, vars)
}

pub fn sized_formula(rng: &mut impl Rng, n: usize, vars: &[&str]) -> Formula {
    if n == 0 {
        return random_literal(rng, vars);
    }
    let left = rng.random_range(0..n);
    let a = sized_formula(rng, left, vars);
    let b = sized_formula(rng, n - 1 - left, vars);
    if rng.random_bool(0.5) {
        Formula::and(a, b)
    } else {
        Formula::or(a, b)
    }
}

pub fn random_sequent(rng: &mut impl Rng, max_len: usize, max_connectives: usize) -> Sequent {
    let len = rng.random_range(1..=max_len);
    Sequent::new(
        (0..len)
            .map(|_| random_formula(rng, max_connectives, &VARS))
            .collect(),
    )
    .expect("non-empty")
}

fn shuffled(rng: &mut impl Rng, mut v: Vec<Formula>) -> Sequent {
    use rand::seq::SliceRandom;
    v.shuffle(rng);
    Sequent::new(v).expect("non-empty")
}

fn remove(v: &[Formula], i: usize) -> Vec<Formula> {
    let mut out = v.to_vec();
    out.remove(i);
    out
}

/// Builds a derivation in `sys` forwards from axioms, applying `steps`
/// randomly chosen rules where they apply. Every node records its conclusion.
pub fn forward_derivation(rng: &mut impl Rng, sys: &System, steps: usize) -> Derivation {
    if steps == 0 {
        let lit = random_literal(rng, &VARS);
        let mut fs = vec![lit.clone(), lit.negate()];
        if sys.axiom == Axiom::WithContext {
            for _ in 0..rng.random_range(0..=2) {
                fs.push(random_formula(rng, 2, &VARS));
            }
        }
        return Derivation::axiom(shuffled(rng, fs));
    }
    let rules: Vec<RuleId> = RuleId::ALL
        .into_iter()
        .filter(|r| *r != RuleId::Ax && sys.allows(*r))
        .collect();
    for _ in 0..16 {
        let rule = *rules.choose(rng).expect("rule");
        if let Some(d) = apply(rng, sys, rule, steps) {
            return d;
        }
    }
    forward_derivation(rng, sys, 0)
}

fn apply(rng: &mut impl Rng, sys: &System, rule: RuleId, steps: usize) -> Option<Derivation> {
    let sub = |rng: &mut _| forward_derivation(rng, sys, steps - 1);
    match rule {
        RuleId::Par => {
            let d = sub(rng);
            let fs = d.conclusion.formulas().to_vec();
            if fs.len() < 2 {
                return None;
            }
            let i = rng.random_range(0..fs.len());
            let mut j = rng.random_range(0..fs.len() - 1);
            if j >= i {
                j += 1;
            }
            let disj = Formula::or(fs[i].clone(), fs[j].clone());
            let mut rest: Vec<Formula> = fs
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, f)| f.clone())
                .collect();
            rest.push(disj);
            Some(Derivation::new(rule, shuffled(rng, rest), vec![d]))
        }
        RuleId::Plus1 | RuleId::Plus2 => {
            let d = sub(rng);
            let fs = d.conclusion.formulas().to_vec();
            let i = rng.random_range(0..fs.len());
            let other = random_formula(rng, 2, &VARS);
            let disj = if rule == RuleId::Plus1 {
                Formula::or(fs[i].clone(), other)
            } else {
                Formula::or(other, fs[i].clone())
            };
            let mut rest = remove(&fs, i);
            rest.push(disj);
            Some(Derivation::new(rule, shuffled(rng, rest), vec![d]))
        }
        RuleId::Weaken => {
            let d = sub(rng);
            let mut fs = d.conclusion.formulas().to_vec();
            fs.push(random_formula(rng, 2, &VARS));
            Some(Derivation::new(rule, shuffled(rng, fs), vec![d]))
        }
        RuleId::Contract => {
            let d = sub(rng);
            let fs = d.conclusion.formulas().to_vec();
            let dup = (0..fs.len()).find(|&i| fs[i + 1..].contains(&fs[i]))?;
            Some(Derivation::new(rule, shuffled(rng, remove(&fs, dup)), vec![d]))
        }
        RuleId::Tensor | RuleId::Wedge => {
            let d1 = sub(rng);
            let d2 = sub(rng);
            let (f1, f2) = (d1.conclusion.formulas(), d2.conclusion.formulas());
            let i = rng.random_range(0..f1.len());
            let j = rng.random_range(0..f2.len());
            let mut rest = remove(f1, i);
            rest.extend(remove(f2, j));
            rest.push(Formula::and(f1[i].clone(), f2[j].clone()));
            Some(Derivation::new(rule, shuffled(rng, rest), vec![d1, d2]))
        }
        RuleId::With => {
            // Both premises share the context when they are the same derivation.
            let d = sub(rng);
            let fs = d.conclusion.formulas().to_vec();
            let i = rng.random_range(0..fs.len());
            let mut rest = remove(&fs, i);
            rest.push(Formula::and(fs[i].clone(), fs[i].clone()));
            Some(Derivation::new(rule, shuffled(rng, rest), vec![d.clone(), d]))
        }
        RuleId::Ax => None,
    }
}
