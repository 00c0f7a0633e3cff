use minseq::semantics::{evaluate, Assignment};
use minseq::{
    check_derivation, is_minimal, is_valid, minimize, parse_formula, parse_sequent, prove_minimal,
    search, Formula, SearchBounds, Sequent, System, Var,
};
use proptest::prelude::*;

fn literal() -> impl Strategy<Value = Formula> {
    (prop::sample::select(vec!["P", "Q", "R"]), any::<bool>())
        .prop_map(|(v, positive)| Formula::lit(Var::new(v), positive))
}

fn formula() -> impl Strategy<Value = Formula> {
    sized(4, 24)
}

fn sized(depth: u32, nodes: u32) -> impl Strategy<Value = Formula> {
    literal().prop_recursive(depth, nodes, 2, |inner| {
        (inner.clone(), inner, any::<bool>()).prop_map(|(a, b, and)| {
            if and {
                Formula::and(a, b)
            } else {
                Formula::or(a, b)
            }
        })
    })
}

fn sequent() -> impl Strategy<Value = Sequent> {
    prop::collection::vec(formula(), 1..4).prop_map(|v| Sequent::new(v).unwrap())
}

fn assignments(vars: &[&str]) -> Vec<Assignment> {
    (0..1u32 << vars.len())
        .map(|bits| {
            vars.iter()
                .enumerate()
                .fold(Assignment::new(), |a, (i, v)| a.with(v, bits & (1 << i) != 0))
        })
        .collect()
}

/// Validity by evaluating every row of the truth table.
fn brute_valid(s: &Sequent) -> bool {
    assignments(&["P", "Q", "R"])
        .iter()
        .all(|a| s.iter().any(|f| evaluate(f, a).unwrap()))
}

fn sub(s: &Sequent, mask: u32) -> Option<Sequent> {
    let fs: Vec<Formula> = (0..s.len())
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| s.formulas()[i].clone())
        .collect();
    Sequent::new(fs).ok()
}

/// Minimality from the definition: valid, and no proper subsequent valid.
fn brute_minimal(s: &Sequent) -> bool {
    let full = (1u32 << s.len()) - 1;
    brute_valid(s) && (1..full).all(|m| !brute_valid(&sub(s, m).unwrap()))
}

proptest! {
    #[test]
    fn render_parse_roundtrip(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn sequent_roundtrip(s in sequent()) {
        prop_assert_eq!(parse_sequent(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn negation_is_an_involution(f in formula()) {
        prop_assert_eq!(f.negate().negate(), f);
    }

    #[test]
    fn negation_flips_truth(f in formula()) {
        for a in assignments(&["P", "Q", "R"]) {
            prop_assert_eq!(evaluate(&f.negate(), &a).unwrap(), !evaluate(&f, &a).unwrap());
        }
    }

    #[test]
    fn validity_matches_truth_tables(s in sequent()) {
        prop_assert_eq!(is_valid(&s).unwrap(), brute_valid(&s));
    }

    #[test]
    fn minimality_matches_definition(s in sequent()) {
        prop_assert_eq!(is_minimal(&s).unwrap(), brute_minimal(&s));
    }

    #[test]
    fn validity_is_monotone(s in sequent(), extra in formula()) {
        let mut fs = s.formulas().to_vec();
        fs.push(extra);
        let bigger = Sequent::new(fs).unwrap();
        prop_assert!(!is_valid(&s).unwrap() || is_valid(&bigger).unwrap());
    }

    #[test]
    fn minimize_gives_minimal_subsequent(s in sequent()) {
        prop_assume!(is_valid(&s).unwrap());
        let m = minimize(&s).unwrap();
        prop_assert!(is_minimal(&m).unwrap());
        let mut rest = s.formulas().to_vec();
        for f in m.iter() {
            let i = rest.iter().position(|g| g == f);
            prop_assert!(i.is_some());
            rest.remove(i.unwrap());
        }
    }

    #[test]
    fn minimal_sequents_have_checked_proofs(s in sequent()) {
        let mut fs = s.into_formulas();
        fs.extend(parse_sequent("P, ~P").unwrap().into_formulas());
        let s = minimize(&Sequent::new(fs).unwrap()).unwrap();
        let d = prove_minimal(&s).unwrap();
        prop_assert!(check_derivation(&System::mp(), &d).ok());
        prop_assert_eq!(d.conclusion, s);
    }

    #[test]
    fn search_is_sound(fs in prop::collection::vec(sized(2, 6), 1..3)) {
        let s = Sequent::new(fs).unwrap();
        for (_, sys) in System::presets() {
            let b = SearchBounds {
                max_width: s.len() + 2,
                memo_limit: 1 << 14,
                ..SearchBounds::for_goal(&s)
            };
            if let Some(d) = search(&sys, &s, &b).derivation() {
                prop_assert!(check_derivation(&sys, d).ok());
                prop_assert!(is_valid(&d.conclusion).unwrap());
            }
        }
    }
}
