mod common;

use common::reference_form;
use ontologik::{alpha_equivalent, canonicalize, fixtures, parse_lf, LogicalForm};
use proptest::prelude::*;

fn has_implication(lf: &LogicalForm) -> bool {
    match lf {
        LogicalForm::Atom { .. } => false,
        LogicalForm::Implies(..) => true,
        LogicalForm::Not(x) | LogicalForm::Quant { body: x, .. } => has_implication(x),
        LogicalForm::And(cs) => cs.iter().any(has_implication),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pretty_then_parse_is_identity(lf in reference_form()) {
        let printed = lf.to_string();
        let reparsed = parse_lf(&printed).unwrap();
        prop_assert_eq!(&reparsed, &lf, "{}", printed);
        prop_assert!(alpha_equivalent(&reparsed, &lf));
    }

    #[test]
    fn canonicalize_is_idempotent(lf in reference_form()) {
        let ont = fixtures::reference_ontology();
        let lex = fixtures::reference_lexicon();
        if let Ok(once) = canonicalize(&lf, &ont, &lex) {
            let twice = canonicalize(once.form(), &ont, &lex).unwrap();
            prop_assert_eq!(&twice, &once);
            prop_assert!(!has_implication(once.form()));
            let types = ont.types().collect::<Vec<_>>();
            prop_assert!(once.form().predicates().iter().all(|p| !types.contains(p)));
        }
    }
}

#[test]
fn renamed_forms_are_alpha_equivalent() {
    let a = parse_lf("(A x :: raven)(E y)(want(x, y))").unwrap();
    let b = parse_lf("(A r :: raven)(E w)(want(r, w))").unwrap();
    let c = parse_lf("(A r :: raven)(E w)(want(w, r))").unwrap();
    assert!(alpha_equivalent(&a, &b));
    assert!(!alpha_equivalent(&a, &c));
}
