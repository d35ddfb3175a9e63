//! The `•` operator: specificity when comparable, coercion when a salient
//! relation bridges the types, failure otherwise.

use ontologik::fixtures;
use ontologik::unifier::{fold_expectations, unify_types};

pub fn run() {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();

    for (t1, t2) in [
        ("beer", "entity"),
        ("animal", "person"),
        ("omelet", "person"),
        ("person", "omelet"),
        ("car", "person"),
    ] {
        println!("({t1} • {t2}) = {}", unify_types(&ont, &lex, t1, t2).unwrap());
    }

    // loud(o) expects person, want(o, _) expects animal, o was declared an omelet
    let expectations = ["animal".to_string(), "person".to_string()];
    let (outcome, trace) = fold_expectations(&ont, &lex, "omelet", &expectations).unwrap();
    println!("omelet • (animal • person): {outcome}");
    for step in &trace.steps {
        println!("  {step}");
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
