//! Both raven hypotheses restrict to ravens, so a red ball confirms neither.

use ontologik::confirm::{equivalence_check, evaluate, Observation};
use ontologik::fixtures;

pub fn run() {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();

    let eq = equivalence_check(
        "(A x)(raven(x) -> black(x))",
        "(A y)((! black(y)) -> (! raven(y)))",
        &ont,
        &lex,
    )
    .unwrap();
    println!("H1 = {}\nH2 = {}\nequivalent: {}", eq.first, eq.second, eq.equivalent);

    for text in [
        "raven: black",
        "raven: black=false",
        "ball: red",
        "shoe: black=false",
        "raven: red",
    ] {
        let obs = Observation::parse(text, &ont, &lex).unwrap();
        let v1 = evaluate(&eq.first, &obs, &ont).unwrap();
        let v2 = evaluate(&eq.second, &obs, &ont).unwrap();
        println!("  {obs} => H1 {v1}, H2 {v2}");
        assert_eq!(v1, v2);
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
