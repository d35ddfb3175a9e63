//! "Julie is an articulate person" and "Julie is articulate" mean the same.

use ontologik::nlparser::parse_sentence;
use ontologik::unifier::analyze;
use ontologik::{alpha_equivalent, fixtures, parse_lf};

pub fn run() {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();

    let expected = parse_lf("(E! j :: person)(articulate(j))").unwrap();
    for sentence in ["Julie is an articulate person", "Julie is articulate"] {
        let lf = parse_sentence(sentence, &lex, &ont).unwrap();
        let typed = analyze(&lf, &ont, &lex).unwrap().form;
        println!("{sentence:32} {lf:40} => {typed}");
        assert!(alpha_equivalent(&typed, &expected));
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
