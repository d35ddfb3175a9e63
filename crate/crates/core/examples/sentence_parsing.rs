//! The four controlled-English patterns and their untyped logical forms.

use ontologik::fixtures;
use ontologik::nlparser::{parse_sentence, recognize};

pub fn run() {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();

    let sentences = [
        "Julie is an articulate person.",
        "Jon is loud",
        "The loud omelet wants another beer",
        "All ravens are black",
        "All non-black things are non-ravens",
        "All people are articulate",
        "All mice are black",
        "Julie sings",
    ];
    for s in sentences {
        match recognize(s, &lex, &ont) {
            Ok(pattern) => println!("{s}\n  {pattern:?}\n  {}", parse_sentence(s, &lex, &ont).unwrap()),
            Err(e) => println!("{s}\n  error: {e}"),
        }
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
