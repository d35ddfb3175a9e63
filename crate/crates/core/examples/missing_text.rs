//! Uncovers the implicit relation in "The loud omelet wants another beer".

use ontologik::fixtures;
use ontologik::nlparser::parse_sentence;
use ontologik::unifier::{analyze, missing_text_report};

pub fn run() {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();

    for sentence in [
        "The loud omelet wants another beer",
        "The articulate person wants a beer",
        "The red beer wants a car",
    ] {
        println!("> {sentence}");
        let lf = parse_sentence(sentence, &lex, &ont).unwrap();
        println!("  untyped: {lf}");
        match analyze(&lf, &ont, &lex) {
            Ok(analyzed) => {
                println!("  typed:   {}", analyzed.form);
                for line in analyzed.trace.lines() {
                    println!("    {line}");
                }
                println!("  {}", missing_text_report(&analyzed));
            }
            Err(e) => println!("  rejected: {e}"),
        }
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
