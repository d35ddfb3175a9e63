//! Adjective orderings whose expectations generalize outward are accepted.

use ontologik::aor::{check_order, preferred_orders};
use ontologik::fixtures;

pub fn run() {
    let ont = fixtures::reference_ontology();
    let lex = fixtures::reference_lexicon();

    for adjectives in [&["beautiful", "red"][..], &["red", "beautiful"], &["loud"]] {
        let noun = if adjectives == ["loud"] { "omelet" } else { "car" };
        println!(
            "{} {noun}: {:?}",
            adjectives.join(" "),
            check_order(&ont, &lex, adjectives, noun).unwrap()
        );
    }

    println!("orderings of {{beautiful, red, black}} car:");
    for (order, verdict) in preferred_orders(&ont, &lex, &["beautiful", "red", "black"], "car").unwrap() {
        let mark = if verdict.is_accepted() { "ok" } else { "# " };
        println!("  {mark} {} car", order.join(" "));
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
