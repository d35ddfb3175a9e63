//! Loads the reference type tree and asks subsumption questions of it.

use ontologik::fixtures;

pub fn run() {
    let ont = fixtures::reference_ontology();
    println!("root: {} ({} types)", ont.root(), ont.len());
    println!("ancestors of raven: {}", ont.ancestors("raven").unwrap().join(" < "));

    for (a, b) in [
        ("physical", "car"),
        ("car", "physical"),
        ("omelet", "car"),
        ("beer", "beer"),
    ] {
        println!("compare({a}, {b}) = {:?}", ont.compare(a, b).unwrap());
    }
    for (a, b) in [("beer", "car"), ("raven", "person"), ("omelet", "idea")] {
        println!("lub({a}, {b}) = {}", ont.least_upper_bound(a, b).unwrap());
    }

    let custom = "type thing\ntype rock isa thing\ntype pebble isa rock\n";
    let small = ontologik::Ontology::load(custom).unwrap();
    assert!(small.subsumes("thing", "pebble").unwrap());
    println!("custom tree:\n{small}");

    let err = ontologik::Ontology::load("type a\ntype b isa a\ntype b isa a\n").unwrap_err();
    println!("rejected: {err}");
}

#[allow(dead_code)]
fn main() {
    run();
}
