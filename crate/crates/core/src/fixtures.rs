//! The reference ontology and lexicon, compiled into the crate.

use crate::lexicon::Lexicon;
use crate::ontology::Ontology;

pub const REFERENCE_ONTOLOGY: &str = include_str!("../fixtures/reference.ont");
pub const REFERENCE_LEXICON: &str = include_str!("../fixtures/reference.lex");

pub fn reference_ontology() -> Ontology {
    Ontology::load(REFERENCE_ONTOLOGY).expect("shipped ontology is valid")
}

pub fn reference_lexicon() -> Lexicon {
    Lexicon::load(REFERENCE_LEXICON, &reference_ontology()).expect("shipped lexicon is valid")
}
