//! A typed logical-form engine over a commonsense type ontology.
//!
//! Types (`person`, `omelet`, `raven`) live in an [`Ontology`] tree;
//! predicates (`loud`, `want`, `black`) live in a [`Lexicon`] with typed
//! argument slots. On top of these the crate offers:
//!
//! - [`unifier`]: type unification with cast-up and metonymic coercion,
//!   and analysis of logical forms that surfaces implicit content
//!   ("the loud omelet" as "some loud person eating the omelet");
//! - [`aor`]: adjective-ordering checks that permit generalizing and
//!   refuse specializing;
//! - [`confirm`]: restricted-quantifier hypotheses and an instance-based
//!   confirmation evaluator;
//! - [`nlparser`]: a controlled-English front end;
//! - [`cli`]: the `ontologik` command line.

pub mod aor;
pub mod cli;
pub mod confirm;
pub mod fixtures;
pub mod lexicon;
pub mod logform;
pub mod nlparser;
pub mod ontology;
pub mod unifier;

pub use lexicon::{Lexicon, LexiconError, NameDecl, PredicateSignature, SalientRelation};
pub use logform::{
    alpha_equivalent, canonicalize, parse_lf, CanonError, CanonicalForm, LfParseError, LogicalForm, QuantKind, Term,
};
pub use ontology::{Ontology, OntologyError, SubsumptionVerdict};
