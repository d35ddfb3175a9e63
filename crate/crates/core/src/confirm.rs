//! Instance confirmation of restricted universal hypotheses.
//!
//! A hypothesis `(A x :: raven)(black(x))` is only about ravens. An
//! observed raven that is black confirms it, a non-black raven
//! disconfirms it, and anything that is not a raven says nothing.

use std::fmt;

use thiserror::Error;

use crate::lexicon::Lexicon;
use crate::logform::{canonicalize, parse_lf, CanonError, CanonicalForm, LfParseError, LogicalForm, QuantKind, Term};
use crate::ontology::{Ontology, OntologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfirmError {
    #[error("unsupported hypothesis shape `{0}`: expected (A x :: T)(p(x))")]
    UnsupportedShape(String),
    #[error("malformed observation `{0}`: expected `<type>: <pred>[=true|false][, ...]`")]
    MalformedObservation(String),
    #[error("unknown predicate `{0}` in observation")]
    UnknownPredicate(String),
    #[error("predicate `{0}` appears more than once in observation")]
    RepeatedPredicate(String),
    #[error(transparent)]
    Ontology(#[from] OntologyError),
    #[error("{side}: {source}")]
    Parse {
        side: &'static str,
        #[source]
        source: LfParseError,
    },
    #[error("{side}: {source}")]
    Canon {
        side: &'static str,
        #[source]
        source: CanonError,
    },
}

/// A partial description of one observed object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation {
    pub object_type: String,
    pub literals: Vec<(String, bool)>,
}

impl Observation {
    /// Parses `ball: red, black=false`. A bare predicate means `=true`.
    pub fn parse(text: &str, ont: &Ontology, lex: &Lexicon) -> Result<Self, ConfirmError> {
        let malformed = || ConfirmError::MalformedObservation(text.to_string());
        let (ty, rest) = text.split_once(':').ok_or_else(malformed)?;
        let object_type = ty.trim().to_string();
        if !ont.contains(&object_type) {
            return Err(OntologyError::UnknownType(object_type).into());
        }
        let mut literals: Vec<(String, bool)> = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (pred, polarity) = match item.split_once('=') {
                None => (item, true),
                Some((p, "true")) => (p.trim(), true),
                Some((p, "false")) => (p.trim(), false),
                Some(_) => return Err(malformed()),
            };
            if lex.signature(pred).is_none() {
                return Err(ConfirmError::UnknownPredicate(pred.to_string()));
            }
            if literals.iter().any(|(p, _)| p == pred) {
                return Err(ConfirmError::RepeatedPredicate(pred.to_string()));
            }
            literals.push((pred.to_string(), polarity));
        }
        Ok(Observation { object_type, literals })
    }

    pub fn polarity(&self, predicate: &str) -> Option<bool> {
        self.literals.iter().find(|(p, _)| p == predicate).map(|(_, v)| *v)
    }
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.object_type)?;
        for (i, (p, v)) in self.literals.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{p}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConfirmationVerdict {
    Confirms,
    Disconfirms,
    Neutral,
}

impl fmt::Display for ConfirmationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfirmationVerdict::Confirms => "Confirms",
            ConfirmationVerdict::Disconfirms => "Disconfirms",
            ConfirmationVerdict::Neutral => "Neutral",
        })
    }
}

/// Splits `(A x :: T)(p(x))` into (`T`, `p`).
fn universal_shape(hypothesis: &CanonicalForm) -> Result<(&str, &str), ConfirmError> {
    let unsupported = || ConfirmError::UnsupportedShape(hypothesis.to_string());
    match hypothesis.form() {
        LogicalForm::Quant {
            kind: QuantKind::Forall,
            var,
            restriction: Some(restriction),
            body,
        } => match body.as_ref() {
            LogicalForm::Atom { predicate, args } if args.as_slice() == [Term::Var(var.clone())] => {
                Ok((restriction, predicate))
            }
            _ => Err(unsupported()),
        },
        _ => Err(unsupported()),
    }
}

pub fn evaluate(
    hypothesis: &CanonicalForm,
    obs: &Observation,
    ont: &Ontology,
) -> Result<ConfirmationVerdict, ConfirmError> {
    let (restriction, predicate) = universal_shape(hypothesis)?;
    if !ont.subsumes(restriction, &obs.object_type)? {
        return Ok(ConfirmationVerdict::Neutral);
    }
    Ok(match obs.polarity(predicate) {
        Some(true) => ConfirmationVerdict::Confirms,
        Some(false) => ConfirmationVerdict::Disconfirms,
        None => ConfirmationVerdict::Neutral,
    })
}

/// Both hypotheses in canonical form and whether they coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    pub first: CanonicalForm,
    pub second: CanonicalForm,
}

/// Canonicalizes two parsed hypotheses and compares them.
pub fn equivalence_of(
    h1: &LogicalForm,
    h2: &LogicalForm,
    ont: &Ontology,
    lex: &Lexicon,
) -> Result<Equivalence, ConfirmError> {
    let first = canonicalize(h1, ont, lex).map_err(|source| ConfirmError::Canon { side: "h1", source })?;
    let second = canonicalize(h2, ont, lex).map_err(|source| ConfirmError::Canon { side: "h2", source })?;
    Ok(Equivalence {
        equivalent: first.alpha_equal(&second),
        first,
        second,
    })
}

/// [`equivalence_of`] on logical-form source text.
pub fn equivalence_check(h1: &str, h2: &str, ont: &Ontology, lex: &Lexicon) -> Result<Equivalence, ConfirmError> {
    let f1 = parse_lf(h1).map_err(|source| ConfirmError::Parse { side: "h1", source })?;
    let f2 = parse_lf(h2).map_err(|source| ConfirmError::Parse { side: "h2", source })?;
    equivalence_of(&f1, &f2, ont, lex)
}
