//! Adjective-ordering restrictions.
//!
//! Adjectives are applied from the noun outwards. Each one may generalize
//! the running type (cast up) but never specialize it: in "beautiful red
//! car" the chain is `car → physical → entity`, while "red beautiful car"
//! would need `entity → physical`, which is refused.

use itertools::Itertools;
use thiserror::Error;

use crate::lexicon::{Lexicon, LexiconError};
use crate::ontology::{Ontology, OntologyError, SubsumptionVerdict};

/// Upper bound on the adjective set given to [`preferred_orders`].
pub const MAX_ENUMERATED_ADJECTIVES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AorError {
    #[error("unknown adjective `{0}`")]
    UnknownAdjective(String),
    #[error("`{0}` is not a unary predicate")]
    NotUnary(String),
    #[error("unknown noun type `{0}`")]
    UnknownNoun(String),
    #[error("{0} adjectives exceed the enumeration bound of {MAX_ENUMERATED_ADJECTIVES}")]
    TooManyAdjectives(usize),
    #[error(transparent)]
    Ontology(#[from] OntologyError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
}

/// A coercion used to get past an incomparable adjective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AorCoercion {
    pub at_index: usize,
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AorVerdict {
    /// `running_types[0]` is the noun; entry `k` is the type after the
    /// `k`-th adjective counting from the noun.
    Accepted {
        running_types: Vec<String>,
        coercions: Vec<AorCoercion>,
    },
    /// The adjective at `at_index` (outermost = 0) expects a strictly more
    /// specific type than the running one.
    Violation {
        at_index: usize,
        expected: String,
        running: String,
    },
    /// The adjective at `at_index` expects a type unrelated to the running
    /// one and no salient relation bridges them.
    TypeFailure { at_index: usize },
}

impl AorVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, AorVerdict::Accepted { .. })
    }
}

fn unary_expectation<'a>(lex: &'a Lexicon, adjective: &str) -> Result<&'a str, AorError> {
    let sig = lex
        .signature(adjective)
        .ok_or_else(|| AorError::UnknownAdjective(adjective.to_string()))?;
    match sig.arg_types.as_slice() {
        [ty] => Ok(ty),
        _ => Err(AorError::NotUnary(adjective.to_string())),
    }
}

/// Checks one ordering. `adjectives` are given as written, outermost first.
pub fn check_order(ont: &Ontology, lex: &Lexicon, adjectives: &[&str], noun: &str) -> Result<AorVerdict, AorError> {
    if !ont.contains(noun) {
        return Err(AorError::UnknownNoun(noun.to_string()));
    }
    let expectations = adjectives
        .iter()
        .map(|a| unary_expectation(lex, a))
        .collect::<Result<Vec<_>, _>>()?;

    let mut running = noun;
    let mut running_types = vec![noun.to_string()];
    let mut coercions = Vec::new();
    for (at_index, expected) in expectations.iter().enumerate().rev() {
        match ont.compare(expected, running)? {
            SubsumptionVerdict::Equal | SubsumptionVerdict::FirstSubsumesSecond => {}
            SubsumptionVerdict::SecondSubsumesFirst => {
                return Ok(AorVerdict::Violation {
                    at_index,
                    expected: expected.to_string(),
                    running: running.to_string(),
                })
            }
            SubsumptionVerdict::Incomparable => match lex.coercion_candidates(ont, expected, running)?.first() {
                Some(rel) => coercions.push(AorCoercion {
                    at_index,
                    relation: rel.name.clone(),
                }),
                None => return Ok(AorVerdict::TypeFailure { at_index }),
            },
        }
        running = expected;
        running_types.push(running.to_string());
    }
    Ok(AorVerdict::Accepted {
        running_types,
        coercions,
    })
}

/// Every ordering of `adjectives` with its verdict: accepted orderings
/// first, lexicographic order within each group.
pub fn preferred_orders(
    ont: &Ontology,
    lex: &Lexicon,
    adjectives: &[&str],
    noun: &str,
) -> Result<Vec<(Vec<String>, AorVerdict)>, AorError> {
    let mut set: Vec<&str> = adjectives.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() > MAX_ENUMERATED_ADJECTIVES {
        return Err(AorError::TooManyAdjectives(set.len()));
    }
    let mut out = Vec::new();
    for perm in set.iter().copied().permutations(set.len()) {
        let verdict = check_order(ont, lex, &perm, noun)?;
        out.push((perm.into_iter().map(str::to_string).collect::<Vec<_>>(), verdict));
    }
    // stable: permutations already come out in lexicographic order
    out.sort_by_key(|(_, v)| !v.is_accepted());
    Ok(out)
}
